#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "specseq/ahss.hpp"
#include "specseq/indexing.hpp"
#include "specseq/multiplicative.hpp"

namespace specseq {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Malformed or schema-violating input; `path` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what) : Error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// *.fc.json: a filtered complex with an optional product block.
struct FilteredComplexFile {
  FilteredComplex filtration;
  std::optional<FilteredDGA> dga;  // its base equals `filtration`
};

Json to_json(const FilteredComplex& F);
Json to_json(const FilteredComplexFile& f);
// Throws SchemaError on malformed data and Error (with the violation list) on
// data that parses but does not validate.
FilteredComplexFile filtered_complex_file_from_json(const Json& j);

Json to_json(const CWComplex& X);
CWComplex cw_complex_from_json(const Json& j);

// *.page.json
struct PageReportTerm {
  Bidegree pos;  // in the report's convention
  std::size_t rank = 0;
  std::vector<std::string> invariant_factors;
  Bidegree target;
  std::vector<std::vector<std::string>> differential;  // target gens x source gens; empty when zero
  bool operator==(const PageReportTerm&) const = default;
};
struct PageReport {
  int r = 1;  // page number in the report's convention
  bool infinite = false;
  std::string ring;
  Convention convention;
  std::vector<PageReportTerm> terms;  // nonzero terms only
  bool operator==(const PageReport&) const = default;
};
PageReport page_report(const Page& P, const Convention& c = Convention::internal());
Json to_json(const PageReport& rep);
PageReport page_report_from_json(const Json& j);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Charts, positions in the convention's coordinates.
std::string chart_ascii(const Page& P, const Convention& c = Convention::internal());
std::string chart_svg(const Page& P, const Convention& c = Convention::internal());

}  // namespace specseq
