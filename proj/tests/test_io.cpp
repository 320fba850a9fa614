#include <doctest.h>

#include <filesystem>
#include <functional>

#include "oracles.hpp"
#include "specseq/io.hpp"

using namespace specseq;
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kGoodComplexes{"toy_d2",          "toy_d2_f2",       "padic_3_3",  "koszul_3",
                                              "whitehead_times2", "constant_times2", "stupid_iso", "empty",
                                              "coeff_0_m2"};

std::string fixture(const std::string& name) { return (fs::path(SPECSEQ_FIXTURE_DIR) / name).string(); }

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("filtered complex fixtures round-trip") {
  for (const auto& name : kGoodComplexes) {
    CAPTURE(name);
    const Json j = read_json_file(fixture(name + ".fc.json"));
    const FilteredComplexFile f = filtered_complex_file_from_json(j);
    const Json again = to_json(f);
    CHECK(again == j);
    const FilteredComplexFile g = filtered_complex_file_from_json(again);
    CHECK(g.filtration.same_filtration(f.filtration));
    CHECK(g.filtration.breakpoints() == f.filtration.breakpoints());
    CHECK(g.dga.has_value() == f.dga.has_value());
    if (f.dga) {
      CHECK(g.dga->products == f.dga->products);
      CHECK(g.dga->unit == f.dga->unit);
    }
    // text level: dump, parse, dump
    CHECK(to_json(filtered_complex_file_from_json(parse_json_text(again.dump(2)))).dump() == again.dump());
  }
}

TEST_CASE("fixtures hold what their names say") {
  CHECK(filtered_complex_file_from_json(read_json_file(fixture("toy_d2.fc.json"))).filtration.same_filtration(toy_d2()));
  CHECK(filtered_complex_file_from_json(read_json_file(fixture("padic_3_3.fc.json")))
            .filtration.same_filtration(truncated_padic(3, 3)));
  const auto k = filtered_complex_file_from_json(read_json_file(fixture("koszul_3.fc.json")));
  REQUIRE(k.dga);
  CHECK(validate_dga(*k.dga).empty());
  CHECK(filtered_complex_file_from_json(read_json_file(fixture("empty.fc.json"))).filtration.complex().empty());
}

TEST_CASE("CW fixtures round-trip") {
  for (const std::string name : {"rp2", "torus"}) {
    const Json j = read_json_file(fixture(name + ".cw.json"));
    const CWComplex X = cw_complex_from_json(j);
    CHECK(validate(X).empty());
    CHECK(to_json(X) == j);
  }
  const CWComplex rp2 = cw_complex_from_json(read_json_file(fixture("rp2.cw.json")));
  CHECK(rp2.cells == CWComplex::real_projective_plane().cells);
  CHECK(rp2.boundary == CWComplex::real_projective_plane().boundary);
}

TEST_CASE("bad inputs are rejected with a located message") {
  auto load = [](const std::string& name) {
    return [name] { filtered_complex_file_from_json(read_json_file(fixture(name))); };
  };
  CHECK(error_of(load("bad_dd.fc.json")).find("d_1 . d_2 != 0") != std::string::npos);
  CHECK(error_of(load("bad_filtration.fc.json")).find("d-compatibility") != std::string::npos);
  CHECK(error_of(load("truncated.fc.json")).find("line 7") != std::string::npos);
  CHECK_THROWS_AS(load("bad_schema.fc.json")(), SchemaError);
  try {
    load("bad_schema.fc.json")();
  } catch (const SchemaError& e) {
    CHECK(e.path() == "/ranks/1");
  }
  CHECK_THROWS_AS(read_json_file(fixture("no_such_file.fc.json")), Error);

  Json j = read_json_file(fixture("toy_d2.fc.json"));
  j["format_version"] = 99;
  CHECK_THROWS_AS(filtered_complex_file_from_json(j), SchemaError);
  j = read_json_file(fixture("toy_d2.fc.json"));
  j["ring"] = "R";
  CHECK_THROWS_AS(filtered_complex_file_from_json(j), Error);
  j = read_json_file(fixture("toy_d2.fc.json"));
  j.erase("steps");
  CHECK_THROWS_AS(filtered_complex_file_from_json(j), SchemaError);
}

TEST_CASE("page reports") {
  const FilteredComplex F = toy_d2();
  for (const auto& c : Convention::all()) {
    const PageReport rep = page_report(er_classical(F, 2), c);
    CHECK(page_report_from_json(to_json(rep)) == rep);
    CHECK(rep.terms.size() == 2);
  }
  const PageReport rep = page_report(er_classical(F, 2));
  REQUIRE(rep.terms.size() == 2);
  const PageReportTerm& src = rep.terms[1].pos == Bidegree{0, 1} ? rep.terms[1] : rep.terms[0];
  CHECK(src.pos == Bidegree{0, 1});
  CHECK(src.target == Bidegree{-2, 2});
  CHECK(src.differential == std::vector<std::vector<std::string>>{{"1"}});
  const PageReport inf = page_report(einfty_page(truncated_padic(3, 3)));
  CHECK(inf.infinite);
  CHECK(page_report_from_json(to_json(inf)) == inf);
  CHECK(inf.terms.size() == 4);
}

TEST_CASE("charts") {
  SUBCASE("SVG is well-formed for every fixture, page and convention") {
    for (const auto& name : kGoodComplexes) {
      const FilteredComplex F = filtered_complex_file_from_json(read_json_file(fixture(name + ".fc.json"))).filtration;
      std::vector<Page> pages{er_classical(F, 1), er_classical(F, 2), er_classical(F, 3), einfty_page(F)};
      for (const auto& P : pages)
        for (const auto& c : Convention::all()) {
          std::string why;
          const std::string svg = chart_svg(P, c);
          CAPTURE(name);
          CAPTURE(c.name());
          CHECK_MESSAGE(oracle::xml_well_formed(svg, &why), why);
          CHECK(svg.find("<svg") != std::string::npos);
        }
    }
  }
  SUBCASE("one arrow on toy-d2 E^2") {
    const Page E2 = er_classical(toy_d2(), 2);
    const std::string svg = chart_svg(E2);
    std::size_t arrows = 0;
    for (std::size_t at = svg.find("marker-end"); at != std::string::npos; at = svg.find("marker-end", at + 1)) ++arrows;
    CHECK(arrows == 1);
    CHECK(chart_ascii(E2).find("d: (0,1) -> (-2,2)") != std::string::npos);
    // Adams indexing: the arrow has bidegree (-1, 2)
    CHECK(chart_ascii(E2, Convention::parse("adams-hom-dec")).find("d: (1,0) -> (0,2)") != std::string::npos);
  }
  SUBCASE("torsion labels") {
    const std::string text = chart_ascii(er_classical(truncated_padic(3, 3), 1));
    CHECK(text.find("Z/3") != std::string::npos);
  }
  SUBCASE("the checker itself rejects broken XML") {
    CHECK_FALSE(oracle::xml_well_formed("<svg><g></svg>"));
    CHECK_FALSE(oracle::xml_well_formed("<svg a=1/>"));
    CHECK_FALSE(oracle::xml_well_formed("<svg>&nbsp;</svg>"));
    CHECK(oracle::xml_well_formed("<?xml version=\"1.0\"?>\n<svg a=\"1\"><g/>x &amp; y</svg>\n"));
  }
}
