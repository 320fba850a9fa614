// specseq command-line tool.  Exit status: 0 success, 1 property violated,
// 2 invalid input.
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "specseq/campaign.hpp"
#include "specseq/io.hpp"

using namespace specseq;

namespace {

constexpr int kViolation = 1;
constexpr int kInvalid = 2;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FilteredComplexFile load_fc(const std::string& path) {
  try {
    return filtered_complex_file_from_json(read_json_file(path));
  } catch (const Error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

CWComplex load_cw(const std::string& spec) {
  for (const auto& X : CWComplex::standard())
    if (X.name == spec) return X;
  if (spec.size() > 1 && spec[0] == 'S' && std::all_of(spec.begin() + 1, spec.end(), ::isdigit))
    return CWComplex::sphere(std::stoi(spec.substr(1)));
  try {
    return cw_complex_from_json(read_json_file(spec));
  } catch (const Error& e) {
    throw InvalidInput(spec + ": " + e.what());
  }
}

// "0,-2" (rank one in each listed degree, zero differential) or a .fc.json path
ChainComplex load_coefficients(const std::string& spec, const Ring& R) {
  if (!spec.empty() && spec.find_first_not_of("0123456789-, ") == std::string::npos) {
    std::vector<int> degrees;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) degrees.push_back(std::stoi(item));
    return zero_differential_complex(R, degrees);
  }
  return load_fc(spec).filtration.complex();
}

Convention parse_convention(const std::string& name) {
  try {
    return Convention::parse(name);
  } catch (const Error& e) {
    throw InvalidInput(e.what());
  }
}

std::vector<Ring> parse_rings(const std::string& spec) {
  if (spec.empty()) return {};
  if (spec == "all") return {Ring::prime_field(2), Ring::prime_field(97), Ring::rationals(), Ring::integers()};
  std::vector<Ring> out;
  std::stringstream ss(spec);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) out.push_back(Ring::parse(item));
  } catch (const Error& e) {
    throw InvalidInput(e.what());
  }
  return out;
}

void emit_pages(const std::vector<Page>& pages, const Convention& c, const std::string& format,
                const std::string& output_dir) {
  if (format == "json") {
    Json all = Json::array();
    for (const auto& P : pages) all.push_back(to_json(page_report(P, c)));
    std::cout << (pages.size() == 1 ? all[0] : all).dump(2) << "\n";
  } else if (format == "svg") {
    if (pages.size() == 1 && output_dir.empty()) {
      std::cout << chart_svg(pages[0], c);
      return;
    }
    if (output_dir.empty()) throw InvalidInput("svg output of several pages needs --output-dir");
    std::filesystem::create_directories(output_dir);
    for (const auto& P : pages) {
      const std::string name = P.infinite ? "E_inf.svg" : "E" + std::to_string(convention_page(P.r, c)) + ".svg";
      write_text_file((std::filesystem::path(output_dir) / name).string(), chart_svg(P, c));
    }
  } else {
    for (const auto& P : pages) std::cout << chart_ascii(P, c) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral sequences of filtered chain complexes"};
  app.require_subcommand(1);

  std::string input, convention = "serre-hom-dec", format = "ascii", oracle = "classical", output, output_dir;
  int rmax = 3, page = -1, iterate = 1;

  auto* validate_cmd = app.add_subcommand("validate", "check a .fc.json or .cw.json file");
  validate_cmd->add_option("input,--input", input, "file to check")->required();

  auto* pages_cmd = app.add_subcommand("pages", "compute pages of a filtered complex");
  pages_cmd->add_option("--input", input, ".fc.json file")->required();
  pages_cmd->add_option("--rmax", rmax, "last page")->check(CLI::PositiveNumber);
  pages_cmd->add_option("--page", page, "single page (0 for E^infinity)");
  pages_cmd->add_option("--convention", convention, "e.g. serre-hom-dec, e2-coh-inc, adams-hom-dec");
  pages_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg", "json"}));
  pages_cmd->add_option("--oracle", oracle)->check(CLI::IsMember({"classical", "lurie"}));
  pages_cmd->add_option("--output-dir", output_dir, "directory for svg files");

  auto* dec_cmd = app.add_subcommand("decalage", "write the iterated decalage as .fc.json");
  dec_cmd->add_option("--input", input, ".fc.json file")->required();
  dec_cmd->add_option("--iterate", iterate)->check(CLI::NonNegativeNumber);
  dec_cmd->add_option("--output", output, "output file (default stdout)");

  std::string cw, coeff = "0", ring_name;
  auto* ahss_cmd = app.add_subcommand("ahss", "Atiyah-Hirzebruch spectral sequence of Hom(C(X), M)");
  ahss_cmd->add_option("--cw", cw, "point, S<n>, RP2, T2, CP2 or a .cw.json file")->required();
  ahss_cmd->add_option("--coeff", coeff, "degree list such as 0,-2 or a .fc.json file");
  ahss_cmd->add_option("--ring", ring_name, "coefficient ring for degree lists (default Z)");
  ahss_cmd->add_option("--rmax", rmax)->check(CLI::PositiveNumber);
  ahss_cmd->add_option("--convention", convention);
  ahss_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "json"}));

  std::string theorem, mutate, rings, cex_dir = ".";
  std::uint64_t seed = 7;
  std::size_t count = 200;
  unsigned threads = 0;
  int verify_rmax = 4;
  auto* verify_cmd = app.add_subcommand("verify", "randomized property campaign");
  verify_cmd->add_option("--theorem", theorem)->required()->check(CLI::IsMember(theorem_names()));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--count", count);
  verify_cmd->add_option("--ring", rings, "Z, Q, F_p, comma list, or all");
  verify_cmd->add_option("--rmax", verify_rmax)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mutate", mutate, "deliberately corrupt one oracle")->check(CLI::IsMember(mutation_names()));
  verify_cmd->add_option("--threads", threads);
  verify_cmd->add_option("--counterexample-dir", cex_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*validate_cmd) {
      const Json j = read_json_file(input);
      if (j.is_object() && j.value("kind", "") == "cw_complex") {
        const CWComplex X = cw_complex_from_json(j);
        std::cout << "valid CW complex, dimension " << X.dimension() << "\n";
      } else {
        const auto f = filtered_complex_file_from_json(j);
        std::cout << "valid filtered complex over " << f.filtration.ring().name() << ", breakpoints "
                  << Json(f.filtration.breakpoints()).dump() << (f.dga ? ", with products" : "") << "\n";
      }
      return 0;
    }

    if (*pages_cmd) {
      const auto f = load_fc(input);
      const Convention c = parse_convention(convention);
      const FilteredComplex& F = f.filtration;
      auto build = [&](int r) { return oracle == "lurie" ? er_lurie(F, r) : er_classical(F, r); };
      std::vector<Page> pages;
      if (page == 0) {
        pages.push_back(einfty_page(F));
      } else if (page > 0) {
        pages.push_back(build(internal_page(page, c)));
      } else {
        const int first = std::max(1, internal_page(1, c));
        for (int r = first; r <= internal_page(rmax, c); ++r) pages.push_back(build(r));
        pages.push_back(einfty_page(F));
      }
      emit_pages(pages, c, format, output_dir);
      return 0;
    }

    if (*dec_cmd) {
      auto f = load_fc(input);
      FilteredComplexFile out{decalage_iterate(f.filtration, iterate), std::nullopt};
      if (f.dga) out.dga = f.dga->with_base(out.filtration);
      const std::string text = to_json(out).dump(2) + "\n";
      if (output.empty())
        std::cout << text;
      else
        write_text_file(output, text);
      return 0;
    }

    if (*ahss_cmd) {
      const Ring R = ring_name.empty() ? Ring::integers() : Ring::parse(ring_name);
      const CWComplex X = load_cw(cw);
      const ChainComplex M = load_coefficients(coeff, R);
      const Convention c = parse_convention(ahss_cmd->count("--convention") ? convention : "serre-coh-dec");
      const FilteredComplex F = skeletal_filtration(X, M);
      std::vector<Page> pages{er_classical(F, 2), einfty_page(F)};
      emit_pages(pages, c, format, "");
      const MaunderReport rep = maunder_compare(X, M, rmax);
      if (format != "json") {
        std::cout << "maunder comparison: " << rep.comparisons << " page comparisons, "
                  << (rep.ok() ? "clean" : std::to_string(rep.problems.size()) + " problems") << "\n";
        for (const auto& p : rep.problems) std::cout << "  " << p << "\n";
      }
      return rep.ok() ? 0 : kViolation;
    }

    if (*verify_cmd) {
      CampaignOptions o;
      o.theorem = theorem;
      o.seed = seed;
      o.count = count;
      o.rings = parse_rings(rings);
      o.rmax = verify_rmax;
      o.mutate = mutate;
      o.threads = threads;
      const CampaignResult res = run_campaign(o);
      std::cout << "verify " << theorem << ": " << res.instances << " instances, " << res.failures.size()
                << " counterexamples\n";
      if (res.ok()) return 0;
      const CampaignFailure& f = res.failures.front();
      std::filesystem::create_directories(cex_dir);
      const std::string path = (std::filesystem::path(cex_dir) / ("counterexample-" + theorem + "-" +
                                                                   std::to_string(seed) + "-" + f.ring + "-" +
                                                                   std::to_string(f.index) + ".json"))
                                   .string();
      write_text_file(path, counterexample_json(o, f).dump(2) + "\n");
      std::cout << "first counterexample (" << f.ring << " #" << f.index << ") written to " << path << "\n";
      for (std::size_t k = 0; k < std::min<std::size_t>(f.problems.size(), 5); ++k)
        std::cout << "  " << f.problems[k] << "\n";
      return kViolation;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return 0;
}
