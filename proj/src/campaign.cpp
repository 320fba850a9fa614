#include "specseq/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <thread>

#include "specseq/random.hpp"

namespace specseq {

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names{"decalage", "convergence", "leibniz", "maunder", "oracles"};
  return names;
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SPECSEQ_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Outcome {
  Json instance;
  std::vector<std::string> problems;
};

Outcome run_instance(const CampaignOptions& o, const Ring& R, std::size_t ring_index, std::size_t i) {
  auto rng = instance_rng(o.seed, i, ring_index);
  Outcome out;
  if (o.theorem == "leibniz") {
    PolynomialDgaParams params;
    params.variables = std::uniform_int_distribution<int>(1, 2)(rng);
    params.max_degree = std::uniform_int_distribution<int>(1, 3)(rng);
    params.exterior = std::uniform_int_distribution<int>(1, 2)(rng);
    const FilteredDGA A = random_polynomial_dga(R, rng, params);
    out.instance = to_json(FilteredComplexFile{A.base, A});
    out.problems = check_dga(A, std::min(o.rmax, 3), o.mutate);
    return out;
  }
  if (o.theorem == "maunder") {
    const auto spaces = CWComplex::standard();
    const CWComplex& X = spaces[i % spaces.size()];
    const std::size_t round = i / spaces.size();
    const ChainComplex M = round == 0   ? zero_differential_complex(R, {0})
                           : round == 1 ? zero_differential_complex(R, {0, -2})
                                        : random_chain_complex(R, rng);
    out.instance = Json{{"cw", to_json(X)}, {"coefficients", to_json(inserted_filtration(M))}};
    out.problems = check_maunder(X, M, o.rmax, o.mutate);
    return out;
  }
  const FilteredComplex F = random_filtered_complex(R, rng);
  out.instance = to_json(F);
  if (o.theorem == "convergence") {
    out.problems = check_convergence(F, o.mutate);
    return out;
  }
  const PageBundle B = make_bundle(F, o.rmax, o.mutate);
  if (o.theorem == "oracles") {
    out.problems = check_oracles(B, o.mutate);
    return out;
  }
  // decalage
  out.problems = check_decalage_theorem(B);
  for (auto& p : check_iterated_decalage(B, std::min(o.rmax, 3))) out.problems.push_back(std::move(p));
  for (auto& p : check_graded_identity(B)) out.problems.push_back(std::move(p));
  return out;
}

}  // namespace

CampaignResult run_campaign(const CampaignOptions& opts) {
  const auto& names = theorem_names();
  if (std::find(names.begin(), names.end(), opts.theorem) == names.end())
    throw Error("unknown theorem '" + opts.theorem + "'");
  if (!opts.mutate.empty()) {
    const auto& ms = mutation_names();
    if (std::find(ms.begin(), ms.end(), opts.mutate) == ms.end()) throw Error("unknown mutation '" + opts.mutate + "'");
  }
  std::vector<Ring> rings = opts.rings;
  if (rings.empty()) rings.push_back(opts.theorem == "leibniz" ? Ring::prime_field(2) : Ring::integers());

  const std::size_t total = rings.size() * opts.count;
  std::vector<std::optional<CampaignFailure>> slots(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      const std::size_t ri = k / opts.count, i = k % opts.count;
      Outcome out;
      try {
        out = run_instance(opts, rings[ri], ri, i);
      } catch (const std::exception& e) {
        out.problems.push_back(std::string("exception: ") + e.what());
      }
      if (!out.problems.empty())
        slots[k] = CampaignFailure{rings[ri].name(), i, std::move(out.instance), std::move(out.problems)};
    }
  };
  const unsigned n = std::min<std::size_t>(thread_count(opts.threads), std::max<std::size_t>(total, 1));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CampaignResult res;
  res.instances = total;
  for (auto& s : slots)
    if (s) res.failures.push_back(std::move(*s));
  return res;
}

Json counterexample_json(const CampaignOptions& opts, const CampaignFailure& f) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "counterexample";
  j["theorem"] = opts.theorem;
  j["seed"] = opts.seed;
  j["ring"] = f.ring;
  j["index"] = f.index;
  j["mutation"] = opts.mutate.empty() ? Json(nullptr) : Json(opts.mutate);
  j["problems"] = f.problems;
  j["instance"] = f.instance;
  return j;
}

}  // namespace specseq
