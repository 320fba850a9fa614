#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specseq/io.hpp"
#include "specseq/properties.hpp"

namespace specseq {

// decalage, convergence, leibniz, maunder, oracles
const std::vector<std::string>& theorem_names();

struct CampaignOptions {
  std::string theorem;
  std::uint64_t seed = 7;
  std::size_t count = 200;
  std::vector<Ring> rings;  // empty: F_2 for leibniz, Z otherwise
  int rmax = 4;
  std::string mutate;
  unsigned threads = 0;  // 0: SPECSEQ_THREADS, else the hardware count
};

struct CampaignFailure {
  std::string ring;
  std::size_t index = 0;
  Json instance;
  std::vector<std::string> problems;
};

struct CampaignResult {
  std::size_t instances = 0;
  std::vector<CampaignFailure> failures;  // ordered by ring, then index
  bool ok() const { return failures.empty(); }
};

CampaignResult run_campaign(const CampaignOptions& opts);
Json counterexample_json(const CampaignOptions& opts, const CampaignFailure& f);

// Worker count: explicit request, else SPECSEQ_THREADS, else the hardware count.
unsigned thread_count(unsigned requested = 0);

}  // namespace specseq
