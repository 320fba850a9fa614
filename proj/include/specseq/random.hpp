#pragma once

#include <cstdint>
#include <random>

#include "specseq/filtered.hpp"

namespace specseq {

struct RandomComplexParams {
  int max_degree_span = 5;  // number of consecutive degrees
  int max_weight_span = 5;  // number of distinct weights
  int max_rank = 4;
  int max_entry = 3;        // combination coefficients in [-max_entry, max_entry]
};

// Bounded, strict, complete filtered complex: a coordinate filtration with a
// weight-respecting differential, conjugated by a random unimodular change of
// basis in every degree.
FilteredComplex random_filtered_complex(const Ring& ring, std::mt19937_64& rng,
                                        const RandomComplexParams& params = {});

// Bounded chain complex with random differentials (used as AHSS coefficients).
ChainComplex random_chain_complex(const Ring& ring, std::mt19937_64& rng, int max_degree_span = 3,
                                  int max_rank = 2);

// Deterministic generator for instance `index` of a campaign.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0);

}  // namespace specseq
