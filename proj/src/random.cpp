#include "specseq/random.hpp"

#include <algorithm>

namespace specseq {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Matrix random_unimodular(const Ring& R, std::mt19937_64& rng, std::size_t n) {
  Matrix g = Matrix::identity(R, n);
  if (n < 2) return g;
  const int ops = static_cast<int>(2 * n);
  for (int k = 0; k < ops; ++k) {
    const std::size_t i = uniform(rng, 0, static_cast<int>(n) - 1);
    std::size_t j = uniform(rng, 0, static_cast<int>(n) - 2);
    if (j >= i) ++j;
    if (uniform(rng, 0, 3) == 0) {
      for (std::size_t c = 0; c < n; ++c) std::swap(g(i, c), g(j, c));
    } else {
      const Scalar m = R.from_int(uniform(rng, -2, 2));
      for (std::size_t c = 0; c < n; ++c) R.add_mul(g(i, c), m, g(j, c));
    }
  }
  return g;
}

}  // namespace

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

FilteredComplex random_filtered_complex(const Ring& R, std::mt19937_64& rng, const RandomComplexParams& params) {
  for (;;) {
    // mostly two or more degrees and weights, otherwise there is nothing to differentiate
    const int span = uniform(rng, std::min(2, params.max_degree_span), params.max_degree_span);
    const int nmin = uniform(rng, -2, 2);
    const int wspan = uniform(rng, std::min(2, params.max_weight_span), params.max_weight_span);
    const int w0 = uniform(rng, -2, 2);

    std::vector<std::size_t> ranks(span);
    std::size_t total = 0;
    for (auto& r : ranks) total += (r = uniform(rng, 0, 5) == 0 ? 0 : uniform(rng, 1, params.max_rank));
    if (total == 0) continue;

    std::vector<std::vector<int>> weights(span);
    for (int k = 0; k < span; ++k)
      for (std::size_t i = 0; i < ranks[k]; ++i) weights[k].push_back(uniform(rng, w0, w0 + wspan - 1));
    auto coord = [&](int k, int s) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < ranks[k]; ++i)
        if (weights[k][i] >= s) idx.push_back(i);
      return Span::coordinate(R, ranks[k], idx);
    };

    // d e_i is a small combination of cycles of weight >= weight(e_i)
    std::vector<Matrix> d(span);
    for (int k = 0; k < span; ++k) {
      const std::size_t below = k > 0 ? ranks[k - 1] : 0;
      d[k] = Matrix(R, below, ranks[k]);
      if (k == 0) continue;
      const Matrix& prev = d[k - 1];
      for (std::size_t i = 0; i < ranks[k]; ++i) {
        if (uniform(rng, 0, 3) == 0) continue;
        // jumping ahead in weight is what produces long differentials
        const Span cyc = coord(k - 1, weights[k][i] + uniform(rng, 0, 3)).preimage(prev, Span(R, prev.rows()));
        for (const auto& b : cyc.basis()) {
          const Scalar c = R.from_int(uniform(rng, -params.max_entry, params.max_entry));
          for (std::size_t r = 0; r < below; ++r) R.add_mul(d[k](r, i), c, b[r]);
        }
      }
    }

    std::vector<Matrix> g, ginv;
    for (int k = 0; k < span; ++k) {
      g.push_back(random_unimodular(R, rng, ranks[k]));
      ginv.push_back(inverse(g.back()));
    }
    std::map<int, Matrix> diffs;
    for (int k = 1; k < span; ++k) diffs.emplace(nmin + k, g[k - 1] * d[k] * ginv[k]);

    FilteredComplex::Steps steps;
    for (int s = w0 + 1; s <= w0 + wspan; ++s) {
      std::vector<Span> spans;
      for (int k = 0; k < span; ++k) spans.push_back(coord(k, s).image(g[k]));
      steps.emplace(s, std::move(spans));
    }

    // Trim zero ranks at the ends so step vectors line up with the complex.
    int lo = 0, hi = span - 1;
    while (ranks[lo] == 0) ++lo;
    while (ranks[hi] == 0) --hi;
    std::vector<std::size_t> kept(ranks.begin() + lo, ranks.begin() + hi + 1);
    std::map<int, Matrix> kept_d;
    for (int k = lo + 1; k <= hi; ++k) kept_d.emplace(nmin + k, diffs.at(nmin + k));
    for (auto& [s, spans] : steps) spans = std::vector<Span>(spans.begin() + lo, spans.begin() + hi + 1);

    FilteredComplex F(ChainComplex(R, nmin + lo, kept, kept_d), std::move(steps), TailHigh::Zero);
    if (validate(F).empty()) return F;
  }
}

ChainComplex random_chain_complex(const Ring& R, std::mt19937_64& rng, int max_degree_span, int max_rank) {
  for (;;) {
    const int span = uniform(rng, 1, max_degree_span);
    const int nmin = uniform(rng, -2, 0);
    std::vector<std::size_t> ranks(span);
    for (auto& r : ranks) r = uniform(rng, 0, max_rank);
    if (ranks.front() == 0 || ranks.back() == 0) continue;
    std::map<int, Matrix> diffs;
    Matrix prev(R, 0, ranks[0]);
    for (int k = 1; k < span; ++k) {
      Matrix dk(R, ranks[k - 1], ranks[k]);
      const Span cyc = Span::full(R, ranks[k - 1]).preimage(prev, Span(R, prev.rows()));
      for (std::size_t i = 0; i < ranks[k]; ++i)
        for (const auto& b : cyc.basis()) {
          const Scalar c = R.from_int(uniform(rng, -2, 2));
          for (std::size_t r = 0; r < ranks[k - 1]; ++r) R.add_mul(dk(r, i), c, b[r]);
        }
      diffs.emplace(nmin + k, dk);
      prev = dk;
    }
    return ChainComplex(R, nmin, ranks, diffs);
  }
}

}  // namespace specseq
