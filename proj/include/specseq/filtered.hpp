#pragma once

#include <map>
#include <string>
#include <vector>

#include "specseq/complexes.hpp"

namespace specseq {

enum class TailHigh { Zero, Constant };

struct Violation {
  std::string kind;  // "nesting", "d-compatibility", "saturation", "d-squared", "shape"
  int weight = 0;
  int degree = 0;
  std::string message;
};

// Decreasing filtration F^s M of a bounded chain complex by submodules.
//   s <  b_0               : F^s = M
//   b_i <= s < b_{i+1}     : F^s = step(b_i)
//   s == b_k               : step(b_k)
//   s >  b_k               : 0 (tail zero) or step(b_k) (tail constant)
class FilteredComplex {
 public:
  using Steps = std::map<int, std::vector<Span>>;  // weight -> span per degree (min..max)

  FilteredComplex() = default;
  FilteredComplex(ChainComplex complex, Steps steps, TailHigh tail, bool require_saturated = true);

  const ChainComplex& complex() const { return complex_; }
  const Ring& ring() const { return complex_.ring(); }
  int min_degree() const { return complex_.min_degree(); }
  int max_degree() const { return complex_.max_degree(); }
  std::vector<int> breakpoints() const;
  const Steps& steps() const { return steps_; }
  TailHigh tail_high() const { return tail_; }
  bool require_saturated() const { return require_saturated_; }

  const Span& step(int s, int n) const;
  const Span& full(int n) const;
  const Span& zero(int n) const;
  // F^s for s beyond every breakpoint
  const Span& limit_step(int n) const;

  // Smallest and largest weight with gr^s != 0; lo > hi when every graded vanishes.
  int graded_lo() const { return lo_; }
  int graded_hi() const { return hi_; }
  bool graded_empty() const { return lo_ > hi_; }
  // Page index from which E^r is constant.
  int stabilization_index() const { return graded_empty() ? 1 : hi_ - lo_ + 1; }

  // Semantic equality: same complex and same F^s for every s.
  bool same_filtration(const FilteredComplex& o) const;

 private:
  void compute_window();

  ChainComplex complex_;
  Steps steps_;
  TailHigh tail_ = TailHigh::Zero;
  bool require_saturated_ = true;
  std::vector<Span> full_, zero_;
  Span empty_;
  int lo_ = 1, hi_ = 0;
};

std::vector<Violation> validate(const FilteredComplex& F);
std::string to_string(const Violation& v);

// gr^s as a complex of free modules; throws if a graded term has torsion.
ChainComplex graded_piece(const FilteredComplex& F, int s);
// F^s M_n / F^{s+1} M_n as a module; defined for non-saturated flags too.
FgModule graded_piece_module(const FilteredComplex& F, int s, int n);

// F^i / F^j with the residual filtration; j == INT_MAX stands for infinity.
FilteredComplex interval_graded(const FilteredComplex& F, int i, int j);

// Generators.  Cohomological degree c sits in homological degree -c.
FilteredComplex stupid_filtration(const ChainComplex& C);
FilteredComplex whitehead_filtration(const ChainComplex& C);
// ins^a: F^s = M for s <= a and 0 above.
FilteredComplex inserted_filtration(const ChainComplex& C, int a = 0);
FilteredComplex constant_filtration(const ChainComplex& C);
// p^s Z in degree 0 for 0 <= s <= N, zero above; not saturated.
FilteredComplex truncated_padic(std::uint32_t p, int N);
// M_1 = <a>, M_0 = <b>, da = b; F^0 = M, F^1 = F^2 = <b>, F^3 = 0.
FilteredComplex toy_d2(Ring ring = Ring::integers());

// F^s H_n(M) = im(H_n(F^s M) -> H_n(M)).
struct FilteredFgModule {
  Span cycles, boundaries;
  std::map<int, Span> numerators;  // (Z cap F^s) + B for s in [lo, hi + 1]
  int lo = 0, hi = -1;

  FgModule total() const { return Subquotient(cycles, boundaries).module(); }
  Span numerator(int s) const;
  FgModule step(int s) const { return Subquotient(numerator(s), boundaries).module(); }
  FgModule graded(int s) const { return Subquotient(numerator(s), numerator(s + 1)).module(); }
};
FilteredFgModule induced_homology_filtration(const FilteredComplex& F, int n);

}  // namespace specseq
