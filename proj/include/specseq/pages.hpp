#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "specseq/filtered.hpp"

namespace specseq {

// Homological Serre indexing: weight p = -s, total degree n = s + t.
struct Bidegree {
  int s = 0, t = 0;
  auto operator<=>(const Bidegree&) const = default;
  std::string to_string() const { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }
};

// Integer 2x2 matrix acting on bidegrees.
struct Transform2 {
  int a = 1, b = 0, c = 0, d = 1;  // (s,t) -> (a s + b t, c s + d t)
  Bidegree operator()(Bidegree x) const { return {a * x.s + b * x.t, c * x.s + d * x.t}; }
  Transform2 operator*(const Transform2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  int det() const { return a * d - b * c; }
  bool unimodular() const { return det() == 1 || det() == -1; }
  Transform2 inverse() const;
  Transform2 power(int k) const;
  bool operator==(const Transform2&) const = default;
  std::string to_string() const;
  static Transform2 identity() { return {}; }
};

struct PageTerm {
  Bidegree pos;
  int weight = 0;  // p = -s
  int degree = 0;  // n = s + t
  Subquotient quotient;

  const FgModule& module() const { return quotient.module(); }
  const Span& numerator() const { return quotient.numerator(); }
  const Span& denominator() const { return quotient.denominator(); }
};

struct Page {
  Ring ring;
  int r = 1;
  bool infinite = false;
  std::map<Bidegree, PageTerm> terms;
  // d^r out of a position, as (target generators x source generators); absent means zero.
  std::map<Bidegree, Matrix> differentials;

  Bidegree target(Bidegree x) const { return {x.s - r, x.t + r - 1}; }
  Bidegree source(Bidegree x) const { return {x.s + r, x.t - r + 1}; }
  const PageTerm* term(Bidegree x) const;
  FgModule module_at(Bidegree x) const;
  std::vector<Scalar> moduli_at(Bidegree x) const;
  Matrix differential_at(Bidegree x) const;  // zero matrix when absent
  std::vector<Bidegree> nonzero_positions() const;
};

// Term (s,t) = H_{s+t}(gr^{-s}), d^1 from the chain differential.
Page e1_page(const FilteredComplex& F);
// Z^r_p / (d Z^{r-1}_{p-r+1} + Z^{r-1}_{p+1}).
Page er_classical(const FilteredComplex& F, int r);
// Pages 1..rmax from one shared cycle cache.
std::vector<Page> classical_pages(const FilteredComplex& F, int rmax);
// im(H(F^p/F^{p+r}) -> H(F^{p-r+1}/F^{p+1})), d^r through the epi-mono factorization.
Page er_lurie(const FilteredComplex& F, int r);
Page einfty_page(const FilteredComplex& F);

// Homology of (E^r, d^r) at a position.
FgModule page_homology(const Page& P, Bidegree x);
FgModule differential_kernel(const Page& P, Bidegree x);
FgModule differential_image(const Page& P, Bidegree x);  // image of d^r out of x
// Positions where d^r d^r != 0.
std::vector<Bidegree> dd_failures(const Page& P);

struct PageTurningReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};
// H(E^r) vs E^{r+1}: iso classes always, and literal span equality
// (N' + I = K, N' cap I = D') for the classical construction.
PageTurningReport check_page_turning(const Page& Er, const Page& Er1, bool literal);

struct PageMismatch {
  Bidegree p_pos, q_pos;
  std::string what;  // "term", "ker", "im"
  std::string p_value, q_value;
  std::string to_string() const;
};
std::vector<PageMismatch> compare_pages(const Page& P, const Page& Q, const Transform2& T);

struct BoundednessClass {
  bool support_empty = true;
  int s_min = 0, s_max = 0, t_min = 0, t_max = 0;
  bool upper_half_plane = false, lower_half_plane = false;
  bool left_half_plane = false, right_half_plane = false;
  bool quadrant[4] = {false, false, false, false};  // I..IV
  bool column_bounded = false, row_bounded = false;
  bool complete = false, exhaustive = false;
};
BoundednessClass boundedness_class(const FilteredComplex& F);

// gr^s F^*H_n vs E^infty_{-s, s+n} over the support; returns mismatches.
std::vector<std::string> convergence_mismatches(const FilteredComplex& F, const Page& Einf);

}  // namespace specseq
