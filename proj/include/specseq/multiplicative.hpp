#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "specseq/pages.hpp"

namespace specseq {

// Filtered DGA: mu_{m,n} is a rank(m+n) x (rank(m) * rank(n)) matrix on the
// tensor basis e_i (x) e_j -> column i * rank(n) + j.  Missing pairs are zero.
struct FilteredDGA {
  FilteredComplex base;
  std::map<std::pair<int, int>, Matrix> products;
  std::optional<Vector> unit;  // element of M_0
  bool commutative = false;

  Vector multiply(int m, const Vector& x, int n, const Vector& y) const;
  // Same algebra over a different filtration of the same complex.
  FilteredDGA with_base(FilteredComplex F) const;
};

std::vector<Violation> validate_dga(const FilteredDGA& A);

// Product of classes given by coordinates on the generators of P's terms;
// empty when the product position lies outside the page support.
Vector page_product(const Page& P, const FilteredDGA& A, Bidegree x, const Vector& a, Bidegree y,
                    const Vector& b);
// Product of explicit representatives, reduced into the target term.
std::optional<Vector> page_product_of_lifts(const Page& P, const FilteredDGA& A, Bidegree x, const Vector& ax,
                                            Bidegree y, const Vector& by);

struct LeibnizReport {
  std::size_t checked = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};
// d(ab) = d(a) b + (-1)^{s+t} a d(b) on all pairs of generators, graded
// commutativity when declared, and invariance of products under
// representative changes by denominator elements.
LeibnizReport check_leibniz(const Page& P, const FilteredDGA& A, std::size_t max_pairs = 0);

// Z[x]/(x^N) (x) Lambda(e), |x| = 0, |e| = 1, de = x, F^s = <x^k, x^k e : k >= s>.
FilteredDGA koszul_dga(Ring ring, int N);

struct PolynomialDgaParams {
  int variables = 2;      // polynomial generators x_i in degree 0
  int max_degree = 2;     // monomials of total degree <= max_degree survive
  int exterior = 2;       // exterior generators e_j in degree 1
  int max_weight = 2;     // weights of x_i drawn from [0, max_weight]
};
// Truncated polynomial ring (x) exterior algebra with d e_j = f_j random and an
// additive monomial weight filtration.
FilteredDGA random_polynomial_dga(Ring ring, std::mt19937_64& rng, const PolynomialDgaParams& params);

}  // namespace specseq
