#pragma once

#include <map>
#include <vector>

#include "specseq/linalg.hpp"

namespace specseq {

// Bounded chain complex of finite free modules with homological grading:
// d_n : M_n -> M_{n-1}.  Degrees outside [min_degree, max_degree] are zero.
class ChainComplex {
 public:
  ChainComplex() = default;
  // ranks[i] is the rank in degree min_degree + i; differentials maps n to
  // the (rank(n-1) x rank(n)) matrix of d_n, missing entries are zero.
  ChainComplex(Ring ring, int min_degree, std::vector<std::size_t> ranks,
               std::map<int, Matrix> differentials);

  static ChainComplex zero(Ring ring) { return ChainComplex(ring, 0, {}, {}); }

  const Ring& ring() const { return ring_; }
  int min_degree() const { return min_; }
  int max_degree() const { return min_ + static_cast<int>(ranks_.size()) - 1; }
  bool empty() const { return ranks_.empty(); }
  std::size_t rank(int n) const;
  // d_n, of shape rank(n-1) x rank(n) (possibly with a zero dimension)
  const Matrix& differential(int n) const;
  std::size_t total_rank() const;

  Span cycles(int n) const;
  Span boundaries(int n) const;
  FgModule homology(int n) const;

  bool operator==(const ChainComplex& o) const;

 private:
  Ring ring_;
  int min_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> d_;  // d_[i] = d_{min_ + i}
  mutable std::map<std::pair<int, int>, Matrix> zero_cache_;
};

// tau_{>= a}: drops degrees below a and replaces degree a by the cycles,
// presented on their canonical basis.
ChainComplex truncate_geq(const ChainComplex& C, int a);
// C[k]_n = C_{n-k}, with differential (-1)^k d.
ChainComplex shift(const ChainComplex& C, int k);

// Hom(C, M)_n = prod_k Hom(C_k, M_{k+n}),  (D f) = d_M f - (-1)^n f d_C.
// Basis order: k ascending, then basis of C_k, then basis of M_{k+n}.
struct HomComplex {
  ChainComplex complex;
  // For each degree n, the source degree k of each basis element.
  std::map<int, std::vector<int>> source_degree;
  std::map<int, std::vector<int>> target_index;  // basis index in M_{k+n}
};
HomComplex hom_complex(const ChainComplex& C, const ChainComplex& M);

// Chain map f : C -> D, components f_n : C_n -> D_n.
struct ChainMap {
  std::map<int, Matrix> components;
  const Matrix& at(int n) const { return components.at(n); }
};
bool is_chain_map(const ChainComplex& C, const ChainComplex& D, const ChainMap& f);

}  // namespace specseq
