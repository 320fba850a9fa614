#pragma once

#include <map>
#include <string>
#include <vector>

#include "specseq/decalage.hpp"

namespace specseq {

// Finite CW complex through its cellular chain complex over Z.
struct CWComplex {
  std::string name;
  std::vector<std::size_t> cells;  // cells[k] = number of k-cells
  std::map<int, Matrix> boundary;  // k -> cells[k-1] x cells[k], integer entries

  int dimension() const { return static_cast<int>(cells.size()) - 1; }
  // Cellular chains with entries mapped into the ring.
  ChainComplex chains(const Ring& ring) const;

  static CWComplex point();
  static CWComplex sphere(int n);
  static CWComplex real_projective_plane();
  static CWComplex torus();
  static CWComplex complex_projective_plane();
  static std::vector<CWComplex> standard();
};

// Empty when shapes match and boundary o boundary = 0.
std::vector<std::string> validate(const CWComplex& X);

// Hom(C_*(X), M) with F^s = maps vanishing on C_k for k < s.
FilteredComplex skeletal_filtration(const CWComplex& X, const ChainComplex& M);
// Hom(C_*(X), tau_{>=a} M) inside the same Hom complex.
FilteredComplex whitehead_filtration_coeff(const CWComplex& X, const ChainComplex& M);

// M concentrated in the given degrees with zero differential, rank one each.
ChainComplex zero_differential_complex(const Ring& ring, const std::vector<int>& degrees);

struct MaunderReport {
  std::vector<std::string> problems;
  std::size_t comparisons = 0;  // page comparisons carried out
  bool ok() const { return problems.empty(); }
};
// (a) Dec(skeletal) vs Whitehead pages for 1 <= r <= rmax, plus spanwise
// equality of the two filtrations; (b) E^r(skeletal) vs E^{r-1}(Whitehead)
// under (s,t) -> (-t, s+2t) for 2 <= r <= rmax; (c) both E^infty pages against
// the induced filtration on H_*(Hom) and its total rank.
MaunderReport maunder_compare(const CWComplex& X, const ChainComplex& M, int rmax);
// Same, on explicitly supplied skeletal and Whitehead filtrations.
MaunderReport maunder_compare(const FilteredComplex& skeletal, const FilteredComplex& whitehead, int rmax);

}  // namespace specseq
