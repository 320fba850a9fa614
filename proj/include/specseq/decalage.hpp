#pragma once

#include <string>
#include <vector>

#include "specseq/pages.hpp"

namespace specseq {

// Dec(F)^s M_n = {x in F^{s-n} M_n : dx in F^{s-n+1} M_{n-1}}.
FilteredComplex deligne_decalage(const FilteredComplex& F);
FilteredComplex decalage_iterate(const FilteredComplex& F, int k);

// G^w Dec(F)^s M_n = {x in F^{max(w,s-n)} M_n : dx in F^{max(w,s-n+1)} M_{n-1}}
// as spans inside M_n.
Span secondary_step(const FilteredComplex& F, int s, int w, int n);
// The same filtration on the complex Dec(F)^s, presented on its own basis.
FilteredComplex secondary_filtration(const FilteredComplex& F, int s);
// The subcomplex Dec(F)^s M presented on its canonical basis, with the
// inclusion into M in every degree.
struct Subcomplex {
  ChainComplex complex;
  std::map<int, Matrix> inclusion;  // M_n x rank
};
Subcomplex decalage_subcomplex(const FilteredComplex& F, int s);

struct TruncationCheck {
  bool ok = true;
  std::vector<std::string> problems;
};
// H_n(gr^w_G Dec(F)^s) against H_n(gr^w_F) for n >= s-w and 0 below.
TruncationCheck truncation_graded_check(const FilteredComplex& F, int s, int w);

// E^1(Dec F)_{-t,s+2t} -> E^2(F)_{s,t} induced by Dec(F)^t M_{s+t} in F^{-s} M_{s+t}.
struct ComparisonBlock {
  Bidegree f_pos;    // (s,t) on E^2(F)
  Bidegree dec_pos;  // (-t, s+2t) on E^1(Dec F)
  Matrix map;        // E^2 generators x E^1(Dec) generators
};
struct ComparisonReport {
  std::vector<ComparisonBlock> blocks;
  std::vector<std::string> problems;  // ill-defined, non-iso or non-commuting blocks
  bool ok() const { return problems.empty(); }
};
ComparisonReport comparison_map_e1_to_e2(const FilteredComplex& F);
ComparisonReport comparison_map_e1_to_e2(const FilteredComplex& F, const Page& E1dec, const Page& E2);

// Filtered chain map f : (C, F) -> (C', F'), f_n : M_n -> M'_n.
struct FilteredMap {
  const FilteredComplex* source = nullptr;
  const FilteredComplex* target = nullptr;
  std::map<int, Matrix> components;
  Matrix at(int n) const;
};
bool is_filtered_map(const FilteredMap& f);
// Induced map on a page at one position (same bidegree on both sides).
Matrix induced_page_map(const Page& P, const Page& Q, const FilteredMap& f, Bidegree x);
// Phi' E^1(Dec f) == E^2(f) Phi at every position.
std::vector<std::string> comparison_naturality(const FilteredMap& f);

// Standard morphisms used to sample naturality.
struct SubfiltrationInclusion {
  FilteredComplex sub;  // F^k M with the restricted filtration
  std::map<int, Matrix> inclusion;
};
SubfiltrationInclusion subfiltration_inclusion(const FilteredComplex& F, int k);
// F'^s = F^{s-1}; the identity is filtered F -> F'.
FilteredComplex shifted_filtration(const FilteredComplex& F, int shift = 1);

}  // namespace specseq
