#pragma once

#include <string>
#include <vector>

#include "specseq/ahss.hpp"
#include "specseq/multiplicative.hpp"

namespace specseq {

// Names accepted by --mutate.  Each one corrupts a single oracle:
//   classical  one term of every classical page of F
//   lurie      one term of every Lurie page
//   decalage   Dec(F) replaced by its shift by one weight
//   einfty     one term of E^infty
//   product    the product M_1 (x) M_0 -> M_1 is zeroed
//   whitehead  the coefficient Whitehead filtration shifted by one weight
const std::vector<std::string>& mutation_names();

// Change the iso class of one term and drop the differentials touching it.
void perturb_page(Page& P);

// Pages shared by the filtered-complex properties of one instance.
struct PageBundle {
  FilteredComplex F, D;
  int rmax = 4;
  std::vector<Page> f_pages;  // E^1..E^{max(rmax, r*) + 1} of F
  std::vector<Page> d_pages;  // E^1..E^rmax of Dec F
};
PageBundle make_bundle(const FilteredComplex& F, int rmax, const std::string& mutate = "");

// E^{r+1}(F) vs E^r(Dec F) under (s,t) -> (-t, s+2t), 1 <= r <= rmax.
std::vector<std::string> check_decalage_theorem(const PageBundle& B);
// E^{k+1}(F) vs E^1(Dec^k F) under A_k, 1 <= k <= kmax.
std::vector<std::string> check_iterated_decalage(const PageBundle& B, int kmax);
// Lurie vs classical for r <= r*, literal page turning and d^r d^r = 0.
std::vector<std::string> check_oracles(const PageBundle& B, const std::string& mutate = "");
// Truncation identity on the whole window and the explicit E^1(Dec) -> E^2 map.
std::vector<std::string> check_graded_identity(const PageBundle& B);
// gr of the induced filtration on H_n against E^infty.
std::vector<std::string> check_convergence(const FilteredComplex& F, const std::string& mutate = "");
// validate_dga, Leibniz on pages 1..rmax and spanwise multiplicativity of Dec.
std::vector<std::string> check_dga(const FilteredDGA& A, int rmax, const std::string& mutate = "");
std::vector<std::string> check_maunder(const CWComplex& X, const ChainComplex& M, int rmax,
                                       const std::string& mutate = "");

}  // namespace specseq
