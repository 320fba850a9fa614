#include "specseq/properties.hpp"

#include <algorithm>

#include "specseq/indexing.hpp"

namespace specseq {

const std::vector<std::string>& mutation_names() {
  static const std::vector<std::string> names{"classical", "lurie", "decalage", "einfty", "product", "whitehead"};
  return names;
}

void perturb_page(Page& P) {
  for (auto& [x, term] : P.terms) {
    const std::size_t ambient = term.numerator().ambient();
    if (ambient == 0) continue;
    const Span zero(P.ring, ambient);
    const FgModule& m = term.module();
    const bool whole = m.invariant_factors.empty() && m.free_rank == ambient;
    term.quotient = whole ? Subquotient(zero, zero) : Subquotient(Span::full(P.ring, ambient), zero);
    P.differentials.erase(x);
    P.differentials.erase(P.source(x));
    return;
  }
}

namespace {

void append(std::vector<std::string>& out, const std::string& prefix, const std::vector<PageMismatch>& ms) {
  for (const auto& m : ms) out.push_back(prefix + m.to_string());
}

}  // namespace

PageBundle make_bundle(const FilteredComplex& F, int rmax, const std::string& mutate) {
  PageBundle B;
  B.F = F;
  B.rmax = rmax;
  B.D = deligne_decalage(F);
  if (mutate == "decalage") B.D = shifted_filtration(B.D, 1);
  B.f_pages = classical_pages(F, std::max(rmax, F.stabilization_index()) + 1);
  B.d_pages = classical_pages(B.D, rmax);
  if (mutate == "classical")
    for (auto& P : B.f_pages) perturb_page(P);
  return B;
}

std::vector<std::string> check_decalage_theorem(const PageBundle& B) {
  std::vector<std::string> out;
  const Transform2 A1 = page_shift_transform(1).first;
  for (int r = 1; r <= B.rmax; ++r)
    append(out, "E^" + std::to_string(r + 1) + "(F) vs E^" + std::to_string(r) + "(Dec F): ",
           compare_pages(B.f_pages[r], B.d_pages[r - 1], A1));
  return out;
}

std::vector<std::string> check_iterated_decalage(const PageBundle& B, int kmax) {
  std::vector<std::string> out;
  FilteredComplex D = B.D;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) D = deligne_decalage(D);
    const Page E1 = k == 1 ? B.d_pages[0] : er_classical(D, 1);
    if (static_cast<std::size_t>(k) >= B.f_pages.size()) break;
    append(out, "E^" + std::to_string(k + 1) + "(F) vs E^1(Dec^" + std::to_string(k) + " F): ",
           compare_pages(B.f_pages[k], E1, page_shift_transform(k).first));
  }
  return out;
}

std::vector<std::string> check_oracles(const PageBundle& B, const std::string& mutate) {
  std::vector<std::string> out;
  const int rstar = B.F.stabilization_index();
  for (int r = 1; r <= rstar; ++r) {
    const Page& P = B.f_pages[r - 1];
    Page L = er_lurie(B.F, r);
    if (mutate == "lurie") perturb_page(L);
    append(out, "Lurie vs classical E^" + std::to_string(r) + ": ", compare_pages(L, P, Transform2::identity()));
    for (Bidegree x : dd_failures(P)) out.push_back("d^r d^r != 0 at " + x.to_string() + " on E^" + std::to_string(r));
    for (const auto& p : check_page_turning(P, B.f_pages[r], true).problems)
      out.push_back("H(E^" + std::to_string(r) + ") vs E^" + std::to_string(r + 1) + ": " + p);
  }
  return out;
}

std::vector<std::string> check_graded_identity(const PageBundle& B) {
  std::vector<std::string> out;
  const FilteredComplex& F = B.F;
  if (F.complex().empty() || F.graded_empty()) return out;
  const auto dbps = B.D.breakpoints();
  if (!dbps.empty())
    for (int s = dbps.front() - 1; s <= dbps.back(); ++s)
      for (int w = F.graded_lo() - 1; w <= F.graded_hi() + 1; ++w)
        for (const auto& p : truncation_graded_check(F, s, w).problems) out.push_back("truncation: " + p);
  const ComparisonReport rep = comparison_map_e1_to_e2(F, B.d_pages[0], B.f_pages[1]);
  for (const auto& p : rep.problems) out.push_back("comparison map: " + p);
  return out;
}

std::vector<std::string> check_convergence(const FilteredComplex& F, const std::string& mutate) {
  Page Einf = einfty_page(F);
  if (mutate == "einfty") perturb_page(Einf);
  return convergence_mismatches(F, Einf);
}

std::vector<std::string> check_dga(const FilteredDGA& A0, int rmax, const std::string& mutate) {
  std::vector<std::string> out;
  FilteredDGA A = A0;
  if (mutate == "product") {
    auto it = A.products.find({1, 0});
    if (it != A.products.end()) it->second = Matrix(A.base.ring(), it->second.rows(), it->second.cols());
  }
  for (const auto& v : validate_dga(A)) out.push_back("dga: " + to_string(v));
  if (!out.empty()) return out;
  const auto pages = classical_pages(A.base, rmax);
  for (const auto& P : pages)
    for (const auto& p : check_leibniz(P, A).problems) out.push_back(p);
  for (const auto& v : validate_dga(A.with_base(deligne_decalage(A.base))))
    out.push_back("Dec: " + to_string(v));
  return out;
}

std::vector<std::string> check_maunder(const CWComplex& X, const ChainComplex& M, int rmax,
                                       const std::string& mutate) {
  FilteredComplex G = whitehead_filtration_coeff(X, M);
  if (mutate == "whitehead") G = shifted_filtration(G, 1);
  return maunder_compare(skeletal_filtration(X, M), G, rmax).problems;
}

}  // namespace specseq
