#include "specseq/pages.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace specseq {

Transform2 Transform2::inverse() const {
  const int dt = det();
  if (dt != 1 && dt != -1) throw Error("transform " + to_string() + " is not unimodular");
  return {d * dt, -b * dt, -c * dt, a * dt};
}

Transform2 Transform2::power(int k) const {
  Transform2 base = k < 0 ? inverse() : *this, out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

std::string Transform2::to_string() const {
  std::ostringstream os;
  os << "((" << a << "," << b << "),(" << c << "," << d << "))";
  return os.str();
}

const PageTerm* Page::term(Bidegree x) const {
  auto it = terms.find(x);
  return it == terms.end() ? nullptr : &it->second;
}

FgModule Page::module_at(Bidegree x) const {
  const PageTerm* t = term(x);
  return t ? t->module() : FgModule::zero(ring);
}

std::vector<Scalar> Page::moduli_at(Bidegree x) const {
  const PageTerm* t = term(x);
  return t ? t->quotient.moduli() : std::vector<Scalar>{};
}

Matrix Page::differential_at(Bidegree x) const {
  auto it = differentials.find(x);
  if (it != differentials.end()) return it->second;
  return Matrix(ring, moduli_at(target(x)).size(), moduli_at(x).size());
}

std::vector<Bidegree> Page::nonzero_positions() const {
  std::vector<Bidegree> out;
  for (const auto& [x, t] : terms)
    if (!t.module().is_zero()) out.push_back(x);
  return out;
}

namespace {

// {x in F^a_n : dx in F^b_{n-1}} with the weights clamped to the window where
// the filtration actually changes.
class CycleCache {
 public:
  explicit CycleCache(const FilteredComplex& F) : F_(F) {
    lo_ = F.graded_empty() ? 0 : F.graded_lo();
    hi_ = F.graded_empty() ? 0 : F.graded_hi();
  }

  const Span& cycles(int a, int b, int n) {
    a = std::clamp(a, lo_, hi_ + 1);
    b = std::clamp(std::max(a, b), lo_, hi_ + 1);
    auto key = std::make_tuple(a, b, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Span z = F_.step(a, n).preimage(F_.complex().differential(n), F_.step(b, n - 1));
    return cache_.emplace(key, std::move(z)).first->second;
  }

 private:
  const FilteredComplex& F_;
  int lo_, hi_;
  std::map<std::tuple<int, int, int>, Span> cache_;
};

Page classical_from_cache(const FilteredComplex& F, CycleCache& Z, int r) {
  if (r < 1) throw Error("page index must be >= 1");
  const ChainComplex& C = F.complex();
  Page P;
  P.ring = F.ring();
  P.r = r;
  if (C.empty() || F.graded_empty()) return P;
  for (int p = F.graded_lo(); p <= F.graded_hi(); ++p)
    for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
      const Span& num = Z.cycles(p, p + r, n);
      Span den = Z.cycles(p - r + 1, p, n + 1).image(C.differential(n + 1)) + Z.cycles(p + 1, p + r, n);
      PageTerm term;
      term.pos = {-p, n + p};
      term.weight = p;
      term.degree = n;
      term.quotient = Subquotient(num, den);
      P.terms.emplace(term.pos, std::move(term));
    }
  for (const auto& [x, term] : P.terms) {
    const PageTerm* tgt = P.term(P.target(x));
    if (!tgt || term.quotient.generators() == 0 || tgt->quotient.generators() == 0) continue;
    const Matrix& d = C.differential(term.degree);
    Matrix m(P.ring, tgt->quotient.generators(), term.quotient.generators());
    for (std::size_t g = 0; g < term.quotient.generators(); ++g) {
      auto c = tgt->quotient.coordinates(d.apply(term.quotient.lift(g)));
      if (!c) throw Error("d^" + std::to_string(r) + " representative left its target at " + x.to_string());
      for (std::size_t i = 0; i < c->size(); ++i) m(i, g) = (*c)[i];
    }
    P.differentials.emplace(x, std::move(m));
  }
  return P;
}

}  // namespace

Page e1_page(const FilteredComplex& F) { return er_classical(F, 1); }

Page er_classical(const FilteredComplex& F, int r) {
  CycleCache Z(F);
  return classical_from_cache(F, Z, r);
}

std::vector<Page> classical_pages(const FilteredComplex& F, int rmax) {
  CycleCache Z(F);
  std::vector<Page> out;
  for (int r = 1; r <= rmax; ++r) out.push_back(classical_from_cache(F, Z, r));
  return out;
}

Page einfty_page(const FilteredComplex& F) {
  Page P = er_classical(F, F.stabilization_index());
  P.infinite = true;
  return P;
}

Page er_lurie(const FilteredComplex& F, int r) {
  if (r < 1) throw Error("page index must be >= 1");
  const ChainComplex& C = F.complex();
  Page P;
  P.ring = F.ring();
  P.r = r;
  if (C.empty() || F.graded_empty()) return P;

  // H_n(F^a/F^b) = {x in F^a : dx in F^b} / (d F^a_{n+1} + F^b_n)
  auto interval_cycles = [&](int a, int b, int n) {
    return F.step(a, n).preimage(C.differential(n), F.step(b, n - 1));
  };
  auto interval_boundaries = [&](int a, int b, int n) {
    return F.step(a, n + 1).image(C.differential(n + 1)) + F.step(b, n);
  };
  std::map<Bidegree, Span> source_cycles;
  for (int p = F.graded_lo(); p <= F.graded_hi(); ++p)
    for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
      Span src = interval_cycles(p, p + r, n);
      Span tgt_b = interval_boundaries(p - r + 1, p + 1, n);
      PageTerm term;
      term.pos = {-p, n + p};
      term.weight = p;
      term.degree = n;
      term.quotient = Subquotient(src + tgt_b, tgt_b);
      source_cycles.emplace(term.pos, std::move(src));
      P.terms.emplace(term.pos, std::move(term));
    }
  for (const auto& [x, term] : P.terms) {
    const PageTerm* tgt = P.term(P.target(x));
    if (!tgt || term.quotient.generators() == 0 || tgt->quotient.generators() == 0) continue;
    const Span& src = source_cycles.at(x);
    const Span& bd = term.denominator();
    std::vector<Vector> gens = src.basis();
    gens.insert(gens.end(), bd.basis().begin(), bd.basis().end());
    const Matrix& d = C.differential(term.degree);
    Matrix m(P.ring, tgt->quotient.generators(), term.quotient.generators());
    for (std::size_t g = 0; g < term.quotient.generators(); ++g) {
      // epi: split the lift as z + b with z a cycle of F^p/F^{p+r}
      auto coeff = solve_combination(P.ring, src.ambient(), gens, term.quotient.lift(g));
      if (!coeff) throw Error("Lurie lift does not decompose at " + x.to_string());
      Vector z(src.ambient());
      for (std::size_t k = 0; k < src.rank(); ++k)
        for (std::size_t j = 0; j < z.size(); ++j)
          if (sgn((*coeff)[k]) != 0 && sgn(src.basis()[k][j]) != 0)
            P.ring.add_mul(z[j], (*coeff)[k], src.basis()[k][j]);
      // boundary into H(F^{p+r}/F^{p+2r}), then mono into the target interval
      auto c = tgt->quotient.coordinates(d.apply(z));
      if (!c) throw Error("Lurie boundary left its target at " + x.to_string());
      for (std::size_t i = 0; i < c->size(); ++i) m(i, g) = (*c)[i];
    }
    P.differentials.emplace(x, std::move(m));
  }
  return P;
}

FgModule page_homology(const Page& P, Bidegree x) {
  const auto mid = P.moduli_at(x);
  return map_homology(P.differential_at(P.source(x)), P.differential_at(x), mid, P.moduli_at(P.target(x)));
}

FgModule differential_kernel(const Page& P, Bidegree x) {
  return map_kernel(P.differential_at(x), P.moduli_at(x), P.moduli_at(P.target(x)));
}

FgModule differential_image(const Page& P, Bidegree x) {
  return map_image(P.differential_at(x), P.moduli_at(x), P.moduli_at(P.target(x)));
}

std::vector<Bidegree> dd_failures(const Page& P) {
  std::vector<Bidegree> out;
  for (const auto& [x, d1] : P.differentials) {
    auto it = P.differentials.find(P.target(x));
    if (it == P.differentials.end()) continue;
    if (!map_is_zero(it->second * d1, P.moduli_at(P.target(P.target(x))))) out.push_back(x);
  }
  return out;
}

PageTurningReport check_page_turning(const Page& Er, const Page& Er1, bool literal) {
  PageTurningReport rep;
  std::set<Bidegree> positions;
  for (const auto& kv : Er.terms) positions.insert(kv.first);
  for (const auto& kv : Er1.terms) positions.insert(kv.first);
  for (Bidegree x : positions) {
    FgModule h = page_homology(Er, x);
    FgModule next = Er1.module_at(x);
    if (!h.isomorphic(next)) {
      rep.problems.push_back("H(E^" + std::to_string(Er.r) + ") at " + x.to_string() + " is " + h.to_string() +
                             " but E^" + std::to_string(Er1.r) + " is " + next.to_string());
      continue;
    }
    if (!literal) continue;
    const PageTerm* mid = Er.term(x);
    const PageTerm* nxt = Er1.term(x);
    if (!mid || !nxt) continue;
    const Subquotient& q = mid->quotient;
    const Ring& ring = Er.ring;
    Span kc = map_kernel_span(Er.differential_at(x), q.moduli(), Er.moduli_at(Er.target(x)));
    std::vector<Vector> kg, ig;
    for (const auto& v : kc.basis()) kg.push_back(q.lift_of(v));
    Matrix in = Er.differential_at(Er.source(x));
    for (std::size_t j = 0; j < in.cols(); ++j) ig.push_back(q.lift_of(in.column(j)));
    const std::size_t m = q.numerator().ambient();
    Span K = Span::generated_by(ring, m, kg) + q.denominator();
    Span I = Span::generated_by(ring, m, ig) + q.denominator();
    if (nxt->numerator() + I != K || nxt->numerator().intersect(I) != nxt->denominator())
      rep.problems.push_back("E^" + std::to_string(Er1.r) + " spans at " + x.to_string() +
                             " are not the homology spans of E^" + std::to_string(Er.r));
  }
  return rep;
}

std::string PageMismatch::to_string() const {
  return what + " mismatch: P" + p_pos.to_string() + " = " + p_value + " vs Q" + q_pos.to_string() + " = " + q_value;
}

std::vector<PageMismatch> compare_pages(const Page& P, const Page& Q, const Transform2& T) {
  const Transform2 Tinv = T.inverse();
  std::set<Bidegree> positions;
  for (const auto& kv : P.terms) positions.insert(kv.first);
  for (const auto& kv : Q.terms) positions.insert(Tinv(kv.first));
  std::vector<PageMismatch> out;
  for (Bidegree x : positions) {
    const Bidegree y = T(x);
    auto check = [&](const char* what, const FgModule& a, const FgModule& b) {
      if (!a.isomorphic(b)) out.push_back({x, y, what, a.to_string(), b.to_string()});
    };
    check("term", P.module_at(x), Q.module_at(y));
    check("ker", differential_kernel(P, x), differential_kernel(Q, y));
    check("im", differential_image(P, x), differential_image(Q, y));
  }
  return out;
}

BoundednessClass boundedness_class(const FilteredComplex& F) {
  BoundednessClass b;
  Page E1 = e1_page(F);
  bool first = true;
  for (Bidegree x : E1.nonzero_positions()) {
    if (first) {
      b.s_min = b.s_max = x.s;
      b.t_min = b.t_max = x.t;
      first = false;
    }
    b.s_min = std::min(b.s_min, x.s);
    b.s_max = std::max(b.s_max, x.s);
    b.t_min = std::min(b.t_min, x.t);
    b.t_max = std::max(b.t_max, x.t);
  }
  b.support_empty = first;
  // The E^1 support is finite, so every "vanishes beyond some N" condition holds.
  b.upper_half_plane = b.lower_half_plane = b.left_half_plane = b.right_half_plane = true;
  b.quadrant[0] = b.upper_half_plane && b.right_half_plane;
  b.quadrant[1] = b.upper_half_plane && b.left_half_plane;
  b.quadrant[2] = b.lower_half_plane && b.left_half_plane;
  b.quadrant[3] = b.lower_half_plane && b.right_half_plane;
  b.column_bounded = b.left_half_plane && b.right_half_plane;
  b.row_bounded = b.upper_half_plane && b.lower_half_plane;
  b.complete = true;
  for (int n = F.min_degree(); !F.complex().empty() && n <= F.max_degree(); ++n)
    if (!F.limit_step(n).is_zero()) b.complete = false;
  b.exhaustive = true;
  return b;
}

std::vector<std::string> convergence_mismatches(const FilteredComplex& F, const Page& Einf) {
  std::vector<std::string> out;
  const ChainComplex& C = F.complex();
  if (C.empty()) return out;
  const int lo = F.graded_empty() ? 0 : F.graded_lo();
  const int hi = F.graded_empty() ? -1 : F.graded_hi();
  for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
    FilteredFgModule H = induced_homology_filtration(F, n);
    for (int s = lo - 1; s <= hi + 1; ++s) {
      FgModule gr = H.graded(s);
      FgModule e = Einf.module_at({-s, s + n});
      if (!gr.isomorphic(e))
        out.push_back("n=" + std::to_string(n) + " s=" + std::to_string(s) + ": gr^s H_n = " + gr.to_string() +
                      " but E^inf" + Bidegree{-s, s + n}.to_string() + " = " + e.to_string());
    }
  }
  return out;
}

}  // namespace specseq
