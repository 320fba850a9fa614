#include "specseq/decalage.hpp"

#include <set>

namespace specseq {

namespace {

Span dec_step(const FilteredComplex& F, int s, int n) {
  const ChainComplex& C = F.complex();
  return F.step(s - n, n).preimage(C.differential(n), F.step(s - n + 1, n - 1));
}

const Transform2 kDecShift{0, -1, 1, 2};  // (s,t) -> (-t, s+2t)

}  // namespace

FilteredComplex deligne_decalage(const FilteredComplex& F) {
  const ChainComplex& C = F.complex();
  const auto bps = F.breakpoints();
  if (C.empty() || bps.empty()) return F;
  const int from = bps.front() + C.min_degree() - 1, to = bps.back() + C.max_degree() + 1;
  FilteredComplex::Steps steps;
  std::vector<Span> prev;
  for (int n = C.min_degree(); n <= C.max_degree(); ++n) prev.push_back(F.full(n));
  for (int s = from; s <= to; ++s) {
    std::vector<Span> cur;
    for (int n = C.min_degree(); n <= C.max_degree(); ++n) cur.push_back(dec_step(F, s, n));
    if (cur != prev) steps.emplace(s, cur);
    prev = std::move(cur);
  }
  if (steps.empty()) steps.emplace(from, prev);
  return FilteredComplex(C, std::move(steps), F.tail_high(), F.require_saturated());
}

FilteredComplex decalage_iterate(const FilteredComplex& F, int k) {
  if (k < 0) throw Error("decalage_iterate requires k >= 0");
  FilteredComplex out = F;
  for (int i = 0; i < k; ++i) out = deligne_decalage(out);
  return out;
}

Span secondary_step(const FilteredComplex& F, int s, int w, int n) {
  const ChainComplex& C = F.complex();
  return F.step(std::max(w, s - n), n).preimage(C.differential(n), F.step(std::max(w, s - n + 1), n - 1));
}

Subcomplex decalage_subcomplex(const FilteredComplex& F, int s) {
  const ChainComplex& C = F.complex();
  Subcomplex out;
  if (C.empty()) {
    out.complex = ChainComplex::zero(F.ring());
    return out;
  }
  std::map<int, Span> spans;
  std::vector<std::size_t> ranks;
  for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
    spans.emplace(n, dec_step(F, s, n));
    ranks.push_back(spans.at(n).rank());
  }
  std::map<int, Matrix> d;
  for (int n = C.min_degree() + 1; n <= C.max_degree(); ++n) {
    const Span& src = spans.at(n);
    const Span& tgt = spans.at(n - 1);
    Matrix m(F.ring(), tgt.rank(), src.rank());
    for (std::size_t j = 0; j < src.rank(); ++j) {
      auto c = tgt.coordinates(C.differential(n).apply(src.basis()[j]));
      if (!c) throw Error("Dec(F)^s is not a subcomplex");
      for (std::size_t i = 0; i < c->size(); ++i) m(i, j) = (*c)[i];
    }
    d.emplace(n, std::move(m));
  }
  out.complex = ChainComplex(F.ring(), C.min_degree(), ranks, std::move(d));
  for (int n = C.min_degree(); n <= C.max_degree(); ++n) out.inclusion.emplace(n, spans.at(n).basis_matrix());
  return out;
}

FilteredComplex secondary_filtration(const FilteredComplex& F, int s) {
  const ChainComplex& C = F.complex();
  Subcomplex sub = decalage_subcomplex(F, s);
  const ChainComplex& D = sub.complex;
  if (D.empty()) return FilteredComplex(D, {}, TailHigh::Zero);
  const auto bps = F.breakpoints();
  const int wlo = s - C.max_degree();
  const int whi = std::max(wlo, (bps.empty() ? wlo : bps.back()) + 1);
  FilteredComplex::Steps steps;
  for (int w = wlo; w <= whi; ++w) {
    std::vector<Span> spans;
    for (int n = D.min_degree(); n <= D.max_degree(); ++n) {
      Span g = secondary_step(F, s, w, n);
      Span dec = Span::of_columns(sub.inclusion.at(n));
      std::vector<Vector> coords;
      for (const auto& v : g.basis()) coords.push_back(*dec.coordinates(v));
      spans.push_back(Span::generated_by(F.ring(), D.rank(n), std::move(coords)));
    }
    steps.emplace(w, std::move(spans));
  }
  return FilteredComplex(D, std::move(steps), F.tail_high(), F.require_saturated());
}

TruncationCheck truncation_graded_check(const FilteredComplex& F, int s, int w) {
  TruncationCheck rep;
  const ChainComplex& C = F.complex();
  if (C.empty()) return rep;
  const Ring& ring = F.ring();
  for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
    // H_n(G^w / G^{w+1}) with everything inside M
    Span gz = secondary_step(F, s, w, n).preimage(C.differential(n), secondary_step(F, s, w + 1, n - 1));
    Span gb = secondary_step(F, s, w, n + 1).image(C.differential(n + 1)) + secondary_step(F, s, w + 1, n);
    FgModule lhs = Subquotient(gz, gb).module();
    FgModule rhs = FgModule::zero(ring);
    if (n >= s - w) {
      Span fz = F.step(w, n).preimage(C.differential(n), F.step(w + 1, n - 1));
      Span fb = F.step(w, n + 1).image(C.differential(n + 1)) + F.step(w + 1, n);
      rhs = Subquotient(fz, fb).module();
    }
    if (!lhs.isomorphic(rhs)) {
      rep.ok = false;
      rep.problems.push_back("s=" + std::to_string(s) + " w=" + std::to_string(w) + " n=" + std::to_string(n) +
                             ": H(gr_G) = " + lhs.to_string() + ", expected " + rhs.to_string());
    }
  }
  return rep;
}

ComparisonReport comparison_map_e1_to_e2(const FilteredComplex& F) {
  FilteredComplex D = deligne_decalage(F);
  return comparison_map_e1_to_e2(F, er_classical(D, 1), er_classical(F, 2));
}

ComparisonReport comparison_map_e1_to_e2(const FilteredComplex& F, const Page& E1dec, const Page& E2) {
  ComparisonReport rep;
  const Transform2 back = kDecShift.inverse();
  std::set<Bidegree> positions;
  for (const auto& kv : E2.terms) positions.insert(kv.first);
  for (const auto& kv : E1dec.terms) positions.insert(back(kv.first));
  std::map<Bidegree, Matrix> phi;
  for (Bidegree x : positions) {
    const Bidegree y = kDecShift(x);
    const PageTerm* src = E1dec.term(y);
    const PageTerm* tgt = E2.term(x);
    const std::size_t gs = src ? src->quotient.generators() : 0;
    const std::size_t gt = tgt ? tgt->quotient.generators() : 0;
    Matrix m(F.ring(), gt, gs);
    bool defined = true;
    for (std::size_t g = 0; g < gs && tgt; ++g) {
      auto c = tgt->quotient.coordinates(src->quotient.lift(g));
      if (!c) {
        defined = false;
        break;
      }
      for (std::size_t i = 0; i < gt; ++i) m(i, g) = (*c)[i];
    }
    if (gs > 0 && !tgt) defined = false;
    // denominators must land in denominators
    if (defined && src && tgt)
      for (const auto& v : src->denominator().basis()) {
        auto c = tgt->quotient.coordinates(v);
        if (!c || !is_zero_vector(*c)) defined = false;
      }
    if (!defined) {
      rep.problems.push_back("comparison map not well defined at " + x.to_string());
      continue;
    }
    const auto ms = E1dec.moduli_at(y), mt = E2.moduli_at(x);
    if (!map_respects_relations(m, ms, mt) || !map_kernel(m, ms, mt).is_zero() ||
        !map_cokernel(m, ms, mt).is_zero())
      rep.problems.push_back("comparison map at " + x.to_string() + " is not an isomorphism");
    phi.emplace(x, m);
    rep.blocks.push_back({x, y, std::move(m)});
  }
  // d^2(F) phi == phi d^1(Dec F)
  for (const auto& [x, m] : phi) {
    const Bidegree xt = E2.target(x);
    auto it = phi.find(xt);
    if (it == phi.end()) continue;
    Matrix lhs = E2.differential_at(x) * m;
    Matrix rhs = it->second * E1dec.differential_at(kDecShift(x));
    Matrix diff = lhs + rhs.scaled(F.ring().from_int(-1));
    if (!map_is_zero(diff, E2.moduli_at(xt)))
      rep.problems.push_back("comparison map does not commute with differentials at " + x.to_string());
  }
  return rep;
}

Matrix FilteredMap::at(int n) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  return Matrix(source->ring(), target->complex().rank(n), source->complex().rank(n));
}

bool is_filtered_map(const FilteredMap& f) {
  const ChainComplex& C = f.source->complex();
  const ChainComplex& D = f.target->complex();
  ChainMap cm{f.components};
  for (int n = std::min(C.min_degree(), D.min_degree()); n <= std::max(C.max_degree(), D.max_degree()); ++n)
    if (!cm.components.count(n)) cm.components.emplace(n, f.at(n));
  if (!is_chain_map(C, D, cm)) return false;
  std::set<int> ws;
  for (int b : f.source->breakpoints()) ws.insert({b - 1, b, b + 1});
  for (int b : f.target->breakpoints()) ws.insert({b - 1, b, b + 1});
  for (int n = C.min_degree(); !C.empty() && n <= C.max_degree(); ++n)
    for (int w : ws)
      if (!f.target->step(w, n).contains(f.source->step(w, n).image(f.at(n)))) return false;
  return true;
}

Matrix induced_page_map(const Page& P, const Page& Q, const FilteredMap& f, Bidegree x) {
  const PageTerm* src = P.term(x);
  const PageTerm* tgt = Q.term(x);
  const std::size_t gs = src ? src->quotient.generators() : 0;
  const std::size_t gt = tgt ? tgt->quotient.generators() : 0;
  Matrix m(P.ring, gt, gs);
  if (gs == 0 || gt == 0) return m;
  const Matrix fn = f.at(src->degree);
  for (std::size_t g = 0; g < gs; ++g) {
    auto c = tgt->quotient.coordinates(fn.apply(src->quotient.lift(g)));
    if (!c) throw Error("filtered map does not induce a page map at " + x.to_string());
    for (std::size_t i = 0; i < gt; ++i) m(i, g) = (*c)[i];
  }
  return m;
}

std::vector<std::string> comparison_naturality(const FilteredMap& f) {
  std::vector<std::string> out;
  const FilteredComplex& F = *f.source;
  const FilteredComplex& G = *f.target;
  FilteredComplex DF = deligne_decalage(F), DG = deligne_decalage(G);
  FilteredMap df{&DF, &DG, f.components};
  Page e1F = er_classical(DF, 1), e1G = er_classical(DG, 1);
  Page e2F = er_classical(F, 2), e2G = er_classical(G, 2);
  ComparisonReport cF = comparison_map_e1_to_e2(F, e1F, e2F);
  ComparisonReport cG = comparison_map_e1_to_e2(G, e1G, e2G);
  if (!cF.ok() || !cG.ok()) {
    out.push_back("comparison map failed on an endpoint");
    return out;
  }
  std::map<Bidegree, const Matrix*> phiG;
  for (const auto& b : cG.blocks) phiG.emplace(b.f_pos, &b.map);
  for (const auto& b : cF.blocks) {
    const Bidegree x = b.f_pos;
    Matrix e2map = induced_page_map(e2F, e2G, f, x);
    Matrix e1map = induced_page_map(e1F, e1G, df, b.dec_pos);
    Matrix rhs = e2map * b.map;
    auto it = phiG.find(x);
    Matrix lhs = it != phiG.end() ? *it->second * e1map : Matrix(F.ring(), rhs.rows(), rhs.cols());
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() ||
        !map_is_zero(lhs + rhs.scaled(F.ring().from_int(-1)), e2G.moduli_at(x)))
      out.push_back("comparison map is not natural at " + x.to_string());
  }
  return out;
}

SubfiltrationInclusion subfiltration_inclusion(const FilteredComplex& F, int k) {
  const ChainComplex& C = F.complex();
  SubfiltrationInclusion out;
  if (C.empty()) {
    out.sub = F;
    return out;
  }
  std::vector<std::size_t> ranks;
  std::map<int, Matrix> d;
  for (int n = C.min_degree(); n <= C.max_degree(); ++n) ranks.push_back(F.step(k, n).rank());
  for (int n = C.min_degree() + 1; n <= C.max_degree(); ++n) {
    const Span& src = F.step(k, n);
    const Span& tgt = F.step(k, n - 1);
    Matrix m(F.ring(), tgt.rank(), src.rank());
    for (std::size_t j = 0; j < src.rank(); ++j) {
      auto c = tgt.coordinates(C.differential(n).apply(src.basis()[j]));
      if (!c) throw Error("F^k is not a subcomplex");
      for (std::size_t i = 0; i < c->size(); ++i) m(i, j) = (*c)[i];
    }
    d.emplace(n, std::move(m));
  }
  ChainComplex sub(F.ring(), C.min_degree(), ranks, std::move(d));
  FilteredComplex::Steps steps;
  std::set<int> ws;
  for (int b : F.breakpoints())
    if (b > k) ws.insert(b);
  ws.insert(k);
  for (int w : ws) {
    std::vector<Span> spans;
    for (int n = sub.min_degree(); !sub.empty() && n <= sub.max_degree(); ++n) {
      const Span& amb = F.step(k, n);
      std::vector<Vector> coords;
      for (const auto& v : F.step(w, n).basis()) coords.push_back(*amb.coordinates(v));
      spans.push_back(Span::generated_by(F.ring(), amb.rank(), std::move(coords)));
    }
    steps.emplace(w, std::move(spans));
  }
  if (sub.empty()) steps.clear();
  out.sub = FilteredComplex(sub, std::move(steps), F.tail_high(), F.require_saturated());
  for (int n = sub.min_degree(); !sub.empty() && n <= sub.max_degree(); ++n)
    out.inclusion.emplace(n, F.step(k, n).basis_matrix());
  return out;
}

FilteredComplex shifted_filtration(const FilteredComplex& F, int shift) {
  FilteredComplex::Steps steps;
  for (const auto& [s, spans] : F.steps()) steps.emplace(s + shift, spans);
  return FilteredComplex(F.complex(), std::move(steps), F.tail_high(), F.require_saturated());
}

}  // namespace specseq
