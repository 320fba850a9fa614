#include "specseq/filtered.hpp"

#include <climits>
#include <set>

namespace specseq {

FilteredComplex::FilteredComplex(ChainComplex complex, Steps steps, TailHigh tail, bool require_saturated)
    : complex_(std::move(complex)),
      steps_(std::move(steps)),
      tail_(tail),
      require_saturated_(require_saturated),
      empty_(complex_.ring(), 0) {
  const Ring& ring = complex_.ring();
  const std::size_t degrees = complex_.empty() ? 0 : static_cast<std::size_t>(max_degree() - min_degree() + 1);
  for (int n = min_degree(); !complex_.empty() && n <= max_degree(); ++n) {
    full_.push_back(Span::full(ring, complex_.rank(n)));
    zero_.push_back(Span(ring, complex_.rank(n)));
  }
  for (auto& [s, spans] : steps_) {
    if (spans.size() != degrees)
      throw Error("step at weight " + std::to_string(s) + " lists " + std::to_string(spans.size()) +
                  " degrees, complex has " + std::to_string(degrees));
    for (std::size_t k = 0; k < degrees; ++k) {
      const int n = min_degree() + static_cast<int>(k);
      if (spans[k].ambient() != complex_.rank(n) || !(spans[k].ring() == ring))
        throw Error("step (" + std::to_string(s) + ", " + std::to_string(n) + ") does not live in M_" +
                    std::to_string(n));
    }
  }
  compute_window();
}

std::vector<int> FilteredComplex::breakpoints() const {
  std::vector<int> b;
  for (const auto& kv : steps_) b.push_back(kv.first);
  return b;
}

const Span& FilteredComplex::full(int n) const {
  if (complex_.empty() || n < min_degree() || n > max_degree()) return empty_;
  return full_[static_cast<std::size_t>(n - min_degree())];
}

const Span& FilteredComplex::zero(int n) const {
  if (complex_.empty() || n < min_degree() || n > max_degree()) return empty_;
  return zero_[static_cast<std::size_t>(n - min_degree())];
}

const Span& FilteredComplex::limit_step(int n) const {
  if (complex_.empty() || n < min_degree() || n > max_degree()) return empty_;
  if (steps_.empty()) return full(n);
  if (tail_ == TailHigh::Zero) return zero(n);
  return steps_.rbegin()->second[static_cast<std::size_t>(n - min_degree())];
}

const Span& FilteredComplex::step(int s, int n) const {
  if (complex_.empty() || n < min_degree() || n > max_degree()) return empty_;
  if (steps_.empty() || s < steps_.begin()->first) return full(n);
  auto it = steps_.upper_bound(s);
  --it;
  if (s > steps_.rbegin()->first) return limit_step(n);
  return it->second[static_cast<std::size_t>(n - min_degree())];
}

void FilteredComplex::compute_window() {
  lo_ = 1;
  hi_ = 0;
  std::set<int> cand;
  for (const auto& kv : steps_) {
    cand.insert(kv.first - 1);
    cand.insert(kv.first);
  }
  bool any = false;
  for (int s : cand) {
    bool nz = false;
    for (int n = min_degree(); !complex_.empty() && n <= max_degree() && !nz; ++n)
      nz = step(s, n) != step(s + 1, n);
    if (!nz) continue;
    if (!any) lo_ = s;
    hi_ = s;
    any = true;
  }
}

bool FilteredComplex::same_filtration(const FilteredComplex& o) const {
  if (!(complex_ == o.complex_)) return false;
  std::set<int> cand;
  for (const auto& kv : steps_) cand.insert({kv.first - 1, kv.first, kv.first + 1});
  for (const auto& kv : o.steps_) cand.insert({kv.first - 1, kv.first, kv.first + 1});
  for (int n = min_degree(); !complex_.empty() && n <= max_degree(); ++n) {
    for (int s : cand)
      if (step(s, n) != o.step(s, n)) return false;
    if (limit_step(n) != o.limit_step(n)) return false;
  }
  return true;
}

std::vector<Violation> validate(const FilteredComplex& F) {
  std::vector<Violation> out;
  const ChainComplex& C = F.complex();
  if (C.empty()) return out;
  for (int n = C.min_degree() + 1; n <= C.max_degree(); ++n)
    if (!(C.differential(n - 1) * C.differential(n)).is_zero())
      out.push_back({"d-squared", 0, n, "d_{n-1} d_n != 0"});
  const auto bps = F.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const int s = bps[i];
    for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
      const Span& here = F.step(s, n);
      if (i > 0 && !F.step(bps[i - 1], n).contains(here))
        out.push_back({"nesting", s, n, "F^" + std::to_string(s) + " not contained in F^" + std::to_string(bps[i - 1])});
      if (!F.step(s, n - 1).contains(here.image(C.differential(n))))
        out.push_back({"d-compatibility", s, n, "d(F^s M_n) not contained in F^s M_{n-1}"});
      if (F.require_saturated() && !here.is_saturated())
        out.push_back({"saturation", s, n, "step is not a saturated submodule"});
    }
  }
  return out;
}

std::string to_string(const Violation& v) {
  return v.kind + " violation at (" + std::to_string(v.weight) + ", " + std::to_string(v.degree) + "): " + v.message;
}

namespace {

// Free presentation of F^i / F^j, plus the quotient coordinate maps.
struct QuotientComplex {
  ChainComplex complex;
  std::map<int, Subquotient> quotients;
};

QuotientComplex present_quotient(const FilteredComplex& F, int i, int j) {
  const ChainComplex& C = F.complex();
  QuotientComplex out;
  if (C.empty()) {
    out.complex = ChainComplex::zero(F.ring());
    return out;
  }
  auto upper = [&](int n) -> const Span& { return j == INT_MAX ? F.limit_step(n) : F.step(j, n); };
  std::vector<std::size_t> ranks;
  for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
    Subquotient q(F.step(i, n), upper(n));
    if (!q.module().invariant_factors.empty())
      throw Error("F^" + std::to_string(i) + "/F^" + std::to_string(j) + " has torsion in degree " +
                  std::to_string(n) + "; use graded_piece_module");
    ranks.push_back(q.generators());
    out.quotients.emplace(n, std::move(q));
  }
  std::map<int, Matrix> d;
  for (int n = C.min_degree() + 1; n <= C.max_degree(); ++n) {
    const Subquotient& src = out.quotients.at(n);
    const Subquotient& tgt = out.quotients.at(n - 1);
    Matrix m(F.ring(), tgt.generators(), src.generators());
    for (std::size_t g = 0; g < src.generators(); ++g) {
      auto c = tgt.coordinates(C.differential(n).apply(src.lift(g)));
      if (!c) throw Error("differential does not preserve the filtration");
      for (std::size_t r = 0; r < c->size(); ++r) m(r, g) = (*c)[r];
    }
    d.emplace(n, std::move(m));
  }
  out.complex = ChainComplex(F.ring(), C.min_degree(), std::move(ranks), std::move(d));
  return out;
}

}  // namespace

ChainComplex graded_piece(const FilteredComplex& F, int s) { return present_quotient(F, s, s + 1).complex; }

FgModule graded_piece_module(const FilteredComplex& F, int s, int n) {
  return Subquotient(F.step(s, n), F.step(s + 1, n)).module();
}

FilteredComplex interval_graded(const FilteredComplex& F, int i, int j) {
  if (i > j) throw Error("interval_graded requires i <= j");
  QuotientComplex q = present_quotient(F, i, j);
  const ChainComplex& Q = q.complex;
  const int end = j == INT_MAX ? std::max(i, F.graded_hi() + 1) : j;
  FilteredComplex::Steps steps;
  for (int a = i; a <= end && !Q.empty(); ++a) {
    std::vector<Span> spans;
    for (int n = Q.min_degree(); n <= Q.max_degree(); ++n) {
      const Subquotient& sq = q.quotients.at(n);
      std::vector<Vector> gens;
      if (a < end)
        for (const auto& v : F.step(a, n).basis()) gens.push_back(*sq.coordinates(v));
      spans.push_back(Span::generated_by(F.ring(), Q.rank(n), std::move(gens)));
    }
    steps.emplace(a, std::move(spans));
  }
  return FilteredComplex(Q, std::move(steps), TailHigh::Zero);
}

FilteredComplex stupid_filtration(const ChainComplex& C) {
  FilteredComplex::Steps steps;
  if (!C.empty()) {
    const int cmin = -C.max_degree(), cmax = -C.min_degree();
    for (int s = cmin; s <= cmax + 1; ++s) {
      std::vector<Span> spans;
      for (int n = C.min_degree(); n <= C.max_degree(); ++n)
        spans.push_back(-n >= s ? Span::full(C.ring(), C.rank(n)) : Span(C.ring(), C.rank(n)));
      steps.emplace(s, std::move(spans));
    }
  }
  return FilteredComplex(C, std::move(steps), TailHigh::Zero);
}

FilteredComplex whitehead_filtration(const ChainComplex& C) {
  FilteredComplex::Steps steps;
  if (!C.empty()) {
    for (int s = C.min_degree(); s <= C.max_degree() + 1; ++s) {
      std::vector<Span> spans;
      for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
        if (n > s)
          spans.push_back(Span::full(C.ring(), C.rank(n)));
        else if (n == s)
          spans.push_back(C.cycles(n));
        else
          spans.push_back(Span(C.ring(), C.rank(n)));
      }
      steps.emplace(s, std::move(spans));
    }
  }
  return FilteredComplex(C, std::move(steps), TailHigh::Zero);
}

FilteredComplex inserted_filtration(const ChainComplex& C, int a) {
  FilteredComplex::Steps steps;
  if (!C.empty()) {
    std::vector<Span> full, zero;
    for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
      full.push_back(Span::full(C.ring(), C.rank(n)));
      zero.push_back(Span(C.ring(), C.rank(n)));
    }
    steps.emplace(a, std::move(full));
    steps.emplace(a + 1, std::move(zero));
  }
  return FilteredComplex(C, std::move(steps), TailHigh::Zero);
}

FilteredComplex constant_filtration(const ChainComplex& C) {
  FilteredComplex::Steps steps;
  std::vector<Span> full;
  for (int n = C.min_degree(); !C.empty() && n <= C.max_degree(); ++n) full.push_back(Span::full(C.ring(), C.rank(n)));
  steps.emplace(0, std::move(full));
  return FilteredComplex(C, std::move(steps), TailHigh::Constant);
}

FilteredComplex truncated_padic(std::uint32_t p, int N) {
  Ring Z = Ring::integers();
  if (N < 0) throw Error("truncated_padic requires N >= 0");
  ChainComplex C(Z, 0, {1}, {});
  FilteredComplex::Steps steps;
  mpz_class pw = 1;
  for (int s = 0; s <= N; ++s) {
    steps.emplace(s, std::vector<Span>{Span::generated_by(Z, 1, {{Scalar(pw)}})});
    pw *= p;
  }
  return FilteredComplex(C, std::move(steps), TailHigh::Zero, false);
}

FilteredComplex toy_d2(Ring ring) {
  ChainComplex C(ring, 0, {1, 1}, {{1, Matrix::from_ints(ring, {{1}})}});
  FilteredComplex::Steps steps;
  steps.emplace(0, std::vector<Span>{Span::full(ring, 1), Span::full(ring, 1)});
  steps.emplace(1, std::vector<Span>{Span::full(ring, 1), Span(ring, 1)});
  steps.emplace(3, std::vector<Span>{Span(ring, 1), Span(ring, 1)});
  return FilteredComplex(C, std::move(steps), TailHigh::Zero);
}

Span FilteredFgModule::numerator(int s) const {
  if (numerators.empty()) return cycles + boundaries;
  if (s < lo) return numerators.begin()->second;
  if (s > hi + 1) return numerators.rbegin()->second;
  return numerators.at(s);
}

FilteredFgModule induced_homology_filtration(const FilteredComplex& F, int n) {
  FilteredFgModule out;
  const ChainComplex& C = F.complex();
  out.cycles = C.cycles(n);
  out.boundaries = C.boundaries(n);
  const int lo = F.graded_empty() ? 0 : F.graded_lo();
  const int hi = F.graded_empty() ? -1 : F.graded_hi();
  out.lo = lo;
  out.hi = hi;
  for (int s = lo; s <= hi + 1; ++s)
    out.numerators.emplace(s, out.cycles.intersect(F.step(s, n)) + out.boundaries);
  return out;
}

}  // namespace specseq
