#include "specseq/multiplicative.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace specseq {

namespace {

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v[i] = 1;
  return v;
}

Vector add(const Ring& R, Vector a, const Vector& b, const Scalar& c = 1) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) R.add_mul(a[i], c, b[i]);
  return a;
}

int sign_of(int k) { return (k % 2 == 0) ? 1 : -1; }

// Reduce class coordinates against moduli so that equal classes compare equal.
Vector reduced(const Ring& R, Vector v, const std::vector<Scalar>& moduli) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = moduli[i] == 0 ? R.normalize(v[i]) : R.reduce_mod(v[i], moduli[i]);
  return v;
}

std::string vec_str(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_to_string(v[i]);
  return s + "]";
}

}  // namespace

Vector FilteredDGA::multiply(int m, const Vector& x, int n, const Vector& y) const {
  const ChainComplex& C = base.complex();
  const Ring& R = C.ring();
  Vector out = zero_vector(C.rank(m + n));
  auto it = products.find({m, n});
  if (it == products.end() || out.empty()) return out;
  const Matrix& mu = it->second;
  const std::size_t rn = C.rank(n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      const Scalar c = R.mul(x[i], y[j]);
      const std::size_t col = i * rn + j;
      for (std::size_t k = 0; k < out.size(); ++k)
        if (mu(k, col) != 0) R.add_mul(out[k], c, mu(k, col));
    }
  }
  return out;
}

FilteredDGA FilteredDGA::with_base(FilteredComplex F) const {
  FilteredDGA A = *this;
  A.base = std::move(F);
  return A;
}

std::vector<Violation> validate_dga(const FilteredDGA& A) {
  std::vector<Violation> out = validate(A.base);
  const ChainComplex& C = A.base.complex();
  const Ring& R = C.ring();
  if (C.empty()) return out;
  const int lo = C.min_degree(), hi = C.max_degree();

  for (const auto& [mn, mu] : A.products) {
    const auto [m, n] = mn;
    if (mu.rows() != C.rank(m + n) || mu.cols() != C.rank(m) * C.rank(n))
      out.push_back({"shape", 0, m + n,
                     "product (" + std::to_string(m) + "," + std::to_string(n) + ") has shape " +
                         std::to_string(mu.rows()) + "x" + std::to_string(mu.cols())});
  }
  if (!out.empty()) return out;

  auto d = [&](int n, const Vector& x) { return C.differential(n).apply(x); };

  // Leibniz on basis pairs
  for (int m = lo; m <= hi; ++m)
    for (int n = lo; n <= hi; ++n)
      for (std::size_t i = 0; i < C.rank(m); ++i)
        for (std::size_t j = 0; j < C.rank(n); ++j) {
          const Vector x = unit_vector(C.rank(m), i), y = unit_vector(C.rank(n), j);
          const Vector lhs = d(m + n, A.multiply(m, x, n, y));
          const Vector rhs = add(R, A.multiply(m - 1, d(m, x), n, y), A.multiply(m, x, n - 1, d(n, y)), R.from_int(sign_of(m)));
          if (lhs != rhs)
            out.push_back({"leibniz", 0, m + n,
                           "d(e" + std::to_string(i) + "_" + std::to_string(m) + " * e" + std::to_string(j) + "_" +
                               std::to_string(n) + ") = " + vec_str(lhs) + " but Leibniz gives " + vec_str(rhs)});
        }

  // Filtration multiplicativity.  F^s is constant between breakpoints, so it
  // suffices to test the smallest weight of every plateau.
  std::vector<int> weights;
  const auto bps = A.base.breakpoints();
  if (!bps.empty()) {
    weights.push_back(bps.front() - 1);
    weights.insert(weights.end(), bps.begin(), bps.end());
    weights.push_back(bps.back() + 1);
  } else {
    weights.push_back(0);
  }
  for (int m = lo; m <= hi; ++m)
    for (int n = lo; n <= hi; ++n) {
      if (C.rank(m + n) == 0 || !A.products.count({m, n})) continue;
      for (int a : weights)
        for (int b : weights) {
          const Span& target = A.base.step(a + b, m + n);
          bool bad = false;
          for (const auto& x : A.base.step(a, m).basis()) {
            for (const auto& y : A.base.step(b, n).basis())
              if (!target.contains(A.multiply(m, x, n, y))) {
                bad = true;
                break;
              }
            if (bad) break;
          }
          if (bad)
            out.push_back({"multiplicativity", a + b, m + n,
                           "F^" + std::to_string(a) + "M_" + std::to_string(m) + " * F^" + std::to_string(b) + "M_" +
                               std::to_string(n) + " not in F^" + std::to_string(a + b)});
        }
    }

  // Associativity on basis triples
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      for (int c = lo; c <= hi; ++c) {
        if (C.rank(a + b + c) == 0) continue;
        for (std::size_t i = 0; i < C.rank(a); ++i)
          for (std::size_t j = 0; j < C.rank(b); ++j)
            for (std::size_t k = 0; k < C.rank(c); ++k) {
              const Vector x = unit_vector(C.rank(a), i), y = unit_vector(C.rank(b), j),
                           z = unit_vector(C.rank(c), k);
              if (A.multiply(a + b, A.multiply(a, x, b, y), c, z) != A.multiply(a, x, b + c, A.multiply(b, y, c, z)))
                out.push_back({"associativity", 0, a + b + c,
                               "(xy)z != x(yz) on basis (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ") in degrees (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")"});
            }
      }

  if (A.unit) {
    if (A.unit->size() != C.rank(0)) {
      out.push_back({"unit", 0, 0, "unit has the wrong length"});
    } else {
      if (!A.base.step(0, 0).contains(*A.unit)) out.push_back({"unit", 0, 0, "unit not in F^0"});
      for (int n = lo; n <= hi; ++n)
        for (std::size_t i = 0; i < C.rank(n); ++i) {
          const Vector x = unit_vector(C.rank(n), i);
          if (A.multiply(0, *A.unit, n, x) != x || A.multiply(n, x, 0, *A.unit) != x)
            out.push_back({"unit", 0, n, "1 * e" + std::to_string(i) + " != e" + std::to_string(i)});
        }
    }
  }

  if (A.commutative)
    for (int m = lo; m <= hi; ++m)
      for (int n = lo; n <= hi; ++n)
        for (std::size_t i = 0; i < C.rank(m); ++i)
          for (std::size_t j = 0; j < C.rank(n); ++j) {
            const Vector x = unit_vector(C.rank(m), i), y = unit_vector(C.rank(n), j);
            Vector yx = A.multiply(n, y, m, x);
            if (sign_of(m * n) < 0)
              for (auto& v : yx) v = R.neg(v);
            if (A.multiply(m, x, n, y) != yx)
              out.push_back({"commutativity", 0, m + n, "xy != (-1)^{mn} yx on basis pair"});
          }
  return out;
}

std::optional<Vector> page_product_of_lifts(const Page& P, const FilteredDGA& A, Bidegree x, const Vector& ax,
                                            Bidegree y, const Vector& by) {
  const Bidegree z{x.s + y.s, x.t + y.t};
  const Vector prod = A.multiply(x.s + x.t, ax, y.s + y.t, by);
  const PageTerm* tz = P.term(z);
  if (!tz) {
    // outside the window the graded vanishes; nothing to reduce into
    return Vector{};
  }
  auto c = tz->quotient.coordinates(prod);
  if (!c) return std::nullopt;
  return reduced(P.ring, *c, tz->quotient.moduli());
}

Vector page_product(const Page& P, const FilteredDGA& A, Bidegree x, const Vector& a, Bidegree y,
                    const Vector& b) {
  const PageTerm* tx = P.term(x);
  const PageTerm* ty = P.term(y);
  if (!tx || !ty) throw Error("page_product: no term at " + (tx ? y : x).to_string());
  auto c = page_product_of_lifts(P, A, x, tx->quotient.lift_of(a), y, ty->quotient.lift_of(b));
  if (!c)
    throw Error("page_product: product of " + x.to_string() + " and " + y.to_string() +
                " leaves the target numerator");
  return *c;
}

LeibnizReport check_leibniz(const Page& P, const FilteredDGA& A, std::size_t max_pairs) {
  LeibnizReport rep;
  const Ring& R = P.ring;
  auto gens = [&](Bidegree x) -> std::size_t {
    const PageTerm* t = P.term(x);
    return t ? t->quotient.generators() : 0;
  };
  auto moduli = [&](Bidegree x) { return P.moduli_at(x); };
  auto or_zero = [&](Bidegree x, Vector v) { return v.empty() ? zero_vector(gens(x)) : v; };
  auto apply_d = [&](Bidegree x, const Vector& a) -> Vector {
    if (gens(P.target(x)) == 0) return {};
    return reduced(R, P.differential_at(x).apply(a), moduli(P.target(x)));
  };
  auto product = [&](Bidegree x, const Vector& a, Bidegree y, const Vector& b) -> Vector {
    if (a.empty() || b.empty() || gens(x) == 0 || gens(y) == 0) return {};
    return page_product(P, A, x, a, y, b);
  };
  auto fail = [&](const std::string& msg) { rep.problems.push_back("page " + std::to_string(P.r) + ": " + msg); };

  std::vector<Bidegree> positions;
  for (const auto& [x, t] : P.terms)
    if (t.quotient.generators() > 0) positions.push_back(x);

  for (Bidegree x : positions)
    for (Bidegree y : positions)
      for (std::size_t i = 0; i < gens(x); ++i)
        for (std::size_t j = 0; j < gens(y); ++j) {
          if (max_pairs && rep.checked >= max_pairs) return rep;
          ++rep.checked;
          const Vector a = unit_vector(gens(x), i), b = unit_vector(gens(y), j);
          const Bidegree z{x.s + y.s, x.t + y.t};
          const std::string tag = "[" + std::to_string(i) + "]" + x.to_string() + " * [" + std::to_string(j) + "]" +
                                  y.to_string();
          Vector ab;
          try {
            ab = product(x, a, y, b);
          } catch (const Error& e) {
            fail(tag + ": " + e.what());
            continue;
          }

          // d(ab) = d(a) b + (-1)^{s+t} a d(b)
          const Bidegree tz = P.target(z);
          if (gens(tz) > 0) {
            const Vector lhs = or_zero(tz, gens(z) ? apply_d(z, or_zero(z, ab)) : Vector{});
            Vector da_b = or_zero(tz, product(P.target(x), apply_d(x, a), y, b));
            Vector a_db = or_zero(tz, product(x, a, P.target(y), apply_d(y, b)));
            const Vector rhs = reduced(R, add(R, da_b, a_db, R.from_int(sign_of(x.s + x.t))), moduli(tz));
            if (lhs != rhs) fail("Leibniz fails for " + tag + ": " + vec_str(lhs) + " vs " + vec_str(rhs));
          }

          if (A.commutative && gens(z) > 0) {
            Vector ba = or_zero(z, product(y, b, x, a));
            if (sign_of((x.s + x.t) * (y.s + y.t)) < 0)
              for (auto& v : ba) v = R.neg(v);
            if (or_zero(z, ab) != reduced(R, ba, moduli(z))) fail("graded commutativity fails for " + tag);
          }

          // representative independence
          if (gens(z) > 0) {
            const PageTerm& tx = *P.term(x);
            const PageTerm& ty = *P.term(y);
            const Vector lx = tx.quotient.lift_of(a), ly = ty.quotient.lift_of(b);
            for (const auto& delta : tx.denominator().basis()) {
              auto c = page_product_of_lifts(P, A, x, add(R, lx, delta), y, ly);
              if (!c || or_zero(z, *c) != or_zero(z, ab)) fail("product depends on representative of left factor in " + tag);
            }
            for (const auto& delta : ty.denominator().basis()) {
              auto c = page_product_of_lifts(P, A, x, lx, y, add(R, ly, delta));
              if (!c || or_zero(z, *c) != or_zero(z, ab)) fail("product depends on representative of right factor in " + tag);
            }
          }
        }
  return rep;
}

FilteredDGA koszul_dga(Ring ring, int N) {
  if (N < 1) throw Error("koszul_dga requires N >= 1");
  const std::size_t n = static_cast<std::size_t>(N);
  Matrix d1(ring, n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) d1(k + 1, k) = 1;
  ChainComplex C(ring, 0, {n, n}, {{1, d1}});

  FilteredComplex::Steps steps;
  for (int s = 1; s <= N; ++s) {
    std::vector<std::size_t> idx;
    for (std::size_t k = static_cast<std::size_t>(s); k < n; ++k) idx.push_back(k);
    steps[s] = {Span::coordinate(ring, n, idx), Span::coordinate(ring, n, idx)};
  }
  FilteredDGA A{FilteredComplex(C, steps, TailHigh::Zero), {}, std::nullopt, true};

  Matrix m00(ring, n, n * n), m01(ring, n, n * n), m10(ring, n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; a + b < n; ++b) {
      m00(a + b, a * n + b) = 1;
      m01(a + b, a * n + b) = 1;
      m10(a + b, a * n + b) = 1;
    }
  A.products[{0, 0}] = m00;
  A.products[{0, 1}] = m01;
  A.products[{1, 0}] = m10;
  A.products[{1, 1}] = Matrix(ring, 0, n * n);
  A.unit = unit_vector(n, 0);
  return A;
}

FilteredDGA random_polynomial_dga(Ring ring, std::mt19937_64& rng, const PolynomialDgaParams& params) {
  const int nv = params.variables, nd = params.max_degree, ne = params.exterior;
  if (nv < 1 || nd < 0 || ne < 0 || ne > 8) throw Error("random_polynomial_dga: bad parameters");
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  // monomials of total degree <= nd, constant first
  std::vector<std::vector<int>> monos{std::vector<int>(nv, 0)};
  for (std::size_t i = 0; i < monos.size(); ++i) {
    int deg = 0;
    for (int e : monos[i]) deg += e;
    if (deg == nd) continue;
    // extend only at or after the last nonzero exponent so each monomial appears once
    int last = 0;
    for (int v = 0; v < nv; ++v)
      if (monos[i][v]) last = v;
    for (int v = last; v < nv; ++v) {
      auto m = monos[i];
      ++m[v];
      monos.push_back(m);
    }
  }
  std::map<std::vector<int>, std::size_t> mono_index;
  for (std::size_t i = 0; i < monos.size(); ++i) mono_index[monos[i]] = i;
  const std::size_t nm = monos.size();

  // basis of degree k: (mask with popcount k) x monomial
  std::vector<std::vector<unsigned>> masks(ne + 1);
  for (unsigned mask = 0; mask < (1u << ne); ++mask) masks[std::popcount(mask)].push_back(mask);
  auto index_of = [&](unsigned mask, std::size_t mono) {
    const auto& ms = masks[std::popcount(mask)];
    return static_cast<std::size_t>(std::find(ms.begin(), ms.end(), mask) - ms.begin()) * nm + mono;
  };
  auto mono_product = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
    auto m = monos[a];
    for (int v = 0; v < nv; ++v) m[v] += monos[b][v];
    auto it = mono_index.find(m);
    if (it == mono_index.end()) return std::nullopt;
    return it->second;
  };

  std::vector<int> w(nv);
  for (auto& x : w) x = uniform(0, params.max_weight);
  auto mono_weight = [&](std::size_t i) {
    int s = 0;
    for (int v = 0; v < nv; ++v) s += monos[i][v] * w[v];
    return s;
  };

  // d e_j = f_j, a random polynomial without constant term
  std::vector<Vector> f(ne, zero_vector(nm));
  std::vector<int> v(ne);
  for (int j = 0; j < ne; ++j) {
    for (std::size_t i = 1; i < nm; ++i)
      if (uniform(0, 2) == 0) f[j][i] = ring.from_int(uniform(-3, 3));
    int minw = INT32_MAX;
    for (std::size_t i = 1; i < nm; ++i)
      if (f[j][i] != 0) minw = std::min(minw, mono_weight(i));
    v[j] = minw == INT32_MAX ? uniform(0, params.max_weight) : minw - uniform(0, 1);
  }

  std::vector<std::size_t> ranks;
  for (int k = 0; k <= ne; ++k) ranks.push_back(masks[k].size() * nm);
  auto weight = [&](unsigned mask, std::size_t mono) {
    int s = mono_weight(mono);
    for (int j = 0; j < ne; ++j)
      if (mask >> j & 1u) s += v[j];
    return s;
  };

  std::map<int, Matrix> diffs;
  for (int k = 1; k <= ne; ++k) {
    Matrix d(ring, ranks[k - 1], ranks[k]);
    for (unsigned mask : masks[k])
      for (std::size_t a = 0; a < nm; ++a) {
        const std::size_t col = index_of(mask, a);
        int before = 0;
        for (int j = 0; j < ne; ++j) {
          if (!(mask >> j & 1u)) continue;
          const int sg = sign_of(before++);
          for (std::size_t b = 1; b < nm; ++b) {
            if (f[j][b] == 0) continue;
            auto ab = mono_product(a, b);
            if (!ab) continue;
            const std::size_t row = index_of(mask & ~(1u << j), *ab);
            ring.add_mul(d(row, col), ring.from_int(sg), f[j][b]);
          }
        }
      }
    diffs[k] = d;
  }
  ChainComplex C(ring, 0, ranks, diffs);

  int wmin = INT32_MAX, wmax = INT32_MIN;
  for (int k = 0; k <= ne; ++k)
    for (unsigned mask : masks[k])
      for (std::size_t a = 0; a < nm; ++a) {
        wmin = std::min(wmin, weight(mask, a));
        wmax = std::max(wmax, weight(mask, a));
      }
  FilteredComplex::Steps steps;
  for (int s = wmin + 1; s <= wmax + 1; ++s) {
    std::vector<Span> per_degree;
    for (int k = 0; k <= ne; ++k) {
      std::vector<std::size_t> idx;
      for (unsigned mask : masks[k])
        for (std::size_t a = 0; a < nm; ++a)
          if (weight(mask, a) >= s) idx.push_back(index_of(mask, a));
      std::sort(idx.begin(), idx.end());
      per_degree.push_back(Span::coordinate(ring, ranks[k], idx));
    }
    steps[s] = per_degree;
  }
  FilteredDGA A{FilteredComplex(C, steps, TailHigh::Zero), {}, std::nullopt, true};

  for (int p = 0; p <= ne; ++p)
    for (int q = 0; p + q <= ne; ++q) {
      Matrix mu(ring, ranks[p + q], ranks[p] * ranks[q]);
      for (unsigned J : masks[p])
        for (unsigned K : masks[q]) {
          if (J & K) continue;
          // Koszul sign of e_J e_K -> e_{J u K}: pairs j in J, k in K with j > k
          int inversions = 0;
          for (int j = 0; j < ne; ++j)
            if (J >> j & 1u) inversions += std::popcount(K & ((1u << j) - 1));
          for (std::size_t a = 0; a < nm; ++a)
            for (std::size_t b = 0; b < nm; ++b) {
              auto ab = mono_product(a, b);
              if (!ab) continue;
              mu(index_of(J | K, *ab), index_of(J, a) * ranks[q] + index_of(K, b)) = ring.from_int(sign_of(inversions));
            }
        }
      A.products[{p, q}] = mu;
    }
  A.unit = unit_vector(ranks[0], index_of(0, 0));
  return A;
}

}  // namespace specseq
