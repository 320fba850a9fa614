#include "specseq/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace specseq {

namespace {

// row_a -= q * row_b, starting at column `from`
void row_sub(const Ring& ring, Vector& a, const Vector& b, const Scalar& q, std::size_t from = 0) {
  if (sgn(q) == 0) return;
  Scalar nq = ring.neg(q);
  for (std::size_t j = from; j < a.size(); ++j)
    if (sgn(b[j]) != 0) ring.add_mul(a[j], nq, b[j]);
}

void row_scale(const Ring& ring, Vector& a, const Scalar& u) {
  if (u == 1) return;
  for (auto& x : a)
    if (sgn(x) != 0) x = ring.mul(x, u);
}

}  // namespace

Echelon row_echelon(const Ring& ring, std::size_t width, std::vector<Vector> rows,
                    bool with_transform) {
  Echelon e;
  const std::size_t k = rows.size();
  std::vector<Vector> U;
  if (with_transform) {
    U.assign(k, Vector(k));
    for (std::size_t i = 0; i < k; ++i) U[i][i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < k; ++c) {
    bool found = false;
    while (true) {
      std::size_t best = k;
      for (std::size_t i = r; i < k; ++i)
        if (sgn(rows[i][c]) != 0 && (best == k || ring.norm_less(rows[i][c], rows[best][c]))) best = i;
      if (best == k) break;
      if (best != r) {
        std::swap(rows[r], rows[best]);
        if (with_transform) std::swap(U[r], U[best]);
      }
      bool clean = true;
      Scalar q, rem;
      for (std::size_t i = r + 1; i < k; ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        ring.divmod(rows[i][c], rows[r][c], q, rem);
        row_sub(ring, rows[i], rows[r], q, c);
        if (with_transform) row_sub(ring, U[i], U[r], q);
        if (sgn(rem) != 0) clean = false;
      }
      if (clean) {
        found = true;
        break;
      }
    }
    if (!found) continue;
    Scalar u = ring.unit_normalizer(rows[r][c]);
    row_scale(ring, rows[r], u);
    if (with_transform) row_scale(ring, U[r], u);
    Scalar q, rem;
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      ring.divmod(rows[i][c], rows[r][c], q, rem);
      row_sub(ring, rows[i], rows[r], q, c);
      if (with_transform) row_sub(ring, U[i], U[r], q);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  e.rows = std::move(rows);
  e.transform = std::move(U);
  return e;
}

SmithForm smith_normal_form(const Matrix& A0) {
  const Ring& ring = A0.ring();
  const std::size_t m = A0.rows(), n = A0.cols();
  Matrix A = A0;
  Matrix U = Matrix::identity(ring, m), V = Matrix::identity(ring, n);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(A(a, j), A(b, j));
    for (std::size_t j = 0; j < m; ++j) std::swap(U(a, j), U(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(A(i, a), A(i, b));
    for (std::size_t i = 0; i < n; ++i) std::swap(V(i, a), V(i, b));
  };
  // row a += q * row b
  auto add_row = [&](std::size_t a, std::size_t b, const Scalar& q) {
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(A(b, j)) != 0) ring.add_mul(A(a, j), q, A(b, j));
    for (std::size_t j = 0; j < m; ++j)
      if (sgn(U(b, j)) != 0) ring.add_mul(U(a, j), q, U(b, j));
  };
  auto add_col = [&](std::size_t a, std::size_t b, const Scalar& q) {
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(A(i, b)) != 0) ring.add_mul(A(i, a), q, A(i, b));
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(V(i, b)) != 0) ring.add_mul(V(i, a), q, V(i, b));
  };

  SmithForm s;
  const std::size_t lim = std::min(m, n);
  std::size_t t = 0;
  for (; t < lim; ++t) {
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(A(i, j)) != 0 && (bi == m || ring.norm_less(A(i, j), A(bi, bj)))) bi = i, bj = j;
    if (bi == m) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    while (true) {
      bool dirty = false;
      Scalar q, rem;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(A(i, t)) == 0) continue;
        ring.divmod(A(i, t), A(t, t), q, rem);
        add_row(i, t, ring.neg(q));
        if (sgn(rem) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(A(t, j)) == 0) continue;
        ring.divmod(A(t, j), A(t, t), q, rem);
        add_col(j, t, ring.neg(q));
        if (sgn(rem) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t pi = t, pj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(A(i, t)) != 0 && ring.norm_less(A(i, t), A(pi, pj))) pi = i, pj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(A(t, j)) != 0 && ring.norm_less(A(t, j), A(pi, pj))) pi = t, pj = j;
        swap_rows(t, pi);
        swap_cols(t, pj);
        continue;
      }
      // divisibility chain
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!ring.divides(A(t, t), A(i, j))) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row(t, bad, Scalar(1));
    }
    Scalar u = ring.unit_normalizer(A(t, t));
    if (u != 1) {
      for (std::size_t j = 0; j < n; ++j) A(t, j) = ring.mul(A(t, j), u);
      for (std::size_t j = 0; j < m; ++j) U(t, j) = ring.mul(U(t, j), u);
    }
  }
  s.rank = t;
  s.diagonal.resize(lim);
  for (std::size_t i = 0; i < lim; ++i) s.diagonal[i] = A(i, i);
  s.U = std::move(U);
  s.V = std::move(V);
  return s;
}

Matrix smith_diagonal_matrix(const SmithForm& s, std::size_t rows, std::size_t cols) {
  Matrix D(s.U.ring(), rows, cols);
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) D(i, i) = s.diagonal[i];
  return D;
}

Matrix kernel_basis(const Matrix& A) {
  const Ring& ring = A.ring();
  std::vector<Vector> rows;
  rows.reserve(A.cols());
  for (std::size_t j = 0; j < A.cols(); ++j) rows.push_back(A.column(j));
  Echelon e = row_echelon(ring, A.rows(), std::move(rows), true);
  std::vector<Vector> ker(e.transform.begin() + static_cast<long>(e.rank), e.transform.end());
  // canonical basis of the kernel lattice
  Span k = Span::generated_by(ring, A.cols(), std::move(ker));
  return k.basis_matrix();
}

std::optional<Vector> solve_combination(const Ring& ring, std::size_t ambient,
                                        const std::vector<Vector>& gens, const Vector& x) {
  Echelon e = row_echelon(ring, ambient, gens, true);
  Vector residual = x;
  Vector h(e.rank);
  Scalar q, rem;
  for (std::size_t i = 0; i < e.rank; ++i) {
    std::size_t c = e.pivots[i];
    if (sgn(residual[c]) == 0) continue;
    ring.divmod(residual[c], e.rows[i][c], q, rem);
    if (sgn(rem) != 0) return std::nullopt;
    h[i] = q;
    row_sub(ring, residual, e.rows[i], q, c);
  }
  if (!is_zero_vector(residual)) return std::nullopt;
  Vector coeffs(gens.size());
  for (std::size_t i = 0; i < e.rank; ++i)
    if (sgn(h[i]) != 0)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (sgn(e.transform[i][j]) != 0) ring.add_mul(coeffs[j], h[i], e.transform[i][j]);
  return coeffs;
}

std::optional<Vector> solve(const Matrix& A, const Vector& b) {
  return solve_combination(A.ring(), A.rows(), A.column_list(), b);
}

Matrix inverse(const Matrix& A) {
  if (A.rows() != A.cols()) throw Error("inverse of non-square matrix");
  const Ring& ring = A.ring();
  const std::size_t n = A.rows();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(A.row(i));
  Echelon e = row_echelon(ring, n, std::move(rows), true);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= e.rank || e.pivots[i] != i || e.rows[i][i] != 1) throw Error("matrix not invertible over " + ring.name());
  return Matrix::from_rows(ring, n, e.transform);
}

// ---------------------------------------------------------------------------

Span Span::full(Ring ring, std::size_t ambient) {
  Span s(ring, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v(ambient);
    v[i] = 1;
    s.rows_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Span Span::coordinate(Ring ring, std::size_t ambient, const std::vector<std::size_t>& idx) {
  std::vector<Vector> gens;
  for (std::size_t i : idx) {
    Vector v(ambient);
    v.at(i) = 1;
    gens.push_back(std::move(v));
  }
  return generated_by(ring, ambient, std::move(gens));
}

Span Span::generated_by(Ring ring, std::size_t ambient, std::vector<Vector> gens) {
  Span s(ring, ambient);
  for (const auto& g : gens)
    if (g.size() != ambient) throw Error("generator length does not match ambient rank");
  Echelon e = row_echelon(ring, ambient, std::move(gens), false);
  e.rows.resize(e.rank);
  s.rows_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Span Span::of_columns(const Matrix& gens) {
  return generated_by(gens.ring(), gens.rows(), gens.column_list());
}

bool Span::is_full() const {
  if (rows_.size() != ambient_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!ring_.is_unit(rows_[i][pivots_[i]])) return false;
  return true;
}

Matrix Span::basis_matrix() const { return Matrix::from_columns(ring_, ambient_, rows_); }

std::optional<Vector> Span::coordinates(const Vector& x) const {
  if (x.size() != ambient_) throw Error("vector length does not match ambient rank");
  Vector residual = x;
  Vector h(rows_.size());
  Scalar q, rem;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t c = pivots_[i];
    if (sgn(residual[c]) == 0) continue;
    ring_.divmod(residual[c], rows_[i][c], q, rem);
    if (sgn(rem) != 0) return std::nullopt;
    h[i] = q;
    row_sub(ring_, residual, rows_[i], q, c);
  }
  if (!is_zero_vector(residual)) return std::nullopt;
  return h;
}

bool Span::contains(const Vector& x) const { return coordinates(x).has_value(); }

bool Span::contains(const Span& o) const {
  for (const auto& v : o.rows_)
    if (!contains(v)) return false;
  return true;
}

Span Span::operator+(const Span& o) const {
  if (ambient_ != o.ambient_) throw Error("span ambient mismatch");
  if (o.rows_.empty()) return *this;
  if (rows_.empty()) return o;
  std::vector<Vector> gens = rows_;
  gens.insert(gens.end(), o.rows_.begin(), o.rows_.end());
  return generated_by(ring_, ambient_, std::move(gens));
}

Span Span::intersect(const Span& o) const {
  if (ambient_ != o.ambient_) throw Error("span ambient mismatch");
  if (rows_.empty() || o.rows_.empty()) return Span(ring_, ambient_);
  std::vector<Vector> gens = rows_;
  gens.insert(gens.end(), o.rows_.begin(), o.rows_.end());
  Echelon e = row_echelon(ring_, ambient_, std::move(gens), true);
  std::vector<Vector> out;
  for (std::size_t i = e.rank; i < e.transform.size(); ++i) {
    Vector v(ambient_);
    for (std::size_t j = 0; j < rows_.size(); ++j)
      if (sgn(e.transform[i][j]) != 0) row_sub(ring_, v, rows_[j], ring_.neg(e.transform[i][j]));
    out.push_back(std::move(v));
  }
  return generated_by(ring_, ambient_, std::move(out));
}

Span Span::image(const Matrix& f) const {
  if (f.cols() != ambient_) throw Error("map source does not match span ambient");
  std::vector<Vector> gens;
  gens.reserve(rows_.size());
  for (const auto& v : rows_) gens.push_back(f.apply(v));
  return generated_by(ring_, f.rows(), std::move(gens));
}

Span Span::preimage(const Matrix& f, const Span& target) const {
  if (f.cols() != ambient_ || f.rows() != target.ambient_) throw Error("preimage shape mismatch");
  if (rows_.empty()) return *this;
  std::vector<Vector> gens;
  for (const auto& v : rows_) gens.push_back(f.apply(v));
  gens.insert(gens.end(), target.rows_.begin(), target.rows_.end());
  Echelon e = row_echelon(ring_, f.rows(), std::move(gens), true);
  std::vector<Vector> out;
  for (std::size_t i = e.rank; i < e.transform.size(); ++i) {
    Vector v(ambient_);
    for (std::size_t j = 0; j < rows_.size(); ++j)
      if (sgn(e.transform[i][j]) != 0) row_sub(ring_, v, rows_[j], ring_.neg(e.transform[i][j]));
    out.push_back(std::move(v));
  }
  return generated_by(ring_, ambient_, std::move(out));
}

Span Span::saturation() const {
  if (ring_.is_field()) return *this;
  // annihilator of the annihilator
  Matrix L = Matrix::from_rows(ring_, ambient_, rows_);
  if (rows_.empty()) return *this;
  Matrix ann = kernel_basis(L);  // ambient x a, columns w with L w = 0
  return Span::of_columns(kernel_basis(ann.transpose()));
}

bool Span::is_saturated() const {
  if (ring_.is_field()) return true;
  return saturation() == *this;
}

std::string Span::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    os << (i ? ", " : "") << "(";
    for (std::size_t j = 0; j < ambient_; ++j) os << (j ? "," : "") << rows_[i][j].get_str();
    os << ")";
  }
  os << ">/" << ring_.name() << "^" << ambient_;
  return os.str();
}

// ---------------------------------------------------------------------------

FgModule FgModule::from_cyclic_orders(Ring ring, const std::vector<Scalar>& orders) {
  Matrix D(ring, orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) D(i, i) = ring.normalize(orders[i]);
  SmithForm s = smith_normal_form(D);
  FgModule m = zero(ring);
  for (const auto& d : s.diagonal) {
    if (sgn(d) == 0)
      ++m.free_rank;
    else if (!ring.is_unit(d))
      m.invariant_factors.push_back(d);
  }
  return m;
}

FgModule FgModule::direct_sum(const FgModule& o) const {
  if (ring != o.ring) throw Error("direct sum over different rings");
  std::vector<Scalar> orders = invariant_factors;
  orders.insert(orders.end(), o.invariant_factors.begin(), o.invariant_factors.end());
  orders.resize(orders.size() + free_rank + o.free_rank, Scalar(0));
  return from_cyclic_orders(ring, orders);
}

std::vector<Scalar> FgModule::moduli() const {
  std::vector<Scalar> m = invariant_factors;
  m.resize(m.size() + free_rank, Scalar(0));
  return m;
}

std::string FgModule::to_string() const {
  if (is_zero()) return "0";
  std::string base = ring.name();
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << base;
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& d : invariant_factors) {
    os << (first ? "" : "+") << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Subquotient::Subquotient(const Span& numerator, const Span& denominator)
    : ring_(numerator.ring()), total_(numerator + denominator), den_(denominator) {
  const std::size_t k = total_.rank();
  Matrix C(ring_, k, den_.rank());
  for (std::size_t j = 0; j < den_.rank(); ++j) {
    auto c = total_.coordinates(den_.basis()[j]);
    for (std::size_t i = 0; i < k; ++i) C(i, j) = (*c)[i];
  }
  SmithForm s = smith_normal_form(C);
  U_ = s.U;
  Matrix Uinv = inverse(U_);
  module_.ring = ring_;
  std::vector<Vector> lift_cols;
  for (std::size_t i = 0; i < k; ++i) {
    Scalar d = i < s.diagonal.size() ? s.diagonal[i] : Scalar(0);
    if (sgn(d) != 0 && ring_.is_unit(d)) continue;
    kept_.push_back(i);
    moduli_.push_back(d);
    if (sgn(d) == 0)
      ++module_.free_rank;
    else
      module_.invariant_factors.push_back(d);
    Vector x(total_.ambient());
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(Uinv(j, i)) != 0) row_sub(ring_, x, total_.basis()[j], ring_.neg(Uinv(j, i)));
    lifts_.push_back(std::move(x));
  }
  module_.generator_lift = Matrix::from_columns(ring_, total_.ambient(), lifts_);
}

std::optional<Vector> Subquotient::coordinates(const Vector& x) const {
  auto c = total_.coordinates(x);
  if (!c) return std::nullopt;
  Vector y = U_.apply(*c);
  Vector out(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) out[i] = ring_.reduce_mod(y[kept_[i]], moduli_[i]);
  return out;
}

Vector Subquotient::reduce(const Vector& coords) const {
  Vector out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out[i] = ring_.reduce_mod(coords[i], moduli_[i]);
  return out;
}

Vector Subquotient::lift_of(const Vector& coords) const {
  Vector x(total_.ambient());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0)
      for (std::size_t j = 0; j < x.size(); ++j)
        if (sgn(lifts_[i][j]) != 0) ring_.add_mul(x[j], coords[i], lifts_[i][j]);
  return x;
}

// ---------------------------------------------------------------------------

Span relation_span(const Ring& ring, const std::vector<Scalar>& moduli) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (sgn(moduli[i]) == 0) continue;
    Vector v(moduli.size());
    v[i] = moduli[i];
    gens.push_back(std::move(v));
  }
  return Span::generated_by(ring, moduli.size(), std::move(gens));
}

bool map_respects_relations(const Matrix& F, const std::vector<Scalar>& src,
                            const std::vector<Scalar>& tgt) {
  if (F.cols() != src.size() || F.rows() != tgt.size()) return false;
  Span rel = relation_span(F.ring(), tgt);
  return rel.contains(relation_span(F.ring(), src).image(F));
}

bool map_is_zero(const Matrix& F, const std::vector<Scalar>& tgt) {
  Span rel = relation_span(F.ring(), tgt);
  for (std::size_t j = 0; j < F.cols(); ++j)
    if (!rel.contains(F.column(j))) return false;
  return true;
}

Span map_kernel_span(const Matrix& F, const std::vector<Scalar>& src, const std::vector<Scalar>& tgt) {
  return Span::full(F.ring(), src.size()).preimage(F, relation_span(F.ring(), tgt));
}

FgModule map_kernel(const Matrix& F, const std::vector<Scalar>& src, const std::vector<Scalar>& tgt) {
  return Subquotient(map_kernel_span(F, src, tgt), relation_span(F.ring(), src)).module();
}

FgModule map_image(const Matrix& F, const std::vector<Scalar>& src, const std::vector<Scalar>& tgt) {
  Span rel = relation_span(F.ring(), tgt);
  return Subquotient(Span::full(F.ring(), src.size()).image(F) + rel, rel).module();
}

FgModule map_cokernel(const Matrix& F, const std::vector<Scalar>& src, const std::vector<Scalar>& tgt) {
  Span rel = relation_span(F.ring(), tgt);
  return Subquotient(Span::full(F.ring(), tgt.size()), Span::full(F.ring(), src.size()).image(F) + rel)
      .module();
}

FgModule map_homology(const Matrix& in, const Matrix& out, const std::vector<Scalar>& mid,
                      const std::vector<Scalar>& tgt) {
  const Ring& ring = out.ring();
  Span ker = Span::full(ring, mid.size()).preimage(out, relation_span(ring, tgt));
  Span im = Span::full(ring, in.cols()).image(in) + relation_span(ring, mid);
  return Subquotient(ker, im).module();
}

}  // namespace specseq
