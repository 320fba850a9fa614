#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specseq/matrix.hpp"

namespace specseq {

// ---------------------------------------------------------------------------
// Normal forms.  Every ring is handled as a Euclidean domain; over a field the
// outputs degenerate to RREF and diag(1,...,1,0,...).

struct Echelon {
  std::vector<Vector> rows;          // all k rows, the nonzero ones first
  std::vector<Vector> transform;     // U with U * G = rows (k x k), empty unless requested
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank = 0;
};

// Canonical row echelon form of the rows of G: Hermite normal form over Z
// (positive pivots, entries above a pivot in [0, pivot)), RREF over fields.
Echelon row_echelon(const Ring& ring, std::size_t width, std::vector<Vector> rows,
                    bool with_transform);

struct SmithForm {
  Matrix U, V;                     // U * A * V == D
  std::vector<Scalar> diagonal;    // length min(rows, cols), divisibility chain
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const Matrix& A);
Matrix smith_diagonal_matrix(const SmithForm& s, std::size_t rows, std::size_t cols);

// Basis (as columns) of {x : A x = 0}; always saturated.
Matrix kernel_basis(const Matrix& A);
// Some x with A x = b, if one exists.
std::optional<Vector> solve(const Matrix& A, const Vector& b);
// Inverse of a square matrix invertible over the ring.
Matrix inverse(const Matrix& A);

// ---------------------------------------------------------------------------
// Submodule of R^m, stored by its canonical echelon basis so that equality is
// literal comparison.

class Span {
 public:
  Span() = default;
  Span(Ring ring, std::size_t ambient) : ring_(ring), ambient_(ambient) {}

  static Span full(Ring ring, std::size_t ambient);
  static Span generated_by(Ring ring, std::size_t ambient, std::vector<Vector> gens);
  static Span of_columns(const Matrix& gens);
  static Span coordinate(Ring ring, std::size_t ambient, const std::vector<std::size_t>& idx);

  const Ring& ring() const { return ring_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const;
  const std::vector<Vector>& basis() const { return rows_; }
  Matrix basis_matrix() const;  // ambient x rank, basis vectors as columns

  bool contains(const Vector& x) const;
  bool contains(const Span& other) const;
  // Coefficients on basis() expressing x, if x lies in the span.
  std::optional<Vector> coordinates(const Vector& x) const;

  Span operator+(const Span& other) const;
  Span intersect(const Span& other) const;
  Span image(const Matrix& f) const;
  // {x in *this : f x in target}
  Span preimage(const Matrix& f, const Span& target) const;
  Span saturation() const;
  bool is_saturated() const;

  bool operator==(const Span& o) const {
    return ring_ == o.ring_ && ambient_ == o.ambient_ && rows_ == o.rows_;
  }
  bool operator!=(const Span& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

// Coefficients c with sum_j c_j gens[j] == x, if any.
std::optional<Vector> solve_combination(const Ring& ring, std::size_t ambient,
                                        const std::vector<Vector>& gens, const Vector& x);

// ---------------------------------------------------------------------------
// Finitely generated modules.

struct FgModule {
  Ring ring;
  std::size_t free_rank = 0;
  std::vector<Scalar> invariant_factors;  // non-units, ascending divisibility chain
  std::optional<Matrix> generator_lift;   // torsion generators first, then free

  static FgModule zero(Ring ring) { return FgModule{ring, 0, {}, std::nullopt}; }
  static FgModule free(Ring ring, std::size_t rank) { return FgModule{ring, rank, {}, std::nullopt}; }
  // Direct sum of cyclic modules R/(o_i); o_i == 0 gives a free summand.
  static FgModule from_cyclic_orders(Ring ring, const std::vector<Scalar>& orders);

  bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }
  std::size_t generators() const { return free_rank + invariant_factors.size(); }
  bool isomorphic(const FgModule& o) const {
    return ring == o.ring && free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }
  FgModule direct_sum(const FgModule& o) const;
  // Orders of the cyclic summands in generator order (torsion first, 0 for free).
  std::vector<Scalar> moduli() const;
  std::string to_string() const;
};

// (N + D) / D inside R^m together with a coordinate map onto the reduced
// generators of the quotient.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(const Span& numerator, const Span& denominator);

  const Span& numerator() const { return total_; }  // N + D
  const Span& denominator() const { return den_; }
  const FgModule& module() const { return module_; }
  std::size_t generators() const { return moduli_.size(); }
  const std::vector<Scalar>& moduli() const { return moduli_; }
  const Vector& lift(std::size_t i) const { return lifts_[i]; }

  // Reduced coordinates of the class of x; nullopt if x is not in N + D.
  std::optional<Vector> coordinates(const Vector& x) const;
  Vector reduce(const Vector& coords) const;
  Vector lift_of(const Vector& coords) const;

 private:
  Ring ring_;
  Span total_, den_;
  Matrix U_;                        // y = U c
  std::vector<std::size_t> kept_;   // indices of non-unit components of y
  std::vector<Scalar> moduli_;
  std::vector<Vector> lifts_;
  FgModule module_;
};

// Maps between coordinate modules R^a / diag(moduli).  A matrix F (b x a)
// represents a homomorphism when it respects relations.
Span relation_span(const Ring& ring, const std::vector<Scalar>& moduli);
bool map_respects_relations(const Matrix& F, const std::vector<Scalar>& src,
                            const std::vector<Scalar>& tgt);
bool map_is_zero(const Matrix& F, const std::vector<Scalar>& tgt);
FgModule map_kernel(const Matrix& F, const std::vector<Scalar>& src, const std::vector<Scalar>& tgt);
FgModule map_image(const Matrix& F, const std::vector<Scalar>& src, const std::vector<Scalar>& tgt);
FgModule map_cokernel(const Matrix& F, const std::vector<Scalar>& src, const std::vector<Scalar>& tgt);
// Kernel lattice in R^a (contains the source relations).
Span map_kernel_span(const Matrix& F, const std::vector<Scalar>& src, const std::vector<Scalar>& tgt);
// ker(out) / im(in) at the middle module.
FgModule map_homology(const Matrix& in, const Matrix& out, const std::vector<Scalar>& mid,
                      const std::vector<Scalar>& tgt);

}  // namespace specseq
