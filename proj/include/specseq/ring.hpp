#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace specseq {

// All coefficients are stored as GMP rationals. Over Z and F_p the
// denominator is always 1 and F_p values live in [0, p).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RingKind { Integers, Rationals, PrimeField };

class Ring {
 public:
  Ring() = default;

  static Ring integers() { return Ring(RingKind::Integers, 0); }
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  static Ring prime_field(std::uint32_t p);
  // Accepts "Z", "Q", "F_p"/"Fp" and the long names used in files.
  static Ring parse(const std::string& name, std::uint32_t p = 0);

  RingKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  std::string name() const;

  bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  Scalar from_int(long v) const;
  Scalar parse_scalar(const std::string& text) const;
  // Brings an arbitrary rational into canonical form; throws if it is not an
  // element of the ring (non-integers over Z, p | denominator over F_p).
  Scalar normalize(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // a += b * c
  void add_mul(Scalar& a, const Scalar& b, const Scalar& c) const;

  bool is_unit(const Scalar& a) const;
  Scalar inverse(const Scalar& unit) const;
  // Euclidean division a = q*b + r with r "smaller" than b; exact over fields.
  void divmod(const Scalar& a, const Scalar& b, Scalar& q, Scalar& r) const;
  // Euclidean norm comparison used for pivot choice.
  bool norm_less(const Scalar& a, const Scalar& b) const;
  // Unit u such that u*a is the canonical associate of a (positive over Z, 1 over fields).
  Scalar unit_normalizer(const Scalar& a) const;
  // Canonical representative of a modulo the ideal (d); d == 0 means no reduction.
  Scalar reduce_mod(const Scalar& a, const Scalar& d) const;
  bool divides(const Scalar& d, const Scalar& a) const;
  Scalar gcd(const Scalar& a, const Scalar& b) const;

 private:
  Ring(RingKind k, std::uint32_t p) : kind_(k), p_(p) {}
  void reduce_fp(Scalar& x) const;

  RingKind kind_ = RingKind::Integers;
  std::uint32_t p_ = 0;
};

std::string scalar_to_string(const Scalar& x);

}  // namespace specseq
