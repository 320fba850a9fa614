#include "specseq/ring.hpp"

#include <cctype>

namespace specseq {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw Error("F_p requires a prime p, got " + std::to_string(p));
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::parse(const std::string& name, std::uint32_t p) {
  if (name == "Z" || name == "integers") return integers();
  if (name == "Q" || name == "rationals") return rationals();
  if (name == "prime_field") return prime_field(p);
  std::string digits;
  if (name.rfind("F_", 0) == 0)
    digits = name.substr(2);
  else if (name.rfind("F", 0) == 0)
    digits = name.substr(1);
  if (!digits.empty()) {
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("unknown ring: " + name);
    return prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw Error("unknown ring: " + name);
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "F_" + std::to_string(p_);
  }
  return "?";
}

void Ring::reduce_fp(Scalar& x) const {
  mpz_fdiv_r_ui(x.get_num_mpz_t(), x.get_num_mpz_t(), p_);
}

Scalar Ring::from_int(long v) const { return normalize(Scalar(v)); }

Scalar Ring::parse_scalar(const std::string& text) const {
  Scalar x;
  try {
    x = Scalar(text, 10);
  } catch (const std::invalid_argument&) {
    throw Error("not a number: '" + text + "'");
  }
  if (x.get_den() == 0) throw Error("zero denominator: '" + text + "'");
  x.canonicalize();
  return normalize(x);
}

Scalar Ring::normalize(const Scalar& x) const {
  switch (kind_) {
    case RingKind::Rationals: return x;
    case RingKind::Integers:
      if (x.get_den() != 1) throw Error("non-integer entry " + x.get_str() + " over Z");
      return x;
    case RingKind::PrimeField: {
      mpz_class num = x.get_num(), den = x.get_den();
      if (den != 1) {
        mpz_class inv;
        den %= p_;
        if (den < 0) den += p_;
        if (den == 0 || mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
          throw Error("denominator of " + x.get_str() + " not invertible in F_" + std::to_string(p_));
        num *= inv;
      }
      Scalar r(num);
      reduce_fp(r);
      return r;
    }
  }
  return x;
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (kind_ == RingKind::PrimeField) reduce_fp(r);
  return r;
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (kind_ == RingKind::PrimeField) reduce_fp(r);
  return r;
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  Scalar r = a * b;
  if (kind_ == RingKind::PrimeField) reduce_fp(r);
  return r;
}

Scalar Ring::neg(const Scalar& a) const {
  Scalar r = -a;
  if (kind_ == RingKind::PrimeField) reduce_fp(r);
  return r;
}

void Ring::add_mul(Scalar& a, const Scalar& b, const Scalar& c) const {
  if (kind_ == RingKind::Rationals) {
    a += b * c;
    return;
  }
  // integral fast path: avoid mpq canonicalisation
  mpz_addmul(a.get_num_mpz_t(), b.get_num_mpz_t(), c.get_num_mpz_t());
  if (kind_ == RingKind::PrimeField) reduce_fp(a);
}

bool Ring::is_unit(const Scalar& a) const {
  if (kind_ == RingKind::Integers) return a == 1 || a == -1;
  return sgn(a) != 0;
}

Scalar Ring::inverse(const Scalar& unit) const {
  if (!is_unit(unit)) throw Error("inverse of non-unit " + unit.get_str());
  if (kind_ == RingKind::PrimeField) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), unit.get_num_mpz_t(), mpz_class(p_).get_mpz_t());
    return Scalar(inv);
  }
  return Scalar(1) / unit;
}

void Ring::divmod(const Scalar& a, const Scalar& b, Scalar& q, Scalar& r) const {
  if (sgn(b) == 0) throw Error("division by zero");
  if (kind_ == RingKind::Integers) {
    mpz_class qq, rr;
    mpz_fdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    q = Scalar(qq);
    r = Scalar(rr);
    return;
  }
  q = mul(a, inverse(b));
  r = 0;
}

bool Ring::norm_less(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::Integers) return mpz_cmpabs(a.get_num_mpz_t(), b.get_num_mpz_t()) < 0;
  return sgn(a) == 0 && sgn(b) != 0;
}

Scalar Ring::unit_normalizer(const Scalar& a) const {
  if (sgn(a) == 0) return Scalar(1);
  if (kind_ == RingKind::Integers) return Scalar(sgn(a) < 0 ? -1 : 1);
  return inverse(a);
}

Scalar Ring::reduce_mod(const Scalar& a, const Scalar& d) const {
  if (sgn(d) == 0) return a;
  if (kind_ == RingKind::Integers) {
    mpz_class rr;
    mpz_fdiv_r(rr.get_mpz_t(), a.get_num_mpz_t(), d.get_num_mpz_t());
    if (sgn(rr) < 0) rr += abs(d.get_num());
    return Scalar(rr);
  }
  return Scalar(0);  // d is a unit
}

bool Ring::divides(const Scalar& d, const Scalar& a) const {
  if (sgn(d) == 0) return sgn(a) == 0;
  if (kind_ == RingKind::Integers) return mpz_divisible_p(a.get_num_mpz_t(), d.get_num_mpz_t()) != 0;
  return true;
}

Scalar Ring::gcd(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::Integers) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    return Scalar(g);
  }
  return Scalar(sgn(a) == 0 && sgn(b) == 0 ? 0 : 1);
}

std::string scalar_to_string(const Scalar& x) { return x.get_str(); }

}  // namespace specseq
