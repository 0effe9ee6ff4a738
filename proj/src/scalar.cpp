#include "dgsep/scalar.hpp"

#include <ostream>

namespace dgsep {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::primeField(std::uint32_t p) {
  if (!isPrime(p)) throw FormatError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw FormatError("characteristic must be below 2^31");
  return {FieldKind::PrimeField, p};
}

std::string FieldSpec::name() const {
  return isRationals() ? "Q" : "F" + std::to_string(characteristic);
}

namespace {

std::int64_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t modInverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return t < 0 ? t + p : t;
}

}  // namespace

Scalar Scalar::residue(std::int64_t v, std::uint32_t p) {
  Scalar s;
  if (p == 0) {
    s.q_ = mpq_class(static_cast<long>(v));
    return s;
  }
  s.p_ = p;
  s.r_ = ((v % p) + p) % p;
  return s;
}

Scalar Scalar::parse(const std::string& text, std::uint32_t p) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw FormatError("bad scalar literal '" + text + "'");
  if (q.get_den() == 0) throw DivisionByZero();
  return Scalar(q).in(p);
}

Scalar Scalar::in(std::uint32_t p) const {
  if (p == p_ || p == 0) return *this;
  if (p_ != 0) throw Error("scalars of different characteristics mixed");
  std::int64_t den = reduce(q_.get_den(), p);
  if (den == 0) throw DivisionByZero();
  return residue(reduce(q_.get_num(), p) * modInverse(den, p) % p, p);
}

std::uint32_t Scalar::common(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_;
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0) return a.p_;
  throw Error("scalars of different characteristics mixed");
}

Scalar Scalar::inverse() const {
  if (isZero()) throw DivisionByZero();
  if (p_) return residue(modInverse(r_, p_), p_);
  return Scalar(mpq_class(1) / q_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = common(*this, o);
  if (p == 0) {
    q_ += o.q_;
    return *this;
  }
  *this = in(p);
  r_ = (r_ + o.in(p).r_) % p;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = common(*this, o);
  if (p == 0) {
    q_ *= o.q_;
    return *this;
  }
  *this = in(p);
  r_ = (r_ * o.in(p).r_) % p;
  return *this;
}

Scalar Scalar::operator-() const {
  if (p_) return residue(p_ - r_, p_);
  Scalar s;
  s.q_ = -q_;
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common(a, b);
  if (p == 0) return a.q_ == b.q_;
  return a.in(p).r_ == b.in(p).r_;
}

std::string Scalar::str() const { return p_ ? std::to_string(r_) : q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar Field::fromRational(long num, long den) const {
  if (den == 0) throw DivisionByZero();
  return Scalar(mpq_class(num, den)).in(characteristic());
}

bool characteristicIsInvertible(const FieldSpec& spec, long n) {
  if (n < 1) throw Error("characteristicIsInvertible expects n >= 1");
  return spec.isRationals() || n % static_cast<long>(spec.characteristic) != 0;
}

}  // namespace dgsep
