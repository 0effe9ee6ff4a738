#pragma once

// Exact scalars over Q and F_p.
//
// A Scalar carries its own characteristic so that Eigen containers can build
// zeros and ones without a context object. Characteristic 0 means "rational";
// a rational value meets an F_p value by reduction into F_p, which is how the
// literal zeros Eigen creates combine with residues.

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>
#include <Eigen/Core>

#include "dgsep/errors.hpp"

namespace dgsep {

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws FormatError unless p is prime.
  static FieldSpec primeField(std::uint32_t p);

  bool isRationals() const { return kind == FieldKind::Rationals; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool isPrime(std::uint64_t n);

class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }

  static Scalar residue(std::int64_t v, std::uint32_t p);
  /// Parses "a", "-a" or "a/b"; reduced into F_p when p > 0.
  static Scalar parse(const std::string& text, std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool isZero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool isOne() const { return p_ ? r_ == 1 : q_ == 1; }

  /// Rational value; only meaningful in characteristic 0.
  const mpq_class& rational() const { return q_; }
  /// Residue in [0, p); only meaningful in positive characteristic.
  std::int64_t residue() const { return r_; }

  Scalar inverse() const;
  /// Same value interpreted in characteristic p (p = 0 is the identity).
  Scalar in(std::uint32_t p) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  static std::uint32_t common(const Scalar& a, const Scalar& b);

  std::uint32_t p_ = 0;
  std::int64_t r_ = 0;
  mpq_class q_;
};

/// Immutable arithmetic context for one field.
class Field {
 public:
  explicit Field(FieldSpec spec) : spec_(spec) {}

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.characteristic; }

  Scalar zero() const { return Scalar(0).in(spec_.characteristic); }
  Scalar one() const { return Scalar(1).in(spec_.characteristic); }
  Scalar fromInt(long v) const { return Scalar(v).in(spec_.characteristic); }
  Scalar fromRational(long num, long den) const;
  Scalar parse(const std::string& text) const {
    return Scalar::parse(text, spec_.characteristic);
  }

  Scalar add(const Scalar& a, const Scalar& b) const { return (a + b).in(characteristic()); }
  Scalar negate(const Scalar& a) const { return (-a).in(characteristic()); }
  Scalar multiply(const Scalar& a, const Scalar& b) const { return (a * b).in(characteristic()); }
  Scalar invert(const Scalar& a) const { return a.in(characteristic()).inverse(); }
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  FieldSpec spec_;
};

/// True iff n * 1 is nonzero in the field.
bool characteristicIsInvertible(const FieldSpec& spec, long n);

}  // namespace dgsep

namespace Eigen {
template <>
struct NumTraits<dgsep::Scalar> : GenericNumTraits<dgsep::Scalar> {
  using Real = dgsep::Scalar;
  using NonInteger = dgsep::Scalar;
  using Literal = dgsep::Scalar;
  using Nested = dgsep::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
