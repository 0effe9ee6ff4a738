#pragma once

// Graded vector spaces that are free over a formal central periodicity unit.
//
// A GradedBasis lists labels with degrees. When a period P is present, the
// space is spanned by label * z^e for all integers e, where z is a formal unit
// of degree P; every degree component is then finite. Elements are sparse
// maps from (label, exponent) to scalars.

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgsep/linear.hpp"

namespace dgsep {

struct BasisKey {
  int label = 0;
  int exponent = 0;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// (-1)^n as a scalar.
inline Scalar signOf(long n) { return (n % 2 == 0) ? Scalar(1) : Scalar(-1); }

/// Inclusive degree range.
struct DegreeWindow {
  int lo = 0;
  int hi = 0;
  int size() const { return hi - lo + 1; }
  bool contains(int n) const { return lo <= n && n <= hi; }
  friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(std::vector<std::string> labels, std::vector<int> degrees,
              std::optional<int> period = std::nullopt);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  int degree(int i) const { return degrees_.at(i); }
  const std::vector<int>& degrees() const { return degrees_; }
  std::optional<int> period() const { return period_; }
  bool isPeriodic() const { return period_.has_value(); }

  /// Throws FormatError for unknown labels.
  int indexOf(const std::string& label) const;
  std::optional<int> find(const std::string& label) const;

  int degreeOf(BasisKey k) const { return degrees_.at(k.label) + period_.value_or(0) * k.exponent; }

  /// Ordered (label, exponent) pairs spanning degree n.
  std::vector<BasisKey> component(int n) const;
  int dimension(int n) const { return static_cast<int>(component(n).size()); }

  /// Smallest window carrying every label at exponent 0.
  DegreeWindow support() const;
  /// The window [lo, lo + |P| - 1]; degrees outside repeat with period P.
  DegreeWindow fold(int lo = 0) const;
  /// One fold for periodic bases, the support otherwise.
  DegreeWindow naturalWindow() const;

  std::string keyName(BasisKey k) const;

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::optional<int> period_;
};

class GradedVector {
 public:
  using Terms = std::map<BasisKey, Scalar>;

  GradedVector() = default;
  static GradedVector unit(BasisKey k, const Scalar& c = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Scalar coefficient(BasisKey k) const;

  void add(BasisKey k, const Scalar& c);
  GradedVector& operator+=(const GradedVector& o);
  GradedVector& operator-=(const GradedVector& o);
  GradedVector& operator*=(const Scalar& c);
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
  friend GradedVector operator*(const Scalar& c, GradedVector v) { return v *= c; }
  GradedVector operator-() const;

  /// Multiplies by z^e.
  GradedVector shifted(int e) const;

  /// Degree of a nonzero homogeneous vector; nullopt for zero.
  /// Throws Error when the vector is not homogeneous.
  std::optional<int> degree(const GradedBasis& basis) const;
  bool isHomogeneous(const GradedBasis& basis) const;

  std::string str(const GradedBasis& basis) const;

  friend bool operator==(const GradedVector&, const GradedVector&) = default;

 private:
  Terms terms_;
};

/// Koszul-compatible extension of a map of the given degree from labels to
/// label * z^e: f(x z^e) = (-1)^(degree * P * e) f(x) z^e.
GradedVector koszulShift(const GradedVector& image, int exponent, int mapDegree,
                         std::optional<int> period);

/// Coordinates in the given component. Throws Error if v has terms outside it.
Vector coordinates(const GradedVector& v, const std::vector<BasisKey>& component);
GradedVector fromCoordinates(const Eigen::Ref<const Vector>& x,
                             const std::vector<BasisKey>& component);

using BasisOp = std::function<GradedVector(BasisKey)>;

/// Degree-k linear map between graded spaces, given by its value on
/// (label, exponent) keys.
class GradedLinearMap {
 public:
  GradedLinearMap(GradedBasis source, GradedBasis target, int degree, BasisOp onBasis)
      : source_(std::move(source)), target_(std::move(target)), degree_(degree),
        onBasis_(std::move(onBasis)) {}

  int degree() const { return degree_; }
  const GradedBasis& source() const { return source_; }
  const GradedBasis& target() const { return target_; }

  GradedVector operator()(BasisKey k) const { return onBasis_(k); }
  GradedVector apply(const GradedVector& v) const;

  /// Matrix from the degree-n component to the degree-(n + degree) component.
  Matrix block(int n) const;

 private:
  GradedBasis source_;
  GradedBasis target_;
  int degree_;
  BasisOp onBasis_;
};

/// Applies a linear operation defined on keys to an arbitrary vector.
GradedVector applyLinear(const BasisOp& op, const GradedVector& v);

/// Matrix of op from src.component(n) to dst.component(n + k).
Matrix blockMatrix(const GradedBasis& src, const GradedBasis& dst, int n, int k,
                   const BasisOp& op);

/// A linear system a x = b equivalent to residual(x) = 0, for a residual
/// that is affine in x in K^unknowns. Each residual entry is a sparse
/// vector; rows are the (entry, key) pairs that occur.
struct AffineSystem {
  Matrix a;
  Vector b;
};
AffineSystem linearize(int unknowns, const std::function<std::vector<GradedVector>(const Vector&)>& residual,
                       std::uint32_t characteristic);

/// floor(a / b) for b > 0.
inline int floorDiv(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace dgsep
