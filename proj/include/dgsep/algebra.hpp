#pragma once

// Graded algebras given by structure constants, dg-algebras, and the
// operations on them that only involve the algebra itself: validation,
// homology, cycles, opposite algebra and graded commutativity.

#include <vector>

#include "dgsep/graded.hpp"
#include "dgsep/report.hpp"

namespace dgsep {

/// Graded algebra presented by a homogeneous basis and structure constants.
///
/// When the basis is periodic the formal unit z is the periodicity unit:
/// it is central and invertible, and (x z^a)(y z^b) = (xy) z^(a+b).
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  /// products[i][j] is the product of labels i and j. Throws FormatError on
  /// shape mismatches or out-of-range labels.
  GradedAlgebra(FieldSpec field, GradedBasis basis, std::vector<std::vector<GradedVector>> products,
                GradedVector unit);

  const FieldSpec& field() const { return field_; }
  const GradedBasis& basis() const { return basis_; }
  int size() const { return basis_.size(); }
  std::optional<int> period() const { return basis_.period(); }
  const GradedVector& unit() const { return unit_; }
  const GradedVector& product(int i, int j) const { return products_[i][j]; }

  /// The periodicity unit z as an element, if present.
  std::optional<GradedVector> periodUnit() const;

  GradedVector multiply(BasisKey a, BasisKey b) const {
    return products_[a.label][b.label].shifted(a.exponent + b.exponent);
  }
  GradedVector multiply(const GradedVector& a, const GradedVector& b) const;

  GradedVector scalar(const Scalar& c) const { return c.in(field_.characteristic) * unit_; }
  GradedVector element(BasisKey k) const { return GradedVector::unit(k, Scalar(1).in(field_.characteristic)); }

  /// x -> b x and x -> x b.
  BasisOp leftMultiplication(const GradedVector& b) const;
  BasisOp rightMultiplication(const GradedVector& b) const;

  friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

 private:
  FieldSpec field_;
  GradedBasis basis_;
  std::vector<std::vector<GradedVector>> products_;
  GradedVector unit_;
};

/// A graded algebra with a degree +1 differential, given on labels.
/// On z-shifted keys d(x z^e) = (-1)^(P e) d(x) z^e, i.e. z is a cycle.
class DgAlgebra {
 public:
  DgAlgebra() = default;
  DgAlgebra(GradedAlgebra algebra, std::vector<GradedVector> differential);
  /// Zero differential.
  explicit DgAlgebra(GradedAlgebra algebra);

  const GradedAlgebra& algebra() const { return algebra_; }
  const GradedBasis& basis() const { return algebra_.basis(); }
  const FieldSpec& field() const { return algebra_.field(); }
  const std::vector<GradedVector>& differentialOnLabels() const { return d_; }

  GradedVector d(BasisKey k) const;
  GradedVector d(const GradedVector& v) const;
  BasisOp differential() const {
    return [this](BasisKey k) { return d(k); };
  }
  GradedLinearMap differentialMap() const;
  bool hasZeroDifferential() const;

  friend bool operator==(const DgAlgebra&, const DgAlgebra&) = default;

 private:
  GradedAlgebra algebra_;
  std::vector<GradedVector> d_;
};

/// Exponents to try per key when checking sign-sensitive identities: with an
/// odd period, z changes degree parity, so both parities must be checked.
std::vector<int> parityExponents(const GradedBasis& basis);

ValidationReport validateAlgebra(const GradedAlgebra& alg);
ValidationReport validateDifferential(const DgAlgebra& dg);

struct HomologyTable {
  DegreeWindow window;
  std::vector<int> dimensions;       // dim H^n for n in window
  std::vector<int> cycleDimensions;  // dim ker d_n
  bool boundariesAreCycles = true;   // d_n d_(n-1) = 0 on the window
  bool acyclicOnWindow() const;
  int at(int n) const { return dimensions.at(n - window.lo); }
};

/// Default window: one fold for periodic algebras, the support otherwise.
HomologyTable homology(const DgAlgebra& dg, std::optional<DegreeWindow> window = std::nullopt);

/// Cycles as a graded algebra with its embedding into the ambient algebra.
struct CycleAlgebra {
  GradedAlgebra algebra;
  std::vector<GradedVector> inclusion;  // label of cycles -> element of ambient
  DegreeWindow window;

  GradedVector embed(const GradedVector& v) const;
};

/// Throws WindowTooSmall when a periodic window is shorter than one fold and
/// ClosureEscape when a product of window cycles falls outside the window.
CycleAlgebra cycles(const DgAlgebra& dg, std::optional<DegreeWindow> window = std::nullopt);

/// Coordinates of a homogeneous cycle of the ambient algebra in the cycle
/// presentation. Throws ClosureEscape if it is not a cycle or leaves the window.
GradedVector expressInCycles(const CycleAlgebra& cyc, const GradedBasis& ambient,
                             const GradedVector& v);

/// Opposite algebra a *op b = (-1)^(|a||b|) b a, same differential.
/// Throws ConsistencyError when the period is odd and char != 2, because z
/// stops being central in the opposite algebra.
DgAlgebra opposite(const DgAlgebra& dg);
GradedAlgebra opposite(const GradedAlgebra& alg);

bool isGradedCommutative(const GradedAlgebra& alg);
inline bool isGradedCommutative(const DgAlgebra& dg) { return isGradedCommutative(dg.algebra()); }

/// Equality of presentations up to label names.
bool samePresentation(const GradedAlgebra& a, const GradedAlgebra& b);

}  // namespace dgsep
