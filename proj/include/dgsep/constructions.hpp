#pragma once

// Builders for the algebras the toolkit studies, dg-extensions with a left
// module basis, and the tensor bimodule B (x)_A B in left-basis coordinates.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dgsep/algebra.hpp"

namespace dgsep {

/// K concentrated in degree 0.
GradedAlgebra groundField(const FieldSpec& field);

/// K[X, X^-1] with |X| = degree, presented on the basis {1} with X as the
/// periodicity unit.
GradedAlgebra laurentPolynomials(const FieldSpec& field, int degree);

/// F_p[u]/(f) for a monic irreducible f, in degree 0. `coefficients` lists
/// f_0 .. f_(m-1) of f = u^m + f_(m-1) u^(m-1) + ... + f_0.
/// Throws ConsistencyError when f is reducible.
GradedAlgebra finiteFieldExtension(std::uint32_t p, const std::vector<long>& coefficients,
                                   const std::string& generator = "u");

/// Images of the basis under x -> x^p for an algebra over F_p.
std::vector<GradedVector> frobenius(const GradedAlgebra& alg);

struct TwistedLaurentSpec {
  GradedAlgebra coefficients;              // R0: a field, degree 0, no period
  std::vector<GradedVector> automorphism;  // phi on the labels of R0
  int order = 1;                           // declared m with phi^m = id
  int generatorDegree = 1;
  std::string generator = "X";
};

/// R0[X, X^-1; phi] with X r = phi(r) X. Basis r * X^j for 0 <= j < m;
/// X^m is the periodicity unit. Throws AutomorphismOrderError when
/// phi^m != id and ConsistencyError when phi is not a ring automorphism.
GradedAlgebra twistedLaurent(const TwistedLaurentSpec& spec);

struct AcyclicDivisionSpec {
  GradedAlgebra cycles;               // C, a graded division algebra
  std::vector<GradedVector> derivation;  // D on the labels of C, degree -1
  GradedVector ySquared;              // w in C of degree -2
  std::string generator = "y";
};

/// C (+) yC with y^2 = w, y a = (-1)^|a| a y + D(a) and d(b + y a) = a.
/// Throws ConsistencyError if D is not a derivation, D(w) != 0,
/// D^2 != [w, -], or the periodicity unit of C fails to be central.
DgAlgebra acyclicDivisionFromCycles(const AcyclicDivisionSpec& spec);
ValidationReport checkAcyclicDivisionSpec(const AcyclicDivisionSpec& spec);

/// K[X]/X^2 with |X| = -1 and d(X) = 1.
DgAlgebra dualNumbers(const FieldSpec& field);

/// A degree-0 unital map of dg-algebras with a declared left basis of the
/// target over the source.
///
/// The map is given on source labels; on the periodicity unit it is
/// phi(z_A) = z_B^periodPower.
class DgExtension {
 public:
  DgExtension() = default;
  DgExtension(DgAlgebra source, DgAlgebra target, std::vector<GradedVector> map, int periodPower,
              std::vector<GradedVector> leftBasis);

  const DgAlgebra& source() const { return *source_; }
  const DgAlgebra& target() const { return *target_; }
  const std::vector<GradedVector>& mapOnLabels() const { return map_; }
  int periodPower() const { return periodPower_; }
  const std::vector<GradedVector>& leftBasis() const { return leftBasis_; }
  int rank() const { return static_cast<int>(leftBasis_.size()); }
  int leftBasisDegree(int t) const { return leftDegrees_.at(t); }

  GradedVector apply(BasisKey k) const;
  GradedVector apply(const GradedVector& v) const;

  /// Window on which degree-wise statements repeat: one fold of the
  /// source period, or the union of supports when nothing is periodic.
  DegreeWindow freenessWindow() const;

  /// Unique a_s with u = sum_s phi(a_s) m_s. Throws FreenessError.
  std::vector<GradedVector> decompose(const GradedVector& u) const;
  /// Throws FreenessError unless coordinates in degree n are unique.
  void checkFreeness(int degree) const { decompositionInverse(degree); }

 private:
  const Matrix& decompositionInverse(int degree) const;
  std::vector<std::pair<int, BasisKey>> decompositionColumns(int degree) const;

  std::shared_ptr<const DgAlgebra> source_;
  std::shared_ptr<const DgAlgebra> target_;
  std::vector<GradedVector> map_;
  int periodPower_ = 0;
  std::vector<GradedVector> leftBasis_;
  std::vector<int> leftDegrees_;

  struct Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const Matrix>> inverses;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Checks unitality, multiplicativity, compatibility with differentials and
/// freeness of the left basis on freenessWindow().
ValidationReport validateExtension(const DgExtension& ext);

DgExtension identityExtension(const DgAlgebra& alg);
/// (K, 0) -> B for a non-periodic B, with the given left (vector space) basis.
DgExtension groundFieldExtension(const DgAlgebra& target, std::vector<GradedVector> leftBasis);

/// B (x)_A B as (+)_t B (x) m_t.
///
/// Its basis has one label per (slot t, target label i), written "i|t", of
/// degree |i| + |m_t|, so tensor elements are ordinary GradedVectors with
/// the target's periodicity unit acting on the left factor.
class TensorBimodule {
 public:
  explicit TensorBimodule(DgExtension ext);

  const DgExtension& extension() const { return ext_; }
  const GradedBasis& basis() const { return basis_; }
  const GradedAlgebra& targetAlgebra() const { return ext_.target().algebra(); }

  int slotOf(BasisKey k) const { return k.label / nTarget_; }
  BasisKey leftFactor(BasisKey k) const { return {k.label % nTarget_, k.exponent}; }

  /// x (x) m_t.
  GradedVector pure(const GradedVector& x, int t) const;
  /// The coefficient x_t of m_t.
  GradedVector slot(const GradedVector& v, int t) const;

  GradedVector differential(BasisKey k) const;
  GradedVector differential(const GradedVector& v) const;
  GradedVector leftAction(const GradedVector& b, const GradedVector& v) const;
  GradedVector rightAction(const GradedVector& v, const GradedVector& b) const;
  GradedVector multiply(BasisKey k) const;
  GradedVector multiply(const GradedVector& v) const;

  BasisOp differentialOp() const;
  BasisOp multiplicationOp() const;
  /// v -> b v - v b.
  BasisOp commutatorOp(const GradedVector& b) const;

 private:
  DgExtension ext_;
  GradedBasis basis_;
  int nTarget_ = 0;
  std::vector<std::vector<GradedVector>> dLeftBasis_;  // decomposition of d(m_t)
};

/// mu : B (x)_A B -> B as a degree-0 map.
GradedLinearMap multiplicationMap(const TensorBimodule& t);

/// The extension of cycle algebras ker(d_A) -> ker(d_B), with a left basis
/// chosen greedily among homogeneous cycles. Throws FreenessError when the
/// greedy choice is not a basis.
struct CycleExtension {
  CycleAlgebra sourceCycles;
  CycleAlgebra targetCycles;
  DgExtension extension;  // (ker d_A, 0) -> (ker d_B, 0)
  ValidationReport report;
};
CycleExtension cycleExtension(const DgExtension& ext);

/// Upsilon : ker(d_B) (x)_{ker(d_A)} ker(d_B) -> B (x)_A B.
struct CycleTensorInclusion {
  std::shared_ptr<const CycleExtension> cycles;
  std::shared_ptr<const TensorBimodule> cycleTensor;
  std::shared_ptr<const TensorBimodule> tensor;

  GradedVector apply(const GradedVector& v) const;
  Matrix block(int n) const;
  bool injectiveOn(const DegreeWindow& w) const;
  DegreeWindow window() const;
};
CycleTensorInclusion cycleTensorInclusion(const DgExtension& ext);

}  // namespace dgsep
