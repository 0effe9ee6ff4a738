#pragma once

// Decision procedures for dg-separability and for (dg-)division algebras.

#include <optional>
#include <string>
#include <vector>

#include "dgsep/constructions.hpp"

namespace dgsep {

/// Homogeneous elements of the target whose centrality implies centrality
/// for all of B: the left basis, the images of the source labels, and the
/// periodicity unit of the target when present.
std::vector<GradedVector> defaultGenerators(const DgExtension& ext);

struct CasimirCertificate {
  GradedVector omega;  // degree 0 in TensorBimodule(ext).basis()
  std::vector<GradedVector> generators;
  ValidationReport witnesses;
};

/// Infeasibility of the degree-0 system: the homogeneous constraints
/// (cycle, central) cut out a space on which mu cannot reach 1.
struct NotSeparable {
  int tensorDimension = 0;       // dim (B (x)_A B)_0
  int constraintRows = 0;
  int constraintRank = 0;        // rank of the homogeneous constraints
  int augmentedRank = 0;         // rank once mu(omega) = 1 is appended
  int centralCycleDimension = 0;
  std::string transcript;
};

struct CasimirResult {
  std::optional<CasimirCertificate> certificate;
  std::optional<NotSeparable> refutation;
  bool separable() const { return certificate.has_value(); }
};

CasimirResult findCasimir(const DgExtension& ext,
                          std::optional<std::vector<GradedVector>> generators = std::nullopt);

/// Re-checks d(omega) = 0, mu(omega) = 1 and b omega = omega b for every
/// generator, without using the solver.
ValidationReport verifyCasimir(const DgExtension& ext, const GradedVector& omega,
                               std::optional<std::vector<GradedVector>> generators = std::nullopt);

/// Restriction of phi to cycles; see cycleExtension.
inline CycleExtension inducedCycleExtension(const DgExtension& ext) { return cycleExtension(ext); }

enum class GrDivisionVerdict { NotGrDivision, FieldConcentratedDegree0, LaurentOverField };
std::string to_string(GrDivisionVerdict v);

struct GrDivisionClassification {
  GrDivisionVerdict verdict = GrDivisionVerdict::NotGrDivision;
  int generatorDegree = 0;  // d with supported degrees dZ; 0 for a field
  int baseDimension = 0;    // dim_K of the degree-0 component
  std::string baseField;
  std::string reason;       // why it is not gr-division
  DegreeWindow window;

  bool isGrDivision() const { return verdict != GrDivisionVerdict::NotGrDivision; }
};

/// Throws HypothesisUnverified for non graded-commutative input or when the
/// degree-0 component over Q has dimension > 1 with all basis elements
/// invertible; WindowTooSmall when the window misses two periods or the support.
GrDivisionClassification classifyGrDivision(const GradedAlgebra& alg,
                                            std::optional<DegreeWindow> window = std::nullopt);

/// Whether F_p-algebra alg in degree 0 is a field, by exhaustive search.
/// Returns the first zero divisor found when it is not.
std::optional<GradedVector> degreeZeroZeroDivisor(const GradedAlgebra& alg);

struct DgDivisionResult {
  bool division = false;
  CycleAlgebra cycles;
  GrDivisionClassification classification;
};

/// Classifies the cycle algebra. Throws HypothesisUnverified when the
/// cycles are not graded-commutative.
DgDivisionResult isDgDivision(const DgAlgebra& dg);

enum class Prediction { Separable, NotSeparable, TheoremSilent };
std::string to_string(Prediction p);

struct TheoremCheck {
  std::string branch;
  Prediction predicted = Prediction::TheoremSilent;
  CasimirResult computed;
  std::vector<std::string> notes;

  bool mismatch() const {
    if (predicted == Prediction::TheoremSilent) return false;
    return (predicted == Prediction::Separable) != computed.separable();
  }
  /// SEPARABLE, NOT_SEPARABLE or THEOREM_SILENT.
  std::string verdict() const;
};

/// Compares the verdict predicted for graded-commutative dg-division rings
/// with the Casimir search. Throws HypothesisUnverified if either side is
/// not a dg-division algebra with graded-commutative cycles.
TheoremCheck checkMainTheorem(const DgExtension& ext);

}  // namespace dgsep
