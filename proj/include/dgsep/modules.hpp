#pragma once

// Left dg-modules over a DgAlgebra, maps between them, Hom complexes, short
// exact sequences and their splittings, and the cycles / induction pair for
// acyclic algebras.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgsep/separability.hpp"

namespace dgsep {

/// A left dg-module, free over the periodicity unit of its algebra.
///
/// action[a][m] is the product of algebra label a with module label m; on
/// z-shifted keys the product is shifted, so z acts as the formal unit.
class DgModule {
 public:
  DgModule() = default;
  DgModule(DgAlgebra algebra, GradedBasis basis, std::vector<std::vector<GradedVector>> action,
           std::vector<GradedVector> delta);

  /// The algebra as a module over itself.
  static DgModule regular(const DgAlgebra& alg);

  const DgAlgebra& algebra() const { return *algebra_; }
  const GradedBasis& basis() const { return basis_; }
  int size() const { return basis_.size(); }
  const std::vector<std::vector<GradedVector>>& actionTable() const { return action_; }
  const std::vector<GradedVector>& deltaOnLabels() const { return delta_; }

  GradedVector act(BasisKey a, BasisKey m) const {
    return action_[a.label][m.label].shifted(a.exponent + m.exponent);
  }
  GradedVector act(const GradedVector& a, const GradedVector& m) const;
  GradedVector delta(BasisKey k) const;
  GradedVector delta(const GradedVector& v) const { return applyLinear(deltaOp(), v); }
  BasisOp deltaOp() const {
    return [this](BasisKey k) { return delta(k); };
  }

  /// One fold of the period, or the support.
  DegreeWindow window() const { return basis_.naturalWindow(); }

  friend bool operator==(const DgModule& a, const DgModule& b) {
    return *a.algebra_ == *b.algebra_ && a.basis_ == b.basis_ && a.action_ == b.action_ && a.delta_ == b.delta_;
  }

 private:
  std::shared_ptr<const DgAlgebra> algebra_;
  GradedBasis basis_;
  std::vector<std::vector<GradedVector>> action_;
  std::vector<GradedVector> delta_;
};

ValidationReport validateModule(const DgModule& m);

/// B (x)_A B as a left dg-module over the target.
DgModule tensorLeftModule(const TensorBimodule& t);

DgModule directSum(const DgModule& a, const DgModule& b);

/// A degree-k map given on source labels and extended to z-shifted keys by
/// f(m z^e) = (-1)^(k P e) f(m) z^e.
struct ModuleMap {
  int degree = 0;
  std::vector<GradedVector> onLabels;

  GradedVector apply(const GradedBasis& source, BasisKey k) const {
    return koszulShift(onLabels.at(k.label), k.exponent, degree, source.period());
  }
  GradedVector apply(const GradedBasis& source, const GradedVector& v) const;
  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
};

ModuleMap identityMap(const DgModule& m);
/// g after f, where middle is the target of f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f, const GradedBasis& middle);

/// Checks that f : source -> target commutes with the differentials
/// (up to (-1)^k) and satisfies f(a m) = (-1)^(|a| k) a f(m).
ValidationReport validateModuleMap(const DgModule& source, const DgModule& target, const ModuleMap& f);

// ---------------------------------------------------------------------------
// Hom complexes

/// Hom^k(M, N): degree-k maps with f(a m) = (-1)^(|a| k) a f(m), and the
/// differential d(f) = delta_N f - (-1)^k f delta_M.
struct HomComplex {
  DgModule source;
  DgModule target;
  DegreeWindow window;
  std::map<int, std::vector<ModuleMap>> components;
  ValidationReport report;  // d^2 = 0 and d lands in Hom^(k+1)

  int dimension(int k) const { return static_cast<int>(components.at(k).size()); }
};

std::vector<ModuleMap> homComponent(const DgModule& m, const DgModule& n, int k);
ModuleMap homDifferential(const DgModule& m, const DgModule& n, const ModuleMap& f);
/// Default window: one fold of the period, or every degree a map can have.
HomComplex homComplex(const DgModule& m, const DgModule& n, std::optional<DegreeWindow> window = std::nullopt);

// ---------------------------------------------------------------------------
// Short exact sequences

struct ShortExactSequence {
  DgModule L, M, N;
  ModuleMap f;  // L -> M
  ModuleMap g;  // M -> N
};

ValidationReport validateSES(const ShortExactSequence& s);

struct SplittingResult {
  std::optional<ModuleMap> sigma;  // N -> M with g sigma = id
  ValidationReport witnesses;      // re-verification of sigma
  int unknowns = 0;
  int constraintRank = 0;
  int augmentedRank = 0;
  std::string transcript;
  bool split() const { return sigma.has_value(); }
};

/// Solves for a degree-0 dg-module map sigma : N -> M over the algebra of s
/// with g sigma = id.
SplittingResult findDgSplitting(const ShortExactSequence& s);

/// Checks g sigma = id, delta sigma = sigma delta and linearity over every
/// label of the algebra of s.
ValidationReport verifySplitting(const ShortExactSequence& s, const ModuleMap& sigma);

/// Restriction of scalars along ext. With phi(z_A) = z_B^k the label m of M
/// becomes the labels m, m*z^1, ..., m*z^(k-1) over A.
DgModule restrictModule(const DgExtension& ext, const DgModule& m);
GradedVector restrictVector(const DgExtension& ext, const DgModule& m, const GradedVector& v);
GradedVector unrestrictVector(const DgExtension& ext, const DgModule& m, const GradedVector& v);
ModuleMap restrictMap(const DgExtension& ext, const DgModule& source, const DgModule& target, const ModuleMap& f);
ShortExactSequence restrictSES(const DgExtension& ext, const ShortExactSequence& s);

/// Splitting over the source algebra: solves on restrictSES(ext, s), so sigma
/// is expressed in restricted labels.
SplittingResult findDgSplitting(const ShortExactSequence& s, const DgExtension& ext);

struct LiftedSplitting {
  ModuleMap tau;  // in the labels of s, over the target
  ValidationReport witnesses;
};

/// tau(n) = sum_t x_t rho(m_t n) for omega = sum_t x_t (x) m_t, where rho is
/// a splitting of restrictSES(ext, s). Throws CertificateInvalid when omega
/// fails verifyCasimir and ConsistencyError when rho is not a splitting.
LiftedSplitting liftSplitting(const DgExtension& ext, const CasimirCertificate& cert, const ShortExactSequence& s,
                              const ModuleMap& rho);

// ---------------------------------------------------------------------------
// Cycles and induction over an acyclic algebra

/// ker(delta) as a graded module over the cycle algebra, with zero
/// differential. Throws HypothesisUnverified unless the algebra is acyclic.
struct CycleModule {
  CycleAlgebra cycles;
  DgModule module;                      // over DgAlgebra(cycles.algebra)
  std::vector<GradedVector> inclusion;  // cycle labels -> ambient module
};
CycleModule cyclesModule(const DgModule& m);

/// A (x)_ker(d) N with labels 1|n and y|n, where d(y) = 1. N must be a
/// module over DgAlgebra(cycles(dg).algebra) with zero differential.
DgModule induceFromCycles(const DgAlgebra& dg, const DgModule& n);

/// The degree -1 element with d(y) = 1 chosen by induceFromCycles.
GradedVector contractingElement(const DgAlgebra& dg);

struct IsomorphismResult {
  std::optional<ModuleMap> iso;
  int homDimension = 0;  // dim of degree-0 dg-module maps
  int attempts = 0;
  ValidationReport witnesses;
};

/// Seeded random search among degree-0 dg-module maps m -> n for one that is
/// bijective in every degree of the window.
IsomorphismResult findModuleIsomorphism(const DgModule& m, const DgModule& n, std::uint64_t seed = 1,
                                        int maxAttempts = 64);

}  // namespace dgsep
