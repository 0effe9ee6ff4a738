#include "dgsep/separability.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace dgsep {

std::vector<GradedVector> defaultGenerators(const DgExtension& ext) {
  std::vector<GradedVector> gens;
  auto push = [&](GradedVector v) {
    if (v.isZero()) return;
    for (const auto& g : gens)
      if (g == v) return;
    gens.push_back(std::move(v));
  };
  for (const auto& m : ext.leftBasis()) push(m);
  const auto& src = ext.source().algebra();
  for (int i = 0; i < src.size(); ++i) push(ext.apply(BasisKey{i, 0}));
  if (auto z = ext.target().algebra().periodUnit()) push(*z);
  return gens;
}

namespace {

std::string describe(const GradedVector& v, const GradedBasis& b) { return v.isZero() ? "0" : v.str(b); }

}  // namespace

ValidationReport verifyCasimir(const DgExtension& ext, const GradedVector& omega,
                               std::optional<std::vector<GradedVector>> generators) {
  ValidationReport rep;
  TensorBimodule t(ext);
  const auto& tb = t.basis();
  const auto& B = ext.target();
  auto gens = generators.value_or(defaultGenerators(ext));

  bool homogeneous = omega.isHomogeneous(tb) && omega.degree(tb).value_or(0) == 0;
  rep.add("omega has degree 0", homogeneous);
  if (!homogeneous) return rep;

  auto dw = t.differential(omega);
  rep.add("d(omega) = 0", dw.isZero(), dw.isZero() ? "" : "d(omega) = " + describe(dw, tb));

  auto mu = t.multiply(omega);
  bool unital = mu == B.algebra().unit();
  rep.add("mu(omega) = 1", unital, unital ? "" : "mu(omega) = " + describe(mu, B.basis()));

  std::optional<std::string> fail;
  for (const auto& b : gens) {
    auto c = t.leftAction(b, omega) - t.rightAction(omega, b);
    if (!c.isZero()) {
      fail = "b omega - omega b = " + describe(c, tb) + " for b = " + describe(b, B.basis());
      break;
    }
  }
  rep.addFirstFailure("b omega = omega b for every generator", fail);
  return rep;
}

CasimirResult findCasimir(const DgExtension& ext, std::optional<std::vector<GradedVector>> generators) {
  TensorBimodule t(ext);
  const auto& tb = t.basis();
  const auto& B = ext.target();
  const auto p = B.field().characteristic;
  auto gens = generators.value_or(defaultGenerators(ext));
  auto comp0 = tb.component(0);
  const auto n = static_cast<Eigen::Index>(comp0.size());

  std::vector<Matrix> blocks{blockMatrix(tb, tb, 0, 1, t.differentialOp())};
  for (const auto& b : gens) {
    if (b.isZero()) continue;
    int k = *b.degree(B.basis());
    blocks.push_back(blockMatrix(tb, tb, 0, k, t.commutatorOp(b)));
  }
  Matrix hom = inField(vstack(blocks, n), p);
  Matrix mu = inField(blockMatrix(tb, B.basis(), 0, 0, t.multiplicationOp()), p);
  Vector one = inField(coordinates(B.algebra().unit(), B.basis().component(0)), p);

  Matrix a = vstack({hom, mu}, n);
  Vector rhs = zeroVector(a.rows());
  rhs.tail(one.size()) = one;
  rhs = inField(rhs, p);

  CasimirResult out;
  if (auto x = solveLinear(a, rhs)) {
    CasimirCertificate cert;
    cert.omega = fromCoordinates(*x, comp0);
    cert.generators = gens;
    cert.witnesses = verifyCasimir(ext, cert.omega, gens);
    if (!cert.witnesses.ok())
      throw ConsistencyError("findCasimir: solution failed re-verification:\n" + cert.witnesses.str());
    out.certificate = std::move(cert);
    return out;
  }

  NotSeparable ns;
  ns.tensorDimension = static_cast<int>(n);
  ns.constraintRows = static_cast<int>(hom.rows());
  ns.constraintRank = static_cast<int>(rank(hom));
  Matrix aug(a.rows(), a.cols() + 1);
  aug << a, rhs;
  ns.augmentedRank = static_cast<int>(rank(aug));
  auto central = kernelBasis(hom);
  ns.centralCycleDimension = static_cast<int>(central.size());

  Matrix muOnCentral = zeroMatrix(mu.rows(), static_cast<Eigen::Index>(central.size()));
  for (std::size_t j = 0; j < central.size(); ++j) muOnCentral.col(static_cast<Eigen::Index>(j)) = mu * central[j];
  std::ostringstream os;
  os << "degree-0 tensor component: dimension " << ns.tensorDimension << "\n"
     << "cycle and centrality constraints: " << ns.constraintRows << " rows, rank " << ns.constraintRank << "\n"
     << "central cycles of degree 0: dimension " << ns.centralCycleDimension << "\n"
     << "mu on central cycles: rank " << rank(muOnCentral) << " in B_0 of dimension " << mu.rows() << "\n";
  for (std::size_t j = 0; j < central.size(); ++j)
    os << "  mu(" << describe(fromCoordinates(central[j], comp0), tb)
       << ") = " << describe(fromCoordinates(muOnCentral.col(static_cast<Eigen::Index>(j)), B.basis().component(0)),
                             B.basis())
       << "\n";
  os << "rank [A | b] = " << ns.augmentedRank << " > rank A = " << rank(a) << ": mu(omega) = 1 is unreachable";
  ns.transcript = os.str();
  out.refutation = std::move(ns);
  return out;
}

// ---------------------------------------------------------------------------
// Graded division algebras

std::string to_string(GrDivisionVerdict v) {
  switch (v) {
    case GrDivisionVerdict::NotGrDivision: return "not-gr-division";
    case GrDivisionVerdict::FieldConcentratedDegree0: return "field-concentrated-degree-0";
    case GrDivisionVerdict::LaurentOverField: return "laurent-over-field";
  }
  return "?";
}

namespace {

Matrix leftMultiplicationBlock(const GradedAlgebra& alg, const GradedVector& u, int from) {
  int k = *u.degree(alg.basis());
  return inField(blockMatrix(alg.basis(), alg.basis(), from, k, alg.leftMultiplication(u)),
                 alg.field().characteristic);
}

// Right inverse v of a homogeneous u, if any.
std::optional<GradedVector> inverseOf(const GradedAlgebra& alg, const GradedVector& u) {
  int k = *u.degree(alg.basis());
  Matrix m = leftMultiplicationBlock(alg, u, -k);
  Vector one = inField(coordinates(alg.unit(), alg.basis().component(0)), alg.field().characteristic);
  auto x = solveLinear(m, one);
  if (!x) return std::nullopt;
  return fromCoordinates(*x, alg.basis().component(-k));
}

}  // namespace

std::optional<GradedVector> degreeZeroZeroDivisor(const GradedAlgebra& alg) {
  const auto p = alg.field().characteristic;
  if (p == 0) throw HypothesisUnverified("exhaustive field check needs a finite field");
  auto comp = alg.basis().component(0);
  const double count = std::pow(static_cast<double>(p), static_cast<double>(comp.size()));
  if (count > double(1 << 20))
    throw HypothesisUnverified("degree-0 component too large for exhaustive field check");
  std::vector<std::int64_t> digits(comp.size(), 0);
  const auto total = static_cast<std::int64_t>(count);
  for (std::int64_t idx = 1; idx < total; ++idx) {
    std::int64_t r = idx;
    GradedVector v;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      digits[i] = r % p;
      r /= p;
      if (digits[i]) v.add(comp[i], Scalar::residue(digits[i], p));
    }
    Matrix m = leftMultiplicationBlock(alg, v, 0);
    if (!isInvertible(m)) return v;
  }
  return std::nullopt;
}

GrDivisionClassification classifyGrDivision(const GradedAlgebra& alg, std::optional<DegreeWindow> window) {
  if (!isGradedCommutative(alg))
    throw HypothesisUnverified("gr-division classification needs a graded-commutative algebra");
  const auto& basis = alg.basis();
  GrDivisionClassification out;

  DegreeWindow w;
  if (auto period = basis.period()) {
    int P = std::abs(*period);
    w = window.value_or(DegreeWindow{-P, P - 1});
    if (w.size() < 2 * P) throw WindowTooSmall("gr-division classification: window must cover two periods");
  } else {
    DegreeWindow s = basis.support();
    DegreeWindow def{std::min(s.lo, 0), std::max(s.hi, 0)};
    w = window.value_or(def);
    if (!w.contains(def.lo) || !w.contains(def.hi))
      throw WindowTooSmall("gr-division classification: window must contain the support");
  }
  out.window = w;

  auto notDivision = [&](std::string why) {
    out.verdict = GrDivisionVerdict::NotGrDivision;
    out.reason = std::move(why);
    return out;
  };

  auto comp0 = basis.component(0);
  out.baseDimension = static_cast<int>(comp0.size());
  if (comp0.empty() || alg.unit().isZero()) return notDivision("degree-0 component is zero");

  for (auto k : comp0)
    if (!isInvertible(leftMultiplicationBlock(alg, alg.element(k), 0)))
      return notDivision(basis.keyName(k) + " is not invertible");
  if (comp0.size() > 1) {
    if (alg.field().isRationals())
      throw HypothesisUnverified("field recognition over Q is limited to a one-dimensional degree-0 component");
    if (auto zd = degreeZeroZeroDivisor(alg)) return notDivision(zd->str(basis) + " is a zero divisor in degree 0");
  }
  const auto& f = alg.field();
  out.baseField = comp0.size() == 1 ? f.name()
                                    : f.name() + "^" + std::to_string(comp0.size());

  std::vector<int> supported;
  for (int n = w.lo; n <= w.hi; ++n) {
    if (n == 0) continue;
    auto comp = basis.component(n);
    if (comp.empty()) continue;
    supported.push_back(n);
    if (comp.size() != comp0.size())
      return notDivision("degree " + std::to_string(n) + " has dimension " + std::to_string(comp.size()) +
                         " over K, degree 0 has " + std::to_string(comp0.size()));
    auto u = alg.element(comp[0]);
    if (!inverseOf(alg, u)) return notDivision(basis.keyName(comp[0]) + " is not invertible");
  }

  int d = 0;
  for (int n : supported)
    if (d == 0 || std::abs(n) < d) d = std::abs(n);
  if (!supported.empty() && !basis.isPeriodic())
    return notDivision("finite support cannot carry a unit of nonzero degree");
  for (int n = w.lo; n <= w.hi; ++n) {
    bool expected = d == 0 ? n == 0 : n % d == 0;
    bool present = n == 0 || std::find(supported.begin(), supported.end(), n) != supported.end();
    if (expected != present)
      return notDivision("supported degrees do not form a subgroup (degree " + std::to_string(n) + ")");
  }
  out.generatorDegree = d;
  out.verdict = d == 0 ? GrDivisionVerdict::FieldConcentratedDegree0 : GrDivisionVerdict::LaurentOverField;
  return out;
}

DgDivisionResult isDgDivision(const DgAlgebra& dg) {
  DgDivisionResult out;
  out.cycles = cycles(dg);
  if (!isGradedCommutative(out.cycles.algebra))
    throw HypothesisUnverified("cycles are not graded-commutative; regularity hypothesis not checked");
  out.classification = classifyGrDivision(out.cycles.algebra);
  out.division = out.classification.isGrDivision();
  return out;
}

// ---------------------------------------------------------------------------
// Cross-check against the classification of dg-separable extensions

std::string to_string(Prediction p) {
  switch (p) {
    case Prediction::Separable: return "SEPARABLE";
    case Prediction::NotSeparable: return "NOT_SEPARABLE";
    case Prediction::TheoremSilent: return "THEOREM_SILENT";
  }
  return "?";
}

std::string TheoremCheck::verdict() const {
  if (predicted == Prediction::TheoremSilent) return "THEOREM_SILENT";
  return computed.separable() ? "SEPARABLE" : "NOT_SEPARABLE";
}

namespace {

// Graded separability of D1[T^n, T^-n] -> D2[T, T^-1] over a prime field:
// D1 -> D2 is separable because prime fields are perfect, so only n matters.
Prediction gradedSeparability(const GrDivisionClassification& a, const GrDivisionClassification& b,
                              const FieldSpec& field, std::vector<std::string>& notes) {
  using V = GrDivisionVerdict;
  if (a.verdict == V::FieldConcentratedDegree0 && b.verdict == V::FieldConcentratedDegree0) {
    notes.push_back("finite extension of fields " + a.baseField + " -> " + b.baseField + " over a perfect field");
    return Prediction::Separable;
  }
  if (a.verdict == V::LaurentOverField && b.verdict == V::LaurentOverField) {
    if (a.generatorDegree % b.generatorDegree != 0) {
      notes.push_back("generator degrees do not divide");
      return Prediction::TheoremSilent;
    }
    long n = std::abs(a.generatorDegree / b.generatorDegree);
    bool inv = characteristicIsInvertible(field, n);
    notes.push_back("Laurent pair with n = " + std::to_string(n) + (inv ? ", invertible in " : ", zero in ") +
                    field.name());
    return inv ? Prediction::Separable : Prediction::NotSeparable;
  }
  notes.push_back("cycle algebras are " + to_string(a.verdict) + " and " + to_string(b.verdict));
  return Prediction::TheoremSilent;
}

}  // namespace

TheoremCheck checkMainTheorem(const DgExtension& ext) {
  const auto& A = ext.source();
  const auto& B = ext.target();
  auto divA = isDgDivision(A);
  auto divB = isDgDivision(B);
  if (!divA.division) throw HypothesisUnverified("source is not a dg-division algebra: " + divA.classification.reason);
  if (!divB.division) throw HypothesisUnverified("target is not a dg-division algebra: " + divB.classification.reason);

  TheoremCheck out;
  const bool char2 = A.field().characteristic == 2;
  const bool zeroA = A.hasZeroDifferential();
  const bool zeroB = B.hasZeroDifferential();
  const bool acyclicA = homology(A).acyclicOnWindow();
  const bool acyclicB = homology(B).acyclicOnWindow();

  if (zeroA && zeroB) {
    out.branch = "zero differential";
    out.predicted = gradedSeparability(divA.classification, divB.classification, A.field(), out.notes);
  } else if (acyclicA) {
    out.branch = "acyclic source";
    if (!acyclicB) out.notes.push_back("target is not acyclic although the source is");
    auto cyc = inducedCycleExtension(ext);
    if (!cyc.report.ok()) throw ConsistencyError("induced cycle extension failed:\n" + cyc.report.str());
    auto graded = gradedSeparability(divA.classification, divB.classification, A.field(), out.notes);
    out.predicted = graded;
    if (graded == Prediction::NotSeparable && char2) {
      out.predicted = Prediction::TheoremSilent;
      out.notes.push_back("converse needs characteristic different from 2");
    }
  } else if (zeroA && acyclicB) {
    out.branch = "gr-field source, acyclic target";
    out.predicted = char2 ? Prediction::TheoremSilent : Prediction::NotSeparable;
    if (char2) out.notes.push_back("non-separability needs characteristic different from 2");
  } else {
    out.branch = "outside the classified cases";
    out.predicted = Prediction::TheoremSilent;
  }
  out.computed = findCasimir(ext);
  return out;
}

}  // namespace dgsep
