#include <set>

#include <gtest/gtest.h>

#include "dgsep/demos.hpp"
#include "dgsep/examples.hpp"
#include "oracles.hpp"

using namespace dgsep;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::primeField(2);
const FieldSpec F3 = FieldSpec::primeField(3);
const FieldSpec F5 = FieldSpec::primeField(5);

GradedVector key(int label, int exponent = 0) { return GradedVector::unit({label, exponent}); }

std::vector<ExtensionExample> f2Family() {
  std::vector<ExtensionExample> out;
  for (int n = 1; n <= 6; ++n) out.push_back({"laurent F2 " + std::to_string(n), laurentExtension(F2, n)});
  for (const char* name : {"field-extension F4", "field-extension F8", "dual-numbers-over-F2", "ground-field F2",
                           "laurent-into-acyclic F2 w=0", "acyclic-laurent F2 1", "acyclic-laurent F2 2",
                           "acyclic-laurent F2 3"})
    out.push_back({name, *findDemo(name)->extension});
  out.push_back({"identity on dual numbers F2", identityExtension(dualNumbers(F2))});
  out.push_back({"laurent odd F2 2", laurentExtension(F2, 2, 1)});
  return out;
}

}  // namespace

TEST(Casimir, IdentityExtensionGivesOneTensorOne) {
  auto ext = identityExtension(dualNumbers(Q));
  auto r = findCasimir(ext);
  ASSERT_TRUE(r.separable());
  EXPECT_EQ(r.certificate->omega, key(0));
  EXPECT_TRUE(r.certificate->witnesses.ok());
}

TEST(Casimir, DualNumbersAreNotSeparable) {
  for (const auto& f : {Q, F3, F5}) {
    auto ext = dualNumbersExtension(f);
    auto r = findCasimir(ext);
    ASSERT_FALSE(r.separable()) << f.name();
    EXPECT_EQ(r.refutation->tensorDimension, 1);
    EXPECT_GT(r.refutation->augmentedRank, r.refutation->constraintRank);
    EXPECT_FALSE(r.refutation->transcript.empty());
    // 1 (x) 1 is a cycle with mu = 1 but X (1 (x) 1) != (1 (x) 1) X.
    auto rep = verifyCasimir(ext, key(0));
    EXPECT_FALSE(rep.ok());
    EXPECT_TRUE(rep.find("mu(omega) = 1")->passed);
    EXPECT_FALSE(rep.find("b omega = omega b for every generator")->passed);
  }
}

TEST(Casimir, ZeroIsNeverACertificate) {
  auto rep = verifyCasimir(laurentExtension(F2, 3), GradedVector{});
  EXPECT_FALSE(rep.find("mu(omega) = 1")->passed);
}

TEST(Casimir, LaurentCriterion) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int n = 1; n <= 6; ++n) {
      auto ext = laurentExtension(FieldSpec::primeField(p), n);
      auto r = findCasimir(ext);
      EXPECT_EQ(r.separable(), n % static_cast<int>(p) != 0) << "p=" << p << " n=" << n;
      if (r.separable()) EXPECT_TRUE(verifyCasimir(ext, r.certificate->omega).ok());
    }
}

TEST(Casimir, LaurentF2ThreeMatchesTheSumFormula) {
  auto ext = laurentExtension(F2, 3);
  auto r = findCasimir(ext);
  ASSERT_TRUE(r.separable());
  // omega = sum_i T^i (x) T^-i; slot t carries m_t = T^t.
  TensorBimodule t(ext);
  GradedVector expected;
  for (int i = 0; i < 3; ++i) expected += t.pure(key(0, -i), i);
  EXPECT_EQ(r.certificate->omega, expected);
}

TEST(Casimir, SeparableLaurentOmegaLiesInTheCycleTensorImage) {
  for (std::uint32_t p : {3u, 5u})
    for (int n : {1, 2}) {
      auto ext = acyclicLaurentExtension(FieldSpec::primeField(p), n);
      auto r = findCasimir(ext);
      ASSERT_TRUE(r.separable());
      auto ups = cycleTensorInclusion(ext);
      auto comp = ups.tensor->basis().component(0);
      auto img = ups.block(0);
      auto w = coordinates(r.certificate->omega, comp);
      EXPECT_TRUE(solveLinear(img, w).has_value()) << "p=" << p << " n=" << n;
    }
}

TEST(Casimir, SolverAgreesWithExhaustiveSearchOverF2) {
  for (const auto& e : f2Family()) {
    auto brute = oracle::casimirs(e.extension, 1L << 12);
    ASSERT_TRUE(brute.has_value()) << e.name;
    auto r = findCasimir(e.extension);
    EXPECT_EQ(r.separable(), !brute->solutions.empty()) << e.name;
    if (r.separable()) {
      bool found = false;
      for (const auto& s : brute->solutions) found |= s == r.certificate->omega;
      EXPECT_TRUE(found) << e.name;
    }
  }
}

TEST(Casimir, ExplicitGeneratorsAreUsed) {
  auto ext = dualNumbersExtension(Q);
  // With no generators only d(omega) = 0 and mu(omega) = 1 remain.
  auto r = findCasimir(ext, std::vector<GradedVector>{});
  EXPECT_TRUE(r.separable());
}

TEST(CycleExtension, InducedMaps) {
  auto same = inducedCycleExtension(laurentExtension(F3, 2));
  EXPECT_TRUE(same.report.ok());
  EXPECT_EQ(same.extension.rank(), 2);

  auto dn = inducedCycleExtension(dualNumbersExtension(Q));
  EXPECT_EQ(dn.targetCycles.algebra.size(), 1);
  EXPECT_EQ(dn.extension.rank(), 1);

  auto ac = inducedCycleExtension(acyclicLaurentExtension(F5, 2));
  EXPECT_TRUE(ac.report.ok());
  EXPECT_EQ(ac.sourceCycles.algebra.period(), 4);
  EXPECT_EQ(ac.targetCycles.algebra.period(), 2);
}

TEST(GrDivision, Examples) {
  auto lau = classifyGrDivision(laurentPolynomials(F5, 2));
  EXPECT_EQ(lau.verdict, GrDivisionVerdict::LaurentOverField);
  EXPECT_EQ(lau.generatorDegree, 2);

  auto field = classifyGrDivision(groundField(Q));
  EXPECT_EQ(field.verdict, GrDivisionVerdict::FieldConcentratedDegree0);

  auto sq = classifyGrDivision(squareZeroAlgebra(Q).algebra());
  EXPECT_EQ(sq.verdict, GrDivisionVerdict::NotGrDivision);

  auto f9 = classifyGrDivision(finiteFieldExtension(3, {1, 0}));
  EXPECT_EQ(f9.verdict, GrDivisionVerdict::FieldConcentratedDegree0);
  EXPECT_EQ(f9.baseDimension, 2);
}

TEST(GrDivision, ZeroDivisorsInDegreeZero) {
  // F3[u]/(u^2 - 1) is not a field: (u - 1)(u + 1) = 0.
  GradedBasis b({"1", "u"}, {0, 0});
  std::vector<std::vector<GradedVector>> t(2, std::vector<GradedVector>(2));
  t[0][0] = key(0);
  t[0][1] = key(1);
  t[1][0] = key(1);
  t[1][1] = key(0);
  GradedAlgebra alg(F3, b, t, key(0));
  EXPECT_TRUE(degreeZeroZeroDivisor(alg).has_value());
  EXPECT_EQ(classifyGrDivision(alg).verdict, GrDivisionVerdict::NotGrDivision);
}

TEST(GrDivision, RefusalsAndWindows) {
  TwistedLaurentSpec spec{finiteFieldExtension(2, {1, 1}), {}, 2, 2, "X"};
  spec.automorphism = frobenius(spec.coefficients);
  EXPECT_THROW(classifyGrDivision(twistedLaurent(spec)), HypothesisUnverified);
  EXPECT_THROW(classifyGrDivision(laurentPolynomials(F5, 2), DegreeWindow{0, 1}), WindowTooSmall);
  // Q(i) has invertible basis elements but dimension 2 over Q.
  GradedBasis b({"1", "i"}, {0, 0});
  std::vector<std::vector<GradedVector>> t(2, std::vector<GradedVector>(2));
  t[0][0] = key(0);
  t[0][1] = key(1);
  t[1][0] = key(1);
  t[1][1] = Scalar(-1) * key(0);
  EXPECT_THROW(classifyGrDivision(GradedAlgebra(Q, b, t, key(0))), HypothesisUnverified);
}

TEST(GrDivision, CharacteristicTwoLaurentInOddDegree) {
  auto c = classifyGrDivision(laurentPolynomials(F2, 1));
  EXPECT_EQ(c.verdict, GrDivisionVerdict::LaurentOverField);
  EXPECT_EQ(c.generatorDegree, 1);
}

TEST(DgDivision, Examples) {
  EXPECT_TRUE(isDgDivision(dualNumbers(Q)).division);
  EXPECT_TRUE(isDgDivision(acyclicLaurent(F5)).division);
  EXPECT_TRUE(isDgDivision(acyclicLaurent(F5, true)).division);
  EXPECT_FALSE(isDgDivision(squareZeroAlgebra(Q)).division);
}

TEST(MainTheorem, CatalogHasNoMismatches) {
  auto catalog = mainTheoremCatalog();
  EXPECT_GE(catalog.size(), 10u);
  std::set<std::string> branches;
  for (const auto& e : catalog) {
    auto c = checkMainTheorem(e.extension);
    EXPECT_FALSE(c.mismatch()) << e.name;
    EXPECT_NE(c.predicted, Prediction::TheoremSilent) << e.name;
    branches.insert(c.branch);
  }
  EXPECT_EQ(branches.size(), 3u);
}

TEST(MainTheorem, KnownInstances) {
  auto l3 = checkMainTheorem(laurentExtension(F3, 3));
  EXPECT_EQ(l3.predicted, Prediction::NotSeparable);
  EXPECT_FALSE(l3.computed.separable());

  auto p33 = checkMainTheorem(laurentIntoAcyclic(F3));
  EXPECT_EQ(p33.predicted, Prediction::NotSeparable);
  EXPECT_FALSE(p33.computed.separable());

  auto acyc = checkMainTheorem(acyclicLaurentExtension(F5, 2));
  EXPECT_EQ(acyc.predicted, Prediction::Separable);
  EXPECT_TRUE(acyc.computed.separable());
  EXPECT_EQ(acyc.verdict(), "SEPARABLE");
}

TEST(MainTheorem, CharacteristicTwoIsSilent) {
  auto c = checkMainTheorem(laurentIntoAcyclic(F2));
  EXPECT_EQ(c.predicted, Prediction::TheoremSilent);
  EXPECT_EQ(c.verdict(), "THEOREM_SILENT");
  EXPECT_FALSE(c.mismatch());
}

TEST(MainTheorem, RefusesNonDivisionInput) {
  auto ext = groundFieldExtension(squareZeroAlgebra(Q), {key(0), key(1)});
  EXPECT_THROW(checkMainTheorem(ext), HypothesisUnverified);
}
