#include <gtest/gtest.h>

#include "dgsep/examples.hpp"

using namespace dgsep;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::primeField(2);
const FieldSpec F3 = FieldSpec::primeField(3);
const FieldSpec F5 = FieldSpec::primeField(5);

GradedVector key(int label, int exponent = 0) { return GradedVector::unit({label, exponent}); }

std::vector<DgExtension> tensorFamily() {
  return {dualNumbersExtension(Q),         laurentExtension(F2, 3),
          laurentExtension(F3, 2),         acyclicLaurentExtension(F3, 2),
          laurentIntoAcyclic(F5, true),    primeFieldExtension(2, {1, 1}),
          identityExtension(dualNumbers(F3))};
}

}  // namespace

TEST(TwistedLaurent, IdentityTwistIsLaurent) {
  TwistedLaurentSpec spec{groundField(F5), {key(0)}, 1, 2, "X"};
  auto alg = twistedLaurent(spec);
  EXPECT_EQ(alg.period(), 2);
  EXPECT_TRUE(isGradedCommutative(alg));
  EXPECT_TRUE(samePresentation(alg, laurentPolynomials(F5, 2)));
}

TEST(TwistedLaurent, FrobeniusOverF4) {
  TwistedLaurentSpec spec{finiteFieldExtension(2, {1, 1}), {}, 2, 1, "X"};
  spec.automorphism = frobenius(spec.coefficients);
  auto alg = twistedLaurent(spec);
  EXPECT_TRUE(validateAlgebra(alg).ok());
  EXPECT_EQ(alg.period(), 2);
  // X u = u^2 X = (u + 1) X.
  const auto& b = alg.basis();
  auto u = alg.element({b.indexOf("u"), 0});
  auto x = alg.element({b.indexOf("X"), 0});
  auto lhs = alg.multiply(x, u);
  auto rhs = alg.multiply(alg.multiply(u, u), x);
  EXPECT_EQ(lhs, rhs);
  EXPECT_NE(lhs, alg.multiply(u, x));
}

TEST(TwistedLaurent, WrongOrderIsRejected) {
  TwistedLaurentSpec spec{finiteFieldExtension(2, {1, 1}), {}, 1, 1, "X"};
  spec.automorphism = frobenius(spec.coefficients);
  EXPECT_THROW(twistedLaurent(spec), AutomorphismOrderError);
}

TEST(FiniteField, ReduciblePolynomialIsRejected) {
  EXPECT_THROW(finiteFieldExtension(2, {1, 0}), ConsistencyError);  // u^2 + 1 = (u + 1)^2
  EXPECT_NO_THROW(finiteFieldExtension(3, {1, 0}));
}

TEST(AcyclicDivision, DifferentialIsCoordinateProjection) {
  for (bool inv : {false, true}) {
    auto dg = acyclicLaurent(F5, inv);
    EXPECT_TRUE(validateAlgebra(dg.algebra()).ok());
    EXPECT_TRUE(validateDifferential(dg).ok());
    const auto& alg = dg.algebra();
    auto y = alg.element({alg.basis().indexOf("y"), 0});
    for (int e = -2; e <= 2; ++e) {
      auto a = alg.element({0, e});
      auto b = alg.element({0, e + 1});
      EXPECT_EQ(dg.d(b + alg.multiply(y, a)), a);
    }
    auto y2 = alg.multiply(y, y);
    EXPECT_EQ(y2, inv ? alg.element({0, -1}) : GradedVector{});
  }
}

TEST(AcyclicDivision, OverTheGroundFieldGivesDualNumbers) {
  AcyclicDivisionSpec spec{groundField(Q), {GradedVector{}}, {}};
  auto dg = acyclicDivisionFromCycles(spec);
  auto dn = dualNumbers(Q);
  EXPECT_TRUE(samePresentation(dg.algebra(), dn.algebra()));
  EXPECT_EQ(dg.differentialOnLabels(), dn.differentialOnLabels());
}

TEST(AcyclicDivision, RejectsBadSquare) {
  // y^2 must have degree -2; X^0 has degree 0.
  AcyclicDivisionSpec spec{laurentPolynomials(F5, 2), {GradedVector{}}, key(0)};
  EXPECT_THROW(acyclicDivisionFromCycles(spec), ConsistencyError);
  EXPECT_FALSE(checkAcyclicDivisionSpec(spec).ok());
}

TEST(DualNumbers, ShapeOverSeveralFields) {
  for (const auto& f : {Q, F2, F3}) {
    auto dn = dualNumbers(f);
    EXPECT_EQ(dn.basis().labels(), (std::vector<std::string>{"1", "X"}));
    EXPECT_EQ(dn.basis().degrees(), (std::vector<int>{0, -1}));
    EXPECT_TRUE(isGradedCommutative(dn));
  }
}

TEST(Extension, CatalogValidates) {
  for (const auto& e : mainTheoremCatalog()) EXPECT_TRUE(validateExtension(e.extension).ok()) << e.name;
}

TEST(Extension, NonFreeLeftBasisIsReported) {
  auto dn = dualNumbers(Q);
  auto ext = groundFieldExtension(dn, {key(0)});
  EXPECT_FALSE(validateExtension(ext).ok());
  EXPECT_THROW(ext.checkFreeness(-1), FreenessError);
}

TEST(Tensor, DualNumbersDegreeZeroIsOneTimesOne) {
  TensorBimodule t(dualNumbersExtension(Q));
  EXPECT_EQ(t.basis().size(), 4);
  auto comp = t.basis().component(0);
  ASSERT_EQ(comp.size(), 1u);
  EXPECT_EQ(t.basis().keyName(comp[0]), "1|0");
  EXPECT_EQ(t.multiply(key(comp[0].label)), key(0));
  // mu(X (x) X) = 0.
  auto xx = t.pure(key(1), 1);
  EXPECT_TRUE(t.multiply(xx).isZero());
}

TEST(Tensor, IdentityExtensionIsTheAlgebra) {
  auto dn = dualNumbers(F3);
  TensorBimodule t(identityExtension(dn));
  auto mu = multiplicationMap(t);
  for (int n = -2; n <= 1; ++n) EXPECT_TRUE(isInvertible(mu.block(n)) || mu.block(n).size() == 0) << n;
}

TEST(Tensor, LaurentDegreeZeroHasRankN) {
  TensorBimodule t(laurentExtension(F2, 3));
  EXPECT_EQ(t.basis().dimension(0), 3);
  // mu(T (x) T^2) = T^3.
  EXPECT_EQ(t.multiply(t.pure(key(0, 1), 2)), key(0, 3));
}

TEST(Tensor, BimoduleLaws) {
  for (const auto& ext : tensorFamily()) {
    TensorBimodule t(ext);
    const auto& B = ext.target();
    const auto& alg = B.algebra();
    auto exps = parityExponents(t.basis());
    for (int k = 0; k < t.basis().size(); ++k)
      for (int e : exps) {
        auto v = GradedVector::unit({k, e});
        EXPECT_TRUE(t.differential(t.differential(v)).isZero());
        EXPECT_EQ(t.multiply(t.differential(v)), B.d(t.multiply(v)));
        for (int a = 0; a < alg.size(); ++a)
          for (int b = 0; b < alg.size(); ++b) {
            auto va = alg.element({a, 0}), vb = alg.element({b, 0});
            EXPECT_EQ(t.rightAction(t.leftAction(va, v), vb), t.leftAction(va, t.rightAction(v, vb)));
          }
        for (int a = 0; a < alg.size(); ++a) {
          auto va = alg.element({a, 0});
          int da = alg.basis().degree(a);
          // d(b v) = d(b) v + (-1)^|b| b d(v)
          EXPECT_EQ(t.differential(t.leftAction(va, v)),
                    t.leftAction(B.d(va), v) + signOf(da) * t.leftAction(va, t.differential(v)));
          // d(v b) = d(v) b + (-1)^|v| v d(b)
          int dv = t.basis().degreeOf({k, e});
          EXPECT_EQ(t.differential(t.rightAction(v, va)),
                    t.rightAction(t.differential(v), va) + signOf(dv) * t.rightAction(v, B.d(va)));
        }
      }
  }
}

TEST(CycleTensor, IdentityWhenDifferentialsVanish) {
  auto ups = cycleTensorInclusion(laurentExtension(F3, 2));
  auto w = ups.window();
  EXPECT_TRUE(ups.injectiveOn(w));
  for (int n = w.lo; n <= w.hi; ++n) {
    auto m = ups.block(n);
    EXPECT_EQ(m.rows(), m.cols());
    EXPECT_TRUE(m.size() == 0 || isInvertible(m));
  }
}

TEST(CycleTensor, InvertibleSquareImageIsEvenDegree) {
  for (const auto& f : {F3, F5}) {
    auto ups = cycleTensorInclusion(identityExtension(acyclicLaurent(f, true)));
    const auto& tb = ups.tensor->basis();
    auto w = ups.window();
    EXPECT_TRUE(ups.injectiveOn(w));
    for (int n = w.lo; n <= w.hi; ++n) {
      int image = static_cast<int>(rank(ups.block(n)));
      EXPECT_EQ(image, n % 2 == 0 ? tb.dimension(n) : 0) << n;
    }
  }
}

TEST(CycleTensor, DualNumbersImageIsOneTimesOne) {
  auto ups = cycleTensorInclusion(dualNumbersExtension(F5));
  EXPECT_EQ(rank(ups.block(0)), 1);
  EXPECT_EQ(ups.apply(key(0)), key(0));
}
