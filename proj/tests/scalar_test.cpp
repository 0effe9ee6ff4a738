#include <random>

#include <gtest/gtest.h>

#include "dgsep/linear.hpp"

using namespace dgsep;

namespace {

Scalar randomScalar(std::mt19937_64& rng, std::uint32_t p) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  if (p) return Scalar::residue(num(rng), p);
  return Scalar(mpq_class(num(rng), den(rng)));
}

Matrix randomMatrix(std::mt19937_64& rng, std::uint32_t p, int rows, int cols, int zeroOdds) {
  Matrix m(rows, cols);
  std::uniform_int_distribution<int> coin(0, zeroOdds);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = coin(rng) ? randomScalar(rng, p) : Scalar(0).in(p);
  return m;
}

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

}  // namespace

TEST_P(FieldAxioms, HoldOnRandomTriples) {
  const auto p = GetParam();
  std::mt19937_64 rng(11 + p);
  const Scalar zero = Scalar(0).in(p), one = Scalar(1).in(p);
  for (int trial = 0; trial < 300; ++trial) {
    Scalar a = randomScalar(rng, p), b = randomScalar(rng, p), c = randomScalar(rng, p);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ(a + (-a), zero);
    if (!a.isZero()) EXPECT_EQ(a * a.inverse(), one);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms, ::testing::Values(0u, 2u, 3u, 5u, 7u, 101u));

TEST(Scalar, ParsesRationalsAndReducesModP) {
  EXPECT_EQ(Scalar::parse("-3/6", 0), Scalar(mpq_class(-1, 2)));
  EXPECT_EQ(Scalar::parse("1/2", 5), Scalar::residue(3, 5));
  EXPECT_THROW(Scalar::parse("1/x", 0), FormatError);
  EXPECT_THROW(Scalar::parse("1/5", 5), DivisionByZero);
}

TEST(Scalar, RejectsMixedCharacteristics) {
  EXPECT_THROW(Scalar::residue(1, 3) + Scalar::residue(1, 5), Error);
  EXPECT_THROW(Scalar(0).inverse(), DivisionByZero);
}

TEST(Scalar, ExactOverLargeRationals) {
  Scalar big(mpq_class("123456789012345678901234567890/7"));
  EXPECT_EQ(big * big.inverse(), Scalar(1));
  EXPECT_EQ((big - big).str(), "0");
}

TEST(FieldSpec, RejectsComposites) {
  EXPECT_THROW(FieldSpec::primeField(4), FormatError);
  EXPECT_EQ(FieldSpec::primeField(7).name(), "F7");
  EXPECT_TRUE(characteristicIsInvertible(FieldSpec::primeField(3), 2));
  EXPECT_FALSE(characteristicIsInvertible(FieldSpec::primeField(3), 6));
}

class RandomMatrices : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(RandomMatrices, RankNullity) {
  const auto p = GetParam();
  std::mt19937_64 rng(3 + p);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    Matrix a = randomMatrix(rng, p, dim(rng), dim(rng), 2);
    auto kernel = kernelBasis(a);
    EXPECT_EQ(rank(a) + static_cast<Eigen::Index>(kernel.size()), a.cols());
    for (const auto& v : kernel) EXPECT_TRUE(isZeroMatrix(a * v));
  }
}

TEST_P(RandomMatrices, SolveAndInverse) {
  const auto p = GetParam();
  std::mt19937_64 rng(5 + p);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a = randomMatrix(rng, p, 4, 5, 3);
    Vector x0 = randomMatrix(rng, p, 5, 1, 3);
    Vector b = a * x0;
    auto x = solveLinear(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(Vector(a * *x), b);

    Matrix sq = randomMatrix(rng, p, 4, 4, 4);
    auto inv = inverse(sq);
    EXPECT_EQ(inv.has_value(), rank(sq) == 4);
    if (inv) EXPECT_EQ(Matrix(sq * *inv), Matrix::Identity(4, 4));
  }
}

TEST(Linear, InconsistentSystemHasNoSolution) {
  Matrix a(2, 1);
  a << Scalar(1), Scalar(1);
  Vector b(2);
  b << Scalar(0), Scalar(1);
  EXPECT_FALSE(solveLinear(a, b).has_value());
}

INSTANTIATE_TEST_SUITE_P(Fields, RandomMatrices, ::testing::Values(0u, 2u, 3u, 7u));
