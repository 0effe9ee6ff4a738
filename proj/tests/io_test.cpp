#include <gtest/gtest.h>

#include "dgsep/demos.hpp"
#include "dgsep/examples.hpp"

using namespace dgsep;

namespace {

const FieldSpec Q = FieldSpec::rationals();

const std::vector<std::string> kDemos = {
    "dual-numbers-over-Q",     "dual-numbers-over-F3",        "laurent F2 3",
    "laurent F5 2",            "acyclic-division F5 w=0",     "acyclic-division F3 w=Xinv",
    "acyclic-laurent F3 2",    "laurent-into-acyclic F5 w=Xinv", "ground-field Q",
    "field-extension F4",      "field-extension F27",         "square-zero Q",
    "twisted-laurent F4",      "ses F4 scrambled",            "ses F4 cone",
    "ses Laurent odd-scrambled", "ses square-zero F3"};

}  // namespace

TEST(Json, EveryDemoRoundTrips) {
  for (const auto& name : kDemos) {
    auto d = findDemo(name);
    ASSERT_TRUE(d.has_value()) << name;
    if (d->ses) {
      auto back = parseSES(Json::parse(toJson(*d->ses).dump()));
      EXPECT_EQ(back.ses.M, d->ses->ses.M) << name;
      EXPECT_EQ(back.ses.L, d->ses->ses.L) << name;
      EXPECT_EQ(back.ses.N, d->ses->ses.N) << name;
      EXPECT_EQ(back.ses.f, d->ses->ses.f) << name;
      EXPECT_EQ(back.ses.g, d->ses->ses.g) << name;
      ASSERT_TRUE(back.extension.has_value()) << name;
      EXPECT_EQ(back.extension->mapOnLabels(), d->ses->extension->mapOnLabels()) << name;
    } else if (d->extension) {
      auto back = parseExtension(Json::parse(toJson(*d->extension).dump()));
      EXPECT_EQ(back.source(), d->extension->source()) << name;
      EXPECT_EQ(back.target(), d->extension->target()) << name;
      EXPECT_EQ(back.mapOnLabels(), d->extension->mapOnLabels()) << name;
      EXPECT_EQ(back.periodPower(), d->extension->periodPower()) << name;
      EXPECT_EQ(back.leftBasis(), d->extension->leftBasis()) << name;
    } else {
      ASSERT_TRUE(d->algebra.has_value()) << name;
      EXPECT_EQ(parseDgAlgebra(Json::parse(toJson(*d->algebra).dump())), *d->algebra) << name;
    }
  }
}

TEST(Json, PrettyOutputParsesBack) {
  auto doc = toJson(*findDemo("laurent-into-acyclic F3 w=0")->extension);
  EXPECT_EQ(Json::parse(pretty(doc)), doc);
}

TEST(Json, TermFormats) {
  GradedBasis b({"1", "X"}, {0, -1});
  auto v = parseVector(Json::parse(R"([[0, 0, 3], ["X", 0, 1, 2], [1, 0, "-1/3"]])"), b, 0);
  EXPECT_EQ(v.coefficient({0, 0}), Scalar(3));
  EXPECT_EQ(v.coefficient({1, 0}), Scalar(mpq_class(1, 6)));
  auto w = parseVector(Json::parse(R"([[1, 0, 1, 2]])"), b, 5);
  EXPECT_EQ(w.coefficient({1, 0}), Scalar::residue(3, 5));
  EXPECT_EQ(toJson(w, FieldSpec::primeField(5)), Json::parse("[[1, 0, 3]]"));
  EXPECT_EQ(toJson(v, Q), Json::parse("[[0, 0, 3], [1, 0, 1, 6]]"));
}

TEST(Json, BigRationalsSurvive) {
  GradedBasis b({"1"}, {0});
  GradedVector v = GradedVector::unit({0, 0}, Scalar(mpq_class("123456789012345678901234567/5")));
  auto back = parseVector(toJson(v, Q), b, 0);
  EXPECT_EQ(back, v);
}

TEST(Json, MalformedDocumentsAreFormatErrors) {
  GradedBasis b({"1"}, {0});
  EXPECT_THROW(parseVector(Json::parse(R"([[0, 0]])"), b, 0), FormatError);
  EXPECT_THROW(parseVector(Json::parse(R"([["Y", 0, 1]])"), b, 0), FormatError);
  EXPECT_THROW(parseVector(Json::parse(R"([[0, 0, 1, 0]])"), b, 0), FormatError);
  EXPECT_THROW(parseDgAlgebra(Json::parse(R"({"field": "Q"})")), FormatError);
  EXPECT_THROW(parseField(Json::parse(R"({"field": "F4"})")), FormatError);
}

TEST(Json, ConstructRecipes) {
  auto lau = parseExtension(Json::parse(R"({"construct": "laurent_extension", "field": "F2", "n": 3})"));
  EXPECT_EQ(lau.rank(), 3);
  auto dn = parseDgAlgebra(Json::parse(R"({"construct": "dual_numbers", "field": "Q"})"));
  EXPECT_EQ(dn, dualNumbers(Q));
  auto demo = parseExtension(Json::parse(R"({"demo": "laurent F3 2"})"));
  EXPECT_EQ(demo.target(), laurentExtension(FieldSpec::primeField(3), 2).target());
}

TEST(Json, ReportsAndHomology) {
  auto h = homology(dualNumbers(Q));
  auto j = toJson(h);
  EXPECT_EQ(j["window"], Json::parse("[-1, 0]"));
  ValidationReport r;
  r.add("a", true);
  r.add("b", false, "detail");
  auto jr = toJson(r);
  EXPECT_EQ(jr["ok"], false);
}
