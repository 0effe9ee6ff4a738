#include "dgsep/examples.hpp"

namespace dgsep {

DgExtension laurentExtension(const FieldSpec& field, int n, int degree) {
  if (n < 1) throw FormatError("Laurent extension needs n >= 1");
  DgAlgebra source(laurentPolynomials(field, n * degree));
  DgAlgebra target(laurentPolynomials(field, degree));
  std::vector<GradedVector> basis;
  for (int i = 0; i < n; ++i) basis.push_back(GradedVector::unit({0, i}));
  return DgExtension(source, target, {GradedVector::unit({0, 0})}, n, std::move(basis));
}

DgAlgebra acyclicLaurent(const FieldSpec& field, bool inverseSquare, int degree) {
  AcyclicDivisionSpec spec{laurentPolynomials(field, degree), {GradedVector{}}, {}};
  if (inverseSquare) {
    if (degree != 2) throw FormatError("y^2 = X^-1 needs |X| = 2");
    spec.ySquared = GradedVector::unit({0, -1});
  }
  return acyclicDivisionFromCycles(spec);
}

DgExtension acyclicLaurentExtension(const FieldSpec& field, int n) {
  if (n < 1) throw FormatError("Laurent extension needs n >= 1");
  DgAlgebra source = acyclicLaurent(field, false, 2 * n);
  DgAlgebra target = acyclicLaurent(field, false, 2);
  std::vector<GradedVector> map{GradedVector::unit({0, 0}), GradedVector::unit({1, 0})};
  std::vector<GradedVector> basis;
  for (int i = 0; i < n; ++i) basis.push_back(GradedVector::unit({0, i}));
  return DgExtension(source, target, std::move(map), n, std::move(basis));
}

DgExtension laurentIntoAcyclic(const FieldSpec& field, bool inverseSquare) {
  DgAlgebra source(laurentPolynomials(field, 2));
  DgAlgebra target = acyclicLaurent(field, inverseSquare);
  return DgExtension(source, target, {GradedVector::unit({0, 0})}, 1,
                     {GradedVector::unit({0, 0}), GradedVector::unit({1, 0})});
}

DgExtension dualNumbersExtension(const FieldSpec& field) {
  return groundFieldExtension(dualNumbers(field), {GradedVector::unit({0, 0}), GradedVector::unit({1, 0})});
}

DgExtension primeFieldExtension(std::uint32_t p, const std::vector<long>& coefficients) {
  DgAlgebra target(finiteFieldExtension(p, coefficients));
  std::vector<GradedVector> basis;
  for (int i = 0; i < target.algebra().size(); ++i) basis.push_back(GradedVector::unit({i, 0}));
  return groundFieldExtension(target, std::move(basis));
}

std::vector<ExtensionExample> mainTheoremCatalog() {
  std::vector<ExtensionExample> out;
  auto f3 = FieldSpec::primeField(3);
  auto f5 = FieldSpec::primeField(5);
  auto q = FieldSpec::rationals();

  out.push_back({"ground-field Q", identityExtension(DgAlgebra(groundField(q)))});
  out.push_back({"field-extension F9", primeFieldExtension(3, {1, 0})});
  for (int n : {1, 2, 3}) out.push_back({"laurent F3 " + std::to_string(n), laurentExtension(f3, n)});
  for (int n : {2, 5}) out.push_back({"laurent F5 " + std::to_string(n), laurentExtension(f5, n)});
  for (int n : {1, 2, 3})
    out.push_back({"acyclic-laurent F3 " + std::to_string(n), acyclicLaurentExtension(f3, n)});
  out.push_back({"acyclic-laurent F5 2", acyclicLaurentExtension(f5, 2)});
  out.push_back({"laurent-into-acyclic F3 w=0", laurentIntoAcyclic(f3)});
  out.push_back({"laurent-into-acyclic F5 w=0", laurentIntoAcyclic(f5)});
  out.push_back({"laurent-into-acyclic F5 w=Xinv", laurentIntoAcyclic(f5, true)});
  for (const auto& f : {q, f3, f5}) out.push_back({"dual-numbers-over-" + f.name(), dualNumbersExtension(f)});
  return out;
}

DgAlgebra squareZeroAlgebra(const FieldSpec& field, int degree) {
  GradedBasis basis({"1", "X"}, {0, degree});
  std::vector<std::vector<GradedVector>> table(2, std::vector<GradedVector>(2));
  table[0][0] = GradedVector::unit({0, 0});
  table[0][1] = GradedVector::unit({1, 0});
  table[1][0] = GradedVector::unit({1, 0});
  return DgAlgebra(GradedAlgebra(field, basis, std::move(table), GradedVector::unit({0, 0})));
}

GradedVector onGenerator(const DgAlgebra& alg, int j, const GradedVector& a) {
  const int na = alg.algebra().size();
  GradedVector out;
  for (const auto& [k, c] : a.terms()) out.add({j * na + k.label, k.exponent}, c);
  return out;
}

DgModule freeModule(const DgAlgebra& alg, const std::vector<int>& degrees) {
  const auto& a = alg.algebra();
  const auto& ab = a.basis();
  const int na = a.size();
  const bool plain = na == 1 && ab.label(0) == "1";
  std::vector<std::string> labels;
  std::vector<int> degs;
  for (std::size_t j = 0; j < degrees.size(); ++j)
    for (int x = 0; x < na; ++x) {
      std::string gen = "e" + std::to_string(j + 1);
      labels.push_back(plain ? gen : ab.label(x) + "." + gen);
      degs.push_back(ab.degree(x) + degrees[j]);
    }
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<GradedVector>> action(na, std::vector<GradedVector>(n));
  std::vector<GradedVector> delta(n);
  for (int j = 0; j < static_cast<int>(degrees.size()); ++j)
    for (int x = 0; x < na; ++x) {
      delta[j * na + x] = onGenerator(alg, j, alg.differentialOnLabels()[x]);
      for (int b = 0; b < na; ++b) action[b][j * na + x] = onGenerator(alg, j, a.product(b, x));
    }
  return DgModule(alg, GradedBasis(labels, degs, ab.period()), std::move(action), std::move(delta));
}

namespace {

GradedVector key(int label, int exponent = 0) { return GradedVector::unit({label, exponent}); }

}  // namespace

std::vector<SesExample> liftCatalog() {
  std::vector<SesExample> out;

  // F2 -> F4 = F2[u]/(u^2 + u + 1), basis {1, u}.
  auto f4 = primeFieldExtension(2, {1, 1});
  const auto& B = f4.target();
  auto u = key(1);
  auto one = key(0);
  {
    auto L = freeModule(B, {0}), N = freeModule(B, {0});
    auto M = freeModule(B, {0, 0});
    ModuleMap f{0, {onGenerator(B, 0, one), onGenerator(B, 0, u)}};
    ModuleMap g{0, {GradedVector{}, GradedVector{}, onGenerator(B, 0, one), onGenerator(B, 0, u)}};
    out.push_back({"F4 direct-sum", f4, {L, M, N, f, g}});
  }
  {
    // f(e) = e1 + u e2, g(e1) = u e, g(e2) = e.
    auto L = freeModule(B, {0}), N = freeModule(B, {0});
    auto M = freeModule(B, {0, 0});
    auto fe = onGenerator(B, 0, one) + onGenerator(B, 1, u);
    ModuleMap f{0, {fe, M.act(u, fe)}};
    auto ge1 = onGenerator(B, 0, u), ge2 = onGenerator(B, 0, one);
    ModuleMap g{0, {ge1, N.act(u, ge1), ge2, N.act(u, ge2)}};
    out.push_back({"F4 scrambled", f4, {L, M, N, f, g}});
  }
  {
    // Graded: L = <l> in degree 1, M = <m1, m2, m3> in degrees 0, 1, 1,
    // N = <n1, n2> in degrees 0, 1; f(l) = m2 + u m3, g = (n1, u n2, n2).
    auto L = freeModule(B, {1}), N = freeModule(B, {0, 1});
    auto M = freeModule(B, {0, 1, 1});
    auto fl = onGenerator(B, 1, one) + onGenerator(B, 2, u);
    ModuleMap f{0, {fl, M.act(u, fl)}};
    std::vector<GradedVector> gm{onGenerator(B, 0, one), onGenerator(B, 1, u), onGenerator(B, 1, one)};
    ModuleMap g{0, {}};
    for (const auto& v : gm) {
      g.onLabels.push_back(v);
      g.onLabels.push_back(N.act(u, v));
    }
    out.push_back({"F4 graded-scrambled", f4, {L, M, N, f, g}});
  }
  {
    // Cone of the identity of F4: delta(e1) = e2 with e1 in degree -1.
    auto L = freeModule(B, {0}), N = freeModule(B, {-1});
    GradedBasis mb({"e1", "u.e1", "e2", "u.e2"}, {-1, -1, 0, 0});
    std::vector<std::vector<GradedVector>> action(2, std::vector<GradedVector>(4));
    for (int j = 0; j < 2; ++j) {
      action[0][2 * j] = key(2 * j);
      action[0][2 * j + 1] = key(2 * j + 1);
      action[1][2 * j] = key(2 * j + 1);
      action[1][2 * j + 1] = key(2 * j) + key(2 * j + 1);
    }
    DgModule M(B, mb, std::move(action), {key(2), key(3), {}, {}});
    ModuleMap f{0, {key(2), key(3)}};
    ModuleMap g{0, {key(0), key(1), {}, {}}};
    out.push_back({"F4 cone", f4, {L, M, N, f, g}});
  }

  // F2[T^3, T^-3] -> F2[T, T^-1] with |T| = 2.
  auto lau = laurentExtension(FieldSpec::primeField(2), 3);
  const auto& R = lau.target();
  {
    auto L = freeModule(R, {0}), N = freeModule(R, {2});
    auto M = freeModule(R, {0, 2});
    ModuleMap f{0, {key(0)}};
    ModuleMap g{0, {GradedVector{}, key(0)}};
    out.push_back({"Laurent direct-sum", lau, {L, M, N, f, g}});
  }
  {
    // f(l) = m1 + T^-1 m2, g(m1) = n, g(m2) = T n.
    auto L = freeModule(R, {0}), N = freeModule(R, {0});
    auto M = freeModule(R, {0, 2});
    ModuleMap f{0, {key(0) + key(1, -1)}};
    ModuleMap g{0, {key(0), key(0, 1)}};
    out.push_back({"Laurent scrambled", lau, {L, M, N, f, g}});
  }
  {
    // Odd degrees: f(l) = m1 + T^-1 m2, g(m1) = T^-1 n, g(m2) = n.
    auto L = freeModule(R, {1}), N = freeModule(R, {3});
    auto M = freeModule(R, {1, 3});
    ModuleMap f{0, {key(0) + key(1, -1)}};
    ModuleMap g{0, {key(0, -1), key(0)}};
    out.push_back({"Laurent odd-scrambled", lau, {L, M, N, f, g}});
  }
  return out;
}

SesExample squareZeroSequence(const FieldSpec& field) {
  auto A = squareZeroAlgebra(field);
  auto ext = groundFieldExtension(A, {key(0), key(1)});
  GradedBasis lb({"X"}, {-1});
  DgModule L(A, lb, {{key(0)}, {GradedVector{}}}, {});
  auto M = DgModule::regular(A);
  GradedBasis nb({"1"}, {0});
  DgModule N(A, nb, {{key(0)}, {GradedVector{}}}, {});
  ModuleMap f{0, {key(1)}};
  ModuleMap g{0, {key(0), GradedVector{}}};
  return {"square-zero " + field.name(), ext, {L, M, N, f, g}};
}

}  // namespace dgsep
