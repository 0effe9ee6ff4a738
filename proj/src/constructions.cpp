#include "dgsep/constructions.hpp"

#include <cstdlib>
#include <numeric>

namespace dgsep {

namespace {

GradedVector basisVector(int label, int exponent = 0) { return GradedVector::unit({label, exponent}); }

std::vector<std::vector<GradedVector>> emptyTable(int n) {
  return std::vector<std::vector<GradedVector>>(n, std::vector<GradedVector>(n));
}

}  // namespace

GradedAlgebra groundField(const FieldSpec& field) {
  GradedBasis basis({"1"}, {0});
  auto table = emptyTable(1);
  table[0][0] = basisVector(0);
  return GradedAlgebra(field, basis, std::move(table), basisVector(0));
}

GradedAlgebra laurentPolynomials(const FieldSpec& field, int degree) {
  if (degree == 0) throw FormatError("Laurent generator must have nonzero degree");
  GradedBasis basis({"1"}, {0}, degree);
  auto table = emptyTable(1);
  table[0][0] = basisVector(0);
  return GradedAlgebra(field, basis, std::move(table), basisVector(0));
}

GradedAlgebra finiteFieldExtension(std::uint32_t p, const std::vector<long>& coefficients,
                                   const std::string& generator) {
  const auto field = FieldSpec::primeField(p);
  const int m = static_cast<int>(coefficients.size());
  if (m < 1) throw FormatError("finite field extension needs a polynomial of degree >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i)
    labels.push_back(i == 0 ? "1" : i == 1 ? generator : generator + "^" + std::to_string(i));
  GradedBasis basis(labels, std::vector<int>(m, 0));

  // u^k reduced modulo f, for k < 2m - 1, as coefficient vectors over F_p.
  std::vector<std::vector<Scalar>> powers;
  std::vector<Scalar> cur(m, Scalar::residue(0, p));
  cur[0] = Scalar::residue(1, p);
  for (int k = 0; k < 2 * m - 1; ++k) {
    powers.push_back(cur);
    Scalar top = cur[m - 1];
    std::vector<Scalar> next(m, Scalar::residue(0, p));
    for (int i = m - 1; i > 0; --i) next[i] = cur[i - 1];
    for (int i = 0; i < m; ++i) next[i] -= top * Scalar::residue(coefficients[i], p);
    cur = next;
  }
  auto table = emptyTable(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) table[i][j].add({k, 0}, powers[i + j][k]);
  GradedAlgebra alg(field, basis, std::move(table), basisVector(0));

  // Field check: every nonzero element has an injective left multiplication.
  long total = 1;
  for (int i = 0; i < m; ++i) total *= p;
  for (long code = 1; code < total; ++code) {
    GradedVector x;
    long c = code;
    for (int i = 0; i < m; ++i, c /= p) x.add({i, 0}, Scalar::residue(c % p, p));
    if (rank(blockMatrix(basis, basis, 0, 0, alg.leftMultiplication(x))) < m)
      throw ConsistencyError("finite field extension: polynomial is reducible");
  }
  return alg;
}

std::vector<GradedVector> frobenius(const GradedAlgebra& alg) {
  const auto p = alg.field().characteristic;
  if (p == 0) throw Error("frobenius needs positive characteristic");
  std::vector<GradedVector> images;
  for (int i = 0; i < alg.size(); ++i) {
    GradedVector x = alg.element({i, 0});
    GradedVector acc = alg.unit();
    for (std::uint32_t k = 0; k < p; ++k) acc = alg.multiply(acc, x);
    images.push_back(acc);
  }
  return images;
}

GradedAlgebra twistedLaurent(const TwistedLaurentSpec& spec) {
  const auto& r0 = spec.coefficients;
  const auto& rb = r0.basis();
  const int n0 = r0.size();
  const int m = spec.order;
  if (m < 1) throw FormatError("twisted Laurent: order must be positive");
  if (spec.generatorDegree == 0) throw FormatError("twisted Laurent: generator degree must be nonzero");
  if (rb.isPeriodic()) throw FormatError("twisted Laurent: coefficient ring must not be periodic");
  for (int d : rb.degrees())
    if (d != 0) throw FormatError("twisted Laurent: coefficient ring must sit in degree 0");
  if (static_cast<int>(spec.automorphism.size()) != n0)
    throw FormatError("twisted Laurent: automorphism needs one image per coefficient label");

  auto phi = [&](const GradedVector& v) { return applyLinear([&](BasisKey k) { return spec.automorphism.at(k.label); }, v); };

  if (phi(r0.unit()) != r0.unit()) throw ConsistencyError("twisted Laurent: automorphism is not unital");
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j)
      if (phi(r0.product(i, j)) != r0.multiply(spec.automorphism[i], spec.automorphism[j]))
        throw ConsistencyError("twisted Laurent: automorphism is not multiplicative");

  // phi^j on labels for 0 <= j <= m.
  std::vector<std::vector<GradedVector>> powers(m + 1);
  for (int i = 0; i < n0; ++i) powers[0].push_back(r0.element({i, 0}));
  for (int j = 1; j <= m; ++j)
    for (int i = 0; i < n0; ++i) powers[j].push_back(phi(powers[j - 1][i]));
  for (int i = 0; i < n0; ++i)
    if (powers[m][i] != r0.element({i, 0}))
      throw AutomorphismOrderError("twisted Laurent: phi^" + std::to_string(m) + " is not the identity");

  const int g = spec.generatorDegree;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n0; ++i) {
      std::string x = j == 0 ? "" : j == 1 ? spec.generator : spec.generator + "^" + std::to_string(j);
      const std::string& r = rb.label(i);
      labels.push_back(x.empty() ? r : (r == "1" ? x : r + "*" + x));
      degrees.push_back(j * g);
    }
  GradedBasis basis(labels, degrees, m * g);

  auto table = emptyTable(m * n0);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n0; ++i)
      for (int l = 0; l < m; ++l)
        for (int k = 0; k < n0; ++k) {
          GradedVector coeff = r0.multiply(r0.element({i, 0}), powers[j][k]);
          int pos = j + l, exp = 0;
          if (pos >= m) {
            pos -= m;
            exp = 1;
          }
          GradedVector& out = table[j * n0 + i][l * n0 + k];
          for (const auto& [key, c] : coeff.terms()) out.add({pos * n0 + key.label, exp}, c);
        }
  return GradedAlgebra(r0.field(), basis, std::move(table), r0.unit());
}

ValidationReport checkAcyclicDivisionSpec(const AcyclicDivisionSpec& spec) {
  ValidationReport rep;
  const auto& c = spec.cycles;
  const auto& cb = c.basis();
  const int n = c.size();
  rep.merge(validateAlgebra(c), "cycle algebra: ");
  if (static_cast<int>(spec.derivation.size()) != n) {
    rep.add("derivation shape", false, "derivation needs one value per label");
    return rep;
  }
  auto period = cb.period();
  auto D = [&](BasisKey k) { return koszulShift(spec.derivation[k.label], k.exponent, -1, period); };
  auto Dv = [&](const GradedVector& v) { return applyLinear(D, v); };

  std::optional<std::string> fail;
  for (int i = 0; i < n && !fail; ++i)
    for (const auto& [k, coef] : spec.derivation[i].terms())
      if (cb.degreeOf(k) != cb.degree(i) - 1) {
        fail = "D(" + cb.label(i) + ") has a term of degree " + std::to_string(cb.degreeOf(k));
        break;
      }
  rep.addFirstFailure("D has degree -1", fail);

  fail.reset();
  auto exps = parityExponents(cb);
  for (int i = 0; i < n && !fail; ++i)
    for (int ei : exps)
      for (int j = 0; j < n && !fail; ++j)
        for (int ej : exps) {
          BasisKey a{i, ei}, b{j, ej};
          auto lhs = Dv(c.multiply(a, b));
          auto rhs = c.multiply(D(a), c.element(b)) + signOf(cb.degreeOf(a)) * c.multiply(c.element(a), D(b));
          if (lhs != rhs && !fail) fail = "derivation law fails on " + cb.keyName(a) + ", " + cb.keyName(b);
        }
  rep.addFirstFailure("D is a graded derivation", fail);

  bool wOk = spec.ySquared.isZero() || (spec.ySquared.isHomogeneous(cb) && *spec.ySquared.degree(cb) == -2);
  rep.add("y^2 has degree -2", wOk);
  rep.add("D(y^2) = 0", Dv(spec.ySquared).isZero());

  fail.reset();
  for (int i = 0; i < n && !fail; ++i) {
    auto a = c.element({i, 0});
    if (Dv(Dv(a)) != c.multiply(spec.ySquared, a) - c.multiply(a, spec.ySquared))
      fail = "D^2(" + cb.label(i) + ") != [y^2, " + cb.label(i) + "]";
  }
  rep.addFirstFailure("D^2 = [y^2, -]", fail);

  if (period) {
    bool central = *period % 2 == 0 || c.field().characteristic == 2;
    rep.add("periodicity unit central in the extension", central,
            central ? "" : "odd periodicity unit anticommutes with y");
  }
  return rep;
}

DgAlgebra acyclicDivisionFromCycles(const AcyclicDivisionSpec& spec) {
  auto rep = checkAcyclicDivisionSpec(spec);
  if (!rep.ok()) throw ConsistencyError("acyclic division spec rejected:\n" + rep.str());

  const auto& c = spec.cycles;
  const auto& cb = c.basis();
  const int n = c.size();
  auto period = cb.period();
  auto D = [&](BasisKey k) { return koszulShift(spec.derivation[k.label], k.exponent, -1, period); };

  std::vector<std::string> labels = cb.labels();
  std::vector<int> degrees = cb.degrees();
  for (int i = 0; i < n; ++i) {
    labels.push_back(cb.label(i) == "1" ? spec.generator : spec.generator + "*" + cb.label(i));
    degrees.push_back(cb.degree(i) - 1);
  }
  GradedBasis basis(labels, degrees, period);

  auto yTimes = [&](const GradedVector& v) {
    GradedVector out;
    for (const auto& [k, coef] : v.terms()) out.add({k.label + n, k.exponent}, coef);
    return out;
  };

  auto table = emptyTable(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto cij = c.product(i, j);
      auto dcj = c.multiply(D({i, 0}), c.element({j, 0}));
      Scalar s = signOf(cb.degree(i));
      table[i][j] = cij;
      table[i][n + j] = s * (yTimes(cij) - dcj);
      table[n + i][j] = yTimes(cij);
      table[n + i][n + j] = s * (c.multiply(spec.ySquared, cij) - yTimes(dcj));
    }

  std::vector<GradedVector> d(2 * n);
  for (int i = 0; i < n; ++i) d[n + i] = GradedVector::unit({i, 0});
  GradedAlgebra alg(c.field(), basis, std::move(table), c.unit());
  return DgAlgebra(std::move(alg), std::move(d));
}

DgAlgebra dualNumbers(const FieldSpec& field) {
  GradedBasis basis({"1", "X"}, {0, -1});
  auto table = emptyTable(2);
  table[0][0] = basisVector(0);
  table[0][1] = basisVector(1);
  table[1][0] = basisVector(1);
  GradedAlgebra alg(field, basis, std::move(table), basisVector(0));
  return DgAlgebra(std::move(alg), {GradedVector{}, basisVector(0)});
}

// ---------------------------------------------------------------------------
// DgExtension

DgExtension::DgExtension(DgAlgebra source, DgAlgebra target, std::vector<GradedVector> map,
                         int periodPower, std::vector<GradedVector> leftBasis)
    : source_(std::make_shared<const DgAlgebra>(std::move(source))),
      target_(std::make_shared<const DgAlgebra>(std::move(target))),
      map_(std::move(map)),
      periodPower_(periodPower),
      leftBasis_(std::move(leftBasis)) {
  const auto& sb = source_->basis();
  const auto& tb = target_->basis();
  if (source_->field() != target_->field()) throw FormatError("extension: source and target fields differ");
  if (static_cast<int>(map_.size()) != sb.size()) throw FormatError("extension: map needs one image per source label");
  if (sb.isPeriodic() != tb.isPeriodic())
    throw FormatError("extension: source and target must both be periodic or both not");
  if (sb.isPeriodic()) {
    if (periodPower_ < 1 || *sb.period() != periodPower_ * *tb.period())
      throw FormatError("extension: source period must equal period_power times the target period");
  }
  const auto p = target_->field().characteristic;
  for (auto& v : map_) {
    GradedVector n;
    for (const auto& [k, c] : v.terms()) {
      if (k.label < 0 || k.label >= tb.size()) throw FormatError("extension: map refers to unknown label");
      n.add(k, c.in(p));
    }
    v = n;
  }
  if (leftBasis_.empty()) throw FormatError("extension: left basis is empty");
  for (auto& m : leftBasis_) {
    GradedVector n;
    for (const auto& [k, c] : m.terms()) {
      if (k.label < 0 || k.label >= tb.size()) throw FormatError("extension: left basis refers to unknown label");
      n.add(k, c.in(p));
    }
    m = n;
    if (m.isZero() || !m.isHomogeneous(tb)) throw FormatError("extension: left basis elements must be homogeneous and nonzero");
    leftDegrees_.push_back(*m.degree(tb));
  }
}

GradedVector DgExtension::apply(BasisKey k) const {
  return map_.at(k.label).shifted(periodPower_ * k.exponent);
}

GradedVector DgExtension::apply(const GradedVector& v) const {
  return applyLinear([this](BasisKey k) { return apply(k); }, v);
}

DegreeWindow DgExtension::freenessWindow() const {
  const auto& sb = source_->basis();
  if (sb.isPeriodic()) return sb.fold(0);
  return target_->basis().support();
}

std::vector<std::pair<int, BasisKey>> DgExtension::decompositionColumns(int degree) const {
  std::vector<std::pair<int, BasisKey>> cols;
  for (int s = 0; s < rank(); ++s)
    for (auto k : source_->basis().component(degree - leftDegrees_[s])) cols.emplace_back(s, k);
  return cols;
}

const Matrix& DgExtension::decompositionInverse(int degree) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->inverses.find(degree);
    if (it != cache_->inverses.end()) return *it->second;
  }
  const auto& tb = target_->basis();
  const auto& talg = target_->algebra();
  auto comp = tb.component(degree);
  auto cols = decompositionColumns(degree);
  Matrix m = zeroMatrix(static_cast<Eigen::Index>(comp.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    m.col(static_cast<Eigen::Index>(j)) =
        coordinates(talg.multiply(apply(cols[j].second), leftBasis_[cols[j].first]), comp);
  auto inv = inverse(m);
  if (!inv) {
    std::string why = dgsep::rank(m) < m.rows() ? "left basis does not generate" : "left basis is not independent";
    throw FreenessError("extension: " + why, degree);
  }
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->inverses.emplace(degree, std::make_shared<const Matrix>(std::move(*inv)));
  return *it->second;
}

std::vector<GradedVector> DgExtension::decompose(const GradedVector& u) const {
  std::vector<GradedVector> out(leftBasis_.size());
  if (u.isZero()) return out;
  const auto& tb = target_->basis();
  int degree = *u.degree(tb);
  const Matrix& inv = decompositionInverse(degree);
  Vector x = inv * coordinates(u, tb.component(degree));
  auto cols = decompositionColumns(degree);
  for (std::size_t j = 0; j < cols.size(); ++j)
    out[cols[j].first].add(cols[j].second, x(static_cast<Eigen::Index>(j)));
  return out;
}

ValidationReport validateExtension(const DgExtension& ext) {
  ValidationReport rep;
  const auto& A = ext.source();
  const auto& B = ext.target();
  const auto& sb = A.basis();
  const auto& tb = B.basis();

  rep.add("phi(1) = 1", ext.apply(A.algebra().unit()) == B.algebra().unit());

  std::optional<std::string> fail;
  for (int i = 0; i < sb.size() && !fail; ++i) {
    auto img = ext.apply(BasisKey{i, 0});
    if (!img.isZero() && (!img.isHomogeneous(tb) || *img.degree(tb) != sb.degree(i)))
      fail = "phi(" + sb.label(i) + ") is not homogeneous of degree " + std::to_string(sb.degree(i));
  }
  rep.addFirstFailure("phi has degree 0", fail);

  fail.reset();
  for (int i = 0; i < sb.size() && !fail; ++i)
    for (int j = 0; j < sb.size() && !fail; ++j) {
      auto lhs = ext.apply(A.algebra().product(i, j));
      auto rhs = B.algebra().multiply(ext.apply(BasisKey{i, 0}), ext.apply(BasisKey{j, 0}));
      if (lhs != rhs) fail = "phi(" + sb.label(i) + "*" + sb.label(j) + ") != phi(" + sb.label(i) + ")phi(" + sb.label(j) + ")";
    }
  rep.addFirstFailure("phi multiplicative", fail);

  fail.reset();
  for (int i = 0; i < sb.size() && !fail; ++i) {
    auto lhs = ext.apply(A.d(BasisKey{i, 0}));
    auto rhs = B.d(ext.apply(BasisKey{i, 0}));
    if (lhs != rhs) fail = "phi(d " + sb.label(i) + ") != d phi(" + sb.label(i) + ")";
  }
  rep.addFirstFailure("phi commutes with differentials", fail);

  fail.reset();
  auto w = ext.freenessWindow();
  for (int n = w.lo; n <= w.hi && !fail; ++n) {
    try {
      ext.checkFreeness(n);
    } catch (const FreenessError& e) {
      fail = e.what();
    }
  }
  rep.addFirstFailure("left basis is free", fail);
  rep.window = w;
  return rep;
}

DgExtension identityExtension(const DgAlgebra& alg) {
  std::vector<GradedVector> map;
  for (int i = 0; i < alg.algebra().size(); ++i) map.push_back(alg.algebra().element({i, 0}));
  return DgExtension(alg, alg, std::move(map), alg.basis().isPeriodic() ? 1 : 0, {alg.algebra().unit()});
}

DgExtension groundFieldExtension(const DgAlgebra& target, std::vector<GradedVector> leftBasis) {
  if (target.basis().isPeriodic())
    throw FormatError("ground field extension: target must not be periodic");
  return DgExtension(DgAlgebra(groundField(target.field())), target, {target.algebra().unit()}, 0,
                     std::move(leftBasis));
}

// ---------------------------------------------------------------------------
// TensorBimodule

TensorBimodule::TensorBimodule(DgExtension ext) : ext_(std::move(ext)) {
  const auto& tb = ext_.target().basis();
  nTarget_ = tb.size();
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (int t = 0; t < ext_.rank(); ++t)
    for (int i = 0; i < nTarget_; ++i) {
      labels.push_back(tb.label(i) + "|" + std::to_string(t));
      degrees.push_back(tb.degree(i) + ext_.leftBasisDegree(t));
    }
  basis_ = GradedBasis(labels, degrees, tb.period());
  for (int t = 0; t < ext_.rank(); ++t) dLeftBasis_.push_back(ext_.decompose(ext_.target().d(ext_.leftBasis()[t])));
}

GradedVector TensorBimodule::pure(const GradedVector& x, int t) const {
  GradedVector out;
  for (const auto& [k, c] : x.terms()) out.add({t * nTarget_ + k.label, k.exponent}, c);
  return out;
}

GradedVector TensorBimodule::slot(const GradedVector& v, int t) const {
  GradedVector out;
  for (const auto& [k, c] : v.terms())
    if (slotOf(k) == t) out.add(leftFactor(k), c);
  return out;
}

GradedVector TensorBimodule::differential(BasisKey k) const {
  const auto& B = ext_.target();
  const auto& alg = B.algebra();
  const int t = slotOf(k);
  const BasisKey x = leftFactor(k);
  GradedVector out = pure(B.d(x), t);
  Scalar sign = signOf(B.basis().degreeOf(x));
  for (int s = 0; s < ext_.rank(); ++s) {
    if (dLeftBasis_[t][s].isZero()) continue;
    out += sign * pure(alg.multiply(alg.element(x), ext_.apply(dLeftBasis_[t][s])), s);
  }
  return out;
}

GradedVector TensorBimodule::differential(const GradedVector& v) const { return applyLinear(differentialOp(), v); }

GradedVector TensorBimodule::leftAction(const GradedVector& b, const GradedVector& v) const {
  const auto& alg = targetAlgebra();
  GradedVector out;
  for (int t = 0; t < ext_.rank(); ++t) {
    auto x = slot(v, t);
    if (!x.isZero()) out += pure(alg.multiply(b, x), t);
  }
  return out;
}

GradedVector TensorBimodule::rightAction(const GradedVector& v, const GradedVector& b) const {
  const auto& alg = targetAlgebra();
  GradedVector out;
  for (int t = 0; t < ext_.rank(); ++t) {
    auto x = slot(v, t);
    if (x.isZero()) continue;
    for (const auto& [bk, bc] : b.terms()) {
      auto coeffs = ext_.decompose(alg.multiply(ext_.leftBasis()[t], alg.element(bk)));
      for (int s = 0; s < ext_.rank(); ++s) {
        if (coeffs[s].isZero()) continue;
        out += bc * pure(alg.multiply(x, ext_.apply(coeffs[s])), s);
      }
    }
  }
  return out;
}

GradedVector TensorBimodule::multiply(BasisKey k) const {
  const auto& alg = targetAlgebra();
  return alg.multiply(alg.element(leftFactor(k)), ext_.leftBasis()[slotOf(k)]);
}

GradedVector TensorBimodule::multiply(const GradedVector& v) const { return applyLinear(multiplicationOp(), v); }

BasisOp TensorBimodule::differentialOp() const {
  return [this](BasisKey k) { return differential(k); };
}

BasisOp TensorBimodule::multiplicationOp() const {
  return [this](BasisKey k) { return multiply(k); };
}

BasisOp TensorBimodule::commutatorOp(const GradedVector& b) const {
  return [this, b](BasisKey k) {
    auto e = GradedVector::unit(k);
    return leftAction(b, e) - rightAction(e, b);
  };
}

GradedLinearMap multiplicationMap(const TensorBimodule& t) {
  auto shared = std::make_shared<const TensorBimodule>(t);
  return GradedLinearMap(t.basis(), t.extension().target().basis(), 0,
                         [shared](BasisKey k) { return shared->multiply(k); });
}

// ---------------------------------------------------------------------------
// Cycles of an extension

CycleExtension cycleExtension(const DgExtension& ext) {
  const auto& A = ext.source();
  const auto& B = ext.target();
  CycleExtension out;
  out.sourceCycles = cycles(A);
  out.targetCycles = cycles(B);
  const auto& cycA = out.sourceCycles;
  const auto& cycB = out.targetCycles;
  const auto& kb = cycB.algebra.basis();

  std::vector<GradedVector> map;
  std::optional<std::string> fail;
  for (int i = 0; i < cycA.algebra.size(); ++i) {
    auto img = ext.apply(cycA.inclusion[i]);
    if (!B.d(img).isZero() && !fail) fail = "image of " + cycA.algebra.basis().label(i) + " is not a cycle";
    map.push_back(expressInCycles(cycB, B.basis(), img));
  }
  out.report.addFirstFailure("phi maps cycles to cycles", fail);

  DgAlgebra kerA(cycA.algebra), kerB(cycB.algebra);
  auto applyRestricted = [&](BasisKey k) { return map.at(k.label).shifted(ext.periodPower() * k.exponent); };

  // Greedy left basis over one fold of the source period (or the support).
  DegreeWindow w = kb.isPeriodic() ? kerA.basis().fold(0) : kb.support();
  std::vector<GradedVector> chosen;
  std::vector<int> chosenDeg;
  for (int n = w.lo; n <= w.hi; ++n) {
    auto comp = kb.component(n);
    for (auto key : comp) {
      std::vector<Vector> cols;
      for (std::size_t c = 0; c < chosen.size(); ++c)
        for (auto ak : kerA.basis().component(n - chosenDeg[c]))
          cols.push_back(coordinates(kerB.algebra().multiply(applyRestricted(ak), chosen[c]), comp));
      Matrix span = zeroMatrix(static_cast<Eigen::Index>(comp.size()), static_cast<Eigen::Index>(cols.size()));
      for (std::size_t j = 0; j < cols.size(); ++j) span.col(static_cast<Eigen::Index>(j)) = cols[j];
      auto candidate = coordinates(kerB.algebra().element(key), comp);
      if (!solveLinear(span, candidate)) {
        chosen.push_back(kerB.algebra().element(key));
        chosenDeg.push_back(n);
      }
    }
  }
  if (chosen.empty()) throw FreenessError("cycle extension: target cycles are zero", w.lo);
  out.extension = DgExtension(kerA, kerB, map, ext.periodPower(), chosen);
  auto rep = validateExtension(out.extension);
  if (auto c = rep.find("left basis is free"); c && !c->passed)
    throw FreenessError("cycle extension: greedy left basis is not free: " + c->detail, w.lo);
  out.report.merge(rep, "cycle extension: ");
  return out;
}

GradedVector CycleTensorInclusion::apply(const GradedVector& v) const {
  const auto& cycExt = cycles->extension;
  const auto& ext = tensor->extension();
  const auto& alg = ext.target().algebra();
  GradedVector out;
  for (const auto& [k, c] : v.terms()) {
    int t = cycleTensor->slotOf(k);
    GradedVector x = cycles->targetCycles.embed(GradedVector::unit(cycleTensor->leftFactor(k), c));
    GradedVector ct = cycles->targetCycles.embed(cycExt.leftBasis()[t]);
    auto coeffs = ext.decompose(ct);
    for (int s = 0; s < ext.rank(); ++s)
      if (!coeffs[s].isZero()) out += tensor->pure(alg.multiply(x, ext.apply(coeffs[s])), s);
  }
  return out;
}

Matrix CycleTensorInclusion::block(int n) const {
  return blockMatrix(cycleTensor->basis(), tensor->basis(), n, 0,
                     [this](BasisKey k) { return apply(GradedVector::unit(k)); });
}

bool CycleTensorInclusion::injectiveOn(const DegreeWindow& w) const {
  for (int n = w.lo; n <= w.hi; ++n) {
    Matrix m = block(n);
    if (rank(m) != m.cols()) return false;
  }
  return true;
}

DegreeWindow CycleTensorInclusion::window() const {
  const auto& b = tensor->basis();
  return b.isPeriodic() ? b.fold(0) : b.support();
}

CycleTensorInclusion cycleTensorInclusion(const DgExtension& ext) {
  CycleTensorInclusion ups;
  auto cyc = std::make_shared<CycleExtension>(cycleExtension(ext));
  ups.cycles = cyc;
  ups.cycleTensor = std::make_shared<const TensorBimodule>(cyc->extension);
  ups.tensor = std::make_shared<const TensorBimodule>(ext);
  return ups;
}

}  // namespace dgsep
