#include "dgsep/modules.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace dgsep {

namespace {

std::string describe(const GradedVector& v, const GradedBasis& b) { return v.isZero() ? "0" : v.str(b); }

std::uint32_t charOf(const DgModule& m) { return m.algebra().field().characteristic; }

// Unknowns of a degree-k map source -> target, one block per source label.
struct MapUnknowns {
  std::vector<std::vector<BasisKey>> comps;
  std::vector<int> offsets;
  int total = 0;
  int degree = 0;

  MapUnknowns(const GradedBasis& source, const GradedBasis& target, int k) : degree(k) {
    for (int i = 0; i < source.size(); ++i) {
      offsets.push_back(total);
      comps.push_back(target.component(source.degree(i) + k));
      total += static_cast<int>(comps.back().size());
    }
  }

  ModuleMap toMap(const Vector& x) const {
    ModuleMap f{degree, {}};
    for (std::size_t i = 0; i < comps.size(); ++i)
      f.onLabels.push_back(
          fromCoordinates(x.segment(offsets[i], static_cast<Eigen::Index>(comps[i].size())), comps[i]));
    return f;
  }
};

DegreeWindow unionWindow(std::initializer_list<const GradedBasis*> bases) {
  std::optional<DegreeWindow> w;
  for (const auto* b : bases) {
    if (b->size() == 0) continue;
    auto s = b->isPeriodic() ? b->fold(0) : b->support();
    w = w ? DegreeWindow{std::min(w->lo, s.lo), std::max(w->hi, s.hi)} : s;
  }
  return w.value_or(DegreeWindow{0, 0});
}

Matrix mapBlock(const GradedBasis& source, const GradedBasis& target, const ModuleMap& f, int n, std::uint32_t p) {
  return inField(blockMatrix(source, target, n, f.degree, [&](BasisKey k) { return f.apply(source, k); }), p);
}

// Coordinates of a homogeneous v in the span of `inclusion`, whose labels
// live in window w of the periodic (or not) basis `sub`.
GradedVector expressInSubspace(const std::vector<GradedVector>& inclusion, const GradedBasis& sub,
                               const GradedBasis& ambient, const DegreeWindow& w, const GradedVector& v,
                               std::uint32_t p) {
  if (v.isZero()) return {};
  int deg = *v.degree(ambient);
  int shift = 0;
  if (auto period = sub.period()) {
    int P = std::abs(*period);
    int q = floorDiv(deg - w.lo, P);
    shift = *period > 0 ? q : -q;
    deg -= q * P;
  } else if (!w.contains(deg)) {
    throw ClosureEscape("element of degree " + std::to_string(deg) + " lies outside the window");
  }
  GradedVector target = v.shifted(-shift);
  auto comp = ambient.component(deg);
  auto subComp = sub.component(deg);
  Matrix cols = zeroMatrix(static_cast<Eigen::Index>(comp.size()), static_cast<Eigen::Index>(subComp.size()));
  for (std::size_t j = 0; j < subComp.size(); ++j)
    cols.col(static_cast<Eigen::Index>(j)) =
        coordinates(inclusion[subComp[j].label].shifted(subComp[j].exponent), comp);
  auto x = solveLinear(inField(cols, p), inField(coordinates(target, comp), p));
  if (!x) throw ClosureEscape("element " + target.str(ambient) + " is not in the subspace");
  return fromCoordinates(*x, subComp).shifted(shift);
}

}  // namespace

// ---------------------------------------------------------------------------
// DgModule

DgModule::DgModule(DgAlgebra algebra, GradedBasis basis, std::vector<std::vector<GradedVector>> action,
                   std::vector<GradedVector> delta)
    : algebra_(std::make_shared<const DgAlgebra>(std::move(algebra))),
      basis_(std::move(basis)),
      action_(std::move(action)),
      delta_(std::move(delta)) {
  const int na = algebra_->algebra().size();
  if (basis_.period() != algebra_->basis().period())
    throw FormatError("module: period must match the algebra's period");
  if (static_cast<int>(action_.size()) != na) throw FormatError("module: action needs one row per algebra label");
  for (const auto& row : action_)
    if (static_cast<int>(row.size()) != basis_.size())
      throw FormatError("module: action row needs one entry per module label");
  if (delta_.empty()) delta_.resize(basis_.size());
  if (static_cast<int>(delta_.size()) != basis_.size()) throw FormatError("module: delta needs one value per label");
  const auto p = algebra_->field().characteristic;
  auto check = [&](GradedVector& v) {
    GradedVector out;
    for (const auto& [k, c] : v.terms()) {
      if (k.label < 0 || k.label >= basis_.size()) throw FormatError("module: label index out of range");
      out.add(k, c.in(p));
    }
    v = std::move(out);
  };
  for (auto& row : action_)
    for (auto& v : row) check(v);
  for (auto& v : delta_) check(v);
}

DgModule DgModule::regular(const DgAlgebra& alg) {
  const auto& a = alg.algebra();
  std::vector<std::vector<GradedVector>> action(a.size(), std::vector<GradedVector>(a.size()));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) action[i][j] = a.product(i, j);
  return DgModule(alg, a.basis(), std::move(action), alg.differentialOnLabels());
}

GradedVector DgModule::act(const GradedVector& a, const GradedVector& m) const {
  GradedVector out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [km, cm] : m.terms()) out += (ca * cm) * act(ka, km);
  return out;
}

GradedVector DgModule::delta(BasisKey k) const {
  return koszulShift(delta_.at(k.label), k.exponent, 1, basis_.period());
}

DgModule tensorLeftModule(const TensorBimodule& t) {
  const auto& B = t.extension().target();
  const auto& tb = t.basis();
  std::vector<std::vector<GradedVector>> action(B.algebra().size(), std::vector<GradedVector>(tb.size()));
  std::vector<GradedVector> delta(tb.size());
  for (int m = 0; m < tb.size(); ++m) {
    auto e = GradedVector::unit({m, 0});
    delta[m] = t.differential(e);
    for (int a = 0; a < B.algebra().size(); ++a) action[a][m] = t.leftAction(B.algebra().element({a, 0}), e);
  }
  return DgModule(B, tb, std::move(action), std::move(delta));
}

ValidationReport validateModule(const DgModule& m) {
  ValidationReport rep;
  const auto& A = m.algebra();
  const auto& alg = A.algebra();
  const auto& ab = alg.basis();
  const auto& mb = m.basis();
  const auto aexp = parityExponents(ab);
  const auto mexp = parityExponents(mb);
  rep.window = m.window();

  std::optional<std::string> fail;
  for (int a = 0; a < alg.size() && !fail; ++a)
    for (int i = 0; i < m.size() && !fail; ++i) {
      const auto& v = m.actionTable()[a][i];
      if (!v.isZero() && (!v.isHomogeneous(mb) || *v.degree(mb) != ab.degree(a) + mb.degree(i)))
        fail = ab.label(a) + " . " + mb.label(i) + " is not of degree " + std::to_string(ab.degree(a) + mb.degree(i));
    }
  rep.addFirstFailure("action is homogeneous", fail);

  fail.reset();
  for (int i = 0; i < m.size() && !fail; ++i) {
    auto e = GradedVector::unit({i, 0});
    if (m.act(alg.unit(), e) != e) fail = "1 . " + mb.label(i) + " = " + describe(m.act(alg.unit(), e), mb);
  }
  rep.addFirstFailure("unit acts as identity", fail);

  fail.reset();
  for (int a = 0; a < alg.size() && !fail; ++a)
    for (int ea : aexp)
      for (int b = 0; b < alg.size() && !fail; ++b)
        for (int i = 0; i < m.size() && !fail; ++i) {
          BasisKey ka{a, ea}, kb{b, 0};
          auto e = GradedVector::unit({i, 0});
          auto lhs = m.act(alg.multiply(ka, kb), e);
          auto rhs = m.act(alg.element(ka), m.act(alg.element(kb), e));
          if (lhs != rhs) fail = "(ab)m != a(bm) for " + ab.keyName(ka) + ", " + ab.label(b) + ", " + mb.label(i);
        }
  rep.addFirstFailure("action is associative", fail);

  fail.reset();
  for (int i = 0; i < m.size() && !fail; ++i) {
    const auto& v = m.deltaOnLabels()[i];
    if (!v.isZero() && (!v.isHomogeneous(mb) || *v.degree(mb) != mb.degree(i) + 1))
      fail = "delta(" + mb.label(i) + ") is not of degree " + std::to_string(mb.degree(i) + 1);
  }
  rep.addFirstFailure("delta has degree +1", fail);

  fail.reset();
  for (int i = 0; i < m.size() && !fail; ++i) {
    auto dd = m.delta(m.delta(GradedVector::unit({i, 0})));
    if (!dd.isZero()) fail = "delta^2(" + mb.label(i) + ") = " + describe(dd, mb);
  }
  rep.addFirstFailure("delta^2 = 0", fail);

  fail.reset();
  for (int a = 0; a < alg.size() && !fail; ++a)
    for (int ea : aexp)
      for (int i = 0; i < m.size() && !fail; ++i)
        for (int ei : mexp) {
          BasisKey ka{a, ea}, km{i, ei};
          auto av = alg.element(ka);
          auto mv = GradedVector::unit(km);
          auto lhs = m.delta(m.act(ka, km));
          auto rhs = m.act(A.d(ka), mv) + signOf(ab.degreeOf(ka)) * m.act(av, m.delta(km));
          if (lhs != rhs && !fail) fail = "Leibniz fails on " + ab.keyName(ka) + ", " + mb.keyName(km);
        }
  rep.addFirstFailure("module Leibniz rule", fail);
  return rep;
}

DgModule directSum(const DgModule& a, const DgModule& b) {
  if (!(a.algebra() == b.algebra())) throw FormatError("direct sum: modules over different algebras");
  std::vector<std::string> labels = a.basis().labels();
  std::vector<int> degrees = a.basis().degrees();
  std::set<std::string> seen(labels.begin(), labels.end());
  for (int i = 0; i < b.size(); ++i) {
    std::string l = b.basis().label(i);
    while (seen.count(l)) l += "'";
    seen.insert(l);
    labels.push_back(l);
    degrees.push_back(b.basis().degree(i));
  }
  const int na = a.size();
  auto shiftB = [na](const GradedVector& v) {
    GradedVector out;
    for (const auto& [k, c] : v.terms()) out.add({k.label + na, k.exponent}, c);
    return out;
  };
  const int nalg = a.algebra().algebra().size();
  std::vector<std::vector<GradedVector>> action(nalg);
  for (int x = 0; x < nalg; ++x) {
    action[x] = a.actionTable()[x];
    for (const auto& v : b.actionTable()[x]) action[x].push_back(shiftB(v));
  }
  std::vector<GradedVector> delta = a.deltaOnLabels();
  for (const auto& v : b.deltaOnLabels()) delta.push_back(shiftB(v));
  return DgModule(a.algebra(), GradedBasis(labels, degrees, a.basis().period()), std::move(action),
                  std::move(delta));
}

// ---------------------------------------------------------------------------
// Maps

GradedVector ModuleMap::apply(const GradedBasis& source, const GradedVector& v) const {
  GradedVector out;
  for (const auto& [k, c] : v.terms()) out += c * apply(source, k);
  return out;
}

ModuleMap identityMap(const DgModule& m) {
  ModuleMap f{0, {}};
  for (int i = 0; i < m.size(); ++i) f.onLabels.push_back(GradedVector::unit({i, 0}));
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f, const GradedBasis& middle) {
  ModuleMap out{g.degree + f.degree, {}};
  for (const auto& v : f.onLabels) out.onLabels.push_back(g.apply(middle, v));
  return out;
}

ValidationReport validateModuleMap(const DgModule& source, const DgModule& target, const ModuleMap& f) {
  ValidationReport rep;
  const auto& sb = source.basis();
  const auto& tb = target.basis();
  const auto& alg = source.algebra().algebra();
  const int k = f.degree;

  bool shape = static_cast<int>(f.onLabels.size()) == source.size();
  rep.add("map has one value per source label", shape);
  if (!shape) return rep;

  std::optional<std::string> fail;
  for (int i = 0; i < source.size() && !fail; ++i) {
    const auto& v = f.onLabels[i];
    if (!v.isZero() && (!v.isHomogeneous(tb) || *v.degree(tb) != sb.degree(i) + k))
      fail = "f(" + sb.label(i) + ") is not of degree " + std::to_string(sb.degree(i) + k);
  }
  rep.addFirstFailure("map has degree " + std::to_string(k), fail);
  if (fail) return rep;

  fail.reset();
  for (int i = 0; i < source.size() && !fail; ++i)
    for (int e : parityExponents(sb)) {
      BasisKey key{i, e};
      auto lhs = target.delta(f.apply(sb, key));
      auto rhs = signOf(k) * f.apply(sb, source.delta(key));
      if (lhs != rhs && !fail) fail = "delta f != (-1)^k f delta on " + sb.keyName(key);
    }
  rep.addFirstFailure("map commutes with differentials", fail);

  fail.reset();
  for (int a = 0; a < alg.size() && !fail; ++a)
    for (int i = 0; i < source.size() && !fail; ++i) {
      BasisKey ka{a, 0}, km{i, 0};
      auto lhs = f.apply(sb, source.act(ka, km));
      auto rhs = signOf(static_cast<long>(alg.basis().degree(a)) * k) * target.act(alg.element(ka), f.apply(sb, km));
      if (lhs != rhs) fail = "f(a m) != (-1)^(|a|k) a f(m) for " + alg.basis().label(a) + ", " + sb.label(i);
    }
  rep.addFirstFailure("map is linear", fail);
  return rep;
}

// ---------------------------------------------------------------------------
// Hom complexes

std::vector<ModuleMap> homComponent(const DgModule& m, const DgModule& n, int k) {
  MapUnknowns u(m.basis(), n.basis(), k);
  const auto& alg = m.algebra().algebra();
  auto residual = [&](const Vector& x) {
    auto f = u.toMap(x);
    std::vector<GradedVector> r;
    for (int a = 0; a < alg.size(); ++a)
      for (int i = 0; i < m.size(); ++i) {
        BasisKey ka{a, 0}, km{i, 0};
        r.push_back(f.apply(m.basis(), m.act(ka, km)) -
                    signOf(static_cast<long>(alg.basis().degree(a)) * k) * n.act(alg.element(ka), f.apply(m.basis(), km)));
      }
    return r;
  };
  auto sys = linearize(u.total, residual, charOf(m));
  std::vector<ModuleMap> out;
  for (const auto& v : kernelBasis(sys.a)) out.push_back(u.toMap(v));
  return out;
}

ModuleMap homDifferential(const DgModule& m, const DgModule& n, const ModuleMap& f) {
  ModuleMap out{f.degree + 1, {}};
  for (int i = 0; i < m.size(); ++i) {
    BasisKey key{i, 0};
    out.onLabels.push_back(n.delta(f.apply(m.basis(), key)) - signOf(f.degree) * f.apply(m.basis(), m.delta(key)));
  }
  return out;
}

HomComplex homComplex(const DgModule& m, const DgModule& n, std::optional<DegreeWindow> window) {
  if (!(m.algebra() == n.algebra())) throw FormatError("Hom complex: modules over different algebras");
  HomComplex h{m, n, {}, {}, {}};
  if (window) {
    h.window = *window;
  } else if (n.basis().isPeriodic()) {
    h.window = n.basis().fold(0);
  } else {
    auto sm = m.basis().support(), sn = n.basis().support();
    h.window = {sn.lo - sm.hi, sn.hi - sm.lo};
  }
  std::optional<std::string> landFail, squareFail;
  for (int k = h.window.lo; k <= h.window.hi; ++k) {
    h.components[k] = homComponent(m, n, k);
    for (std::size_t j = 0; j < h.components[k].size(); ++j) {
      auto df = homDifferential(m, n, h.components[k][j]);
      auto lin = validateModuleMap(m, n, df);
      if (auto c = lin.find("map is linear"); (!c || !c->passed) && !landFail)
        landFail = "d of basis map " + std::to_string(j) + " in degree " + std::to_string(k) + " is not linear";
      auto ddf = homDifferential(m, n, df);
      bool zero = std::all_of(ddf.onLabels.begin(), ddf.onLabels.end(), [](const GradedVector& v) { return v.isZero(); });
      if (!zero && !squareFail)
        squareFail = "d^2 of basis map " + std::to_string(j) + " in degree " + std::to_string(k) + " is nonzero";
    }
  }
  h.report.window = h.window;
  h.report.addFirstFailure("d maps Hom^k to Hom^(k+1)", landFail);
  h.report.addFirstFailure("d^2 = 0", squareFail);
  return h;
}

// ---------------------------------------------------------------------------
// Short exact sequences

ValidationReport validateSES(const ShortExactSequence& s) {
  ValidationReport rep;
  bool same = s.L.algebra() == s.M.algebra() && s.M.algebra() == s.N.algebra();
  rep.add("modules share the algebra", same);
  if (!same) return rep;
  rep.merge(validateModuleMap(s.L, s.M, s.f), "f: ");
  rep.merge(validateModuleMap(s.M, s.N, s.g), "g: ");
  rep.add("f and g have degree 0", s.f.degree == 0 && s.g.degree == 0);
  if (!rep.ok()) return rep;

  const auto p = charOf(s.M);
  DegreeWindow w = unionWindow({&s.L.basis(), &s.M.basis(), &s.N.basis()});
  rep.window = w;
  std::optional<std::string> inj, surj, comp, exact;
  for (int n = w.lo; n <= w.hi; ++n) {
    Matrix F = mapBlock(s.L.basis(), s.M.basis(), s.f, n, p);
    Matrix G = mapBlock(s.M.basis(), s.N.basis(), s.g, n, p);
    auto rf = rank(F), rg = rank(G);
    std::string at = " in degree " + std::to_string(n);
    if (rf != F.cols() && !inj) inj = "rank f = " + std::to_string(rf) + " < dim L" + at;
    if (rg != G.rows() && !surj) surj = "rank g = " + std::to_string(rg) + " < dim N" + at;
    if (F.cols() > 0 && G.rows() > 0 && !isZeroMatrix(Matrix(G * F)) && !comp) comp = "g f != 0" + at;
    if (rf + rg != F.rows() && !exact) exact = "rank f + rank g != dim M" + at;
  }
  rep.addFirstFailure("f injective", inj);
  rep.addFirstFailure("g surjective", surj);
  rep.addFirstFailure("g f = 0", comp);
  rep.addFirstFailure("ker g = im f", exact);
  return rep;
}

ValidationReport verifySplitting(const ShortExactSequence& s, const ModuleMap& sigma) {
  ValidationReport rep = validateModuleMap(s.N, s.M, sigma);
  rep.add("sigma has degree 0", sigma.degree == 0);
  std::optional<std::string> fail;
  if (static_cast<int>(sigma.onLabels.size()) == s.N.size())
    for (int i = 0; i < s.N.size() && !fail; ++i) {
      auto back = s.g.apply(s.M.basis(), sigma.onLabels[i]);
      if (back != GradedVector::unit({i, 0})) fail = "g sigma(" + s.N.basis().label(i) + ") = " + describe(back, s.N.basis());
    }
  rep.addFirstFailure("g sigma = id", fail);
  return rep;
}

SplittingResult findDgSplitting(const ShortExactSequence& s) {
  const auto& alg = s.M.algebra().algebra();
  const auto& nb = s.N.basis();
  const auto& mb = s.M.basis();
  MapUnknowns u(nb, mb, 0);
  auto residual = [&](const Vector& x) {
    auto sigma = u.toMap(x);
    std::vector<GradedVector> r;
    for (int i = 0; i < s.N.size(); ++i) {
      BasisKey key{i, 0};
      auto si = sigma.apply(nb, key);
      r.push_back(s.g.apply(mb, si) - GradedVector::unit(key));
      r.push_back(s.M.delta(si) - sigma.apply(nb, s.N.delta(key)));
      for (int a = 0; a < alg.size(); ++a)
        r.push_back(sigma.apply(nb, s.N.act({a, 0}, key)) - s.M.act(alg.element({a, 0}), si));
    }
    return r;
  };
  auto sys = linearize(u.total, residual, charOf(s.M));

  SplittingResult out;
  out.unknowns = u.total;
  if (auto x = solveLinear(sys.a, sys.b)) {
    out.sigma = u.toMap(*x);
    out.witnesses = verifySplitting(s, *out.sigma);
    if (!out.witnesses.ok())
      throw ConsistencyError("findDgSplitting: solution failed re-verification:\n" + out.witnesses.str());
    out.constraintRank = out.augmentedRank = static_cast<int>(rank(sys.a));
    return out;
  }
  out.constraintRank = static_cast<int>(rank(sys.a));
  Matrix aug(sys.a.rows(), sys.a.cols() + 1);
  aug << sys.a, sys.b;
  out.augmentedRank = static_cast<int>(rank(aug));
  std::ostringstream os;
  os << "unknowns: " << u.total << " (sigma on " << s.N.size() << " labels)\n"
     << "constraints: " << sys.a.rows() << " rows, rank " << out.constraintRank << "\n"
     << "rank [A | b] = " << out.augmentedRank << " > rank A: no degree-0 dg-module map with g sigma = id";
  out.transcript = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// Restriction of scalars

namespace {

int restrictionPower(const DgExtension& ext) {
  return ext.target().basis().isPeriodic() ? ext.periodPower() : 1;
}

BasisKey toSourceKey(BasisKey k, int power) {
  int s = k.exponent - power * floorDiv(k.exponent, power);
  return {k.label * power + s, floorDiv(k.exponent, power)};
}

BasisKey toTargetKey(BasisKey k, int power) { return {k.label / power, k.label % power + power * k.exponent}; }

}  // namespace

GradedVector restrictVector(const DgExtension& ext, const DgModule&, const GradedVector& v) {
  const int power = restrictionPower(ext);
  GradedVector out;
  for (const auto& [k, c] : v.terms()) out.add(toSourceKey(k, power), c);
  return out;
}

GradedVector unrestrictVector(const DgExtension& ext, const DgModule&, const GradedVector& v) {
  const int power = restrictionPower(ext);
  GradedVector out;
  for (const auto& [k, c] : v.terms()) out.add(toTargetKey(k, power), c);
  return out;
}

DgModule restrictModule(const DgExtension& ext, const DgModule& m) {
  const int power = restrictionPower(ext);
  const auto& mb = m.basis();
  const auto& A = ext.source();
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (int i = 0; i < m.size(); ++i)
    for (int s = 0; s < power; ++s) {
      labels.push_back(s == 0 ? mb.label(i) : mb.label(i) + "*z^" + std::to_string(s));
      degrees.push_back(mb.degreeOf({i, s}));
    }
  GradedBasis basis(labels, degrees, A.basis().period());
  const int n = basis.size();
  std::vector<std::vector<GradedVector>> action(A.algebra().size(), std::vector<GradedVector>(n));
  std::vector<GradedVector> delta(n);
  for (int j = 0; j < n; ++j) {
    auto e = GradedVector::unit(toTargetKey({j, 0}, power));
    delta[j] = restrictVector(ext, m, m.delta(e));
    for (int a = 0; a < A.algebra().size(); ++a)
      action[a][j] = restrictVector(ext, m, m.act(ext.apply(BasisKey{a, 0}), e));
  }
  return DgModule(A, std::move(basis), std::move(action), std::move(delta));
}

ModuleMap restrictMap(const DgExtension& ext, const DgModule& source, const DgModule& target, const ModuleMap& f) {
  const int power = restrictionPower(ext);
  ModuleMap out{f.degree, {}};
  for (int j = 0; j < source.size() * power; ++j)
    out.onLabels.push_back(restrictVector(ext, target, f.apply(source.basis(), toTargetKey({j, 0}, power))));
  return out;
}

ShortExactSequence restrictSES(const DgExtension& ext, const ShortExactSequence& s) {
  return {restrictModule(ext, s.L), restrictModule(ext, s.M), restrictModule(ext, s.N),
          restrictMap(ext, s.L, s.M, s.f), restrictMap(ext, s.M, s.N, s.g)};
}

SplittingResult findDgSplitting(const ShortExactSequence& s, const DgExtension& ext) {
  if (!(s.M.algebra() == ext.target())) throw FormatError("splitting over the source: sequence is not over the target");
  return findDgSplitting(restrictSES(ext, s));
}

LiftedSplitting liftSplitting(const DgExtension& ext, const CasimirCertificate& cert, const ShortExactSequence& s,
                              const ModuleMap& rho) {
  auto check = verifyCasimir(ext, cert.omega, cert.generators.empty() ? std::nullopt
                                                                      : std::optional(cert.generators));
  if (!check.ok()) throw CertificateInvalid("Casimir certificate failed re-verification:\n" + check.str());
  auto restricted = restrictSES(ext, s);
  auto rhoCheck = verifySplitting(restricted, rho);
  if (!rhoCheck.ok()) throw ConsistencyError("rho is not a splitting over the source:\n" + rhoCheck.str());

  TensorBimodule t(ext);
  auto rhoOnTarget = [&](const GradedVector& v) {
    return unrestrictVector(ext, s.M, rho.apply(restricted.N.basis(), restrictVector(ext, s.N, v)));
  };
  LiftedSplitting out;
  out.tau.degree = 0;
  for (int i = 0; i < s.N.size(); ++i) {
    auto n = GradedVector::unit({i, 0});
    GradedVector value;
    for (int slot = 0; slot < ext.rank(); ++slot) {
      auto x = t.slot(cert.omega, slot);
      if (x.isZero()) continue;
      value += s.M.act(x, rhoOnTarget(s.N.act(ext.leftBasis()[slot], n)));
    }
    out.tau.onLabels.push_back(std::move(value));
  }
  out.witnesses = verifySplitting(s, out.tau);
  return out;
}

// ---------------------------------------------------------------------------
// Cycles and induction

CycleModule cyclesModule(const DgModule& m) {
  const auto& A = m.algebra();
  if (!homology(A).acyclicOnWindow()) throw HypothesisUnverified("cycles module: algebra is not acyclic");
  CycleModule out;
  out.cycles = cycles(A);
  const auto& mb = m.basis();
  const auto p = charOf(m);
  DegreeWindow w = m.window();

  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (int n = w.lo; n <= w.hi; ++n) {
    auto comp = mb.component(n);
    auto ker = kernelBasis(inField(blockMatrix(mb, mb, n, 1, m.deltaOp()), p));
    for (std::size_t i = 0; i < ker.size(); ++i) {
      GradedVector v = fromCoordinates(ker[i], comp);
      std::string name;
      if (v.terms().size() == 1 && v.terms().begin()->second.isOne() && v.terms().begin()->first.exponent == 0)
        name = mb.label(v.terms().begin()->first.label);
      else
        name = "Z" + std::to_string(n) + "_" + std::to_string(i);
      labels.push_back(name);
      degrees.push_back(n);
      out.inclusion.push_back(std::move(v));
    }
  }
  GradedBasis basis(labels, degrees, mb.period());
  const auto& calg = out.cycles.algebra;
  std::vector<std::vector<GradedVector>> action(calg.size(), std::vector<GradedVector>(basis.size()));
  for (int c = 0; c < calg.size(); ++c)
    for (int j = 0; j < basis.size(); ++j)
      action[c][j] = expressInSubspace(out.inclusion, basis, mb, w,
                                       m.act(out.cycles.inclusion[c], out.inclusion[j]), p);
  out.module = DgModule(DgAlgebra(calg), std::move(basis), std::move(action), {});
  return out;
}

GradedVector contractingElement(const DgAlgebra& dg) {
  const auto& b = dg.basis();
  const auto p = dg.field().characteristic;
  Matrix d = inField(blockMatrix(b, b, -1, 1, dg.differential()), p);
  auto x = solveLinear(d, inField(coordinates(dg.algebra().unit(), b.component(0)), p));
  if (!x) throw HypothesisUnverified("no element y of degree -1 with d(y) = 1");
  return fromCoordinates(*x, b.component(-1));
}

DgModule induceFromCycles(const DgAlgebra& dg, const DgModule& n) {
  if (!homology(dg).acyclicOnWindow()) throw HypothesisUnverified("induction: algebra is not acyclic");
  auto cyc = cycles(dg);
  if (!(n.algebra().algebra() == cyc.algebra))
    throw FormatError("induction: module is not over the cycle algebra of the given dg-algebra");
  for (const auto& v : n.deltaOnLabels())
    if (!v.isZero()) throw FormatError("induction: module over the cycles must have zero differential");

  const auto& alg = dg.algebra();
  const auto& nb = n.basis();
  const int nn = n.size();
  GradedVector y = contractingElement(dg);

  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (int i = 0; i < nn; ++i) {
    labels.push_back("1|" + nb.label(i));
    degrees.push_back(nb.degree(i));
  }
  for (int i = 0; i < nn; ++i) {
    labels.push_back("y|" + nb.label(i));
    degrees.push_back(nb.degree(i) - 1);
  }
  GradedBasis basis(labels, degrees, nb.period());

  auto embed = [](const GradedVector& v, int offset) {
    GradedVector out;
    for (const auto& [k, c] : v.terms()) out.add({k.label + offset, k.exponent}, c);
    return out;
  };
  // a u = c1 + y c2 with c1, c2 cycles: c2 = d(a u), c1 = a u - y d(a u).
  std::vector<std::vector<GradedVector>> action(alg.size(), std::vector<GradedVector>(2 * nn));
  for (int a = 0; a < alg.size(); ++a)
    for (int j = 0; j < 2 * nn; ++j) {
      const auto u = j < nn ? alg.unit() : y;
      auto w = alg.multiply(alg.element({a, 0}), u);
      if (w.isZero()) continue;
      auto c2 = dg.d(w);
      auto c1 = w - alg.multiply(y, c2);
      auto e = GradedVector::unit({j % nn, 0});
      action[a][j] = embed(n.act(expressInCycles(cyc, dg.basis(), c1), e), 0) +
                     embed(n.act(expressInCycles(cyc, dg.basis(), c2), e), nn);
    }
  std::vector<GradedVector> delta(2 * nn);
  for (int i = 0; i < nn; ++i) delta[nn + i] = GradedVector::unit({i, 0});
  return DgModule(dg, std::move(basis), std::move(action), std::move(delta));
}

IsomorphismResult findModuleIsomorphism(const DgModule& m, const DgModule& n, std::uint64_t seed, int maxAttempts) {
  if (!(m.algebra() == n.algebra())) throw FormatError("isomorphism: modules over different algebras");
  IsomorphismResult out;
  const auto p = charOf(m);
  const auto& mb = m.basis();
  const auto& nb = n.basis();
  DegreeWindow w = unionWindow({&mb, &nb});
  for (int d = w.lo; d <= w.hi; ++d)
    if (mb.dimension(d) != nb.dimension(d)) return out;

  const auto& alg = m.algebra().algebra();
  MapUnknowns u(mb, nb, 0);
  auto residual = [&](const Vector& x) {
    auto f = u.toMap(x);
    std::vector<GradedVector> r;
    for (int i = 0; i < m.size(); ++i) {
      BasisKey key{i, 0};
      auto fi = f.apply(mb, key);
      r.push_back(n.delta(fi) - f.apply(mb, m.delta(key)));
      for (int a = 0; a < alg.size(); ++a) r.push_back(f.apply(mb, m.act({a, 0}, key)) - n.act(alg.element({a, 0}), fi));
    }
    return r;
  };
  auto sys = linearize(u.total, residual, p);
  auto basis = kernelBasis(sys.a);
  out.homDimension = static_cast<int>(basis.size());
  if (basis.empty() && u.total > 0) return out;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(p ? 0 : -3, p ? static_cast<long>(p) - 1 : 3);
  for (int attempt = 0; attempt < maxAttempts; ++attempt) {
    ++out.attempts;
    Vector x = zeroVector(u.total);
    for (const auto& v : basis) x += Scalar(coeff(rng)).in(p) * v;
    x = inField(x, p);
    auto f = u.toMap(x);
    bool bijective = true;
    for (int d = w.lo; d <= w.hi && bijective; ++d) bijective = isInvertible(mapBlock(mb, nb, f, d, p));
    if (!bijective) continue;
    out.iso = f;
    out.witnesses = validateModuleMap(m, n, f);
    out.witnesses.add("bijective in every degree of the window", true);
    out.witnesses.window = w;
    return out;
  }
  return out;
}

}  // namespace dgsep
