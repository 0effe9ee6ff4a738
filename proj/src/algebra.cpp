#include "dgsep/algebra.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace dgsep {

namespace {

GradedVector normalized(const GradedVector& v, std::uint32_t p) {
  GradedVector out;
  for (const auto& [k, c] : v.terms()) out.add(k, c.in(p));
  return out;
}

void checkKeys(const GradedVector& v, const GradedBasis& basis, const std::string& where) {
  for (const auto& [k, c] : v.terms()) {
    if (k.label < 0 || k.label >= basis.size()) throw FormatError(where + ": label index out of range");
    if (k.exponent != 0 && !basis.isPeriodic())
      throw FormatError(where + ": nonzero unit exponent without a periodicity unit");
  }
}

}  // namespace

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  if (window) os << "verified window: [" << window->lo << ", " << window->hi << "]\n";
  return os.str();
}

GradedAlgebra::GradedAlgebra(FieldSpec field, GradedBasis basis,
                             std::vector<std::vector<GradedVector>> products, GradedVector unit)
    : field_(field), basis_(std::move(basis)), products_(std::move(products)), unit_(std::move(unit)) {
  const auto n = static_cast<std::size_t>(basis_.size());
  if (products_.size() != n) throw FormatError("product table has wrong number of rows");
  for (auto& row : products_) {
    if (row.size() != n) throw FormatError("product table has wrong number of columns");
    for (auto& v : row) {
      checkKeys(v, basis_, "product");
      v = normalized(v, field_.characteristic);
    }
  }
  checkKeys(unit_, basis_, "unit");
  unit_ = normalized(unit_, field_.characteristic);
}

std::optional<GradedVector> GradedAlgebra::periodUnit() const {
  if (!basis_.isPeriodic()) return std::nullopt;
  return unit_.shifted(1);
}

GradedVector GradedAlgebra::multiply(const GradedVector& a, const GradedVector& b) const {
  GradedVector out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      GradedVector t = multiply(ka, kb);
      t *= ca * cb;
      out += t;
    }
  }
  return out;
}

BasisOp GradedAlgebra::leftMultiplication(const GradedVector& b) const {
  return [this, b](BasisKey k) { return multiply(b, element(k)); };
}

BasisOp GradedAlgebra::rightMultiplication(const GradedVector& b) const {
  return [this, b](BasisKey k) { return multiply(element(k), b); };
}

DgAlgebra::DgAlgebra(GradedAlgebra algebra, std::vector<GradedVector> differential)
    : algebra_(std::move(algebra)), d_(std::move(differential)) {
  if (d_.empty()) d_.resize(static_cast<std::size_t>(algebra_.size()));
  if (static_cast<int>(d_.size()) != algebra_.size())
    throw FormatError("differential must have one value per basis label");
  for (auto& v : d_) {
    checkKeys(v, algebra_.basis(), "differential");
    v = normalized(v, algebra_.field().characteristic);
  }
}

DgAlgebra::DgAlgebra(GradedAlgebra algebra)
    : DgAlgebra(std::move(algebra), {}) {}

GradedVector DgAlgebra::d(BasisKey k) const {
  return koszulShift(d_.at(k.label), k.exponent, 1, basis().period());
}

GradedVector DgAlgebra::d(const GradedVector& v) const { return applyLinear(differential(), v); }

GradedLinearMap DgAlgebra::differentialMap() const {
  auto d = d_;
  auto period = basis().period();
  return GradedLinearMap(basis(), basis(), 1, [d, period](BasisKey k) {
    return koszulShift(d.at(k.label), k.exponent, 1, period);
  });
}

bool DgAlgebra::hasZeroDifferential() const {
  for (const auto& v : d_)
    if (!v.isZero()) return false;
  return true;
}

std::vector<int> parityExponents(const GradedBasis& basis) {
  if (basis.isPeriodic() && *basis.period() % 2 != 0) return {0, 1};
  return {0};
}

ValidationReport validateAlgebra(const GradedAlgebra& alg) {
  ValidationReport rep;
  const auto& basis = alg.basis();
  const int n = alg.size();

  std::optional<std::string> fail;
  for (int i = 0; i < n && !fail; ++i) {
    for (int j = 0; j < n && !fail; ++j) {
      int expected = basis.degree(i) + basis.degree(j);
      for (const auto& [k, c] : alg.product(i, j).terms()) {
        if (basis.degreeOf(k) != expected) {
          fail = basis.label(i) + "*" + basis.label(j) + " contains " + basis.keyName(k) + " of degree " +
                 std::to_string(basis.degreeOf(k)) + ", expected " + std::to_string(expected);
          break;
        }
      }
    }
  }
  rep.addFirstFailure("degree homogeneity", fail);

  fail.reset();
  auto unitDeg = alg.unit().isHomogeneous(basis) ? alg.unit().degree(basis) : std::optional<int>(1);
  if (alg.unit().isZero() || unitDeg != 0) fail = "unit is not a nonzero element of degree 0";
  for (int i = 0; i < n && !fail; ++i) {
    auto b = alg.element({i, 0});
    if (alg.multiply(alg.unit(), b) != b) fail = "1*" + basis.label(i) + " != " + basis.label(i);
    else if (alg.multiply(b, alg.unit()) != b) fail = basis.label(i) + "*1 != " + basis.label(i);
  }
  rep.addFirstFailure("unit axioms", fail);

  fail.reset();
  for (int i = 0; i < n && !fail; ++i)
    for (int j = 0; j < n && !fail; ++j)
      for (int k = 0; k < n && !fail; ++k) {
        auto lhs = alg.multiply(alg.product(i, j), alg.element({k, 0}));
        auto rhs = alg.multiply(alg.element({i, 0}), alg.product(j, k));
        if (lhs != rhs)
          fail = "(" + basis.label(i) + "*" + basis.label(j) + ")*" + basis.label(k) + " = " + lhs.str(basis) +
                 " but " + basis.label(i) + "*(" + basis.label(j) + "*" + basis.label(k) + ") = " + rhs.str(basis);
      }
  rep.addFirstFailure("associativity", fail);

  if (auto z = alg.periodUnit()) {
    fail.reset();
    auto zinv = alg.unit().shifted(-1);
    if (alg.multiply(*z, zinv) != alg.unit() || alg.multiply(zinv, *z) != alg.unit())
      fail = "z * z^-1 != 1";
    for (int i = 0; i < n && !fail; ++i) {
      auto b = alg.element({i, 0});
      if (alg.multiply(*z, b) != alg.multiply(b, *z)) fail = "z does not commute with " + basis.label(i);
    }
    rep.addFirstFailure("period unit central and invertible", fail);
  }
  return rep;
}

ValidationReport validateDifferential(const DgAlgebra& dg) {
  ValidationReport rep;
  const auto& alg = dg.algebra();
  const auto& basis = dg.basis();
  const int n = alg.size();

  std::optional<std::string> fail;
  for (int i = 0; i < n && !fail; ++i) {
    auto v = dg.d(BasisKey{i, 0});
    for (const auto& [k, c] : v.terms())
      if (basis.degreeOf(k) != basis.degree(i) + 1) {
        fail = "d(" + basis.label(i) + ") contains " + basis.keyName(k) + " of degree " +
               std::to_string(basis.degreeOf(k)) + ", expected " + std::to_string(basis.degree(i) + 1);
        break;
      }
  }
  rep.addFirstFailure("differential has degree +1", fail);

  fail.reset();
  for (int i = 0; i < n && !fail; ++i) {
    auto dd = dg.d(dg.d(BasisKey{i, 0}));
    if (!dd.isZero()) fail = "d(d(" + basis.label(i) + ")) = " + dd.str(basis);
  }
  rep.addFirstFailure("d^2 = 0", fail);

  fail.reset();
  auto exps = parityExponents(basis);
  for (int i = 0; i < n && !fail; ++i)
    for (int ei : exps)
      for (int j = 0; j < n && !fail; ++j)
        for (int ej : exps) {
          if (fail) break;
          BasisKey a{i, ei}, b{j, ej};
          auto lhs = dg.d(alg.multiply(a, b));
          auto rhs = alg.multiply(dg.d(a), alg.element(b)) +
                     signOf(basis.degreeOf(a)) * alg.multiply(alg.element(a), dg.d(b));
          if (lhs != rhs)
            fail = "d(" + basis.keyName(a) + "*" + basis.keyName(b) + ") = " + lhs.str(basis) +
                   " but Leibniz gives " + rhs.str(basis);
        }
  rep.addFirstFailure("graded Leibniz rule", fail);

  auto du = dg.d(alg.unit());
  rep.add("d(1) = 0", du.isZero(), du.isZero() ? "" : "d(1) = " + du.str(basis));
  return rep;
}

bool HomologyTable::acyclicOnWindow() const {
  for (int d : dimensions)
    if (d != 0) return false;
  return true;
}

HomologyTable homology(const DgAlgebra& dg, std::optional<DegreeWindow> window) {
  const auto& basis = dg.basis();
  DegreeWindow w = window.value_or(basis.naturalWindow());
  HomologyTable table{w, {}, {}, true};
  auto d = dg.differential();
  for (int n = w.lo; n <= w.hi; ++n) {
    Matrix out = blockMatrix(basis, basis, n, 1, d);
    Matrix in = blockMatrix(basis, basis, n - 1, 1, d);
    if (out.cols() > 0 && in.cols() > 0 && !isZeroMatrix(Matrix(out * in))) table.boundariesAreCycles = false;
    int dimKer = static_cast<int>(out.cols() - rank(out));
    int dimIm = static_cast<int>(rank(in));
    table.cycleDimensions.push_back(dimKer);
    table.dimensions.push_back(dimKer - dimIm);
  }
  return table;
}

namespace {

struct FoldPosition {
  int degree;    // representative inside the window
  int exponent;  // shift by z^exponent reaches the original degree
};

std::optional<FoldPosition> locate(int degree, const DegreeWindow& w, std::optional<int> period) {
  if (!period) {
    if (!w.contains(degree)) return std::nullopt;
    return FoldPosition{degree, 0};
  }
  int len = std::abs(*period);
  int rep = w.lo + (((degree - w.lo) % len) + len) % len;
  return FoldPosition{rep, (degree - rep) / *period};
}

}  // namespace

GradedVector CycleAlgebra::embed(const GradedVector& v) const {
  GradedVector out;
  for (const auto& [k, c] : v.terms()) {
    GradedVector img = inclusion.at(k.label).shifted(k.exponent);
    img *= c;
    out += img;
  }
  return out;
}

CycleAlgebra cycles(const DgAlgebra& dg, std::optional<DegreeWindow> window) {
  const auto& basis = dg.basis();
  const auto& alg = dg.algebra();
  DegreeWindow w = window.value_or(basis.naturalWindow());
  if (basis.isPeriodic()) {
    if (w.size() < std::abs(*basis.period()))
      throw WindowTooSmall("cycles: window shorter than one period fold");
    w = basis.fold(w.lo);
  }

  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<GradedVector> inclusion;
  auto d = dg.differential();
  for (int n = w.lo; n <= w.hi; ++n) {
    auto comp = basis.component(n);
    Matrix out = blockMatrix(basis, basis, n, 1, d);
    auto ker = kernelBasis(out);
    for (std::size_t i = 0; i < ker.size(); ++i) {
      GradedVector v = fromCoordinates(ker[i], comp);
      std::string name;
      if (v.terms().size() == 1 && v.terms().begin()->second.isOne() &&
          v.terms().begin()->first.exponent == 0)
        name = basis.label(v.terms().begin()->first.label);
      else
        name = "Z" + std::to_string(n) + "_" + std::to_string(i);
      labels.push_back(name);
      degrees.push_back(n);
      inclusion.push_back(std::move(v));
    }
  }

  CycleAlgebra cyc;
  cyc.window = w;
  cyc.inclusion = inclusion;
  GradedBasis cb(labels, degrees, basis.period());
  // Provisional presentation so expressInCycles can see the basis.
  cyc.algebra = GradedAlgebra(alg.field(), cb,
                              std::vector<std::vector<GradedVector>>(labels.size(),
                                                                     std::vector<GradedVector>(labels.size())),
                              {});
  std::vector<std::vector<GradedVector>> products(labels.size(), std::vector<GradedVector>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      products[i][j] = expressInCycles(cyc, basis, alg.multiply(inclusion[i], inclusion[j]));
  GradedVector unit = expressInCycles(cyc, basis, alg.unit());
  cyc.algebra = GradedAlgebra(alg.field(), cb, std::move(products), std::move(unit));
  return cyc;
}

GradedVector expressInCycles(const CycleAlgebra& cyc, const GradedBasis& ambient, const GradedVector& v) {
  if (v.isZero()) return {};
  int deg = *v.degree(ambient);
  const auto& cb = cyc.algebra.basis();
  auto pos = locate(deg, cyc.window, cb.period());
  if (!pos) throw ClosureEscape("element of degree " + std::to_string(deg) + " lies outside the cycle window");
  GradedVector target = v.shifted(-pos->exponent);
  auto comp = ambient.component(pos->degree);
  auto cycComp = cb.component(pos->degree);
  Matrix cols = zeroMatrix(static_cast<Eigen::Index>(comp.size()), static_cast<Eigen::Index>(cycComp.size()));
  for (std::size_t j = 0; j < cycComp.size(); ++j)
    cols.col(static_cast<Eigen::Index>(j)) = coordinates(cyc.inclusion[cycComp[j].label], comp);
  auto x = solveLinear(cols, coordinates(target, comp));
  if (!x) throw ClosureEscape("element " + v.str(ambient) + " is not a cycle");
  return fromCoordinates(*x, cycComp).shifted(pos->exponent);
}

GradedAlgebra opposite(const GradedAlgebra& alg) {
  const auto& basis = alg.basis();
  if (basis.isPeriodic() && *basis.period() % 2 != 0 && alg.field().characteristic != 2)
    throw ConsistencyError("opposite: odd periodicity unit is not central in the opposite algebra");
  const int n = alg.size();
  std::vector<std::vector<GradedVector>> products(n, std::vector<GradedVector>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      products[i][j] = signOf(static_cast<long>(basis.degree(i)) * basis.degree(j)) * alg.product(j, i);
  return GradedAlgebra(alg.field(), basis, std::move(products), alg.unit());
}

DgAlgebra opposite(const DgAlgebra& dg) {
  return DgAlgebra(opposite(dg.algebra()), dg.differentialOnLabels());
}

bool isGradedCommutative(const GradedAlgebra& alg) {
  const auto& basis = alg.basis();
  auto exps = parityExponents(basis);
  for (int i = 0; i < alg.size(); ++i)
    for (int ei : exps)
      for (int j = 0; j < alg.size(); ++j)
        for (int ej : exps) {
          BasisKey a{i, ei}, b{j, ej};
          long sign = static_cast<long>(basis.degreeOf(a)) * basis.degreeOf(b);
          if (alg.multiply(a, b) != signOf(sign) * alg.multiply(b, a)) return false;
        }
  return true;
}

bool samePresentation(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.field() != b.field() || a.size() != b.size()) return false;
  if (a.basis().degrees() != b.basis().degrees() || a.period() != b.period()) return false;
  if (a.unit() != b.unit()) return false;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.product(i, j) != b.product(i, j)) return false;
  return true;
}

}  // namespace dgsep
