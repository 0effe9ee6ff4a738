#include "dgsep/graded.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace dgsep {

GradedBasis::GradedBasis(std::vector<std::string> labels, std::vector<int> degrees,
                         std::optional<int> period)
    : labels_(std::move(labels)), degrees_(std::move(degrees)), period_(period) {
  if (labels_.size() != degrees_.size()) throw FormatError("basis: labels and degrees differ in length");
  if (period_ && *period_ == 0) throw FormatError("basis: period must be nonzero");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw FormatError("basis: duplicate label '" + l + "'");
}

std::optional<int> GradedBasis::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int GradedBasis::indexOf(const std::string& label) const {
  auto i = find(label);
  if (!i) throw FormatError("unknown basis label '" + label + "'");
  return *i;
}

std::vector<BasisKey> GradedBasis::component(int n) const {
  std::vector<BasisKey> out;
  for (int i = 0; i < size(); ++i) {
    int diff = n - degrees_[i];
    if (!period_) {
      if (diff == 0) out.push_back({i, 0});
    } else if (diff % *period_ == 0) {
      out.push_back({i, diff / *period_});
    }
  }
  return out;
}

DegreeWindow GradedBasis::support() const {
  if (degrees_.empty()) return {0, 0};
  auto [lo, hi] = std::minmax_element(degrees_.begin(), degrees_.end());
  return {*lo, *hi};
}

DegreeWindow GradedBasis::fold(int lo) const {
  if (!period_) throw Error("fold requested for a non-periodic basis");
  return {lo, lo + std::abs(*period_) - 1};
}

DegreeWindow GradedBasis::naturalWindow() const { return period_ ? fold(0) : support(); }

std::string GradedBasis::keyName(BasisKey k) const {
  std::string s = label(k.label);
  if (k.exponent != 0) s += "*z^" + std::to_string(k.exponent);
  return s;
}

GradedVector GradedVector::unit(BasisKey k, const Scalar& c) {
  GradedVector v;
  v.add(k, c);
  return v;
}

Scalar GradedVector::coefficient(BasisKey k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void GradedVector::add(BasisKey k, const Scalar& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

GradedVector& GradedVector::operator+=(const GradedVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

GradedVector& GradedVector::operator*=(const Scalar& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

GradedVector GradedVector::operator-() const {
  GradedVector v = *this;
  return v *= Scalar(-1);
}

GradedVector GradedVector::shifted(int e) const {
  if (e == 0) return *this;
  GradedVector v;
  for (const auto& [k, c] : terms_) v.terms_.emplace(BasisKey{k.label, k.exponent + e}, c);
  return v;
}

std::optional<int> GradedVector::degree(const GradedBasis& basis) const {
  std::optional<int> deg;
  for (const auto& [k, c] : terms_) {
    int d = basis.degreeOf(k);
    if (deg && *deg != d) throw Error("vector is not homogeneous: " + str(basis));
    deg = d;
  }
  return deg;
}

bool GradedVector::isHomogeneous(const GradedBasis& basis) const {
  try {
    degree(basis);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string GradedVector::str(const GradedBasis& basis) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!c.isOne()) os << c << "*";
    os << basis.keyName(k);
  }
  return os.str();
}

GradedVector koszulShift(const GradedVector& image, int exponent, int mapDegree,
                         std::optional<int> period) {
  GradedVector v = image.shifted(exponent);
  long parity = static_cast<long>(mapDegree) * period.value_or(0) * exponent;
  if (parity % 2 != 0) v *= Scalar(-1);
  return v;
}

Vector coordinates(const GradedVector& v, const std::vector<BasisKey>& component) {
  Vector x = zeroVector(static_cast<Eigen::Index>(component.size()));
  std::size_t found = 0;
  for (std::size_t i = 0; i < component.size(); ++i) {
    auto c = v.coefficient(component[i]);
    if (!c.isZero()) {
      x(static_cast<Eigen::Index>(i)) = c;
      ++found;
    }
  }
  if (found != v.terms().size()) throw Error("coordinates: vector has terms outside the component");
  return x;
}

GradedVector fromCoordinates(const Eigen::Ref<const Vector>& x,
                             const std::vector<BasisKey>& component) {
  GradedVector v;
  for (std::size_t i = 0; i < component.size(); ++i) v.add(component[i], x(static_cast<Eigen::Index>(i)));
  return v;
}

GradedVector applyLinear(const BasisOp& op, const GradedVector& v) {
  GradedVector out;
  for (const auto& [k, c] : v.terms()) {
    GradedVector img = op(k);
    img *= c;
    out += img;
  }
  return out;
}

GradedVector GradedLinearMap::apply(const GradedVector& v) const { return applyLinear(onBasis_, v); }

Matrix GradedLinearMap::block(int n) const { return blockMatrix(source_, target_, n, degree_, onBasis_); }

Matrix blockMatrix(const GradedBasis& src, const GradedBasis& dst, int n, int k, const BasisOp& op) {
  auto from = src.component(n);
  auto to = dst.component(n + k);
  Matrix m = zeroMatrix(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
  for (std::size_t j = 0; j < from.size(); ++j)
    m.col(static_cast<Eigen::Index>(j)) = coordinates(op(from[j]), to);
  return m;
}

}  // namespace dgsep

namespace dgsep {

AffineSystem linearize(int unknowns, const std::function<std::vector<GradedVector>(const Vector&)>& residual,
                       std::uint32_t characteristic) {
  const Scalar zero = Scalar(0).in(characteristic);
  Vector x = Vector::Constant(unknowns, zero);
  const auto base = residual(x);
  std::vector<std::vector<GradedVector>> columns;
  for (int j = 0; j < unknowns; ++j) {
    x(j) = Scalar(1).in(characteristic);
    columns.push_back(residual(x));
    x(j) = zero;
  }
  std::map<std::pair<std::size_t, BasisKey>, Eigen::Index> rows;
  auto collect = [&](const std::vector<GradedVector>& r) {
    for (std::size_t e = 0; e < r.size(); ++e)
      for (const auto& term : r[e].terms()) rows.emplace(std::make_pair(e, term.first), 0);
  };
  collect(base);
  for (const auto& c : columns) collect(c);
  Eigen::Index next = 0;
  for (auto& [key, row] : rows) row = next++;

  AffineSystem sys{Matrix::Constant(next, unknowns, zero), Vector::Constant(next, zero)};
  for (std::size_t e = 0; e < base.size(); ++e)
    for (const auto& [k, c] : base[e].terms()) sys.b(rows.at({e, k})) = (-c).in(characteristic);
  for (int j = 0; j < unknowns; ++j)
    for (std::size_t e = 0; e < columns[j].size(); ++e) {
      for (const auto& [k, c] : columns[j][e].terms()) sys.a(rows.at({e, k}), j) += c.in(characteristic);
      for (const auto& [k, c] : base[e].terms()) sys.a(rows.at({e, k}), j) -= c.in(characteristic);
    }
  return sys;
}

}  // namespace dgsep
