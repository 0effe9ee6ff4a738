#pragma once

// Exact dense linear algebra over a field.
//
// Everything is templated on the scalar so the same elimination runs over
// dgsep::Scalar or any other exact field type with an Eigen NumTraits
// specialization. Pivoting picks the first nonzero entry in each column,
// which makes every returned basis and solution deterministic.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "dgsep/scalar.hpp"

namespace dgsep {

template <typename S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Scalar>;
using Vector = VectorX<Scalar>;

template <typename S>
struct EchelonForm {
  MatrixX<S> reduced;          // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename S>
bool isZeroScalar(const S& s) {
  return s == S(0);
}

/// Gauss-Jordan elimination with first-nonzero pivoting.
template <typename Derived>
EchelonForm<typename Derived::Scalar> rowEchelon(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  EchelonForm<S> out{a, {}};
  MatrixX<S>& m = out.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && isZeroScalar(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    S inv = S(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || isZeroScalar(m(i, col))) continue;
      S factor = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  return rowEchelon(a).rank();
}

/// One exact solution of a x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
template <typename DA, typename DB>
std::optional<VectorX<typename DA::Scalar>> solveLinear(const Eigen::MatrixBase<DA>& a,
                                                        const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  if (a.rows() != b.rows()) throw Error("solveLinear: dimension mismatch");
  MatrixX<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto ech = rowEchelon(aug);
  VectorX<S> x = VectorX<S>::Constant(a.cols(), S(0));
  for (Eigen::Index r = 0; r < ech.rank(); ++r) {
    if (ech.pivots[r] == a.cols()) return std::nullopt;
    x(ech.pivots[r]) = ech.reduced(r, a.cols());
  }
  return x;
}

/// Basis of the null space; one vector per free column, in column order.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> kernelBasis(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  auto ech = rowEchelon(a);
  std::vector<bool> isPivot(a.cols(), false);
  for (auto p : ech.pivots) isPivot[p] = true;
  std::vector<VectorX<S>> basis;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (isPivot[free]) continue;
    VectorX<S> v = VectorX<S>::Constant(a.cols(), S(0));
    v(free) = S(1);
    for (Eigen::Index r = 0; r < ech.rank(); ++r) v(ech.pivots[r]) = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Columns of a basis of the column space, chosen among the columns of a.
template <typename Derived>
std::vector<Eigen::Index> independentColumns(const Eigen::MatrixBase<Derived>& a) {
  return rowEchelon(a).pivots;
}

template <typename Derived>
bool isZeroMatrix(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!isZeroScalar(a(i, j))) return false;
  return true;
}

/// Square and of full rank.
template <typename Derived>
bool isInvertible(const Eigen::MatrixBase<Derived>& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

/// Exact inverse of a square matrix, or nullopt when singular.
template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  if (a.rows() != a.cols()) return std::nullopt;
  const Eigen::Index n = a.rows();
  MatrixX<S> aug = MatrixX<S>::Constant(n, 2 * n, S(0));
  aug.leftCols(n) = a;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = S(1);
  auto ech = rowEchelon(aug);
  if (ech.rank() < n || (n > 0 && ech.pivots[n - 1] >= n)) return std::nullopt;
  return MatrixX<S>(ech.reduced.rightCols(n));
}

/// Stacks matrices vertically; all inputs must share a column count.
Matrix vstack(const std::vector<Matrix>& blocks, Eigen::Index cols);

Matrix zeroMatrix(Eigen::Index rows, Eigen::Index cols);
/// Reinterprets every entry in characteristic p, so integer sums of signs
/// built before the field was known reduce correctly.
Matrix inField(const Matrix& m, std::uint32_t p);
Vector zeroVector(Eigen::Index n);

}  // namespace dgsep
