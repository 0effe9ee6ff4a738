#include "dgsep/linear.hpp"

namespace dgsep {

Matrix zeroMatrix(Eigen::Index rows, Eigen::Index cols) {
  return Matrix::Constant(rows, cols, Scalar(0));
}

Matrix inField(const Matrix& m, std::uint32_t p) {
  return m.unaryExpr([p](const Scalar& s) { return s.in(p); });
}

Vector zeroVector(Eigen::Index n) { return Vector::Constant(n, Scalar(0)); }

Matrix vstack(const std::vector<Matrix>& blocks, Eigen::Index cols) {
  Eigen::Index rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error("vstack: column mismatch");
    rows += b.rows();
  }
  Matrix out = zeroMatrix(rows, cols);
  Eigen::Index r = 0;
  for (const auto& b : blocks) {
    out.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return out;
}

}  // namespace dgsep
