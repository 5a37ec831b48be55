#include "hyperpde/linalg.hpp"

#include <sstream>

#include "hyperpde/errors.hpp"

namespace hyperpde {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const std::vector<Scalar>> columns) {
  std::size_t rows = columns.empty() ? 0 : columns.front().size();
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::ShapeError, "ragged column list");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::ShapeError, "matrix-vector size mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeError, "matrix product size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Scalar inv = m(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<std::vector<Scalar>> null_vector(Matrix m) {
  auto pivots = rref(m);
  if (pivots.size() == m.cols()) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t p = 0; free_col < m.cols(); ++free_col) {
    if (p < pivots.size() && pivots[p] == free_col) {
      ++p;
      continue;
    }
    break;
  }
  std::vector<Scalar> v(m.cols());
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free_col);
  return v;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::ShapeError, "right-hand side size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = rref(aug);
  // inconsistent (pivot in the augmented column) or underdetermined
  if (pivots.size() != m.cols() || (!pivots.empty() && pivots.back() >= m.cols())) return std::nullopt;
  std::vector<Scalar> x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeError, "inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] >= n) throw Error(ErrorCode::DivisionByZero, "singular matrix");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

}  // namespace hyperpde
