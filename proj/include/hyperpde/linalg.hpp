#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperpde/scalar.hpp"

namespace hyperpde {

/// Dense row-major matrix over Q(i). Small sizes only (dim <= 64).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j].
  static Matrix from_columns(std::span<const std::vector<Scalar>> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> column(std::size_t c) const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::size_t rank(Matrix m);

/// A nonzero vector v with m·v = 0, or nullopt when the columns are independent.
std::optional<std::vector<Scalar>> null_vector(Matrix m);

/// The unique solution of m·x = b when m has independent columns and b lies in
/// their span; nullopt otherwise.
std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> b);

/// Throws DivisionByZero when m is singular.
Matrix inverse(const Matrix& m);

}  // namespace hyperpde
