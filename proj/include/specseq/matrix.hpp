#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "specseq/ring.hpp"

namespace specseq {

// Dense matrix over a Ring, row-major.  A (rows x cols) matrix acts on column
// vectors: f(x) = A x.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(Ring ring, std::size_t n);
  static Matrix from_rows(Ring ring, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Ring ring, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_ints(Ring ring, const std::vector<std::vector<long>>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> column_list() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Vector apply(const Vector& x) const;
  Matrix operator+(const Matrix& other) const;
  Matrix scaled(const Scalar& c) const;
  Matrix hconcat(const Matrix& other) const;
  Matrix vconcat(const Matrix& other) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

bool is_zero_vector(const Vector& v);
Vector zero_vector(std::size_t n);

}  // namespace specseq
