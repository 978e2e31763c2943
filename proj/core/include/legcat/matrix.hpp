// Dense matrices and tuples over one exact field.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "legcat/field.hpp"

namespace legcat {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

  static Matrix identity(Field field, std::size_t n);
  static Matrix diagonal(Field field, const Vec& d);
  // Row-major construction from integer literals (reduced into the field).
  static Matrix from_rows(Field field,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Matrix operator*(const Matrix& rhs) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

// Tuple helpers shared across the library.
Vec make_vec(const Field& field, std::initializer_list<std::int64_t> values);
Vec make_vec(const Field& field, const std::vector<std::int64_t>& values);
Vec ones(const Field& field, std::size_t n);
Vec unit_vec(const Field& field, std::size_t n, std::size_t index);
Vec add(const Field& field, const Vec& a, const Vec& b);
Vec sub(const Field& field, const Vec& a, const Vec& b);
Vec scale(const Field& field, const Scalar& c, const Vec& v);
bool is_zero_vec(const Field& field, const Vec& v);
std::string str(const Field& field, const Vec& v);  // "(a, b, c)"

}  // namespace legcat
