#include "legcat/matrix.hpp"

#include <stdexcept>

namespace legcat {

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::diagonal(Field field, const Vec& d) {
  Matrix m(field, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(Field field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  Matrix m(field, nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw std::invalid_argument("ragged matrix literal");
    std::size_t c = 0;
    for (std::int64_t v : row) m.at(r, c++) = field.from_integer(v);
    ++r;
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Vec Matrix::col(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  if (field_ != rhs.field_) throw std::invalid_argument("matrix fields differ in product");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, rhs.at(k, j)));
    }
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch in apply");
  Vec out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i] = field_.add(out[i], field_.mul(at(i, j), v[j]));
  return out;
}

Vec make_vec(const Field& field, std::initializer_list<std::int64_t> values) {
  Vec out;
  out.reserve(values.size());
  for (std::int64_t v : values) out.push_back(field.from_integer(v));
  return out;
}

Vec make_vec(const Field& field, const std::vector<std::int64_t>& values) {
  Vec out;
  out.reserve(values.size());
  for (std::int64_t v : values) out.push_back(field.from_integer(v));
  return out;
}

Vec ones(const Field& field, std::size_t n) { return Vec(n, field.one()); }

Vec unit_vec(const Field& field, std::size_t n, std::size_t index) {
  Vec out(n, field.zero());
  out.at(index) = field.one();
  return out;
}

Vec add(const Field& field, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.add(a[i], b[i]);
  return out;
}

Vec sub(const Field& field, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
  return out;
}

Vec scale(const Field& field, const Scalar& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = field.mul(c, v[i]);
  return out;
}

bool is_zero_vec(const Field& field, const Vec& v) {
  for (const Scalar& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

std::string str(const Field& field, const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += field.str(v[i]);
  }
  return out + ")";
}

}  // namespace legcat
