#include "legcat/linalg.hpp"

#include <algorithm>
#include <optional>

namespace legcat {
namespace {

// Row-reduces in place; returns (pivot columns ascending, determinant sign
// bookkeeping is not needed by callers of this helper).
std::vector<std::size_t> row_reduce(Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
    Scalar inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(inv, m.at(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      Scalar factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

Scalar det(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Field& f = a.field();
  Matrix m = a;
  Scalar result = f.one();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t piv = c;
    while (piv < m.rows() && f.is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows()) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(c, j), m.at(piv, j));
      result = f.neg(result);
    }
    result = f.mul(result, m.at(c, c));
    Scalar inv = f.inv(m.at(c, c));
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      Scalar factor = f.mul(inv, m.at(i, c));
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
    }
  }
  return result;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Field& f = a.field();
  std::size_t n = a.rows();
  // Augment [A | I] and reduce.
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  std::vector<std::size_t> pivots = row_reduce(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw SingularMatrixError("matrix is singular");
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

std::vector<Vec> kernel_basis(const Matrix& a) {
  const Field& f = a.field();
  Matrix m = a;
  std::vector<std::size_t> pivot_cols = row_reduce(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      v[pivot_cols[i]] = f.neg(m.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

ColumnEchelon image_echelon(const Matrix& a) {
  const Field& f = a.field();
  ColumnEchelon out;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Vec v = a.col(c);
    // Eliminate the entries at already-claimed pivot rows.
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
      const Scalar& coeff = v[out.pivot_rows[i]];
      if (!f.is_zero(coeff)) v = sub(f, v, scale(f, coeff, out.basis[i]));
    }
    std::size_t piv = 0;
    while (piv < v.size() && f.is_zero(v[piv])) ++piv;
    if (piv == v.size()) continue;
    v = scale(f, f.inv(v[piv]), v);
    // Back-eliminate the new pivot row from the earlier basis vectors.
    for (Vec& b : out.basis) {
      const Scalar& coeff = b[piv];
      if (!f.is_zero(coeff)) b = sub(f, b, scale(f, coeff, v));
    }
    out.pivot_rows.push_back(piv);
    out.basis.push_back(std::move(v));
  }
  // Order by pivot row.
  std::vector<std::size_t> order(out.pivot_rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return out.pivot_rows[l] < out.pivot_rows[r]; });
  ColumnEchelon sorted;
  for (std::size_t i : order) {
    sorted.pivot_rows.push_back(out.pivot_rows[i]);
    sorted.basis.push_back(std::move(out.basis[i]));
  }
  return sorted;
}

CokernelReducer::CokernelReducer(Field field, std::size_t ambient_dim, ColumnEchelon echelon)
    : field_(field), ambient_dim_(ambient_dim), echelon_(std::move(echelon)) {
  std::vector<bool> is_pivot(ambient_dim_, false);
  for (std::size_t r : echelon_.pivot_rows) is_pivot[r] = true;
  for (std::size_t r = 0; r < ambient_dim_; ++r)
    if (!is_pivot[r]) complement_rows_.push_back(r);
}

std::vector<Vec> CokernelReducer::complement_basis() const {
  std::vector<Vec> out;
  out.reserve(complement_rows_.size());
  for (std::size_t r : complement_rows_) out.push_back(unit_vec(field_, ambient_dim_, r));
  return out;
}

Vec CokernelReducer::normal_form(const Vec& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector length mismatch in reduce");
  Vec w = v;
  for (std::size_t i = 0; i < echelon_.basis.size(); ++i) {
    const Scalar& coeff = w[echelon_.pivot_rows[i]];
    if (!field_.is_zero(coeff)) w = sub(field_, w, scale(field_, coeff, echelon_.basis[i]));
  }
  return w;
}

Vec CokernelReducer::reduce(const Vec& v) const {
  Vec nf = normal_form(v);
  Vec out;
  out.reserve(complement_rows_.size());
  for (std::size_t r : complement_rows_) out.push_back(nf[r]);
  return out;
}

bool CokernelReducer::in_image(const Vec& v) const {
  return is_zero_vec(field_, normal_form(v));
}

CokernelReducer complement_and_reduce(const Matrix& a) {
  return CokernelReducer(a.field(), a.rows(), image_echelon(a));
}

std::vector<Scalar> leading_principal_minors(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("minors of non-square matrix");
  std::vector<Scalar> out;
  out.reserve(a.rows());
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    Matrix block(a.field(), k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block.at(i, j) = a.at(i, j);
    out.push_back(det(block));
  }
  return out;
}

bool lu_admissible(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("lu_admissible needs a square matrix");
  const Field& f = a.field();
  Matrix m = a;
  // Doolittle without pivoting: every pivot must be nonzero, including the
  // last one (so singular matrices are rejected).
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (f.is_zero(m.at(c, c))) return false;
    Scalar inv = f.inv(m.at(c, c));
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      Scalar factor = f.mul(inv, m.at(i, c));
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
    }
  }
  return true;
}

std::optional<Vec> coordinates_in_span(const Field& field, const std::vector<Vec>& span,
                                       const Vec& v) {
  if (span.empty()) return is_zero_vec(field, v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  std::size_t dim = span.front().size();
  Matrix aug(field, dim, span.size() + 1);
  for (std::size_t j = 0; j < span.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) aug.at(i, j) = span[j][i];
  for (std::size_t i = 0; i < dim; ++i) aug.at(i, span.size()) = v[i];
  Matrix m = aug;
  std::vector<std::size_t> pivots = row_reduce(m);
  // Inconsistent iff the last column is a pivot column.
  if (!pivots.empty() && pivots.back() == span.size()) return std::nullopt;
  Vec coords(span.size(), field.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) coords[pivots[i]] = m.at(i, span.size());
  return coords;
}

}  // namespace legcat
