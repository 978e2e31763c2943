#include "legcat/braidmat.hpp"

namespace legcat {
namespace {

void check_crossing_index(int n, int k) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("crossing index " + std::to_string(k) + " outside [1, " +
                                std::to_string(n - 1) + "]");
}

}  // namespace

Matrix braid_matrix(const Field& field, int n, int k, const Scalar& z) {
  check_crossing_index(n, k);
  Matrix m = Matrix::identity(field, n);
  std::size_t i = k - 1;
  m.at(i, i) = z;
  m.at(i, i + 1) = field.one();
  m.at(i + 1, i) = field.one();
  m.at(i + 1, i + 1) = field.zero();
  return m;
}

Matrix braid_matrix_inverse(const Field& field, int n, int k, const Scalar& z) {
  check_crossing_index(n, k);
  Matrix m = Matrix::identity(field, n);
  std::size_t i = k - 1;
  m.at(i, i) = field.zero();
  m.at(i, i + 1) = field.one();
  m.at(i + 1, i) = field.one();
  m.at(i + 1, i + 1) = field.neg(z);
  return m;
}

Matrix path_matrix(const Field& field, const BraidWord& word, const Vec& coords) {
  if (coords.size() != word.length())
    throw std::invalid_argument("coordinate tuple length does not match word length");
  Matrix m = Matrix::identity(field, word.strands());
  for (std::size_t j = 0; j < word.length(); ++j)
    m = fast_right_mul(m, word.gen(j), coords[j]);
  return m;
}

Matrix fast_right_mul(const Matrix& m, int k, const Scalar& z) {
  check_crossing_index(static_cast<int>(m.cols()), k);
  const Field& f = m.field();
  Matrix out = m;
  std::size_t c = k - 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out.at(r, c) = f.add(m.at(r, c + 1), f.mul(m.at(r, c), z));
    out.at(r, c + 1) = m.at(r, c);
  }
  return out;
}

Matrix fast_left_mul(int k, const Scalar& z, const Matrix& m) {
  check_crossing_index(static_cast<int>(m.rows()), k);
  const Field& f = m.field();
  Matrix out = m;
  std::size_t r = k - 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    out.at(r, c) = f.add(m.at(r + 1, c), f.mul(z, m.at(r, c)));
    out.at(r + 1, c) = m.at(r, c);
  }
  return out;
}

Matrix fast_right_mul_inv(const Matrix& m, int k, const Scalar& z) {
  check_crossing_index(static_cast<int>(m.cols()), k);
  const Field& f = m.field();
  Matrix out = m;
  std::size_t c = k - 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out.at(r, c) = m.at(r, c + 1);
    out.at(r, c + 1) = f.sub(m.at(r, c), f.mul(m.at(r, c + 1), z));
  }
  return out;
}

Matrix fast_left_mul_inv(int k, const Scalar& z, const Matrix& m) {
  check_crossing_index(static_cast<int>(m.rows()), k);
  const Field& f = m.field();
  Matrix out = m;
  std::size_t r = k - 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    out.at(r, c) = m.at(r + 1, c);
    out.at(r + 1, c) = f.sub(m.at(r, c), f.mul(z, m.at(r + 1, c)));
  }
  return out;
}

Matrix conjugate_diagonal(const Field& field, int k, const Scalar& zl, const Vec& u,
                          const Scalar& zr) {
  int n = static_cast<int>(u.size());
  check_crossing_index(n, k);
  Vec d = u;
  std::swap(d[k - 1], d[k]);
  Matrix m = Matrix::diagonal(field, d);
  m.at(k, k - 1) = field.sub(field.mul(u[k - 1], zr), field.mul(zl, u[k]));
  return m;
}

}  // namespace legcat
