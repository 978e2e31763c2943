// Exact elimination: kernels, column-space echelon forms, cokernel
// complements, minors and the LU-admissibility test. All pivot choices are
// positional (leftmost column, topmost row), never magnitude-based, so every
// result is deterministic over any exact field.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "legcat/matrix.hpp"

namespace legcat {

class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

Scalar det(const Matrix& a);
Matrix inverse(const Matrix& a);  // throws SingularMatrixError

// Deterministic basis of the right null space: reduced row echelon form, free
// variables taken at non-pivot columns in ascending order, each set to 1.
std::vector<Vec> kernel_basis(const Matrix& a);

// Reduced column echelon basis of the column space. pivot_rows is ascending
// and 0-based; basis[i] has its first nonzero entry (a 1) at pivot_rows[i].
struct ColumnEchelon {
  std::vector<std::size_t> pivot_rows;
  std::vector<Vec> basis;

  std::size_t rank() const { return pivot_rows.size(); }
};
ColumnEchelon image_echelon(const Matrix& a);

// A fixed complement of the column space of a matrix together with the linear
// normal-form map onto it. The complement is spanned by standard basis
// vectors at the non-pivot rows of the reduced column echelon form.
class CokernelReducer {
 public:
  CokernelReducer(Field field, std::size_t ambient_dim, ColumnEchelon echelon);

  const std::vector<std::size_t>& complement_rows() const { return complement_rows_; }
  std::vector<Vec> complement_basis() const;
  std::size_t codim() const { return complement_rows_.size(); }
  const ColumnEchelon& image() const { return echelon_; }

  // Subtracts the image component of v; the result is supported on the
  // complement rows and vanishes exactly when v lies in the column space.
  Vec normal_form(const Vec& v) const;
  // normal_form restricted to the complement rows, ascending.
  Vec reduce(const Vec& v) const;
  bool in_image(const Vec& v) const;

 private:
  Field field_;
  std::size_t ambient_dim_;
  ColumnEchelon echelon_;
  std::vector<std::size_t> complement_rows_;
};

CokernelReducer complement_and_reduce(const Matrix& a);

// Determinants of the top-left k-by-k blocks, k = 1..n.
std::vector<Scalar> leading_principal_minors(const Matrix& a);

// True iff the matrix is invertible with all leading principal minors
// nonzero. Implemented as Doolittle elimination without pivoting; the
// minor-based route is kept as the cross-check in the tests.
bool lu_admissible(const Matrix& a);

// Coordinates of v in the span of the given vectors; empty optional when v is
// outside the span. Generic small solve, used for basis coordinates.
std::optional<Vec> coordinates_in_span(const Field& field, const std::vector<Vec>& span,
                                       const Vec& v);

}  // namespace legcat
