// Braid matrices, path matrices, and the closed-form products that update
// only two rows or two columns. Path matrices are accumulated through the
// fast column updates, which keeps a full evaluation at O(l*n) entries.
#pragma once

#include "legcat/braid.hpp"
#include "legcat/matrix.hpp"

namespace legcat {

// Identity outside the 2x2 block at (k, k), which is [[z, 1], [1, 0]].
Matrix braid_matrix(const Field& field, int n, int k, const Scalar& z);
// Closed-form inverse: block [[0, 1], [1, -z]].
Matrix braid_matrix_inverse(const Field& field, int n, int k, const Scalar& z);

// Ordered product of the braid matrices along the word; empty word gives the
// identity. coords must have one entry per crossing.
Matrix path_matrix(const Field& field, const BraidWord& word, const Vec& coords);

// M * B_k(z): columns c_k -> c_{k+1} + c_k*z, c_{k+1} -> c_k.
Matrix fast_right_mul(const Matrix& m, int k, const Scalar& z);
// B_k(z) * M: rows r_k -> r_{k+1} + z*r_k, r_{k+1} -> r_k.
Matrix fast_left_mul(int k, const Scalar& z, const Matrix& m);
// M * B_k(z)^{-1}: columns c_k -> c_{k+1}, c_{k+1} -> c_k - c_{k+1}*z.
Matrix fast_right_mul_inv(const Matrix& m, int k, const Scalar& z);
// B_k(z)^{-1} * M: rows r_k -> r_{k+1}, r_{k+1} -> r_k - z*r_{k+1}.
Matrix fast_left_mul_inv(int k, const Scalar& z, const Matrix& m);

// B_k(zl)^{-1} * D(u) * B_k(zr) in closed form: the diagonal with entries
// u_k, u_{k+1} swapped plus the single off-diagonal entry
// u_k*zr - zl*u_{k+1} at position (k+1, k).
Matrix conjugate_diagonal(const Field& field, int k, const Scalar& zl, const Vec& u,
                          const Scalar& zr);

}  // namespace legcat
