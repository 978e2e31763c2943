#include <doctest.h>

#include "legcat/braidmat.hpp"
#include "legcat/linalg.hpp"
#include "test_helpers.hpp"

using namespace legcat;
using legcat::testing::random_matrix;
using legcat::testing::random_scalar;
using legcat::testing::random_vec;
using legcat::testing::vec;

TEST_CASE("braid matrix layout") {
  Field q = Field::rationals();
  Scalar z = q.from_integer(9);
  SUBCASE("two strands") {
    CHECK(braid_matrix(q, 2, 1, z) == Matrix::from_rows(q, {{9, 1}, {1, 0}}));
  }
  SUBCASE("z = 0 gives the transposition matrix") {
    CHECK(braid_matrix(q, 3, 1, q.zero()) ==
          Matrix::from_rows(q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  }
  SUBCASE("block placement at the second crossing") {
    CHECK(braid_matrix(q, 3, 2, z) ==
          Matrix::from_rows(q, {{1, 0, 0}, {0, 9, 1}, {0, 1, 0}}));
  }
  SUBCASE("index bounds") {
    CHECK_THROWS_AS(braid_matrix(q, 3, 3, z), std::invalid_argument);
    CHECK_THROWS_AS(braid_matrix(q, 3, 0, z), std::invalid_argument);
  }
}

TEST_CASE("braid matrix inverse") {
  std::mt19937_64 rng(61);
  for (const Field& f : {Field::prime(5), Field::rationals()}) {
    Scalar z = random_scalar(f, rng);
    SUBCASE("closed form solves the 2x2 system") {
      Matrix inv = braid_matrix_inverse(f, 2, 1, z);
      CHECK(inv.at(0, 0) == f.zero());
      CHECK(inv.at(0, 1) == f.one());
      CHECK(inv.at(1, 0) == f.one());
      CHECK(inv.at(1, 1) == f.neg(z));
    }
    SUBCASE("product with the matrix is the identity") {
      for (int k = 1; k <= 3; ++k)
        CHECK(braid_matrix(f, 4, k, z) * braid_matrix_inverse(f, 4, k, z) ==
              Matrix::identity(f, 4));
    }
    SUBCASE("z = 0 is self-inverse") {
      CHECK(braid_matrix_inverse(f, 3, 2, f.zero()) == braid_matrix(f, 3, 2, f.zero()));
    }
  }
}

TEST_CASE("path matrix matches the displayed products") {
  // The displayed 3x3 path matrices, verified entrywise at sampled values
  // (symbolic path matrices are out of scope).
  std::mt19937_64 rng(67);
  for (const Field& f : {Field::prime(7), Field::rationals()}) {
    SUBCASE("three crossings 1,2,1") {
      BraidWord w(3, {1, 2, 1});
      Vec z = random_vec(f, 3, rng);
      Matrix p = path_matrix(f, w, z);
      Matrix expected(f, 3, 3);
      expected.at(0, 0) = f.add(f.mul(z[0], z[2]), z[1]);
      expected.at(0, 1) = z[0];
      expected.at(0, 2) = f.one();
      expected.at(1, 0) = z[2];
      expected.at(1, 1) = f.one();
      expected.at(2, 0) = f.one();
      CHECK(p == expected);
    }
    SUBCASE("four crossings 1,2,1,2") {
      BraidWord w(3, {1, 2, 1, 2});
      Vec z = random_vec(f, 4, rng);
      Matrix p = path_matrix(f, w, z);
      Matrix expected(f, 3, 3);
      expected.at(0, 0) = f.add(f.mul(z[0], z[2]), z[1]);
      expected.at(0, 1) = f.add(f.mul(z[0], z[3]), f.one());
      expected.at(0, 2) = z[0];
      expected.at(1, 0) = z[2];
      expected.at(1, 1) = z[3];
      expected.at(1, 2) = f.one();
      expected.at(2, 0) = f.one();
      CHECK(p == expected);
    }
    SUBCASE("empty word gives the identity") {
      CHECK(path_matrix(f, BraidWord(4, {}), {}) == Matrix::identity(f, 4));
    }
    SUBCASE("length mismatch") {
      CHECK_THROWS_AS(path_matrix(f, BraidWord(3, {1}), {}), std::invalid_argument);
    }
  }
}

TEST_CASE("path matrix equals the naive braid-matrix product") {
  std::mt19937_64 rng(71);
  for (const Field& f : {Field::prime(3), Field::prime(7), Field::rationals()}) {
    for (int trial = 0; trial < 50; ++trial) {
      BraidWord w = legcat::testing::random_word(rng, 4, 6);
      Vec z = random_vec(f, w.length(), rng);
      Matrix naive = Matrix::identity(f, w.strands());
      for (std::size_t j = 0; j < w.length(); ++j)
        naive = naive * braid_matrix(f, w.strands(), w.gen(j), z[j]);
      CHECK(path_matrix(f, w, z) == naive);
    }
  }
}

TEST_CASE("path matrix determinant is (-1)^length") {
  std::mt19937_64 rng(73);
  Field f = Field::prime(5);
  for (int trial = 0; trial < 50; ++trial) {
    BraidWord w = legcat::testing::random_word(rng, 4, 7);
    Vec z = random_vec(f, w.length(), rng);
    Scalar expected = w.length() % 2 == 0 ? f.one() : f.neg(f.one());
    CHECK(det(path_matrix(f, w, z)) == expected);
  }
}

TEST_CASE("fast two-line updates agree with full products") {
  std::mt19937_64 rng(79);
  for (std::size_t n : {2u, 3u, 5u}) {
    int checked = 0;
    for (const Field& f : {Field::prime(2), Field::prime(7), Field::rationals()}) {
      for (int trial = 0; trial < 90; ++trial) {
        Matrix m = random_matrix(f, n, n, rng);
        Scalar z = random_scalar(f, rng);
        for (int k = 1; k < static_cast<int>(n); ++k) {
          Matrix b = braid_matrix(f, n, k, z);
          Matrix binv = braid_matrix_inverse(f, n, k, z);
          CHECK(fast_right_mul(m, k, z) == m * b);
          CHECK(fast_left_mul(k, z, m) == b * m);
          CHECK(fast_right_mul_inv(m, k, z) == m * binv);
          CHECK(fast_left_mul_inv(k, z, m) == binv * m);
          checked += 4;
        }
      }
    }
    CHECK(checked >= 1000);
  }
}

TEST_CASE("generalized conjugation of a diagonal matrix") {
  std::mt19937_64 rng(83);
  for (const Field& f : {Field::prime(5), Field::rationals()}) {
    SUBCASE("closed form equals the triple product") {
      for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> dim(2, 5);
        int n = dim(rng);
        std::uniform_int_distribution<int> pick_k(1, n - 1);
        int k = pick_k(rng);
        Vec u = random_vec(f, n, rng);
        Scalar zl = random_scalar(f, rng);
        Scalar zr = random_scalar(f, rng);
        Matrix closed = conjugate_diagonal(f, k, zl, u, zr);
        Matrix product = braid_matrix_inverse(f, n, k, zl) * Matrix::diagonal(f, u) *
                         braid_matrix(f, n, k, zr);
        CHECK(closed == product);
      }
    }
    SUBCASE("off-diagonal entry and its vanishing condition") {
      Vec u = vec(f, {3, 4});
      Scalar zl = f.from_integer(2);
      Scalar zr = f.from_integer(1);
      Matrix m = conjugate_diagonal(f, 1, zl, u, zr);
      // u_k z - z' u_{k+1} at position (k+1, k).
      CHECK(m.at(1, 0) == f.sub(f.mul(u[0], zr), f.mul(zl, u[1])));
      // Vanishes exactly when z' = u_k z / u_{k+1}.
      Scalar balanced = f.div(f.mul(u[0], zr), u[1]);
      CHECK(conjugate_diagonal(f, 1, balanced, u, zr).at(1, 0) == f.zero());
    }
    SUBCASE("pure swap at z = z' = 0") {
      Vec u = vec(f, {3, 4});
      CHECK(conjugate_diagonal(f, 1, f.zero(), u, f.zero()) ==
            Matrix::diagonal(f, vec(f, {4, 3})));
    }
  }
}
