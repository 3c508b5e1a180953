#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "celef/error.hpp"
#include "celef/linalg.hpp"
#include "dense_oracle.hpp"
#include "support.hpp"

using namespace celef;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density_percent) {
  std::uniform_int_distribution<int> coin(0, 99);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (coin(rng) < density_percent) m.set(i, j, support::random_scalar(rng));
    }
  }
  return m;
}

oracle::Mat dense(const Matrix& m) {
  oracle::Mat out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.dense_row(i));
  return out;
}

}  // namespace

TEST_CASE("set/at keep rows sparse") {
  Matrix m(2, 3);
  m.set(0, 1, Scalar(2));
  m.set(0, 1, Scalar(0));
  CHECK(m.nonzeros() == 0);
  m.add(1, 2, Scalar(1, 2));
  m.add(1, 2, Scalar(1, 2));
  CHECK(m.at(1, 2) == 1);
  CHECK(m.transpose().at(2, 1) == 1);
}

TEST_CASE("rref of a small matrix") {
  Matrix m = Matrix::from_rows(3, {{2, 4, 6}, {1, 2, 4}, {0, 0, 1}});
  Echelon e = rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(e.reduced.dense_row(0) == Coords{1, 2, 0});
  CHECK(e.reduced.dense_row(1) == Coords{0, 0, 1});
  CHECK(rank(m) == 2);
}

TEST_CASE("nullspace, inverse and determinant") {
  Matrix m = Matrix::from_rows(3, {{1, 2, 3}, {2, 4, 6}});
  Matrix n = nullspace(m);
  CHECK(n.cols() == 2);
  CHECK((m * n).is_zero());

  Matrix a = Matrix::from_rows(2, {{1, 2}, {3, 4}});
  CHECK(determinant(a) == -2);
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(2));
  CHECK_FALSE(inverse(m));
  CHECK(determinant(Matrix::from_rows(2, {{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("solve and BasisSolver") {
  Matrix a = Matrix::from_rows(2, {{1, 1}, {1, -1}});
  auto x = solve(a, {Scalar(3), Scalar(1)});
  REQUIRE(x);
  CHECK(*x == Coords{2, 1});
  CHECK_FALSE(solve(Matrix::from_rows(2, {{1, 1}, {1, 1}}), {Scalar(1), Scalar(2)}));

  BasisSolver s(Matrix::from_columns(3, {{1, 0, 1}, {0, 1, 1}}));
  CHECK(s.dimension() == 2);
  auto c = s.coordinates({Scalar(2), Scalar(3), Scalar(5)});
  REQUIRE(c);
  CHECK(*c == Coords{2, 3});
  CHECK_FALSE(s.contains({Scalar(0), Scalar(0), Scalar(1)}));
  CHECK_THROWS_AS(BasisSolver(Matrix::from_columns(2, {{1, 1}, {2, 2}})), ConsistencyError);
}

TEST_CASE("row_space is canonical") {
  Matrix a = Matrix::from_rows(3, {{1, 1, 0}, {0, 1, 1}});
  Matrix b = Matrix::from_rows(3, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
  CHECK(row_space(a) == row_space(b));
}

TEST_CASE("random matrices agree with the dense oracle") {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<std::size_t> size(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = size(rng), c = size(rng);
    Matrix m = random_matrix(rng, r, c, 40);
    const std::size_t rk = rank(m);
    CHECK(rk == oracle::rank_of(dense(m), c));
    Matrix n = nullspace(m);
    CHECK(n.cols() == c - rk);
    CHECK((m * n).is_zero());
    CHECK(column_space(m).cols() == rk);
    CHECK(row_space(m).rows() == rk);
    if (r == c) {
      CHECK((determinant(m) != 0) == (rk == r));
      if (auto inv = inverse(m)) CHECK(m * *inv == Matrix::identity(r));
    }
  }
}
