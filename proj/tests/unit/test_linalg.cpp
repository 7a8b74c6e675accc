#include "doctest.h"
#include "mlfw/linalg.hpp"

using namespace mlfw;

TEST_CASE("rank, nullspace, inverse") {
  const RatMatrix m = to_rational(int_matrix(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}));
  CHECK(rank(m) == 2);
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  const auto image = m * ns[0];
  for (const auto& x : image) CHECK(x == 0);

  const RatMatrix a = to_rational(int_matrix(2, 2, {2, 1, 1, 1}));
  CHECK(a * inverse(a) == RatMatrix::identity(2));
  CHECK_THROWS(inverse(m));
}

TEST_CASE("rref is canonical") {
  std::vector<RatVector> rows{{2, 4, 0}, {1, 2, 1}};
  std::vector<RatVector> other{{1, 2, 1}, {0, 0, 3}};
  CHECK(rref(rows) == rref(other));
}

TEST_CASE("matrix power") {
  const IntMatrix t = int_matrix(2, 2, {1, 1, 0, 1});
  CHECK(matrix_power(t, 5) == int_matrix(2, 2, {1, 5, 0, 1}));
  CHECK(matrix_power(t, 0) == IntMatrix::identity(2));
}

TEST_CASE("sparse eliminator agrees with dense rank") {
  SparseEliminator e(3);
  CHECK(e.insert({{0, 1}, {1, 2}}));
  CHECK(e.insert({{1, 1}, {2, 1}}));
  CHECK_FALSE(e.insert({{0, 1}, {1, 3}, {2, 1}}));
  CHECK(e.rank() == 2);
  CHECK_FALSE(e.insert({}));
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(int_matrix(2, 2, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix(2, 3) * IntMatrix(2, 3), std::invalid_argument);
}
