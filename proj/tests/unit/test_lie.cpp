#include "doctest.h"
#include "mlfw/lie.hpp"
#include "mlfw/symplectic.hpp"

using namespace mlfw;

TEST_CASE("Lie dimension lower bound from the twists") {
  for (std::uint32_t p : {3u, 5u}) {
    CHECK(lie_dimension_lower_bound(surface_twist_matrices(1), p, 12).dimension == 3);
    CHECK(lie_dimension_lower_bound(surface_twist_matrices(2), p, 12).dimension == 10);
  }
  const IntMatrix single = int_matrix(2, 2, {1, 3, 0, 1});
  CHECK(lie_dimension_lower_bound({single}, 3, 10).dimension == 1);
  // Not congruent to I mod p: replaced by a power first.
  const auto r = lie_dimension_lower_bound({int_matrix(2, 2, {1, 1, 0, 1})}, 5, 10);
  CHECK(r.dimension == 1);
  CHECK(r.powers == std::vector<unsigned long>{5});
}

TEST_CASE("Lie dimension and precision") {
  // Twist logs are exact, so even tiny N decides every bracket.
  const auto twists = lie_dimension_lower_bound(surface_twist_matrices(2), 3, 2);
  CHECK(twists.dimension == 10);
  CHECK(twists.closure_certified);
  // log 4 + log 7 = log 28 has 3-adic valuation 3: the logs of diag(4,7) and
  // diag(7,4) separate only once N exceeds 3. Below that the answer is still
  // a lower bound, but not certified.
  const std::vector<IntMatrix> diag{int_matrix(2, 2, {4, 0, 0, 7}), int_matrix(2, 2, {7, 0, 0, 4})};
  const auto low = lie_dimension_lower_bound(diag, 3, 3);
  CHECK(low.dimension == 1);
  CHECK_FALSE(low.closure_certified);
  const auto high = lie_dimension_lower_bound(diag, 3, 6);
  CHECK(high.dimension == 2);
  CHECK(high.closure_certified);
  // Borel plus opposite unipotent: all of gl_2.
  const std::vector<IntMatrix> full{int_matrix(2, 2, {4, 3, 0, 1}), int_matrix(2, 2, {1, 0, 3, 1})};
  const auto f = lie_dimension_lower_bound(full, 3, 4);
  CHECK(f.dimension == 4);
  CHECK(f.closure_certified);
  CHECK_THROWS(lie_dimension_lower_bound({int_matrix(2, 2, {3, 0, 0, 1})}, 3, 8));
  CHECK_THROWS(lie_dimension_lower_bound(surface_twist_matrices(1), 3, 1));
}

TEST_CASE("bracket") {
  const auto x = PadicMatrix::from_integer(5, int_matrix(2, 2, {5, 0, 0, 10}), 6);
  const auto y = PadicMatrix::from_integer(5, int_matrix(2, 2, {25, 0, 0, 5}), 6);
  CHECK(bracket(x, y).is_exact_zero());
  const auto e = PadicMatrix::exact(5, int_matrix(2, 2, {0, 1, 0, 0}));
  const auto f = PadicMatrix::exact(5, int_matrix(2, 2, {0, 0, 1, 0}));
  const auto h = bracket(e, f);
  CHECK(h(0, 0).identical(PadicScalar::exact(5, 1)));
  CHECK(h(1, 1).identical(PadicScalar::exact(5, -1)));
}

TEST_CASE("sp_2g by exact linear solve") {
  for (int g = 1; g <= 4; ++g) CHECK(sp_lie_dimension(g) == static_cast<std::size_t>(2 * g * g + g));
  const auto w = sp_bracket_witness(1);
  CHECK(w.bracket == to_rational(int_matrix(2, 2, {1, 0, 0, -1})));
  CHECK(sp_bracket_nontrivial(1));
  CHECK(sp_bracket_nontrivial(3));
}

TEST_CASE("commutant of the regular representation") {
  CHECK(commutant_dimension(GroupAlgebraSpec(cyclic_group(2))) == 2);
  CHECK(commutant_dimension(GroupAlgebraSpec(cyclic_group(6))) == 6);
  CHECK(commutant_dimension(GroupAlgebraSpec(symmetric_group(3))) == 6);
  for (const auto& entry : small_group_catalogue())
    CHECK_MESSAGE(commutant_dimension(GroupAlgebraSpec(entry.group)) == entry.group.order(), entry.name);
}

TEST_CASE("dimension comparison") {
  const auto one = compare_dimensions(1);
  CHECK(one.sp_dimension == 3);
  CHECK(one.bound == 3);
  CHECK_FALSE(one.exceeds);
  CHECK(one.flagged);
  for (int g = 2; g <= 4; ++g) {
    const auto c = compare_dimensions(g);
    CHECK(c.exceeds);
    CHECK_FALSE(c.flagged);
  }
}
