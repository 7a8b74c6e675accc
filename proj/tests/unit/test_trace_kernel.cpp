#include <random>

#include "doctest.h"
#include "mlfw/trace_kernel.hpp"

using namespace mlfw;

namespace {

RatVector vec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("predicted kernels") {
  CHECK(predicted_kernel(2) == Subspace::coordinates(2, {0}));
  CHECK(predicted_kernel(5) == Subspace::coordinates(5, {1, 2, 3, 4}));
  CHECK(predicted_kernel(4) == Subspace::coordinates(4, {0, 2, 3}));
  CHECK_THROWS_AS(predicted_kernel(1), std::invalid_argument);
}

TEST_CASE("closed-form matrices match abelianized words") {
  for (int d = 2; d <= 9; ++d) {
    const TwistFamily fam(d);
    const auto words = twist_family(fam.presentation());
    REQUIRE(words.size() == fam.matrices().size());
    for (std::size_t k = 0; k < words.size(); ++k) {
      CHECK(fam.matrices()[k].name == words[k].name);
      CHECK(fam.matrices()[k].matrix == abelianize_on_y(fam.presentation(), words[k].map));
    }
  }
}

TEST_CASE("invariant hyperplanes") {
  for (int d = 2; d <= 9; ++d) {
    const TwistFamily fam(d);
    const auto hs = invariant_hyperplanes(fam);
    REQUIRE(hs.size() == 1);
    CHECK(hs[0] == predicted_kernel(d));
    for (const auto& m : fam.matrices()) CHECK(hs[0].invariant_under(m.matrix));
  }
  CHECK(invariant_hyperplanes(TwistFamily(3))[0] == Subspace::coordinates(3, {1, 2}));
  CHECK(invariant_hyperplanes(TwistFamily(6))[0] == Subspace::coordinates(6, {0, 2, 3, 4, 5}));
  const auto cov = fixed_covectors(TwistFamily(6));
  REQUIRE(cov.size() == 1);
  CHECK(Subspace(6, cov) == Subspace::coordinates(6, {1}));
}

TEST_CASE("orbit spans") {
  CHECK(orbit_span(TwistFamily(4), unit_vector(4, 1)).contains(unit_vector(4, 0)));
  std::mt19937_64 rng(20);
  const TwistFamily six(6), eight(8);
  for (int k = 0; k < 20; ++k) {
    auto v = random_rational_vector(rng, 6);
    if (v[six.b(1)] == 0) v[six.b(1)] = 1;
    const auto s = orbit_span(six, v);
    CHECK(s.contains(unit_vector(6, 2)));
    CHECK(s.contains(unit_vector(6, 3)));
    auto w = random_rational_vector(rng, 8);
    if (w[eight.a(1)] == 0) w[eight.a(1)] = 1;
    CHECK(orbit_span(eight, w).contains(unit_vector(8, 4)));
  }
  CHECK_THROWS(orbit_span(six, RatVector(6, 0)));
}

TEST_CASE("phi powers move admissible lines") {
  CHECK(phi_power_moves_line(2, 1, unit_vector(2, 1)));
  CHECK(phi_power_moves_line(4, -2, vec({3, 1, 1, 0})));
  CHECK_THROWS(phi_power_moves_line(4, 1, unit_vector(4, 0)));
  CHECK_THROWS(phi_power_moves_line(4, 0, unit_vector(4, 1)));
  CHECK_THROWS(phi_power_moves_line(5, 1, unit_vector(5, 1)));
}

TEST_CASE("claims (a)-(d)") {
  std::mt19937_64 rng(4);
  for (int d = 2; d <= 8; ++d)
    for (const auto& c : verify_claims(d, 20, rng))
      CHECK_MESSAGE(c.passed(), "claim " << c.claim << " d=" << d << " i=" << c.index);
}

TEST_CASE("the (d) step as printed has a sign error") {
  for (int d : {6, 7, 8, 9}) {
    const TwistFamily fam(d);
    const auto n = static_cast<std::size_t>(d);
    for (int i = 1; i < fam.genus(); ++i) {
      const RatVector printed = claim_d_printed_rhs(fam, i);
      // Printed: 2 y_{b_{i+1}} - y_{b_i}; the step needs y_{b_i}.
      RatVector expect(n, 0);
      expect[fam.b(i + 1)] = 2;
      expect[fam.b(i)] = -1;
      CHECK(printed == expect);
      CHECK(printed != unit_vector(n, fam.b(i)));
    }
  }
}

TEST_CASE("fixed covectors require unipotent families") {
  CHECK_NOTHROW(fixed_covectors(TwistFamily(9)));
  CHECK_THROWS(TwistFamily(1));
}
