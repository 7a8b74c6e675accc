#include "doctest.h"
#include "mlfw/padic.hpp"
#include "mlfw/properties.hpp"

using namespace mlfw;

TEST_CASE("valuation and precision accounting") {
  const auto u = PadicScalar::from_integer(5, Integer(27) * 125, 10);
  CHECK(u.valuation() == 3);
  CHECK(u.relative_precision() == 10);
  CHECK(u.absolute_precision() == 13);

  for (std::uint32_t p : {3u, 5u, 7u}) {
    const int N = 12;
    const auto one_plus_p = PadicScalar::from_integer(p, 1 + p, N);
    const auto diff = one_plus_p - PadicScalar::exact(p, 1);
    CHECK(diff.valuation() == 1);
    CHECK(diff.relative_precision() == N - 1);
  }

  const auto two = PadicScalar::from_integer(5, 2, 4), three = PadicScalar::from_integer(5, 3, 4);
  const auto six = two * three;
  CHECK(six.identical(PadicScalar::from_integer(5, 6, 4)));
  CHECK(six.absolute_precision() == 4);
}

TEST_CASE("arithmetic errors") {
  const auto x = PadicScalar::from_integer(3, 7, 5);
  CHECK_THROWS(x / PadicScalar::exact_zero(3));
  CHECK_THROWS_AS(x / PadicScalar::big_oh(3, 4), PrecisionError);
  CHECK_THROWS(x + PadicScalar::from_integer(5, 1, 5));
  // 1 + O(3^5) minus itself: nothing significant left, absolute precision kept.
  const auto z = x - x;
  CHECK(z.is_zero());
  CHECK(z.absolute_precision() == 5);
}

TEST_CASE("log and exp") {
  CHECK(padic_log(PadicScalar::exact(5, 1)).is_exact_zero());
  const int N = 12;
  const auto u = PadicScalar::from_integer(5, 6, N);
  const auto lu = padic_log(u);
  for (int k : {2, 3, 5}) {
    const auto uk = PadicScalar::from_integer(5, Integer(ipow(6, k)), N);
    CHECK(padic_log(uk).agrees_with(PadicScalar::exact(5, k) * lu));
  }
  const auto back = padic_exp(lu);
  CHECK(back.agrees_with(u));
  CHECK(back.absolute_precision() >= N - 1);

  CHECK_THROWS(padic_log(PadicScalar::from_integer(5, 2, N)));
  CHECK_THROWS(padic_log(PadicScalar::from_integer(2, 3, N)));
  CHECK_THROWS(padic_exp(PadicScalar::from_integer(5, 1, N)));
}

TEST_CASE("matrix log and exp") {
  const auto t = padic_matrix_cases(5, 10, 30, 99);
  CHECK(t.log_identity_zero);
  CHECK(t.nilpotent_exact);
  CHECK(t.round_trip_failures == 0);
  CHECK_THROWS(matrix_log(PadicMatrix::exact(5, int_matrix(2, 2, {2, 0, 0, 1}))));
}

TEST_CASE("rank with precision") {
  const auto e = [](long v) { return PadicScalar::exact(3, v); };
  CHECK(padic_rank({{e(1), e(0)}, {e(0), e(3)}}).rank == 2);
  CHECK(padic_rank({{e(1), e(2)}, {e(2), e(4)}}).rank == 1);
  const auto r = padic_rank({{PadicScalar::from_integer(3, 1, 4), e(0)}, {e(0), PadicScalar::big_oh(3, 4)}});
  CHECK(r.rank == 1);
  CHECK(r.residual_precision == 4);
}

TEST_CASE("random soundness and log/exp properties") {
  const auto s = padic_soundness_cases({3, 5, 7}, 12, 500, 5);
  CHECK_MESSAGE(s.failures == 0, s.first_failure);
  const auto l = padic_log_exp_cases({3, 5, 7}, 12, 300, 6);
  CHECK_MESSAGE(l.failures == 0, l.first_failure);
}
