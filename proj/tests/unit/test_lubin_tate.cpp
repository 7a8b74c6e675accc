#include "doctest.h"
#include "mlfw/lubin_tate.hpp"
#include "mlfw/padic.hpp"

using namespace mlfw;

namespace {

using E = TruncatedSeries::Exponent;

bool all_pass(const std::vector<LawCheck>& checks, std::string& failed) {
  for (const auto& c : checks)
    if (!c.passed) {
      failed += c.name + " ";
    }
  return failed.empty();
}

}  // namespace

TEST_CASE("coefficient ring") {
  const CoefficientRing r(5, 2, 6);
  CHECK(r.residue_field_size() == 25);
  CHECK(r.modulus() == 15625);
  const auto w = r.from_coefficients({0, 1});
  const auto u = r.add(r.one(), r.mul(r.from_integer(5), w));
  CHECK(r.is_unit(u));
  CHECK(r.mul(u, r.inverse(u)) == r.one());
  CHECK(r.mul(w, r.inverse(w)) == r.one());
  CHECK(r.valuation(r.from_integer(50)) == 2);
  CHECK(r.divide_by_p(r.from_integer(50)) == r.from_integer(10));
  CHECK_THROWS(r.inverse(r.from_integer(5)));
  CHECK_THROWS(CoefficientRing(2, 1, 4));
  CHECK_THROWS(CoefficientRing(4, 1, 4));
  CHECK_THROWS(CoefficientRing(3, 1, 60));
}

TEST_CASE("law for p = 5, degree 2") {
  const CoefficientRing r(5, 1, 8);
  const auto law = lubin_tate_law(r, r.from_integer(5), 5, 2);
  const auto& F = law.law;
  CHECK(F.at(E{1, 0, 0}) == law.working->one());
  CHECK(F.at(E{0, 1, 0}) == law.working->one());
  CHECK(law.working->is_zero(F.at(E{1, 1, 0})));
  CHECK(law.working->is_zero(F.at(E{2, 0, 0})));

  // Degree-q terms of f enter the law only at degree >= q.
  const auto big = lubin_tate_law(r, r.from_integer(5), 5, 7);
  for (std::size_t k = 0; k < big.law.terms(); ++k) {
    const auto& e = big.law.exponent(k);
    const int deg = e[0] + e[1];
    if (deg >= 2 && deg < 5) CHECK(big.working->is_zero(big.law.coeff(k)));
  }
}

TEST_CASE("full law checks") {
  for (std::uint32_t p : {3u, 5u})
    for (int f : {1, 2}) {
      const CoefficientRing r(p, f, 6);
      const auto law = lubin_tate_law(r, r.from_integer(p), r.residue_field_size(), 8);
      std::string failed;
      CHECK_MESSAGE(all_pass(check_law(law), failed), "p=" << p << " f=" << f << " " << failed);
    }
}

TEST_CASE("another uniformizer") {
  const CoefficientRing r(3, 1, 6);
  const auto law = lubin_tate_law(r, r.from_integer(3 * 4), 3, 6);
  std::string failed;
  CHECK_MESSAGE(all_pass(check_law(law), failed), failed);
}

TEST_CASE("endomorphisms") {
  const CoefficientRing r(5, 1, 8);
  const auto law = lubin_tate_law(r, r.from_integer(5), 5, 12);
  const auto one = lt_endomorphism(law, r.one(), 12);
  const auto t = TruncatedSeries::variable(law.working, 1, 12, 0);
  CHECK(one.agrees_with(t, 8));
  const auto pi = lt_endomorphism(law, r.from_integer(5), 12);
  CHECK(pi.agrees_with(law.series, 8));
  const auto two = lt_endomorphism(law, r.from_integer(2), 12);
  const auto three = lt_endomorphism(law, r.from_integer(3), 12);
  const auto six = lt_endomorphism(law, r.from_integer(6), 12);
  CHECK(two.substitute({three}).agrees_with(six, 8));
}

TEST_CASE("formal logarithm") {
  const CoefficientRing r(5, 1, 8);
  const auto law = lubin_tate_law(r, r.from_integer(5), 5, 10);
  const auto lg = formal_log(law, 10);
  CHECK(lg.scale == 1);
  const auto t = TruncatedSeries::variable(law.working, 1, 10, 0);
  CHECK(lg.series.truncated(1).agrees_with(t.scaled(law.working->from_integer(5)).truncated(1), 8));

  // Additive law: log is t, unscaled.
  const auto ring = std::make_shared<const CoefficientRing>(5, 1, 8);
  const auto x = TruncatedSeries::variable(ring, 2, 6, 0), y = TruncatedSeries::variable(ring, 2, 6, 1);
  const auto additive = formal_log_of(x + y, 8);
  std::int64_t scale = 1;
  for (int k = 0; k < additive.scale; ++k) scale *= 5;
  CHECK(additive.scale == 1);
  CHECK(additive.series.agrees_with(TruncatedSeries::variable(ring, 1, 6, 0).scaled(ring->from_integer(scale)), 8));
}

TEST_CASE("errors") {
  const CoefficientRing r(5, 1, 8);
  CHECK_THROWS(lubin_tate_law(r, r.from_integer(25), 5, 6));
  CHECK_THROWS(lubin_tate_law(r, r.from_integer(5), 7, 6));
  CHECK_THROWS(lubin_tate_law(r, r.from_integer(5), 5, 1));
  const auto law = lubin_tate_law(r, r.from_integer(5), 5, 6);
  CHECK_THROWS_AS(formal_log_of(law.law, 1), PrecisionError);
}
