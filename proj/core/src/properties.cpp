#include "mlfw/properties.hpp"

#include <random>

#include "mlfw/padic.hpp"

namespace mlfw {

namespace {

Integer random_integer(std::mt19937_64& rng, const Integer& bound) {
  // Uniform enough for test data: a 64-bit draw reduced modulo the bound.
  Integer r(static_cast<unsigned long>(rng() >> 1));
  r *= Integer(static_cast<unsigned long>(rng() >> 1));
  return r % bound;
}

Rational random_rational(std::mt19937_64& rng, std::uint32_t p) {
  Integer num = random_integer(rng, ipow(p, 8)) + 1;
  if (rng() % 2) num = -num;
  num *= ipow(p, static_cast<std::int64_t>(rng() % 4));
  Integer den = random_integer(rng, ipow(p, 3)) + 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void fail(PropertyTally& t, const std::string& what) {
  if (t.failures++ == 0) t.first_failure = what;
}

}  // namespace

PropertyTally padic_soundness_cases(const std::vector<std::uint32_t>& primes, int precision, std::size_t cases,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyTally t;
  for (std::size_t k = 0; k < cases; ++k) {
    const std::uint32_t p = primes[rng() % primes.size()];
    const Rational a = random_rational(rng, p), b = random_rational(rng, p);
    const auto va = padic_valuation(a.get_num(), p) - padic_valuation(a.get_den(), p);
    const auto vb = padic_valuation(b.get_num(), p) - padic_valuation(b.get_den(), p);
    const std::int64_t abs_a = va + 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(precision));
    const std::int64_t abs_b = vb + 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(precision));
    const int op = static_cast<int>(rng() % 4);
    auto run = [&](int extra) {
      const auto x = PadicScalar::from_rational(p, a, abs_a + extra);
      const auto y = PadicScalar::from_rational(p, b, abs_b + extra);
      switch (op) {
        case 0: return x + y;
        case 1: return x - y;
        case 2: return x * y;
        default: return x / y;
      }
    };
    Rational exact_q;
    switch (op) {
      case 0: exact_q = a + b; break;
      case 1: exact_q = a - b; break;
      case 2: exact_q = a * b; break;
      default: exact_q = a / b; break;
    }
    ++t.cases;
    const std::string tag = "case " + std::to_string(k) + " (op " + std::to_string(op) + ", p " + std::to_string(p) + ")";
    try {
      const PadicScalar lo = run(0);
      const PadicScalar hi = run(5);
      // The exact result, to more digits than either computation claims.
      const auto exact = PadicScalar::from_rational(p, exact_q, hi.absolute_precision() + 10);
      if (!lo.agrees_with(exact)) fail(t, tag + ": result disagrees with exact value");
      else if (hi.absolute_precision() < lo.absolute_precision()) fail(t, tag + ": precision not monotone");
      else if (!hi.capped(lo.absolute_precision()).identical(lo)) fail(t, tag + ": higher precision does not reproduce");
    } catch (const std::exception& e) {
      fail(t, tag + ": " + e.what());
    }
  }
  return t;
}

PropertyTally padic_log_exp_cases(const std::vector<std::uint32_t>& primes, int precision, std::size_t cases,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyTally t;
  for (std::size_t k = 0; k < cases; ++k) {
    const std::uint32_t p = primes[rng() % primes.size()];
    const Integer bound = ipow(p, precision);
    const Integer u_int = 1 + p * random_integer(rng, bound);
    const Integer v_int = 1 + p * random_integer(rng, bound);
    const Integer x_int = p * random_integer(rng, bound);
    ++t.cases;
    const std::string tag = "case " + std::to_string(k) + " (p " + std::to_string(p) + ")";
    try {
      const auto u = PadicScalar::from_integer(p, u_int, precision);
      const auto v = PadicScalar::from_integer(p, v_int, precision);
      const auto lu = padic_log(u);
      if (!padic_exp(lu).agrees_with(u)) {
        fail(t, tag + ": exp(log u) != u");
        continue;
      }
      if (!padic_log(u * v).agrees_with(lu + padic_log(v))) {
        fail(t, tag + ": log(uv) != log u + log v");
        continue;
      }
      const auto lu_hi = padic_log(PadicScalar::from_integer(p, u_int, precision + 5));
      if (lu_hi.absolute_precision() < lu.absolute_precision() ||
          !lu_hi.capped(lu.absolute_precision()).identical(lu)) {
        fail(t, tag + ": log at higher precision does not reproduce");
        continue;
      }
      if (x_int != 0) {
        const auto x = PadicScalar::from_integer(p, x_int, precision);
        if (!padic_log(padic_exp(x)).agrees_with(x)) fail(t, tag + ": log(exp x) != x");
      }
    } catch (const std::exception& e) {
      fail(t, tag + ": " + e.what());
    }
  }
  return t;
}

MatrixLogTally padic_matrix_cases(std::uint32_t p, int precision, std::size_t cases, std::uint64_t seed) {
  MatrixLogTally t;
  t.log_identity_zero = matrix_log(PadicMatrix::identity(p, 3)).is_exact_zero();
  {
    const long pl = p;
    const auto l = matrix_log(PadicMatrix::exact(p, int_matrix(2, 2, {1, pl, 0, 1})));
    const auto want = PadicMatrix::exact(p, int_matrix(2, 2, {0, pl, 0, 0}));
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i) ok = ok && l.entries()[i].identical(want.entries()[i]);
    t.nilpotent_exact = ok;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    IntMatrix m = IntMatrix::identity(3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r, c) += Integer(static_cast<long>(p) * (static_cast<long>(rng() % 11) - 5));
    try {
      const auto pm = PadicMatrix::from_integer(p, m, precision);
      const auto back = matrix_exp(matrix_log(pm, precision), precision);
      if (!back.agrees_with(pm) || back.min_absolute_precision() < precision - 2) ++t.round_trip_failures;
    } catch (const std::exception&) {
      ++t.round_trip_failures;
    }
  }
  return t;
}

}  // namespace mlfw
