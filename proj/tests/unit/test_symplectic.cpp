#include <random>

#include "doctest.h"
#include "mlfw/symplectic.hpp"
#include "mlfw/trace_kernel.hpp"

using namespace mlfw;

namespace {

std::vector<Generator> surface_basis(int g) {
  std::vector<Generator> out;
  for (int i = 1; i <= g; ++i) {
    out.push_back(Generator::a(i));
    out.push_back(Generator::b(i));
  }
  return out;
}

}  // namespace

TEST_CASE("abelianization examples") {
  auto a1 = Alphabet::surface(1);
  const auto phi1 = parse_endomorphism(a1, "b1 -> b1 a1");
  CHECK(abelianize(phi1, surface_basis(1)) == int_matrix(2, 2, {1, 1, 0, 1}));
  CHECK(abelianize(Endomorphism(a1), surface_basis(1)) == IntMatrix::identity(2));

  // phi''_1 on genus 2: exponent sums of the four images, as columns.
  const PresentationSpec spec(5);
  const auto pp = spec.to_surface(twist_family(spec).back().map);
  IntMatrix want = IntMatrix::identity(4);
  want(1, 0) = -1;
  want(3, 0) = 1;
  want(3, 2) = -1;
  want(1, 2) = 1;
  CHECK(abelianize(pp, surface_basis(2)) == want);

  // a1 -> ... a2 ...: an image leaves a genus-1 basis.
  CHECK_THROWS(abelianize(pp, surface_basis(1)));
}

TEST_CASE("symplectic test") {
  const SymplecticForm j1(1);
  CHECK(is_symplectic(IntMatrix::identity(2), j1));
  CHECK(is_symplectic(int_matrix(2, 2, {1, 1, 0, 1}), j1));
  CHECK_FALSE(is_symplectic(int_matrix(2, 2, {2, 0, 0, 1}), j1));
  CHECK_THROWS(is_symplectic(IntMatrix::identity(3), j1));
}

TEST_CASE("abelianized family is symplectic, unipotent and fixes inert coordinates") {
  for (int d = 3; d <= 9; ++d) {
    const PresentationSpec spec(d);
    const int g = spec.genus();
    std::vector<Generator> basis;
    for (int i = 1; i <= g; ++i) {
      basis.push_back(spec.a(i));
      basis.push_back(spec.b(i));
    }
    const SymplecticForm j(g);
    for (const auto& e : twist_family(spec)) {
      if (e.name == "phi") continue;
      const IntMatrix m = abelianize(e.map, basis);
      CHECK(is_symplectic(m, j));
      const IntMatrix n = m - IntMatrix::identity(m.rows());
      CHECK((n * n).is_zero());
      const IntMatrix full = abelianize_on_y(spec, e.map);
      for (int i : spec.inert_x())
        if (i >= 1) CHECK(full.column(static_cast<std::size_t>(i - 1)) == IntMatrix::identity(full.rows()).column(static_cast<std::size_t>(i - 1)));
    }
  }
}

TEST_CASE("abelianization is functorial on random compositions") {
  std::mt19937_64 rng(11);
  for (int d = 3; d <= 9; ++d) {
    const PresentationSpec spec(d);
    const auto fam = twist_family(spec);
    for (int trial = 0; trial < 10; ++trial) {
      Endomorphism e(spec.alphabet());
      IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(d));
      for (int k = 0; k < 4; ++k) {
        const auto& f = fam[rng() % fam.size()];
        const auto& step = rng() % 2 ? f.map : f.inverse;
        e = compose(e, step);
        m = m * abelianize_on_y(spec, step);
      }
      CHECK(abelianize_on_y(spec, e) == m);
    }
  }
}

TEST_CASE("symplectic group orders") {
  CHECK(sp_order(1, 2) == 6);
  CHECK(sp_order(1, 3) == 24);
  CHECK(sp_order(2, 2) == 720);
  CHECK(sp_order(2, 3) == 51840);
  CHECK(sp_order(1, 4) == 48);
  CHECK_THROWS_AS(sp_order(1, 6), std::invalid_argument);
  CHECK(factor_prime_power(81).prime == 3);
  CHECK(factor_prime_power(81).exponent == 4);
}

TEST_CASE("congruence quotients generated by the twists") {
  const auto t1 = surface_twist_matrices(1);
  CHECK(generate_quotient(t1, 2).size() == 6);
  CHECK(generate_quotient(t1, 3).size() == 24);
  CHECK(generate_quotient(t1, 4).size() == 48);
  const auto t2 = surface_twist_matrices(2);
  CHECK(t2.size() == 5);
  CHECK(generate_quotient(t2, 2).size() == 720);
  CHECK(generate_quotient(t2, 3).size() == 51840);

  // A proper subset generates a subgroup whose order divides the full one.
  const auto sub = generate_quotient({t2[0], t2[1]}, 3);
  CHECK(Integer(51840) % Integer(static_cast<unsigned long>(sub.size())) == 0);
  CHECK(sub.size() < 51840);

  CHECK_THROWS(generate_quotient({int_matrix(2, 2, {2, 0, 0, 1})}, 2));
  CHECK_THROWS_AS(generate_quotient(t2, 3, 1000), std::length_error);
}
