// One line per acceptance criterion; exit status 1 if any line is FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "mlfw/finite_group.hpp"
#include "mlfw/lie.hpp"
#include "mlfw/lubin_tate.hpp"
#include "mlfw/properties.hpp"
#include "mlfw/symplectic.hpp"
#include "mlfw/trace_kernel.hpp"
#include "mlfw/word.hpp"

using namespace mlfw;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) note << "; ";
      ok = false;
      note << what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.require(secs <= limit_s, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  if (!out.ok) ++failures;
  std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << static_cast<long>(secs * 1000)
            << " ms)";
  if (!out.ok) std::cout << " -- " << out.note.str();
  std::cout << std::endl;
}

Subgroup even_part(const FiniteGroup& g) {
  Subgroup out;
  const auto& perms = *g.permutations();
  for (Element e = 0; e < g.order(); ++e) {
    int inversions = 0;
    const auto& p = perms[e];
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    if (inversions % 2 == 0) out.push_back(e);
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "every twist fixes delta, d = 3..9", 1, [](Outcome& o) {
    for (int d = 3; d <= 9; ++d) {
      const PresentationSpec spec(d);
      for (const auto& e : twist_family(spec))
        o.require(fixes_delta(e.map, spec), e.name + " moves delta for d=" + std::to_string(d));
    }
  });

  criterion(2, "abelianized twists are symplectic; quotients of order 6, 24, 720, 51840", 60, [](Outcome& o) {
    for (int g = 1; g <= 4; ++g) {
      const SymplecticForm j(g);
      for (const auto& m : surface_twist_matrices(g))
        o.require(is_symplectic(m, j), "non-symplectic twist for g=" + std::to_string(g));
    }
    const std::pair<int, std::uint32_t> cases[] = {{1, 2}, {1, 3}, {2, 2}, {2, 3}};
    const std::size_t want[] = {6, 24, 720, 51840};
    for (int k = 0; k < 4; ++k) {
      const auto [g, m] = cases[k];
      const auto size = generate_quotient(surface_twist_matrices(g), m).size();
      o.require(size == want[k] && Integer(static_cast<unsigned long>(size)) == sp_order(g, m),
                "g=" + std::to_string(g) + " mod " + std::to_string(m) + " gave " + std::to_string(size));
    }
  });

  criterion(3, "one invariant hyperplane, equal to the predicted kernel, d = 2..9", 1, [](Outcome& o) {
    for (int d = 2; d <= 9; ++d) {
      const auto hs = invariant_hyperplanes(TwistFamily(d));
      o.require(hs.size() == 1 && hs[0] == predicted_kernel(d), "d=" + std::to_string(d));
    }
  });

  criterion(4, "claims (a)-(d) on 20 random vectors each, d <= 8", 5, [](Outcome& o) {
    std::mt19937_64 rng(42);
    std::size_t checked = 0;
    for (int d = 2; d <= 8; ++d)
      for (const auto& c : verify_claims(d, 20, rng)) {
        ++checked;
        o.require(c.passed(), std::string("claim ") + c.claim + " d=" + std::to_string(d) + " i=" + std::to_string(c.index));
      }
    // (c) and (d) need genus >= 2, first reached at d = 5.
    o.require(checked > 0, "no claims checked");
  });

  criterion(5, "phi^n moves every admissible line, n in [-5,5] \\ {0}, even d <= 8", 1, [](Outcome& o) {
    std::mt19937_64 rng(42);
    for (int d = 2; d <= 8; d += 2)
      for (int s = 0; s < 50; ++s) {
        auto v = random_rational_vector(rng, static_cast<std::size_t>(d));
        if (v[1] == 0) v[1] = 1;
        for (long n = -5; n <= 5; ++n)
          if (n != 0) o.require(phi_power_moves_line(d, n, v), "d=" + std::to_string(d) + " n=" + std::to_string(n));
      }
  });

  criterion(6, "Lie dimension 2g^2+g, commutant dimension |H|, 2g^2+g > 2g+1 for g >= 2", 30, [](Outcome& o) {
    for (int g = 1; g <= 2; ++g)
      for (std::uint32_t p : {3u, 5u}) {
        const auto r = lie_dimension_lower_bound(surface_twist_matrices(g), p, 16);
        o.require(r.dimension == static_cast<std::size_t>(2 * g * g + g) && r.closure_certified,
                  "g=" + std::to_string(g) + " p=" + std::to_string(p) + " gave " + std::to_string(r.dimension));
      }
    for (const auto& entry : small_group_catalogue())
      if (entry.group.order() <= 12)
        o.require(commutant_dimension(GroupAlgebraSpec(entry.group)) == entry.group.order(), "commutant " + entry.name);
    o.require(compare_dimensions(1).flagged && !compare_dimensions(1).exceeds, "g=1 not flagged");
    for (int g = 2; g <= 4; ++g) o.require(compare_dimensions(g).exceeds, "g=" + std::to_string(g));
  });

  criterion(7, "[E12,E21] != 0 in sp_2; dim sp_2g = 2g^2+g for g <= 4", 1, [](Outcome& o) {
    o.require(sp_bracket_nontrivial(1), "bracket vanished");
    for (int g = 1; g <= 4; ++g)
      o.require(sp_lie_dimension(g) == static_cast<std::size_t>(2 * g * g + g), "g=" + std::to_string(g));
  });

  criterion(8, "Lubin-Tate law identities, p in {3,5}, f in {1,2}, D = 12, N = 8", 60, [](Outcome& o) {
    for (std::uint32_t p : {3u, 5u})
      for (int f : {1, 2}) {
        const CoefficientRing ring(p, f, 8);
        const auto law = lubin_tate_law(ring, ring.from_integer(p), ring.residue_field_size(), 12);
        for (const auto& c : check_law(law))
          o.require(c.passed, c.name + " (p=" + std::to_string(p) + ", f=" + std::to_string(f) + ")");
      }
  });

  criterion(9, "normalizer lemma on (S4,A4) and (S3,C3); (S4,V4) rejected", 10, [](Outcome& o) {
    const auto s4 = symmetric_group(4);
    const auto a4 = verify_normalizer_lemma(s4, even_part(s4));
    o.require(a4.holds() && a4.normalizer_order == 2 && a4.restricted_image_order == 2, "(S4,A4)");
    const auto s3 = symmetric_group(3);
    const Subgroup c3 = generate_subgroup(s3, {s3.find_permutation({1, 2, 0})});
    try {
      const auto r = verify_normalizer_lemma(s3, c3);
      o.require(r.holds() && r.normalizer_order == 2 && r.restricted_image_order == 2, "(S3,C3) sides");
    } catch (const HypothesisError& e) {
      const auto sides = compare_normalizer_sides(s3, c3);
      o.require(false, std::string("(S3,C3) rejected: ") + e.what() + " [unchecked sides " +
                           std::to_string(sides.normalizer_order) + " and " +
                           std::to_string(sides.restricted_image_order) + ", restriction " +
                           (sides.restriction_injective ? "injective" : "not injective") + "]");
    }
    const Subgroup v4 = generate_subgroup(s4, {s4.find_permutation({1, 0, 3, 2}), s4.find_permutation({2, 3, 0, 1})});
    bool rejected = false;
    try {
      verify_normalizer_lemma(s4, v4);
    } catch (const HypothesisError&) {
      rejected = true;
    }
    o.require(rejected, "(S4,V4) accepted");
  });

  criterion(10, "1000 p-adic precision cases and 1000 log/exp round trips", 10, [](Outcome& o) {
    const auto s = padic_soundness_cases({3, 5}, 16, 1000, 42);
    o.require(s.cases == 1000 && s.failures == 0, "soundness: " + s.first_failure);
    const auto l = padic_log_exp_cases({3, 5}, 16, 1000, 42);
    o.require(l.cases == 1000 && l.failures == 0, "log/exp: " + l.first_failure);
  });

  return failures == 0 ? 0 : 1;
}
