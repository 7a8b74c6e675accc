#include <random>

#include "doctest.h"
#include "mlfw/word.hpp"

using namespace mlfw;

namespace {

AlphabetPtr ab() { return Alphabet::surface(2); }
Word w(const AlphabetPtr& a, const char* text) { return parse_word(a, text); }

// Letters as (gen, +-1); cancels adjacent inverse pairs in a random order.
std::vector<Run> reduce_randomly(std::vector<Run> letters, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i].gen == letters[i + 1].gen && letters[i].exp == -letters[i + 1].exp) spots.push_back(i);
    if (spots.empty()) return letters;
    const auto at = spots[rng() % spots.size()];
    letters.erase(letters.begin() + static_cast<long>(at), letters.begin() + static_cast<long>(at) + 2);
  }
}

Word random_word(const AlphabetPtr& a, std::mt19937_64& rng, std::size_t len) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < len; ++i)
    runs.push_back({static_cast<std::uint32_t>(rng() % a->size()), rng() % 2 ? 1 : -1});
  return Word(a, runs);
}

}  // namespace

TEST_CASE("free reduction examples") {
  auto a = ab();
  CHECK(w(a, "a1 a1^-1").is_identity());
  const Word c = commutator(w(a, "a1"), w(a, "b1"));
  CHECK(c.length() == 4);
  CHECK(to_string(c) == "a1 b1 a1^-1 b1^-1");
  CHECK(w(a, "a1 b1 b1^-1 a1") == w(a, "a1^2"));
  CHECK(w(a, "a1 b1 b1^-1 a1").runs().size() == 1);
}

TEST_CASE("free reduction is confluent under random cancellation orders") {
  std::mt19937_64 rng(7);
  auto a = ab();
  for (int trial = 0; trial < 200; ++trial) {
    // Build a word with many cancelling pairs so the order matters.
    std::vector<Run> letters;
    for (int k = 0; k < 30; ++k) {
      Run r{static_cast<std::uint32_t>(rng() % a->size()), rng() % 2 ? 1 : -1};
      if (rng() % 3 == 0 && !letters.empty()) {
        const auto pos = rng() % (letters.size() + 1);
        letters.insert(letters.begin() + static_cast<long>(pos), {r, Run{r.gen, -r.exp}});
      } else {
        letters.push_back(r);
      }
    }
    const Word reference = free_reduce(Word(a, letters));
    for (int order = 0; order < 3; ++order) CHECK(Word(a, reduce_randomly(letters, rng)) == reference);
    CHECK(free_reduce(reference) == reference);
  }
}

TEST_CASE("group operations") {
  auto a = ab();
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    const Word u = random_word(a, rng, 12);
    CHECK(multiply(u, invert(u)).is_identity());
    CHECK(power(u, 3) == multiply(u, multiply(u, u)));
  }
  CHECK(commutator(w(a, "a1"), w(a, "a1")).is_identity());
  CHECK(commutator(w(a, "a1"), w(a, "b1 a1")) == commutator(w(a, "a1"), w(a, "b1")));
  CHECK_THROWS_AS(multiply(w(a, "a1"), Word::generator(Alphabet::surface(1), Generator::a(1))), std::invalid_argument);
  CHECK_THROWS(parse_word(a, "a3"));
  CHECK_THROWS(parse_word(a, "a1^x"));
}

TEST_CASE("endomorphisms") {
  auto a = Alphabet::surface(1);
  const Endomorphism id(a);
  const Word u = w(a, "a1 b1^2 a1^-3");
  CHECK(apply_endo(id, u) == u);

  const PresentationSpec spec3(3);
  const auto fam3 = twist_family(spec3);
  REQUIRE(fam3.size() == 2);
  const auto phi1 = spec3.to_surface(fam3[0].map);
  CHECK(fam3[0].name == "phi_1");
  CHECK(apply_endo(phi1, w(phi1.alphabet(), "b1")) == w(phi1.alphabet(), "b1 a1"));

  const PresentationSpec spec5(5);
  const auto fam5 = twist_family(spec5);
  const auto& pp = fam5.back();
  CHECK(pp.name == "phi''_1");
  const auto pps = spec5.to_surface(pp.map);
  CHECK(apply_endo(pps, w(pps.alphabet(), "a1")) == w(pps.alphabet(), "a1 b1^-1 a2 b2 a2^-1"));

  // Generators outside the domain.
  CHECK_THROWS(Endomorphism(a, {w(a, "a1")}));
}

TEST_CASE("endomorphism application is multiplicative") {
  std::mt19937_64 rng(3);
  for (int d = 2; d <= 9; ++d) {
    const PresentationSpec spec(d);
    for (const auto& e : twist_family(spec)) {
      for (int k = 0; k < 10; ++k) {
        const Word u = random_word(spec.alphabet(), rng, 8), v = random_word(spec.alphabet(), rng, 8);
        CHECK(apply_endo(e.map, multiply(u, v)) == multiply(apply_endo(e.map, u), apply_endo(e.map, v)));
      }
    }
  }
}

TEST_CASE("boundary word") {
  CHECK(to_string(boundary_word(1)) == "a1 b1 a1^-1 b1^-1");
  CHECK(boundary_word(2).length() == 8);
  for (int g = 1; g <= 4; ++g)
    for (auto s : boundary_word(g).exponent_sums()) CHECK(s == 0);
  CHECK_THROWS_AS(boundary_word(0), std::invalid_argument);
}

TEST_CASE("presentation dictionary and family") {
  CHECK_THROWS_AS(PresentationSpec(1), std::invalid_argument);
  const PresentationSpec even(6), odd(7);
  CHECK(even.genus() == 2);
  CHECK(odd.genus() == 3);
  CHECK(even.a_index(1) == 3);
  CHECK(even.b_index(1) == 4);
  CHECK(odd.a_index(1) == 2);
  CHECK(odd.b_index(1) == 3);

  auto names = [](int d) {
    std::vector<std::string> out;
    for (const auto& e : twist_family(PresentationSpec(d))) out.push_back(e.name);
    return out;
  };
  CHECK(names(2) == std::vector<std::string>{"phi"});
  CHECK(names(5) == std::vector<std::string>{"phi_1", "phi_2", "phi'_1", "phi'_2", "phi''_1"});
  CHECK(names(4) == std::vector<std::string>{"phi", "phi_1", "phi'_1"});

  const PresentationSpec two(2);
  const auto phi = twist_family(two)[0].map;
  CHECK(apply_endo(phi, w(two.alphabet(), "x2")) == w(two.alphabet(), "x2 x1"));
}

TEST_CASE("every family member fixes delta and has a two-sided inverse") {
  for (int d = 2; d <= 9; ++d) {
    const PresentationSpec spec(d);
    for (const auto& e : twist_family(spec)) {
      if (d >= 3) CHECK_MESSAGE(fixes_delta(e.map, spec), e.name << " d=" << d);
      CHECK(compose(e.map, e.inverse).is_identity());
      CHECK(compose(e.inverse, e.map).is_identity());
      CHECK(e.map.fixes(Generator::sigma()));
      CHECK(e.map.fixes(Generator::tau()));
      // phi is the one member that moves x2 (x2 -> x2 x1).
      for (int i : spec.inert_x())
        if (!(e.name == "phi" && i == 2)) CHECK(e.map.fixes(Generator::x(i)));
    }
  }
}

TEST_CASE("delta fixing on the surface alphabet") {
  auto a1 = Alphabet::surface(1);
  const auto phi1 = parse_endomorphism(a1, "b1 -> b1 a1");
  CHECK(fixes_delta(phi1, 1));
  const auto swap = parse_endomorphism(a1, "a1 -> b1\nb1 -> a1");
  CHECK_FALSE(fixes_delta(swap, 1));
  CHECK(apply_endo(swap, boundary_word(1)) == invert(boundary_word(1)));

  const PresentationSpec spec5(5);
  const auto pp = spec5.to_surface(twist_family(spec5).back().map);
  CHECK(fixes_delta(pp, 2));
  CHECK_THROWS(parse_endomorphism(a1, "a1 -> a1\na1 -> b1"));
}
