#include <algorithm>

#include "doctest.h"
#include "mlfw/finite_group.hpp"

using namespace mlfw;

namespace {

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

TEST_CASE("construction and axioms") {
  const auto s4 = symmetric_group(4);
  CHECK(s4.order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(dihedral_group(5).order() == 10);
  CHECK(klein_four_group().order() == 4);
  for (Element e = 0; e < s4.order(); ++e) CHECK(s4.mul(e, s4.inv(e)) == FiniteGroup::identity());
  // Not associative: rejected.
  CHECK_THROWS(FiniteGroup({{0, 1, 2}, {1, 0, 0}, {2, 2, 1}}));
  CHECK_THROWS(FiniteGroup::from_permutations(3, {{0, 0, 1}}));
}

TEST_CASE("centralizers and centers") {
  const auto s4 = symmetric_group(4);
  const auto a4 = even_part(s4);
  CHECK(is_subgroup(s4, a4));
  CHECK(is_normal(s4, a4));
  CHECK(centralizer(s4, a4) == Subgroup{FiniteGroup::identity()});
  CHECK(center(alternating_group(4)).size() == 1);
  CHECK(center(cyclic_group(6)).size() == 6);
  CHECK(center(dihedral_group(4)).size() == 2);
  CHECK_THROWS(centralizer(s4, Subgroup{1}));
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(alternating_group(4)).size() == 24);
  CHECK(inner_automorphisms(alternating_group(4)).size() == 12);
  CHECK(automorphisms(cyclic_group(6)).size() == 2);
  CHECK(automorphisms(cyclic_group(8)).size() == 4);
  CHECK(automorphisms(klein_four_group()).size() == 6);
  CHECK(automorphisms(symmetric_group(3)).size() == 6);
  CHECK(automorphisms(dihedral_group(4)).size() == 8);
  for (const auto& entry : small_group_catalogue()) {
    const auto aut = automorphisms(entry.group);
    const auto inn = inner_automorphisms(entry.group);
    CHECK_MESSAGE(inn.size() * center(entry.group).size() == entry.group.order(), entry.name);
    for (const auto& h : aut) CHECK(is_homomorphism(entry.group, entry.group, h));
    for (const auto& i : inn) CHECK(std::binary_search(aut.begin(), aut.end(), i));
  }
  CHECK_THROWS_AS(automorphisms(symmetric_group(5)), SizeCapError);
}

TEST_CASE("normalizer lemma") {
  const auto s4 = symmetric_group(4);
  const auto rep = verify_normalizer_lemma(s4, even_part(s4));
  CHECK(rep.holds());
  CHECK(rep.out_gamma == 2);
  CHECK(rep.normalizer_order == 2);
  CHECK(rep.restricted_image_order == 2);

  const Subgroup v4 = generate_subgroup(s4, {s4.find_permutation({1, 0, 3, 2}), s4.find_permutation({2, 3, 0, 1})});
  CHECK(v4.size() == 4);
  try {
    verify_normalizer_lemma(s4, v4);
    FAIL("V4 accepted");
  } catch (const HypothesisError& e) {
    CHECK(std::string(e.what()).find("Z_Gamma(Gamma)") != std::string::npos);
  }

  // S3 over C3: both centralizer hypotheses fail, so the lemma's conclusion
  // is not guaranteed; restriction Aut_Gamma(Pi) -> Aut(Gamma) is not injective.
  const auto s3 = symmetric_group(3);
  const Subgroup c3 = generate_subgroup(s3, {s3.find_permutation({1, 2, 0})});
  try {
    verify_normalizer_lemma(s3, c3);
    FAIL("C3 accepted");
  } catch (const HypothesisError& e) {
    const std::string what = e.what();
    CHECK(what.find("Z_Pi(Gamma)") != std::string::npos);
    CHECK(what.find("Z_Gamma(Gamma)") != std::string::npos);
  }
  const auto sides = compare_normalizer_sides(s3, c3);
  CHECK(sides.normalizer_order == 2);
  CHECK(sides.restricted_image_order == 2);
  CHECK(sides.sides_equal);
  CHECK_FALSE(sides.restriction_injective);
}

TEST_CASE("induced group and regular representation") {
  const auto s4 = symmetric_group(4);
  const auto ind = induced_group(s4, even_part(s4));
  CHECK(ind.group.order() == 12);
  CHECK(center(ind.group).size() == 1);
  const auto reg = regular_representation(cyclic_group(5));
  CHECK(reg.size() == 5);
  CHECK(reg[0] == Perm{0, 1, 2, 3, 4});
}

TEST_CASE("JSON input") {
  const auto g = parse_permutation_group_json(R"({"points": 4, "generators": [[1,2,3,0],[1,0,2,3]]})");
  CHECK(g.order() == 24);
  CHECK_THROWS(parse_permutation_group_json(R"({"points": 3, "generators": [[0,0,1]]})"));
  CHECK_THROWS(parse_permutation_group_json(R"({"generators": []})"));
  CHECK_THROWS(parse_permutation_group_json("not json"));
}
