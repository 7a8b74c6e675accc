#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlfw {

using Element = std::uint32_t;
/// Permutation of {0, ..., n-1} as its image list.
using Perm = std::vector<std::uint32_t>;

/// Group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  /// Validates the group axioms (closure, identity at 0, inverses,
  /// associativity); throws std::invalid_argument otherwise.
  explicit FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> labels = {});

  /// Closure of `gens` acting on `points` points. The identity permutation
  /// becomes element 0; the others follow in lexicographic order.
  static FiniteGroup from_permutations(std::size_t points, const std::vector<Perm>& gens,
                                       std::size_t max_order = 100'000);

  std::size_t order() const { return table_.size(); }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverse_[a]; }
  static constexpr Element identity() { return 0; }
  std::size_t element_order(Element a) const;
  const std::string& label(Element a) const { return labels_[a]; }

  /// Present when the group was built from permutations.
  const std::optional<std::vector<Perm>>& permutations() const { return perms_; }
  /// Element with the given permutation; throws std::out_of_range.
  Element find_permutation(const Perm& p) const;

 private:
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::optional<std::vector<Perm>> perms_;
};

/// Sorted list of element indices.
using Subgroup = std::vector<Element>;

Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<Element>& gens);
bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
Subgroup whole_group(const FiniteGroup& g);
/// {x : xs = sx for all s in S}; throws std::invalid_argument if S is not a
/// subgroup.
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);
Subgroup center(const FiniteGroup& g);

/// The subgroup as a group in its own right; `embedding[i]` is the element
/// of `g` that element i of the result stands for.
struct InducedGroup {
  FiniteGroup group;
  std::vector<Element> embedding;
};
InducedGroup induced_group(const FiniteGroup& g, const Subgroup& s);

/// Element map between two groups (source and target given by context).
struct GroupHom {
  std::vector<Element> images;
  auto operator<=>(const GroupHom&) const = default;
};

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupHom& h);
/// a after b.
GroupHom compose(const GroupHom& a, const GroupHom& b);
GroupHom inverse(const GroupHom& a);
GroupHom conjugation(const FiniteGroup& g, Element x);  // y -> x y x^-1

/// Greedy generating set: repeatedly adds the highest-order element outside
/// the subgroup generated so far.
std::vector<Element> greedy_generators(const FiniteGroup& g);

class SizeCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// All automorphisms by backtracking over generator images (pruned by element
/// order), sorted, identity first. Throws SizeCapError above `max_order`.
std::vector<GroupHom> automorphisms(const FiniteGroup& g, std::size_t max_order = 60);
/// Distinct conjugation maps, sorted.
std::vector<GroupHom> inner_automorphisms(const FiniteGroup& g);

class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Both sides of N_Out(Gamma)(Pi/Gamma) = Aut_Gamma(Pi)/Inn(Gamma), computed
/// inside Out(Gamma), together with the two injectivity statements that
/// precede the equality.
struct NormalizerLemmaReport {
  std::size_t pi_order = 0;
  std::size_t gamma_order = 0;
  std::size_t aut_gamma = 0;
  std::size_t inn_gamma = 0;
  std::size_t out_gamma = 0;
  std::size_t quotient_order = 0;        // |Pi / Gamma|
  std::size_t aut_gamma_pi = 0;          // |Aut_Gamma(Pi)|
  bool restriction_injective = false;    // Aut_Gamma(Pi) -> Aut(Gamma)
  bool outer_action_injective = false;   // Pi/Gamma -> Out(Gamma)
  std::size_t outer_image_order = 0;     // image of Pi/Gamma in Out(Gamma)
  std::size_t normalizer_order = 0;      // N_Out(Gamma)(image)
  std::size_t restricted_image_order = 0;  // Aut_Gamma(Pi) / Inn(Gamma)
  bool sides_equal = false;

  bool holds() const { return restriction_injective && outer_action_injective && sides_equal; }
};

/// Checks the finite stand-ins for slimness (Z_Pi(Gamma) = 1 and
/// Z_Gamma(Gamma) = 1) and throws HypothesisError naming each failed
/// condition; then computes the report.
NormalizerLemmaReport verify_normalizer_lemma(const FiniteGroup& pi, const Subgroup& gamma,
                                              std::size_t max_order = 60);
/// The same computation without the hypothesis check. Gamma must be normal.
NormalizerLemmaReport compare_normalizer_sides(const FiniteGroup& pi, const Subgroup& gamma,
                                               std::size_t max_order = 60);

// Catalogue ------------------------------------------------------------------

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);  // order 2n, acting on an n-gon
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
FiniteGroup klein_four_group();

struct CatalogueEntry {
  std::string name;
  FiniteGroup group;
};
/// C1..C12, V4, S3, D4, D5, D6, A4.
std::vector<CatalogueEntry> small_group_catalogue();

/// Permutation matrices of the left regular representation (e_h -> e_{gh}),
/// one permutation per group element, in element order.
std::vector<Perm> regular_representation(const FiniteGroup& g);

/// {"points": n, "generators": [[...], ...]} with 0-based images.
FiniteGroup parse_permutation_group_json(const std::string& text, std::size_t max_order = 100'000);

}  // namespace mlfw
