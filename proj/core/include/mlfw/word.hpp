#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mlfw {

enum class GenKind : std::uint8_t { sigma, tau, x, a, b, c };

/// A named free generator. `index` is meaningful for x (0-based) and a, b
/// (1-based); it is zero for sigma, tau and c.
struct Generator {
  GenKind kind = GenKind::x;
  int index = 0;

  static Generator sigma() { return {GenKind::sigma, 0}; }
  static Generator tau() { return {GenKind::tau, 0}; }
  static Generator x(int i) { return {GenKind::x, i}; }
  static Generator a(int i) { return {GenKind::a, i}; }
  static Generator b(int i) { return {GenKind::b, i}; }
  static Generator c() { return {GenKind::c, 0}; }

  std::string label() const;
  static Generator parse(std::string_view label);

  auto operator<=>(const Generator&) const = default;
};

/// Ordered generator set of a free group. Words and endomorphisms refer to
/// generators by their position in an alphabet.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Generator> gens);

  /// sigma, tau, x0 .. xd
  static std::shared_ptr<const Alphabet> mlf(int d);
  /// a1, b1, ..., ag, bg
  static std::shared_ptr<const Alphabet> surface(int g);

  std::size_t size() const { return gens_.size(); }
  const Generator& at(std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const { return gens_; }

  bool contains(Generator g) const;
  /// Throws std::out_of_range if `g` is not in the alphabet.
  std::size_t index_of(Generator g) const;

  bool operator==(const Alphabet& o) const { return gens_ == o.gens_; }

 private:
  std::vector<Generator> gens_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Maximal run g^e of a single generator inside a word.
struct Run {
  std::uint32_t gen = 0;  // position in the alphabet
  std::int64_t exp = 0;
  bool operator==(const Run&) const = default;
};

/// Freely reduced word in run-length form. Adjacent runs always carry distinct
/// generators and every exponent is nonzero; the empty run list is the
/// identity.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);
  /// Builds the free reduction of an arbitrary run sequence.
  Word(AlphabetPtr alphabet, std::vector<Run> runs);

  static Word generator(AlphabetPtr alphabet, Generator g, std::int64_t exp = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Run>& runs() const { return runs_; }
  bool is_identity() const { return runs_.empty(); }
  /// Letter length: sum of |exp| over runs.
  std::int64_t length() const;
  /// Exponent sum per alphabet position.
  std::vector<std::int64_t> exponent_sums() const;

  bool operator==(const Word& o) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Run> runs_;
};

/// Stack-based free reduction of a raw run list.
std::vector<Run> free_reduce(const std::vector<Run>& runs);
Word free_reduce(const Word& w);

/// Throws std::invalid_argument when the two words live over different
/// alphabets.
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word power(const Word& w, std::int64_t n);
Word commutator(const Word& u, const Word& v);
Word product(const AlphabetPtr& alphabet, const std::vector<Word>& factors);

bool same_alphabet(const Alphabet& a, const Alphabet& b);
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// Substitution endomorphism of a free group: one image word per generator.
/// Equality is extensional.
class Endomorphism {
 public:
  /// The identity endomorphism of `alphabet`.
  explicit Endomorphism(AlphabetPtr alphabet);
  Endomorphism(AlphabetPtr alphabet, std::vector<Word> images);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Word& image(std::size_t gen) const { return images_.at(gen); }
  const Word& image(Generator g) const;
  const std::vector<Word>& images() const { return images_; }

  /// Returns a copy with `g` sent to `w`.
  Endomorphism with_image(Generator g, Word w) const;

  bool fixes(Generator g) const;
  bool is_identity() const;

  bool operator==(const Endomorphism& o) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> images_;
};

Word apply_endo(const Endomorphism& e, const Word& w);
/// compose(e1, e2) acts as e1 after e2.
Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2);

// ---------------------------------------------------------------------------
// Text form.
//
//   word        := "1" | run { " " run }
//   run         := label [ "^" integer ]
//   label       := "sigma" | "tau" | "c" | ("x" | "a" | "b") digits
//
// Endomorphisms print one "label -> word" line per generator in alphabet
// order. When parsing, generators without a line are fixed.
// ---------------------------------------------------------------------------

std::string to_string(const Word& w);
Word parse_word(const AlphabetPtr& alphabet, std::string_view text);
std::string to_string(const Endomorphism& e);
Endomorphism parse_endomorphism(const AlphabetPtr& alphabet, std::string_view text);

// ---------------------------------------------------------------------------
// Surface group and the generator dictionary of the local-field presentation.
// ---------------------------------------------------------------------------

/// Free group on a1, b1, ..., ag, bg together with the boundary word
/// delta = [a1,b1] ... [ag,bg].
struct SurfacePresentation {
  int genus = 1;
  AlphabetPtr alphabet;
  Word delta;

  explicit SurfacePresentation(int g);
};

/// delta over the surface alphabet of genus g. Throws std::invalid_argument
/// for g < 1.
Word boundary_word(int g);

enum class Parity { even, odd };

/// Degree d, its parity, the genus g and the identification of the surface
/// generators with x-generators: a(i) -> x(2i+1), b(i) -> x(2i+2) for even d,
/// a(i) -> x(2i), b(i) -> x(2i+1) for odd d.
class PresentationSpec {
 public:
  explicit PresentationSpec(int d);

  int degree() const { return d_; }
  Parity parity() const { return d_ % 2 == 0 ? Parity::even : Parity::odd; }
  /// (d-2)/2 for even d, (d-1)/2 for odd d.
  int genus() const { return g_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  /// x-index of a(i) / b(i), 1 <= i <= g.
  int a_index(int i) const;
  int b_index(int i) const;
  Generator a(int i) const { return Generator::x(a_index(i)); }
  Generator b(int i) const { return Generator::x(b_index(i)); }

  /// x-indices fixed by every family member besides sigma and tau:
  /// {0, 1} for odd d, {0, 1, 2} for even d.
  std::vector<int> inert_x() const;

  /// Transports a surface word into the x-alphabet.
  Word to_mlf(const Word& surface_word) const;
  /// Restricts an endomorphism of the x-alphabet to the surface generators.
  /// Throws std::invalid_argument if an image leaves the surface generators.
  Endomorphism to_surface(const Endomorphism& e) const;

 private:
  int d_;
  int g_;
  AlphabetPtr alphabet_;
};

struct NamedEndomorphism {
  std::string name;  // "phi", "phi_1", "phi'_1", "phi''_1", ...
  Endomorphism map;
  Endomorphism inverse;
};

/// phi (even d only), phi_i and phi'_i for 1 <= i <= g, phi''_i for
/// 1 <= i <= g-1. For d = 2 the family is {phi}. Every member fixes all
/// generators not named in its defining equalities. Throws for d < 2.
std::vector<NamedEndomorphism> twist_family(const PresentationSpec& spec);

/// True iff e(delta) reduces to delta. `e` acts on the surface alphabet of
/// genus g.
bool fixes_delta(const Endomorphism& e, int g);
/// Same test for an endomorphism of the x-alphabet, transporting delta
/// through the spec's generator dictionary.
bool fixes_delta(const Endomorphism& e, const PresentationSpec& spec);

}  // namespace mlfw
