#include "mlfw/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mlfw {

// ---------------------------------------------------------------------------
// Generators and alphabets
// ---------------------------------------------------------------------------

std::string Generator::label() const {
  switch (kind) {
    case GenKind::sigma: return "sigma";
    case GenKind::tau: return "tau";
    case GenKind::c: return "c";
    case GenKind::x: return "x" + std::to_string(index);
    case GenKind::a: return "a" + std::to_string(index);
    case GenKind::b: return "b" + std::to_string(index);
  }
  return "?";
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "' in " + std::string(what));
  }
  return value;
}

}  // namespace

Generator Generator::parse(std::string_view label) {
  if (label == "sigma") return sigma();
  if (label == "tau") return tau();
  if (label == "c") return c();
  if (label.size() >= 2 && (label[0] == 'x' || label[0] == 'a' || label[0] == 'b')) {
    for (char ch : label.substr(1)) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad generator label '" + std::string(label) + "'");
    }
    int i = parse_int(label.substr(1), "generator label");
    if (label[0] == 'x') return x(i);
    if (i < 1) throw std::invalid_argument("surface generator index must be >= 1: " + std::string(label));
    return label[0] == 'a' ? a(i) : b(i);
  }
  throw std::invalid_argument("bad generator label '" + std::string(label) + "'");
}

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  auto sorted = gens_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("alphabet contains a repeated generator");
  }
}

std::shared_ptr<const Alphabet> Alphabet::mlf(int d) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  std::vector<Generator> gens{Generator::sigma(), Generator::tau()};
  for (int i = 0; i <= d; ++i) gens.push_back(Generator::x(i));
  return std::make_shared<const Alphabet>(std::move(gens));
}

std::shared_ptr<const Alphabet> Alphabet::surface(int g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  std::vector<Generator> gens;
  for (int i = 1; i <= g; ++i) {
    gens.push_back(Generator::a(i));
    gens.push_back(Generator::b(i));
  }
  return std::make_shared<const Alphabet>(std::move(gens));
}

bool Alphabet::contains(Generator g) const {
  return std::find(gens_.begin(), gens_.end(), g) != gens_.end();
}

std::size_t Alphabet::index_of(Generator g) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  if (it == gens_.end()) throw std::out_of_range("generator " + g.label() + " not in alphabet");
  return static_cast<std::size_t>(it - gens_.begin());
}

bool same_alphabet(const Alphabet& a, const Alphabet& b) { return &a == &b || a == b; }

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a && b && same_alphabet(*a, *b);
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

std::vector<Run> free_reduce(const std::vector<Run>& runs) {
  std::vector<Run> out;
  out.reserve(runs.size());
  for (const Run& r : runs) {
    if (r.exp == 0) continue;
    if (!out.empty() && out.back().gen == r.gen) {
      out.back().exp += r.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(r);
    }
  }
  return out;
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
}

Word::Word(AlphabetPtr alphabet, std::vector<Run> runs) : Word(std::move(alphabet)) {
  for (const Run& r : runs) {
    if (r.gen >= alphabet_->size()) throw std::out_of_range("run refers to a generator outside the alphabet");
  }
  runs_ = free_reduce(runs);
}

Word Word::generator(AlphabetPtr alphabet, Generator g, std::int64_t exp) {
  auto idx = static_cast<std::uint32_t>(alphabet->index_of(g));
  return Word(std::move(alphabet), {Run{idx, exp}});
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const Run& r : runs_) n += r.exp < 0 ? -r.exp : r.exp;
  return n;
}

std::vector<std::int64_t> Word::exponent_sums() const {
  std::vector<std::int64_t> sums(alphabet_->size(), 0);
  for (const Run& r : runs_) sums[r.gen] += r.exp;
  return sums;
}

bool Word::operator==(const Word& o) const {
  return runs_ == o.runs_ && same_alphabet(*alphabet_, *o.alphabet_);
}

Word free_reduce(const Word& w) { return Word(w.alphabet(), w.runs()); }

namespace {

void require_same(const Word& u, const Word& v) {
  if (!same_alphabet(*u.alphabet(), *v.alphabet())) {
    throw std::invalid_argument("words over different generator sets");
  }
}

}  // namespace

Word multiply(const Word& u, const Word& v) {
  require_same(u, v);
  std::vector<Run> runs = u.runs();
  runs.insert(runs.end(), v.runs().begin(), v.runs().end());
  return Word(u.alphabet(), std::move(runs));
}

Word invert(const Word& w) {
  std::vector<Run> runs(w.runs().rbegin(), w.runs().rend());
  for (Run& r : runs) r.exp = -r.exp;
  return Word(w.alphabet(), std::move(runs));
}

Word power(const Word& w, std::int64_t n) {
  Word base = n < 0 ? invert(w) : w;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Word acc(w.alphabet());
  while (k > 0) {
    if (k & 1U) acc = multiply(acc, base);
    k >>= 1U;
    if (k > 0) base = multiply(base, base);
  }
  return acc;
}

Word commutator(const Word& u, const Word& v) {
  require_same(u, v);
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Word product(const AlphabetPtr& alphabet, const std::vector<Word>& factors) {
  Word acc(alphabet);
  for (const Word& f : factors) acc = multiply(acc, f);
  return acc;
}

// ---------------------------------------------------------------------------
// Endomorphisms
// ---------------------------------------------------------------------------

Endomorphism::Endomorphism(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("endomorphism needs an alphabet");
  images_.reserve(alphabet_->size());
  for (std::size_t i = 0; i < alphabet_->size(); ++i) {
    images_.emplace_back(alphabet_, std::vector<Run>{Run{static_cast<std::uint32_t>(i), 1}});
  }
}

Endomorphism::Endomorphism(AlphabetPtr alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (!alphabet_) throw std::invalid_argument("endomorphism needs an alphabet");
  if (images_.size() != alphabet_->size()) {
    throw std::invalid_argument("endomorphism must give one image per generator");
  }
  for (const Word& w : images_) {
    if (!same_alphabet(*w.alphabet(), *alphabet_)) {
      throw std::invalid_argument("endomorphism image over a foreign generator set");
    }
  }
}

const Word& Endomorphism::image(Generator g) const { return images_.at(alphabet_->index_of(g)); }

Endomorphism Endomorphism::with_image(Generator g, Word w) const {
  if (!same_alphabet(*w.alphabet(), *alphabet_)) {
    throw std::invalid_argument("endomorphism image over a foreign generator set");
  }
  auto images = images_;
  images.at(alphabet_->index_of(g)) = std::move(w);
  return Endomorphism(alphabet_, std::move(images));
}

bool Endomorphism::fixes(Generator g) const {
  auto i = static_cast<std::uint32_t>(alphabet_->index_of(g));
  const auto& runs = images_[i].runs();
  return runs.size() == 1 && runs[0] == Run{i, 1};
}

bool Endomorphism::is_identity() const {
  for (const Generator& g : alphabet_->generators()) {
    if (!fixes(g)) return false;
  }
  return true;
}

bool Endomorphism::operator==(const Endomorphism& o) const {
  return same_alphabet(*alphabet_, *o.alphabet_) && images_ == o.images_;
}

Word apply_endo(const Endomorphism& e, const Word& w) {
  if (!same_alphabet(*e.alphabet(), *w.alphabet())) {
    throw std::invalid_argument("word contains generators outside the endomorphism's domain");
  }
  std::vector<Run> runs;
  for (const Run& r : w.runs()) {
    Word piece = power(e.image(r.gen), r.exp);
    runs.insert(runs.end(), piece.runs().begin(), piece.runs().end());
  }
  return Word(e.alphabet(), std::move(runs));
}

Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2) {
  if (!same_alphabet(*e1.alphabet(), *e2.alphabet())) {
    throw std::invalid_argument("cannot compose endomorphisms of different free groups");
  }
  std::vector<Word> images;
  images.reserve(e2.images().size());
  for (const Word& w : e2.images()) images.push_back(apply_endo(e1, w));
  return Endomorphism(e1.alphabet(), std::move(images));
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const Run& r : w.runs()) {
    if (!out.empty()) out += ' ';
    out += w.alphabet()->at(r.gen).label();
    if (r.exp != 1) out += "^" + std::to_string(r.exp);
  }
  return out;
}

Word parse_word(const AlphabetPtr& alphabet, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Run> runs;
  std::string token;
  bool saw_identity = false;
  while (in >> token) {
    if (token == "1") {
      saw_identity = true;
      continue;
    }
    std::string_view tv = token;
    std::int64_t exp = 1;
    if (auto caret = tv.find('^'); caret != std::string_view::npos) {
      std::string_view es = tv.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), exp);
      if (es.empty() || ec != std::errc{} || ptr != es.data() + es.size()) {
        throw std::invalid_argument("bad exponent in '" + token + "'");
      }
      tv = tv.substr(0, caret);
    }
    Generator g = Generator::parse(tv);
    if (!alphabet->contains(g)) throw std::invalid_argument("generator " + g.label() + " not in alphabet");
    runs.push_back(Run{static_cast<std::uint32_t>(alphabet->index_of(g)), exp});
  }
  if (saw_identity && !runs.empty()) throw std::invalid_argument("'1' cannot be mixed with other letters");
  return Word(alphabet, std::move(runs));
}

std::string to_string(const Endomorphism& e) {
  std::string out;
  for (std::size_t i = 0; i < e.alphabet()->size(); ++i) {
    out += e.alphabet()->at(i).label() + " -> " + to_string(e.image(i)) + "\n";
  }
  return out;
}

Endomorphism parse_endomorphism(const AlphabetPtr& alphabet, std::string_view text) {
  Endomorphism e(alphabet);
  std::vector<bool> seen(alphabet->size(), false);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("expected 'gen -> word', got '" + line + "'");
    std::string lhs = line.substr(0, arrow);
    lhs.erase(0, lhs.find_first_not_of(" \t"));
    lhs.erase(lhs.find_last_not_of(" \t\r") + 1);
    Generator g = Generator::parse(lhs);
    if (!alphabet->contains(g)) throw std::invalid_argument("generator " + g.label() + " not in alphabet");
    auto idx = alphabet->index_of(g);
    if (seen[idx]) throw std::invalid_argument("generator " + g.label() + " assigned twice");
    seen[idx] = true;
    e = e.with_image(g, parse_word(alphabet, std::string_view(line).substr(arrow + 2)));
  }
  return e;
}

// ---------------------------------------------------------------------------
// Surface presentation and the twist family
// ---------------------------------------------------------------------------

Word boundary_word(int g) {
  if (g < 1) throw std::invalid_argument("boundary word needs genus >= 1");
  auto alpha = Alphabet::surface(g);
  Word delta(alpha);
  for (int i = 1; i <= g; ++i) {
    delta = multiply(delta, commutator(Word::generator(alpha, Generator::a(i)),
                                       Word::generator(alpha, Generator::b(i))));
  }
  return delta;
}

SurfacePresentation::SurfacePresentation(int g)
    : genus(g), alphabet(Alphabet::surface(g)), delta(alphabet) {
  Word w = boundary_word(g);
  delta = Word(alphabet, w.runs());
}

PresentationSpec::PresentationSpec(int d) : d_(d) {
  if (d < 2) throw std::invalid_argument("presentation degree must be >= 2");
  g_ = d % 2 == 0 ? (d - 2) / 2 : (d - 1) / 2;
  alphabet_ = Alphabet::mlf(d);
}

int PresentationSpec::a_index(int i) const {
  if (i < 1 || i > g_) throw std::out_of_range("surface index out of range");
  return parity() == Parity::even ? 2 * i + 1 : 2 * i;
}

int PresentationSpec::b_index(int i) const {
  if (i < 1 || i > g_) throw std::out_of_range("surface index out of range");
  return parity() == Parity::even ? 2 * i + 2 : 2 * i + 1;
}

std::vector<int> PresentationSpec::inert_x() const {
  if (parity() == Parity::even) return {0, 1, 2};
  return {0, 1};
}

Word PresentationSpec::to_mlf(const Word& surface_word) const {
  const auto& src = *surface_word.alphabet();
  std::vector<Run> runs;
  for (const Run& r : surface_word.runs()) {
    const Generator& g = src.at(r.gen);
    Generator target;
    if (g.kind == GenKind::a) {
      target = a(g.index);
    } else if (g.kind == GenKind::b) {
      target = b(g.index);
    } else {
      throw std::invalid_argument("only a/b generators have an x counterpart");
    }
    runs.push_back(Run{static_cast<std::uint32_t>(alphabet_->index_of(target)), r.exp});
  }
  return Word(alphabet_, std::move(runs));
}

Endomorphism PresentationSpec::to_surface(const Endomorphism& e) const {
  if (g_ < 1) throw std::invalid_argument("degree has no surface part");
  if (!same_alphabet(*e.alphabet(), *alphabet_)) throw std::invalid_argument("endomorphism not over this presentation");
  auto surf = Alphabet::surface(g_);
  // x-index -> surface generator
  std::vector<int> to_surf(static_cast<std::size_t>(d_) + 1, -1);
  for (int i = 1; i <= g_; ++i) {
    to_surf[static_cast<std::size_t>(a_index(i))] = static_cast<int>(surf->index_of(Generator::a(i)));
    to_surf[static_cast<std::size_t>(b_index(i))] = static_cast<int>(surf->index_of(Generator::b(i)));
  }
  std::vector<Word> images;
  for (const Generator& sg : surf->generators()) {
    Generator xg = sg.kind == GenKind::a ? a(sg.index) : b(sg.index);
    std::vector<Run> runs;
    for (const Run& r : e.image(xg).runs()) {
      const Generator& lg = alphabet_->at(r.gen);
      if (lg.kind != GenKind::x || to_surf[static_cast<std::size_t>(lg.index)] < 0) {
        throw std::invalid_argument("image of " + xg.label() + " leaves the surface generators");
      }
      runs.push_back(Run{static_cast<std::uint32_t>(to_surf[static_cast<std::size_t>(lg.index)]), r.exp});
    }
    images.emplace_back(surf, std::move(runs));
  }
  return Endomorphism(surf, std::move(images));
}

std::vector<NamedEndomorphism> twist_family(const PresentationSpec& spec) {
  const auto& alpha = spec.alphabet();
  auto gen = [&](Generator g, std::int64_t e = 1) { return Word::generator(alpha, g, e); };
  auto word = [&](std::initializer_list<Word> parts) { return product(alpha, std::vector<Word>(parts)); };
  const Endomorphism id(alpha);
  std::vector<NamedEndomorphism> family;

  if (spec.parity() == Parity::even) {
    auto x1 = Generator::x(1), x2 = Generator::x(2);
    family.push_back({"phi", id.with_image(x2, word({gen(x2), gen(x1)})),
                      id.with_image(x2, word({gen(x2), gen(x1, -1)}))});
  }

  const int g = spec.genus();
  for (int i = 1; i <= g; ++i) {
    auto a = spec.a(i), b = spec.b(i);
    family.push_back({"phi_" + std::to_string(i), id.with_image(b, word({gen(b), gen(a)})),
                      id.with_image(b, word({gen(b), gen(a, -1)}))});
  }
  for (int i = 1; i <= g; ++i) {
    auto a = spec.a(i), b = spec.b(i);
    family.push_back({"phi'_" + std::to_string(i), id.with_image(a, word({gen(a), gen(b, -1)})),
                      id.with_image(a, word({gen(a), gen(b)}))});
  }
  for (int i = 1; i + 1 <= g; ++i) {
    auto ai = spec.a(i), bi = spec.b(i), an = spec.a(i + 1), bn = spec.b(i + 1);
    // loop = b_i^-1 a_{i+1} b_{i+1} a_{i+1}^-1 is fixed by the twist; the
    // twist is a_i -> a_i loop, b_i -> loop^-1 b_i loop, a_{i+1} -> loop^-1 a_{i+1}
    // and its inverse swaps loop and loop^-1.
    Word loop = word({gen(bi, -1), gen(an), gen(bn), gen(an, -1)});
    Word loop_inv = invert(loop);
    Endomorphism fwd = id.with_image(ai, word({gen(ai), gen(bi, -1), gen(an), gen(bn), gen(an, -1)}))
                           .with_image(bi, word({gen(an), gen(bn, -1), gen(an, -1), gen(bi), gen(an),
                                                 gen(bn), gen(an, -1)}))
                           .with_image(an, word({gen(an), gen(bn, -1), gen(an, -1), gen(bi), gen(an)}));
    Endomorphism inv = id.with_image(ai, multiply(gen(ai), loop_inv))
                           .with_image(bi, word({loop, gen(bi), loop_inv}))
                           .with_image(an, multiply(loop, gen(an)));
    family.push_back({"phi''_" + std::to_string(i), std::move(fwd), std::move(inv)});
  }
  return family;
}

bool fixes_delta(const Endomorphism& e, int g) {
  auto surf = Alphabet::surface(g);
  if (!same_alphabet(*e.alphabet(), *surf)) throw std::invalid_argument("endomorphism is not on the surface generators");
  Word delta(e.alphabet(), boundary_word(g).runs());
  return apply_endo(e, delta) == delta;
}

bool fixes_delta(const Endomorphism& e, const PresentationSpec& spec) {
  Word delta = spec.to_mlf(boundary_word(spec.genus()));
  return apply_endo(e, delta) == delta;
}

}  // namespace mlfw
