#include "mlfw/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace mlfw {

namespace {

std::string perm_label(const Perm& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Perm perm_mul(const Perm& a, const Perm& b) {
  // (a * b)(i) = a(b(i))
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const std::size_t n = table_.size();
  if (n == 0) throw std::invalid_argument("group needs at least one element");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("multiplication table is not square");
    for (Element e : row)
      if (e >= n) throw std::invalid_argument("multiplication table entry out of range");
  }
  for (Element a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) throw std::invalid_argument("element 0 is not the identity");
  }
  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n; ++b) {
      if (table_[a][b] == 0) {
        if (table_[b][a] != 0) throw std::invalid_argument("left and right inverses differ");
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("element without inverse");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element ab = table_[a][b];
      for (Element c = 0; c < n; ++c) {
        if (table_[ab][c] != table_[a][table_[b][c]]) throw std::invalid_argument("multiplication is not associative");
      }
    }
  if (labels_.empty()) {
    labels_.resize(n);
    for (Element a = 0; a < n; ++a) labels_[a] = "g" + std::to_string(a);
  } else if (labels_.size() != n) {
    throw std::invalid_argument("label count does not match group order");
  }
}

FiniteGroup FiniteGroup::from_permutations(std::size_t points, const std::vector<Perm>& gens, std::size_t max_order) {
  Perm id(points);
  std::iota(id.begin(), id.end(), 0U);
  for (const Perm& g : gens) {
    if (g.size() != points) throw std::invalid_argument("generator acts on the wrong number of points");
    auto sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != id) throw std::invalid_argument("generator is not a permutation");
  }
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm y = perm_mul(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > max_order) throw SizeCapError("permutation group exceeds the order cap");
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Perm> elems;
  elems.push_back(id);
  for (const Perm& p : seen)
    if (p != id) elems.push_back(p);
  std::map<Perm, Element> index;
  for (Element i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  const std::size_t n = elems.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a][b] = index.at(perm_mul(elems[a], elems[b]));
  std::vector<std::string> labels;
  for (const Perm& p : elems) labels.push_back(perm_label(p));
  FiniteGroup g(std::move(table), std::move(labels));
  g.perms_ = std::move(elems);
  return g;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

Element FiniteGroup::find_permutation(const Perm& p) const {
  if (!perms_) throw std::out_of_range("group was not built from permutations");
  auto it = std::find(perms_->begin(), perms_->end(), p);
  if (it == perms_->end()) throw std::out_of_range("permutation is not in the group");
  return static_cast<Element>(it - perms_->begin());
}

// ---------------------------------------------------------------------------

Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<Element> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.empty() || !std::is_sorted(s.begin(), s.end())) return false;
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  std::vector<bool> in(g.order(), false);
  for (Element x : s) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  if (!in[0]) return false;
  for (Element a : s)
    for (Element b : s)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  if (!is_subgroup(g, s)) return false;
  std::vector<bool> in(g.order(), false);
  for (Element x : s) in[x] = true;
  for (Element x = 0; x < g.order(); ++x)
    for (Element h : s)
      if (!in[g.mul(g.mul(x, h), g.inv(x))]) return false;
  return true;
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s(g.order());
  std::iota(s.begin(), s.end(), 0U);
  return s;
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  if (!is_subgroup(g, s)) throw std::invalid_argument("centralizer needs a subgroup");
  Subgroup out;
  for (Element x = 0; x < g.order(); ++x) {
    bool commutes = std::all_of(s.begin(), s.end(), [&](Element y) { return g.mul(x, y) == g.mul(y, x); });
    if (commutes) out.push_back(x);
  }
  return out;
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, whole_group(g)); }

InducedGroup induced_group(const FiniteGroup& g, const Subgroup& s) {
  if (!is_subgroup(g, s)) throw std::invalid_argument("not a subgroup");
  std::vector<Element> local(g.order(), 0);
  for (Element i = 0; i < s.size(); ++i) local[s[i]] = i;
  std::vector<std::vector<Element>> table(s.size(), std::vector<Element>(s.size()));
  std::vector<std::string> labels;
  for (Element i = 0; i < s.size(); ++i) {
    labels.push_back(g.label(s[i]));
    for (Element j = 0; j < s.size(); ++j) table[i][j] = local[g.mul(s[i], s[j])];
  }
  return {FiniteGroup(std::move(table), std::move(labels)), s};
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupHom& h) {
  if (h.images.size() != src.order()) return false;
  for (Element e : h.images)
    if (e >= dst.order()) return false;
  for (Element a = 0; a < src.order(); ++a)
    for (Element b = 0; b < src.order(); ++b)
      if (h.images[src.mul(a, b)] != dst.mul(h.images[a], h.images[b])) return false;
  return true;
}

GroupHom compose(const GroupHom& a, const GroupHom& b) {
  GroupHom r;
  r.images.reserve(b.images.size());
  for (Element x : b.images) r.images.push_back(a.images.at(x));
  return r;
}

GroupHom inverse(const GroupHom& a) {
  GroupHom r;
  r.images.assign(a.images.size(), 0);
  for (Element x = 0; x < a.images.size(); ++x) r.images.at(a.images[x]) = x;
  return r;
}

GroupHom conjugation(const FiniteGroup& g, Element x) {
  GroupHom r;
  r.images.resize(g.order());
  for (Element y = 0; y < g.order(); ++y) r.images[y] = g.mul(g.mul(x, y), g.inv(x));
  return r;
}

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0U);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Element> gens;
  Subgroup h{0};
  for (Element x : by_order) {
    if (h.size() == g.order()) break;
    if (std::binary_search(h.begin(), h.end(), x)) continue;
    gens.push_back(x);
    h = generate_subgroup(g, gens);
  }
  return gens;
}

namespace {

// Extends generator images along the right Cayley graph; empty on conflict.
std::optional<GroupHom> extend(const FiniteGroup& g, const std::vector<Element>& gens,
                               const std::vector<Element>& images) {
  constexpr Element kUnset = static_cast<Element>(-1);
  GroupHom h;
  h.images.assign(g.order(), kUnset);
  h.images[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element y = g.mul(x, gens[k]);
      Element fy = g.mul(h.images[x], images[k]);
      if (h.images[y] == kUnset) {
        h.images[y] = fy;
        queue.push_back(y);
      } else if (h.images[y] != fy) {
        return std::nullopt;
      }
    }
  }
  return h;
}

bool bijective(const GroupHom& h) {
  std::vector<bool> hit(h.images.size(), false);
  for (Element e : h.images) {
    if (hit[e]) return false;
    hit[e] = true;
  }
  return true;
}

}  // namespace

std::vector<GroupHom> automorphisms(const FiniteGroup& g, std::size_t max_order) {
  if (g.order() > max_order) {
    throw SizeCapError("group of order " + std::to_string(g.order()) + " exceeds the automorphism cap " +
                       std::to_string(max_order));
  }
  const auto gens = greedy_generators(g);
  std::vector<std::size_t> orders;
  for (Element s : gens) orders.push_back(g.element_order(s));
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Element x = 0; x < g.order(); ++x)
      if (g.element_order(x) == orders[k]) candidates[k].push_back(x);

  std::vector<GroupHom> out;
  std::vector<Element> images(gens.size());
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      if (auto h = extend(g, gens, images); h && bijective(*h)) out.push_back(std::move(*h));
      return;
    }
    for (Element x : candidates[k]) {
      images[k] = x;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupHom> inner_automorphisms(const FiniteGroup& g) {
  std::set<GroupHom> inner;
  for (Element x = 0; x < g.order(); ++x) inner.insert(conjugation(g, x));
  return {inner.begin(), inner.end()};
}

// ---------------------------------------------------------------------------
// Normalizer lemma
// ---------------------------------------------------------------------------

namespace {

// Out(Gamma) as cosets alpha Inn(Gamma), keyed by the smallest member.
class OuterGroup {
 public:
  OuterGroup(std::vector<GroupHom> aut, std::vector<GroupHom> inn) : aut_(std::move(aut)), inn_(std::move(inn)) {
    for (const auto& a : aut_) {
      GroupHom k = key(a);
      keys_.insert(k);
    }
  }
  GroupHom key(const GroupHom& a) const {
    GroupHom best = compose(a, inn_.front());
    for (const auto& i : inn_) best = std::min(best, compose(a, i));
    return best;
  }
  const std::set<GroupHom>& keys() const { return keys_; }

 private:
  std::vector<GroupHom> aut_;
  std::vector<GroupHom> inn_;
  std::set<GroupHom> keys_;
};

}  // namespace

NormalizerLemmaReport compare_normalizer_sides(const FiniteGroup& pi, const Subgroup& gamma, std::size_t max_order) {
  if (!is_normal(pi, gamma)) throw std::invalid_argument("Gamma must be a normal subgroup of Pi");
  NormalizerLemmaReport rep;
  rep.pi_order = pi.order();
  rep.gamma_order = gamma.size();
  rep.quotient_order = pi.order() / gamma.size();

  const InducedGroup sub = induced_group(pi, gamma);
  const FiniteGroup& gam = sub.group;
  std::vector<Element> local(pi.order(), static_cast<Element>(-1));
  for (Element i = 0; i < gamma.size(); ++i) local[gamma[i]] = i;

  auto aut_g = automorphisms(gam, max_order);
  auto inn_g = inner_automorphisms(gam);
  rep.aut_gamma = aut_g.size();
  rep.inn_gamma = inn_g.size();
  OuterGroup out(aut_g, inn_g);
  rep.out_gamma = out.keys().size();

  // Conjugation action of Pi on Gamma.
  auto restrict_conj = [&](Element x) {
    GroupHom h;
    h.images.resize(gamma.size());
    for (Element i = 0; i < gamma.size(); ++i) h.images[i] = local[pi.mul(pi.mul(x, gamma[i]), pi.inv(x))];
    return h;
  };
  std::set<GroupHom> image;
  for (Element x = 0; x < pi.order(); ++x) image.insert(out.key(restrict_conj(x)));
  rep.outer_image_order = image.size();
  rep.outer_action_injective = image.size() == rep.quotient_order;

  // Normalizer of the image inside Out(Gamma).
  std::size_t normalizer = 0;
  std::set<GroupHom> normalizer_keys;
  for (const GroupHom& o : out.keys()) {
    GroupHom o_inv = inverse(o);
    bool normalizes = std::all_of(image.begin(), image.end(), [&](const GroupHom& b) {
      return image.count(out.key(compose(compose(o, b), o_inv))) > 0;
    });
    if (normalizes) {
      ++normalizer;
      normalizer_keys.insert(o);
    }
  }
  rep.normalizer_order = normalizer;

  // Aut_Gamma(Pi), restricted to Gamma.
  auto aut_pi = automorphisms(pi, max_order);
  std::set<GroupHom> restrictions;
  std::set<GroupHom> restricted_keys;
  for (const GroupHom& phi : aut_pi) {
    bool preserves = std::all_of(gamma.begin(), gamma.end(),
                                 [&](Element x) { return local[phi.images[x]] != static_cast<Element>(-1); });
    if (!preserves) continue;
    ++rep.aut_gamma_pi;
    GroupHom r;
    r.images.resize(gamma.size());
    for (Element i = 0; i < gamma.size(); ++i) r.images[i] = local[phi.images[gamma[i]]];
    restrictions.insert(r);
    restricted_keys.insert(out.key(r));
  }
  rep.restriction_injective = restrictions.size() == rep.aut_gamma_pi;
  rep.restricted_image_order = restricted_keys.size();
  rep.sides_equal = normalizer_keys == restricted_keys;
  return rep;
}

NormalizerLemmaReport verify_normalizer_lemma(const FiniteGroup& pi, const Subgroup& gamma, std::size_t max_order) {
  if (!is_normal(pi, gamma)) throw std::invalid_argument("Gamma must be a normal subgroup of Pi");
  std::vector<std::string> failed;
  if (centralizer(pi, gamma).size() != 1) failed.emplace_back("Z_Pi(Gamma) is nontrivial");
  const InducedGroup sub = induced_group(pi, gamma);
  if (center(sub.group).size() != 1) failed.emplace_back("Z_Gamma(Gamma) is nontrivial");
  if (!failed.empty()) {
    std::string msg = "hypotheses violated:";
    for (const auto& f : failed) msg += " " + f + ";";
    msg.pop_back();
    throw HypothesisError(msg);
  }
  return compare_normalizer_sides(pi, gamma, max_order);
}

// ---------------------------------------------------------------------------
// Catalogue
// ---------------------------------------------------------------------------

namespace {

Perm cycle_perm(std::size_t n, std::size_t len) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0U);
  for (std::size_t i = 0; i < len; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % len);
  return p;
}

Perm transposition(std::size_t n, std::uint32_t a, std::uint32_t b) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0U);
  std::swap(p[a], p[b]);
  return p;
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be >= 1");
  if (n == 1) return FiniteGroup({{0}}, {"e"});
  return FiniteGroup::from_permutations(n, {cycle_perm(n, n)});
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  Perm reflect(n);
  for (std::size_t i = 0; i < n; ++i) reflect[i] = static_cast<std::uint32_t>((n - i) % n);
  return FiniteGroup::from_permutations(n, {cycle_perm(n, n), reflect});
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("symmetric group needs n >= 1");
  if (n == 1) return cyclic_group(1);
  if (n == 2) return FiniteGroup::from_permutations(2, {transposition(2, 0, 1)});
  return FiniteGroup::from_permutations(n, {cycle_perm(n, n), transposition(n, 0, 1)});
}

FiniteGroup alternating_group(std::size_t n) {
  if (n < 3) return cyclic_group(1);
  std::vector<Perm> gens;
  for (std::size_t k = 2; k < n; ++k) {
    // 3-cycles (0 1 k)
    Perm p(n);
    std::iota(p.begin(), p.end(), 0U);
    p[0] = 1;
    p[1] = static_cast<std::uint32_t>(k);
    p[k] = 0;
    gens.push_back(p);
  }
  return FiniteGroup::from_permutations(n, gens);
}

FiniteGroup klein_four_group() {
  return FiniteGroup::from_permutations(4, {Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1}});
}

std::vector<CatalogueEntry> small_group_catalogue() {
  std::vector<CatalogueEntry> out;
  for (std::size_t n = 1; n <= 12; ++n) out.push_back({"C" + std::to_string(n), cyclic_group(n)});
  out.push_back({"V4", klein_four_group()});
  out.push_back({"S3", symmetric_group(3)});
  out.push_back({"D4", dihedral_group(4)});
  out.push_back({"D5", dihedral_group(5)});
  out.push_back({"D6", dihedral_group(6)});
  out.push_back({"A4", alternating_group(4)});
  return out;
}

std::vector<Perm> regular_representation(const FiniteGroup& g) {
  std::vector<Perm> reps;
  for (Element x = 0; x < g.order(); ++x) {
    Perm p(g.order());
    for (Element h = 0; h < g.order(); ++h) p[h] = g.mul(x, h);
    reps.push_back(std::move(p));
  }
  return reps;
}

FiniteGroup parse_permutation_group_json(const std::string& text, std::size_t max_order) {
  auto j = nlohmann::json::parse(text);
  const auto points = j.at("points").get<std::size_t>();
  std::vector<Perm> gens;
  for (const auto& g : j.at("generators")) gens.push_back(g.get<Perm>());
  return FiniteGroup::from_permutations(points, gens, max_order);
}

}  // namespace mlfw
