#include "mlfw/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "json.hpp"
#include "mlfw/finite_group.hpp"
#include "mlfw/lie.hpp"
#include "mlfw/lubin_tate.hpp"
#include "mlfw/padic.hpp"
#include "mlfw/properties.hpp"
#include "mlfw/symplectic.hpp"
#include "mlfw/trace_kernel.hpp"
#include "mlfw/word.hpp"

#ifndef MLFW_VERSION
#define MLFW_VERSION "0.0.0"
#endif

namespace mlfw {

using json = nlohmann::ordered_json;

std::string tool_version() { return MLFW_VERSION; }

Range parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw UsageError("bad range '" + text + "'");
    }
    if (used != s.size()) throw UsageError("bad range '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  return r;
}

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError("bad list entry '" + item + "' in '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"words",   "symplectic", "sp-quotient",  "trace-kernel",
                                              "padic",   "lubin-tate", "finite-groups"};
  return names;
}

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

bool selected(const RunConfig& c, const std::string& name) { return c.suite == "all" || c.suite == name; }

Range sp_quotient_genus(const RunConfig& c) { return c.g.value_or(Range{1, 1}); }
Range symplectic_genus(const RunConfig& c) { return c.g.value_or(Range{1, 4}); }
Range lie_genus(const RunConfig& c) { return c.g.value_or(Range{1, 2}); }
int padic_precision(const RunConfig& c) { return c.precision.value_or(16); }
int lt_precision(const RunConfig& c) { return c.precision.value_or(8); }

}  // namespace

void validate(const RunConfig& c) {
  const auto& names = suite_names();
  if (c.suite != "all" && std::find(names.begin(), names.end(), c.suite) == names.end()) {
    throw UsageError("unknown suite '" + c.suite + "'");
  }
  const int d_cap = c.allow_large ? 64 : 16;
  if (c.d.lo < 2 || c.d.hi > d_cap) {
    throw UsageError("--d must lie in 2.." + std::to_string(d_cap) + (c.allow_large ? "" : " (use --allow-large)"));
  }
  if (c.g && (c.g->lo < 1 || c.g->hi > (c.allow_large ? 16 : 8))) {
    throw UsageError("--g must lie in 1..8 (use --allow-large beyond)");
  }
  for (auto p : c.primes)
    if (!is_odd_prime(p)) throw UsageError("--p entries must be odd primes; got " + std::to_string(p));
  const int n = c.precision.value_or(16);
  if (n < 2 || n > 200) throw UsageError("--precision must lie in 2..200");
  if (c.degree < 2 || c.degree > 24) throw UsageError("--degree must lie in 2..24");
  for (int f : c.residue_degrees)
    if (f < 1 || f > 4) throw UsageError("--f entries must lie in 1..4");
  if (c.samples < 1 || c.samples > 100000) throw UsageError("--samples must lie in 1..100000");
  for (auto m : c.moduli) {
    try {
      factor_prime_power(m);
    } catch (const std::invalid_argument&) {
      throw UsageError("--mod entries must be prime powers; got " + std::to_string(m));
    }
  }
  if (selected(c, "sp-quotient") && !c.allow_large) {
    const Range g = sp_quotient_genus(c);
    if (g.hi > 2) throw UsageError("sp-quotient with --g above 2 exceeds the default cap; pass --allow-large");
    for (auto m : c.moduli)
      if (m > 4) throw UsageError("sp-quotient with --mod above 4 exceeds the default cap; pass --allow-large");
  }
  if (selected(c, "lubin-tate")) {
    for (auto p : c.primes) {
      long double bound = 1;
      for (int i = 0; i < lt_precision(c) + c.degree; ++i) bound *= p;
      if (bound >= 4.0e18L) {
        throw UsageError("lubin-tate needs p^(precision + degree) < 2^62; lower --precision or --degree");
      }
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

json vec_json(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json basis_json(const std::vector<RatVector>& b) {
  json a = json::array();
  for (const auto& v : b) a.push_back(vec_json(v));
  return a;
}

class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckRecord>& out) : suite_(std::move(suite)), out_(out) {}

  // body returns the observed value and the verdict.
  void check(const std::string& name, const json& inputs, const json& expected,
             const std::function<std::pair<json, bool>()>& body) {
    CheckRecord rec;
    rec.suite = suite_;
    rec.name = name;
    rec.inputs = inputs.dump();
    rec.expected = expected.dump();
    const auto start = std::chrono::steady_clock::now();
    try {
      auto [observed, pass] = body();
      rec.observed = observed.dump();
      rec.pass = pass;
    } catch (const std::exception& e) {
      rec.observed = json{{"error", e.what()}}.dump();
      rec.pass = false;
    }
    rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out_.push_back(std::move(rec));
  }

 private:
  std::string suite_;
  std::vector<CheckRecord>& out_;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) { return seed * 0x9E3779B97F4A7C15ULL + salt; }

// words ---------------------------------------------------------------------

void suite_words(const RunConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("words", out);
  for (int d = c.d.lo; d <= c.d.hi; ++d) {
    const PresentationSpec spec(d);
    const int g = spec.genus();
    const int members = (d % 2 == 0 ? 1 : 0) + 2 * g + std::max(0, g - 1);
    r.check("d=" + std::to_string(d), {{"d", d}},
            {{"members", members}, {"fix_delta", true}, {"inverses", true}}, [&] {
              const auto fam = twist_family(spec);
              bool fix = true, inv = true;
              json names = json::array();
              for (const auto& m : fam) {
                names.push_back(m.name);
                if (g >= 1) fix = fix && fixes_delta(m.map, spec);
                inv = inv && compose(m.map, m.inverse).is_identity() && compose(m.inverse, m.map).is_identity();
              }
              json obs{{"members", fam.size()}, {"fix_delta", fix}, {"inverses", inv}, {"names", names}};
              return std::pair{obs, static_cast<int>(fam.size()) == members && fix && inv};
            });
  }
}

// symplectic ----------------------------------------------------------------

void suite_symplectic(const RunConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("symplectic", out);
  const Range gr = symplectic_genus(c);
  for (int g = gr.lo; g <= gr.hi; ++g) {
    r.check("g=" + std::to_string(g), {{"g", g}}, {{"symplectic", true}}, [&] {
      const auto mats = surface_twist_matrices(g);
      const SymplecticForm form(g);
      bool ok = true;
      for (const auto& m : mats) ok = ok && is_symplectic(m, form);
      return std::pair{json{{"symplectic", ok}, {"matrices", mats.size()}}, ok};
    });
  }
}

void suite_sp_quotient(const RunConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("sp-quotient", out);
  const Range gr = sp_quotient_genus(c);
  for (int g = gr.lo; g <= gr.hi; ++g)
    for (auto m : c.moduli) {
      const std::string expected = sp_order(g, m).get_str();
      r.check("g=" + std::to_string(g) + " mod=" + std::to_string(m), {{"g", g}, {"mod", m}}, {{"order", expected}},
              [&] {
                const auto closure = generate_quotient(surface_twist_matrices(g), m);
                const std::string got = std::to_string(closure.size());
                return std::pair{json{{"order", got}}, got == expected};
              });
    }
}

// trace-kernel --------------------------------------------------------------

void suite_trace_kernel(const RunConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("trace-kernel", out);
  for (int d = c.d.lo; d <= c.d.hi; ++d) {
    const Subspace predicted = predicted_kernel(d);
    json inputs{{"d", d}, {"samples", c.samples}, {"seed", c.seed}};
    json expected{{"hyperplanes", 1}, {"kernel", basis_json(predicted.basis())}};
    r.check("d=" + std::to_string(d), inputs, expected, [&] {
      std::mt19937_64 rng(mix(c.seed, static_cast<std::uint64_t>(d)));
      const TwistFamily fam(d);
      const auto n = static_cast<std::size_t>(d);

      // Cross-module oracle: closed forms against abelianized words.
      bool cross = true;
      const auto words = twist_family(fam.presentation());
      cross = cross && words.size() == fam.matrices().size();
      for (std::size_t k = 0; cross && k < words.size(); ++k) {
        cross = words[k].name == fam.matrices()[k].name &&
                abelianize_on_y(fam.presentation(), words[k].map) == fam.matrices()[k].matrix;
      }
      json names = json::array();
      for (const auto& nm : fam.matrices()) names.push_back(nm.name);

      const auto covectors = fixed_covectors(fam);
      const auto planes = invariant_hyperplanes(fam);
      json plane_json = json::array();
      for (const auto& h : planes) plane_json.push_back(basis_json(h.basis()));
      const bool unique = planes.size() == 1 && planes.front() == predicted;
      bool invariant = true;
      for (const auto& nm : fam.matrices()) invariant = invariant && predicted.invariant_under(nm.matrix);

      bool claims_ok = true;
      json claims = json::array();
      for (const auto& chk : verify_claims(d, c.samples, rng)) {
        claims.push_back({{"claim", std::string(1, chk.claim)},
                          {"i", chk.index},
                          {"identities", chk.identities_hold},
                          {"span", chk.span_holds}});
        claims_ok = claims_ok && chk.passed();
      }

      bool orbit_full = true;
      for (std::size_t s = 0; s < c.samples; ++s) {
        RatVector v = random_rational_vector(rng, n);
        if (predicted.contains(v)) continue;
        orbit_full = orbit_full && orbit_span(fam, v).dimension() == n;
      }

      bool phi_moves = true;
      std::size_t phi_cases = 0;
      if (d % 2 == 0) {
        for (std::size_t s = 0; s < c.samples; ++s) {
          RatVector v = random_rational_vector(rng, n);
          if (v[1] == 0) v[1] = 1;
          for (long k = -5; k <= 5; ++k) {
            if (k == 0) continue;
            phi_moves = phi_moves && phi_power_moves_line(d, k, v);
            ++phi_cases;
          }
        }
      }

      json obs{{"family", names},
               {"word_cross_check", cross},
               {"fixed_covector_dimension", covectors.size()},
               {"fixed_covectors", basis_json(covectors)},
               {"hyperplanes", plane_json},
               {"predicted_invariant", invariant},
               {"claims", claims},
               {"orbit_span_full", orbit_full},
               {"phi_power_cases", phi_cases},
               {"phi_power_moves_line", phi_moves}};
      return std::pair{obs, cross && unique && invariant && claims_ok && orbit_full && phi_moves};
    });
  }
}

// padic ---------------------------------------------------------------------

void suite_padic(const RunConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("padic", out);
  const int N = padic_precision(c);
  json primes = c.primes;

  r.check("precision-soundness", {{"primes", primes}, {"precision", N}, {"cases", 1000}, {"seed", c.seed}},
          {{"failures", 0}}, [&] {
            auto t = padic_soundness_cases(c.primes, N, 1000, mix(c.seed, 1));
            return std::pair{json{{"cases", t.cases}, {"failures", t.failures}, {"first_failure", t.first_failure}},
                             t.failures == 0};
          });
  r.check("log-exp", {{"primes", primes}, {"precision", N}, {"cases", 1000}, {"seed", c.seed}}, {{"failures", 0}},
          [&] {
            auto t = padic_log_exp_cases(c.primes, N, 1000, mix(c.seed, 2));
            return std::pair{json{{"cases", t.cases}, {"failures", t.failures}, {"first_failure", t.first_failure}},
                             t.failures == 0};
          });
  r.check("log-examples", {{"p", 5}, {"precision", 12}}, {{"log1_exact_zero", true}, {"powers", true}, {"exp_log", true}},
          [&] {
            const std::uint32_t p = 5;
            const bool zero = padic_log(PadicScalar::exact(p, 1)).is_exact_zero();
            const auto u = PadicScalar::from_integer(p, 1 + p, 12);
            const auto lu = padic_log(u);
            bool powers = true;
            for (long k : {2L, 3L, 5L}) {
              PadicScalar uk = u;
              for (long i = 1; i < k; ++i) uk = uk * u;
              powers = powers && padic_log(uk).agrees_with(PadicScalar::exact(p, k) * lu);
            }
            const auto back = padic_exp(lu);
            const bool exp_log = back.agrees_with(u) && back.absolute_precision() >= 11;
            return std::pair{json{{"log1_exact_zero", zero}, {"powers", powers}, {"exp_log", exp_log}},
                             zero && powers && exp_log};
          });
  r.check("matrix-log", {{"p", 5}, {"precision", 10}, {"cases", 50}, {"seed", c.seed}},
          {{"log_identity_zero", true}, {"nilpotent_exact", true}, {"round_trips", true}}, [&] {
            auto t = padic_matrix_cases(5, 10, 50, mix(c.seed, 3));
            return std::pair{json{{"log_identity_zero", t.log_identity_zero},
                                  {"nilpotent_exact", t.nilpotent_exact},
                                  {"round_trips", t.round_trip_failures == 0}},
                             t.log_identity_zero && t.nilpotent_exact && t.round_trip_failures == 0};
          });

  const Range gr = lie_genus(c);
  for (int g = gr.lo; g <= gr.hi; ++g)
    for (auto p : c.primes) {
      const int expected = 2 * g * g + g;
      r.check("lie-dimension g=" + std::to_string(g) + " p=" + std::to_string(p),
              {{"g", g}, {"p", p}, {"precision", N}}, {{"dimension", expected}, {"closure_certified", true}}, [&] {
                auto res = lie_dimension_lower_bound(surface_twist_matrices(g), p, N);
                return std::pair{json{{"dimension", res.dimension},
                                      {"closure_certified", res.closure_certified},
                                      {"powers", res.powers},
                                      {"sweeps", res.sweeps}},
                                 static_cast<int>(res.dimension) == expected && res.closure_certified};
              });
    }
  r.check("lie-dimension single transvection", {{"p", c.primes.front()}, {"precision", N}}, {{"dimension", 1}}, [&] {
    const long p = c.primes.front();
    auto res = lie_dimension_lower_bound({int_matrix(2, 2, {1, p, 0, 1})}, c.primes.front(), N);
    return std::pair{json{{"dimension", res.dimension}}, res.dimension == 1};
  });
  for (int g = 1; g <= std::max(4, gr.hi); ++g) {
    const int expected = 2 * g * g + g;
    r.check("sp-dimension g=" + std::to_string(g), {{"g", g}}, {{"dimension", expected}}, [&] {
      const auto dim = sp_lie_dimension(g);
      return std::pair{json{{"dimension", dim}}, static_cast<int>(dim) == expected};
    });
  }
  r.check("sp-bracket", {{"n", 1}}, {{"nontrivial", true}, {"bracket", "E11 - E22"}}, [&] {
    const auto w = sp_bracket_witness(1);
    RatMatrix h(2, 2);
    h(0, 0) = 1;
    h(1, 1) = -1;
    const bool ok = !w.bracket.is_zero() && w.bracket == h;
    return std::pair{json{{"nontrivial", !w.bracket.is_zero()}, {"bracket", ok ? "E11 - E22" : "other"}}, ok};
  });
  for (const auto& entry : small_group_catalogue()) {
    r.check("commutant " + entry.name, {{"group", entry.name}}, {{"dimension", entry.group.order()}}, [&] {
      const auto dim = commutant_dimension(GroupAlgebraSpec(entry.group));
      return std::pair{json{{"dimension", dim}}, dim == entry.group.order()};
    });
  }
  for (int g = 1; g <= 4; ++g) {
    r.check("dimension-comparison g=" + std::to_string(g), {{"g", g}},
            {{"sp_dimension", 2 * g * g + g}, {"bound", 2 * g + 1}, {"exceeds", g >= 2}, {"flagged", g == 1}}, [&] {
              const auto cmp = compare_dimensions(g);
              const bool ok = static_cast<int>(cmp.sp_dimension) == 2 * g * g + g &&
                              static_cast<int>(cmp.bound) == 2 * g + 1 && cmp.exceeds == (g >= 2) &&
                              cmp.flagged == (g == 1);
              return std::pair{json{{"sp_dimension", cmp.sp_dimension},
                                    {"bound", cmp.bound},
                                    {"exceeds", cmp.exceeds},
                                    {"flagged", cmp.flagged}},
                               ok};
            });
  }
}

// lubin-tate ----------------------------------------------------------------

void suite_lubin_tate(const RunConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("lubin-tate", out);
  const int N = lt_precision(c);
  for (auto p : c.primes)
    for (int f : c.residue_degrees) {
      r.check("p=" + std::to_string(p) + " f=" + std::to_string(f),
              {{"p", p}, {"f", f}, {"pi", "p"}, {"degree", c.degree}, {"precision", N}}, {{"all_checks", true}}, [&] {
                const CoefficientRing ring(p, f, N);
                const auto law = lubin_tate_law(ring, ring.from_integer(p), ring.residue_field_size(), c.degree);
                json checks = json::object();
                bool ok = true;
                for (const auto& chk : check_law(law)) {
                  checks[chk.name] = chk.passed;
                  ok = ok && chk.passed;
                }
                json obs{{"all_checks", ok},
                         {"checks", checks},
                         {"law", json::parse(law.law.reduced_to(law.ring).to_json())}};
                return std::pair{obs, ok};
              });
    }
}

// finite-groups -------------------------------------------------------------

Subgroup even_permutations(const FiniteGroup& g) {
  Subgroup out;
  const auto& perms = *g.permutations();
  for (Element e = 0; e < g.order(); ++e) {
    const Perm& p = perms[e];
    std::vector<bool> seen(p.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    if (transpositions % 2 == 0) out.push_back(e);
  }
  return out;
}

json lemma_json(const NormalizerLemmaReport& rep) {
  return {{"restriction_injective", rep.restriction_injective},
          {"outer_action_injective", rep.outer_action_injective},
          {"aut_gamma", rep.aut_gamma},
          {"inn_gamma", rep.inn_gamma},
          {"out_gamma", rep.out_gamma},
          {"normalizer_order", rep.normalizer_order},
          {"restricted_image_order", rep.restricted_image_order},
          {"sides_equal", rep.sides_equal}};
}

void suite_finite_groups(const RunConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("finite-groups", out);
  for (const auto& entry : small_group_catalogue()) {
    const auto z = center(entry.group).size();
    r.check("automorphisms " + entry.name, {{"group", entry.name}},
            {{"inn", entry.group.order() / z}, {"inner_within_aut", true}}, [&] {
              const auto aut = automorphisms(entry.group);
              const auto inn = inner_automorphisms(entry.group);
              bool within = true;
              for (const auto& i : inn) within = within && std::binary_search(aut.begin(), aut.end(), i);
              return std::pair{json{{"aut", aut.size()}, {"inn", inn.size()}, {"inner_within_aut", within}},
                               inn.size() == entry.group.order() / z && within};
            });
  }
  r.check("aut(A4)", {{"group", "A4"}}, {{"aut", 24}, {"inn", 12}}, [&] {
    const auto g = alternating_group(4);
    const auto a = automorphisms(g).size(), i = inner_automorphisms(g).size();
    return std::pair{json{{"aut", a}, {"inn", i}}, a == 24 && i == 12};
  });
  r.check("aut(C6)", {{"group", "C6"}}, {{"aut", 2}}, [&] {
    const auto a = automorphisms(cyclic_group(6)).size();
    return std::pair{json{{"aut", a}}, a == 2};
  });

  const FiniteGroup s4 = symmetric_group(4);
  const FiniteGroup s3 = symmetric_group(3);
  r.check("normalizer-lemma (S4,A4)", {{"pi", "S4"}, {"gamma", "A4"}},
          {{"holds", true}, {"normalizer_order", 2}, {"restricted_image_order", 2}}, [&] {
            const auto rep = verify_normalizer_lemma(s4, even_permutations(s4));
            json obs = lemma_json(rep);
            obs["holds"] = rep.holds();
            return std::pair{obs, rep.holds() && rep.normalizer_order == 2 && rep.restricted_image_order == 2};
          });
  r.check("normalizer-lemma (S3,C3)", {{"pi", "S3"}, {"gamma", "C3"}},
          {{"holds", true}, {"normalizer_order", 2}, {"restricted_image_order", 2}}, [&] {
            const Subgroup c3 = generate_subgroup(s3, {s3.find_permutation({1, 2, 0})});
            json obs;
            bool ok = false;
            try {
              const auto rep = verify_normalizer_lemma(s3, c3);
              obs = lemma_json(rep);
              obs["holds"] = rep.holds();
              ok = rep.holds() && rep.normalizer_order == 2 && rep.restricted_image_order == 2;
            } catch (const HypothesisError& e) {
              const auto sides = compare_normalizer_sides(s3, c3);
              obs = {{"error", e.what()}, {"unchecked_sides", lemma_json(sides)}};
            }
            return std::pair{obs, ok};
          });
  r.check("normalizer-lemma (S4,V4)", {{"pi", "S4"}, {"gamma", "V4"}}, {{"rejected", true}}, [&] {
    const Subgroup v4 = generate_subgroup(s4, {s4.find_permutation({1, 0, 3, 2}), s4.find_permutation({2, 3, 0, 1})});
    try {
      verify_normalizer_lemma(s4, v4);
      return std::pair{json{{"rejected", false}}, false};
    } catch (const HypothesisError& e) {
      return std::pair{json{{"rejected", true}, {"diagnostic", e.what()}}, true};
    }
  });
  if (c.allow_large) {
    const FiniteGroup s5 = symmetric_group(5);
    r.check("normalizer-lemma (S5,A5)", {{"pi", "S5"}, {"gamma", "A5"}}, {{"holds", true}}, [&] {
      const auto rep = verify_normalizer_lemma(s5, even_permutations(s5), 120);
      json obs = lemma_json(rep);
      obs["holds"] = rep.holds();
      return std::pair{obs, rep.holds()};
    });
  }
}

using SuiteFn = void (*)(const RunConfig&, std::vector<CheckRecord>&);

SuiteFn suite_fn(const std::string& name) {
  if (name == "words") return suite_words;
  if (name == "symplectic") return suite_symplectic;
  if (name == "sp-quotient") return suite_sp_quotient;
  if (name == "trace-kernel") return suite_trace_kernel;
  if (name == "padic") return suite_padic;
  if (name == "lubin-tate") return suite_lubin_tate;
  if (name == "finite-groups") return suite_finite_groups;
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace

Report run_suite(const RunConfig& config) {
  validate(config);
  Report rep;
  rep.suite = config.suite;
  rep.config = config;
  std::vector<std::string> names;
  if (config.suite == "all") {
    names = suite_names();
  } else {
    names = {config.suite};
  }
  // Suites run concurrently; records are joined in canonical order.
  std::vector<std::future<std::vector<CheckRecord>>> jobs;
  for (const auto& name : names) {
    jobs.push_back(std::async(std::launch::async, [&config, fn = suite_fn(name)] {
      std::vector<CheckRecord> recs;
      fn(config, recs);
      return recs;
    }));
  }
  for (auto& job : jobs) {
    auto recs = job.get();
    rep.records.insert(rep.records.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  return rep;
}

bool Report::passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

std::string Report::to_json() const {
  json cfg{{"suite", config.suite},
           {"d", std::to_string(config.d.lo) + ".." + std::to_string(config.d.hi)},
           {"g", config.g ? json(std::to_string(config.g->lo) + ".." + std::to_string(config.g->hi)) : json(nullptr)},
           {"p", config.primes},
           {"precision", config.precision ? json(*config.precision) : json(nullptr)},
           {"degree", config.degree},
           {"f", config.residue_degrees},
           {"mod", config.moduli},
           {"samples", config.samples},
           {"seed", config.seed},
           {"allow_large", config.allow_large}};
  json recs = json::array();
  for (const auto& rec : records) {
    json j{{"suite", rec.suite},
           {"name", rec.name},
           {"inputs", json::parse(rec.inputs)},
           {"expected", json::parse(rec.expected)},
           {"observed", json::parse(rec.observed)},
           {"verdict", rec.pass ? "pass" : "fail"}};
    if (config.timings) j["runtime_ms"] = rec.runtime_ms;
    recs.push_back(std::move(j));
  }
  json doc{{"tool", "mlfw"},
           {"version", tool_version()},
           {"suite", suite},
           {"seed", config.seed},
           {"config", cfg},
           {"records", recs},
           {"verdict", passed() ? "pass" : "fail"}};
  return doc.dump(2) + "\n";
}

std::string Report::summary() const {
  std::string out;
  std::size_t fails = 0;
  for (const auto& rec : records) {
    out += (rec.pass ? "PASS  " : "FAIL  ") + rec.suite + "  " + rec.name + "\n";
    if (!rec.pass) ++fails;
  }
  out += "verdict: " + std::string(passed() ? "pass" : "fail") + " (" + std::to_string(records.size() - fails) + "/" +
         std::to_string(records.size()) + " checks)\n";
  return out;
}

}  // namespace mlfw
