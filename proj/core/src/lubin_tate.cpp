#include "mlfw/lubin_tate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mlfw/padic.hpp"

namespace mlfw {

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p, low degree first, no trailing zeros.
using Poly = std::vector<std::int64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  while (a.size() >= b.size()) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly monic_from_index(std::uint64_t k, int deg, std::int64_t p) {
  Poly m(static_cast<std::size_t>(deg) + 1, 0);
  for (int i = 0; i < deg; ++i) {
    m[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(p));
    k /= static_cast<std::uint64_t>(p);
  }
  m[static_cast<std::size_t>(deg)] = 1;
  return m;
}

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool irreducible_mod_p(const Poly& m, std::int64_t p) {
  const int f = static_cast<int>(m.size()) - 1;
  for (int k = 1; 2 * k <= f; ++k) {
    const std::uint64_t count = upow(static_cast<std::uint64_t>(p), k);
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (poly_rem(m, monic_from_index(idx, k, p), p).empty()) return false;
  }
  return true;
}

int floor_log(std::uint64_t base, std::uint64_t x) {
  int s = 0;
  for (std::uint64_t t = base; t <= x; t *= base) ++s;
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// CoefficientRing
// ---------------------------------------------------------------------------

CoefficientRing::CoefficientRing(std::uint32_t p, int f, int precision) : p_(p), f_(f), n_(precision) {
  if (p == 2) throw std::invalid_argument("p = 2 is not supported");
  if (!is_odd_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  if (f < 1 || f > 8) throw std::invalid_argument("residue degree f must lie in 1..8");
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  __int128 mod = 1;
  for (int i = 0; i < precision; ++i) {
    mod *= p;
    if (mod >= (static_cast<__int128>(1) << 62)) {
      throw std::invalid_argument("p^" + std::to_string(precision) + " exceeds 64-bit coefficient arithmetic");
    }
  }
  mod_ = static_cast<std::int64_t>(mod);
  const std::uint64_t count = upow(p, f);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly m = monic_from_index(idx, f, p);
    if (irreducible_mod_p(m, p)) {
      m_.assign(m.begin(), m.begin() + f);
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::uint64_t CoefficientRing::residue_field_size() const { return upow(p_, f_); }

CoefficientRing CoefficientRing::with_precision(int precision) const {
  CoefficientRing r(p_, f_, precision);
  r.m_ = m_;
  return r;
}

std::int64_t CoefficientRing::norm(__int128 v) const {
  v %= mod_;
  if (v < 0) v += mod_;
  return static_cast<std::int64_t>(v);
}

RingElement CoefficientRing::zero() const { return {std::vector<std::int64_t>(static_cast<std::size_t>(f_), 0)}; }

RingElement CoefficientRing::from_integer(std::int64_t n) const {
  RingElement r = zero();
  r.c[0] = norm(n);
  return r;
}

RingElement CoefficientRing::from_coefficients(const std::vector<std::int64_t>& c) const {
  if (c.size() > static_cast<std::size_t>(f_)) throw std::invalid_argument("too many coefficients");
  RingElement r = zero();
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = norm(c[i]);
  return r;
}

RingElement CoefficientRing::add(const RingElement& a, const RingElement& b) const {
  RingElement r = zero();
  for (int i = 0; i < f_; ++i) r.c[i] = norm(static_cast<__int128>(a.c[i]) + b.c[i]);
  return r;
}

RingElement CoefficientRing::sub(const RingElement& a, const RingElement& b) const {
  RingElement r = zero();
  for (int i = 0; i < f_; ++i) r.c[i] = norm(static_cast<__int128>(a.c[i]) - b.c[i]);
  return r;
}

RingElement CoefficientRing::neg(const RingElement& a) const { return sub(zero(), a); }

RingElement CoefficientRing::mul(const RingElement& a, const RingElement& b) const {
  if (f_ == 1) return {{norm(static_cast<__int128>(a.c[0]) * b.c[0])}};
  std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * f_ - 1), 0);
  for (int i = 0; i < f_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < f_; ++j)
      prod[i + j] = norm(static_cast<__int128>(a.c[i]) * b.c[j] + prod[i + j]);
  }
  // w^f = -(m_0 + ... + m_{f-1} w^(f-1))
  for (int k = 2 * f_ - 2; k >= f_; --k) {
    const std::int64_t t = prod[k];
    if (t == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < f_; ++i)
      prod[k - f_ + i] = norm(static_cast<__int128>(prod[k - f_ + i]) - static_cast<__int128>(t) * m_[i]);
  }
  prod.resize(static_cast<std::size_t>(f_));
  return {prod};
}

RingElement CoefficientRing::pow(RingElement a, std::uint64_t e) const {
  RingElement r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool CoefficientRing::is_zero(const RingElement& a) const {
  return std::all_of(a.c.begin(), a.c.end(), [](std::int64_t x) { return x == 0; });
}

int CoefficientRing::valuation(const RingElement& a) const {
  int v = n_;
  for (std::int64_t x : a.c) {
    if (x == 0) continue;
    int k = 0;
    while (x % p_ == 0) {
      x /= p_;
      ++k;
    }
    v = std::min(v, k);
  }
  return v;
}

RingElement CoefficientRing::inverse(const RingElement& a) const {
  if (!is_unit(a)) throw std::domain_error("element is not a unit");
  // a^(q-2) inverts a modulo p; Newton steps x <- x(2 - ax) double the digits.
  RingElement x = pow(a, residue_field_size() - 2);
  const RingElement two = from_integer(2);
  for (int digits = 1; digits < 2 * n_ + 2; digits *= 2) x = mul(x, sub(two, mul(a, x)));
  if (!(mul(a, x) == one())) throw std::logic_error("Newton inversion failed");
  return x;
}

RingElement CoefficientRing::divide_by_p(const RingElement& a) const {
  RingElement r = a;
  for (auto& x : r.c) {
    if (x % p_ != 0) throw std::domain_error("element is not divisible by p");
    x /= p_;
  }
  return r;
}

RingElement CoefficientRing::reduce(const RingElement& a, const CoefficientRing& target) const {
  if (target.p_ != p_ || target.m_ != m_) throw std::invalid_argument("rings do not share p and m");
  RingElement r = a;
  for (auto& x : r.c) x = target.norm(x);
  return r;
}

std::string CoefficientRing::to_string(const RingElement& a) const {
  if (f_ == 1) return std::to_string(a.c[0]);
  std::string out;
  for (int i = 0; i < f_; ++i) {
    if (a.c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(a.c[i]);
    if (i == 1) out += "*w";
    if (i > 1) out += "*w^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// TruncatedSeries
// ---------------------------------------------------------------------------

struct TruncatedSeries::Table {
  int vars = 1;
  int degree = 0;
  std::vector<Exponent> exps;  // by total degree, then lexicographically
  std::vector<int> total;
  std::vector<std::size_t> lookup;

  std::size_t key(const Exponent& e) const {
    std::size_t k = 0;
    for (int v = 0; v < vars; ++v) k = k * static_cast<std::size_t>(degree + 1) + static_cast<std::size_t>(e[v]);
    return k;
  }
};

std::shared_ptr<const TruncatedSeries::Table> TruncatedSeries::table_for(int variables, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Table>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{variables, degree}];
  if (slot) return slot;
  auto t = std::make_shared<Table>();
  t->vars = variables;
  t->degree = degree;
  std::size_t slots = 1;
  for (int v = 0; v < variables; ++v) slots *= static_cast<std::size_t>(degree + 1);
  t->lookup.assign(slots, static_cast<std::size_t>(-1));
  for (int n = 0; n <= degree; ++n) {
    for (int i = n; i >= 0; --i) {
      if (variables == 1) {
        if (i != n) continue;
        t->exps.push_back({n, 0, 0});
      } else if (variables == 2) {
        t->exps.push_back({i, n - i, 0});
      } else {
        for (int j = n - i; j >= 0; --j) t->exps.push_back({i, j, n - i - j});
      }
    }
  }
  for (std::size_t k = 0; k < t->exps.size(); ++k) {
    const auto& e = t->exps[k];
    t->total.push_back(e[0] + e[1] + e[2]);
    t->lookup[t->key(e)] = k;
  }
  slot = t;
  return slot;
}

TruncatedSeries::TruncatedSeries(RingPtr ring, int variables, int degree)
    : ring_(std::move(ring)), vars_(variables), deg_(degree) {
  if (!ring_) throw std::invalid_argument("series needs a ring");
  if (variables < 1 || variables > 3) throw std::invalid_argument("series support 1 to 3 variables");
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  table_ = table_for(variables, degree);
  coeffs_.assign(table_->exps.size(), ring_->zero());
}

TruncatedSeries TruncatedSeries::variable(RingPtr ring, int variables, int degree, int which) {
  if (which < 0 || which >= variables) throw std::invalid_argument("no such variable");
  TruncatedSeries s(std::move(ring), variables, degree);
  if (degree >= 1) {
    Exponent e{0, 0, 0};
    e[which] = 1;
    s.at(e) = s.ring_->one();
  }
  return s;
}

const TruncatedSeries::Exponent& TruncatedSeries::exponent(std::size_t k) const { return table_->exps.at(k); }

std::size_t TruncatedSeries::index(const Exponent& e) const {
  int total = 0;
  for (int v = 0; v < 3; ++v) {
    if (e[v] < 0 || (v >= vars_ && e[v] != 0)) throw std::out_of_range("exponent out of range");
    total += e[v];
  }
  if (total > deg_) throw std::out_of_range("exponent beyond the truncation degree");
  return table_->lookup[table_->key(e)];
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (vars_ != o.vars_ || deg_ != o.deg_) throw std::invalid_argument("series shapes differ");
  if (ring_ != o.ring_ && (ring_->modulus() != o.ring_->modulus() || ring_->polynomial() != o.ring_->polynomial())) {
    throw std::invalid_argument("series live over different rings");
  }
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries r = a;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = a.ring_->add(a.coeffs_[k], b.coeffs_[k]);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries r = a;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = a.ring_->sub(a.coeffs_[k], b.coeffs_[k]);
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  const auto& t = *a.table_;
  const CoefficientRing& ring = *a.ring_;
  TruncatedSeries r(a.ring_, a.vars_, a.deg_);
  for (std::size_t i = 0; i < t.exps.size(); ++i) {
    if (ring.is_zero(a.coeffs_[i])) continue;
    const int room = t.degree - t.total[i];
    for (std::size_t j = 0; j < t.exps.size() && t.total[j] <= room; ++j) {
      if (ring.is_zero(b.coeffs_[j])) continue;
      TruncatedSeries::Exponent e{t.exps[i][0] + t.exps[j][0], t.exps[i][1] + t.exps[j][1],
                                  t.exps[i][2] + t.exps[j][2]};
      auto& slot = r.coeffs_[t.lookup[t.key(e)]];
      slot = ring.add(slot, ring.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const RingElement& s) const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = ring_->mul(c, s);
  return r;
}

TruncatedSeries TruncatedSeries::power(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  TruncatedSeries result(ring_, vars_, deg_);
  result.coeffs_[0] = ring_->one();
  TruncatedSeries base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::homogeneous(int n) const {
  TruncatedSeries r(ring_, vars_, deg_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (table_->total[k] == n) r.coeffs_[k] = coeffs_[k];
  return r;
}

TruncatedSeries TruncatedSeries::truncated(int n) const {
  TruncatedSeries r = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (table_->total[k] > n) r.coeffs_[k] = ring_->zero();
  return r;
}

TruncatedSeries TruncatedSeries::reduced_to(const RingPtr& target) const {
  TruncatedSeries r(target, vars_, deg_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = ring_->reduce(coeffs_[k], *target);
  return r;
}

TruncatedSeries TruncatedSeries::substitute(const std::vector<TruncatedSeries>& args) const {
  if (args.size() != static_cast<std::size_t>(vars_)) throw std::invalid_argument("one argument per variable");
  const int m = args.front().vars_;
  const int deg = args.front().deg_;
  for (const auto& a : args) {
    if (a.vars_ != m || a.deg_ != deg) throw std::invalid_argument("arguments must share a shape");
    if (!ring_->is_zero(a.coeffs_[0])) throw std::invalid_argument("arguments must have no constant term");
  }
  const int top = std::min(deg_, deg);
  // powers[v][k] = args[v]^k
  std::vector<std::vector<TruncatedSeries>> powers(args.size());
  for (std::size_t v = 0; v < args.size(); ++v) {
    TruncatedSeries one(args[v].ring_, m, deg);
    one.coeffs_[0] = ring_->one();
    powers[v].push_back(one);
    for (int k = 1; k <= top; ++k) powers[v].push_back(powers[v].back() * args[v]);
  }
  TruncatedSeries r(args.front().ring_, m, deg);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (ring_->is_zero(coeffs_[k]) || table_->total[k] > top) continue;
    const auto& e = table_->exps[k];
    TruncatedSeries term = powers[0][static_cast<std::size_t>(e[0])];
    for (int v = 1; v < vars_; ++v) {
      if (e[v] > 0) term = term * powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(e[v])];
    }
    r = r + term.scaled(coeffs_[k]);
  }
  return r;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& o, int digits) const {
  if (vars_ != o.vars_) return false;
  const int top = std::min(deg_, o.deg_);
  std::int64_t mod = 1;
  for (int i = 0; i < digits; ++i) mod *= ring_->prime();
  if (mod > ring_->modulus() || mod > o.ring_->modulus()) {
    throw std::invalid_argument("comparison asks for more digits than the series carry");
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (table_->total[k] > top) continue;
    const auto& a = coeffs_[k];
    const auto& b = o.at(table_->exps[k]);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      if ((a.c[i] - b.c[i]) % mod != 0) return false;
  }
  return true;
}

std::string TruncatedSeries::to_json() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (ring_->is_zero(coeffs_[k])) continue;
    const auto& e = table_->exps[k];
    std::string key = std::to_string(e[0]);
    for (int v = 1; v < vars_; ++v) key += "," + std::to_string(e[v]);
    if (!first) out += ",";
    first = false;
    out += "\"" + key + "\":\"" + ring_->to_string(coeffs_[k]) + "\"";
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Lubin-Tate construction
// ---------------------------------------------------------------------------

namespace {

// (pi - pi^(n+1))^-1 * x for x divisible by p.
struct LtDivider {
  const CoefficientRing& ring;
  const RingElement& pi;

  RingElement operator()(const RingElement& x, int n) const {
    const RingElement denom = ring.sub(pi, ring.pow(pi, static_cast<std::uint64_t>(n) + 1));
    if (ring.valuation(denom) != 1) throw std::logic_error("pi - pi^n does not have valuation 1");
    const RingElement unit_inv = ring.inverse(ring.divide_by_p(denom));
    return ring.mul(ring.divide_by_p(x), unit_inv);
  }
};

TruncatedSeries lift_series(const RingElement& pi, std::uint64_t q, const RingPtr& ring, int D) {
  TruncatedSeries f(ring, 1, D);
  f.at({1, 0, 0}) = pi;
  if (q <= static_cast<std::uint64_t>(D)) f.at({static_cast<int>(q), 0, 0}) = ring->add(f.at({static_cast<int>(q), 0, 0}), ring->one());
  return f;
}

RingElement lift(const RingElement& a, const CoefficientRing& to) { return to.from_coefficients(a.c); }

}  // namespace

FormalGroupLaw lubin_tate_law(const CoefficientRing& ring, const RingElement& pi, std::uint64_t q, int D) {
  if (D < 2) throw std::invalid_argument("degree cutoff must be >= 2");
  if (ring.precision() < 2) throw std::invalid_argument("precision must be >= 2 to certify v(pi) = 1");
  if (ring.valuation(pi) != 1 || ring.valuation(ring.divide_by_p(pi)) != 0) {
    throw std::invalid_argument("pi is not a uniformizer (need v(pi) = 1)");
  }
  if (q != ring.residue_field_size()) {
    throw std::invalid_argument("q = " + std::to_string(q) + " is not p^f = " + std::to_string(ring.residue_field_size()));
  }
  auto user = std::make_shared<const CoefficientRing>(ring);
  auto working = std::make_shared<const CoefficientRing>(ring.with_precision(ring.precision() + D));
  const RingElement pw = lift(pi, *working);

  const TruncatedSeries f = lift_series(pw, q, working, D);
  const TruncatedSeries x = TruncatedSeries::variable(working, 2, D, 0);
  const TruncatedSeries y = TruncatedSeries::variable(working, 2, D, 1);
  const TruncatedSeries fx = f.substitute({x});
  const TruncatedSeries fy = f.substitute({y});
  const LtDivider divide{*working, pw};

  TruncatedSeries F = x + y;
  for (int n = 1; n < D; ++n) {
    TruncatedSeries num = F.substitute({fx, fy}).homogeneous(n + 1);
    if (q <= static_cast<std::uint64_t>(n + 1)) num = num - F.power(static_cast<int>(q)).homogeneous(n + 1);
    for (std::size_t k = 0; k < num.terms(); ++k) {
      if (working->is_zero(num.coeff(k))) continue;
      F.coeff(k) = divide(num.coeff(k), n);
    }
  }
  return {user, working, pw, q, D, F, f};
}

TruncatedSeries lt_endomorphism(const FormalGroupLaw& law, const RingElement& a, int D) {
  if (D < 1 || D > law.degree) throw std::invalid_argument("degree must lie in 1..law degree");
  const auto& ring = *law.working;
  const TruncatedSeries f = law.series.truncated(D);
  const LtDivider divide{ring, law.pi};
  TruncatedSeries A(law.working, 1, law.degree);
  A.at({1, 0, 0}) = lift(a, ring);
  for (int n = 1; n < D; ++n) {
    TruncatedSeries num = A.substitute({f}).homogeneous(n + 1);
    if (law.q <= static_cast<std::uint64_t>(n + 1)) num = num - A.power(static_cast<int>(law.q)).homogeneous(n + 1);
    const RingElement& c = num.at({n + 1, 0, 0});
    if (!ring.is_zero(c)) A.at({n + 1, 0, 0}) = divide(c, n);
  }
  return A;
}

FormalLog formal_log_of(const TruncatedSeries& F, int digits) {
  if (F.variables() != 2) throw std::invalid_argument("formal log needs a two-variable law");
  const auto& ring = *F.ring();
  const int D = F.degree();
  const std::uint32_t p = ring.prime();
  const int s = floor_log(p, static_cast<std::uint64_t>(D));
  if (s >= digits) {
    throw PrecisionError("denominators up to p^" + std::to_string(s) + " exhaust precision " +
                         std::to_string(digits) + "; rerun with a larger --precision");
  }
  // g(t) = dF/dX (0, t), h = 1 / g.
  std::vector<RingElement> g(static_cast<std::size_t>(D), ring.zero());
  for (int k = 0; k < D; ++k) g[static_cast<std::size_t>(k)] = F.at({1, k, 0});
  if (!(g[0] == ring.one())) throw std::invalid_argument("law is not normalized to X + Y");
  std::vector<RingElement> h(static_cast<std::size_t>(D), ring.zero());
  h[0] = ring.one();
  for (int k = 1; k < D; ++k) {
    RingElement acc = ring.zero();
    for (int j = 1; j <= k; ++j) acc = ring.add(acc, ring.mul(g[static_cast<std::size_t>(j)], h[static_cast<std::size_t>(k - j)]));
    h[static_cast<std::size_t>(k)] = ring.neg(acc);
  }
  FormalLog out{TruncatedSeries(F.ring(), 1, D), s};
  for (int k = 0; k < D; ++k) {
    // p^s * h_k / (k+1)
    std::int64_t n = k + 1;
    int v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    RingElement c = ring.mul(h[static_cast<std::size_t>(k)], ring.inverse(ring.from_integer(n)));
    c = ring.mul(c, ring.pow(ring.from_integer(p), static_cast<std::uint64_t>(s - v)));
    out.series.at({k + 1, 0, 0}) = c;
  }
  return out;
}

FormalLog formal_log(const FormalGroupLaw& law, int D) {
  if (D < 2 || D > law.degree) throw std::invalid_argument("degree must lie in 2..law degree");
  return formal_log_of(law.law, law.ring->precision());
}

std::vector<LawCheck> check_law(const FormalGroupLaw& law) {
  const RingPtr& w = law.working;
  const int D = law.degree;
  const int N = law.ring->precision();
  const CoefficientRing& ring = *w;
  std::vector<LawCheck> out;
  auto record = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };

  const TruncatedSeries& F = law.law;
  const TruncatedSeries x2 = TruncatedSeries::variable(w, 2, D, 0);
  const TruncatedSeries y2 = TruncatedSeries::variable(w, 2, D, 1);
  const TruncatedSeries t = TruncatedSeries::variable(w, 1, D, 0);
  const TruncatedSeries zero1(w, 1, D);

  record("F = X + Y mod degree 2", F.truncated(1).agrees_with(x2 + y2, N));
  record("F(X,0) = X", F.substitute({t, zero1}).agrees_with(t, N));
  record("f(F) = F(f,f)", law.series.substitute({F}).agrees_with(
                              F.substitute({law.series.substitute({x2}), law.series.substitute({y2})}), N));
  record("commutativity", F.substitute({y2, x2}).agrees_with(F, N));
  {
    const TruncatedSeries x3 = TruncatedSeries::variable(w, 3, D, 0);
    const TruncatedSeries y3 = TruncatedSeries::variable(w, 3, D, 1);
    const TruncatedSeries z3 = TruncatedSeries::variable(w, 3, D, 2);
    const TruncatedSeries left = F.substitute({F.substitute({x3, y3}), z3});
    const TruncatedSeries right = F.substitute({x3, F.substitute({y3, z3})});
    record("associativity", left.agrees_with(right, N));
  }
  const RingElement pi_user = ring.reduce(law.pi, *law.ring);
  record("[1] = t", lt_endomorphism(law, law.ring->one(), D).agrees_with(t, N));
  record("[pi] = f", lt_endomorphism(law, pi_user, D).agrees_with(law.series, N));
  {
    const auto e2 = lt_endomorphism(law, law.ring->from_integer(2), D);
    const auto e3 = lt_endomorphism(law, law.ring->from_integer(3), D);
    const auto e6 = lt_endomorphism(law, law.ring->from_integer(6), D);
    record("[2][3] = [6]", e2.substitute({e3}).agrees_with(e6, N));
    record("[a] commutes with F", F.substitute({e2.substitute({x2}), e2.substitute({y2})})
                                      .agrees_with(e2.substitute({F}), N));
  }
  const FormalLog lg = formal_log(law, D);
  const TruncatedSeries& L = lg.series;
  record("lambda = t mod degree 2",
         L.truncated(1).agrees_with(t.scaled(ring.pow(ring.from_integer(ring.prime()), static_cast<std::uint64_t>(lg.scale))), N));
  record("lambda(F) = lambda(X) + lambda(Y)",
         L.substitute({F}).agrees_with(L.substitute({x2}) + L.substitute({y2}), N));
  for (const auto& [label, a] : std::vector<std::pair<std::string, RingElement>>{
           {"2", law.ring->from_integer(2)}, {"3", law.ring->from_integer(3)}, {"pi", pi_user}}) {
    const auto ea = lt_endomorphism(law, a, D);
    record("lambda([" + label + "]) = " + label + " lambda", L.substitute({ea}).agrees_with(L.scaled(lift(a, ring)), N));
  }
  {
    const int bound = floor_log(law.q, static_cast<std::uint64_t>(D));
    bool ok = true;
    const TruncatedSeries reduced = L.reduced_to(law.ring);
    for (std::size_t k = 0; k < reduced.terms(); ++k)
      ok = ok && law.ring->valuation(reduced.coeff(k)) - lg.scale >= -bound;
    record("v(lambda) >= -floor(log_q D)", ok);
  }
  return out;
}

}  // namespace mlfw
