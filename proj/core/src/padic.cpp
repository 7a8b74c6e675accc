#include "mlfw/padic.hpp"

#include <algorithm>

namespace mlfw {

namespace {

using I64 = std::int64_t;
constexpr I64 kInf = PadicScalar::kInfinity;

I64 sat_add(I64 a, I64 b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

void require_odd_prime_match(std::uint32_t p, std::uint32_t q) {
  if (p != q) throw std::invalid_argument("p-adic operands over different primes");
}

// Smallest n >= 1 from which on every series term n*w - v(n) (log) stays >= target.
I64 log_term_count(std::uint32_t p, I64 w, I64 target) {
  I64 n = 1;
  for (;; ++n) {
    I64 e = n * w - target;
    if (e >= 0) {
      if (e >= 62) break;
      Integer pe = ipow(p, e);
      if (pe >= n) break;
    }
  }
  return n - 1;  // terms 1..n-1 are kept
}

I64 floor_log(std::uint32_t p, I64 n) {
  I64 k = 0;
  for (I64 x = n; x >= static_cast<I64>(p); x /= p) ++k;
  return k;
}

}  // namespace

Integer ipow(std::uint32_t p, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("ipow: negative exponent");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
  return r;
}

std::int64_t padic_valuation(const Integer& n, std::uint32_t p) {
  if (n == 0) return kInf;
  Integer pz(p);
  return static_cast<I64>(mpz_remove(Integer().get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

PadicScalar PadicScalar::normalize(std::uint32_t p, std::int64_t shift, Integer s, std::int64_t abs) {
  PadicScalar r;
  r.p_ = p;
  if (s == 0) return abs >= kInf ? exact_zero(p) : big_oh(p, abs);
  Integer u;
  Integer pz(p);
  I64 t = static_cast<I64>(mpz_remove(u.get_mpz_t(), s.get_mpz_t(), pz.get_mpz_t()));
  I64 v = shift + t;
  if (abs < kInf && v >= abs) return big_oh(p, abs);
  r.val_ = v;
  if (abs >= kInf) {
    r.rel_ = kInf;
    r.unit_ = u;
  } else {
    r.rel_ = abs - v;
    Integer mod = ipow(p, r.rel_);
    mpz_mod(r.unit_.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
  }
  return r;
}

PadicScalar PadicScalar::exact_zero(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  PadicScalar r;
  r.p_ = p;
  return r;
}

PadicScalar PadicScalar::exact(std::uint32_t p, const Integer& n) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  return normalize(p, 0, n, kInf);
}

PadicScalar PadicScalar::from_integer(std::uint32_t p, const Integer& n, std::int64_t rel) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  if (rel < 0) throw std::invalid_argument("precision must be non-negative");
  if (n == 0) return big_oh(p, rel);
  return normalize(p, 0, n, padic_valuation(n, p) + rel);
}

PadicScalar PadicScalar::from_rational(std::uint32_t p, const Rational& q, std::int64_t abs) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  if (q == 0) return abs >= kInf ? exact_zero(p) : big_oh(p, abs);
  Integer num = q.get_num(), den = q.get_den();
  I64 vd = padic_valuation(den, p);
  Integer den_unit = den / ipow(p, vd);
  if (abs >= kInf) {
    if (den_unit != 1) throw std::domain_error("exact rational with denominator prime to p needs a precision");
    return normalize(p, -vd, num, kInf);
  }
  // value = num / den_unit * p^-vd, needed modulo p^abs.
  I64 vn = padic_valuation(num, p);
  I64 digits = abs + vd - vn;
  if (digits <= 0) return big_oh(p, abs);
  Integer mod = ipow(p, digits + vn);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den_unit.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::domain_error("denominator not invertible");
  }
  Integer s = num * inv;
  mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
  return normalize(p, -vd, s, abs);
}

PadicScalar PadicScalar::big_oh(std::uint32_t p, std::int64_t abs) {
  if (abs >= kInf) return exact_zero(p);
  PadicScalar r;
  r.p_ = p;
  r.val_ = abs;
  r.rel_ = 0;
  return r;
}

std::int64_t PadicScalar::absolute_precision() const { return sat_add(val_, rel_); }

PadicScalar PadicScalar::capped(std::int64_t abs) const {
  if (absolute_precision() <= abs) return *this;
  if (is_exact_zero()) return big_oh(p_, abs);
  return normalize(p_, val_, unit_, abs);
}

Rational PadicScalar::lift() const {
  if (is_zero()) return Rational(0);
  Rational r(unit_);
  if (val_ >= 0) {
    r *= ipow(p_, val_);
  } else {
    r /= ipow(p_, -val_);
  }
  r.canonicalize();
  return r;
}

bool PadicScalar::agrees_with(const PadicScalar& o) const { return (*this - o).is_zero(); }

bool PadicScalar::identical(const PadicScalar& o) const {
  return p_ == o.p_ && val_ == o.val_ && rel_ == o.rel_ && unit_ == o.unit_;
}

PadicScalar PadicScalar::operator-() const {
  if (is_zero()) return *this;
  return normalize(p_, val_, -unit_, absolute_precision());
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  require_odd_prime_match(a.p_, b.p_);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const I64 abs = std::min(a.absolute_precision(), b.absolute_precision());
  const I64 m = std::min(a.val_, b.val_);
  if (abs < kInf && m >= abs) return PadicScalar::big_oh(a.p_, abs);
  Integer s = a.unit_ * ipow(a.p_, a.val_ - m) + b.unit_ * ipow(a.p_, b.val_ - m);
  return PadicScalar::normalize(a.p_, m, std::move(s), abs);
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  require_odd_prime_match(a.p_, b.p_);
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicScalar::exact_zero(a.p_);
  if (a.is_zero() || b.is_zero()) return PadicScalar::big_oh(a.p_, a.val_ + b.val_);
  const I64 v = a.val_ + b.val_;
  const I64 rel = std::min(a.rel_, b.rel_);
  return PadicScalar::normalize(a.p_, v, a.unit_ * b.unit_, sat_add(v, rel));
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
  require_odd_prime_match(a.p_, b.p_);
  if (b.is_exact_zero()) throw std::domain_error("division by exact zero");
  if (b.is_zero()) throw PrecisionError("division by a value with no significant digits");
  if (a.is_exact_zero()) return PadicScalar::exact_zero(a.p_);
  if (a.is_zero()) return PadicScalar::big_oh(a.p_, a.val_ - b.val_);
  const I64 v = a.val_ - b.val_;
  const I64 rel = std::min(a.rel_, b.rel_);
  if (rel >= kInf) {
    if (!mpz_divisible_p(a.unit_.get_mpz_t(), b.unit_.get_mpz_t())) {
      throw std::domain_error("quotient of exact values is not integral; cap the precision first");
    }
    return PadicScalar::normalize(a.p_, v, a.unit_ / b.unit_, kInf);
  }
  Integer mod = ipow(a.p_, rel);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), b.unit_.get_mpz_t(), mod.get_mpz_t());
  return PadicScalar::normalize(a.p_, v, a.unit_ * inv, v + rel);
}

namespace {

std::string prec_str(I64 x) { return x >= kInf ? "inf" : std::to_string(x); }

}  // namespace

std::string PadicScalar::to_json() const {
  return "{\"p\":\"" + std::to_string(p_) + "\",\"valuation\":\"" + prec_str(val_) + "\",\"unit\":\"" +
         unit_.get_str() + "\",\"precision\":\"" + prec_str(rel_) + "\"}";
}

std::string PadicScalar::to_string() const {
  const std::string ps = std::to_string(p_);
  if (is_exact_zero()) return "0";
  if (is_zero()) return "O(" + ps + "^" + std::to_string(val_) + ")";
  std::string head = ps + "^" + std::to_string(val_) + " * " + unit_.get_str();
  if (rel_ >= kInf) return head + " (exact)";
  return head + " mod " + ps + "^" + std::to_string(rel_);
}

// ---------------------------------------------------------------------------
// Scalar logarithm and exponential
// ---------------------------------------------------------------------------

PadicScalar padic_log(const PadicScalar& u, std::int64_t cap) {
  const std::uint32_t p = u.prime();
  if (p == 2) throw std::domain_error("p = 2 is not supported");
  if (u.is_zero() || u.valuation() != 0) throw std::domain_error("log needs a principal unit");
  PadicScalar x = u - PadicScalar::exact(p, 1);
  if (x.is_exact_zero()) return x;
  if (x.valuation() < 1) throw std::domain_error("log needs u = 1 mod p");
  const I64 target = std::min(cap, x.absolute_precision());
  if (target >= kInf) throw std::invalid_argument("exact argument needs a finite precision cap");
  if (x.is_zero()) return PadicScalar::big_oh(p, target);

  const I64 w = x.valuation();
  const I64 terms = log_term_count(p, w, target);
  const I64 guard = target + floor_log(p, std::max<I64>(terms, 1)) + 1;
  PadicScalar xc = x.capped(guard);
  PadicScalar power = xc;
  PadicScalar sum = PadicScalar::exact_zero(p);
  for (I64 n = 1; n <= terms; ++n) {
    PadicScalar term = power / PadicScalar::exact(p, n);
    sum = (n % 2 == 1) ? sum + term : sum - term;
    power = (power * xc).capped(guard);
  }
  return sum.capped(target);
}

PadicScalar padic_log_unit(const PadicScalar& u, std::int64_t cap) {
  const std::uint32_t p = u.prime();
  if (p == 2) throw std::domain_error("p = 2 is not supported");
  if (u.is_zero() || u.valuation() != 0) throw std::domain_error("log needs a unit");
  PadicScalar t = PadicScalar::exact(p, 1);
  for (std::uint32_t i = 0; i + 1 < p; ++i) t = t * u;
  return padic_log(t, cap) / PadicScalar::exact(p, p - 1);
}

PadicScalar padic_exp(const PadicScalar& x, std::int64_t cap) {
  const std::uint32_t p = x.prime();
  if (p == 2) throw std::domain_error("p = 2 is not supported");
  const PadicScalar one = PadicScalar::exact(p, 1);
  if (x.is_exact_zero()) return one;
  if (x.valuation() < 1) throw std::domain_error("exp needs v(x) >= 1");
  const I64 target = std::min(cap, x.absolute_precision());
  if (target >= kInf) throw std::invalid_argument("exact argument needs a finite precision cap");
  if (x.is_zero()) return one.capped(target) + x;

  const I64 w = x.valuation();
  I64 n_max = 0;
  // v(x^n / n!) >= n w - (n - 1)/(p - 1), increasing in n.
  while (!((n_max + 1) * w * (p - 1) - n_max >= target * static_cast<I64>(p - 1))) ++n_max;
  const I64 guard = target + n_max / static_cast<I64>(p - 1) + 2;
  PadicScalar xc = x.capped(guard);
  PadicScalar term = one.capped(guard);
  PadicScalar sum = term;
  for (I64 n = 1; n <= n_max; ++n) {
    term = ((term * xc) / PadicScalar::exact(p, n)).capped(guard);
    sum = sum + term;
  }
  return sum.capped(target);
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

PadicMatrix::PadicMatrix(std::uint32_t p, std::size_t n)
    : p_(p), n_(n), entries_(n * n, PadicScalar::exact_zero(p)) {}

PadicMatrix PadicMatrix::identity(std::uint32_t p, std::size_t n) {
  PadicMatrix m(p, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = PadicScalar::exact(p, 1);
  return m;
}

PadicMatrix PadicMatrix::exact(std::uint32_t p, const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("p-adic matrices are square");
  PadicMatrix out(p, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = PadicScalar::exact(p, m(i, j));
  return out;
}

PadicMatrix PadicMatrix::from_integer(std::uint32_t p, const IntMatrix& m, std::int64_t abs) {
  return exact(p, m).capped(abs);
}

PadicMatrix PadicMatrix::capped(std::int64_t abs) const {
  PadicMatrix out = *this;
  // Exact zeros are known to every precision; keeping them exact lets
  // structural zeros survive truncated series.
  for (auto& e : out.entries_)
    if (!e.is_exact_zero()) e = e.capped(abs);
  return out;
}

std::int64_t PadicMatrix::min_valuation() const {
  I64 v = kInf;
  for (const auto& e : entries_) v = std::min(v, e.valuation());
  return v;
}

std::int64_t PadicMatrix::min_absolute_precision() const {
  I64 a = kInf;
  for (const auto& e : entries_) a = std::min(a, e.absolute_precision());
  return a;
}

bool PadicMatrix::is_exact_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_exact_zero(); });
}

bool PadicMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

bool PadicMatrix::agrees_with(const PadicMatrix& o) const {
  check_same(o);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!entries_[i].agrees_with(o.entries_[i])) return false;
  return true;
}

void PadicMatrix::check_same(const PadicMatrix& o) const {
  if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("p-adic matrices do not match");
}

PadicMatrix operator+(const PadicMatrix& a, const PadicMatrix& b) {
  a.check_same(b);
  PadicMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
  return out;
}

PadicMatrix operator-(const PadicMatrix& a, const PadicMatrix& b) {
  a.check_same(b);
  PadicMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
  return out;
}

PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b) {
  a.check_same(b);
  const std::size_t n = a.n_;
  PadicMatrix out(a.p_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PadicScalar acc = PadicScalar::exact_zero(a.p_);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& x = a(i, k);
        const auto& y = b(k, j);
        if (x.is_exact_zero() || y.is_exact_zero()) continue;
        acc = acc + x * y;
      }
      out(i, j) = acc;
    }
  return out;
}

PadicMatrix operator*(const PadicScalar& s, const PadicMatrix& a) {
  PadicMatrix out = a;
  for (auto& e : out.entries_) e = s * e;
  return out;
}

PadicMatrix bracket(const PadicMatrix& x, const PadicMatrix& y) {
  x.check_same(y);
  const std::size_t n = x.size();
  PadicMatrix out(x.prime(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PadicScalar acc = PadicScalar::exact_zero(x.prime());
      for (std::size_t k = 0; k < n; ++k) {
        // On the diagonal the k = i terms x_ii y_ii - y_ii x_ii cancel
        // identically; computing them would only leave O(p^r) noise.
        if (i == j && k == i) continue;
        acc = acc + x(i, k) * y(k, j) - y(i, k) * x(k, j);
      }
      out(i, j) = acc;
    }
  return out;
}

namespace {

void require_congruent_to_zero(const PadicMatrix& x, const char* what) {
  for (const auto& e : x.entries()) {
    if (e.is_exact_zero()) continue;
    if (e.valuation() < 1) throw std::domain_error(what);
  }
}

PadicMatrix divide(const PadicMatrix& m, std::int64_t n) {
  const PadicScalar d = PadicScalar::exact(m.prime(), n);
  PadicMatrix out = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j) / d;
  return out;
}

}  // namespace

PadicMatrix matrix_log(const PadicMatrix& m, std::int64_t cap) {
  const std::uint32_t p = m.prime();
  if (p == 2) throw std::domain_error("p = 2 is not supported");
  const PadicMatrix x = m - PadicMatrix::identity(p, m.size());
  require_congruent_to_zero(x, "matrix_log needs M = I mod p");

  // Exactly nilpotent: the series is a finite sum, and the result is exact
  // whatever the cap.
  {
    PadicMatrix power = x;
    for (std::size_t k = 1; k <= m.size() + 1 && !power.is_exact_zero(); ++k) {
      bool exact = std::all_of(power.entries().begin(), power.entries().end(),
                               [](const auto& e) { return e.is_exact(); });
      if (!exact) break;
      power = power * x;
    }
    if (power.is_exact_zero()) {
      PadicMatrix sum(p, m.size());
      PadicMatrix pw = x;
      for (std::int64_t n = 1; !pw.is_exact_zero(); ++n) {
        const PadicMatrix term = divide(pw, n);
        sum = n % 2 == 1 ? sum + term : sum - term;
        pw = pw * x;
      }
      return sum;
    }
  }

  const I64 target = std::min(cap, x.min_absolute_precision());
  if (target >= kInf) throw std::invalid_argument("exact non-nilpotent argument needs a finite precision cap");
  if (x.is_zero()) return x.capped(target);
  I64 w = kInf;
  for (const auto& e : x.entries())
    if (!e.is_zero()) w = std::min(w, e.valuation());

  const I64 terms = log_term_count(p, w, target);
  const I64 guard = target + floor_log(p, std::max<I64>(terms, 1)) + 1;
  const PadicMatrix xc = x.capped(guard);
  PadicMatrix power = xc;
  PadicMatrix sum(p, m.size());
  for (I64 n = 1; n <= terms; ++n) {
    PadicMatrix term = divide(power, n);
    sum = n % 2 == 1 ? sum + term : sum - term;
    power = (power * xc).capped(guard);
    if (power.is_exact_zero()) break;
  }
  return sum.capped(target);
}

PadicMatrix matrix_exp(const PadicMatrix& x, std::int64_t cap) {
  const std::uint32_t p = x.prime();
  if (p == 2) throw std::domain_error("p = 2 is not supported");
  require_congruent_to_zero(x, "matrix_exp needs X = 0 mod p");
  const PadicMatrix id = PadicMatrix::identity(p, x.size());
  if (x.is_exact_zero()) return id;
  const I64 target = std::min(cap, x.min_absolute_precision());
  if (target >= kInf) throw std::invalid_argument("exact argument needs a finite precision cap");
  if (x.is_zero()) return (id + x).capped(target);
  I64 w = kInf;
  for (const auto& e : x.entries())
    if (!e.is_zero()) w = std::min(w, e.valuation());

  I64 n_max = 0;
  while (!((n_max + 1) * w * (p - 1) - n_max >= target * static_cast<I64>(p - 1))) ++n_max;
  const I64 guard = target + n_max / static_cast<I64>(p - 1) + 2;
  const PadicMatrix xc = x.capped(guard);
  PadicMatrix term = id.capped(guard);
  PadicMatrix sum = term;
  for (I64 n = 1; n <= n_max; ++n) {
    term = divide(term * xc, n).capped(guard);
    sum = sum + term;
  }
  return sum.capped(target);
}

PadicRank padic_rank(std::vector<std::vector<PadicScalar>> rows) {
  PadicRank out;
  if (rows.empty()) return out;
  const std::size_t cols = rows.front().size();
  std::vector<bool> col_used(cols, false);
  while (!rows.empty()) {
    std::size_t pr = 0, pc = 0;
    I64 best = kInf;
    bool found = false;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        if (col_used[c]) continue;
        const auto& e = rows[r][c];
        if (e.is_zero()) continue;
        if (!found || e.valuation() < best) {
          best = e.valuation();
          pr = r;
          pc = c;
          found = true;
        }
      }
    if (!found) break;
    const PadicScalar pivot = rows[pr][pc];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || rows[r][pc].is_exact_zero()) continue;
      PadicScalar f = rows[r][pc] / pivot;
      for (std::size_t c = 0; c < cols; ++c) {
        if (col_used[c]) continue;
        rows[r][c] = rows[r][c] - f * rows[pr][c];
      }
    }
    col_used[pc] = true;
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pr));
    ++out.rank;
  }
  for (const auto& row : rows)
    for (std::size_t c = 0; c < cols; ++c)
      if (!col_used[c]) out.residual_precision = std::min(out.residual_precision, row[c].absolute_precision());
  return out;
}

}  // namespace mlfw
