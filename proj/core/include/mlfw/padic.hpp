#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlfw/linalg.hpp"

namespace mlfw {

/// Raised when a computation would need more p-adic digits than its inputs
/// guarantee.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of Q_p stored as p^v * u with u known modulo p^N.
///
/// Three shapes share the type:
///   - exact values (N infinite, u an exact integer prime to p, or the exact
///     zero with v infinite);
///   - ordinary approximations (1 <= N < inf, 0 <= u < p^N, p does not divide u);
///   - approximate zeros O(p^v), stored with N = 0.
/// The absolute precision v + N is the exponent up to which the value is
/// known. Every operation reports at most the precision its operands
/// guarantee.
class PadicScalar {
 public:
  static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

  PadicScalar() = default;

  static PadicScalar exact_zero(std::uint32_t p);
  static PadicScalar exact(std::uint32_t p, const Integer& n);
  /// n with `rel` digits of relative precision (n = 0 gives O(p^rel)).
  static PadicScalar from_integer(std::uint32_t p, const Integer& n, std::int64_t rel);
  /// q known modulo p^abs.
  static PadicScalar from_rational(std::uint32_t p, const Rational& q, std::int64_t abs);
  static PadicScalar big_oh(std::uint32_t p, std::int64_t abs);

  std::uint32_t prime() const { return p_; }
  /// kInfinity for the exact zero; for O(p^k) this is k.
  std::int64_t valuation() const { return val_; }
  const Integer& unit() const { return unit_; }
  std::int64_t relative_precision() const { return rel_; }
  std::int64_t absolute_precision() const;

  bool is_exact() const { return rel_ == kInfinity || val_ == kInfinity; }
  bool is_exact_zero() const { return val_ == kInfinity; }
  /// No significant digit: exact zero or O(p^k).
  bool is_zero() const { return val_ == kInfinity || rel_ == 0; }

  /// Caps the absolute precision at `abs`.
  PadicScalar capped(std::int64_t abs) const;
  /// Representative p^v * u as a rational number (0 for zeros).
  Rational lift() const;
  /// Equal modulo p^min(abs precisions).
  bool agrees_with(const PadicScalar& o) const;

  PadicScalar operator-() const;
  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  /// Division by the exact zero throws std::domain_error; by O(p^k) throws
  /// PrecisionError. Two exact operands must divide evenly.
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);

  /// Same value and same precision metadata.
  bool identical(const PadicScalar& o) const;

  /// "p^v * u mod p^N" as a JSON object of decimal strings.
  std::string to_json() const;
  std::string to_string() const;

 private:
  static PadicScalar normalize(std::uint32_t p, std::int64_t shift, Integer s, std::int64_t abs);

  std::uint32_t p_ = 0;
  std::int64_t val_ = kInfinity;
  Integer unit_ = 0;
  std::int64_t rel_ = 0;
};

std::int64_t padic_valuation(const Integer& n, std::uint32_t p);
Integer ipow(std::uint32_t p, std::int64_t e);

/// log(1+x) = sum (-1)^(n+1) x^n / n, summed until every omitted term has
/// valuation >= the target precision min(abs(u), cap). Requires p odd and
/// u = 1 mod p. Exact inputs other than 1 need a finite cap.
PadicScalar padic_log(const PadicScalar& u, std::int64_t cap = PadicScalar::kInfinity);
/// Logarithm of an arbitrary unit: log(u^(p-1)) / (p-1), which discards the
/// Teichmueller factor.
PadicScalar padic_log_unit(const PadicScalar& u, std::int64_t cap = PadicScalar::kInfinity);
/// exp(x) for v(x) >= 1, p odd.
PadicScalar padic_exp(const PadicScalar& x, std::int64_t cap = PadicScalar::kInfinity);

class PadicMatrix {
 public:
  PadicMatrix(std::uint32_t p, std::size_t n);  // exact zero matrix
  static PadicMatrix identity(std::uint32_t p, std::size_t n);
  static PadicMatrix exact(std::uint32_t p, const IntMatrix& m);
  static PadicMatrix from_integer(std::uint32_t p, const IntMatrix& m, std::int64_t abs);

  std::uint32_t prime() const { return p_; }
  std::size_t size() const { return n_; }
  PadicScalar& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const PadicScalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  const std::vector<PadicScalar>& entries() const { return entries_; }

  PadicMatrix capped(std::int64_t abs) const;  // exact zeros stay exact
  std::int64_t min_valuation() const;           // over entries, kInfinity if all exact zero
  std::int64_t min_absolute_precision() const;  // over entries
  bool is_exact_zero() const;
  bool is_zero() const;  // no significant digit anywhere
  bool agrees_with(const PadicMatrix& o) const;

  friend PadicMatrix operator+(const PadicMatrix& a, const PadicMatrix& b);
  friend PadicMatrix operator-(const PadicMatrix& a, const PadicMatrix& b);
  friend PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b);
  friend PadicMatrix operator*(const PadicScalar& s, const PadicMatrix& a);

  void check_same(const PadicMatrix& o) const;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<PadicScalar> entries_;
};

PadicMatrix bracket(const PadicMatrix& x, const PadicMatrix& y);

/// Alternating series in M - I; requires M = I mod p entrywise. Omitted terms
/// have valuation >= min(cap, abs precision of M - I). An exactly nilpotent
/// M - I terminates the series and gives an exact result whatever the cap.
PadicMatrix matrix_log(const PadicMatrix& m, std::int64_t cap = PadicScalar::kInfinity);
/// exp(X) for X = 0 mod p entrywise.
PadicMatrix matrix_exp(const PadicMatrix& x, std::int64_t cap = PadicScalar::kInfinity);

struct PadicRank {
  std::size_t rank = 0;
  /// Smallest absolute precision among the entries left after elimination
  /// (kInfinity when nothing is left).
  std::int64_t residual_precision = PadicScalar::kInfinity;
};
/// Rank of the Q_p-span of `rows` by elimination with the minimal-valuation
/// pivot. Only certified nonzero pivots count, so the rank is a lower bound
/// on the true rank.
PadicRank padic_rank(std::vector<std::vector<PadicScalar>> rows);

}  // namespace mlfw
