#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mlfw {

/// Element of Z_p[w]/(m) as its f coefficients in 1, w, ..., w^(f-1).
struct RingElement {
  std::vector<std::int64_t> c;
  bool operator==(const RingElement&) const = default;
};

/// Unramified ring of integers Z_p[w]/(m) truncated modulo p^N, with m a
/// monic integer lift of the first irreducible polynomial of degree f over
/// F_p in lexicographic order of its coefficients. Needs p^N < 2^62.
class CoefficientRing {
 public:
  CoefficientRing(std::uint32_t p, int f, int precision);

  std::uint32_t prime() const { return p_; }
  int degree() const { return f_; }
  int precision() const { return n_; }
  std::int64_t modulus() const { return mod_; }
  /// Coefficients m_0..m_{f-1} of m = w^f + m_{f-1} w^(f-1) + ... + m_0.
  const std::vector<std::int64_t>& polynomial() const { return m_; }
  std::uint64_t residue_field_size() const;

  /// Same m, different precision.
  CoefficientRing with_precision(int precision) const;

  RingElement zero() const;
  RingElement one() const { return from_integer(1); }
  RingElement from_integer(std::int64_t n) const;
  RingElement from_coefficients(const std::vector<std::int64_t>& c) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement pow(RingElement a, std::uint64_t e) const;
  bool is_zero(const RingElement& a) const;
  /// Minimal p-adic valuation of the coefficients; precision() for zero.
  int valuation(const RingElement& a) const;
  bool is_unit(const RingElement& a) const { return valuation(a) == 0; }
  /// Throws std::domain_error for a non-unit.
  RingElement inverse(const RingElement& a) const;
  /// a / p; throws std::domain_error unless every coefficient is divisible.
  RingElement divide_by_p(const RingElement& a) const;
  /// Reduction into a ring of lower precision with the same m.
  RingElement reduce(const RingElement& a, const CoefficientRing& target) const;

  std::string to_string(const RingElement& a) const;

 private:
  std::int64_t norm(__int128 v) const;

  std::uint32_t p_;
  int f_;
  int n_;
  std::int64_t mod_;
  std::vector<std::int64_t> m_;
};

using RingPtr = std::shared_ptr<const CoefficientRing>;

/// Power series in 1 to 3 variables, known through total degree D. Terms of
/// higher degree are unknown and never enter comparisons.
class TruncatedSeries {
 public:
  using Exponent = std::array<int, 3>;

  TruncatedSeries(RingPtr ring, int variables, int degree);
  static TruncatedSeries variable(RingPtr ring, int variables, int degree, int which);

  const RingPtr& ring() const { return ring_; }
  int variables() const { return vars_; }
  int degree() const { return deg_; }
  std::size_t terms() const { return coeffs_.size(); }
  const Exponent& exponent(std::size_t k) const;
  std::size_t index(const Exponent& e) const;
  const RingElement& coeff(std::size_t k) const { return coeffs_[k]; }
  RingElement& coeff(std::size_t k) { return coeffs_[k]; }
  const RingElement& at(const Exponent& e) const { return coeffs_[index(e)]; }
  RingElement& at(const Exponent& e) { return coeffs_[index(e)]; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const RingElement& s) const;
  TruncatedSeries power(int e) const;
  /// Homogeneous part of total degree n.
  TruncatedSeries homogeneous(int n) const;
  /// Coefficients of degree > n set to zero.
  TruncatedSeries truncated(int n) const;
  /// Same series over another ring with the same m (coefficients reduced).
  TruncatedSeries reduced_to(const RingPtr& target) const;

  /// this(args[0], args[1], ...); the args share a variable count and have
  /// no constant term.
  TruncatedSeries substitute(const std::vector<TruncatedSeries>& args) const;

  /// Coefficientwise equality through degree min(D, D') modulo p^digits.
  bool agrees_with(const TruncatedSeries& o, int digits) const;
  /// Sparse {"i,j": "coefficient"} JSON object over nonzero terms.
  std::string to_json() const;

 private:
  struct Table;
  static std::shared_ptr<const Table> table_for(int variables, int degree);
  void check_compatible(const TruncatedSeries& o) const;

  RingPtr ring_;
  int vars_;
  int deg_;
  std::shared_ptr<const Table> table_;
  std::vector<RingElement> coeffs_;
};

/// Lubin-Tate law for f(t) = pi t + t^q. Series are held at working
/// precision N + D; each degree step divides by p once, so every coefficient
/// is exact modulo p^N.
struct FormalGroupLaw {
  RingPtr ring;     // user precision N
  RingPtr working;  // precision N + D
  RingElement pi;   // in `working`
  std::uint64_t q = 0;
  int degree = 0;
  TruncatedSeries law;     // F(X, Y) over `working`
  TruncatedSeries series;  // f(t) over `working`
};

/// Throws std::invalid_argument when v(pi) != 1, q != p^f, or D < 2.
FormalGroupLaw lubin_tate_law(const CoefficientRing& ring, const RingElement& pi, std::uint64_t q, int D);
/// [a](t) over the working ring.
TruncatedSeries lt_endomorphism(const FormalGroupLaw& law, const RingElement& a, int D);

/// Formal logarithm scaled to integrality: series = p^s * lambda with
/// s = floor(log_p D).
struct FormalLog {
  TruncatedSeries series;
  int scale = 0;
};
FormalLog formal_log(const FormalGroupLaw& law, int D);
/// Logarithm of an arbitrary one-dimensional law over `working` with user
/// precision `digits`. Throws PrecisionError when
/// s >= digits.
FormalLog formal_log_of(const TruncatedSeries& F, int digits);

struct LawCheck {
  std::string name;
  bool passed = false;
};
/// Commutativity, associativity, F(X,0) = X, [1] = t, [pi] = f,
/// [2][3] = [6], lambda(F) = lambda + lambda, lambda([a]) = a lambda for
/// a in {2, 3, pi}, lambda's valuation bound; all modulo p^N through D.
std::vector<LawCheck> check_law(const FormalGroupLaw& law);

}  // namespace mlfw
