#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mlfw/linalg.hpp"
#include "mlfw/word.hpp"

namespace mlfw {

/// Exponent-sum matrix of `e` on the ordered `basis`: column j holds the
/// exponent vector of e(basis[j]). Generators outside the basis are inert:
/// images of basis generators may not have nonzero exponent sum on them, and
/// the images of inert generators may not touch the basis coordinates.
/// Violations throw std::invalid_argument.
IntMatrix abelianize(const Endomorphism& e, const std::vector<Generator>& basis);

/// Standard alternating form on the basis [a1],[b1],...,[ag],[bg]:
/// g diagonal blocks [[0,1],[-1,0]].
class SymplecticForm {
 public:
  explicit SymplecticForm(int g);
  int genus() const { return g_; }
  const IntMatrix& matrix() const { return j_; }

 private:
  int g_;
  IntMatrix j_;
};

/// M^T J M == J. Throws std::invalid_argument on a dimension mismatch.
bool is_symplectic(const IntMatrix& m, const SymplecticForm& form);

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
};
/// Throws std::invalid_argument unless m = p^k with p prime, k >= 1.
PrimePower factor_prime_power(std::uint64_t m);

/// |Sp_2g(Z/m)| for a prime power m.
Integer sp_order(int g, std::uint64_t m);

/// Square matrix over Z/m with entries in [0, m). Ordered row-major
/// lexicographically.
class ResidueMatrix {
 public:
  ResidueMatrix(std::uint32_t modulus, std::size_t n);
  static ResidueMatrix reduce(const IntMatrix& m, std::uint32_t modulus);
  static ResidueMatrix identity(std::uint32_t modulus, std::size_t n);

  std::uint32_t modulus() const { return modulus_; }
  std::size_t size() const { return n_; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const std::vector<std::uint32_t>& entries() const { return entries_; }

  std::int64_t determinant() const;  // in [0, m)
  bool invertible() const;

  friend ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);
  auto operator<=>(const ResidueMatrix& o) const { return entries_ <=> o.entries_; }
  bool operator==(const ResidueMatrix& o) const = default;

 private:
  std::uint32_t modulus_;
  std::size_t n_;
  std::vector<std::uint32_t> entries_;
};

struct ResidueMatrixHash {
  std::size_t operator()(const ResidueMatrix& m) const noexcept;
};

/// Closure of `gens` and their inverses under multiplication mod m, sorted.
/// Throws std::invalid_argument for m < 2 or a generator that is not
/// invertible mod m. `limit` bounds the closure size (std::length_error).
std::vector<ResidueMatrix> generate_quotient(const std::vector<IntMatrix>& gens, std::uint32_t m,
                                             std::size_t limit = 50'000'000);

/// The surface part of the twist family for genus g (phi_i, phi'_i, phi''_i)
/// abelianized on [a1],[b1],...,[ag],[bg], in twist_family order.
std::vector<IntMatrix> surface_twist_matrices(int g);

/// JSON array of rows of decimal strings.
std::string to_json(const IntMatrix& m);

}  // namespace mlfw
