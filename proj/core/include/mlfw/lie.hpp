#pragma once

#include <cstdint>
#include <vector>

#include "mlfw/finite_group.hpp"
#include "mlfw/linalg.hpp"
#include "mlfw/padic.hpp"

namespace mlfw {

struct LieDimension {
  std::size_t dimension = 0;
  std::vector<unsigned long> powers;  // exponent t applied to each generator
  std::size_t sweeps = 0;
  std::int64_t residual_precision = PadicScalar::kInfinity;
  /// Every rejected bracket was exactly dependent (or the span was full), so
  /// `dimension` is the dimension of the closure, not just a lower bound.
  bool closure_certified = true;
};

/// Lower bound for the dimension of the closed subgroup of GL_n(Z_p)
/// generated by `gens`: each M is replaced by M^t with t the order of
/// M mod p, logs are taken exactly when the series terminates and to
/// absolute precision N otherwise, and the span is closed under brackets
/// until a full sweep adds nothing. Rank increases are certified, so the
/// result is always a lower bound; brackets that vanish only modulo p^r
/// clear closure_certified. Throws PrecisionError when a bracket has no
/// significant digit above the residual precision.
LieDimension lie_dimension_lower_bound(const std::vector<IntMatrix>& gens, std::uint32_t p, std::int64_t N);

/// Basis of sp_2g(Q) = {X : X^T J + J X = 0} by exact nullspace.
std::vector<RatMatrix> sp_basis(int g);
std::size_t sp_lie_dimension(int g);

struct BracketWitness {
  RatMatrix x, y, bracket;
};
/// [E12, E21] in sp_2n; both lie in sp_2n and the bracket is E11 - E22.
BracketWitness sp_bracket_witness(int n);
bool sp_bracket_nontrivial(int n);

struct GroupAlgebraSpec {
  FiniteGroup group;
  std::vector<Perm> representation;

  explicit GroupAlgebraSpec(FiniteGroup h);
};

/// dim_Q {X : X M = M X for every representation matrix}, exact.
std::size_t commutant_dimension(const GroupAlgebraSpec& spec);

struct DimensionComparison {
  int g = 0;
  std::size_t sp_dimension = 0;  // 2g^2 + g
  std::size_t bound = 0;         // 2g + 1
  bool exceeds = false;
  /// g = 1: no strict inequality, handled separately (virtually abelian case).
  bool flagged = false;
};
DimensionComparison compare_dimensions(int g);

}  // namespace mlfw
