#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mlfw/linalg.hpp"
#include "mlfw/word.hpp"

namespace mlfw {

struct NamedMatrix {
  std::string name;
  IntMatrix matrix;
};

/// Abelianized twist family on Q^d with coordinates y_1..y_d (0-based
/// indices 0..d-1), y_j the class of x_j. Matrices act on columns and come
/// from closed-form transvection formulas.
class TwistFamily {
 public:
  explicit TwistFamily(int d);

  int degree() const { return spec_.degree(); }
  int genus() const { return spec_.genus(); }
  const PresentationSpec& presentation() const { return spec_; }
  const std::vector<NamedMatrix>& matrices() const { return matrices_; }
  /// Throws std::out_of_range for an unknown name.
  const IntMatrix& matrix(const std::string& name) const;

  /// 0-based coordinates of a_i and b_i.
  std::size_t a(int i) const { return static_cast<std::size_t>(spec_.a_index(i) - 1); }
  std::size_t b(int i) const { return static_cast<std::size_t>(spec_.b_index(i) - 1); }

 private:
  PresentationSpec spec_;
  std::vector<NamedMatrix> matrices_;
};

/// Abelianization of a word-level family member in the basis x_1..x_d.
IntMatrix abelianize_on_y(const PresentationSpec& spec, const Endomorphism& e);

/// Subspace of Q^n held as its canonical reduced echelon basis.
class Subspace {
 public:
  Subspace(std::size_t ambient, std::vector<RatVector> spanning);
  /// span{e_c : c in coords}, 0-based.
  static Subspace coordinates(std::size_t ambient, const std::vector<std::size_t>& coords);

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<RatVector>& basis() const { return basis_; }
  bool contains(const RatVector& v) const;
  bool invariant_under(const IntMatrix& m) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  std::size_t ambient_;
  std::vector<RatVector> basis_;
};

RatVector unit_vector(std::size_t n, std::size_t k);

/// span{y1, y3, y4, ..., yd} for even d, span{y2, ..., yd} for odd d.
Subspace predicted_kernel(int d);

/// Basis of the common fixed covectors, the intersection of ker(M^T - I).
/// Throws std::invalid_argument if some matrix is not unipotent.
std::vector<RatVector> fixed_covectors(const TwistFamily& fam);
/// One hyperplane ker(w) per basis covector w of fixed_covectors().
std::vector<Subspace> invariant_hyperplanes(const TwistFamily& fam);

/// Smallest subspace containing v and stable under every family matrix
/// (hence under every M - I). Throws for v = 0.
Subspace orbit_span(const TwistFamily& fam, const RatVector& v);

/// Whether phi^n v lies outside span{v}. Requires d even, n != 0 and a nonzero
/// y2-coefficient.
bool phi_power_moves_line(int d, long n, const RatVector& v);

/// Small random rational vector (numerators in [-9, 9], denominators 1..4).
RatVector random_rational_vector(std::mt19937_64& rng, std::size_t n);

struct ClaimCheck {
  char claim = 'a';
  int degree = 0;
  int index = 0;  // i
  std::size_t samples = 0;
  /// Every step identity of the argument held entrywise on every sample.
  bool identities_hold = true;
  /// orbit_span(v) contained the claimed vectors on every sample.
  bool span_holds = true;
  bool passed() const { return identities_hold && span_holds; }
};

/// Checks claims (a)-(d) for every admissible i in degree d, on `samples`
/// random vectors each, satisfying the claim's nonvanishing hypothesis. The
/// step in (d) is checked in its corrected form
///   y_{b_i} = phi''_i(y_{a_{i+1}}) - y_{a_{i+1}} + y_{b_{i+1}}.
std::vector<ClaimCheck> verify_claims(int d, std::size_t samples, std::mt19937_64& rng);

/// The right-hand side of the (d) step as printed,
/// -phi''_i(y_{a_{i+1}}) + y_{a_{i+1}} + y_{b_{i+1}}.
RatVector claim_d_printed_rhs(const TwistFamily& fam, int i);

}  // namespace mlfw
