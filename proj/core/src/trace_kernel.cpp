#include "mlfw/trace_kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "mlfw/symplectic.hpp"

namespace mlfw {

namespace {

RatVector act(const IntMatrix& m, const RatVector& v) {
  RatVector out(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) out[r] += Rational(m(r, c)) * v[c];
  return out;
}

RatVector sub(RatVector a, const RatVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

RatVector add(RatVector a, const RatVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

RatVector scale(const Rational& s, RatVector a) {
  for (auto& x : a) x *= s;
  return a;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

TwistFamily::TwistFamily(int d) : spec_(d) {
  const auto n = static_cast<std::size_t>(d);
  const IntMatrix id = IntMatrix::identity(n);
  if (spec_.parity() == Parity::even) {
    IntMatrix m = id;
    m(0, 1) = 1;  // y2 -> y2 + y1
    matrices_.push_back({"phi", m});
  }
  const int g = spec_.genus();
  for (int i = 1; i <= g; ++i) {
    IntMatrix m = id;
    m(a(i), b(i)) = 1;  // b_i -> b_i + a_i
    matrices_.push_back({"phi_" + std::to_string(i), m});
  }
  for (int i = 1; i <= g; ++i) {
    IntMatrix m = id;
    m(b(i), a(i)) = -1;  // a_i -> a_i - b_i
    matrices_.push_back({"phi'_" + std::to_string(i), m});
  }
  for (int i = 1; i < g; ++i) {
    IntMatrix m = id;
    // a_i -> a_i - b_i + b_{i+1}, a_{i+1} -> a_{i+1} - b_{i+1} + b_i
    m(b(i), a(i)) = -1;
    m(b(i + 1), a(i)) = 1;
    m(b(i + 1), a(i + 1)) = -1;
    m(b(i), a(i + 1)) = 1;
    matrices_.push_back({"phi''_" + std::to_string(i), m});
  }
}

const IntMatrix& TwistFamily::matrix(const std::string& name) const {
  for (const auto& nm : matrices_)
    if (nm.name == name) return nm.matrix;
  throw std::out_of_range("no family member named " + name);
}

IntMatrix abelianize_on_y(const PresentationSpec& spec, const Endomorphism& e) {
  std::vector<Generator> basis;
  for (int j = 1; j <= spec.degree(); ++j) basis.push_back(Generator::x(j));
  return abelianize(e, basis);
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient, std::vector<RatVector> spanning) : ambient_(ambient) {
  for (const auto& v : spanning)
    if (v.size() != ambient) throw std::invalid_argument("vector has the wrong dimension");
  basis_ = rref(std::move(spanning));
}

Subspace Subspace::coordinates(std::size_t ambient, const std::vector<std::size_t>& coords) {
  std::vector<RatVector> vs;
  for (std::size_t c : coords) vs.push_back(unit_vector(ambient, c));
  return Subspace(ambient, std::move(vs));
}

bool Subspace::contains(const RatVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector has the wrong dimension");
  auto rows = basis_;
  rows.push_back(v);
  return rank(rows) == basis_.size();
}

bool Subspace::invariant_under(const IntMatrix& m) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](const RatVector& v) { return contains(act(m, v)); });
}

RatVector unit_vector(std::size_t n, std::size_t k) {
  RatVector v(n, Rational(0));
  v.at(k) = 1;
  return v;
}

Subspace predicted_kernel(int d) {
  if (d < 2) throw std::invalid_argument("degree must be >= 2");
  const auto n = static_cast<std::size_t>(d);
  std::vector<std::size_t> coords;
  for (std::size_t c = 0; c < n; ++c) {
    const bool omit = (d % 2 == 0) ? c == 1 : c == 0;
    if (!omit) coords.push_back(c);
  }
  return Subspace::coordinates(n, coords);
}

std::vector<RatVector> fixed_covectors(const TwistFamily& fam) {
  const auto n = static_cast<std::size_t>(fam.degree());
  const IntMatrix id = IntMatrix::identity(n);
  RatMatrix stacked(n * fam.matrices().size(), n);
  std::size_t row = 0;
  for (const auto& nm : fam.matrices()) {
    const IntMatrix nil = nm.matrix - id;
    if (!matrix_power(nil, static_cast<unsigned long>(n)).is_zero()) {
      throw std::invalid_argument(nm.name + " is not unipotent; fixed-covector method does not apply");
    }
    const IntMatrix t = nil.transpose();
    for (std::size_t r = 0; r < n; ++r, ++row)
      for (std::size_t c = 0; c < n; ++c) stacked(row, c) = t(r, c);
  }
  return rref(nullspace(stacked));
}

std::vector<Subspace> invariant_hyperplanes(const TwistFamily& fam) {
  const auto n = static_cast<std::size_t>(fam.degree());
  std::vector<Subspace> out;
  for (const RatVector& w : fixed_covectors(fam)) {
    RatMatrix form(1, n, w);
    out.emplace_back(n, nullspace(form));
  }
  return out;
}

Subspace orbit_span(const TwistFamily& fam, const RatVector& v) {
  const auto n = static_cast<std::size_t>(fam.degree());
  if (v.size() != n) throw std::invalid_argument("vector has the wrong dimension");
  if (is_zero(v)) throw std::invalid_argument("orbit_span needs a nonzero vector");
  Subspace s(n, {v});
  for (;;) {
    std::vector<RatVector> grown = s.basis();
    for (const RatVector& b : s.basis())
      for (const auto& nm : fam.matrices()) grown.push_back(sub(act(nm.matrix, b), b));
    Subspace next(n, std::move(grown));
    if (next.dimension() == s.dimension()) return s;
    s = std::move(next);
  }
}

bool phi_power_moves_line(int d, long n, const RatVector& v) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("phi exists only for even d >= 2");
  if (n == 0) throw std::invalid_argument("n must be nonzero");
  if (v.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("vector has the wrong dimension");
  if (v[1] == 0) throw std::invalid_argument("v must have a nonzero y2-coefficient");
  const TwistFamily fam(d);
  IntMatrix m = fam.matrix("phi");
  if (n < 0) m(0, 1) = -1;  // phi^-1
  const IntMatrix mn = matrix_power(m, static_cast<unsigned long>(n < 0 ? -n : n));
  return rank(std::vector<RatVector>{v, act(mn, v)}) == 2;
}

RatVector random_rational_vector(std::mt19937_64& rng, std::size_t n) {
  RatVector v(n);
  for (auto& x : v) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 4) + 1;
    x = Rational(num, den);
    x.canonicalize();
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

RatVector draw_with(std::mt19937_64& rng, std::size_t n, std::size_t coord) {
  for (;;) {
    RatVector v = random_rational_vector(rng, n);
    if (v[coord] != 0) return v;
  }
}

}  // namespace

RatVector claim_d_printed_rhs(const TwistFamily& fam, int i) {
  const auto n = static_cast<std::size_t>(fam.degree());
  const IntMatrix& m = fam.matrix("phi''_" + std::to_string(i));
  const RatVector ya1 = unit_vector(n, fam.a(i + 1));
  const RatVector yb1 = unit_vector(n, fam.b(i + 1));
  return add(add(scale(-1, act(m, ya1)), ya1), yb1);
}

std::vector<ClaimCheck> verify_claims(int d, std::size_t samples, std::mt19937_64& rng) {
  const TwistFamily fam(d);
  const auto n = static_cast<std::size_t>(d);
  const int g = fam.genus();
  std::vector<ClaimCheck> out;
  auto y = [&](std::size_t c) { return unit_vector(n, c); };

  for (char claim : {'a', 'b', 'c', 'd'}) {
    const int last = (claim == 'a' || claim == 'b') ? g : g - 1;
    for (int i = 1; i <= last; ++i) {
      ClaimCheck chk;
      chk.claim = claim;
      chk.degree = d;
      chk.index = i;
      chk.samples = samples;
      const std::string si = std::to_string(i);
      const IntMatrix& phi = fam.matrix("phi_" + si);
      const IntMatrix& phi1 = fam.matrix("phi'_" + si);
      const std::size_t ai = fam.a(i), bi = fam.b(i);

      for (std::size_t s = 0; s < samples; ++s) {
        std::vector<std::size_t> targets;
        bool ok = true;
        RatVector v;
        if (claim == 'a') {
          v = draw_with(rng, n, bi);  // e_i != 0
          ok = ok && sub(act(phi, v), v) == scale(v[bi], y(ai));
          ok = ok && sub(act(phi1, y(ai)), y(ai)) == scale(-1, y(bi));
          targets = {ai, bi};
        } else if (claim == 'b') {
          v = draw_with(rng, n, ai);  // c_i != 0
          ok = ok && sub(act(phi1, v), v) == scale(-v[ai], y(bi));
          ok = ok && sub(act(phi, y(bi)), y(bi)) == y(ai);
          targets = {ai, bi};
        } else {
          const IntMatrix& phi2 = fam.matrix("phi''_" + si);
          const std::size_t ai1 = fam.a(i + 1), bi1 = fam.b(i + 1);
          v = draw_with(rng, n, claim == 'c' ? ai : ai1);
          // (phi''_i)(v) - v = (c_{i+1} - c_i)(y_{b_i} - y_{b_{i+1}})
          ok = ok && sub(act(phi2, v), v) == scale(v[ai1] - v[ai], sub(y(bi), y(bi1)));
          if (claim == 'c') {
            ok = ok && add(sub(act(phi2, y(ai)), y(ai)), y(bi)) == y(bi1);
            targets = {ai1};
          } else {
            ok = ok && add(sub(act(phi2, y(ai1)), y(ai1)), y(bi1)) == y(bi);
            targets = {ai};
          }
        }
        chk.identities_hold = chk.identities_hold && ok;
        const Subspace span = orbit_span(fam, v);
        for (std::size_t t : targets) chk.span_holds = chk.span_holds && span.contains(y(t));
      }
      out.push_back(chk);
    }
  }
  return out;
}

}  // namespace mlfw
