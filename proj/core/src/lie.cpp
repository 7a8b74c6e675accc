#include "mlfw/lie.hpp"

#include <algorithm>

#include "mlfw/symplectic.hpp"

namespace mlfw {

namespace {

std::vector<PadicScalar> flatten(const PadicMatrix& m) { return m.entries(); }

unsigned long residue_order(const IntMatrix& m, std::uint32_t p) {
  const ResidueMatrix r = ResidueMatrix::reduce(m, p);
  if (!r.invertible()) throw std::invalid_argument("generator is not invertible mod p");
  const ResidueMatrix id = ResidueMatrix::identity(p, m.rows());
  ResidueMatrix cur = r;
  unsigned long t = 1;
  while (!(cur == id)) {
    cur = cur * r;
    ++t;
  }
  return t;
}

std::int64_t max_significant_valuation(const PadicMatrix& m) {
  std::int64_t v = 0;
  for (const auto& e : m.entries())
    if (!e.is_zero()) v = std::max(v, e.valuation());
  return v;
}

}  // namespace

LieDimension lie_dimension_lower_bound(const std::vector<IntMatrix>& gens, std::uint32_t p, std::int64_t N) {
  if (p == 2) throw std::domain_error("p = 2 is not supported");
  if (N < 2) throw std::invalid_argument("precision must be >= 2");
  LieDimension out;
  std::vector<PadicMatrix> basis;
  std::vector<std::vector<PadicScalar>> rows;

  // Adds x when it raises the certified rank. Rejections are exact only when
  // the residual is an exact zero or the span is already everything.
  auto try_add = [&](const PadicMatrix& x) {
    if (x.is_exact_zero()) return false;
    const std::size_t ambient = x.size() * x.size();
    if (x.is_zero()) {
      if (basis.size() < ambient) out.closure_certified = false;
      return false;
    }
    auto trial = rows;
    trial.push_back(flatten(x));
    PadicRank r = padic_rank(trial);
    out.residual_precision = r.residual_precision;
    if (r.rank > basis.size()) {
      basis.push_back(x);
      rows.push_back(flatten(x));
      return true;
    }
    if (r.residual_precision == PadicScalar::kInfinity || basis.size() == ambient) return false;
    if (r.residual_precision <= max_significant_valuation(x)) {
      throw PrecisionError("precision " + std::to_string(N) +
                           " exhausted before the bracket closure stabilized; rerun with a larger --precision");
    }
    out.closure_certified = false;
    return false;
  };

  for (const IntMatrix& m : gens) {
    if (!m.square()) throw std::invalid_argument("generators must be square");
    unsigned long t = residue_order(m, p);
    out.powers.push_back(t);
    // Integer input is exact; unipotent logs then terminate exactly.
    const PadicMatrix mt = PadicMatrix::exact(p, matrix_power(m, t));
    try_add(matrix_log(mt, N));
  }

  bool grew = true;
  while (grew) {
    grew = false;
    ++out.sweeps;
    const std::size_t current = basis.size();
    for (std::size_t i = 0; i < current; ++i)
      for (std::size_t j = i + 1; j < current; ++j)
        if (try_add(bracket(basis[i], basis[j]))) grew = true;
  }
  out.dimension = basis.size();
  if (!basis.empty() && out.dimension == basis.front().size() * basis.front().size()) out.closure_certified = true;
  return out;
}

std::vector<RatMatrix> sp_basis(int g) {
  const SymplecticForm form(g);
  const RatMatrix j = to_rational(form.matrix());
  const std::size_t n = j.rows();
  // Row (r, c) of the system: (X^T J + J X)_{rc} as a linear form in X.
  RatMatrix system(n * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t eq = r * n + c;
      for (std::size_t k = 0; k < n; ++k) {
        system(eq, k * n + r) += j(k, c);  // X_{kr} J_{kc}
        system(eq, k * n + c) += j(r, k);  // J_{rk} X_{kc}
      }
    }
  std::vector<RatMatrix> out;
  for (const RatVector& v : nullspace(system)) out.emplace_back(n, n, v);
  return out;
}

std::size_t sp_lie_dimension(int g) { return sp_basis(g).size(); }

BracketWitness sp_bracket_witness(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const std::size_t dim = static_cast<std::size_t>(2 * n);
  RatMatrix x(dim, dim), y(dim, dim);
  x(0, 1) = 1;
  y(1, 0) = 1;
  const RatMatrix j = to_rational(SymplecticForm(n).matrix());
  for (const RatMatrix* m : {&x, &y}) {
    if (!(m->transpose() * j + j * *m).is_zero()) throw std::logic_error("witness is not in sp");
  }
  return {x, y, x * y - y * x};
}

bool sp_bracket_nontrivial(int n) { return !sp_bracket_witness(n).bracket.is_zero(); }

GroupAlgebraSpec::GroupAlgebraSpec(FiniteGroup h) : group(std::move(h)), representation(regular_representation(group)) {}

std::size_t commutant_dimension(const GroupAlgebraSpec& spec) {
  const std::size_t n = spec.group.order();
  SparseEliminator elim(n * n);
  for (const Perm& perm : spec.representation) {
    if (perm.size() != n) throw std::invalid_argument("representation has the wrong degree");
    Perm inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = static_cast<std::uint32_t>(i);
    // (XP)_{ij} = X_{i,perm(j)} and (PX)_{ij} = X_{perm^-1(i),j}.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t jj = 0; jj < n; ++jj) {
        const std::size_t lhs = i * n + perm[jj];
        const std::size_t rhs = inv[i] * n + jj;
        if (lhs == rhs) continue;
        elim.insert({{lhs, Rational(1)}, {rhs, Rational(-1)}});
      }
  }
  return n * n - elim.rank();
}

DimensionComparison compare_dimensions(int g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  DimensionComparison c;
  c.g = g;
  c.sp_dimension = sp_lie_dimension(g);
  c.bound = static_cast<std::size_t>(2 * g + 1);
  c.exceeds = c.sp_dimension > c.bound;
  c.flagged = !c.exceeds;
  return c;
}

}  // namespace mlfw
