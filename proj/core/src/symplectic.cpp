#include "mlfw/symplectic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace mlfw {

IntMatrix abelianize(const Endomorphism& e, const std::vector<Generator>& basis) {
  const Alphabet& alpha = *e.alphabet();
  const std::size_t n = basis.size();
  std::vector<int> coord(alpha.size(), -1);
  for (std::size_t j = 0; j < n; ++j) {
    auto idx = alpha.index_of(basis[j]);
    if (coord[idx] >= 0) throw std::invalid_argument("basis lists a generator twice");
    coord[idx] = static_cast<int>(j);
  }
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto sums = e.image(basis[j]).exponent_sums();
    for (std::size_t k = 0; k < sums.size(); ++k) {
      if (sums[k] == 0) continue;
      if (coord[k] < 0) {
        throw std::invalid_argument("image of " + basis[j].label() + " involves " + alpha.at(k).label() +
                                    ", which is outside the basis");
      }
      m(static_cast<std::size_t>(coord[k]), j) = static_cast<long>(sums[k]);
    }
  }
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (coord[k] >= 0) continue;
    auto sums = e.image(k).exponent_sums();
    for (std::size_t t = 0; t < sums.size(); ++t) {
      if (sums[t] != 0 && coord[t] >= 0) {
        throw std::invalid_argument("inert generator " + alpha.at(k).label() + " is sent into the basis span");
      }
    }
  }
  return m;
}

SymplecticForm::SymplecticForm(int g) : g_(g) {
  if (g < 1) throw std::invalid_argument("symplectic form needs genus >= 1");
  const auto n = static_cast<std::size_t>(2 * g);
  j_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; i += 2) {
    j_(i, i + 1) = 1;
    j_(i + 1, i) = -1;
  }
}

bool is_symplectic(const IntMatrix& m, const SymplecticForm& form) {
  const IntMatrix& j = form.matrix();
  if (m.rows() != j.rows() || m.cols() != j.cols()) {
    throw std::invalid_argument("matrix and symplectic form have different dimensions");
  }
  return m.transpose() * j * m == j;
}

PrimePower factor_prime_power(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be a prime power >= 2");
  std::uint64_t p = 0;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      p = q;
      break;
    }
  }
  if (p == 0) return {m, 1};
  unsigned k = 0;
  std::uint64_t rest = m;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw std::invalid_argument(std::to_string(m) + " is not a prime power");
  return {p, k};
}

Integer sp_order(int g, std::uint64_t m) {
  if (g < 1) throw std::invalid_argument("sp_order needs genus >= 1");
  auto [p, k] = factor_prime_power(m);
  Integer pz(static_cast<unsigned long>(p));
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>((k - 1) * (2 * g * g + g) + g * g));
  for (int i = 1; i <= g; ++i) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(2 * i));
    result *= t - 1;
  }
  return result;
}

// ---------------------------------------------------------------------------

ResidueMatrix::ResidueMatrix(std::uint32_t modulus, std::size_t n)
    : modulus_(modulus), n_(n), entries_(n * n, 0) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
}

ResidueMatrix ResidueMatrix::reduce(const IntMatrix& m, std::uint32_t modulus) {
  if (!m.square()) throw std::invalid_argument("residue matrices are square");
  ResidueMatrix r(modulus, m.rows());
  Integer mod(modulus);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer v = m(i, j) % mod;
      if (v < 0) v += mod;
      r(i, j) = static_cast<std::uint32_t>(v.get_ui());
    }
  return r;
}

ResidueMatrix ResidueMatrix::identity(std::uint32_t modulus, std::size_t n) {
  ResidueMatrix r(modulus, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1 % modulus;
  return r;
}

std::int64_t ResidueMatrix::determinant() const {
  // Bareiss on the integer lift, then reduce.
  std::vector<Integer> a(entries_.begin(), entries_.end());
  const std::size_t n = n_;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[swap_row * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    prev = a[k * n + k];
  }
  Integer det = n == 0 ? Integer(1) : a[n * n - 1] * sign;
  Integer mod(modulus_);
  det %= mod;
  if (det < 0) det += mod;
  return static_cast<std::int64_t>(det.get_si());
}

bool ResidueMatrix::invertible() const {
  return std::gcd(static_cast<std::uint64_t>(determinant()), static_cast<std::uint64_t>(modulus_)) == 1;
}

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.modulus_ != b.modulus_ || a.n_ != b.n_) throw std::invalid_argument("residue matrices do not match");
  const std::size_t n = a.n_;
  ResidueMatrix out(a.modulus_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += static_cast<std::uint64_t>(a(i, k)) * b(k, j);
      out(i, j) = static_cast<std::uint32_t>(acc % a.modulus_);
    }
  return out;
}

std::size_t ResidueMatrixHash::operator()(const ResidueMatrix& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.entries()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<ResidueMatrix> generate_quotient(const std::vector<IntMatrix>& gens, std::uint32_t m,
                                             std::size_t limit) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  const std::size_t n = gens.front().rows();
  const ResidueMatrix id = ResidueMatrix::identity(m, n);

  std::vector<ResidueMatrix> step;
  for (const IntMatrix& g : gens) {
    if (g.rows() != n || !g.square()) throw std::invalid_argument("generators must share one square shape");
    ResidueMatrix r = ResidueMatrix::reduce(g, m);
    if (!r.invertible()) throw std::invalid_argument("generator is not invertible modulo " + std::to_string(m));
    // r has finite order in GL_n(Z/m), so its inverse is a power of r.
    ResidueMatrix inv = id;
    ResidueMatrix cur = r;
    std::size_t guard = 0;
    while (!(cur == id)) {
      inv = cur;
      cur = cur * r;
      if (++guard > limit) throw std::length_error("generator order exceeds the closure limit");
    }
    step.push_back(r);
    step.push_back(inv);
  }
  std::sort(step.begin(), step.end());
  step.erase(std::unique(step.begin(), step.end()), step.end());

  std::unordered_set<ResidueMatrix, ResidueMatrixHash> seen{id};
  std::vector<ResidueMatrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<ResidueMatrix> next;
    for (const ResidueMatrix& x : frontier) {
      for (const ResidueMatrix& s : step) {
        ResidueMatrix y = x * s;
        if (seen.insert(y).second) {
          if (seen.size() > limit) throw std::length_error("closure exceeds the size limit");
          next.push_back(std::move(y));
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<ResidueMatrix> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntMatrix> surface_twist_matrices(int g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  PresentationSpec spec(2 * g + 1);
  auto surf = Alphabet::surface(g);
  std::vector<IntMatrix> out;
  for (const auto& member : twist_family(spec)) {
    out.push_back(abelianize(spec.to_surface(member.map), surf->generators()));
  }
  return out;
}

std::string to_json(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += "\"" + m(r, c).get_str() + "\"";
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace mlfw
