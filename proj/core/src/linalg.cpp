#include "mlfw/linalg.hpp"

#include <stdexcept>

namespace mlfw {

IntMatrix int_matrix(std::size_t rows, std::size_t cols, const std::vector<long>& entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("int_matrix: wrong entry count");
  std::vector<Integer> data(entries.begin(), entries.end());
  return IntMatrix(rows, cols, std::move(data));
}

RatMatrix to_rational(const IntMatrix& m) {
  std::vector<Rational> data(m.data().begin(), m.data().end());
  return RatMatrix(m.rows(), m.cols(), std::move(data));
}

IntMatrix matrix_power(const IntMatrix& m, unsigned long n) {
  if (!m.square()) throw std::invalid_argument("matrix_power needs a square matrix");
  IntMatrix acc = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    n >>= 1UL;
    if (n > 0) base = base * base;
  }
  return acc;
}

std::vector<RatVector> rref(std::vector<RatVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t piv = lead;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[lead]);
    Rational inv = 1 / rows[lead][c];
    for (Rational& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c] == 0) continue;
      Rational f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[lead][k];
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

std::size_t rank(const std::vector<RatVector>& rows) { return rref(rows).size(); }

std::size_t rank(const RatMatrix& m) {
  std::vector<RatVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.data().begin() + r * m.cols(), m.data().begin() + (r + 1) * m.cols());
  return rank(rows);
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  std::vector<RatVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.data().begin() + r * m.cols(), m.data().begin() + (r + 1) * m.cols());
  auto red = rref(std::move(rows));
  const std::size_t n = m.cols();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (const auto& row : red) {
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c] != 0) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
    }
  }
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < red.size(); ++r) v[pivot_col[r]] = -red[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<RatVector> aug(n, RatVector(2 * n, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = m(r, c);
    aug[r][n + r] = 1;
  }
  auto red = rref(std::move(aug));
  if (red.size() < n) throw std::domain_error("matrix is singular");
  RatMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (red[r][r] != 1) throw std::domain_error("matrix is singular");
    for (std::size_t c = 0; c < n; ++c) out(r, c) = red[r][n + c];
  }
  return out;
}

bool SparseEliminator::insert(Row row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second == 0) {
      it = row.erase(it);
    } else {
      ++it;
    }
  }
  while (!row.empty()) {
    auto [col, coeff] = *row.begin();
    if (col >= columns_) throw std::out_of_range("sparse row column out of range");
    auto piv = pivots_.find(col);
    if (piv == pivots_.end()) {
      Rational inv = 1 / coeff;
      for (auto& [c, v] : row) v *= inv;
      pivots_.emplace(col, std::move(row));
      return true;
    }
    Rational f = coeff;
    for (const auto& [c, v] : piv->second) {
      Rational& slot = row[c];
      slot -= f * v;
      if (slot == 0) row.erase(c);
    }
  }
  return false;
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace mlfw
