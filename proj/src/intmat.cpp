#include "prymlocus/intmat.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "prymlocus/error.hpp"

namespace prym {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw CapExceeded("integer overflow in lattice arithmetic");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw CapExceeded("integer overflow in lattice arithmetic");
  return out;
}

namespace {

// row_a -= factor * row_b
void subtract_multiple(IntRow& row_a, const IntRow& row_b, Int factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < row_a.size(); ++c) {
    row_a[c] = checked_add(row_a[c], -checked_mul(factor, row_b[c]));
  }
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    // Euclid on column entries until a single nonzero remains at pivot_row.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col]))) {
          best = r;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        subtract_multiple(rows[r], rows[pivot_row], rows[r][col] / rows[pivot_row][col]);
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    const Int pivot = rows[pivot_row][col];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      subtract_multiple(rows[r], rows[pivot_row], floor_div(rows[r][col], pivot));
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::vector<std::size_t> pivot_columns(const IntMatrix& hnf) {
  std::vector<std::size_t> pivots;
  for (const auto& row : hnf) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

Int bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact division is guaranteed by Sylvester's identity.
        m[i][j] = checked_add(checked_mul(m[i][j], m[k][k]), -checked_mul(m[i][k], m[k][j])) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rational_rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].numerator() == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].numerator() == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n);
  for (std::size_t r = 0; r < n; ++r) {
    m[r].assign(a[r].begin(), a[r].end());
    m[r].push_back(b[r]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].numerator() == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[c], m[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].numerator() == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> t(n);
  for (std::size_t r = 0; r < n; ++r) t[r] = m[r][n] / m[r][r];
  return t;
}

bool is_integral(const std::vector<Rational>& v) {
  for (const auto& x : v) {
    if (x.denominator() != 1) return false;
  }
  return true;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace prym
