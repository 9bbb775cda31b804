#include "ga/linalg.hpp"

#include <cstddef>

namespace ga::linalg {

namespace {

// Reduced row echelon form in place; returns the pivot column of each of the
// first `rank` rows. All arithmetic is exact.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m, m.front().size()).size());
}

Matrix nullspace(Matrix m, std::size_t cols) {
  const std::vector<std::size_t> pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row x(cols, Rational(0));
    x[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      x[pivots[r]] = -m[r][free];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace ga::linalg
