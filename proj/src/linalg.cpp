#include "arclift/linalg.hpp"

namespace arclift {

std::optional<QVector> solve_linear(QMatrix a, QVector b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw Error("solve_linear: shape mismatch");
  for (const auto& row : a)
    if (row.size() != cols) throw Error("solve_linear: ragged matrix");

  std::vector<size_t> pivot_col;  // pivot column of each eliminated row
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; c++) {
    size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) piv++;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    Rational inv = a[r][c].inv();
    for (size_t k = c; k < cols; k++) a[r][k] = a[r][k] * inv;
    b[r] = b[r] * inv;
    for (size_t i = 0; i < rows; i++) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (size_t k = c; k < cols; k++) a[i][k] = a[i][k] - f * a[r][k];
      b[i] = b[i] - f * b[r];
    }
    pivot_col.push_back(c);
    r++;
  }
  // Inconsistency: a zero row with nonzero right-hand side.
  for (size_t i = r; i < rows; i++)
    if (!b[i].is_zero()) return std::nullopt;

  QVector x(cols, Rational(0));  // free variables pinned to 0
  for (size_t i = 0; i < pivot_col.size(); i++) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace arclift
