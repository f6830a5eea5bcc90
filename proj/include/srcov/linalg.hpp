#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srcov/galois.hpp"

namespace srcov::linalg {

using Matrix = std::vector<std::vector<uint32_t>>;

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<uint32_t> rref(const galois::Field& f, Matrix& rows, uint32_t ncols) {
  std::vector<uint32_t> pivots;
  size_t r = 0;
  for (uint32_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    uint32_t piv = f.inv(rows[r][c]);
    for (uint32_t j = c; j < ncols; ++j) rows[r][j] = f.mul(rows[r][j], piv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      uint32_t factor = rows[i][c];
      for (uint32_t j = c; j < ncols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);  // drop zero rows
  return pivots;
}

inline uint32_t rank(const galois::Field& f, Matrix rows, uint32_t ncols) {
  return static_cast<uint32_t>(rref(f, rows, ncols).size());
}

// Basis of the null space of the row space of `rows` (i.e. parity-check
// rows for the code generated by `rows`), ncols - rank vectors.
inline Matrix nullspace(const galois::Field& f, Matrix rows, uint32_t ncols) {
  std::vector<uint32_t> pivots = rref(f, rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (uint32_t c : pivots) is_pivot[c] = true;
  Matrix out;
  for (uint32_t free_c = 0; free_c < ncols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<uint32_t> v(ncols, 0);
    v[free_c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(rows[i][free_c]);
    out.push_back(std::move(v));
  }
  return out;
}

inline std::optional<Matrix> invert(const galois::Field& f, const Matrix& a) {
  size_t n = a.size();
  Matrix aug(n, std::vector<uint32_t>(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<uint32_t> pivots = rref(f, aug, static_cast<uint32_t>(2 * n));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, std::vector<uint32_t>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace srcov::linalg
