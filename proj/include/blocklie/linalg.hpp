#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "blocklie/scalar.hpp"

namespace blocklie::linalg {

template <class Field>
using Matrix = std::vector<std::vector<Field>>;

/// In-place reduced row echelon form by exact Gauss-Jordan elimination.
/// Returns the pivot column of each nonzero row; zero rows are dropped.
template <class Field>
std::vector<std::size_t> rref(Matrix<Field>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && is_zero(a[sel][col])) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Field inv = Field(1) / a[row][col];
    for (std::size_t k = col; k < cols; ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || is_zero(a[r][col])) continue;
      const Field factor = a[r][col];
      for (std::size_t k = col; k < cols; ++k) a[r][k] -= factor * a[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return pivots;
}

template <class Field>
std::size_t rank(Matrix<Field> a, std::size_t cols) {
  return rref(a, cols).size();
}

/// Canonical nullspace basis: one vector per free column, with that column set
/// to 1 and every other free column set to 0.
template <class Field>
std::vector<std::vector<Field>> nullspace(Matrix<Field> a, std::size_t cols) {
  const std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Field>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Field> v(cols, Field(0));
    v[free] = Field(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = b; among all solutions returns the one with every free variable
/// zero (the reduced-echelon representative). nullopt if inconsistent.
template <class Field>
std::optional<std::vector<Field>> solve(const Matrix<Field>& a, const std::vector<Field>& b, std::size_t cols) {
  Matrix<Field> aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const std::vector<std::size_t> pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Field> x(cols, Field(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

}  // namespace blocklie::linalg
