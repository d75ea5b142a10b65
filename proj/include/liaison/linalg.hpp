#pragma once

// Dense row reduction over a coefficient field.

#include <utility>
#include <vector>

#include "liaison/field.hpp"

namespace liaison {

template <CoefficientField F>
using DenseRow = std::vector<typename F::Element>;

/// Reduced row echelon form in place; returns the pivot column of each
/// surviving row (zero rows are dropped).
template <CoefficientField F>
std::vector<int> row_reduce(const F& field, std::vector<DenseRow<F>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && field.is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    auto inv = field.inv(rows[r][c]);
    for (auto& v : rows[r]) v = field.mul(v, inv);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || field.is_zero(rows[k][c])) continue;
      auto factor = rows[k][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (!field.is_zero(rows[r][j])) rows[k][j] = field.sub(rows[k][j], field.mul(factor, rows[r][j]));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

template <CoefficientField F>
int rank(const F& field, std::vector<DenseRow<F>> rows) {
  return static_cast<int>(row_reduce(field, rows).size());
}

}  // namespace liaison
