#pragma once

#include "macfrob/bigint.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace macfrob {

template <class F>
using MatrixRows = std::vector<std::vector<typename F::Elem>>;

/// In-place reduced row echelon form, pivoting on columns left to right
/// (column 0 first, i.e. the largest monomial when columns follow a
/// graded basis). Returns the rank; rows[0..rank) hold the reduced
/// basis, the rest are zero.
template <class F>
std::size_t reduced_row_echelon(const F& f, MatrixRows<F>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (!f.is_zero(rows[i][c])) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    auto scale = f.inv(rows[r][c]);
    for (std::size_t k = c; k < cols; ++k) rows[r][k] = f.mul(rows[r][k], scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || f.is_zero(rows[i][c])) continue;
      auto factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
      }
    }
    ++r;
  }
  return r;
}

/// Exact rank; consumes a copy of the rows.
template <class F>
std::size_t matrix_rank(const F& f, MatrixRows<F> rows) {
  return reduced_row_echelon(f, rows);
}

/// Rank of an integer matrix over the rationals (used for lattice ranks
/// such as the Krull dimension of a monomial subalgebra).
std::size_t integer_matrix_rank(const std::vector<std::vector<std::int64_t>>& rows);

}  // namespace macfrob
