#pragma once

#include <cstddef>
#include <vector>

#include "omega/engine.hpp"

namespace omega {

/// Non-incremental rightmost-pivot Gauss-Jordan reduction of the dense
/// top submatrix rows 0..n, augmented with the identity.
///
/// Columns are swept from right to left; each column's pivot is the first
/// still unused row with a nonzero entry there. That choice places every
/// reduced row at the index where the staged algorithm creates it, and the
/// passage rows coincide because each passage row is the unique
/// combination of the independent input rows that produces it.
///
/// History is not available to a one-shot pass: nonzero rows report
/// last_changed = n, zero rows their own index (zero rows never change).
inline EliminationState reduce_oneshot(const RowFiniteMatrix& m, std::size_t n) {
  const Field& f = m.field();
  const std::vector<Row> top = m.top_submatrix(n);
  const auto horizon = column_horizon(top);
  const std::size_t width = horizon ? *horizon + 1 : 0;
  const std::size_t height = n + 1;

  // Columns [0, width) hold the input, [width, width + height) the identity.
  std::vector<std::vector<Scalar>> dense(height,
                                         std::vector<Scalar>(width + height, f.zero()));
  for (std::size_t i = 0; i < height; ++i) {
    for (const auto& [c, v] : top[i].entries()) dense[i][c] = v;
    dense[i][width + i] = f.one();
  }

  std::vector<bool> used(height, false);
  for (std::size_t col = width; col-- > 0;) {
    std::size_t pivot = height;
    for (std::size_t i = 0; i < height; ++i) {
      if (!used[i] && !dense[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == height) continue;
    used[pivot] = true;
    const Scalar inv = dense[pivot][col].inv();
    for (auto& x : dense[pivot]) x *= inv;
    for (std::size_t i = 0; i < height; ++i) {
      if (i == pivot || dense[i][col].is_zero()) continue;
      const Scalar factor = dense[i][col];
      for (std::size_t c = 0; c < width + height; ++c) {
        if (!dense[pivot][c].is_zero()) dense[i][c] -= factor * dense[pivot][c];
      }
    }
  }

  std::vector<Row> rows;
  std::vector<Row> passage;
  std::vector<std::size_t> last_changed;
  for (std::size_t i = 0; i < height; ++i) {
    std::vector<Row::Entry> lhs;
    std::vector<Row::Entry> rhs;
    for (std::size_t c = 0; c < width; ++c) {
      if (!dense[i][c].is_zero()) lhs.emplace_back(c, dense[i][c]);
    }
    for (std::size_t c = 0; c < height; ++c) {
      if (!dense[i][width + c].is_zero()) rhs.emplace_back(c, dense[i][width + c]);
    }
    rows.push_back(Row::from_pairs(f, std::move(lhs)));
    passage.push_back(Row::from_pairs(f, std::move(rhs)));
    last_changed.push_back(rows.back().is_zero() ? i : n);
  }
  return EliminationState::restore(f, std::move(rows), std::move(passage),
                                   std::move(last_changed), Strategy::rps, m.certificate());
}

/// Seeds stages 0..seed with the one-shot reduction, then continues
/// incrementally through stage n. Rows, passage and pivots agree with
/// run_to(m, n) exactly.
inline EliminationState run_to_seeded(const RowFiniteMatrix& m, std::size_t n, std::size_t seed) {
  EliminationState state = reduce_oneshot(m, std::min(seed, n));
  advance(state, m, n);
  return state;
}

}  // namespace omega
