#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "omega/engine.hpp"
#include "omega/oneshot.hpp"

namespace omega {

struct Reordered {
  /// q_rows[slot] = rows[permutation[slot]].
  std::vector<std::size_t> permutation;
  std::vector<Row> q_rows;
};

/// Sorts the nonzero rows by row-length into the nonzero slots (ascending
/// slot order). Zero rows keep their positions, so zero rows never regroup.
inline Reordered reorder_prefix(std::span<const Row> rows) {
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_zero()) slots.push_back(i);
  }
  std::vector<std::size_t> by_length = slots;
  std::sort(by_length.begin(), by_length.end(),
            [&](std::size_t a, std::size_t b) { return *rows[a].maxs() < *rows[b].maxs(); });
  for (std::size_t i = 1; i < by_length.size(); ++i) {
    if (*rows[by_length[i]].maxs() == *rows[by_length[i - 1]].maxs()) {
      throw DuplicateLength(*rows[by_length[i]].maxs());
    }
  }
  Reordered out;
  out.permutation.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out.permutation[i] = i;
  for (std::size_t s = 0; s < slots.size(); ++s) out.permutation[slots[s]] = by_length[s];
  out.q_rows.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out.q_rows.push_back(rows[out.permutation[i]]);
  return out;
}

/// m(rows|_j) = max row-length over rows 0..j, for every j; empty (-1)
/// while the prefix holds only zero rows.
inline std::vector<std::optional<std::size_t>> prefix_max_lengths(std::span<const Row> rows) {
  std::vector<std::optional<std::size_t>> out;
  out.reserve(rows.size());
  std::optional<std::size_t> acc;
  for (const auto& r : rows) {
    if (auto m = r.maxs(); m && (!acc || *m > *acc)) acc = m;
    out.push_back(acc);
  }
  return out;
}

/// Reordering appended to every engine stage, with the per-stage history
/// of prefix maxima used for the stabilization report.
class ReorderState {
 public:
  const std::vector<std::size_t>& permutation() const noexcept { return current_.permutation; }
  const std::vector<Row>& q_rows() const noexcept { return current_.q_rows; }

  /// m_history()[s - history_start()][j] = m(Q^(s)|_j) for j <= s.
  const std::vector<std::vector<std::optional<std::size_t>>>& m_history() const noexcept {
    return history_;
  }
  std::size_t history_start() const noexcept { return history_start_; }

  /// Number of stages recorded so far, counting unrecorded seeded ones.
  std::size_t size() const noexcept { return current_.q_rows.size(); }

  /// Reorders the engine's current rows and records the new stage.
  void record(const EliminationState& base) {
    if (history_.empty()) history_start_ = base.size() - 1;
    current_ = reorder_prefix(base.rows());
    history_.push_back(prefix_max_lengths(current_.q_rows));
  }

 private:
  Reordered current_;
  std::vector<std::vector<std::optional<std::size_t>>> history_;
  std::size_t history_start_ = 0;
};

/// Last stage at which the reordered prefix Q|_k changed, read from the
/// history: the prefix changes exactly when its maximal row-length drops.
/// Stages before the first recorded one count as unobserved.
inline std::size_t qhf_prefix_stability(const ReorderState& state, std::size_t k) {
  const auto& h = state.m_history();
  if (h.empty() || k >= state.size()) throw IndexOutOfRange(k, state.size());
  const std::size_t start = state.history_start();
  std::size_t delta = std::max(k, start);
  for (std::size_t s = std::max(k + 1, start + 1); s < start + h.size(); ++s) {
    const auto before = index_or_minus_one(h[s - 1 - start][k]);
    const auto after = index_or_minus_one(h[s - start][k]);
    if (after < before) delta = s;
  }
  return delta;
}

struct ExtendedRun {
  EliminationState base;
  ReorderState reorder;
};

/// Engine stages 0..n, each followed by the reordering routine. With a
/// seed, stages 0..seed come from the one-shot reduction and history is
/// recorded from the seed stage on.
inline ExtendedRun extended_run(const RowFiniteMatrix& m, std::size_t n,
                                std::optional<std::size_t> seed = std::nullopt) {
  ExtendedRun run{seed ? reduce_oneshot(m, std::min(*seed, n))
                       : EliminationState(m.field(), Strategy::rps, m.certificate()),
                  ReorderState{}};
  if (!run.base.empty()) run.reorder.record(run.base);
  for (std::size_t k = run.base.size(); k <= n; ++k) {
    run.base.step(m.row(k));
    run.reorder.record(run.base);
  }
  return run;
}

}  // namespace omega
