#include <gtest/gtest.h>

#include <random>

#include "omega/canon.hpp"
#include "omega/reorder.hpp"
#include "omega/solver.hpp"
#include "support/fixtures.hpp"
#include "support/random_rows.hpp"

using fixtures::e;
using omega::Field;
using omega::Row;

namespace {
const Field Q = Field::rational();

/// Stabilization read directly from the reordered rows: the last stage at
/// which rows 0..k of the reordered prefix differ from the previous stage.
std::vector<std::size_t> delta_by_content(const omega::RowFiniteMatrix& m, std::size_t n) {
  omega::EliminationState s(m.field());
  std::vector<std::vector<Row>> history;
  for (std::size_t k = 0; k <= n; ++k) {
    s.step(m.row(k));
    history.push_back(omega::reorder_prefix(s.rows()).q_rows);
  }
  std::vector<std::size_t> delta;
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t d = k;
    for (std::size_t st = k + 1; st <= n; ++st) {
      for (std::size_t j = 0; j <= k; ++j) {
        if (!(history[st][j] == history[st - 1][j])) d = st;
      }
    }
    delta.push_back(d);
  }
  return delta;
}
}  // namespace

TEST(Reorder, OperatorMatrixQuasiHermiteForm) {
  const auto m = omega::builtin::pde_operator();
  const auto run = omega::extended_run(m, 9);
  const auto h = fixtures::pde_hermite();
  ASSERT_EQ(run.reorder.q_rows().size(), h.size());
  for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(run.reorder.q_rows()[i], h[i]) << i;
  EXPECT_TRUE(omega::is_qhf(run.reorder.q_rows()));

  std::vector<Row> q;
  for (std::size_t i : run.reorder.permutation()) q.push_back(run.base.passage()[i]);
  const auto expected = fixtures::pde_passage();
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(q[i], expected[i]) << i;
  EXPECT_TRUE(omega::verify_row_equivalence(q, m, run.reorder.q_rows(), 9));

  EXPECT_EQ(omega::qhf_prefix_stability(run.reorder, 6), 9u);
  EXPECT_EQ(omega::qhf_prefix_stability(run.reorder, 9), 9u);
  EXPECT_EQ(omega::rank_nullity(run.base.rows()), (omega::RankNullity{8, 2}));
  // Rows 0..6 of the unreordered prefix last change at stage 6.
  EXPECT_EQ(run.base.prefix_stability(6), 6u);
  EXPECT_EQ(run.base.prefix_stability(9), 9u);
}

TEST(Reorder, ZeroSlotsStayPut) {
  const std::vector<Row> rows{e(5), Row(Q), e(2), e(7), Row(Q), e(0)};
  const auto r = omega::reorder_prefix(rows);
  EXPECT_EQ(r.permutation, (std::vector<std::size_t>{5, 1, 2, 0, 4, 3}));
  EXPECT_TRUE(r.q_rows[1].is_zero());
  EXPECT_TRUE(r.q_rows[4].is_zero());
  EXPECT_TRUE(omega::is_qhf(r.q_rows));
  EXPECT_TRUE(omega::same_nonzero_rows(rows, r.q_rows));
  EXPECT_THROW(omega::reorder_prefix(std::vector<Row>{e(1), e(1)}), omega::DuplicateLength);
}

TEST(Reorder, PrefixMaxima) {
  const std::vector<Row> rows{Row(Q), e(4), e(2), Row(Q), e(9)};
  const auto m = omega::prefix_max_lengths(rows);
  EXPECT_FALSE(m[0]);
  EXPECT_EQ(*m[1], 4u);
  EXPECT_EQ(*m[2], 4u);
  EXPECT_EQ(*m[4], 9u);
}

TEST(Reorder, MaxHistoryAgreesWithContentTracking) {
  std::vector<omega::RowFiniteMatrix> ms{omega::builtin::pde_operator(), omega::builtin::fulkerson(),
                                         omega::builtin::bidiag(), omega::builtin::repeated()};
  std::mt19937_64 rng(omega::omega_seed());
  for (int t = 0; t < 40; ++t) {
    const Field f = t % 2 ? Field::gf(7) : Q;
    ms.push_back(testing_support::as_matrix(f, testing_support::random_rows(f, rng, {25, 6, 30})));
  }
  for (const auto& m : ms) {
    const std::size_t n = 24;
    const auto run = omega::extended_run(m, n);
    const auto expected = delta_by_content(m, n);
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(omega::qhf_prefix_stability(run.reorder, k), expected[k]) << m.name() << " k=" << k;
    }
  }
}

TEST(Reorder, SeededRunMatchesPlainRun) {
  const auto m = omega::builtin::pde_operator();
  const auto plain = omega::extended_run(m, 20);
  const auto seeded = omega::extended_run(m, 20, 9);
  EXPECT_EQ(seeded.reorder.q_rows(), plain.reorder.q_rows());
  EXPECT_EQ(seeded.reorder.permutation(), plain.reorder.permutation());
  EXPECT_EQ(seeded.reorder.history_start(), 9u);
  EXPECT_EQ(omega::qhf_prefix_stability(seeded.reorder, 15), omega::qhf_prefix_stability(plain.reorder, 15));
  EXPECT_THROW(omega::qhf_prefix_stability(seeded.reorder, 21), omega::IndexOutOfRange);
}
