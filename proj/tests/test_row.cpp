#include <gtest/gtest.h>

#include "omega/linform.hpp"
#include "omega/row.hpp"

using omega::Field;
using omega::LinForm;
using omega::Row;
using omega::Symbol;

namespace {
const Field Q = Field::rational();
Row r(std::vector<std::pair<std::size_t, long long>> xs) {
  std::vector<Row::Entry> p;
  for (auto [c, v] : xs) p.emplace_back(c, Q.from_int(v));
  return Row::from_pairs(Q, p);
}
}  // namespace

TEST(Row, IndicesAndZeroRow) {
  const Row z(Q);
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.maxs());
  EXPECT_EQ(omega::index_or_minus_one(z.maxs()), -1);
  const Row a = r({{5, 2}, {1, -1}, {3, 0}});
  EXPECT_EQ(a.support_size(), 2u);
  EXPECT_EQ(*a.maxs(), 5u);
  EXPECT_EQ(*a.zeta(), 1u);
  EXPECT_EQ(a.to_sparse_string(), "1:-1 5:2");
  EXPECT_TRUE(a.get(3).is_zero());
  EXPECT_EQ(a.right_leading().to_string(), "2");
  EXPECT_EQ(a.left_leading().to_string(), "-1");
}

TEST(Row, AxpyCancelsExactly) {
  const Row a = r({{0, 1}, {2, 3}});
  const Row b = r({{2, 1}, {4, 1}});
  const Row c = omega::axpy(Q.from_int(-3), b, a);
  EXPECT_EQ(c.to_sparse_string(), "0:1 4:-3");
  EXPECT_TRUE(omega::axpy(Q.from_int(-1), a, a).is_zero());
}

TEST(Row, Normalization) {
  const Row a = r({{0, 4}, {3, 2}});
  EXPECT_EQ(omega::normalize_rightmost(a).to_sparse_string(), "0:2 3:1");
  EXPECT_EQ(omega::normalize_leftmost(a).to_sparse_string(), "0:1 3:1/2");
  EXPECT_TRUE(omega::normalize_rightmost(Row(Q)).is_zero());
}

TEST(Row, Errors) {
  EXPECT_THROW(Row::from_pairs(Q, {{1, Q.one()}, {1, Q.one()}}), omega::Error);
  EXPECT_THROW(Row::from_pairs(Q, {{1, Field::gf(3).one()}}), omega::FieldMismatch);
  EXPECT_THROW(omega::axpy(Q.one(), Row::unit(Field::gf(3), 0), Row(Q)), omega::FieldMismatch);
}

TEST(Row, Dense) {
  const auto d = r({{1, 2}, {4, 1}}).to_dense(5);
  ASSERT_EQ(d.size(), 6u);
  EXPECT_EQ(d[1].to_string(), "2");
  EXPECT_TRUE(d[5].is_zero());
}

TEST(Row, Combine) {
  const Row coeffs = r({{0, 1}, {2, -1}});
  std::vector<Row> rows{r({{0, 1}, {1, 1}}), r({{9, 1}}), r({{1, 1}, {2, 1}})};
  const Row out = omega::combine(coeffs, [&](std::size_t j) -> const Row& { return rows[j]; }, Q);
  EXPECT_EQ(out.to_sparse_string(), "0:1 2:-1");
}

TEST(LinForm, Rendering) {
  LinForm f(Q);
  f.add_term(Symbol::rhs("s", 1), Q.one());
  f.add_term(Symbol::rhs("s", 0), -Q.one());
  EXPECT_EQ(f.to_string(), "-s_0 + s_1");
  LinForm g(Q);
  g.add_term(Symbol::param(1), Q.parse("1/2"));
  g.add_term(Symbol::rhs("c", 2), Q.from_int(2));
  EXPECT_EQ(g.to_string(), "2*c_2 + 1/2*t_1");
  EXPECT_EQ(LinForm(Q).to_string(), "0");
  EXPECT_EQ(LinForm::constant(Q.from_int(-3)).to_string(), "-3");
}

TEST(LinForm, ConstraintRenderingLeadsWithHighestIndex) {
  LinForm f(Q);
  f.add_term(Symbol::rhs("c", 0), -Q.one());
  f.add_term(Symbol::rhs("c", 2), Q.from_int(-2));
  f.add_term(Symbol::rhs("c", 3), Q.one());
  EXPECT_EQ(f.to_constraint_string(), "c_3 - c_0 - 2*c_2 = 0");
  EXPECT_EQ(LinForm::symbol(Q, Symbol::rhs("c", 1)).to_constraint_string(), "c_1 = 0");
}

TEST(LinForm, CancellationAndEval) {
  LinForm f = LinForm::symbol(Q, Symbol::param(0));
  f = omega::axpy(-Q.one(), LinForm::symbol(Q, Symbol::param(0)), f);
  EXPECT_TRUE(f.is_zero());
  LinForm g = LinForm::symbol(Q, Symbol::rhs("c", 0));
  g.add_term(Symbol::param(0), Q.from_int(3));
  g.add_constant(Q.one());
  const auto v = omega::eval(g, {{Symbol::rhs("c", 0), Q.from_int(2)}, {Symbol::param(0), Q.from_int(1)}});
  EXPECT_EQ(v.to_string(), "6");
  EXPECT_TRUE(g.mentions_params());
  EXPECT_NE(Symbol::rhs("t", 0), Symbol::param(0));
}
