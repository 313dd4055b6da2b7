#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "omega/io.hpp"
#include "omega/matrix_spec.hpp"

using omega::Field;
using omega::MatrixSpec;
using omega::ParseError;

namespace {

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t error_line(const std::string& text) {
  try {
    omega::parse_spec(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Spec, StencilAndExplicit) {
  const auto a = omega::parse_spec("field rational\nkind stencil\nstencil 0:1 1:1\n");
  EXPECT_EQ(a.kind, MatrixSpec::Kind::stencil);
  const auto m = omega::to_matrix(a);
  EXPECT_EQ(m.row(3).to_sparse_string(), "3:1 4:1");

  const auto b = omega::parse_spec("field gf 7\nkind explicit\nrow 0 2:1 3:1\ntail zero\n");
  EXPECT_EQ(b.field, Field::gf(7));
  const auto mb = omega::to_matrix(b);
  EXPECT_EQ(mb.row(0).to_sparse_string(), "2:1 3:1");
  EXPECT_TRUE(mb.row(1).is_zero());

  const auto c = omega::parse_spec("# comment\n\nfield rational   # trailing\nkind builtin\nbuiltin pde\nfloor m*2+3\n");
  EXPECT_EQ(c.builtin, "pde");
  EXPECT_EQ(c.floor, (std::pair<std::size_t, std::size_t>{2, 3}));
  EXPECT_EQ(omega::to_matrix(c).certificate()->floor(4), 11u);
}

TEST(Spec, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("kind stencil\n"), 1u);
  EXPECT_EQ(error_line("field rational\nkind stencil\nstencil 0:1 0:2\n"), 3u);
  EXPECT_EQ(error_line("field rational\nkind stencil\n\nstencil 0:1 x:2\n"), 4u);
  EXPECT_EQ(error_line("field gf 8\n"), 1u);
  EXPECT_EQ(error_line("field rational\nkind explicit\nrow 0 1:1\n"), 3u);
  EXPECT_EQ(error_line("field rational\nkind explicit\nrow 0 1:1\ntail zero\nrow 1 1:1\n"), 5u);
  EXPECT_EQ(error_line("field rational\nkind stencil\nrow 0 1:1\n"), 3u);
  EXPECT_EQ(error_line("field rational\nkind builtin\nbuiltin nope\n"), 3u);
  EXPECT_EQ(error_line("field gf 7\nkind builtin\nbuiltin pde\n"), 3u);
  EXPECT_EQ(error_line("field rational\nkind stencil\nstencil 0:1\nfloor 2m+1\n"), 4u);
  EXPECT_EQ(error_line("field rational\nkind stencil\nstencil 0:0\n"), 3u);
  EXPECT_EQ(error_line("field rational\nfield rational\n"), 2u);
  EXPECT_EQ(error_line("field rational\nkind matrix\n"), 2u);
  EXPECT_EQ(error_line("field rational\nkind explicit\nrow 0 1:1 1:2\ntail zero\n"), 3u);
  EXPECT_EQ(error_line("field rational\nwhat\n"), 2u);
}

TEST(Spec, FixturesRoundTrip) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(OMEGA_DATA_DIR)) {
    if (entry.path().extension() != ".spec") continue;
    ++count;
    const auto once = omega::parse_spec(read(entry.path()));
    const auto text = omega::render(once);
    EXPECT_EQ(omega::parse_spec(text), once) << entry.path();
    EXPECT_EQ(omega::render(omega::parse_spec(text)), text) << entry.path();
  }
  EXPECT_GE(count, 5u);
}

TEST(Spec, RhsFiles) {
  const auto s = omega::parse_rhs_spec("rhs symbolic s\n");
  EXPECT_EQ(s.kind, omega::RhsSpec::Kind::symbolic);
  const auto c = omega::to_rhs(s, Field::rational());
  EXPECT_EQ(c.at(3).to_string(), "s_3");

  const auto e = omega::parse_rhs_spec("rhs explicit 0:1 2:-1/2\n");
  const auto ce = omega::to_rhs(e, Field::gf(7));
  EXPECT_EQ(ce.at(2).to_string(), "3");
  EXPECT_EQ(ce.at(5).to_string(), "0");

  const auto st = omega::to_rhs(omega::parse_rhs_spec("rhs stencil 1 2\n"), Field::rational());
  EXPECT_EQ(st.at(3).to_string(), "2");

  EXPECT_THROW(omega::parse_rhs_spec("rhs symbolic t\n"), ParseError);
  EXPECT_THROW(omega::parse_rhs_spec("rhs vague\n"), ParseError);
  EXPECT_THROW(omega::parse_rhs_spec("\n"), ParseError);
  EXPECT_THROW(omega::to_rhs(omega::parse_rhs_spec("field gf 5\nrhs symbolic c\n"), Field::rational()),
               omega::FieldMismatch);
}

TEST(Io, JsonAndTsvAgree) {
  for (const auto& name : omega::builtin::names()) {
    const auto s = omega::run_to(*omega::builtin::by_name(name), 9);
    const auto snap = omega::io::snapshot_json(s);
    const auto width = omega::column_horizon(s.rows()).value_or(0) + 1;
    std::vector<omega::Row> from_json;
    for (const auto& r : snap["rows"]) from_json.push_back(omega::io::parse_sparse(s.field(), r.get<std::string>()));
    EXPECT_EQ(omega::io::dense_tsv(from_json, width), omega::io::dense_tsv(s.rows())) << name;
    EXPECT_EQ(snap["stage"], 9);
    EXPECT_EQ(snap["pivot_history"].size(), 10u);
    EXPECT_EQ(snap["last_changed"].get<std::vector<std::size_t>>(), s.last_changed());
  }
}

TEST(Io, ZeroRowsRenderAsMinusOne) {
  const auto s = omega::run_to(omega::builtin::fulkerson(), 3);
  const auto snap = omega::io::snapshot_json(s);
  EXPECT_EQ(snap["pivot_history"][1], -1);
  EXPECT_EQ(snap["pivot_history"][2], 6);
  EXPECT_EQ(snap["pivots"]["3"], 0);
}

TEST(Io, FormReportJson) {
  const std::vector<omega::Row> rows{omega::Row::unit(Field::rational(), 2), omega::Row::unit(Field::rational(), 2)};
  const auto j = omega::io::form_report_json(omega::is_lrrf(rows));
  EXPECT_EQ(j["form"], "LRRF");
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witness"]["rows"], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(j["witness"]["column"], 2);
}

TEST(Io, SolveResultJson) {
  const auto s = omega::run_to(omega::builtin::fulkerson(), 6);
  const auto r = omega::general_solution(s, omega::Rhs::symbolic(Field::rational(), "c"), 6);
  const auto j = omega::io::solve_result_json(r);
  EXPECT_EQ(j["constraints"][1], "c_3 - c_0 - 2*c_2 = 0");
  EXPECT_EQ(j["general"]["entries"].size(), 7u);
  EXPECT_EQ(j["general"]["entries"][0]["provenance"], "provisional at stage 6");
  EXPECT_EQ(j["deficiency"], 5);
}
