// omega: command-line driver for staged infinite Gauss-Jordan elimination.
//
// Exit status: 0 ok / check passed, 1 check failed, 2 parse error,
// 3 certificate violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omega/omega.hpp"

namespace {

using omega::io::json;

enum Exit { ok = 0, check_failed = 1, parse_failed = 2, certificate_violated = 3 };

struct Options {
  std::string matrix;
  std::string rhs = "symbolic:c";
  std::size_t stages = 6;
  std::optional<std::size_t> prefix;
  std::optional<std::size_t> horizon;
  std::string strategy = "rps";
  std::string format = "tsv";
  std::string emit;
  std::string check = "lrrf";
  bool oracle = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw omega::ParseError(0, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

omega::RowFiniteMatrix load_matrix(const std::string& arg) {
  std::string name = arg;
  if (arg.rfind("builtin:", 0) == 0) {
    name = arg.substr(8);
  } else if (std::filesystem::exists(arg)) {
    return omega::to_matrix(omega::parse_spec(slurp(arg)));
  }
  auto m = omega::builtin::by_name(name);
  if (!m) throw omega::ParseError(0, "no such matrix file or builtin '" + arg + "'");
  return *m;
}

omega::Rhs load_rhs(const std::string& arg, const omega::Field& field) {
  if (arg.rfind("symbolic:", 0) == 0) {
    const std::string name = arg.substr(9);
    if (name.empty() || name == "t") throw omega::ParseError(0, "bad rhs symbol '" + name + "'");
    return omega::Rhs::symbolic(field, name);
  }
  return omega::to_rhs(omega::parse_rhs_spec(slurp(arg)), field);
}

std::set<std::string> emit_set(const std::string& list, std::set<std::string> fallback) {
  if (list.empty()) return fallback;
  std::set<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

omega::Strategy strategy_of(const Options& o) {
  return o.strategy == "lps" ? omega::Strategy::lps : omega::Strategy::rps;
}

omega::EliminationState reduce(const omega::RowFiniteMatrix& m, const Options& o) {
  if (o.oracle && strategy_of(o) == omega::Strategy::rps) return omega::run_to_seeded(m, o.stages, o.stages);
  return omega::run_to(m, o.stages, strategy_of(o));
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = "\t") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

std::vector<long long> indices(const std::vector<std::optional<std::size_t>>& xs) {
  std::vector<long long> out;
  for (const auto& x : xs) out.push_back(omega::index_or_minus_one(x));
  return out;
}

void section(const std::string& title) { std::cout << "# " << title << '\n'; }

int cmd_reduce(const Options& o) {
  const auto m = load_matrix(o.matrix);
  const auto s = reduce(m, o);
  if (s.strategy() == omega::Strategy::lps && !s.empty()) {
    std::cerr << "warning: leftmost pivots do not stabilize; row 0 now reaches column "
              << omega::index_or_minus_one(s.rows()[0].maxs()) << '\n';
  }
  const auto emit = emit_set(o.emit, {"rows", "passage", "pivot_history", "last_changed"});
  if (o.format == "json") {
    json snap = omega::io::snapshot_json(s);
    json out = json::object();
    out["stage"] = snap["stage"];
    for (const auto& key : emit) {
      if (snap.contains(key)) out[key] = snap[key];
    }
    std::cout << out.dump(2) << '\n';
    return ok;
  }
  if (emit.contains("rows")) {
    section("rows");
    std::cout << omega::io::dense_tsv(s.rows());
  }
  if (emit.contains("passage")) {
    section("passage");
    std::cout << omega::io::dense_tsv(s.passage(), s.size());
  }
  if (emit.contains("pivots")) {
    section("pivots");
    for (const auto& [c, r] : s.pivots()) std::cout << c << '\t' << r << '\n';
  }
  if (emit.contains("pivot_history")) {
    section("pivot_history");
    std::cout << join(indices(s.pivot_history())) << '\n';
  }
  if (emit.contains("last_changed")) {
    section("last_changed");
    std::cout << join(s.last_changed()) << '\n';
  }
  return ok;
}

int cmd_qhf(const Options& o) {
  const auto m = load_matrix(o.matrix);
  const auto run = omega::extended_run(m, o.stages, o.oracle ? std::optional(o.stages) : std::nullopt);
  const std::size_t last = std::min(o.prefix.value_or(o.stages), o.stages);
  const auto form = omega::is_qhf(run.reorder.q_rows());
  std::vector<std::size_t> delta, eps;
  for (std::size_t k = 0; k <= last; ++k) {
    delta.push_back(omega::qhf_prefix_stability(run.reorder, k));
    eps.push_back(run.base.prefix_stability(k));
  }
  const auto emit = emit_set(o.emit, {"q_rows", "permutation", "delta", "epsilon", "form"});
  if (o.format == "json") {
    json snap = omega::io::reorder_json(run.reorder);
    json out{{"stage", o.stages}, {"prefix", last}};
    if (emit.contains("q_rows")) out["q_rows"] = snap["q_rows"];
    if (emit.contains("permutation")) out["permutation"] = snap["permutation"];
    if (emit.contains("m_history")) out["m_history"] = snap["m_history"];
    if (emit.contains("delta")) out["delta"] = delta;
    if (emit.contains("epsilon")) out["epsilon"] = eps;
    if (emit.contains("form")) out["form"] = omega::io::form_report_json(form);
    std::cout << out.dump(2) << '\n';
    return ok;
  }
  if (emit.contains("q_rows")) {
    section("q_rows");
    std::cout << omega::io::dense_tsv(run.reorder.q_rows());
  }
  if (emit.contains("permutation")) {
    section("permutation");
    std::cout << join(run.reorder.permutation()) << '\n';
  }
  if (emit.contains("delta")) {
    section("delta");
    for (std::size_t k = 0; k <= last; ++k) std::cout << k << '\t' << delta[k] << '\n';
  }
  if (emit.contains("epsilon")) {
    section("epsilon");
    for (std::size_t k = 0; k <= last; ++k) std::cout << k << '\t' << eps[k] << '\n';
  }
  if (emit.contains("form")) {
    section("form");
    std::cout << "QHF\t" << (form.holds ? "holds" : "fails") << '\n';
  }
  return ok;
}

int cmd_solve(const Options& o) {
  const auto m = load_matrix(o.matrix);
  const auto c = load_rhs(o.rhs, m.field());
  const std::size_t horizon = o.horizon.value_or(o.stages);
  Options ro = o;
  ro.strategy = "rps";
  const auto s = reduce(m, ro);
  const auto r = omega::general_solution(s, c, horizon);
  if (o.format == "json") {
    std::cout << omega::io::solve_result_json(r).dump(2) << '\n';
    return ok;
  }
  const auto emit = emit_set(o.emit, {"constraints", "k", "general", "deficiency"});
  if (emit.contains("constraints")) {
    section("constraints");
    for (const auto& f : r.constraints) std::cout << f.to_constraint_string() << '\n';
  }
  if (emit.contains("k")) {
    section("k");
    for (std::size_t i = 0; i < r.transformed.size(); ++i) {
      std::cout << "k_" << i << '\t' << r.transformed[i] << '\n';
    }
  }
  auto print = [&](const std::string& name, const omega::SymbolicSequence& x) {
    section(name);
    for (std::size_t j = 0; j <= horizon; ++j) {
      std::cout << j << '\t' << x.at(j) << '\t'
                << (x.provenance(j) == omega::Provenance::certified ? "certified" : "provisional") << '\n';
    }
  };
  if (emit.contains("particular")) print("particular", r.particular);
  if (emit.contains("homogeneous")) print("homogeneous", r.homogeneous);
  if (emit.contains("general")) print("general", r.general);
  if (emit.contains("deficiency")) {
    section("deficiency");
    std::cout << r.deficiency_over_horizon << '\t' << "horizon " << horizon << '\n';
  }
  return ok;
}

int cmd_verify(const Options& o) {
  const auto m = load_matrix(o.matrix);
  bool holds = false;
  std::string detail;
  if (o.check == "lrrf") {
    const auto s = reduce(m, o);
    const auto f = omega::is_lrrf(s.rows());
    holds = f.holds;
    if (o.format == "json") detail = omega::io::form_report_json(f).dump();
  } else if (o.check == "qhf") {
    const auto run = omega::extended_run(m, o.stages, o.oracle ? std::optional(o.stages) : std::nullopt);
    const auto f = omega::is_qhf(run.reorder.q_rows());
    holds = f.holds;
    if (o.format == "json") detail = omega::io::form_report_json(f).dump();
  } else if (o.check == "roweq") {
    const std::size_t h = o.horizon.value_or(o.stages);
    const auto run = omega::extended_run(m, o.stages, o.oracle ? std::optional(o.stages) : std::nullopt);
    std::vector<omega::Row> q;
    for (std::size_t i : run.reorder.permutation()) q.push_back(run.base.passage()[i]);
    const auto base = omega::verify_row_equivalence(run.base.passage(), m, run.base.rows(), h);
    const auto reordered = omega::verify_row_equivalence(q, m, run.reorder.q_rows(), h);
    holds = base.holds && reordered.holds;
    const auto& bad = base.holds ? reordered : base;
    if (!holds) {
      detail = "row " + std::to_string(*bad.row) + " column " +
               std::to_string(omega::index_or_minus_one(bad.column));
    }
  } else if (o.check == "oracle") {
    const auto inc = omega::run_to(m, o.stages);
    const auto one = omega::reduce_oneshot(m, o.stages);
    holds = inc.rows() == one.rows() && inc.passage() == one.passage() && inc.pivots() == one.pivots();
  } else if (o.check == "solution") {
    const std::size_t h = o.horizon.value_or(o.stages);
    const auto c = load_rhs(o.rhs, m.field());
    Options ro = o;
    ro.strategy = "rps";
    const auto s = reduce(m, ro);
    const auto r = omega::general_solution(s, c, h);
    const auto check = omega::verify_solution(m, r.general, c, r.constraints, h, 5);
    holds = check.holds;
    if (!holds) detail = (check.row ? "row " + std::to_string(*check.row) + ": " : "") + check.detail;
  } else {
    throw omega::ParseError(0, "unknown check '" + o.check + "'");
  }
  std::cout << o.check << '\t' << (holds ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << '\t' << detail;
  std::cout << '\n';
  return holds ? ok : check_failed;
}

int cmd_stability(const Options& o) {
  const auto m = load_matrix(o.matrix);
  const auto s = reduce(m, o);
  const std::size_t last = std::min(o.prefix.value_or(o.stages), o.stages);
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t k = 0; k <= last; ++k) {
      rows.push_back(json{{"row", k},
                          {"maxs", omega::index_or_minus_one(s.rows()[k].maxs())},
                          {"last_changed", s.last_changed()[k]},
                          {"prefix_stability", s.prefix_stability(k)},
                          {"status", s.certified_stable(k) == omega::Certification::certified ? "certified"
                                                                                              : "provisional"}});
    }
    json out{{"stage", o.stages}, {"rows", rows}};
    out["certificate"] = m.certificate() ? json(m.certificate()->description) : json(nullptr);
    std::cout << out.dump(2) << '\n';
    return ok;
  }
  section("row\tmaxs\tlast_changed\tprefix_stability\tstatus");
  for (std::size_t k = 0; k <= last; ++k) {
    std::cout << k << '\t' << omega::index_or_minus_one(s.rows()[k].maxs()) << '\t' << s.last_changed()[k]
              << '\t' << s.prefix_stability(k) << '\t'
              << (s.certified_stable(k) == omega::Certification::certified ? "certified" : "provisional")
              << '\n';
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Staged infinite Gauss-Jordan elimination on row-finite matrices"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--matrix", o.matrix, "Spec file, builtin:NAME or a builtin name")->required();
    sub->add_option("--stages", o.stages, "Last stage to run")->capture_default_str();
    sub->add_option("--prefix", o.prefix, "Last row index to report");
    sub->add_option("--horizon", o.horizon, "Last column or row for solutions and checks");
    sub->add_option("--strategy", o.strategy, "Pivot strategy")
        ->check(CLI::IsMember({"rps", "lps"}))
        ->capture_default_str();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    sub->add_option("--emit", o.emit, "Comma separated list of sections");
    sub->add_option("--rhs", o.rhs, "RHS file or symbolic:NAME")->capture_default_str();
    sub->add_flag("--oracle", o.oracle, "Seed with the one-shot reduction");
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "Run the elimination and print the state");
  auto* qhf_cmd = app.add_subcommand("qhf", "Run the extended algorithm and print the reordered prefix");
  auto* solve_cmd = app.add_subcommand("solve", "Solve A x = c symbolically");
  auto* verify_cmd = app.add_subcommand("verify", "Run a named check");
  auto* stability_cmd = app.add_subcommand("stability", "Report per-row stability and certification");
  for (auto* sub : {reduce_cmd, qhf_cmd, solve_cmd, verify_cmd, stability_cmd}) common(sub);
  verify_cmd->add_option("--check", o.check, "lrrf|qhf|roweq|oracle|solution")
      ->check(CLI::IsMember({"lrrf", "qhf", "roweq", "oracle", "solution"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_failed;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(o);
    if (*qhf_cmd) return cmd_qhf(o);
    if (*solve_cmd) return cmd_solve(o);
    if (*verify_cmd) return cmd_verify(o);
    return cmd_stability(o);
  } catch (const omega::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return parse_failed;
  } catch (const omega::CertificateViolation& e) {
    std::cerr << "certificate violation: " << e.what() << '\n';
    return certificate_violated;
  } catch (const omega::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return check_failed;
  }
}
