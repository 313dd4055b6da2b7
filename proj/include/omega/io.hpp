#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega/canon.hpp"
#include "omega/engine.hpp"
#include "omega/reorder.hpp"
#include "omega/solver.hpp"

namespace omega::io {

using nlohmann::json;

inline json index_json(const std::optional<std::size_t>& i) { return index_or_minus_one(i); }

inline json rows_json(std::span<const Row> rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(r.to_sparse_string());
  return out;
}

/// stage, sparse rows, pivot map, pivot history (-1 for zero), last_changed,
/// sparse passage rows.
inline json snapshot_json(const EliminationState& s) {
  json pivots = json::object();
  for (const auto& [c, r] : s.pivots()) pivots[std::to_string(c)] = r;
  json history = json::array();
  for (const auto& p : s.pivot_history()) history.push_back(index_json(p));
  return json{{"field", s.field().to_string()},
              {"strategy", s.strategy() == Strategy::rps ? "rps" : "lps"},
              {"stage", index_json(s.stage())},
              {"rows", rows_json(s.rows())},
              {"pivots", pivots},
              {"pivot_history", history},
              {"last_changed", s.last_changed()},
              {"passage", rows_json(s.passage())}};
}

inline json reorder_json(const ReorderState& r) {
  json hist = json::array();
  for (const auto& stage : r.m_history()) {
    json row = json::array();
    for (const auto& m : stage) row.push_back(index_json(m));
    hist.push_back(row);
  }
  return json{{"permutation", r.permutation()},
              {"q_rows", rows_json(r.q_rows())},
              {"m_history_start", r.history_start()},
              {"m_history", hist}};
}

inline json form_report_json(const FormReport& f) {
  json w = nullptr;
  if (f.witness) {
    w = json{{"rows", f.witness->rows}, {"column", index_json(f.witness->column)}};
  }
  return json{{"form", to_string(f.form)}, {"holds", f.holds}, {"witness", w}};
}

inline json forms_json(std::span<const LinForm> forms) {
  json out = json::array();
  for (const auto& f : forms) out.push_back(f.to_string());
  return out;
}

inline json sequence_json(const SymbolicSequence& x) {
  json entries = json::array();
  for (std::size_t j = 0; j <= x.horizon(); ++j) {
    entries.push_back(json{{"value", x.at(j).to_string()},
                           {"provenance", x.provenance(j) == Provenance::certified
                                              ? "certified"
                                              : "provisional at stage " + std::to_string(x.stage())}});
  }
  return json{{"entries", entries}, {"free_columns", x.free_columns()}, {"stage", x.stage()}};
}

inline json solve_result_json(const SolveResult& r) {
  json constraints = json::array();
  for (const auto& c : r.constraints) constraints.push_back(c.to_constraint_string());
  return json{{"constraints", constraints},
              {"transformed", forms_json(r.transformed)},
              {"particular", sequence_json(r.particular)},
              {"homogeneous", sequence_json(r.homogeneous)},
              {"general", sequence_json(r.general)},
              {"deficiency", r.deficiency_over_horizon},
              {"horizon", r.horizon}};
}

/// One line per row, tab separated, columns 0..width-1. The width defaults
/// to the running column bound 1 + max maxs.
inline std::string dense_tsv(std::span<const Row> rows, std::optional<std::size_t> width = std::nullopt) {
  const std::size_t w = width ? *width : column_horizon(rows).value_or(0) + 1;
  std::ostringstream os;
  for (const auto& r : rows) {
    if (w == 0) {
      os << '\n';
      continue;
    }
    const auto dense = r.to_dense(w - 1);
    for (std::size_t c = 0; c < dense.size(); ++c) {
      if (c) os << '\t';
      os << dense[c];
    }
    os << '\n';
  }
  return os.str();
}

/// Parses a sparse "col:val col:val" string back into a row.
inline Row parse_sparse(const Field& f, const std::string& text) {
  std::istringstream is(text);
  std::vector<Row::Entry> pairs;
  std::string tok;
  while (is >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw Error("bad sparse entry '" + tok + "'");
    pairs.emplace_back(std::stoull(tok.substr(0, colon)), f.parse(tok.substr(colon + 1)));
  }
  return Row::from_pairs(f, std::move(pairs));
}

}  // namespace omega::io
