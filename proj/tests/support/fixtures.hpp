#pragma once

// Frozen expected matrices, written out densely.

#include <cstddef>
#include <string>
#include <vector>

#include "omega/row.hpp"

namespace fixtures {

using omega::Field;
using omega::Row;

/// Rows from dense text entries ("1", "-1/2", ...).
inline std::vector<Row> dense(const std::vector<std::vector<std::string>>& table,
                              const Field& f = Field::rational()) {
  std::vector<Row> out;
  for (const auto& line : table) {
    std::vector<Row::Entry> pairs;
    for (std::size_t c = 0; c < line.size(); ++c) pairs.emplace_back(c, f.parse(line[c]));
    out.push_back(Row::from_pairs(f, std::move(pairs)));
  }
  return out;
}

inline Row e(std::size_t c, const Field& f = Field::rational()) { return Row::unit(f, c); }

// Fulkerson's matrix: nonzero reduced rows 0, 2, 4 at stage 6.
inline std::vector<Row> fulkerson_hermite_rows() {
  return dense({{"0", "0", "1", "1"},
                {"0", "0", "-1", "0", "0", "1", "1"},
                {"0", "0", "0", "0", "0", "-1", "0", "0", "1", "1"}});
}

// Fulkerson's passage rows 0..6.
inline std::vector<Row> fulkerson_passage() {
  return dense({{"1"},
                {"0", "1"},
                {"-1", "0", "1"},
                {"-1", "0", "-2", "1"},
                {"0", "0", "-1", "0", "1"},
                {"-1", "0", "-1", "0", "-3", "1"},
                {"0", "0", "-1", "0", "0", "0", "1"}});
}

// The operator matrix M, rows 0..9, columns 0..13.
inline std::vector<Row> pde_rows() {
  return dense({{"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
                {"0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
                {"0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
                {"0", "0", "0", "0", "0", "0", "0", "2", "0", "0", "0", "0", "0", "0"},
                {"0", "0", "0", "1", "1", "1", "0", "1", "1", "0", "0", "0", "0", "0"},
                {"0", "0", "0", "0", "0", "0", "0", "0", "2", "0", "0", "0", "0", "0"},
                {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "3"},
                {"0", "0", "0", "0", "0", "0", "0", "2", "2", "2", "0", "0", "2", "1"},
                {"0", "0", "0", "0", "0", "0", "2", "2", "2", "0", "0", "1", "2", "0"},
                {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "3", "0", "0"}});
}

// Its quasi-Hermite form, rows 0..9.
inline std::vector<Row> pde_hermite() {
  return dense({{"0"},
                {"0", "0", "0", "0", "1"},
                {"0"},
                {"0", "0", "0", "1", "0", "1"},
                {"0", "0", "0", "0", "0", "0", "0", "1"},
                {"0", "0", "0", "0", "0", "0", "0", "0", "1"},
                {"0", "0", "0", "0", "0", "0", "-1", "0", "0", "1"},
                {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1"},
                {"0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "1"},
                {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1"}});
}

// Its passage matrix, rows 0..9, columns 0..9.
inline std::vector<Row> pde_passage() {
  return dense({{"1"},
                {"0", "1"},
                {"0", "-1", "1"},
                {"0", "-1", "0", "-1/2", "1", "-1/2"},
                {"0", "0", "0", "1/2"},
                {"0", "0", "0", "0", "0", "1/2"},
                {"0", "0", "0", "0", "0", "0", "-1/6", "1/2", "-1/2", "1/6"},
                {"0", "0", "0", "0", "0", "0", "0", "0", "0", "1/3"},
                {"0", "0", "0", "-1/2", "0", "-1/2", "0", "0", "1/2", "-1/6"},
                {"0", "0", "0", "0", "0", "0", "1/3"}});
}

}  // namespace fixtures
