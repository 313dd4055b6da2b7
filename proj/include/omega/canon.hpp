#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "omega/matrix.hpp"
#include "omega/row.hpp"

namespace omega {

enum class Form { lrrf, lref, urrf, uref, qhf, hermite };

inline std::string to_string(Form f) {
  switch (f) {
    case Form::lrrf: return "LRRF";
    case Form::lref: return "LREF";
    case Form::urrf: return "URRF";
    case Form::uref: return "UREF";
    case Form::qhf: return "QHF";
    case Form::hermite: return "HERMITE";
  }
  return "?";
}

/// Rows and (optionally) the column at which a form condition fails.
struct Witness {
  std::vector<std::size_t> rows;
  std::optional<std::size_t> column;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct FormReport {
  Form form;
  bool holds = true;
  std::optional<Witness> witness;

  static FormReport pass(Form f) { return {f, true, std::nullopt}; }
  static FormReport fail(Form f, std::vector<std::size_t> rows,
                         std::optional<std::size_t> column = std::nullopt) {
    return {f, false, Witness{std::move(rows), column}};
  }
  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

using IndexOf = std::optional<std::size_t> (Row::*)() const;

/// Leading coefficients are ones and each pivot column is zero in every
/// other row.
inline FormReport reduced_form(std::span<const Row> rows, Form form, IndexOf index,
                               bool rightmost) {
  std::map<std::size_t, std::size_t> owner;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto p = (rows[i].*index)();
    if (!p) continue;
    const Scalar& lead = rightmost ? rows[i].right_leading() : rows[i].left_leading();
    if (!lead.is_one()) return FormReport::fail(form, {i}, *p);
    auto [it, inserted] = owner.emplace(*p, i);
    if (!inserted) return FormReport::fail(form, {it->second, i}, *p);
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (const auto& [c, v] : rows[k].entries()) {
      auto it = owner.find(c);
      if (it != owner.end() && it->second != k) return FormReport::fail(form, {it->second, k}, c);
    }
  }
  return FormReport::pass(form);
}

/// Indices of the nonzero rows strictly increase in index order.
inline FormReport echelon_form(std::span<const Row> rows, Form form, IndexOf index) {
  std::optional<std::size_t> prev_row;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto p = (rows[i].*index)();
    if (!p) continue;
    if (prev_row && *(rows[*prev_row].*index)() >= *p) return FormReport::fail(form, {*prev_row, i}, *p);
    prev_row = i;
  }
  return FormReport::pass(form);
}

}  // namespace detail

inline FormReport is_lrrf(std::span<const Row> rows) {
  return detail::reduced_form(rows, Form::lrrf, &Row::maxs, true);
}
inline FormReport is_lref(std::span<const Row> rows) {
  return detail::echelon_form(rows, Form::lref, &Row::maxs);
}
inline FormReport is_urrf(std::span<const Row> rows) {
  return detail::reduced_form(rows, Form::urrf, &Row::zeta, false);
}
inline FormReport is_uref(std::span<const Row> rows) {
  return detail::echelon_form(rows, Form::uref, &Row::zeta);
}

/// Hermite basis conditions on the nonzero rows taken in index order:
/// strictly increasing row-lengths, monic rightmost coefficients, and zeros
/// below every right leading one.
inline FormReport is_hermite_basis(std::span<const Row> rows) {
  constexpr Form form = Form::hermite;
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_zero()) nz.push_back(i);
  }
  for (std::size_t a = 0; a < nz.size(); ++a) {
    const Row& r = rows[nz[a]];
    if (a > 0 && *rows[nz[a - 1]].maxs() >= *r.maxs()) {
      return FormReport::fail(form, {nz[a - 1], nz[a]}, *r.maxs());
    }
    if (!r.right_leading().is_one()) return FormReport::fail(form, {nz[a]}, *r.maxs());
  }
  for (std::size_t a = 0; a < nz.size(); ++a) {
    const std::size_t col = *rows[nz[a]].maxs();
    for (std::size_t b = a + 1; b < nz.size(); ++b) {
      if (!rows[nz[b]].get(col).is_zero()) return FormReport::fail(form, {nz[a], nz[b]}, col);
    }
  }
  return FormReport::pass(form);
}

/// Quasi-Hermite form: the nonzero rows are the Hermite basis of the span.
inline FormReport is_qhf(std::span<const Row> rows) {
  FormReport r = is_hermite_basis(rows);
  r.form = Form::qhf;
  return r;
}

/// Fulkerson's recurrence on representatives of strictly increasing
/// row-length: H_j = (A_j - sum_{i<j} a_{j,rho_i} H_i) / a_{j,rho_j}.
inline std::vector<Row> fulkerson_recurrence(std::span<const Row> reps) {
  std::vector<Row> out;
  out.reserve(reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    const Row& a = reps[j];
    if (a.is_zero() || (j > 0 && *reps[j - 1].maxs() >= *a.maxs())) {
      throw NonIncreasingLengths(j);
    }
    Row h = a;
    for (const Row& prev : out) {
      const Scalar coeff = a.get(*prev.maxs());
      if (!coeff.is_zero()) h = axpy(-coeff, prev, h);
    }
    out.push_back(normalize_rightmost(h));
  }
  return out;
}

/// Row-lengths of the nonzero rows. Only meaningful when the length map is
/// injective, so the rows must be in LRRF or LREF.
inline std::set<std::size_t> right_set(std::span<const Row> rows) {
  if (!is_lrrf(rows) && !is_lref(rows)) throw NotReduced();
  std::set<std::size_t> out;
  for (const auto& r : rows) {
    if (auto m = r.maxs()) out.insert(*m);
  }
  return out;
}

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  friend bool operator==(const RankNullity&, const RankNullity&) = default;
};

/// Prefix-relative rank (number of distinct row-lengths) and nullity
/// (number of zero rows).
inline RankNullity rank_nullity(std::span<const Row> rows) {
  const auto right = right_set(rows);
  return {right.size(), rows.size() - right.size()};
}

/// |[0, horizon] \ right_set|.
inline std::size_t deficiency(std::span<const Row> rows, std::size_t horizon) {
  const auto right = right_set(rows);
  const auto hit = std::count_if(right.begin(), right.end(),
                                 [&](std::size_t c) { return c <= horizon; });
  return horizon + 1 - static_cast<std::size_t>(hit);
}

struct RowEquivalenceReport {
  bool holds = true;
  std::optional<std::size_t> row;
  std::optional<std::size_t> column;
  explicit operator bool() const noexcept { return holds; }
};

/// Checks (Q * input) row i == out_rows[i] for every i <= horizon by
/// expanding the finite combination sum_j q_ij * input_j.
inline RowEquivalenceReport verify_row_equivalence(std::span<const Row> q_rows,
                                                   const RowFiniteMatrix& input,
                                                   std::span<const Row> out_rows,
                                                   std::size_t horizon) {
  const std::size_t last = std::min({horizon + 1, q_rows.size(), out_rows.size()});
  for (std::size_t i = 0; i < last; ++i) {
    const Row lhs = combine(q_rows[i], [&](std::size_t j) -> const Row& { return input.row(j); },
                            input.field());
    if (lhs == out_rows[i]) continue;
    RowEquivalenceReport bad{false, i, std::nullopt};
    const auto a = lhs.entries();
    const auto b = out_rows[i].entries();
    std::size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
      if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
        bad.column = a[x].first;
        break;
      }
      if (x == a.size() || b[y].first < a[x].first) {
        bad.column = b[y].first;
        break;
      }
      if (!(a[x].second == b[y].second)) {
        bad.column = a[x].first;
        break;
      }
      ++x;
      ++y;
    }
    return bad;
  }
  return {};
}

/// True when the nonzero rows of a and b agree as multisets.
inline bool same_nonzero_rows(std::span<const Row> a, std::span<const Row> b) {
  auto key = [](std::span<const Row> rows) {
    std::vector<std::string> out;
    for (const auto& r : rows) {
      if (!r.is_zero()) out.push_back(r.to_sparse_string());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return key(a) == key(b);
}

}  // namespace omega
