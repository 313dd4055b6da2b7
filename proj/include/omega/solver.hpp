#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iterator>
#include <memory>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "omega/canon.hpp"
#include "omega/engine.hpp"
#include "omega/linform.hpp"
#include "omega/matrix.hpp"

namespace omega {

/// Right-hand side c of A x = c as a lazily evaluated sequence of forms.
class Rhs {
 public:
  using Generator = std::function<LinForm(std::size_t)>;

  Rhs(Field field, Generator generator, std::string description)
      : field_(field), generator_(std::move(generator)), description_(std::move(description)) {}

  /// c_i = name_i, a fresh symbol per index.
  static Rhs symbolic(const Field& field, const std::string& name) {
    return Rhs(field, [field, name](std::size_t i) { return LinForm::symbol(field, Symbol::rhs(name, i)); },
               "symbolic " + name);
  }

  /// Listed values, zero elsewhere.
  static Rhs explicit_values(const Field& field, std::map<std::size_t, Scalar> values) {
    for (const auto& [i, v] : values) {
      if (v.field() != field) throw FieldMismatch("rhs value " + std::to_string(i));
    }
    return Rhs(field,
               [field, values](std::size_t i) {
                 auto it = values.find(i);
                 return it == values.end() ? LinForm(field) : LinForm::constant(it->second);
               },
               "explicit");
  }

  /// c_i = pattern[i mod |pattern|].
  static Rhs stencil(const Field& field, std::vector<Scalar> pattern) {
    if (pattern.empty()) throw Error("empty rhs stencil");
    for (const auto& v : pattern) {
      if (v.field() != field) throw FieldMismatch("rhs stencil value");
    }
    return Rhs(field,
               [pattern](std::size_t i) { return LinForm::constant(pattern[i % pattern.size()]); },
               "stencil");
  }

  static Rhs zero(const Field& field) {
    return Rhs(field, [field](std::size_t) { return LinForm(field); }, "zero");
  }

  const Field& field() const noexcept { return field_; }
  const std::string& description() const noexcept { return description_; }

  LinForm at(std::size_t i) const {
    LinForm f = generator_(i);
    if (f.field() != field_) throw FieldMismatch("rhs entry " + std::to_string(i));
    return f;
  }

 private:
  Field field_;
  Generator generator_;
  std::string description_;
};

enum class Provenance { certified, provisional };

/// An infinite solution stream realized through a horizon. Entries past the
/// horizon remain available lazily.
class SymbolicSequence {
 public:
  using Generator = std::function<LinForm(std::size_t)>;
  using Flag = std::function<Provenance(std::size_t)>;

  SymbolicSequence(Field field, Generator entry, Flag provenance, std::vector<std::size_t> free_columns,
                   std::size_t horizon, std::size_t stage)
      : field_(field),
        entry_(std::move(entry)),
        provenance_(std::move(provenance)),
        free_columns_(std::move(free_columns)),
        horizon_(horizon),
        stage_(stage) {}

  const Field& field() const noexcept { return field_; }
  std::size_t horizon() const noexcept { return horizon_; }
  /// Engine stage the entries were read from.
  std::size_t stage() const noexcept { return stage_; }
  /// Free columns within the horizon; the j-th carries t_j.
  const std::vector<std::size_t>& free_columns() const noexcept { return free_columns_; }

  LinForm at(std::size_t column) const { return entry_(column); }
  Provenance provenance(std::size_t column) const { return provenance_(column); }

  /// Entries 0..horizon.
  std::vector<LinForm> realize() const {
    std::vector<LinForm> out;
    out.reserve(horizon_ + 1);
    for (std::size_t j = 0; j <= horizon_; ++j) out.push_back(at(j));
    return out;
  }

  /// Entrywise sum; free columns and provenance are taken from `b`.
  friend SymbolicSequence operator+(const SymbolicSequence& a, const SymbolicSequence& b) {
    if (a.field_ != b.field_) throw FieldMismatch("sequence sum");
    auto ea = a.entry_;
    auto eb = b.entry_;
    auto pa = a.provenance_;
    auto pb = b.provenance_;
    return SymbolicSequence(
        a.field_, [ea, eb, f = a.field_](std::size_t j) { return axpy(f.one(), ea(j), eb(j)); },
        [pa, pb](std::size_t j) {
          return pa(j) == Provenance::certified && pb(j) == Provenance::certified ? Provenance::certified
                                                                                  : Provenance::provisional;
        },
        b.free_columns_, std::min(a.horizon_, b.horizon_), std::min(a.stage_, b.stage_));
  }

  /// Replaces entry `column` by entry + delta; used to build counterexamples.
  SymbolicSequence perturbed(std::size_t column, const Scalar& delta) const {
    auto e = entry_;
    SymbolicSequence out = *this;
    out.entry_ = [e, column, delta](std::size_t j) {
      LinForm f = e(j);
      if (j == column) f.add_constant(delta);
      return f;
    };
    return out;
  }

 private:
  Field field_;
  Generator entry_;
  Flag provenance_;
  std::vector<std::size_t> free_columns_;
  std::size_t horizon_;
  std::size_t stage_;
};

/// k_i = sum_j q_ij c_j for every passage row.
inline std::vector<LinForm> transform_rhs(std::span<const Row> passage, const Rhs& c) {
  std::vector<LinForm> out;
  out.reserve(passage.size());
  for (const auto& q : passage) {
    if (q.field() != c.field()) throw FieldMismatch("passage and rhs");
    LinForm k(c.field());
    for (const auto& [j, v] : q.entries()) k = axpy(v, c.at(j), k);
    out.push_back(std::move(k));
  }
  return out;
}

/// k_w = 0 for every zero row w of the processed prefix.
inline std::vector<LinForm> consistency_constraints(const EliminationState& state,
                                                    std::span<const LinForm> k) {
  std::vector<LinForm> out;
  for (std::size_t w = 0; w < state.size() && w < k.size(); ++w) {
    if (state.rows()[w].is_zero()) out.push_back(k[w].canonical());
  }
  return out;
}

namespace detail {

struct PivotLayout {
  std::map<std::size_t, std::size_t> pivots;  // column -> row
  std::vector<std::size_t> pivot_columns;      // ascending

  /// Parameter index of a free column: the number of free columns below it.
  std::size_t param_of(std::size_t column) const {
    const auto below = static_cast<std::size_t>(
        std::lower_bound(pivot_columns.begin(), pivot_columns.end(), column) - pivot_columns.begin());
    return column - below;
  }

  std::vector<std::size_t> free_through(std::size_t horizon) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j <= horizon; ++j) {
      if (!pivots.contains(j)) out.push_back(j);
    }
    return out;
  }
};

inline PivotLayout layout_of(const EliminationState& state) {
  if (state.strategy() != Strategy::rps) throw Error("solver requires a rightmost-pivot run");
  PivotLayout out;
  out.pivots = state.pivots();
  for (const auto& [c, r] : out.pivots) out.pivot_columns.push_back(c);
  return out;
}

/// Column j is certified when a validated pivot floor lies above it: its
/// pivot status and owning row can no longer change.
inline SymbolicSequence::Flag provenance_of(const EliminationState& state) {
  const auto floor = state.pivot_floor();
  return [floor](std::size_t j) {
    return floor && j < *floor ? Provenance::certified : Provenance::provisional;
  };
}

}  // namespace detail

/// x_H: t_r at the r-th free column, -sum_{k free, k<rho} h_{jk} t_k at the
/// pivot column rho of row j.
inline SymbolicSequence homogeneous_solution(const EliminationState& state, std::size_t horizon) {
  auto layout = std::make_shared<detail::PivotLayout>(detail::layout_of(state));
  auto rows = std::make_shared<std::vector<Row>>(state.rows());
  const Field f = state.field();
  auto entry = [layout, rows, f](std::size_t j) {
    auto it = layout->pivots.find(j);
    if (it == layout->pivots.end()) return LinForm::symbol(f, Symbol::param(layout->param_of(j)));
    LinForm x(f);
    for (const auto& [k, h] : (*rows)[it->second].entries()) {
      if (k == j) continue;
      x.add_term(Symbol::param(layout->param_of(k)), -h);
    }
    return x;
  };
  auto free = layout->free_through(horizon);
  return SymbolicSequence(f, entry, detail::provenance_of(state), std::move(free), horizon,
                          state.stage().value_or(0));
}

/// x_P: k_j at the pivot column of row j, zero elsewhere.
inline SymbolicSequence particular_solution(const EliminationState& state, std::span<const LinForm> k,
                                            std::size_t horizon = 0) {
  auto layout = std::make_shared<detail::PivotLayout>(detail::layout_of(state));
  auto ks = std::make_shared<std::vector<LinForm>>(k.begin(), k.end());
  const Field f = state.field();
  auto entry = [layout, ks, f](std::size_t j) {
    auto it = layout->pivots.find(j);
    if (it == layout->pivots.end() || it->second >= ks->size()) return LinForm(f);
    return (*ks)[it->second];
  };
  return SymbolicSequence(f, entry, detail::provenance_of(state), {}, horizon,
                          state.stage().value_or(0));
}

struct SolveResult {
  std::vector<LinForm> constraints;
  std::vector<LinForm> transformed;  // k = Q c
  SymbolicSequence particular;
  SymbolicSequence homogeneous;
  SymbolicSequence general;
  std::size_t deficiency_over_horizon = 0;
  std::size_t horizon = 0;
};

inline SolveResult general_solution(const EliminationState& state, const Rhs& c, std::size_t horizon) {
  auto k = transform_rhs(state.passage(), c);
  auto constraints = consistency_constraints(state, k);
  auto xp = particular_solution(state, k, horizon);
  auto xh = homogeneous_solution(state, horizon);
  auto x = xp + xh;
  const std::size_t def = deficiency(state.rows(), horizon);
  return SolveResult{std::move(constraints), std::move(k), std::move(xp), std::move(xh),
                     std::move(x), def, horizon};
}

/// Seed for randomized checks: OMEGA_SEED if set, else a fixed default.
inline std::uint64_t omega_seed(std::uint64_t fallback = 20240229) {
  if (const char* s = std::getenv("OMEGA_SEED"); s && *s) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      return std::hash<std::string>{}(s);
    }
  }
  return fallback;
}

/// Uniform small field element; rationals are p/q with |p| <= 9, 1 <= q <= 4.
inline Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_rational()) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    return f.from_int(num(rng)) / f.from_int(den(rng));
  }
  std::uniform_int_distribution<std::uint64_t> d(0, f.modulus() - 1);
  return f.from_int(static_cast<long long>(d(rng)));
}

/// Linear forms reduced against each other: each row's leading (largest)
/// symbol has coefficient one and appears in no other row.
class ConstraintSystem {
 public:
  explicit ConstraintSystem(Field field) : field_(field) {}

  ConstraintSystem(Field field, std::span<const LinForm> constraints) : field_(field) {
    for (const auto& c : constraints) add(c);
  }

  /// False when the new constraint is inconsistent (a nonzero constant).
  bool add(const LinForm& c) {
    LinForm r = reduce(c);
    if (r.terms().empty()) {
      if (!r.constant_term().is_zero()) consistent_ = false;
      return consistent_;
    }
    const Symbol s = std::prev(r.terms().end())->first;
    r = axpy(r.coefficient(s).inv(), r, LinForm(field_));
    for (auto& [sym, row] : rows_) {
      const Scalar a = row.coefficient(s);
      if (!a.is_zero()) row = axpy(-a, r, row);
    }
    rows_.emplace(s, std::move(r));
    return consistent_;
  }

  bool consistent() const noexcept { return consistent_; }

  /// Remainder of f modulo the constraints.
  LinForm reduce(const LinForm& f) const {
    LinForm out = f;
    for (const auto& [s, row] : rows_) {
      const Scalar a = out.coefficient(s);
      if (!a.is_zero()) out = axpy(-a, row, out);
    }
    return out;
  }

  /// Random values for every non-leading symbol in `symbols`, then the
  /// leading ones solved so that every constraint holds.
  Binding random_solution(const std::set<Symbol>& symbols, std::mt19937_64& rng) const {
    Binding b;
    std::set<Symbol> all = symbols;
    for (const auto& [s, row] : rows_) {
      for (const auto& [t, v] : row.terms()) all.insert(t);
    }
    for (const auto& s : all) {
      if (!rows_.contains(s)) b.emplace(s, random_scalar(field_, rng));
    }
    for (const auto& [s, row] : rows_) {
      // row = s + rest + const = 0
      LinForm rest = row;
      rest.add_term(s, -field_.one());
      b.emplace(s, -eval(rest, b).constant_term());
    }
    return b;
  }

 private:
  Field field_;
  std::map<Symbol, LinForm> rows_;
  bool consistent_ = true;
};

struct SolutionCheck {
  bool holds = true;
  std::optional<std::size_t> row;
  std::string detail;
  explicit operator bool() const noexcept { return holds; }
};

/// Residual check of A x = c for rows 0..horizon: each residual must vanish
/// modulo the constraints, and at `trials` random assignments satisfying the
/// constraints it must evaluate to zero.
inline SolutionCheck verify_solution(const RowFiniteMatrix& m, const SymbolicSequence& x, const Rhs& c,
                                     std::span<const LinForm> constraints, std::size_t horizon,
                                     std::size_t trials = 0, std::uint64_t seed = omega_seed()) {
  const Field& f = m.field();
  ConstraintSystem system(f, constraints);
  if (!system.consistent()) return {false, std::nullopt, "constraints are inconsistent"};
  std::vector<LinForm> residuals;
  std::set<Symbol> symbols;
  for (std::size_t i = 0; i <= horizon; ++i) {
    LinForm r = axpy(-f.one(), c.at(i), LinForm(f));
    for (const auto& [j, a] : m.row(i).entries()) r = axpy(a, x.at(j), r);
    const LinForm rem = system.reduce(r);
    if (!rem.is_zero()) return {false, i, "residual " + rem.to_string()};
    for (const auto& [s, v] : r.terms()) symbols.insert(s);
    residuals.push_back(std::move(r));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Binding b = system.random_solution(symbols, rng);
    for (std::size_t i = 0; i < residuals.size(); ++i) {
      const LinForm v = eval(residuals[i], b);
      if (!v.is_zero()) return {false, i, "trial " + std::to_string(t) + " gives " + v.to_string()};
    }
  }
  return {};
}

}  // namespace omega
