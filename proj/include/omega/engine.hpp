#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "omega/matrix.hpp"
#include "omega/row.hpp"

namespace omega {

/// Which leading coefficient of a row serves as its pivot.
enum class Strategy { rps, lps };

enum class Certification { certified, provisional };

/// Staged infinite Gauss-Jordan elimination.
///
/// Stage n consumes input row n: the incoming row is reduced by every
/// existing pivot (Gaussian step), normalized so its leading coefficient is
/// one, and its pivot column is then cleared from every earlier row (Jordan
/// step). The same operations are replayed on identity rows to maintain the
/// passage rows, so that passage * input = rows after every stage.
///
/// With Strategy::rps the rows after every stage form a matrix in LRRF;
/// Jordan updates never change the row-length of an earlier row, and only
/// the Gaussian step creates zero rows or new row-lengths. Strategy::lps is
/// kept for diagnostics: its earlier rows drift to the right without bound
/// on inputs such as the bidiagonal matrix.
///
/// Zero input rows still consume a stage, so row indices always coincide
/// with input indices.
class EliminationState {
 public:
  explicit EliminationState(Field field, Strategy strategy = Strategy::rps,
                            std::optional<PivotFloor> certificate = std::nullopt)
      : field_(field), strategy_(strategy), certificate_(std::move(certificate)) {}

  /// Rebuilds a state from already reduced rows and their passage rows.
  /// Pivots and pivot history are derived from the rows, which must be in
  /// LRRF (URRF for lps); a certificate is validated against the history.
  static EliminationState restore(Field field, std::vector<Row> rows, std::vector<Row> passage,
                                  std::vector<std::size_t> last_changed,
                                  Strategy strategy = Strategy::rps,
                                  std::optional<PivotFloor> certificate = std::nullopt) {
    if (rows.size() != passage.size() || rows.size() != last_changed.size()) {
      throw Error("restore: rows, passage and last_changed differ in length");
    }
    EliminationState s(field, strategy, std::move(certificate));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto p = s.pivot_of(rows[i]);
      if (p) {
        if (!s.pivots_.emplace(*p, i).second) throw PivotCollision(*p);
        if (!s.leading(rows[i]).is_one()) throw Error("restore: pivot coefficient is not one");
        s.check_certificate(i, *p);
      }
      s.note_floor(i);
      s.pivot_history_.push_back(p);
    }
    for (const auto& [col, owner] : s.pivots_) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != owner && !rows[i].get(col).is_zero()) {
          throw Error("restore: pivot column " + std::to_string(col) + " is not cleared");
        }
      }
    }
    s.rows_ = std::move(rows);
    s.passage_ = std::move(passage);
    s.last_changed_ = std::move(last_changed);
    return s;
  }

  const Field& field() const noexcept { return field_; }
  Strategy strategy() const noexcept { return strategy_; }

  /// Number of consumed input rows.
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  /// Index of the last completed stage; empty before the first one.
  std::optional<std::size_t> stage() const {
    if (rows_.empty()) return std::nullopt;
    return rows_.size() - 1;
  }

  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::vector<Row>& passage() const noexcept { return passage_; }
  /// Pivot column -> row index.
  const std::map<std::size_t, std::size_t>& pivots() const noexcept { return pivots_; }
  /// Pivot column of G_i for every stage i; empty where G_i was zero.
  const std::vector<std::optional<std::size_t>>& pivot_history() const noexcept {
    return pivot_history_;
  }
  /// Stage at which each row last changed.
  const std::vector<std::size_t>& last_changed() const noexcept { return last_changed_; }

  const std::optional<PivotFloor>& certificate() const noexcept { return certificate_; }
  /// Last stage whose pivot was checked against the certificate.
  std::optional<std::size_t> validated_through() const {
    if (!certificate_) return std::nullopt;
    return stage();
  }

  /// Pivot column of a row under this state's strategy.
  std::optional<std::size_t> pivot_of(const Row& r) const {
    return strategy_ == Strategy::rps ? r.maxs() : r.zeta();
  }

  /// Gaussian step in closed form: c - sum_i c[pivot_i] * rows[i]. The
  /// multipliers are read off the incoming row, which is valid because the
  /// pivot rows are reduced against each other.
  Row gaussian_reduce(const Row& c) const {
    check_field(c);
    Row g = c;
    for (const auto& [col, i] : pivots_) {
      const Scalar a = c.get(col);
      if (!a.is_zero()) g = axpy(-a, rows_[i], g);
    }
    return g;
  }

  /// Gaussian step applied pivot by pivot in the given row order, with
  /// multipliers taken from the current intermediate row. `trace` receives
  /// every intermediate row.
  Row gaussian_reduce_in_order(const Row& c, std::span<const std::size_t> pivot_rows,
                               std::vector<Row>* trace = nullptr) const {
    check_field(c);
    Row g = c;
    for (std::size_t i : pivot_rows) {
      if (i >= rows_.size()) throw IndexOutOfRange(i, rows_.size());
      const auto col = pivot_of(rows_[i]);
      if (!col) continue;
      const Scalar a = g.get(*col);
      if (!a.is_zero()) g = axpy(-a, rows_[i], g);
      if (trace) trace->push_back(g);
    }
    return g;
  }

  /// The earlier rows after clearing the pivot column of a normalized,
  /// nonzero row g. Does not modify the state.
  std::vector<Row> jordan_update(const Row& g) const {
    const auto col = pivot_of(g);
    if (!col) throw Error("jordan_update: zero row");
    if (!leading(g).is_one()) throw Error("jordan_update: row is not normalized");
    if (pivots_.contains(*col)) throw PivotCollision(*col);
    std::vector<Row> out = rows_;
    for (auto& r : out) {
      const Scalar lambda = r.get(*col);
      if (!lambda.is_zero()) r = axpy(-lambda, g, r);
    }
    return out;
  }

  /// One full stage on the next input row.
  void step(const Row& c) {
    check_field(c);
    const std::size_t n = rows_.size();
    Row g = c;
    Row gp = Row::unit(field_, n);
    for (const auto& [col, i] : pivots_) {
      const Scalar a = c.get(col);
      if (a.is_zero()) continue;
      g = axpy(-a, rows_[i], g);
      gp = axpy(-a, passage_[i], gp);
    }

    const auto col = pivot_of(g);
    if (!col) {
      note_floor(n);
      rows_.push_back(std::move(g));
      passage_.push_back(std::move(gp));
      pivot_history_.push_back(std::nullopt);
      last_changed_.push_back(n);
      return;
    }
    if (pivots_.contains(*col)) throw PivotCollision(*col);
    check_certificate(n, *col);

    if (!leading(g).is_one()) {
      const Scalar inv = leading(g).inv();
      g = g.scaled(inv);
      gp = gp.scaled(inv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar lambda = rows_[i].get(*col);
      if (lambda.is_zero()) continue;
      rows_[i] = axpy(-lambda, g, rows_[i]);
      passage_[i] = axpy(-lambda, gp, passage_[i]);
      last_changed_[i] = n;
    }
    note_floor(n);
    pivots_.emplace(*col, n);
    rows_.push_back(std::move(g));
    passage_.push_back(std::move(gp));
    pivot_history_.push_back(col);
    last_changed_.push_back(n);
  }

  /// Latest stage at which any of rows 0..k changed: the observed
  /// stabilization index of that prefix at the current horizon.
  std::size_t prefix_stability(std::size_t k) const {
    if (k >= rows_.size()) throw IndexOutOfRange(k, rows_.size());
    return *std::max_element(last_changed_.begin(), last_changed_.begin() + k + 1);
  }

  /// Rows 0..k are certified when a validated pivot floor lies strictly
  /// above all of their row-lengths: no later Jordan step can reach them.
  Certification certified_stable(std::size_t k) const {
    if (k >= rows_.size()) throw IndexOutOfRange(k, rows_.size());
    const auto floor = pivot_floor();
    if (!floor) return Certification::provisional;
    for (std::size_t i = 0; i <= k; ++i) {
      if (auto m = rows_[i].maxs(); m && *m >= *floor) return Certification::provisional;
    }
    return Certification::certified;
  }

  /// Validated lower bound on every future pivot column, if any.
  std::optional<std::size_t> pivot_floor() const {
    if (!certificate_ || strategy_ != Strategy::rps) return std::nullopt;
    return floor_;
  }

  /// Passage rows at the zero rows: a basis of the left null space of the
  /// consumed prefix.
  std::vector<Row> nullspace_basis() const {
    std::vector<Row> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].is_zero()) out.push_back(passage_[i]);
    }
    return out;
  }

 private:
  void check_field(const Row& r) const {
    if (r.field() != field_) throw FieldMismatch("input row");
  }

  const Scalar& leading(const Row& r) const {
    return strategy_ == Strategy::rps ? r.right_leading() : r.left_leading();
  }

  void check_certificate(std::size_t stage, std::size_t column) const {
    if (!certificate_ || strategy_ != Strategy::rps || stage == 0 || !floor_) return;
    if (column < *floor_) throw CertificateViolation(stage, column, *floor_);
  }

  /// Accumulates max_{m <= stage} floor(m).
  void note_floor(std::size_t stage) {
    if (!certificate_) return;
    const std::size_t b = certificate_->floor(stage);
    floor_ = floor_ ? std::max(*floor_, b) : b;
  }

  Field field_;
  Strategy strategy_;
  std::optional<PivotFloor> certificate_;
  std::optional<std::size_t> floor_;
  std::vector<Row> rows_;
  std::vector<Row> passage_;
  std::map<std::size_t, std::size_t> pivots_;
  std::vector<std::optional<std::size_t>> pivot_history_;
  std::vector<std::size_t> last_changed_;
};

/// Folds `step` over input rows from..n into `state`.
inline void advance(EliminationState& state, const RowFiniteMatrix& m, std::size_t n) {
  for (std::size_t k = state.size(); k <= n; ++k) state.step(m.row(k));
}

/// Runs stages 0..n on the matrix; its certificate, if any, is attached.
inline EliminationState run_to(const RowFiniteMatrix& m, std::size_t n,
                               Strategy strategy = Strategy::rps) {
  EliminationState state(m.field(), strategy, m.certificate());
  advance(state, m, n);
  return state;
}

}  // namespace omega
