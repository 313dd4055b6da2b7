#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "omega/scalar.hpp"

namespace omega {

/// Finitely supported sequence over a field: strictly increasing columns,
/// no stored zeros.
class Row {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  explicit Row(Field field = Field::rational()) : field_(field) {}

  /// Builds from pairs in any order. Zero values are dropped; a repeated
  /// column is rejected.
  static Row from_pairs(const Field& field, std::vector<Entry> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Row r(field);
    r.entries_.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i > 0 && pairs[i].first == pairs[i - 1].first) {
        throw Error("duplicate column " + std::to_string(pairs[i].first));
      }
      if (pairs[i].second.field() != field) throw FieldMismatch("row entry");
      if (!pairs[i].second.is_zero()) r.entries_.push_back(std::move(pairs[i]));
    }
    return r;
  }

  static Row unit(const Field& field, std::size_t column) {
    Row r(field);
    r.entries_.emplace_back(column, field.one());
    return r;
  }

  const Field& field() const noexcept { return field_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Rightmost index; empty for the zero row (rendered as -1).
  std::optional<std::size_t> maxs() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.back().first;
  }

  /// Leftmost index; empty for the zero row.
  std::optional<std::size_t> zeta() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.front().first;
  }

  Scalar get(std::size_t column) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), column,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it == entries_.end() || it->first != column) return field_.zero();
    return it->second;
  }

  const Scalar& right_leading() const { return entries_.back().second; }
  const Scalar& left_leading() const { return entries_.front().second; }

  Row scaled(const Scalar& factor) const {
    if (factor.field() != field_) throw FieldMismatch("row scale");
    Row out(field_);
    if (factor.is_zero()) return out;
    out.entries_.reserve(entries_.size());
    for (const auto& [c, v] : entries_) out.entries_.emplace_back(c, v * factor);
    return out;
  }

  friend bool operator==(const Row& a, const Row& b) {
    if (a.field_ != b.field_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (a.entries_[i].first != b.entries_[i].first ||
          !(a.entries_[i].second == b.entries_[i].second)) {
        return false;
      }
    }
    return true;
  }

  /// "col:val col:val ..."; the zero row renders as the empty string.
  std::string to_sparse_string() const {
    std::string out;
    for (const auto& [c, v] : entries_) {
      if (!out.empty()) out += ' ';
      out += std::to_string(c) + ":" + v.to_string();
    }
    return out;
  }

  /// Dense prefix of columns 0..horizon.
  std::vector<Scalar> to_dense(std::size_t horizon) const {
    std::vector<Scalar> out(horizon + 1, field_.zero());
    for (const auto& [c, v] : entries_) {
      if (c <= horizon) out[c] = v;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Row& r) {
    return os << '[' << r.to_sparse_string() << ']';
  }

 private:
  friend Row axpy(const Scalar& lambda, const Row& x, const Row& y);

  Field field_;
  std::vector<Entry> entries_;
};

/// y + lambda * x, with exact cancellations removed from the support.
inline Row axpy(const Scalar& lambda, const Row& x, const Row& y) {
  if (x.field_ != y.field_ || lambda.field() != y.field_) throw FieldMismatch("row axpy");
  if (lambda.is_zero() || x.is_zero()) return y;
  Row out(y.field_);
  out.entries_.reserve(x.entries_.size() + y.entries_.size());
  auto xi = x.entries_.begin();
  auto yi = y.entries_.begin();
  while (xi != x.entries_.end() || yi != y.entries_.end()) {
    if (yi == y.entries_.end() || (xi != x.entries_.end() && xi->first < yi->first)) {
      out.entries_.emplace_back(xi->first, lambda * xi->second);
      ++xi;
    } else if (xi == x.entries_.end() || yi->first < xi->first) {
      out.entries_.push_back(*yi);
      ++yi;
    } else {
      Scalar v = yi->second + lambda * xi->second;
      if (!v.is_zero()) out.entries_.emplace_back(xi->first, std::move(v));
      ++xi;
      ++yi;
    }
  }
  return out;
}

/// Divides by the right leading coefficient; the zero row is returned as is.
inline Row normalize_rightmost(const Row& r) {
  if (r.is_zero() || r.right_leading().is_one()) return r;
  return r.scaled(r.right_leading().inv());
}

/// Divides by the left leading coefficient; the zero row is returned as is.
inline Row normalize_leftmost(const Row& r) {
  if (r.is_zero() || r.left_leading().is_one()) return r;
  return r.scaled(r.left_leading().inv());
}

/// sum_j coeffs[j] * rows(j): the left action of a finitely supported
/// coefficient row on a family of rows.
template <typename RowAt>
Row combine(const Row& coeffs, RowAt&& rows, const Field& field) {
  Row out(field);
  for (const auto& [j, v] : coeffs.entries()) out = axpy(v, rows(j), out);
  return out;
}

/// Renders the maxs/zeta convention: -1 for the zero row.
inline long long index_or_minus_one(const std::optional<std::size_t>& index) {
  return index ? static_cast<long long>(*index) : -1;
}

}  // namespace omega
