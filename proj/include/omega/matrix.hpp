#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "omega/monomial.hpp"
#include "omega/row.hpp"

namespace omega {

/// A generator promise: for every stage m, all pivot columns created at
/// later stages are >= floor(m). Validated online by the engine.
struct PivotFloor {
  std::function<std::size_t(std::size_t)> floor;
  std::string description;

  /// floor(m) = slope * m + intercept.
  static PivotFloor affine(std::size_t slope, std::size_t intercept) {
    return {[slope, intercept](std::size_t m) { return slope * m + intercept; },
            "floor m*" + std::to_string(slope) + "+" + std::to_string(intercept)};
  }
};

/// Row-finite omega x omega matrix given by a deterministic row generator.
/// Produced rows are memoized; copies share the cache.
class RowFiniteMatrix {
 public:
  using Generator = std::function<Row(std::size_t)>;

  RowFiniteMatrix(Field field, Generator generator, std::string name = "matrix")
      : field_(field),
        name_(std::move(name)),
        shared_(std::make_shared<Shared>(std::move(generator))) {}

  const Field& field() const noexcept { return field_; }
  const std::string& name() const noexcept { return name_; }

  const Row& row(std::size_t k) const {
    std::lock_guard lock(shared_->mutex);
    auto it = shared_->memo.find(k);
    if (it != shared_->memo.end()) return it->second;
    Row r;
    try {
      r = shared_->generator(k);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw GeneratorFailure(k, e.what());
    }
    if (r.field() != field_) throw FieldMismatch("generated row " + std::to_string(k));
    return shared_->memo.emplace(k, std::move(r)).first->second;
  }

  /// The first n + 1 rows.
  std::vector<Row> top_submatrix(std::size_t n) const {
    std::vector<Row> out;
    out.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out.push_back(row(k));
    return out;
  }

  const std::optional<PivotFloor>& certificate() const noexcept { return certificate_; }

  RowFiniteMatrix with_certificate(PivotFloor floor) const {
    RowFiniteMatrix copy = *this;
    copy.certificate_ = std::move(floor);
    return copy;
  }

 private:
  struct Shared {
    explicit Shared(Generator g) : generator(std::move(g)) {}
    Generator generator;
    std::mutex mutex;
    std::map<std::size_t, Row> memo;
  };

  Field field_;
  std::string name_;
  std::shared_ptr<Shared> shared_;
  std::optional<PivotFloor> certificate_;
};

/// Row k carries value v at column k + offset for every (offset, v).
inline RowFiniteMatrix make_stencil(const Field& field,
                                   std::vector<std::pair<std::size_t, Scalar>> offsets,
                                   std::string name = "stencil") {
  std::set<std::size_t> seen;
  for (const auto& [off, v] : offsets) {
    if (!seen.insert(off).second) throw DuplicateOffset(off);
    if (v.field() != field) throw FieldMismatch("stencil value");
    if (v.is_zero()) throw Error("stencil value at offset " + std::to_string(off) + " is zero");
  }
  return RowFiniteMatrix(
      field,
      [field, offsets = std::move(offsets)](std::size_t k) {
        std::vector<Row::Entry> pairs;
        pairs.reserve(offsets.size());
        for (const auto& [off, v] : offsets) pairs.emplace_back(k + off, v);
        return Row::from_pairs(field, std::move(pairs));
      },
      std::move(name));
}

/// Finitely many listed rows; every other row is zero.
inline RowFiniteMatrix make_explicit(const Field& field, std::map<std::size_t, Row> rows,
                                     std::string name = "explicit") {
  for (const auto& [k, r] : rows) {
    if (r.field() != field) throw FieldMismatch("explicit row " + std::to_string(k));
  }
  return RowFiniteMatrix(
      field,
      [field, rows = std::move(rows)](std::size_t k) {
        auto it = rows.find(k);
        return it == rows.end() ? Row(field) : it->second;
      },
      std::move(name));
}

namespace builtin {

/// Row k = e_k + e_{k+1}.
inline RowFiniteMatrix bidiag(const Field& field = Field::rational()) {
  return make_stencil(field, {{0, field.one()}, {1, field.one()}}, "bidiag");
}

/// Every row equals e_0.
inline RowFiniteMatrix repeated(const Field& field = Field::rational()) {
  return RowFiniteMatrix(field, [field](std::size_t) { return Row::unit(field, 0); },
                         "repeated");
}

namespace detail {

inline Row fulkerson_even(const Field& f, std::size_t n) {
  auto e = [&](std::size_t c) { return Row::Entry{c, f.one()}; };
  if (n == 0) return Row::from_pairs(f, {e(2), e(3)});
  if (n == 1) return Row::from_pairs(f, {e(3), e(5), e(6)});
  return Row::from_pairs(f, {e(3), e(6), e(3 * n + 2), e(3 * (n + 1))});
}

}  // namespace detail

/// A_0 = e_2 + e_3, A_1 = 0, A_2 = e_3 + e_5 + e_6,
/// A_2n = e_3 + e_6 + e_{3n+2} + e_{3(n+1)} for n >= 2,
/// A_{2n+1} = (n+1) A_2n + sum_{i<n} A_2i for n >= 1.
inline RowFiniteMatrix fulkerson() {
  const Field f = Field::rational();
  return RowFiniteMatrix(
      f,
      [f](std::size_t k) {
        if (k == 1) return Row(f);
        const std::size_t n = k / 2;
        if (k % 2 == 0) return detail::fulkerson_even(f, n);
        Row out = detail::fulkerson_even(f, n).scaled(f.from_int(static_cast<long long>(n + 1)));
        for (std::size_t i = 0; i < n; ++i) out = axpy(f.one(), detail::fulkerson_even(f, i), out);
        return out;
      },
      "fulkerson");
}

/// Coordinates of D(x^n y^m) in the prec1-ordered monomial basis, for
/// D = (x^2 + xy + y^2) d^2/dxdy + xy (d/dx + d/dy):
///   D(x^n y^m) = nm x^{n+1}y^{m-1} + nm x^n y^m + nm x^{n-1}y^{m+1}
///              + m x^{n+1}y^m + n x^n y^{m+1}.
inline Row pde_image(std::size_t n, std::size_t m) {
  const Field f = Field::rational();
  constexpr MonomialOrdering target(MonomialOrdering::Kind::prec1);
  std::map<std::size_t, long long> acc;
  auto add = [&](long long i, long long j, long long c) {
    // A negative exponent only arises with a vanishing coefficient.
    if (i < 0 || j < 0) {
      if (c != 0) throw Error("nonzero coefficient on a degenerate monomial");
      return;
    }
    if (c == 0) return;
    acc[target.rank(static_cast<std::size_t>(i), static_cast<std::size_t>(j))] += c;
  };
  const auto N = static_cast<long long>(n);
  const auto Mx = static_cast<long long>(m);
  add(N + 1, Mx - 1, N * Mx);
  add(N, Mx, N * Mx);
  add(N - 1, Mx + 1, N * Mx);
  add(N + 1, Mx, Mx);
  add(N, Mx + 1, N);
  std::vector<Row::Entry> pairs;
  for (const auto& [c, v] : acc) pairs.emplace_back(c, f.from_int(v));
  return Row::from_pairs(f, std::move(pairs));
}

/// Row k = coordinates of D applied to the k-th prec2 monomial.
inline RowFiniteMatrix pde_operator() {
  return RowFiniteMatrix(
      Field::rational(),
      [](std::size_t k) {
        constexpr MonomialOrdering source(MonomialOrdering::Kind::prec2);
        const auto [i, j] = source.unrank(k);
        return pde_image(i, j);
      },
      "pde");
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"bidiag", "fulkerson", "pde", "repeated"};
  return all;
}

/// Looks a builtin up by name; fulkerson and pde exist over the rationals only.
inline std::optional<RowFiniteMatrix> by_name(const std::string& name,
                                              const Field& field = Field::rational()) {
  if (name == "bidiag") return bidiag(field);
  if (name == "repeated") return repeated(field);
  if (name == "fulkerson" || name == "pde") {
    if (!field.is_rational()) throw FieldMismatch(name + " is defined over the rationals");
    return name == "fulkerson" ? fulkerson() : pde_operator();
  }
  return std::nullopt;
}

}  // namespace builtin

/// Running column bound for dense rendering: N_i = max(N_{i-1}, maxs(row_i)).
inline std::optional<std::size_t> column_horizon(std::span<const Row> rows) {
  std::optional<std::size_t> bound;
  for (const auto& r : rows) {
    if (auto m = r.maxs(); m && (!bound || *m > *bound)) bound = m;
  }
  return bound;
}

}  // namespace omega
