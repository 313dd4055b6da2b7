#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "omega/scalar.hpp"

namespace omega {

/// A free symbol: either a right-hand-side symbol (c_3, s_0, ...) or a
/// solution parameter t_m. The two namespaces never collide.
struct Symbol {
  enum class Space { rhs, param };

  Space space = Space::rhs;
  std::string name;
  std::size_t index = 0;

  static Symbol rhs(std::string name, std::size_t index) {
    return {Space::rhs, std::move(name), index};
  }
  static Symbol param(std::size_t index) { return {Space::param, "t", index}; }

  bool is_param() const noexcept { return space == Space::param; }

  std::string to_string() const { return name + "_" + std::to_string(index); }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Affine form constant + sum(coefficient * symbol), kept canonical:
/// no stored coefficient is zero.
class LinForm {
 public:
  using Terms = std::map<Symbol, Scalar>;

  explicit LinForm(Field field) : field_(field), constant_(field.zero()) {}

  static LinForm constant(const Scalar& value) {
    LinForm f(value.field());
    f.constant_ = value;
    return f;
  }

  static LinForm symbol(const Field& field, Symbol s) {
    LinForm f(field);
    f.terms_.emplace(std::move(s), field.one());
    return f;
  }

  const Field& field() const noexcept { return field_; }
  const Scalar& constant_term() const noexcept { return constant_; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const { return constant_.is_zero() && terms_.empty(); }

  Scalar coefficient(const Symbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Adds `value * s`, dropping the term when it cancels.
  void add_term(const Symbol& s, const Scalar& value) {
    if (value.field() != field_) throw FieldMismatch("term field");
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_constant(const Scalar& value) {
    if (value.field() != field_) throw FieldMismatch("constant field");
    constant_ += value;
  }

  /// Rebuilds the form from scratch; a no-op on canonical input.
  LinForm canonical() const {
    LinForm out(field_);
    out.constant_ = constant_;
    for (const auto& [s, v] : terms_) out.add_term(s, v);
    return out;
  }

  bool mentions_params() const {
    for (const auto& [s, v] : terms_) {
      if (s.is_param()) return true;
    }
    return false;
  }

  friend bool operator==(const LinForm& a, const LinForm& b) {
    if (a.field_ != b.field_) return false;
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

  /// Terms by namespace (RHS symbols before parameters) then index,
  /// constant last: "s_0 - s_1 + t_0", "-c_0 + c_2 + 1/2*t_1".
  std::string to_string() const {
    std::vector<std::pair<std::string, Scalar>> parts;
    for (const auto& [s, v] : terms_) parts.emplace_back(s.to_string(), v);
    if (!constant_.is_zero() || parts.empty()) parts.emplace_back("", constant_);
    return render(parts);
  }

  /// Renders `f = 0` with the highest-index RHS symbol first and the rest in
  /// ascending order: "c_3 - c_0 - 2*c_2 = 0".
  std::string to_constraint_string() const {
    std::vector<std::pair<std::string, Scalar>> parts;
    std::optional<Terms::const_iterator> lead;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (!it->first.is_param()) lead = it;
    }
    if (lead) parts.emplace_back((*lead)->first.to_string(), (*lead)->second);
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (lead && it == *lead) continue;
      parts.emplace_back(it->first.to_string(), it->second);
    }
    if (!constant_.is_zero() || parts.empty()) parts.emplace_back("", constant_);
    return render(parts) + " = 0";
  }

  friend std::ostream& operator<<(std::ostream& os, const LinForm& f) {
    return os << f.to_string();
  }

 private:
  static std::string render(const std::vector<std::pair<std::string, Scalar>>& parts) {
    std::string out;
    bool first = true;
    for (const auto& [name, value] : parts) {
      const bool negative = value.is_negative();
      const Scalar magnitude = negative ? -value : value;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (name.empty()) {
        out += magnitude.to_string();
      } else if (magnitude.is_one()) {
        out += name;
      } else {
        out += magnitude.to_string() + "*" + name;
      }
    }
    return out;
  }

  Field field_;
  Scalar constant_;
  Terms terms_;
};

/// y + lambda * x.
inline LinForm axpy(const Scalar& lambda, const LinForm& x, const LinForm& y) {
  if (x.field() != y.field() || lambda.field() != y.field()) {
    throw FieldMismatch("linform_axpy operands");
  }
  LinForm out = y;
  if (lambda.is_zero()) return out;
  out.add_constant(lambda * x.constant_term());
  for (const auto& [s, v] : x.terms()) out.add_term(s, lambda * v);
  return out;
}

using Binding = std::map<Symbol, Scalar>;

/// Substitutes the bound symbols; unbound ones are kept.
inline LinForm eval(const LinForm& f, const Binding& binding) {
  LinForm out = LinForm::constant(f.constant_term());
  for (const auto& [s, v] : f.terms()) {
    auto it = binding.find(s);
    if (it == binding.end()) {
      out.add_term(s, v);
    } else {
      if (it->second.field() != f.field()) throw FieldMismatch("binding value");
      out.add_constant(v * it->second);
    }
  }
  return out;
}

}  // namespace omega
