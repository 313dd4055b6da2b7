#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "omega/error.hpp"

namespace omega {

class Scalar;

/// Descriptor of the coefficient field: the rationals or GF(p).
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rational() { return Field(Kind::rational, 0); }

  /// GF(p). The modulus is checked for primality by trial division.
  static Field gf(std::uint64_t p) {
    if (p < 2 || p > (std::uint64_t{1} << 32)) {
      throw InvalidField("modulus must lie in [2, 2^32]: " + std::to_string(p));
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw InvalidField(std::to_string(p) + " is not prime");
    }
    return Field(Kind::prime, p);
  }

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::rational; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  /// Accepts "n", "-n", "p/q"; over GF(p) fractions are mapped via inverses.
  Scalar parse(std::string_view text) const;

  std::string to_string() const {
    return is_rational() ? "rational" : "gf " + std::to_string(modulus_);
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;

  friend class Scalar;
};

/// Exact field element: a reduced rational or a residue modulo a prime.
class Scalar {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {
    std::get<mpq_class>(value_).canonicalize();
  }
  Scalar(Residue r) : value_(r) {}

  Field field() const {
    if (const auto* r = std::get_if<Residue>(&value_)) {
      return Field(Field::Kind::prime, r->modulus);
    }
    return Field::rational();
  }

  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(value_); }

  bool is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<Residue>(value_).value == 0;
  }

  bool is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<Residue>(value_).value == 1;
  }

  /// True only for strictly negative rationals; residues carry no sign.
  bool is_negative() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
    return false;
  }

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const Residue& residue() const { return std::get<Residue>(value_); }

  Scalar operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
    const auto& r = std::get<Residue>(value_);
    return Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus};
  }

  Scalar inv() const {
    if (is_zero()) throw DivisionByZero();
    if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(1 / *q));
    const auto& r = std::get<Residue>(value_);
    return Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus};
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.is_rational()) return Scalar(mpq_class(a.rational() + b.rational()));
    const auto& x = a.residue();
    std::uint64_t s = x.value + b.residue().value;
    if (s >= x.modulus) s -= x.modulus;
    return Residue{s, x.modulus};
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.is_rational()) return Scalar(mpq_class(a.rational() - b.rational()));
    const auto& x = a.residue();
    const auto y = b.residue().value;
    return Residue{x.value >= y ? x.value - y : x.value + x.modulus - y, x.modulus};
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.is_rational()) return Scalar(mpq_class(a.rational() * b.rational()));
    const auto& x = a.residue();
    return Residue{mul_mod(x.value, b.residue().value, x.modulus), x.modulus};
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    return a * b.inv();
  }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Equality never coerces: comparing across fields is an error.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.is_rational()) return a.rational() == b.rational();
    return a.residue().value == b.residue().value;
  }

  std::string to_string() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<Residue>(value_).value);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  static void check_same(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) {
      throw FieldMismatch("rational and GF(p) operands");
    }
    if (!a.is_rational() && a.residue().modulus != b.residue().modulus) {
      throw FieldMismatch("GF(" + std::to_string(a.residue().modulus) + ") vs GF(" +
                          std::to_string(b.residue().modulus) + ")");
    }
  }

  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  }

  static std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    while (e) {
      if (e & 1) acc = mul_mod(acc, base, m);
      base = mul_mod(base, base, m);
      e >>= 1;
    }
    return acc;
  }

  std::variant<mpq_class, Residue> value_;
};

inline Scalar Field::zero() const { return from_int(0); }
inline Scalar Field::one() const { return from_int(1); }

inline Scalar Field::from_int(long long value) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(std::to_string(value))));
  const auto p = static_cast<long long>(modulus_);
  long long r = value % p;
  if (r < 0) r += p;
  return Scalar::Residue{static_cast<std::uint64_t>(r), modulus_};
}

inline Scalar Field::parse(std::string_view text) const {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) -> mpz_class {
    std::string s(part);
    if (s.empty() || (s.size() == 1 && (s[0] == '-' || s[0] == '+'))) {
      throw InvalidField("malformed scalar '" + std::string(text) + "'");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw InvalidField("malformed scalar '" + std::string(text) + "'");
      }
    }
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s);
  };
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1)
                                                 : parse_int(text.substr(slash + 1));
  if (den == 0) throw DivisionByZero();
  if (is_rational()) return Scalar(mpq_class(num, den));
  mpz_class p(std::to_string(modulus_));
  mpz_class n = num % p;
  if (n < 0) n += p;
  mpz_class d = den % p;
  if (d < 0) d += p;
  Scalar a = Scalar::Residue{n.get_ui(), modulus_};
  Scalar b = Scalar::Residue{d.get_ui(), modulus_};
  return a / b;
}

}  // namespace omega
