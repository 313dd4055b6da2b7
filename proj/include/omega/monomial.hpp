#pragma once

#include <cstddef>
#include <utility>

namespace omega {

/// Well-orderings of the exponent pairs (i, j) of bivariate monomials x^i y^j.
///
/// Both list pairs by total degree d = i + j. Within a degree, `prec1` lists
/// by increasing j; `prec2` lists odd degrees by increasing i and even
/// degrees by increasing j. Both have order type omega, so rank/unrank are
/// bijections with the naturals.
class MonomialOrdering {
 public:
  enum class Kind { prec1, prec2 };

  constexpr explicit MonomialOrdering(Kind kind) : kind_(kind) {}

  constexpr Kind kind() const noexcept { return kind_; }

  constexpr std::size_t rank(std::size_t i, std::size_t j) const noexcept {
    const std::size_t d = i + j;
    return triangle(d) + offset_within_degree(d, i, j);
  }

  constexpr std::pair<std::size_t, std::size_t> unrank(std::size_t r) const noexcept {
    std::size_t d = 0;
    while (triangle(d + 1) <= r) ++d;
    const std::size_t o = r - triangle(d);
    const bool by_i = kind_ == Kind::prec2 && d % 2 == 1;
    return by_i ? std::pair{o, d - o} : std::pair{d - o, o};
  }

 private:
  static constexpr std::size_t triangle(std::size_t d) noexcept { return d * (d + 1) / 2; }

  constexpr std::size_t offset_within_degree(std::size_t d, std::size_t i,
                                             std::size_t j) const noexcept {
    return (kind_ == Kind::prec2 && d % 2 == 1) ? i : j;
  }

  Kind kind_;
};

}  // namespace omega
