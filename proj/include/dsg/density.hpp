#ifndef DSG_DENSITY_HPP
#define DSG_DENSITY_HPP

#include <cmath>
#include <compare>
#include <cstdint>

#include "dsg/error.hpp"

namespace dsg {

using wide_int = __int128;

/// Exact density value.
///
/// A `ratio` density is `numerator / denominator`; this covers d(H) = |E(H)|/|H|
/// and the clique objective |E(S)|^2/|S|. A `root_ratio` density is
/// `numerator / sqrt(denominator)` and covers the directed objective
/// |E(S1,S2)| / sqrt(|S1||S2|), with the denominator holding |S1|*|S2|.
///
/// Ordering is decided with integer cross multiplication (squared for the
/// root form), so two densities never compare through floating point.
class Density {
 public:
  enum class Kind : std::uint8_t { ratio, root_ratio };

  constexpr Density() = default;

  static Density ratio(std::uint64_t num, std::uint64_t den) { return Density(num, den, Kind::ratio); }
  static Density root_ratio(std::uint64_t num, std::uint64_t den) {
    return Density(num, den, Kind::root_ratio);
  }

  constexpr std::uint64_t numerator() const noexcept { return num_; }
  constexpr std::uint64_t denominator() const noexcept { return den_; }
  constexpr Kind kind() const noexcept { return kind_; }

  double value() const noexcept {
    const auto n = static_cast<double>(num_);
    return kind_ == Kind::ratio ? n / static_cast<double>(den_)
                                : n / std::sqrt(static_cast<double>(den_));
  }

  friend std::strong_ordering operator<=>(const Density& a, const Density& b) {
    detail::require(a.kind_ == b.kind_, "comparing densities of different kinds");
    wide_int lhs, rhs;
    if (a.kind_ == Kind::ratio) {
      lhs = wide_int(a.num_) * b.den_;
      rhs = wide_int(b.num_) * a.den_;
    } else {
      lhs = wide_int(a.num_) * a.num_ * b.den_;
      rhs = wide_int(b.num_) * b.num_ * a.den_;
    }
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Value equality: 2/4 == 1/2.
  friend bool operator==(const Density& a, const Density& b) { return (a <=> b) == 0; }

 private:
  Density(std::uint64_t num, std::uint64_t den, Kind kind) : num_(num), den_(den), kind_(kind) {
    detail::require(den > 0, "density denominator must be positive");
  }

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
  Kind kind_ = Kind::ratio;
};

}  // namespace dsg

#endif
