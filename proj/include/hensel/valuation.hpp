#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace hensel {

/// An element of Z ∪ {+∞}. Infinity is absorbing under addition and
/// compares above every integer.
class ExtValuation {
 public:
  constexpr ExtValuation(long value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtValuation infinity() { return ExtValuation(kInfinity, 0); }

  constexpr bool is_infinite() const { return value_ == kInfinity; }
  constexpr bool is_finite() const { return value_ != kInfinity; }

  /// Integer value; undefined for infinity, so callers test first.
  constexpr long value() const { return value_; }

  constexpr ExtValuation operator+(ExtValuation other) const {
    if (is_infinite() || other.is_infinite()) return infinity();
    return ExtValuation(value_ + other.value_);
  }

  constexpr auto operator<=>(const ExtValuation&) const = default;

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(value_);
  }

 private:
  static constexpr long kInfinity = std::numeric_limits<long>::max();
  constexpr ExtValuation(long value, int) : value_(value) {}

  long value_;
};

inline std::ostream& operator<<(std::ostream& os, ExtValuation v) {
  return os << v.to_string();
}

}  // namespace hensel
