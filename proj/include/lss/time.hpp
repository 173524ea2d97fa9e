#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>

namespace lss {

// Fixed-point time: integer micro-units. Costs and timestamps compare exactly.
class Time {
 public:
  static constexpr std::int64_t kUnitsPerSecond = 1'000'000;

  constexpr Time() = default;
  constexpr explicit Time(std::int64_t units) : units_(units) {}

  static constexpr Time units(std::int64_t u) { return Time(u); }
  static constexpr Time whole(std::int64_t t) { return Time(t * kUnitsPerSecond); }
  static Time from_double(double t);
  static constexpr Time zero() { return Time(0); }
  static constexpr Time infinity() {
    return Time(std::numeric_limits<std::int64_t>::max() / 4);
  }

  constexpr std::int64_t count() const { return units_; }
  constexpr double seconds() const {
    return static_cast<double>(units_) / static_cast<double>(kUnitsPerSecond);
  }
  constexpr bool is_infinite() const { return units_ >= infinity().units_; }

  constexpr auto operator<=>(const Time&) const = default;

  constexpr Time operator+(Time o) const { return Time(units_ + o.units_); }
  constexpr Time operator-(Time o) const { return Time(units_ - o.units_); }
  constexpr Time& operator+=(Time o) {
    units_ += o.units_;
    return *this;
  }
  constexpr Time& operator-=(Time o) {
    units_ -= o.units_;
    return *this;
  }
  constexpr Time operator*(std::int64_t k) const { return Time(units_ * k); }
  constexpr std::int64_t operator/(Time o) const { return units_ / o.units_; }
  constexpr Time operator%(Time o) const { return Time(units_ % o.units_); }

 private:
  std::int64_t units_ = 0;
};

inline constexpr Time gcd(Time a, Time b) {
  return Time(std::gcd(a.count(), b.count()));
}

std::ostream& operator<<(std::ostream& os, Time t);

}  // namespace lss
