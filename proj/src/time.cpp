#include "lss/time.hpp"

#include <cmath>

namespace lss {

Time Time::from_double(double t) {
  return Time(static_cast<std::int64_t>(
      std::llround(t * static_cast<double>(kUnitsPerSecond))));
}

std::ostream& operator<<(std::ostream& os, Time t) {
  if (t.is_infinite()) return os << "inf";
  return os << t.seconds();
}

}  // namespace lss
