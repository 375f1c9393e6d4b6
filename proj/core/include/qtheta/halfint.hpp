#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "qtheta/exprat.hpp"

namespace qtheta {

/// Element of (1/2)Z, stored as twice its value.
struct HalfInt {
  std::int64_t twice = 0;

  static constexpr HalfInt from_twice(std::int64_t t) { return HalfInt{t}; }
  static constexpr HalfInt integer(std::int64_t n) { return HalfInt{2 * n}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  ExpRat value() const { return ExpRat(twice, 2); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice - b.twice}; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

inline std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

}  // namespace qtheta
