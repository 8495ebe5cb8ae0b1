#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eopart {

// Exact partition counts. Arithmetic on counts goes through the checked
// helpers below so that an overflow raises instead of wrapping.
using Count = std::uint64_t;

class CountOverflow : public std::overflow_error {
 public:
  explicit CountOverflow(std::string_view where)
      : std::overflow_error("count overflow in " + std::string(where)) {}
};

template <std::integral T>
[[nodiscard]] T checked_add(T a, T b, std::string_view where) {
  T out{};
  if (__builtin_add_overflow(a, b, &out)) throw CountOverflow(where);
  return out;
}

template <std::integral T>
[[nodiscard]] T checked_sub(T a, T b, std::string_view where) {
  T out{};
  if (__builtin_sub_overflow(a, b, &out)) throw CountOverflow(where);
  return out;
}

template <std::integral T>
[[nodiscard]] T checked_mul(T a, T b, std::string_view where) {
  T out{};
  if (__builtin_mul_overflow(a, b, &out)) throw CountOverflow(where);
  return out;
}

}  // namespace eopart
