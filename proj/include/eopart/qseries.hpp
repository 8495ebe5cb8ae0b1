#pragma once

// Truncated power series with exact integer coefficients. Coefficient k is
// the coefficient of q^k and is valid for 0 <= k < order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eopart/classes.hpp"
#include "eopart/count.hpp"

namespace eopart {

class PowerSeries {
 public:
  using Coefficient = std::int64_t;

  // The zero series of the given order.
  explicit PowerSeries(std::size_t order);
  // Throws std::invalid_argument if coefficients.size() != order.
  PowerSeries(std::vector<Coefficient> coefficients, std::size_t order);

  // 1 + 0q + 0q^2 + ...
  static PowerSeries identity(std::size_t order);

  [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size(); }
  [[nodiscard]] std::span<const Coefficient> coefficients() const noexcept { return coeffs_; }
  // Throws std::out_of_range for k >= order.
  [[nodiscard]] Coefficient operator[](std::size_t k) const { return coeffs_.at(k); }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Coefficient> coeffs_;
};

// 1 + q^part_size + q^(2 part_size) + ... truncated at order.
[[nodiscard]] PowerSeries geometric_factor(std::int64_t part_size, std::size_t order);

// Truncated Cauchy product. Throws std::invalid_argument on an order mismatch
// and CountOverflow on overflow.
[[nodiscard]] PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);

// Generating function of partitions into parts 1, 4, 7 mod 8 (i = 1) or
// 3, 4, 5 mod 8 (i = 2).
[[nodiscard]] PowerSeries gprime_series(FamilyIndex i, std::size_t order);

// prod_{k >= 1} 1/(1 - q^k), the generating function of p(n).
[[nodiscard]] PowerSeries euler_product(std::size_t order);

}  // namespace eopart
