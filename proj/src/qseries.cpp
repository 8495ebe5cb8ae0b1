#include "eopart/qseries.hpp"

#include <stdexcept>

namespace eopart {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order, 0) {}

PowerSeries::PowerSeries(std::vector<Coefficient> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != order)
    throw std::invalid_argument("coefficient count must equal the truncation order");
}

PowerSeries PowerSeries::identity(std::size_t order) {
  PowerSeries out(order);
  if (order > 0) out.coeffs_[0] = 1;
  return out;
}

PowerSeries geometric_factor(std::int64_t part_size, std::size_t order) {
  if (part_size < 1) throw std::invalid_argument("part_size must be >= 1");
  std::vector<PowerSeries::Coefficient> c(order, 0);
  for (std::size_t k = 0; k < order; k += static_cast<std::size_t>(part_size)) c[k] = 1;
  return PowerSeries(std::move(c), order);
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("power series orders differ");
  const std::size_t order = a.order();
  const auto x = a.coefficients();
  const auto y = b.coefficients();
  std::vector<PowerSeries::Coefficient> out(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; i + j < order; ++j) {
      if (y[j] == 0) continue;
      out[i + j] = checked_add(out[i + j], checked_mul(x[i], y[j], "multiply"), "multiply");
    }
  }
  return PowerSeries(std::move(out), order);
}

namespace {

template <typename Keep>
PowerSeries product_of_factors(std::size_t order, Keep keep) {
  PowerSeries acc = PowerSeries::identity(order);
  for (std::size_t k = 1; k < order; ++k)
    if (keep(k)) acc = multiply(acc, geometric_factor(static_cast<std::int64_t>(k), order));
  return acc;
}

}  // namespace

PowerSeries gprime_series(FamilyIndex i, std::size_t order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  return product_of_factors(
      order, [i](std::size_t k) { return mod8_residue_allowed(static_cast<Part>(k), i); });
}

PowerSeries euler_product(std::size_t order) {
  return product_of_factors(order, [](std::size_t) { return true; });
}

}  // namespace eopart
