#pragma once

/**
 * @file recurrence.hpp
 * @brief The recurrence system that determines H_i(r, s, n).
 *
 * Base cases (for both i):
 *
 *   H_i(0, 0, 0) = 1
 *   H_i(r, s, n) = 0  if any index is negative, or n = 0 with r + s > 0,
 *                     or r + s = 0 with n > 0
 *
 * Recursive equations:
 *
 *   H_1(r,s,n) - H_2(r,s,n) = H_1(r, s-1, n-2(r+s)+1) + H_1(r-1, s, n-4(r+s)+2)
 *   H_2(r,s,n)              = H_1(r, s,   n-2(r+s))
 *
 * The evaluator stores only counts, so it uses the rearranged form
 *
 *   H_1(r,s,n) = H_1(r,s,n-2(r+s)) + H_1(r,s-1,n-2(r+s)+1) + H_1(r-1,s,n-4(r+s)+2)
 *
 * Every recursive call strictly lowers n whenever r + s >= 1, and r + s = 0
 * is a base case, so the recursion terminates.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "eopart/classes.hpp"
#include "eopart/count.hpp"

namespace eopart {

using CountKey = RefinedKey;

struct CountKeyHash {
  std::size_t operator()(const CountKey& k) const noexcept;
};

// Write-once memo. Readers see either nothing or the final value of a key;
// concurrent writers of the same key must agree (a disagreement throws
// std::logic_error).
class CountTable {
 public:
  [[nodiscard]] std::optional<Count> find(const CountKey& key) const;
  // Stores value unless the key is already present; returns the stored value.
  Count insert(const CountKey& key, Count value);

  [[nodiscard]] std::size_t size() const;
  // Number of insert calls that created a new entry.
  [[nodiscard]] std::size_t stores() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<CountKey, Count, CountKeyHash> values_;
  std::size_t stores_ = 0;
};

// The base-case value for key, or nullopt if a recursive equation applies.
[[nodiscard]] std::optional<Count> base_case(const CountKey& key);

[[nodiscard]] Count h_recurrence(const CountKey& key, CountTable& memo);

// H_i(n) summed over every r, s >= 0 from the recurrence.
[[nodiscard]] Count h_total_from_recurrence(FamilyIndex i, std::int64_t n, CountTable& memo);

struct GridBounds {
  std::int64_t max_r = 0;
  std::int64_t max_s = 0;
  std::int64_t max_n = 0;
};

using RefinedCounter = std::function<Count(const RefinedKey&)>;

// Deliberate checker defects, used to show that check_system can fail.
enum class SystemMutation {
  kNone,
  kEvenMinOffset,  // n - 4(r+s) + 2 becomes n - 4(r+s) + 1
};

struct Violation {
  int equation;  // 1 = base case, 2 = difference equation, 3 = shift equation
  CountKey key;
  Count lhs;
  Count rhs;
};

struct SystemReport {
  GridBounds bounds;
  std::size_t evaluations = 0;
  std::vector<Violation> violations;

  [[nodiscard]] bool verdict() const noexcept { return violations.empty(); }
};

// Evaluates the three equations at every grid point 0 <= r <= max_r,
// 0 <= s <= max_s, 0 <= n <= max_n. Equation 1 is evaluated at base-case
// keys, equations 2 and 3 everywhere (they hold at base keys as well). For
// equation 2 the lhs is H_1 and the rhs is H_2 plus the two shifted terms.
[[nodiscard]] SystemReport check_system(const RefinedCounter& counter, const GridBounds& bounds,
                                        SystemMutation mutation = SystemMutation::kNone);

// Bottom-up tabulation of H_i over a grid in increasing (n, r+s) order.
class HGrid {
 public:
  explicit HGrid(const GridBounds& bounds);

  [[nodiscard]] const GridBounds& bounds() const noexcept { return bounds_; }
  // 0 for keys with a negative index; throws std::out_of_range above the grid.
  [[nodiscard]] Count at(const CountKey& key) const;

 private:
  [[nodiscard]] std::size_t index(int i, std::int64_t r, std::int64_t s, std::int64_t n) const;

  GridBounds bounds_;
  std::vector<Count> cells_;
};

// Tabulates the grid bottom-up and compares every cell, for both i, against
// the memoized top-down evaluator.
[[nodiscard]] bool verify_uniqueness(const GridBounds& bounds);

}  // namespace eopart
