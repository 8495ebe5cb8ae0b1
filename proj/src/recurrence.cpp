#include "eopart/recurrence.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace eopart {

namespace {

constexpr std::string_view kWhere = "h_recurrence";

// Right-hand-side weights of the recursive equations.
std::int64_t shift_weight(const CountKey& k) { return k.n - 2 * (k.r + k.s); }
std::int64_t odd_one_weight(const CountKey& k) { return k.n - 2 * (k.r + k.s) + 1; }
std::int64_t even_min_weight(const CountKey& k, SystemMutation m = SystemMutation::kNone) {
  return k.n - 4 * (k.r + k.s) + (m == SystemMutation::kEvenMinOffset ? 1 : 2);
}

const FamilyIndex kOne{1};
const FamilyIndex kTwo{2};

}  // namespace

std::size_t CountKeyHash::operator()(const CountKey& k) const noexcept {
  // Pack the indices (small at desk scale) and finish with a splitmix64 mix.
  std::uint64_t x = static_cast<std::uint64_t>(k.i.value());
  x = x * 0x100000001B3ULL ^ static_cast<std::uint64_t>(k.r);
  x = x * 0x100000001B3ULL ^ static_cast<std::uint64_t>(k.s);
  x = x * 0x100000001B3ULL ^ static_cast<std::uint64_t>(k.n);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return static_cast<std::size_t>(x);
}

std::optional<Count> CountTable::find(const CountKey& key) const {
  std::shared_lock lock(mutex_);
  if (auto it = values_.find(key); it != values_.end()) return it->second;
  return std::nullopt;
}

Count CountTable::insert(const CountKey& key, Count value) {
  std::unique_lock lock(mutex_);
  auto [it, fresh] = values_.try_emplace(key, value);
  if (fresh) {
    ++stores_;
  } else if (it->second != value) {
    throw std::logic_error("CountTable: conflicting values for one key");
  }
  return it->second;
}

std::size_t CountTable::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

std::size_t CountTable::stores() const {
  std::shared_lock lock(mutex_);
  return stores_;
}

std::optional<Count> base_case(const CountKey& key) {
  if (key.r < 0 || key.s < 0 || key.n < 0) return 0;
  const bool no_parts = key.r + key.s == 0;
  if (no_parts && key.n == 0) return 1;
  if (no_parts || key.n == 0) return 0;
  return std::nullopt;
}

Count h_recurrence(const CountKey& key, CountTable& memo) {
  // Base cases are answered directly and never stored.
  if (auto base = base_case(key)) return *base;
  if (auto hit = memo.find(key)) return *hit;
  Count value = 0;
  if (key.i.value() == 2) {
    value = h_recurrence({kOne, key.r, key.s, shift_weight(key)}, memo);
  } else {
    value = h_recurrence({kOne, key.r, key.s, shift_weight(key)}, memo);
    value = checked_add(value, h_recurrence({kOne, key.r, key.s - 1, odd_one_weight(key)}, memo),
                        kWhere);
    value = checked_add(value, h_recurrence({kOne, key.r - 1, key.s, even_min_weight(key)}, memo),
                        kWhere);
  }
  return memo.insert(key, value);
}

Count h_total_from_recurrence(FamilyIndex i, std::int64_t n, CountTable& memo) {
  if (n < 0) return 0;
  Count total = 0;
  for (std::int64_t r = 0; r <= n; ++r)
    for (std::int64_t s = 0; r + s <= n; ++s)
      total = checked_add(total, h_recurrence({i, r, s, n}, memo), kWhere);
  return total;
}

SystemReport check_system(const RefinedCounter& counter, const GridBounds& bounds,
                          SystemMutation mutation) {
  SystemReport report;
  report.bounds = bounds;
  auto expect = [&](int equation, const CountKey& key, Count lhs, Count rhs) {
    ++report.evaluations;
    if (lhs != rhs) report.violations.push_back({equation, key, lhs, rhs});
  };
  for (std::int64_t n = 0; n <= bounds.max_n; ++n) {
    for (std::int64_t r = 0; r <= bounds.max_r; ++r) {
      for (std::int64_t s = 0; s <= bounds.max_s; ++s) {
        const CountKey k1{kOne, r, s, n};
        const CountKey k2{kTwo, r, s, n};
        const Count h1 = counter(k1);
        const Count h2 = counter(k2);
        if (auto base = base_case(k1)) {
          expect(1, k1, h1, *base);
          expect(1, k2, h2, *base);
        }
        Count rhs = h2;
        rhs = checked_add(rhs, counter({kOne, r, s - 1, odd_one_weight(k1)}), "check_system");
        rhs = checked_add(rhs, counter({kOne, r - 1, s, even_min_weight(k1, mutation)}),
                          "check_system");
        expect(2, k1, h1, rhs);
        expect(3, k2, h2, counter({kOne, r, s, shift_weight(k1)}));
      }
    }
  }
  return report;
}

HGrid::HGrid(const GridBounds& bounds) : bounds_(bounds) {
  if (bounds.max_r < 0 || bounds.max_s < 0 || bounds.max_n < 0)
    throw std::invalid_argument("grid bounds must be nonnegative");
  const auto cells = static_cast<std::size_t>(2 * (bounds.max_r + 1) * (bounds.max_s + 1) *
                                              (bounds.max_n + 1));
  cells_.assign(cells, 0);
  std::vector<bool> derived(cells, false);

  // Reads only cells derived earlier in the sweep; anything else means the
  // order does not follow the induction and is a bug.
  auto lookup = [&](int i, std::int64_t r, std::int64_t s, std::int64_t n) -> Count {
    if (r < 0 || s < 0 || n < 0) return 0;
    const auto at = index(i, r, s, n);
    if (!derived[at]) throw std::logic_error("HGrid: cell read before it was derived");
    return cells_[at];
  };

  for (std::int64_t n = 0; n <= bounds.max_n; ++n) {
    for (std::int64_t len = 0; len <= bounds.max_r + bounds.max_s; ++len) {
      for (std::int64_t r = 0; r <= std::min(len, bounds.max_r); ++r) {
        const std::int64_t s = len - r;
        if (s > bounds.max_s) continue;
        const CountKey key{kOne, r, s, n};
        Count h1 = 0;
        Count h2 = 0;
        if (auto base = base_case(key)) {
          h1 = h2 = *base;
        } else {
          h2 = lookup(1, r, s, shift_weight(key));
          h1 = checked_add(h2, lookup(1, r, s - 1, odd_one_weight(key)), "HGrid");
          h1 = checked_add(h1, lookup(1, r - 1, s, even_min_weight(key)), "HGrid");
        }
        cells_[index(1, r, s, n)] = h1;
        cells_[index(2, r, s, n)] = h2;
        derived[index(1, r, s, n)] = true;
        derived[index(2, r, s, n)] = true;
      }
    }
  }
}

std::size_t HGrid::index(int i, std::int64_t r, std::int64_t s, std::int64_t n) const {
  const auto rs = static_cast<std::size_t>(bounds_.max_r + 1);
  const auto ss = static_cast<std::size_t>(bounds_.max_s + 1);
  const auto ns = static_cast<std::size_t>(bounds_.max_n + 1);
  return ((static_cast<std::size_t>(i - 1) * rs + static_cast<std::size_t>(r)) * ss +
          static_cast<std::size_t>(s)) *
             ns +
         static_cast<std::size_t>(n);
}

Count HGrid::at(const CountKey& key) const {
  if (key.r < 0 || key.s < 0 || key.n < 0) return 0;
  if (key.r > bounds_.max_r || key.s > bounds_.max_s || key.n > bounds_.max_n)
    throw std::out_of_range("HGrid: key outside the tabulated grid");
  return cells_[index(key.i.value(), key.r, key.s, key.n)];
}

bool verify_uniqueness(const GridBounds& bounds) {
  const HGrid grid(bounds);
  CountTable memo;
  for (int i : {1, 2})
    for (std::int64_t r = 0; r <= bounds.max_r; ++r)
      for (std::int64_t s = 0; s <= bounds.max_s; ++s)
        for (std::int64_t n = 0; n <= bounds.max_n; ++n) {
          const CountKey key{FamilyIndex(i), r, s, n};
          if (grid.at(key) != h_recurrence(key, memo)) return false;
        }
  return true;
}

}  // namespace eopart
