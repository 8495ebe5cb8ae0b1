#include "eopart/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eopart {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be nonincreasing");
    weight_ += parts_[k];
  }
}

Partition Partition::from_multiset(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) os << '+';
    os << parts_[k];
  }
  return os.str();
}

EvenOddSplit split_even_odd(const Partition& p) {
  EvenOddSplit out;
  for (Part part : p.parts()) (part % 2 == 0 ? out.evens : out.odds).push_back(part);
  return out;
}

Partition merge(const EvenOddSplit& split) {
  std::vector<Part> parts;
  parts.reserve(split.evens.size() + split.odds.size());
  std::merge(split.evens.begin(), split.evens.end(), split.odds.begin(),
             split.odds.end(), std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

void EnumConstraints::validate() const {
  if (min_part < 1) throw std::invalid_argument("min_part must be >= 1");
  if (max_part && *max_part < min_part)
    throw std::invalid_argument("max_part must be >= min_part");
  if (max_length && *max_length < 0)
    throw std::invalid_argument("max_length must be >= 0");
}

bool EnumConstraints::admits(const Partition& p) const {
  if (max_length && static_cast<int>(p.length()) > *max_length) return false;
  for (Part part : p.parts()) {
    if (part < min_part) return false;
    if (max_part && part > *max_part) return false;
  }
  return true;
}

PartitionStream::PartitionStream(std::int64_t n, EnumConstraints constraints)
    : n_(n), c_(constraints) {
  c_.validate();
  // No partition of n has more than n parts.
  const std::int64_t natural = std::max<std::int64_t>(n, 0);
  slot_limit_ = static_cast<int>(
      std::min<std::int64_t>(c_.max_length.value_or(static_cast<int>(natural)), natural));
  if (n_ < 0) done_ = true;
}

// Can `rem` be written with at most `slots` parts, each in [min_part, cap]?
// With exactly c parts the reachable sums are exactly [c*min, c*cap].
bool PartitionStream::feasible(std::int64_t rem, Part cap, int slots) const {
  if (rem == 0) return true;
  if (slots <= 0 || cap < c_.min_part) return false;
  const std::int64_t c = (rem + cap - 1) / cap;
  return c <= slots && c * c_.min_part <= rem;
}

void PartitionStream::fill(std::int64_t rem, Part cap) {
  while (rem > 0) {
    const int slots_after = slot_limit_ - static_cast<int>(parts_.size()) - 1;
    Part a = static_cast<Part>(std::min<std::int64_t>(cap, rem));
    while (!feasible(rem - a, a, slots_after)) --a;
    parts_.push_back(a);
    rem -= a;
    cap = a;
  }
}

bool PartitionStream::advance() {
  std::int64_t prefix = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
  for (std::size_t j = parts_.size(); j-- > 0;) {
    prefix -= parts_[j];
    const std::int64_t rest = n_ - prefix;
    const int slots_after = slot_limit_ - static_cast<int>(j) - 1;
    for (Part v = parts_[j] - 1; v >= c_.min_part; --v) {
      if (feasible(rest - v, v, slots_after)) {
        parts_.resize(j);
        parts_.push_back(v);
        fill(rest - v, v);
        return true;
      }
    }
  }
  return false;
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    const Part cap = static_cast<Part>(
        std::min<std::int64_t>(c_.max_part.value_or(std::numeric_limits<Part>::max()),
                               std::max<std::int64_t>(n_, 1)));
    if (!feasible(n_, cap, slot_limit_)) {
      done_ = true;
      return std::nullopt;
    }
    fill(n_, cap);
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Partition(parts_);
}

Count partition_count_oracle(std::int64_t n) {
  if (n < 0) return 0;
  // 128-bit intermediates: the alternating pentagonal sum briefly exceeds
  // the final value. Every stored p(m) is kept within the Count range.
  __extension__ typedef __int128 Wide;
  constexpr Wide kMax = static_cast<Wide>(std::numeric_limits<Count>::max());
  std::vector<Wide> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    Wide acc = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      Wide term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      acc += (k % 2 == 1) ? term : -term;
    }
    if (acc > kMax) throw CountOverflow("partition_count_oracle");
    p[m] = acc;
  }
  return static_cast<Count>(p[n]);
}

}  // namespace eopart
