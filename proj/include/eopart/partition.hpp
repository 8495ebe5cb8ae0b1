#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions, constrained enumeration and the even/odd split.
 *
 * A partition is stored with its parts in nonincreasing order. The empty
 * partition is an ordinary value: it is the unique partition of 0.
 *
 * Enumeration is caller-pulled and yields partitions in decreasing
 * lexicographic order on the part sequence, e.g. for n = 4:
 *
 *   4, 3+1, 2+2, 2+1+1, 1+1+1+1
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eopart/count.hpp"

namespace eopart {

using Part = int;

class Partition {
 public:
  Partition() = default;

  // Throws std::invalid_argument unless parts are positive and nonincreasing.
  explicit Partition(std::vector<Part> parts);

  // Sorts the given parts into nonincreasing order first.
  static Partition from_multiset(std::vector<Part> parts);

  [[nodiscard]] std::span<const Part> parts() const noexcept { return parts_; }
  [[nodiscard]] std::int64_t weight() const noexcept { return weight_; }
  [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

  // "5+3+1"; the empty partition prints as "()".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) noexcept {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Part> parts_;
  std::int64_t weight_ = 0;
};

struct EvenOddSplit {
  std::vector<Part> evens;  // nonincreasing
  std::vector<Part> odds;   // nonincreasing

  [[nodiscard]] int r() const noexcept { return static_cast<int>(evens.size()); }
  [[nodiscard]] int s() const noexcept { return static_cast<int>(odds.size()); }
  [[nodiscard]] std::optional<Part> smallest_even() const {
    if (evens.empty()) return std::nullopt;
    return evens.back();
  }
  [[nodiscard]] std::optional<Part> smallest_odd() const {
    if (odds.empty()) return std::nullopt;
    return odds.back();
  }
};

[[nodiscard]] EvenOddSplit split_even_odd(const Partition& p);

// Inverse of split_even_odd.
[[nodiscard]] Partition merge(const EvenOddSplit& split);

struct EnumConstraints {
  Part min_part = 1;
  std::optional<Part> max_part;
  std::optional<int> max_length;

  // Throws std::invalid_argument on min_part < 1, max_part < min_part or a
  // negative max_length.
  void validate() const;
  [[nodiscard]] bool admits(const Partition& p) const;
};

// Pull-style generator over all partitions of n satisfying the constraints.
// n < 0 yields nothing; n = 0 yields the empty partition.
class PartitionStream {
 public:
  PartitionStream(std::int64_t n, EnumConstraints constraints = {});

  [[nodiscard]] std::optional<Partition> next();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    explicit iterator(PartitionStream* stream) : stream_(stream) { ++*this; }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      if (!current_) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.stream_ == b.stream_;
    }

   private:
    PartitionStream* stream_ = nullptr;
    std::optional<Partition> current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  bool feasible(std::int64_t rem, Part cap, int slots) const;
  void fill(std::int64_t rem, Part cap);
  bool advance();

  std::int64_t n_;
  EnumConstraints c_;
  int slot_limit_;
  std::vector<Part> parts_;
  bool started_ = false;
  bool done_ = false;
};

[[nodiscard]] inline PartitionStream enumerate_partitions(
    std::int64_t n, EnumConstraints constraints = {}) {
  return PartitionStream(n, constraints);
}

// p(n) via Euler's pentagonal-number recurrence. Independent of the
// enumerator; throws CountOverflow once p(n) no longer fits in a Count.
[[nodiscard]] Count partition_count_oracle(std::int64_t n);

}  // namespace eopart
