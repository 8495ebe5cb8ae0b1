#pragma once

// Membership predicates and brute-force counters for the three partition
// families compared by the identities:
//
//   G_i  : parts >= 2i-1, no two parts equal or differing by 1, no two even
//          parts differing by 2 (Gollnitz-Gordon difference conditions).
//   G'_i : every part is 1, 4 or 7 mod 8 (i = 1) or 3, 4 or 5 mod 8 (i = 2).
//   H_i  : distinct odd parts, smallest odd part >= 2i-1, and smallest even
//          part >= 2(length + i - 1), where length counts all parts.
//
// Counters enumerate and filter. They are the trusted reference that the
// recurrence and the q-series are checked against.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eopart/count.hpp"
#include "eopart/partition.hpp"

namespace eopart {

class FamilyIndex {
 public:
  // Throws std::invalid_argument unless i is 1 or 2.
  explicit FamilyIndex(int i);

  [[nodiscard]] int value() const noexcept { return i_; }
  // Lower bound on every part of a G_i / H_i member: 2i - 1.
  [[nodiscard]] int min_part() const noexcept { return 2 * i_ - 1; }

  friend bool operator==(FamilyIndex, FamilyIndex) = default;

 private:
  int i_;
};

enum class Family { G, Gprime, H };

[[nodiscard]] std::string_view family_name(Family f) noexcept;
// Accepts "G", "Gprime", "H".
[[nodiscard]] std::optional<Family> parse_family(std::string_view name) noexcept;

struct RefinedKey {
  FamilyIndex i;
  std::int64_t r;
  std::int64_t s;
  std::int64_t n;

  friend bool operator==(const RefinedKey&, const RefinedKey&) = default;
};

// Whether a single part lies in the mod-8 residue set of family i.
[[nodiscard]] bool mod8_residue_allowed(Part part, FamilyIndex i) noexcept;

[[nodiscard]] bool is_gg_member(const Partition& p, FamilyIndex i);
[[nodiscard]] bool is_mod8_member(const Partition& p, FamilyIndex i);
[[nodiscard]] bool is_h_member(const Partition& p, FamilyIndex i);
[[nodiscard]] bool is_member(Family f, const Partition& p, FamilyIndex i);

// Partitions of key.n with exactly key.r even and key.s odd parts that lie in
// the family. Only G and H are refined; Gprime throws std::invalid_argument.
// Any negative index counts 0.
[[nodiscard]] Count count_refined(Family f, const RefinedKey& key);

[[nodiscard]] Count count_total(Family f, FamilyIndex i, std::int64_t n);

// The family's members of weight n, in enumeration order. When r and s are
// given only members with exactly that many even and odd parts are kept.
[[nodiscard]] std::vector<Partition> members(Family f, FamilyIndex i, std::int64_t n,
                                             std::optional<std::int64_t> r = std::nullopt,
                                             std::optional<std::int64_t> s = std::nullopt);

// All refined counts of one weight from a single enumeration pass.
// at(r, s) is 0 outside 0 <= r, s <= n.
class RefinedTable {
 public:
  RefinedTable(Family f, FamilyIndex i, std::int64_t n);

  [[nodiscard]] std::int64_t n() const noexcept { return n_; }
  [[nodiscard]] Count at(std::int64_t r, std::int64_t s) const;
  [[nodiscard]] Count total() const noexcept { return total_; }

 private:
  std::int64_t n_;
  std::size_t side_ = 0;
  std::vector<Count> cells_;
  Count total_ = 0;
};

// Brute-force refined counter with one RefinedTable cached per (i, n).
// Usable as the counter argument of check_system. Not thread-safe.
class BruteForceCounter {
 public:
  explicit BruteForceCounter(Family f);

  [[nodiscard]] Count operator()(const RefinedKey& key);
  [[nodiscard]] Family family() const noexcept { return family_; }

 private:
  Family family_;
  std::vector<std::optional<RefinedTable>> tables_[2];
};

}  // namespace eopart
