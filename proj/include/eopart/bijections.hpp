#pragma once

// The transformations that prove the difference and shift equations of the
// H_i recurrence bijectively, for both the H and the G side, with inverses
// and an exhaustive audit.
//
//   OddOne  (H, G): smallest odd part is 1. Drop it and subtract 2 from every
//                   other part. (r, s, n) -> (r, s-1, n-2(r+s)+1), class 1 -> 1.
//   EvenMin (H)   : smallest odd part is not 1 and smallest even part is
//                   2(r+s). Drop that part, subtract 2 from every other part.
//                   (r, s, n) -> (r-1, s, n-4(r+s)+2), class 1 -> 1.
//   EvenMin (G)   : smallest odd part is not 1 and smallest even part is 2.
//                   Drop it, subtract 4 from every other part.
//                   (r, s, n) -> (r-1, s, n-4(r+s)+2), class 1 -> 1.
//   Shift   (H, G): subtract 2 from every part.
//                   (r, s, n) -> (r, s, n-2(r+s)), class 2 -> 1.
//
// When both the OddOne and the EvenMin trigger hold, OddOne wins.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eopart/classes.hpp"
#include "eopart/partition.hpp"

namespace eopart {

enum class CaseKind { OddOne, EvenMin, Shift };

struct TransformCase {
  Family family;  // G or H
  CaseKind kind;

  friend bool operator==(const TransformCase&, const TransformCase&) = default;
};

// The six (family, kind) combinations in a fixed order.
[[nodiscard]] const std::vector<TransformCase>& all_transform_cases();
[[nodiscard]] std::string case_name(const TransformCase& c);

// Raised when a transformation is applied outside its domain. what() names
// the failed condition.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Source/target indices of a transformation. i is 1 for OddOne and EvenMin
// and 2 for the Shift source.
struct TransformKey {
  int i;
  std::int64_t r;
  std::int64_t s;
  std::int64_t n;

  friend bool operator==(const TransformKey&, const TransformKey&) = default;
};

[[nodiscard]] TransformKey source_key(const TransformCase& c, std::int64_t r, std::int64_t s,
                                      std::int64_t n);
[[nodiscard]] TransformKey target_key(const TransformCase& c, const TransformKey& source);

// Whether lambda lies in the case's domain (source class plus trigger). On
// failure `why` receives the name of the first failed condition.
[[nodiscard]] bool in_domain(const TransformCase& c, const Partition& lambda,
                             std::string* why = nullptr);

[[nodiscard]] Partition forward(const TransformCase& c, const Partition& lambda);

// target_r, target_s are the even and odd part counts of the partition being
// reconstructed; the inserted part of H-EvenMin depends on them.
[[nodiscard]] Partition backward(const TransformCase& c, const Partition& mu,
                                 std::int64_t target_r, std::int64_t target_s);

enum class AuditVerdict { Bijective, NotWellDefined, NotInjective, NotSurjective };

[[nodiscard]] std::string_view verdict_name(AuditVerdict v) noexcept;

struct TransformAudit {
  TransformCase transform;
  TransformKey source;
  TransformKey target;
  std::vector<Partition> domain;
  std::vector<Partition> codomain;
  std::vector<std::pair<Partition, Partition>> mapping;
  AuditVerdict verdict = AuditVerdict::Bijective;
  std::vector<Partition> witnesses;
};

// Enumerates domain and codomain at the key and checks that forward is a
// bijection between them whose images satisfy the codomain predicate.
[[nodiscard]] TransformAudit audit(const TransformCase& c, std::int64_t r, std::int64_t s,
                                   std::int64_t n);

// The class-1 members at (r, s, n) that are not class-2 members split
// disjointly and exhaustively into the OddOne and EvenMin trigger subsets,
// and no class-2 member fires a trigger.
[[nodiscard]] bool case_split_check(Family family, std::int64_t r, std::int64_t s,
                                    std::int64_t n);

}  // namespace eopart
