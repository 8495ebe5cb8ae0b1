#pragma once

// JSON forms of partitions and audit reports. A partition is a JSON array of
// integers in nonincreasing order, e.g. [5,3,1].

#include <json.hpp>

#include "eopart/bijections.hpp"
#include "eopart/partition.hpp"

namespace eopart {

void to_json(nlohmann::json& j, const Partition& p);
// Throws std::invalid_argument unless j is an array of integers forming a
// valid partition.
void from_json(const nlohmann::json& j, Partition& p);

[[nodiscard]] nlohmann::json key_to_json(const TransformKey& key);
[[nodiscard]] nlohmann::json audit_to_json(const TransformAudit& audit);

}  // namespace eopart
