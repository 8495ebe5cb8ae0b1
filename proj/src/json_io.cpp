#include "eopart/json_io.hpp"

#include <stdexcept>

namespace eopart {

void to_json(nlohmann::json& j, const Partition& p) {
  j = nlohmann::json::array();
  for (Part part : p.parts()) j.push_back(part);
}

void from_json(const nlohmann::json& j, Partition& p) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  std::vector<Part> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw std::invalid_argument("partition parts must be integers");
    parts.push_back(v.get<Part>());
  }
  p = Partition(std::move(parts));
}

nlohmann::json key_to_json(const TransformKey& key) {
  return {{"i", key.i}, {"r", key.r}, {"s", key.s}, {"n", key.n}};
}

nlohmann::json audit_to_json(const TransformAudit& audit) {
  nlohmann::json mapping = nlohmann::json::array();
  for (const auto& [from, to] : audit.mapping) mapping.push_back({from, to});
  return {
      {"case", case_name(audit.transform)},
      {"source_key", key_to_json(audit.source)},
      {"target_key", key_to_json(audit.target)},
      {"verdict", verdict_name(audit.verdict)},
      {"mapping", std::move(mapping)},
      {"witnesses", audit.witnesses},
  };
}

}  // namespace eopart
