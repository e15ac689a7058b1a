#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hss {

struct SchemaViolation {
  std::string path;  // JSON pointer into the instance
  std::string message;
};

/// Validates against a JSON Schema subset: type, enum, const, properties, required,
/// additionalProperties, items, minItems, minimum, maximum, pattern, anyOf, oneOf and local "$ref"
/// ("#/$defs/..."). Throws std::invalid_argument on any other keyword.
std::vector<SchemaViolation> validate_json(const nlohmann::json& schema, const nlohmann::json& instance);

/// The report schema shipped with the library.
const nlohmann::json& report_schema();

}  // namespace hss
