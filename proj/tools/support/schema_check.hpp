#pragma once

#include <string>
#include <vector>

#include "json_io.hpp"

namespace lcmcap {

// Minimal JSON-schema subset validator covering what the shipped schemas use:
// "type" (string or array of strings), "properties", "required",
// "additionalProperties" (boolean), "items" (single schema), "enum",
// "minimum"/"maximum", and "pattern" (ECMAScript regex, implicitly anchored).
// Returns human-readable violations, empty when the value conforms.
std::vector<std::string> schema_violations(const Json& schema, const Json& value);

inline bool matches_schema(const Json& schema, const Json& value) {
  return schema_violations(schema, value).empty();
}

}  // namespace lcmcap
