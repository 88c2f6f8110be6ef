#include "schema_check.hpp"

#include <regex>

namespace lcmcap {

namespace {

bool type_matches(const std::string& type, const Json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

void check(const Json& schema, const Json& value, const std::string& path,
           std::vector<std::string>& out) {
  if (!schema.is_object()) return;  // permissive: an empty schema accepts all

  if (schema.contains("type")) {
    const Json& t = schema.at("type");
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), value);
    } else if (t.is_array()) {
      for (const Json& one : t)
        if (one.is_string() && type_matches(one.get<std::string>(), value)) {
          ok = true;
          break;
        }
    }
    if (!ok) {
      out.push_back(path + ": type mismatch, got " + std::string(value.type_name()));
      return;  // further structural checks would only cascade
    }
  }

  if (schema.contains("enum")) {
    bool found = false;
    for (const Json& option : schema.at("enum"))
      if (option == value) {
        found = true;
        break;
      }
    if (!found) out.push_back(path + ": value not in enum");
  }

  if (value.is_number() && schema.contains("minimum") &&
      value.get<double>() < schema.at("minimum").get<double>())
    out.push_back(path + ": below minimum");
  if (value.is_number() && schema.contains("maximum") &&
      value.get<double>() > schema.at("maximum").get<double>())
    out.push_back(path + ": above maximum");

  if (value.is_string() && schema.contains("pattern")) {
    const std::regex re(schema.at("pattern").get<std::string>());
    if (!std::regex_match(value.get<std::string>(), re))
      out.push_back(path + ": pattern mismatch");
  }

  if (value.is_object()) {
    if (schema.contains("required"))
      for (const Json& key : schema.at("required"))
        if (!value.contains(key.get<std::string>()))
          out.push_back(path + ": missing required \"" + key.get<std::string>() + "\"");
    const Json* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
    for (const auto& kv : value.items()) {
      if (props && props->contains(kv.key())) {
        check(props->at(kv.key()), kv.value(), path + "." + kv.key(), out);
      } else if (schema.contains("additionalProperties") &&
                 schema.at("additionalProperties").is_boolean() &&
                 !schema.at("additionalProperties").get<bool>()) {
        out.push_back(path + ": unknown key \"" + kv.key() + "\"");
      }
    }
  }

  if (value.is_array() && schema.contains("items")) {
    const Json& items = schema.at("items");
    for (std::size_t i = 0; i < value.size(); ++i)
      check(items, value[i], path + "[" + std::to_string(i) + "]", out);
  }
}

}  // namespace

std::vector<std::string> schema_violations(const Json& schema, const Json& value) {
  std::vector<std::string> out;
  check(schema, value, "$", out);
  return out;
}

}  // namespace lcmcap
