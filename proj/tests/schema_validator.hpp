#pragma once

// Minimal structural validator for the subset of JSON Schema the shipped
// schemas use: type (string or list), enum, properties, required, items,
// oneOf. Enough to pin the CLI's output contract in tests.

#include <json.hpp>

#include <string>

namespace testutil {

inline bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline bool validates(const nlohmann::json& value, const nlohmann::json& schema) {
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const auto& sub : schema["oneOf"])
      if (validates(value, sub)) ++hits;
    if (hits != 1) return false;
  }
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    if (t.is_string()) {
      if (!type_matches(value, t.get<std::string>())) return false;
    } else {
      bool any = false;
      for (const auto& alt : t) any = any || type_matches(value, alt.get<std::string>());
      if (!any) return false;
    }
  }
  if (schema.contains("enum")) {
    bool any = false;
    for (const auto& alt : schema["enum"]) any = any || value == alt;
    if (!any) return false;
  }
  if (schema.contains("required")) {
    if (!value.is_object()) return false;
    for (const auto& key : schema["required"])
      if (!value.contains(key.get<std::string>())) return false;
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items())
      if (value.contains(key) && !validates(value[key], sub)) return false;
  }
  if (schema.contains("items") && value.is_array()) {
    for (const auto& item : value)
      if (!validates(item, schema["items"])) return false;
  }
  return true;
}

}  // namespace testutil
