#pragma once

// Minimal structural validator for the subset of JSON Schema the shipped
// schemas use: "type" (string or list), "required", "properties", "items",
// "enum", "additionalProperties" (ignored: schemas set it to true).

#include <json.hpp>
#include <string>
#include <vector>

namespace schema_check {

using Json = nlohmann::json;

inline bool type_matches(const Json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline bool validate(const Json& value, const Json& schema, std::string* why = nullptr) {
    const auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (schema.contains("type")) {
        const Json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(value, t.get<std::string>());
        } else {
            for (const auto& alt : t)
                if (type_matches(value, alt.get<std::string>())) ok = true;
        }
        if (!ok) return fail("type mismatch against " + t.dump() + " for " + value.dump());
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"])
            if (alt == value) ok = true;
        if (!ok) return fail("value " + value.dump() + " not in enum");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    return fail("missing required key " + key.get<std::string>());
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key) && !validate(value[key], sub, why))
                    return fail("at key " + key + ": " + (why ? *why : ""));
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& item : value)
            if (!validate(item, schema["items"], why))
                return fail("at array item: " + (why ? *why : ""));
    if (why) why->clear();
    return true;
}

}  // namespace schema_check
