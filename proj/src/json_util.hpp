// Internal helpers for strict JSON ingestion: every object is checked
// against its allowed key set, every number is screened for floats, and
// every error message carries the field path.

#pragma once

#include <json.hpp>

#include <initializer_list>
#include <string>

#include "normsurf/rational.hpp"

namespace normsurf::jsonutil {

using nlohmann::json;

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

inline void check_keys(const json& obj, const std::string& path,
                       std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) fail(path, "unknown field \"" + item.key() + "\"");
    }
}

inline const json& require_field(const json& obj, const char* key,
                                 const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing field \"" + std::string(key) + "\"");
    return *it;
}

inline const json& require_object(const json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected an object");
    return v;
}

inline const json& require_array(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array");
    return v;
}

inline std::string string_field(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

inline bool bool_field(const json& v, const std::string& path) {
    if (!v.is_boolean()) fail(path, "expected a boolean");
    return v.get<bool>();
}

inline long long int_field(const json& v, const std::string& path) {
    if (v.is_number_float()) {
        fail(path, "floating-point values are not accepted");
    }
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<long long>();
}

// Rationals travel as strings ("-5/3"); plain JSON integers are also
// accepted. Floats never are.
inline Rational rational_field(const json& v, const std::string& path) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            fail(path, e.what());
        }
    }
    if (v.is_number_float()) {
        fail(path, "floating-point values are not accepted; write rationals "
                   "as strings like \"-5/3\"");
    }
    if (v.is_number_integer()) return Rational(v.get<long long>());
    fail(path, "expected a rational (string or integer)");
}

inline RatVec rational_vector(const json& v, const std::string& path) {
    require_array(v, path);
    RatVec out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(rational_field(v[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

} // namespace normsurf::jsonutil
