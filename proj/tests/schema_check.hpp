#pragma once

// Minimal JSON Schema validator covering the keywords used in docs/schemas.

#include <json.hpp>

#include <fstream>
#include <regex>
#include <string>

namespace schema {

using nlohmann::json;

inline bool type_ok(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

class Validator {
public:
    explicit Validator(json root) : root_(std::move(root)) {}

    static Validator load(const std::string& path) {
        std::ifstream in(path);
        return Validator(json::parse(in));
    }

    bool validate(const json& v, std::string& why) const {
        return check(root_, v, "$", why);
    }

private:
    json root_;

    const json& resolve(const std::string& ref) const {
        const std::string prefix = "#/$defs/";
        if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
        return root_.at("$defs").at(ref.substr(prefix.size()));
    }

    bool fail(std::string& why, const std::string& at, const std::string& msg) const {
        why = at + ": " + msg;
        return false;
    }

    bool check(const json& s, const json& v, const std::string& at, std::string& why) const {
        if (s.is_boolean()) return s.get<bool>() || fail(why, at, "disallowed");
        if (s.contains("$ref")) return check(resolve(s["$ref"]), v, at, why);
        if (s.contains("type") && !type_ok(v, s["type"])) return fail(why, at, "expected " + s["type"].dump());
        if (s.contains("enum")) {
            bool found = false;
            for (const auto& e : s["enum"]) found = found || e == v;
            if (!found) return fail(why, at, "not in enum");
        }
        if (s.contains("oneOf")) {
            int matches = 0;
            std::string ignored;
            for (const auto& alt : s["oneOf"]) matches += check(alt, v, at, ignored) ? 1 : 0;
            if (matches != 1) return fail(why, at, "oneOf matched " + std::to_string(matches));
        }
        if (v.is_string() && s.contains("pattern") &&
            !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>()))) {
            return fail(why, at, "pattern mismatch");
        }
        if (v.is_number() && s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) {
            return fail(why, at, "below minimum");
        }
        if (v.is_array()) {
            if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) return fail(why, at, "too short");
            if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) return fail(why, at, "too long");
            std::size_t start = 0;
            if (s.contains("prefixItems")) {
                const auto& pre = s["prefixItems"];
                for (; start < pre.size() && start < v.size(); ++start) {
                    if (!check(pre[start], v[start], at + "[" + std::to_string(start) + "]", why)) return false;
                }
            }
            if (s.contains("items")) {
                for (std::size_t i = start; i < v.size(); ++i) {
                    if (!check(s["items"], v[i], at + "[" + std::to_string(i) + "]", why)) return false;
                }
            }
        }
        if (v.is_object()) {
            if (s.contains("required")) {
                for (const auto& k : s["required"]) {
                    if (!v.contains(k.get<std::string>())) return fail(why, at, "missing " + k.get<std::string>());
                }
            }
            const json props = s.value("properties", json::object());
            for (const auto& [k, sub] : v.items()) {
                if (props.contains(k)) {
                    if (!check(props[k], sub, at + "." + k, why)) return false;
                } else if (s.contains("additionalProperties") && s["additionalProperties"] == false) {
                    return fail(why, at, "unexpected property " + k);
                }
            }
        }
        return true;
    }
};

}  // namespace schema
