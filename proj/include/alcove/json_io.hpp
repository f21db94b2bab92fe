#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "alcove/gw.hpp"

namespace alcove {

using nlohmann::json;

// Rationals cross the JSON boundary as "p/q" strings (or plain integers);
// no floats ever appear in exact outputs.

inline json rat_to_json(const Rat& r) { return rat_to_string(r); }

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    return rat_from_string(j.get<std::string>());
}

inline json vec_to_json(const RatVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rat_to_json(x));
    return out;
}

inline RatVec vec_from_json(const json& j) {
    RatVec out;
    for (const auto& x : j) out.push_back(rat_from_json(x));
    return out;
}

inline json inequality_to_json(const Inequality& q) {
    json j;
    j["group"] = q.group;
    j["node"] = q.node;
    j["d"] = q.d;
    j["tuple"] = q.words;
    json coeffs = json::array();
    for (const auto& v : q.coeffs) coeffs.push_back(vec_to_json(v));
    j["coeffs"] = coeffs;
    j["pretty"] = q.pretty;
    return j;
}

inline Inequality inequality_from_json(const json& j) {
    Inequality q;
    q.group = j.at("group").get<std::string>();
    q.node = j.at("node").get<int>();
    q.d = j.at("d").get<int>();
    q.words = j.at("tuple").get<std::vector<std::vector<int>>>();
    for (const auto& v : j.at("coeffs")) q.coeffs.push_back(vec_from_json(v));
    q.pretty = j.value("pretty", std::string());
    // tuple indices are an internal detail; re-derive a stable sort key from
    // the reduced words so pruning order stays deterministic after a round trip
    q.tuple.clear();
    return q;
}

inline json system_to_json(const std::vector<Inequality>& system) {
    json arr = json::array();
    for (const auto& q : system) arr.push_back(inequality_to_json(q));
    json out;
    out["inequalities"] = arr;
    return out;
}

inline std::vector<Inequality> system_from_json(const json& j) {
    std::vector<Inequality> out;
    for (const auto& item : j.at("inequalities")) out.push_back(inequality_from_json(item));
    return out;
}

}  // namespace alcove
