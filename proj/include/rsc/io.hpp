#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rsc/core.hpp"
#include "rsc/setcover.hpp"

namespace rsc {

// Documents are version-1 JSON.  Emission uses ordered_json with a fixed key
// order so identical inputs serialize byte-identically; parsing is strict and
// rejects unknown fields.

using Json = nlohmann::ordered_json;
using AnyInstance = std::variant<Instance, SetInstance>;

namespace detail {

inline void require_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& what) {
    if (!j.is_object()) throw ParseError(what + ": expected an object");
    for (const auto& key : keys)
        if (!j.contains(key)) throw ParseError(what + ": missing field '" + std::string(key) + "'");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const auto& k : keys) known = known || key == k;
        if (!known) throw ParseError(what + ": unknown field '" + key + "'");
    }
}

inline std::int64_t int_field(const Json& j, const char* key, const std::string& what) {
    if (!j.at(key).is_number_integer()) throw ParseError(what + ": field '" + std::string(key) + "' must be an integer");
    return j.at(key).get<std::int64_t>();
}

} // namespace detail

// ---------------------------------------------------------------------------
// Instances

inline Json serialize_instance(const Instance& inst) {
    validate_instance(inst);
    Json j;
    j["version"] = 1;
    j["kind"] = "interval";
    Json sensors = Json::array();
    for (const auto& s : inst.sensors) {
        Json e;
        e["id"] = s.id;
        e["l"] = s.left;
        e["r"] = s.right;
        e["d"] = s.duration;
        sensors.push_back(std::move(e));
    }
    j["sensors"] = std::move(sensors);
    return j;
}

inline Json serialize_instance(const SetInstance& inst) {
    validate_instance(inst);
    Json j;
    j["version"] = 1;
    j["kind"] = "set";
    j["universe_size"] = inst.universe_size;
    Json sensors = Json::array();
    for (const auto& s : inst.sensors) {
        Json e;
        e["id"] = s.id;
        e["region"] = s.region;
        e["d"] = s.duration;
        sensors.push_back(std::move(e));
    }
    j["sensors"] = std::move(sensors);
    return j;
}

inline AnyInstance parse_instance(const Json& j) {
    if (!j.is_object() || !j.contains("version") || !j.contains("kind"))
        throw ParseError("instance: missing version/kind");
    if (detail::int_field(j, "version", "instance") != 1) throw ParseError("instance: unsupported version");
    const std::string kind = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    if (kind == "interval") {
        detail::require_keys(j, {"version", "kind", "sensors"}, "instance");
        if (!j.at("sensors").is_array()) throw ParseError("instance: sensors must be an array");
        Instance inst;
        for (const auto& e : j.at("sensors")) {
            detail::require_keys(e, {"id", "l", "r", "d"}, "sensor");
            inst.sensors.push_back({detail::int_field(e, "id", "sensor"), detail::int_field(e, "l", "sensor"),
                                    detail::int_field(e, "r", "sensor"), detail::int_field(e, "d", "sensor")});
        }
        try {
            validate_instance(inst);
        } catch (const StructuralError& err) {
            throw ParseError(std::string("instance: ") + err.what());
        }
        return inst;
    }
    if (kind == "set") {
        detail::require_keys(j, {"version", "kind", "universe_size", "sensors"}, "instance");
        if (!j.at("sensors").is_array()) throw ParseError("instance: sensors must be an array");
        SetInstance inst;
        inst.universe_size = detail::int_field(j, "universe_size", "instance");
        for (const auto& e : j.at("sensors")) {
            detail::require_keys(e, {"id", "region", "d"}, "sensor");
            SetSensor s;
            s.id = detail::int_field(e, "id", "sensor");
            if (!e.at("region").is_array()) throw ParseError("sensor: region must be an array");
            for (const auto& v : e.at("region")) {
                if (!v.is_number_integer()) throw ParseError("sensor: region elements must be integers");
                s.region.push_back(v.get<std::int64_t>());
            }
            s.duration = detail::int_field(e, "d", "sensor");
            inst.sensors.push_back(std::move(s));
        }
        try {
            validate_instance(inst);
        } catch (const StructuralError& err) {
            throw ParseError(std::string("instance: ") + err.what());
        }
        return inst;
    }
    throw ParseError("instance: kind must be 'interval' or 'set'");
}

// ---------------------------------------------------------------------------
// Schedules

inline Json serialize_schedule(const Schedule& schedule, const Rational& reported_duration) {
    Json starts = Json::object();
    for (const auto& [id, t] : schedule.starts) {
        if (t.has_value())
            starts[std::to_string(id)] = t->to_string();
        else
            starts[std::to_string(id)] = nullptr;
    }
    Json j;
    j["version"] = 1;
    j["starts"] = std::move(starts);
    j["reported_duration"] = reported_duration.to_string();
    return j;
}

struct ScheduleDocument {
    Schedule schedule;
    Rational reported_duration;
};

inline ScheduleDocument parse_schedule(const Json& j) {
    detail::require_keys(j, {"version", "starts", "reported_duration"}, "schedule");
    if (detail::int_field(j, "version", "schedule") != 1) throw ParseError("schedule: unsupported version");
    if (!j.at("starts").is_object()) throw ParseError("schedule: starts must be an object");
    ScheduleDocument doc;
    for (const auto& [key, value] : j.at("starts").items()) {
        std::int64_t id = 0;
        try {
            std::size_t used = 0;
            id = std::stoll(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("schedule: bad sensor id '" + key + "'");
        }
        if (value.is_null()) {
            doc.schedule.starts[id] = std::nullopt;
        } else if (value.is_string()) {
            const Rational t = Rational::parse(value.get<std::string>());
            if (t < Rational(0)) throw ParseError("schedule: negative start time for sensor " + key);
            doc.schedule.starts[id] = t;
        } else {
            throw ParseError("schedule: start times must be rational strings or null");
        }
    }
    if (!j.at("reported_duration").is_string()) throw ParseError("schedule: reported_duration must be a string");
    doc.reported_duration = Rational::parse(j.at("reported_duration").get<std::string>());
    return doc;
}

// ---------------------------------------------------------------------------
// Peeling output

inline Json serialize_peel(const PeelResult& peel) {
    Json j;
    j["version"] = 1;
    j["covers"] = peel.covers;
    j["remainder"] = peel.remainder;
    return j;
}

inline std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("document: ") + e.what());
    }
}

} // namespace rsc
