#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rsc/error.hpp"
#include "rsc/rational.hpp"

namespace rsc {

/// A coverage region [left, right) on the line with a battery duration.
struct Sensor {
    std::int64_t id = 0;
    std::int64_t left = 0;
    std::int64_t right = 0; // region is the semi-closed interval [left, right)
    std::int64_t duration = 1;

    bool live_at(std::int64_t x) const { return left <= x && x < right; }
};

/// A coverage region that is an arbitrary subset of a finite universe
/// {0, ..., m-1}, with a battery duration.
struct SetSensor {
    std::int64_t id = 0;
    std::vector<std::int64_t> region; // sorted, distinct element indices
    std::int64_t duration = 1;

    bool live_at(std::int64_t element) const {
        return std::binary_search(region.begin(), region.end(), element);
    }
};

/// An interval instance.  The universe is [min left, max right); cells with
/// zero load are permitted (then L = 0).
struct Instance {
    std::vector<Sensor> sensors;

    std::int64_t universe_left() const {
        std::int64_t lo = sensors.front().left;
        for (const auto& s : sensors) lo = std::min(lo, s.left);
        return lo;
    }
    std::int64_t universe_right() const {
        std::int64_t hi = sensors.front().right;
        for (const auto& s : sensors) hi = std::max(hi, s.right);
        return hi;
    }
};

/// A set-system instance over the universe {0, ..., universe_size-1}.
struct SetInstance {
    std::int64_t universe_size = 0;
    std::vector<SetSensor> sensors;
};

/// Per-sensor start times.  An absent value (nullopt) is the explicit UNUSED
/// sentinel; present values are exact non-negative rationals.
struct Schedule {
    std::map<std::int64_t, std::optional<Rational>> starts;

    bool operator==(const Schedule& other) const { return starts == other.starts; }
};

/// Load per cell (interval kind) or per element (set kind).
///
/// For interval instances, boundaries holds the sorted distinct endpoint
/// coordinates and cell_load[c] is the load on [boundaries[c], boundaries[c+1]).
/// For set instances, boundaries holds the element indices 0..m-1 and
/// cell_load[e] is the load at element e.
struct LoadProfile {
    std::vector<std::int64_t> boundaries;
    std::vector<std::int64_t> cell_load;

    std::int64_t min_load() const {
        std::int64_t m = cell_load.front();
        for (const auto v : cell_load) m = std::min(m, v);
        return m;
    }
    std::int64_t max_load() const {
        std::int64_t m = cell_load.front();
        for (const auto v : cell_load) m = std::max(m, v);
        return m;
    }
};

/// Report from validate_schedule.  `first_gap` carries a witness point
/// (x, y) when the schedule fails the claimed duration.
struct ValidationReport {
    bool valid = false;
    Rational achieved;
    std::optional<std::pair<std::int64_t, Rational>> first_gap;
};

// ---------------------------------------------------------------------------
// Instance validation

inline void validate_instance(const Instance& inst) {
    if (inst.sensors.empty()) throw StructuralError("instance: needs at least one sensor");
    std::set<std::int64_t> ids;
    for (const auto& s : inst.sensors) {
        if (s.id < 0) throw StructuralError("sensor id must be non-negative");
        if (!ids.insert(s.id).second) throw StructuralError("duplicate sensor id " + std::to_string(s.id));
        if (s.left >= s.right) throw StructuralError("sensor " + std::to_string(s.id) + ": left must be < right");
        if (s.duration < 1) throw StructuralError("sensor " + std::to_string(s.id) + ": duration must be >= 1");
    }
}

inline void validate_instance(const SetInstance& inst) {
    if (inst.universe_size < 1) throw StructuralError("set instance: universe must be non-empty");
    if (inst.sensors.empty()) throw StructuralError("instance: needs at least one sensor");
    std::set<std::int64_t> ids;
    for (const auto& s : inst.sensors) {
        if (s.id < 0) throw StructuralError("sensor id must be non-negative");
        if (!ids.insert(s.id).second) throw StructuralError("duplicate sensor id " + std::to_string(s.id));
        if (s.region.empty()) throw StructuralError("sensor " + std::to_string(s.id) + ": empty region");
        if (!std::is_sorted(s.region.begin(), s.region.end())) throw StructuralError("sensor region must be sorted");
        if (std::adjacent_find(s.region.begin(), s.region.end()) != s.region.end())
            throw StructuralError("sensor region must not repeat elements");
        if (s.region.front() < 0 || s.region.back() >= inst.universe_size)
            throw StructuralError("sensor " + std::to_string(s.id) + ": region element outside universe");
        if (s.duration < 1) throw StructuralError("sensor " + std::to_string(s.id) + ": duration must be >= 1");
    }
}

// ---------------------------------------------------------------------------
// Coordinate compression and loads

/// All distinct interval endpoints, sorted ascending.  Consecutive pairs
/// delimit cells on which every sensor's liveness is constant.
inline std::vector<std::int64_t> compress(const Instance& inst) {
    validate_instance(inst);
    std::vector<std::int64_t> b;
    b.reserve(inst.sensors.size() * 2);
    for (const auto& s : inst.sensors) {
        b.push_back(s.left);
        b.push_back(s.right);
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

inline LoadProfile load_profile(const Instance& inst) {
    LoadProfile p;
    p.boundaries = compress(inst);
    p.cell_load.assign(p.boundaries.size() - 1, 0);
    for (const auto& s : inst.sensors) {
        const auto lo = std::lower_bound(p.boundaries.begin(), p.boundaries.end(), s.left) - p.boundaries.begin();
        const auto hi = std::lower_bound(p.boundaries.begin(), p.boundaries.end(), s.right) - p.boundaries.begin();
        for (auto c = lo; c < hi; ++c) p.cell_load[static_cast<std::size_t>(c)] += s.duration;
    }
    return p;
}

inline LoadProfile load_profile(const SetInstance& inst) {
    validate_instance(inst);
    LoadProfile p;
    p.boundaries.resize(static_cast<std::size_t>(inst.universe_size));
    for (std::int64_t e = 0; e < inst.universe_size; ++e) p.boundaries[static_cast<std::size_t>(e)] = e;
    p.cell_load.assign(static_cast<std::size_t>(inst.universe_size), 0);
    for (const auto& s : inst.sensors)
        for (const auto e : s.region) p.cell_load[static_cast<std::size_t>(e)] += s.duration;
    return p;
}

/// Ids of the sensors live at x, sorted ascending.
inline std::vector<std::int64_t> live_set(const Instance& inst, std::int64_t x) {
    validate_instance(inst);
    if (x < inst.universe_left() || x >= inst.universe_right())
        throw DomainError("live_set: x = " + std::to_string(x) + " outside universe");
    std::vector<std::int64_t> ids;
    for (const auto& s : inst.sensors)
        if (s.live_at(x)) ids.push_back(s.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

inline std::vector<std::int64_t> live_set(const SetInstance& inst, std::int64_t element) {
    validate_instance(inst);
    if (element < 0 || element >= inst.universe_size)
        throw DomainError("live_set: element " + std::to_string(element) + " outside universe");
    std::vector<std::int64_t> ids;
    for (const auto& s : inst.sensors)
        if (s.live_at(element)) ids.push_back(s.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

// ---------------------------------------------------------------------------
// Coverage

namespace detail {

/// Supremum height h such that [0, h) is fully covered by the given time
/// intervals [start, start + duration).
inline Rational covered_prefix(std::vector<std::pair<Rational, std::int64_t>>& spans) {
    std::sort(spans.begin(), spans.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational h(0);
    for (const auto& [start, dur] : spans) {
        if (start > h) break;
        const Rational top = start + Rational(dur);
        if (top > h) h = top;
    }
    return h;
}

template <typename InstanceT>
void check_schedule_domain(const InstanceT& inst, const Schedule& schedule) {
    if (schedule.starts.size() != inst.sensors.size())
        throw StructuralError("schedule: domain size does not match instance");
    for (const auto& s : inst.sensors) {
        const auto it = schedule.starts.find(s.id);
        if (it == schedule.starts.end())
            throw StructuralError("schedule: missing entry for sensor " + std::to_string(s.id));
        if (it->second.has_value() && *it->second < Rational(0))
            throw StructuralError("schedule: negative start time for sensor " + std::to_string(s.id));
    }
}

} // namespace detail

/// Supremum height such that, at coordinate x, [0, height) is fully covered
/// by the scheduled sensors (UNUSED sensors are ignored).
inline Rational coverage_height(const Instance& inst, const Schedule& schedule, std::int64_t x) {
    detail::check_schedule_domain(inst, schedule);
    std::vector<std::pair<Rational, std::int64_t>> spans;
    for (const auto& s : inst.sensors) {
        if (!s.live_at(x)) continue;
        const auto& t = schedule.starts.at(s.id);
        if (t.has_value()) spans.emplace_back(*t, s.duration);
    }
    return detail::covered_prefix(spans);
}

inline Rational coverage_height(const SetInstance& inst, const Schedule& schedule, std::int64_t element) {
    detail::check_schedule_domain(inst, schedule);
    std::vector<std::pair<Rational, std::int64_t>> spans;
    for (const auto& s : inst.sensors) {
        if (!s.live_at(element)) continue;
        const auto& t = schedule.starts.at(s.id);
        if (t.has_value()) spans.emplace_back(*t, s.duration);
    }
    return detail::covered_prefix(spans);
}

namespace detail {

/// Minimum coverage height over all cells/elements, plus the witness
/// coordinate where the minimum is first attained.
inline std::pair<Rational, std::int64_t> min_coverage(const Instance& inst, const Schedule& schedule) {
    const auto boundaries = compress(inst);
    Rational best;
    std::int64_t where = boundaries.front();
    bool first = true;
    for (std::size_t c = 0; c + 1 < boundaries.size(); ++c) {
        const Rational h = coverage_height(inst, schedule, boundaries[c]);
        if (first || h < best) {
            best = h;
            where = boundaries[c];
            first = false;
        }
    }
    return {best, where};
}

inline std::pair<Rational, std::int64_t> min_coverage(const SetInstance& inst, const Schedule& schedule) {
    Rational best;
    std::int64_t where = 0;
    bool first = true;
    for (std::int64_t e = 0; e < inst.universe_size; ++e) {
        const Rational h = coverage_height(inst, schedule, e);
        if (first || h < best) {
            best = h;
            where = e;
            first = false;
        }
    }
    return {best, where};
}

} // namespace detail

/// The duration M(S) of a schedule: the minimum over cells (interval kind) or
/// elements (set kind) of the covered prefix height.
template <typename InstanceT>
Rational schedule_duration(const InstanceT& inst, const Schedule& schedule) {
    return detail::min_coverage(inst, schedule).first;
}

/// Checks whether the schedule stays gap-free through claimed_T everywhere.
/// Malformed schedules (missing/extra ids, negative starts) throw
/// StructuralError; an honest-but-short schedule yields valid == false with a
/// witness gap point.
template <typename InstanceT>
ValidationReport validate_schedule(const InstanceT& inst, const Schedule& schedule, const Rational& claimed_T) {
    detail::check_schedule_domain(inst, schedule);
    const auto [achieved, where] = detail::min_coverage(inst, schedule);
    ValidationReport report;
    report.achieved = achieved;
    report.valid = achieved >= claimed_T;
    if (!report.valid) report.first_gap = std::make_pair(where, achieved);
    return report;
}

/// Schedule with every sensor of the instance UNUSED.
template <typename InstanceT>
Schedule empty_schedule(const InstanceT& inst) {
    Schedule s;
    for (const auto& sensor : inst.sensors) s.starts[sensor.id] = std::nullopt;
    return s;
}

} // namespace rsc
