#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "rsc/core.hpp"

namespace rsc {

/// A virtual rectangle replacing a set of grouped sensors.  The rectangle's
/// footprint is the intersection of the members' intervals; its duration is
/// the stacked sum of member durations.  `members` carries (sensor id,
/// vertical offset) so the group can be expanded back to real sensors.
struct Group {
    std::int64_t id = 0;
    Sensor rect;
    std::vector<std::pair<std::int64_t, std::int64_t>> members; // (sensor id, offset)
};

struct GroupingParams {
    std::int64_t D = 1;  // group duration
    Rational eps{1, 2};  // error parameter, 0 < eps <= 1

    /// Strip capacity D * ceil(1/eps).
    std::int64_t capacity() const {
        const std::int64_t c = (Rational(1) / eps).ceil();
        return D * c;
    }
};

struct GroupingResult {
    std::vector<Group> groups;
    std::vector<std::int64_t> discarded; // sensor ids dropped by partial chunks
};

struct GroupAllResult {
    std::vector<Group> groups;
    std::vector<std::int64_t> discarded;
    std::int64_t tree_height = 0; // deepest level whose node grouped sensors
};

namespace detail {

inline void check_grouping_input(const std::vector<Sensor>& sensors, const GroupingParams& params) {
    if (params.D < 1) throw PreconditionError("grouping: D must be >= 1");
    if (params.eps <= Rational(0) || params.eps > Rational(1))
        throw PreconditionError("grouping: eps must be in (0, 1]");
    for (const auto& s : sensors) {
        if (s.duration != 1) throw PreconditionError("grouping: sensor durations must be 1");
        if (s.left >= s.right) throw PreconditionError("grouping: malformed sensor interval");
    }
}

inline Group make_group(const std::vector<Sensor>& chunk, std::int64_t id) {
    Group g;
    g.id = id;
    g.rect.id = id;
    g.rect.left = chunk.front().left;
    g.rect.right = chunk.front().right;
    g.rect.duration = 0;
    std::int64_t offset = 0;
    for (const auto& s : chunk) {
        g.rect.left = std::max(g.rect.left, s.left);
        g.rect.right = std::min(g.rect.right, s.right);
        g.rect.duration += s.duration;
        g.members.emplace_back(s.id, offset);
        offset += s.duration;
    }
    return g;
}

/// Chunks a strip into groups of exactly D sensors; the final partial chunk
/// is discarded.
inline void chunk_strip(const std::vector<Sensor>& strip, std::int64_t D, std::int64_t& next_id,
                        GroupingResult& out) {
    std::size_t i = 0;
    while (i + static_cast<std::size_t>(D) <= strip.size()) {
        std::vector<Sensor> chunk(strip.begin() + static_cast<std::ptrdiff_t>(i),
                                  strip.begin() + static_cast<std::ptrdiff_t>(i + static_cast<std::size_t>(D)));
        out.groups.push_back(make_group(chunk, next_id++));
        i += static_cast<std::size_t>(D);
    }
    for (; i < strip.size(); ++i) out.discarded.push_back(strip[i].id);
}

inline void group_at_fixed_into(std::vector<Sensor> remaining, const GroupingParams& params,
                                std::int64_t& next_id, GroupingResult& out) {
    const std::int64_t cap = params.capacity();
    bool vertical = true; // the proof lists the vertical strip first
    while (!remaining.empty()) {
        const std::size_t take = std::min<std::size_t>(remaining.size(), static_cast<std::size_t>(cap));
        std::vector<Sensor> strip;
        if (vertical) {
            // smallest l values
            std::sort(remaining.begin(), remaining.end(), [](const Sensor& a, const Sensor& b) {
                return std::make_pair(a.left, a.id) < std::make_pair(b.left, b.id);
            });
            strip.assign(remaining.begin(), remaining.begin() + static_cast<std::ptrdiff_t>(take));
            remaining.erase(remaining.begin(), remaining.begin() + static_cast<std::ptrdiff_t>(take));
            // within a vertical strip, group by decreasing r
            std::sort(strip.begin(), strip.end(), [](const Sensor& a, const Sensor& b) {
                return std::make_pair(-a.right, a.id) < std::make_pair(-b.right, b.id);
            });
        } else {
            // largest r values
            std::sort(remaining.begin(), remaining.end(), [](const Sensor& a, const Sensor& b) {
                return std::make_pair(-a.right, a.id) < std::make_pair(-b.right, b.id);
            });
            strip.assign(remaining.begin(), remaining.begin() + static_cast<std::ptrdiff_t>(take));
            remaining.erase(remaining.begin(), remaining.begin() + static_cast<std::ptrdiff_t>(take));
            // within a horizontal strip, group by increasing l
            std::sort(strip.begin(), strip.end(), [](const Sensor& a, const Sensor& b) {
                return std::make_pair(a.left, a.id) < std::make_pair(b.left, b.id);
            });
        }
        chunk_strip(strip, params.D, next_id, out);
        vertical = !vertical;
    }
}

} // namespace detail

/// Groups unit-duration sensors that are all live at x0 into alternating
/// vertical and horizontal strips of capacity D*ceil(1/eps), chunked into
/// groups of exactly D; partial chunks are discarded.  Guarantees
/// L_G(i) > L_Y(i)/(1+eps) - 4*D*ceil(1/eps) at every coordinate.
inline GroupingResult group_at_fixed(const std::vector<Sensor>& Y, std::int64_t x0,
                                     const GroupingParams& params) {
    detail::check_grouping_input(Y, params);
    for (const auto& s : Y)
        if (!s.live_at(x0))
            throw PreconditionError("group_at_fixed: sensor " + std::to_string(s.id) +
                                    " is not live at the fixed coordinate");
    GroupingResult out;
    std::int64_t next_id = 0;
    detail::group_at_fixed_into(Y, params, next_id, out);
    return out;
}

/// Groups arbitrary unit-duration sensors by recursing on an interval tree:
/// each node's dividing coordinate is the lower median of the endpoint
/// multiset (ties to the left), the sensors containing it are grouped at that
/// coordinate, and the rest recurse left/right.  Guarantees
/// L_G(i) > L_Z(i)/(1+eps) - 4*h*D*ceil(1/eps) with h the realized height.
inline GroupAllResult group_all(const std::vector<Sensor>& Z, const GroupingParams& params) {
    detail::check_grouping_input(Z, params);
    GroupAllResult out;
    std::int64_t next_id = 0;

    struct Frame {
        std::vector<Sensor> sensors;
        std::int64_t depth;
    };
    std::vector<Frame> stack;
    stack.push_back({Z, 1});
    while (!stack.empty()) {
        Frame frame = std::move(stack.back());
        stack.pop_back();
        if (frame.sensors.empty()) continue;

        std::vector<std::int64_t> endpoints;
        endpoints.reserve(frame.sensors.size() * 2);
        for (const auto& s : frame.sensors) {
            endpoints.push_back(s.left);
            endpoints.push_back(s.right);
        }
        std::sort(endpoints.begin(), endpoints.end());
        const std::int64_t split = endpoints[(endpoints.size() - 1) / 2];

        std::vector<Sensor> mid, left, right;
        for (const auto& s : frame.sensors) {
            if (s.left <= split && split < s.right)
                mid.push_back(s);
            else if (s.right <= split)
                left.push_back(s);
            else
                right.push_back(s);
        }
        if (!mid.empty()) {
            out.tree_height = std::max(out.tree_height, frame.depth);
            GroupingResult node;
            detail::group_at_fixed_into(mid, params, next_id, node);
            for (auto& g : node.groups) out.groups.push_back(std::move(g));
            for (const auto id : node.discarded) out.discarded.push_back(id);
        }
        stack.push_back({std::move(left), frame.depth + 1});
        stack.push_back({std::move(right), frame.depth + 1});
    }
    std::sort(out.discarded.begin(), out.discarded.end());
    return out;
}

/// Pushes a schedule of groups down to the underlying sensors: the member at
/// offset o starts at t(group) + o.  Members at offsets >= truncate_to lie
/// above the truncated rectangle and stay UNUSED, as does every sensor of the
/// instance that belongs to no group.
inline Schedule expand_groups(const Instance& inst, const std::vector<Group>& groups,
                              const Schedule& group_schedule,
                              std::optional<std::int64_t> truncate_to = std::nullopt) {
    validate_instance(inst);
    std::set<std::int64_t> group_ids;
    for (const auto& g : groups)
        if (!group_ids.insert(g.id).second)
            throw StructuralError("expand_groups: duplicate group id " + std::to_string(g.id));
    if (group_schedule.starts.size() != groups.size())
        throw StructuralError("expand_groups: schedule domain does not match the groups");
    for (const auto& [id, t] : group_schedule.starts) {
        (void)t;
        if (!group_ids.count(id))
            throw StructuralError("expand_groups: unknown group id " + std::to_string(id));
    }

    Schedule out = empty_schedule(inst);
    for (const auto& g : groups) {
        const auto& start = group_schedule.starts.at(g.id);
        if (!start.has_value()) continue;
        for (const auto& [member_id, offset] : g.members) {
            if (truncate_to.has_value() && offset >= *truncate_to) continue;
            const auto it = out.starts.find(member_id);
            if (it == out.starts.end())
                throw StructuralError("expand_groups: member " + std::to_string(member_id) +
                                      " is not a sensor of the instance");
            if (it->second.has_value())
                throw StructuralError("expand_groups: sensor " + std::to_string(member_id) +
                                      " appears in two scheduled groups");
            it->second = *start + Rational(offset);
        }
    }
    return out;
}

} // namespace rsc
