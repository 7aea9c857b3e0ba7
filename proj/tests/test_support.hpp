#pragma once

#include <cstdint>
#include <vector>

#include "rsc/core.hpp"
#include "rsc/gen.hpp"

namespace test_support {

inline rsc::Instance make_instance(std::initializer_list<std::array<std::int64_t, 3>> triples) {
    rsc::Instance inst;
    std::int64_t id = 0;
    for (const auto& [l, r, d] : triples) inst.sensors.push_back({id++, l, r, d});
    return inst;
}

/// Independent load oracle: per-cell load by direct summation over sensors,
/// one coordinate at a time.  Kept separate from rsc::load_profile on purpose.
inline std::vector<std::int64_t> direct_cell_loads(const rsc::Instance& inst) {
    std::vector<std::int64_t> bounds;
    for (const auto& s : inst.sensors) {
        bounds.push_back(s.left);
        bounds.push_back(s.right);
    }
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
    std::vector<std::int64_t> loads;
    for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
        std::int64_t sum = 0;
        for (const auto& s : inst.sensors)
            if (s.left <= bounds[c] && bounds[c] < s.right) sum += s.duration;
        loads.push_back(sum);
    }
    return loads;
}

inline rsc::Schedule fig_gap_schedule_3() {
    // A:0 B:2 C:0 D:0 E:0 F:1 G:1 H:0 achieves duration 3 on the gap instance
    rsc::Schedule s;
    const std::int64_t starts[8] = {0, 2, 0, 0, 0, 1, 1, 0};
    for (std::int64_t id = 0; id < 8; ++id) s.starts[id] = rsc::Rational(starts[id]);
    return s;
}

} // namespace test_support
