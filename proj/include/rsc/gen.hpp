#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rsc/core.hpp"
#include "rsc/rng.hpp"

namespace rsc {

/// The eight-sensor instance with L = 4 but OPT = 3 (the 4/3 gap witness).
inline Instance gen_fig_gap() {
    Instance inst;
    const std::int64_t spec[8][3] = {
        {0, 1, 3}, // A
        {0, 3, 1}, // B
        {1, 2, 2}, // C
        {1, 4, 1}, // D
        {2, 3, 1}, // E
        {2, 5, 1}, // F
        {3, 4, 2}, // G
        {4, 5, 3}, // H
    };
    for (std::int64_t i = 0; i < 8; ++i)
        inst.sensors.push_back({i, spec[i][0], spec[i][1], spec[i][2]});
    return inst;
}

/// Nested dyadic family with uniform load h: level j contributes one
/// unit-duration sensor per aligned block of width 2^(h-j).  Grouping loses
/// a Theta(h) fraction of the load on this family, n = 2^h - 1.
inline Instance gen_nested_log(std::int64_t h) {
    if (h < 1 || h > 20) throw PreconditionError("gen_nested_log: h must be in [1, 20]");
    Instance inst;
    std::int64_t id = 0;
    for (std::int64_t j = 0; j < h; ++j) {
        const std::int64_t width = std::int64_t(1) << (h - j);
        const std::int64_t blocks = std::int64_t(1) << j;
        for (std::int64_t b = 0; b < blocks; ++b)
            inst.sensors.push_back({id++, b * width, (b + 1) * width, 1});
    }
    return inst;
}

// ---------------------------------------------------------------------------
// 3-Partition hardness reduction

/// A 3-Partition instance: 3m item sizes and a bound B with sum = m*B.
struct ThreePartitionSpec {
    std::vector<std::int64_t> sizes;
    std::int64_t B = 0;

    std::int64_t m() const { return static_cast<std::int64_t>(sizes.size()) / 3; }
};

inline void validate_spec(const ThreePartitionSpec& spec) {
    if (spec.sizes.empty() || spec.sizes.size() % 3 != 0)
        throw StructuralError("three-partition: item count must be a positive multiple of 3");
    if (spec.B < 1) throw StructuralError("three-partition: B must be positive");
    std::int64_t sum = 0;
    for (const auto z : spec.sizes) {
        if (z < 1) throw StructuralError("three-partition: sizes must be positive");
        if (z > 10'000) throw StructuralError("three-partition: size exceeds the polynomial cap");
        sum += z;
    }
    if (sum != spec.m() * spec.B)
        throw StructuralError("three-partition: sizes must sum to m*B");
}

namespace detail {

/// Builds the storage-allocation event timeline as batches.  Each batch is a
/// set of departures plus the arrivals that take over the freed storage; both
/// happen at the same coordinate, which is what keeps the load exactly
/// uniform.  Usage: queue departures with depart(), seal them with commit()
/// (this advances the coordinate), then open the batch's arrivals.
class DsaTimeline {
public:
    // opens an item at the current coordinate; returns its handle
    std::int64_t arrive(std::int64_t size) {
        items_.push_back({size, coord_, -1});
        return static_cast<std::int64_t>(items_.size()) - 1;
    }

    void depart(std::int64_t item) { pending_departures_.push_back(item); }

    /// Advances to the next coordinate and closes the queued departures there.
    void commit() {
        ++coord_;
        for (const auto it : pending_departures_) items_[static_cast<std::size_t>(it)].departure = coord_;
        pending_departures_.clear();
    }

    Instance finish() {
        const std::int64_t end = coord_ + 1; // survivors stay through the last cell
        Instance inst;
        for (std::size_t i = 0; i < items_.size(); ++i) {
            const auto& it = items_[i];
            const std::int64_t right = it.departure >= 0 ? it.departure : end;
            inst.sensors.push_back({static_cast<std::int64_t>(i), it.arrival, right, it.size});
        }
        return inst;
    }

private:
    struct Item {
        std::int64_t size;
        std::int64_t arrival;
        std::int64_t departure; // -1 while alive
    };
    std::vector<Item> items_;
    std::vector<std::int64_t> pending_departures_;
    std::int64_t coord_ = 0;
};

} // namespace detail

/// The 3-Partition -> Dynamic Storage Allocation reduction, emitted as an
/// interval instance of exactly uniform load D = m(B+1)+2.  OPT = L if and
/// only if the 3-Partition instance is solvable.  With restricted = true all
/// durations lie in {1, 2} (single-unit items plus the repeated size-2
/// shuttle); with restricted = false each item w arrives once with duration
/// z(w), which yields smaller instances.
inline Instance gen_three_partition(const ThreePartitionSpec& spec, bool restricted = true) {
    validate_spec(spec);
    const std::int64_t m = spec.m();
    const std::int64_t B = spec.B;
    const std::int64_t D = m * (B + 1) + 2;

    detail::DsaTimeline tl;
    std::vector<std::int64_t> f(static_cast<std::size_t>(D + 1)), g(static_cast<std::size_t>(D + 1)),
        h(static_cast<std::size_t>(D + 1));

    for (std::int64_t i = 1; i <= D; ++i) f[static_cast<std::size_t>(i)] = tl.arrive(1);

    tl.depart(f[1]);
    tl.depart(f[2]);
    tl.commit();
    std::int64_t shuttle = tl.arrive(2);
    tl.depart(shuttle);
    tl.commit();
    g[1] = tl.arrive(1);
    g[2] = tl.arrive(1);
    for (std::int64_t i = 2; i <= D - 1; ++i) {
        tl.depart(g[static_cast<std::size_t>(i)]);
        tl.depart(f[static_cast<std::size_t>(i + 1)]);
        tl.commit();
        shuttle = tl.arrive(2);
        tl.depart(shuttle);
        tl.commit();
        h[static_cast<std::size_t>(i)] = tl.arrive(1);
        g[static_cast<std::size_t>(i + 1)] = tl.arrive(1);
    }
    tl.depart(g[1]);
    tl.commit();
    h[1] = tl.arrive(1);
    tl.depart(g[static_cast<std::size_t>(D)]);
    tl.commit();
    h[static_cast<std::size_t>(D)] = tl.arrive(1);

    // free m blocks of length B (barriers stay at multiples of B+1) and hand
    // the space to the items in the same batch
    for (std::int64_t i = 1; i <= D - 2; ++i)
        if (i % (B + 1) != 0) tl.depart(h[static_cast<std::size_t>(i)]);
    tl.commit();

    if (!restricted) {
        for (const auto z : spec.sizes) tl.arrive(z);
        return tl.finish();
    }

    std::vector<std::vector<std::int64_t>> q(spec.sizes.size());
    for (std::size_t w = 0; w < spec.sizes.size(); ++w)
        for (std::int64_t i = 0; i < spec.sizes[w]; ++i) q[w].push_back(tl.arrive(1));

    // same-block enforcement per item, mirroring the f/g/h trick
    for (std::size_t w = 0; w < spec.sizes.size(); ++w) {
        const std::int64_t z = spec.sizes[w];
        if (z < 2) continue;
        std::vector<std::int64_t> qp(static_cast<std::size_t>(z + 1));
        tl.depart(q[w][0]);
        tl.depart(q[w][1]);
        tl.commit();
        shuttle = tl.arrive(2);
        tl.depart(shuttle);
        tl.commit();
        qp[1] = tl.arrive(1);
        qp[2] = tl.arrive(1);
        for (std::int64_t i = 2; i <= z - 1; ++i) {
            tl.depart(qp[static_cast<std::size_t>(i)]);
            tl.depart(q[w][static_cast<std::size_t>(i)]); // q_{w,i+1} is 0-indexed q[w][i]
            tl.commit();
            shuttle = tl.arrive(2);
            tl.depart(shuttle);
            tl.commit();
            tl.arrive(1); // q''_{w,i}
            qp[static_cast<std::size_t>(i + 1)] = tl.arrive(1);
        }
    }
    return tl.finish();
}

/// Test-side exhaustive solvability check for a 3-Partition spec.
inline bool three_partition_solvable(const ThreePartitionSpec& spec) {
    validate_spec(spec);
    std::vector<std::int64_t> items = spec.sizes;
    std::sort(items.rbegin(), items.rend());
    std::vector<char> used(items.size(), 0);

    std::function<bool()> solve = [&]() -> bool {
        std::size_t first = items.size();
        for (std::size_t i = 0; i < items.size(); ++i)
            if (!used[i]) {
                first = i;
                break;
            }
        if (first == items.size()) return true;
        used[first] = 1;
        for (std::size_t j = first + 1; j < items.size(); ++j) {
            if (used[j]) continue;
            if (j > first + 1 && items[j] == items[j - 1] && !used[j - 1]) continue;
            used[j] = 1;
            for (std::size_t k = j + 1; k < items.size(); ++k) {
                if (used[k]) continue;
                if (k > j + 1 && items[k] == items[k - 1] && !used[k - 1]) continue;
                if (items[first] + items[j] + items[k] != spec.B) continue;
                used[k] = 1;
                if (solve()) return true;
                used[k] = 0;
            }
            used[j] = 0;
        }
        used[first] = 0;
        return false;
    };
    return solve();
}

// ---------------------------------------------------------------------------
// Seeded random families

/// Random interval instance: endpoints drawn uniformly from [0, coord_range],
/// durations uniform in [1, d_max] (a single shared draw when uniform).
inline Instance gen_random_interval(std::int64_t n, std::int64_t coord_range, std::int64_t d_max,
                                    bool uniform, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("gen_random_interval: n must be >= 1");
    if (coord_range < 1 || d_max < 1)
        throw PreconditionError("gen_random_interval: coord_range and d_max must be >= 1");
    Rng rng(seed);
    Instance inst;
    const std::int64_t shared = rng.uniform_int(1, d_max);
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t a = rng.uniform_int(0, coord_range - 1);
        const std::int64_t b = rng.uniform_int(0, coord_range - 1);
        const std::int64_t left = std::min(a, b);
        const std::int64_t right = std::max(a, b) + 1;
        const std::int64_t d = uniform ? shared : rng.uniform_int(1, d_max);
        inst.sensors.push_back({i, left, right, d});
    }
    return inst;
}

/// Random set instance: each sensor covers region_size distinct elements.
inline SetInstance gen_random_set(std::int64_t n, std::int64_t m, std::int64_t region_size,
                                  std::int64_t d_max, std::uint64_t seed) {
    if (n < 1 || m < 1) throw PreconditionError("gen_random_set: n and m must be >= 1");
    if (region_size < 1 || region_size > m)
        throw PreconditionError("gen_random_set: region_size must be in [1, m]");
    if (d_max < 1) throw PreconditionError("gen_random_set: d_max must be >= 1");
    Rng rng(seed);
    SetInstance inst;
    inst.universe_size = m;
    for (std::int64_t i = 0; i < n; ++i) {
        SetSensor s;
        s.id = i;
        // Floyd-style distinct sampling, deterministic given the rng stream
        std::vector<std::int64_t> chosen;
        for (std::int64_t j = m - region_size; j < m; ++j) {
            const std::int64_t t = rng.uniform_int(0, j);
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
                chosen.push_back(t);
            else
                chosen.push_back(j);
        }
        std::sort(chosen.begin(), chosen.end());
        s.region = std::move(chosen);
        s.duration = rng.uniform_int(1, d_max);
        inst.sensors.push_back(std::move(s));
    }
    return inst;
}

} // namespace rsc
