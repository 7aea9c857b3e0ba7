#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rsc/core.hpp"
#include "rsc/exact.hpp"
#include "rsc/grouping.hpp"

namespace rsc {

// ---------------------------------------------------------------------------
// Duration truncation

/// ceil((1+eps)^k) for the largest k with (1+eps)^k <= d.  Exact rational
/// exponentiation; durations beyond the exact 128-bit range throw.
inline std::int64_t truncate_duration(std::int64_t d, const Rational& eps) {
    if (d < 1) throw PreconditionError("truncate_duration: duration must be >= 1");
    if (eps <= Rational(0)) throw PreconditionError("truncate_duration: eps must be positive");
    const __int128 p = eps.num() + eps.den(); // numerator of 1+eps
    const __int128 q = eps.den();
    constexpr __int128 limit = static_cast<__int128>(1) << 62;
    __int128 num = 1, den = 1;
    std::int64_t result = 1;
    while (true) {
        if (num > limit / p || den > limit / q)
            throw OverflowError("truncate_duration: ladder exceeds the exact range");
        num *= p;
        den *= q;
        if (num <= static_cast<__int128>(d) * den) {
            result = static_cast<std::int64_t>((num + den - 1) / den);
        } else {
            break;
        }
    }
    return result;
}

/// Replaces every duration d by ceil((1+eps)^k), (1+eps)^k <= d < (1+eps)^{k+1}.
/// Per-cell load shrinks by a factor of at most (1+eps).
inline Instance truncate_durations(const Instance& inst, const Rational& eps) {
    validate_instance(inst);
    Instance out = inst;
    for (auto& s : out.sensors) s.duration = truncate_duration(s.duration, eps);
    return out;
}

// ---------------------------------------------------------------------------
// Masks: restrictions of a solve to a subset of the universe

/// Sorted disjoint coordinate intervals; absent means the whole universe.
using CoverageMask = std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>>;

namespace detail {

inline bool mask_overlaps(const CoverageMask& mask, std::int64_t lo, std::int64_t hi) {
    if (!mask.has_value()) return true;
    for (const auto& [a, b] : *mask)
        if (a < hi && lo < b) return true;
    return false;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Approximation pipeline internals

struct Alg1ClassInfo {
    std::int64_t truncated_duration = 0; // d of the class
    std::int64_t group_param = 0;        // ceil(D/d)
    std::int64_t tree_height = 0;        // realized interval-tree height
};

struct Alg1Diagnostics {
    std::int64_t D = 0;
    std::vector<Alg1ClassInfo> classes;
    std::vector<Sensor> groups; // final group rectangles, truncated to duration D
};

struct BootstrapIteration {
    double log_r_before = 0.0;
    double log_r_after = 0.0;
    bool halved = false;
};

struct BootstrapTrace {
    std::vector<BootstrapIteration> iterations;
    bool fallback_terminated = false;
};

namespace detail {

// Grouping can nest (bootstrap groups earlier groups, and Algorithm 1 groups
// whatever survives), so scheduled entries expand recursively down to real
// sensors.
struct PoolEntry {
    Sensor geom;              // footprint plus current (possibly truncated) duration
    std::int64_t real_id = -1;
    std::vector<std::pair<std::size_t, std::int64_t>> members; // (pool index, offset)
};

struct Pool {
    std::vector<PoolEntry> entries;

    std::size_t add(PoolEntry e) {
        entries.push_back(std::move(e));
        return entries.size() - 1;
    }

    void expand(std::size_t idx, const Rational& t, Schedule& out) const {
        const auto& e = entries[idx];
        if (e.real_id >= 0) {
            auto& slot = out.starts.at(e.real_id);
            if (slot.has_value()) throw InvariantError("approx: sensor scheduled twice during expansion");
            slot = t;
            return;
        }
        for (const auto& [child, offset] : e.members) {
            if (offset >= e.geom.duration) continue; // above the truncation cut
            expand(child, t + Rational(offset), out);
        }
    }
};

inline Pool pool_from_instance(const Instance& inst, std::vector<std::size_t>& alive) {
    Pool pool;
    alive.clear();
    for (const auto& s : inst.sensors) {
        PoolEntry e;
        e.geom = s;
        e.real_id = s.id;
        alive.push_back(pool.add(std::move(e)));
    }
    return pool;
}

/// Steps 1-3 of the grouping pipeline on the given entries: truncate
/// durations to the (1+eps)-ladder, group each duration class (scaled to unit
/// duration) with parameter ceil(D/d), scale back, and truncate every group
/// to duration exactly D.  Returns the group entries.
inline std::vector<std::size_t> group_steps_1_3(Pool& pool, const std::vector<std::size_t>& input,
                                                const Rational& eps, std::int64_t D,
                                                Alg1Diagnostics* diag) {
    // step 1: truncated copies (expansion passes the start straight through,
    // so a truncated entry simply reuses the original as its sole member)
    std::map<std::int64_t, std::vector<std::size_t>> classes; // truncated d -> entries
    for (const auto idx : input) {
        const std::int64_t tau = truncate_duration(pool.entries[idx].geom.duration, eps);
        std::size_t entry = idx;
        if (tau != pool.entries[idx].geom.duration) {
            PoolEntry e;
            e.geom = pool.entries[idx].geom;
            e.geom.duration = tau;
            e.members.emplace_back(idx, 0);
            entry = pool.add(std::move(e));
        }
        classes[tau].push_back(entry);
    }

    // steps 2-3 per class
    std::vector<std::size_t> out;
    for (const auto& [d, members] : classes) {
        const std::int64_t group_param = (D + d - 1) / d; // ceil(D/d)
        std::vector<Sensor> unit;
        unit.reserve(members.size());
        for (std::size_t j = 0; j < members.size(); ++j) {
            Sensor s = pool.entries[members[j]].geom;
            s.id = static_cast<std::int64_t>(j); // local handle; mapped back below
            s.duration = 1;                      // scaled down by d
            unit.push_back(s);
        }
        GroupingParams params{group_param, eps};
        const auto grouped = group_all(unit, params);
        if (diag) diag->classes.push_back({d, group_param, grouped.tree_height});
        for (const auto& g : grouped.groups) {
            PoolEntry e;
            e.geom = g.rect;
            e.geom.duration = D; // step 3: truncate from group_param*d to exactly D
            for (const auto& [local, offset] : g.members)
                e.members.emplace_back(members[static_cast<std::size_t>(local)], offset * d);
            out.push_back(pool.add(std::move(e)));
        }
    }
    return out;
}

/// Greedy over group entries (uniform duration), restricted to the cells of
/// the group instance intersecting the mask.  Expands the result down to the
/// real sensors of `inst`.
inline Schedule schedule_groups_greedy(const Instance& inst, const Pool& pool,
                                       const std::vector<std::size_t>& groups,
                                       const CoverageMask& mask) {
    Schedule out = empty_schedule(inst);
    if (groups.empty()) return out;

    Instance group_instance;
    for (const auto idx : groups) {
        Sensor s = pool.entries[idx].geom;
        s.id = static_cast<std::int64_t>(idx);
        group_instance.sensors.push_back(s);
    }
    const auto ci = build_cell_index(group_instance);
    std::vector<std::size_t> active;
    for (std::size_t c = 0; c + 1 <= ci.cell_count(); ++c)
        if (mask_overlaps(mask, ci.boundaries[c], ci.boundaries[c + 1])) active.push_back(c);
    const auto greedy = greedy_on_cells(group_instance, ci, active);
    for (const auto& [gid, t] : greedy.schedule.starts)
        if (t.has_value()) pool.expand(static_cast<std::size_t>(gid), *t, out);
    return out;
}

inline Schedule algorithm1_on_pool(const Instance& inst, Pool& pool,
                                   const std::vector<std::size_t>& alive, const Rational& eps,
                                   const CoverageMask& mask, Alg1Diagnostics* diag) {
    if (alive.empty()) return empty_schedule(inst);
    std::int64_t d_max = 1;
    for (const auto idx : alive) d_max = std::max(d_max, pool.entries[idx].geom.duration);
    const std::int64_t D = d_max * (Rational(1) / eps).ceil();
    if (diag) diag->D = D;
    const auto groups = group_steps_1_3(pool, alive, eps, D, diag);
    if (diag)
        for (const auto g : groups) diag->groups.push_back(pool.entries[g].geom);
    return schedule_groups_greedy(inst, pool, groups, mask);
}

inline Schedule bootstrap_on_pool(const Instance& inst, Pool& pool, std::vector<std::size_t> alive,
                                  const Rational& eps, const CoverageMask& mask,
                                  BootstrapTrace* trace) {
    const std::int64_t K = (Rational(1) / eps).floor(); // enforce integer 1/eps by flooring
    if (K < 1) throw PreconditionError("bootstrap: eps must be at most 1");
    const Rational eff_eps(1, K);

    auto ratio = [&]() {
        std::int64_t lo = pool.entries[alive.front()].geom.duration;
        std::int64_t hi = lo;
        for (const auto idx : alive) {
            lo = std::min(lo, pool.entries[idx].geom.duration);
            hi = std::max(hi, pool.entries[idx].geom.duration);
        }
        return Rational(hi, lo);
    };

    constexpr int kMaxIterations = 64;
    for (int iter = 0; iter < kMaxIterations && !alive.empty(); ++iter) {
        const Rational r = ratio();
        const double log_r = std::log2(r.to_double());
        if (log_r < static_cast<double>(K)) break;

        // smallest integer g with 2^g >= r, computed exactly
        std::int64_t g = 0;
        for (Rational pow(1); pow < r; pow *= Rational(2)) ++g;
        const Rational mu(1, K * g);

        std::int64_t d_max = 1;
        for (const auto idx : alive) d_max = std::max(d_max, pool.entries[idx].geom.duration);
        const std::int64_t mu_den = K * g;
        const __int128 den4 = static_cast<__int128>(mu_den) * mu_den * mu_den * mu_den;
        const std::int64_t D = static_cast<std::int64_t>((static_cast<__int128>(d_max) + den4 - 1) / den4);
        const std::int64_t small_max = (D + mu_den - 1) / mu_den; // ceil(mu * D)

        std::vector<std::size_t> small, rest;
        for (const auto idx : alive) {
            if (pool.entries[idx].geom.duration <= small_max)
                small.push_back(idx);
            else
                rest.push_back(idx);
        }
        if (small.empty()) {
            if (trace) trace->fallback_terminated = true;
            break;
        }

        const auto new_groups = group_steps_1_3(pool, small, mu, D, nullptr);
        alive = rest;
        for (const auto idx : new_groups) alive.push_back(idx);
        if (alive.empty()) break;

        const double log_r_after = std::log2(ratio().to_double());
        BootstrapIteration it{log_r, log_r_after, log_r_after <= 0.5 * log_r};
        if (trace) trace->iterations.push_back(it);
        if (!it.halved) {
            // the proof guarantees halving only asymptotically; terminate
            // rather than loop when the instance is too small for it
            if (trace) trace->fallback_terminated = true;
            break;
        }
    }
    if (alive.empty()) return empty_schedule(inst);
    return algorithm1_on_pool(inst, pool, alive, eff_eps, mask, nullptr);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Public solvers

/// Algorithm 1: truncate durations to the (1+eps)-ladder, group each class,
/// truncate the groups to a common duration D = d_max*ceil(1/eps), run the
/// uniform greedy on the groups, and expand back to real sensors.
inline Schedule algorithm1(const Instance& inst, const Rational& eps,
                           Alg1Diagnostics* diag = nullptr, const CoverageMask& mask = std::nullopt) {
    validate_instance(inst);
    if (eps <= Rational(0) || eps > Rational(1))
        throw PreconditionError("algorithm1: eps must be in (0, 1]");
    const auto profile = load_profile(inst);
    if (profile.min_load() == 0) return empty_schedule(inst);
    std::vector<std::size_t> alive;
    auto pool = detail::pool_from_instance(inst, alive);
    return detail::algorithm1_on_pool(inst, pool, alive, eps, mask, diag);
}

/// Bootstrapped variant: repeatedly applies the truncate-and-group steps to
/// the small-duration sensors to shrink d_max/d_min (log r at least halves
/// per iteration, asserted via the trace), then runs Algorithm 1.
inline Schedule bootstrap(const Instance& inst, const Rational& eps, BootstrapTrace* trace = nullptr,
                          const CoverageMask& mask = std::nullopt) {
    validate_instance(inst);
    if (eps <= Rational(0) || eps > Rational(1))
        throw PreconditionError("bootstrap: eps must be in (0, 1]");
    const auto profile = load_profile(inst);
    if (profile.min_load() == 0) return empty_schedule(inst);
    std::vector<std::size_t> alive;
    auto pool = detail::pool_from_instance(inst, alive);
    return detail::bootstrap_on_pool(inst, pool, alive, eps, mask, trace);
}

// ---------------------------------------------------------------------------
// O(log log n) composite

struct DurationClasses {
    std::int64_t rho = 0; // d_max = 2^rho after rounding down to powers of 2
    std::int64_t ell = 0; // ceil(2 * log2 log2 n), clamped to >= 1
    std::vector<std::int64_t> class_of; // per sensor position: 0 = small, else the power k
    std::vector<std::int64_t> cell_class; // per cell: argmax class label m(i)
};

namespace detail {

inline std::int64_t rounded_down_pow2(std::int64_t d) {
    return static_cast<std::int64_t>(std::bit_floor(static_cast<std::uint64_t>(d)));
}

} // namespace detail

/// Rounds durations down to powers of two and partitions sensors into the
/// small class (duration <= 2^(rho-ell)) and one class per larger power.
/// cell_class[i] is the class with maximum load at cell i (ties to the
/// smallest label).
inline DurationClasses build_duration_classes(const Instance& inst) {
    validate_instance(inst);
    DurationClasses dc;
    const std::int64_t n = static_cast<std::int64_t>(inst.sensors.size());
    if (n < 4) {
        dc.ell = 1;
    } else {
        const double ll = 2.0 * std::log2(std::log2(static_cast<double>(n)));
        dc.ell = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(ll)));
    }
    std::int64_t d_max = 1;
    for (const auto& s : inst.sensors) d_max = std::max(d_max, detail::rounded_down_pow2(s.duration));
    dc.rho = std::countr_zero(static_cast<std::uint64_t>(d_max));

    dc.class_of.resize(inst.sensors.size());
    for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
        const std::int64_t k =
            std::countr_zero(static_cast<std::uint64_t>(detail::rounded_down_pow2(inst.sensors[i].duration)));
        dc.class_of[i] = (k <= dc.rho - dc.ell) ? 0 : k;
    }

    const auto ci = detail::build_cell_index(inst);
    dc.cell_class.resize(ci.cell_count());
    for (std::size_t c = 0; c < ci.cell_count(); ++c) {
        std::map<std::int64_t, std::int64_t> class_load;
        for (const auto idx : ci.live[c])
            class_load[dc.class_of[idx]] += detail::rounded_down_pow2(inst.sensors[idx].duration);
        std::int64_t best_label = 0, best_load = -1;
        for (const auto& [label, load] : class_load) {
            if (load > best_load) { // map order makes ties go to the smallest label
                best_load = load;
                best_label = label;
            }
        }
        dc.cell_class[c] = best_label;
    }
    return dc;
}

/// O(log log n)-approximation: round durations down to powers of two, assign
/// each cell to its heaviest duration class, cover the cells of each large
/// class with the uniform greedy and the cells of the small class with the
/// bootstrapped algorithm at eps = 1.
inline Schedule solve_loglog(const Instance& inst, DurationClasses* classes_out = nullptr) {
    validate_instance(inst);
    const auto profile = load_profile(inst);
    Schedule out = empty_schedule(inst);
    if (profile.min_load() == 0) return out;

    const auto dc = build_duration_classes(inst);
    if (classes_out) *classes_out = dc;
    const auto ci = detail::build_cell_index(inst);

    std::map<std::int64_t, std::vector<std::size_t>> members; // class label -> sensor positions
    for (std::size_t i = 0; i < inst.sensors.size(); ++i) members[dc.class_of[i]].push_back(i);
    std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>> cells_of; // label -> cell intervals
    for (std::size_t c = 0; c < ci.cell_count(); ++c)
        cells_of[dc.cell_class[c]].emplace_back(ci.boundaries[c], ci.boundaries[c + 1]);

    for (const auto& [label, cell_ranges] : cells_of) {
        const auto it = members.find(label);
        if (it == members.end() || it->second.empty()) continue;

        Instance sub;
        for (const auto pos : it->second) {
            Sensor s = inst.sensors[pos];
            s.duration = detail::rounded_down_pow2(s.duration);
            sub.sensors.push_back(s);
        }
        CoverageMask mask = cell_ranges;

        Schedule part;
        if (label == 0) {
            part = bootstrap(sub, Rational(1), nullptr, mask);
        } else {
            const auto sci = detail::build_cell_index(sub);
            std::vector<std::size_t> active;
            for (std::size_t c = 0; c + 1 <= sci.cell_count(); ++c)
                if (detail::mask_overlaps(mask, sci.boundaries[c], sci.boundaries[c + 1])) active.push_back(c);
            part = detail::greedy_on_cells(sub, sci, active).schedule;
        }
        for (const auto& [id, t] : part.starts)
            if (t.has_value()) out.starts.at(id) = t;
    }
    return out;
}

} // namespace rsc
