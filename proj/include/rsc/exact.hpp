#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rsc/core.hpp"

namespace rsc {

// ---------------------------------------------------------------------------
// Uniform-duration greedy

struct GreedyResult {
    Schedule schedule;
    std::int64_t achieved = 0; // duration in time units (a multiple of d)
};

namespace detail {

struct CellIndex {
    std::vector<std::int64_t> boundaries;
    std::vector<std::vector<std::size_t>> live; // per cell, sensor indices sorted by id
    std::vector<std::int64_t> load;

    std::size_t cell_count() const { return load.size(); }
};

inline CellIndex build_cell_index(const Instance& inst) {
    CellIndex ci;
    ci.boundaries = compress(inst);
    ci.live.assign(ci.boundaries.size() - 1, {});
    ci.load.assign(ci.boundaries.size() - 1, 0);
    std::vector<std::size_t> by_id(inst.sensors.size());
    for (std::size_t i = 0; i < by_id.size(); ++i) by_id[i] = i;
    std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) {
        return inst.sensors[a].id < inst.sensors[b].id;
    });
    for (const auto idx : by_id) {
        const auto& s = inst.sensors[idx];
        const auto lo = std::lower_bound(ci.boundaries.begin(), ci.boundaries.end(), s.left) - ci.boundaries.begin();
        const auto hi = std::lower_bound(ci.boundaries.begin(), ci.boundaries.end(), s.right) - ci.boundaries.begin();
        for (auto c = lo; c < hi; ++c) {
            ci.live[static_cast<std::size_t>(c)].push_back(idx);
            ci.load[static_cast<std::size_t>(c)] += s.duration;
        }
    }
    return ci;
}

/// Left-to-right sweep restricted to the given cells.  All durations must be
/// equal; fills the k uncovered levels of each active cell with k unscheduled
/// live sensors, smallest id first.
inline GreedyResult greedy_on_cells(const Instance& inst, const CellIndex& ci,
                                    const std::vector<std::size_t>& active_cells) {
    const std::int64_t d = inst.sensors.front().duration;
    for (const auto& s : inst.sensors)
        if (s.duration != d)
            throw PreconditionError("solve_uniform_greedy: durations are not uniform");

    GreedyResult result;
    result.schedule = empty_schedule(inst);
    if (active_cells.empty()) return result;

    std::int64_t min_count = -1;
    for (const auto c : active_cells) {
        const auto count = static_cast<std::int64_t>(ci.live[c].size());
        if (min_count < 0 || count < min_count) min_count = count;
    }
    if (min_count <= 0) return result; // a zero-load cell forces duration 0

    const std::int64_t levels = min_count;
    result.achieved = levels * d;

    std::vector<std::int64_t> level_of(inst.sensors.size(), -1);
    std::vector<char> taken_level(static_cast<std::size_t>(levels), 0);
    for (const auto c : active_cells) {
        std::fill(taken_level.begin(), taken_level.end(), 0);
        for (const auto idx : ci.live[c]) {
            if (level_of[idx] >= 0 && level_of[idx] < levels) taken_level[static_cast<std::size_t>(level_of[idx])] = 1;
        }
        std::size_t next_live = 0;
        for (std::int64_t lvl = 0; lvl < levels; ++lvl) {
            if (taken_level[static_cast<std::size_t>(lvl)]) continue;
            // live lists are sorted by id, so the first unscheduled entry is
            // the smallest-id candidate
            while (next_live < ci.live[c].size() && level_of[ci.live[c][next_live]] >= 0) ++next_live;
            if (next_live >= ci.live[c].size())
                throw InvariantError("greedy: ran out of live sensors while filling gaps");
            level_of[ci.live[c][next_live]] = lvl;
        }
    }

    for (std::size_t i = 0; i < inst.sensors.size(); ++i)
        if (level_of[i] >= 0)
            result.schedule.starts[inst.sensors[i].id] = Rational(level_of[i] * d);
    return result;
}

} // namespace detail

/// Exact solver for uniform durations: returns a schedule of duration exactly
/// L, sweeping left to right and filling gaps with unscheduled live sensors.
inline Schedule solve_uniform_greedy(const Instance& inst) {
    validate_instance(inst);
    const auto ci = detail::build_cell_index(inst);
    std::vector<std::size_t> all(ci.cell_count());
    for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
    return detail::greedy_on_cells(inst, ci, all).schedule;
}

// ---------------------------------------------------------------------------
// Dynamic program with coordinate restriction

/// One full column at a coordinate: the used sensors with their integer start
/// times.  Sensors of the column not listed are unused.
struct ColumnSchedule {
    std::vector<std::pair<std::int64_t, std::int64_t>> entries; // (sensor id, start)
};

struct DpOptions {
    // Aborts once this many enumeration/link steps have been spent.
    std::int64_t work_bound = 100'000'000;
};

struct DpResult {
    std::int64_t opt = 0;
    Schedule schedule;
};

namespace detail {

inline std::uint64_t level_bits(std::int64_t t, std::int64_t d, std::int64_t T) {
    const std::int64_t top = std::min(t + d, T);
    if (top <= t) return 0;
    const std::uint64_t width = static_cast<std::uint64_t>(top - t);
    const std::uint64_t run = width >= 64 ? ~0ULL : ((1ULL << width) - 1);
    return run << t;
}

/// A sensor passes the minimality filter if at some level it covers, it is
/// the unique owner of the leftmost left edge or the rightmost right edge of
/// the column's union of rectangles.  Minimal schedules satisfy this for
/// every used sensor, which also caps the column at 2T entries.
inline bool column_passes_boundary_filter(const std::vector<Sensor>& live,
                                          const std::vector<std::pair<std::size_t, std::int64_t>>& used,
                                          std::int64_t T) {
    std::vector<char> owned(used.size(), 0);
    for (std::int64_t y = 0; y < T; ++y) {
        std::int64_t min_left = 0, max_right = 0;
        int left_count = 0, right_count = 0;
        std::size_t left_owner = 0, right_owner = 0;
        for (std::size_t k = 0; k < used.size(); ++k) {
            const auto& s = live[used[k].first];
            const std::int64_t t = used[k].second;
            if (y < t || y >= t + s.duration) continue;
            if (left_count == 0 || s.left < min_left) {
                min_left = s.left;
                left_count = 1;
                left_owner = k;
            } else if (s.left == min_left) {
                ++left_count;
            }
            if (right_count == 0 || s.right > max_right) {
                max_right = s.right;
                right_count = 1;
                right_owner = k;
            } else if (s.right == max_right) {
                ++right_count;
            }
        }
        if (left_count == 1) owned[left_owner] = 1;
        if (right_count == 1) owned[right_owner] = 1;
    }
    for (const auto o : owned)
        if (!o) return false;
    return true;
}

struct ColumnEnumerator {
    const std::vector<Sensor>& live;
    std::int64_t T;
    std::int64_t* work_left;
    std::function<void(const std::vector<std::pair<std::size_t, std::int64_t>>&)> emit;

    std::vector<std::pair<std::size_t, std::int64_t>> used; // (live index, start)
    std::vector<char> in_use;

    void run() {
        in_use.assign(live.size(), 0);
        recurse(0, -1, 0);
    }

    // Enumerates every full column exactly once, in the canonical order of
    // entries sorted by (start, id).  The next entry's start may not exceed
    // the lowest uncovered level, since later entries start no lower.
    void recurse(std::uint64_t mask, std::int64_t last_start, std::int64_t last_id) {
        if (--(*work_left) < 0) throw ResourceLimitError("dp: work bound exceeded during column enumeration");
        const std::uint64_t full = level_bits(0, T, T);
        if ((mask & full) == full) {
            if (column_passes_boundary_filter(live, used, T)) emit(used);
        }
        if (static_cast<std::int64_t>(used.size()) >= 2 * T) return;
        const std::int64_t h = std::countr_one(mask); // lowest uncovered level
        for (std::size_t j = 0; j < live.size(); ++j) {
            if (in_use[j]) continue;
            const auto& s = live[j];
            const std::int64_t t_hi = std::min<std::int64_t>(h, std::max<std::int64_t>(T - s.duration, 0));
            for (std::int64_t t = 0; t <= t_hi; ++t) {
                if (t < last_start || (t == last_start && s.id <= last_id)) continue;
                in_use[j] = 1;
                used.emplace_back(j, t);
                recurse(mask | level_bits(t, s.duration, T), t, s.id);
                used.pop_back();
                in_use[j] = 0;
            }
        }
    }
};

} // namespace detail

/// Enumerates every column schedule of the given live set that covers [0, T)
/// at the shared coordinate and passes the minimality filter.  Exposed for
/// tests; dp_decide uses the same enumeration.
inline std::vector<ColumnSchedule> enumerate_column_schedules(const std::vector<Sensor>& live,
                                                              std::int64_t T,
                                                              std::int64_t work_bound = 10'000'000) {
    if (T <= 0 || T > 63) throw PreconditionError("enumerate_column_schedules: T must be in [1, 63]");
    std::vector<ColumnSchedule> out;
    std::int64_t work = work_bound;
    detail::ColumnEnumerator en{live, T, &work,
                                [&](const std::vector<std::pair<std::size_t, std::int64_t>>& used) {
                                    ColumnSchedule cs;
                                    for (const auto& [j, t] : used) cs.entries.emplace_back(live[j].id, t);
                                    std::sort(cs.entries.begin(), cs.entries.end());
                                    out.push_back(std::move(cs));
                                },
                                {}, {}};
    en.run();
    return out;
}

/// Decides whether a schedule of duration T exists, and returns a witness.
/// The dynamic program runs only on coordinates with fewer than 5T live
/// sensors; the remaining cells are filled afterwards with unscheduled live
/// sensors (at least T of them are always free there).
inline std::optional<Schedule> dp_decide(const Instance& inst, std::int64_t T, const DpOptions& options = {}) {
    validate_instance(inst);
    if (T <= 0) return empty_schedule(inst);
    if (T > 63) throw ResourceLimitError("dp: T > 63 exceeds the supported level range");

    const auto ci = detail::build_cell_index(inst);
    for (const auto load : ci.load)
        if (load < T) return std::nullopt;

    std::int64_t work = options.work_bound;

    std::vector<std::size_t> x_cells;
    for (std::size_t c = 0; c < ci.cell_count(); ++c)
        if (static_cast<std::int64_t>(ci.live[c].size()) < 5 * T) x_cells.push_back(c);

    // Per X-cell state table.  A state is the start assignment over the
    // cell's live list (-1 = unused); parent points into the previous cell's
    // table.
    struct CellStates {
        std::size_t cell = 0;
        std::vector<std::vector<std::int16_t>> states;
        std::vector<std::int32_t> parent;
    };
    std::vector<CellStates> tables;

    for (std::size_t xi = 0; xi < x_cells.size(); ++xi) {
        const std::size_t c = x_cells[xi];
        std::vector<Sensor> live;
        live.reserve(ci.live[c].size());
        for (const auto idx : ci.live[c]) live.push_back(inst.sensors[idx]);

        CellStates table;
        table.cell = c;
        detail::ColumnEnumerator en{live, T, &work,
                                    [&](const std::vector<std::pair<std::size_t, std::int64_t>>& used) {
                                        std::vector<std::int16_t> st(live.size(), -1);
                                        for (const auto& [j, t] : used) st[j] = static_cast<std::int16_t>(t);
                                        table.states.push_back(std::move(st));
                                    },
                                    {}, {}};
        en.run();
        if (table.states.empty()) return std::nullopt;
        table.parent.assign(table.states.size(), -1);

        if (xi == 0) {
            for (auto& p : table.parent) p = 0; // reachable, no predecessor
        } else {
            const auto& prev = tables.back();
            const auto& prev_live = ci.live[prev.cell];
            const auto& cur_live = ci.live[c];
            // Shared sensors: live at both coordinates.  Compatibility is
            // full agreement on them, unused status included.
            std::vector<std::pair<std::size_t, std::size_t>> shared; // (prev pos, cur pos)
            {
                std::size_t a = 0, b = 0;
                while (a < prev_live.size() && b < cur_live.size()) {
                    const auto ida = inst.sensors[prev_live[a]].id;
                    const auto idb = inst.sensors[cur_live[b]].id;
                    if (ida == idb) {
                        shared.emplace_back(a, b);
                        ++a;
                        ++b;
                    } else if (ida < idb) {
                        ++a;
                    } else {
                        ++b;
                    }
                }
            }
            auto key_of = [&](const std::vector<std::int16_t>& st, bool prev_side) {
                std::string key;
                key.reserve(shared.size() * 2);
                for (const auto& [pa, pb] : shared) {
                    const std::int16_t v = st[prev_side ? pa : pb];
                    key.push_back(static_cast<char>((v >> 8) & 0xff));
                    key.push_back(static_cast<char>(v & 0xff));
                }
                return key;
            };
            std::unordered_map<std::string, std::int32_t> reachable_by_key;
            for (std::size_t i = 0; i < prev.states.size(); ++i) {
                if (prev.parent[i] < 0) continue;
                if (--work < 0) throw ResourceLimitError("dp: work bound exceeded while linking columns");
                reachable_by_key.emplace(key_of(prev.states[i], true), static_cast<std::int32_t>(i));
            }
            for (std::size_t i = 0; i < table.states.size(); ++i) {
                if (--work < 0) throw ResourceLimitError("dp: work bound exceeded while linking columns");
                const auto it = reachable_by_key.find(key_of(table.states[i], false));
                if (it != reachable_by_key.end()) table.parent[i] = it->second;
            }
            bool any = false;
            for (const auto p : table.parent) any = any || p >= 0;
            if (!any) return std::nullopt;
        }
        tables.push_back(std::move(table));
    }

    // Stitch a witness: walk parents backwards from the first reachable final
    // state and collect assignments.
    std::map<std::int64_t, std::int64_t> assigned; // id -> integer start
    if (!tables.empty()) {
        std::int32_t pick = -1;
        for (std::size_t i = 0; i < tables.back().states.size(); ++i)
            if (tables.back().parent[i] >= 0) {
                pick = static_cast<std::int32_t>(i);
                break;
            }
        for (std::size_t xi = tables.size(); xi-- > 0;) {
            const auto& table = tables[xi];
            const auto& st = table.states[static_cast<std::size_t>(pick)];
            const auto& live = ci.live[table.cell];
            for (std::size_t j = 0; j < live.size(); ++j) {
                if (st[j] < 0) continue;
                const auto id = inst.sensors[live[j]].id;
                const auto it = assigned.find(id);
                if (it != assigned.end() && it->second != st[j])
                    throw InvariantError("dp: inconsistent start while stitching columns");
                assigned[id] = st[j];
            }
            pick = table.parent[static_cast<std::size_t>(pick)];
        }
    }

    // Fill the cells outside X left to right, bottom-up, smallest id first.
    std::vector<char> is_x(ci.cell_count(), 0);
    for (const auto c : x_cells) is_x[c] = 1;
    const std::uint64_t full = detail::level_bits(0, T, T);
    for (std::size_t c = 0; c < ci.cell_count(); ++c) {
        if (is_x[c]) continue;
        std::uint64_t mask = 0;
        for (const auto idx : ci.live[c]) {
            const auto it = assigned.find(inst.sensors[idx].id);
            if (it != assigned.end()) mask |= detail::level_bits(it->second, inst.sensors[idx].duration, T);
        }
        while ((mask & full) != full) {
            const std::int64_t h = std::countr_one(mask);
            bool placed = false;
            for (const auto idx : ci.live[c]) {
                const auto id = inst.sensors[idx].id;
                if (assigned.count(id)) continue;
                assigned[id] = h;
                mask |= detail::level_bits(h, inst.sensors[idx].duration, T);
                placed = true;
                break;
            }
            if (!placed) throw InvariantError("dp: no free sensor available for backfill");
        }
    }

    Schedule schedule = empty_schedule(inst);
    for (const auto& [id, t] : assigned) schedule.starts[id] = Rational(t);
    return schedule;
}

/// Largest T admitting a schedule, found by trying T = L, L-1, ... with
/// dp_decide; returns the witness schedule.
inline DpResult dp_solve(const Instance& inst, const DpOptions& options = {}) {
    validate_instance(inst);
    const auto profile = load_profile(inst);
    for (std::int64_t T = profile.min_load(); T >= 1; --T) {
        auto schedule = dp_decide(inst, T, options);
        if (schedule.has_value()) return {T, std::move(*schedule)};
    }
    return {0, empty_schedule(inst)};
}

// ---------------------------------------------------------------------------
// Brute-force oracle

struct BruteForceOptions {
    std::int64_t max_sensors = 12;
    std::int64_t max_load = 8;
    std::int64_t node_budget = 4'000'000'000;
};

struct BruteForceResult {
    std::int64_t opt = 0;
    Schedule schedule;
};

namespace detail {

/// Exhaustive decision search for duration T over integer start times in
/// {UNUSED, 0, ..., T - d}.  Sensors are scanned in (left, right, duration,
/// id) order so cells close as early as possible; pruning uses per-cell
/// coverage potential, wasted-overlap accounting, and symmetry breaking over
/// identical sensors.
class BruteForceSearch {
public:
    BruteForceSearch(const Instance& inst, const CellIndex& ci, std::int64_t T, std::int64_t* nodes_left)
        : inst_(inst), ci_(ci), T_(T), nodes_left_(nodes_left) {
        const std::size_t n = inst.sensors.size();
        order_.resize(n);
        for (std::size_t i = 0; i < n; ++i) order_[i] = i;
        std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            const auto& sa = inst.sensors[a];
            const auto& sb = inst.sensors[b];
            return std::tie(sa.left, sa.right, sa.duration, sa.id) <
                   std::tie(sb.left, sb.right, sb.duration, sb.id);
        });
        pos_of_.assign(n, 0);
        for (std::size_t k = 0; k < n; ++k) pos_of_[order_[k]] = k;

        const std::size_t cells = ci.cell_count();
        close_depth_.assign(cells, 0);
        span_lo_.assign(n, 0);
        span_hi_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& s = inst.sensors[i];
            span_lo_[i] = static_cast<std::size_t>(
                std::lower_bound(ci.boundaries.begin(), ci.boundaries.end(), s.left) - ci.boundaries.begin());
            span_hi_[i] = static_cast<std::size_t>(
                std::lower_bound(ci.boundaries.begin(), ci.boundaries.end(), s.right) - ci.boundaries.begin());
        }
        for (std::size_t c = 0; c < cells; ++c)
            for (const auto idx : ci.live[c]) close_depth_[c] = std::max(close_depth_[c], pos_of_[idx]);

        undecided_duration_ = ci.load;
        used_duration_.assign(cells, 0);
        covered_.assign(cells, 0);
        count_.assign(cells * static_cast<std::size_t>(T), 0);
        assignment_.assign(n, kUndecided);
    }

    std::optional<std::vector<std::int64_t>> run() {
        if (search(0)) return assignment_;
        return std::nullopt;
    }

private:
    static constexpr std::int64_t kUndecided = -2;
    static constexpr std::int64_t kUnused = -1;

    bool search(std::size_t depth) {
        if (--(*nodes_left_) < 0)
            throw ResourceLimitError("brute_force_opt: node budget exceeded");
        if (depth == order_.size()) return true;
        const std::size_t idx = order_[depth];
        const auto& s = inst_.sensors[idx];

        std::int64_t first_value = 0;
        if (depth > 0) {
            const std::size_t prev = order_[depth - 1];
            const auto& p = inst_.sensors[prev];
            if (p.left == s.left && p.right == s.right && p.duration == s.duration) {
                // identical sensors: force non-decreasing values, UNUSED last
                first_value = assignment_[prev] == kUnused ? T_ : assignment_[prev];
            }
        }

        const std::int64_t t_hi = std::max<std::int64_t>(T_ - s.duration, 0);
        for (std::int64_t t = first_value; t <= t_hi; ++t) {
            if (try_value(depth, idx, t)) return true;
        }
        // UNUSED branch (ordered last; first_value == T_ means an identical
        // predecessor is already unused, which still permits unused here)
        if (try_value(depth, idx, kUnused)) return true;
        return false;
    }

    bool try_value(std::size_t depth, std::size_t idx, std::int64_t value) {
        apply(idx, value);
        const bool ok = feasible(depth, idx) && search(depth + 1);
        if (!ok) undo(idx, value);
        return ok;
    }

    void apply(std::size_t idx, std::int64_t value) {
        assignment_[idx] = value;
        const auto& s = inst_.sensors[idx];
        for (std::size_t c = span_lo_[idx]; c < span_hi_[idx]; ++c) {
            undecided_duration_[c] -= s.duration;
            if (value >= 0) {
                const std::int64_t top = std::min(value + s.duration, T_);
                used_duration_[c] += s.duration;
                for (std::int64_t y = value; y < top; ++y) {
                    auto& cnt = count_[c * static_cast<std::size_t>(T_) + static_cast<std::size_t>(y)];
                    if (cnt++ == 0) covered_[c] |= 1ULL << y;
                }
            }
        }
    }

    void undo(std::size_t idx, std::int64_t value) {
        const auto& s = inst_.sensors[idx];
        for (std::size_t c = span_lo_[idx]; c < span_hi_[idx]; ++c) {
            undecided_duration_[c] += s.duration;
            if (value >= 0) {
                const std::int64_t top = std::min(value + s.duration, T_);
                used_duration_[c] -= s.duration;
                for (std::int64_t y = value; y < top; ++y) {
                    auto& cnt = count_[c * static_cast<std::size_t>(T_) + static_cast<std::size_t>(y)];
                    if (--cnt == 0) covered_[c] &= ~(1ULL << y);
                }
            }
        }
        assignment_[idx] = kUndecided;
    }

    bool feasible(std::size_t depth, std::size_t idx) {
        const std::uint64_t full = level_bits(0, T_, T_);
        for (std::size_t c = span_lo_[idx]; c < span_hi_[idx]; ++c) {
            const std::int64_t covered_levels = std::popcount(covered_[c]);
            // potential: what is covered plus everything still undecided must reach T
            if (covered_levels + undecided_duration_[c] < T_) return false;
            // waste: overlap and overshoot are unrecoverable, and the cell's
            // load exceeds T by only so much
            if (used_duration_[c] - covered_levels > ci_.load[c] - T_) return false;
            if (close_depth_[c] == depth && (covered_[c] & full) != full) return false;
            // every uncovered level needs a live undecided sensor that can
            // still land on it without blowing the cell's waste allowance
            if ((covered_[c] & full) != full && ci_.load[c] == T_) {
                std::uint64_t coverable = covered_[c];
                for (const auto other : ci_.live[c]) {
                    if (assignment_[other] != kUndecided) continue;
                    coverable |= placeable_levels(other);
                    if ((coverable & full) == full) break;
                }
                if ((coverable & full) != full) return false;
            }
        }
        return true;
    }

    // Levels a still-undecided sensor could cover given the zero-slack cells
    // of its span (where any overlap is fatal).
    std::uint64_t placeable_levels(std::size_t idx) {
        const auto& s = inst_.sensors[idx];
        std::uint64_t free = level_bits(0, T_, T_);
        for (std::size_t c = span_lo_[idx]; c < span_hi_[idx]; ++c)
            if (ci_.load[c] == T_) free &= ~covered_[c];
        std::uint64_t result = 0;
        const std::int64_t t_hi = std::max<std::int64_t>(T_ - s.duration, 0);
        for (std::int64_t t = 0; t <= t_hi; ++t) {
            const std::uint64_t bits = level_bits(t, s.duration, T_);
            if ((free & bits) == bits) result |= bits;
        }
        return result;
    }

    const Instance& inst_;
    const CellIndex& ci_;
    std::int64_t T_;
    std::int64_t* nodes_left_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> pos_of_;
    std::vector<std::size_t> close_depth_;
    std::vector<std::size_t> span_lo_;
    std::vector<std::size_t> span_hi_;
    std::vector<std::int64_t> undecided_duration_;
    std::vector<std::int64_t> used_duration_;
    std::vector<std::uint64_t> covered_;
    std::vector<std::uint8_t> count_;
    std::vector<std::int64_t> assignment_;
};

} // namespace detail

/// Independent exhaustive oracle over integer start times.  Searches T
/// downward from L and certifies the first feasible duration.
inline BruteForceResult brute_force_opt(const Instance& inst, const BruteForceOptions& options = {}) {
    validate_instance(inst);
    if (static_cast<std::int64_t>(inst.sensors.size()) > options.max_sensors)
        throw ResourceLimitError("brute_force_opt: instance exceeds sensor cap " +
                                 std::to_string(options.max_sensors));
    const auto profile = load_profile(inst);
    const std::int64_t L = profile.min_load();
    if (L > options.max_load)
        throw ResourceLimitError("brute_force_opt: load exceeds cap " + std::to_string(options.max_load));
    if (L == 0) return {0, empty_schedule(inst)};
    if (L > 63) throw ResourceLimitError("brute_force_opt: load exceeds the supported level range");

    const auto ci = detail::build_cell_index(inst);
    std::int64_t nodes = options.node_budget;
    for (std::int64_t T = L; T >= 1; --T) {
        detail::BruteForceSearch search(inst, ci, T, &nodes);
        const auto assignment = search.run();
        if (!assignment.has_value()) continue;
        Schedule schedule = empty_schedule(inst);
        for (std::size_t i = 0; i < inst.sensors.size(); ++i)
            if ((*assignment)[i] >= 0) schedule.starts[inst.sensors[i].id] = Rational((*assignment)[i]);
        return {T, std::move(schedule)};
    }
    return {0, empty_schedule(inst)};
}

} // namespace rsc
