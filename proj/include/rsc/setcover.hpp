#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "rsc/core.hpp"
#include "rsc/rng.hpp"

namespace rsc {

enum class RandomScheduleMode {
    kPaper,    // fixed T = cL/ln n, validate-and-resample
    kMaximize, // doubling plus binary search for the largest validated T
};

struct RandomScheduleOptions {
    RandomScheduleMode mode = RandomScheduleMode::kPaper;
    int retry_cap = 64;
};

struct RandomScheduleResult {
    Schedule schedule;
    Rational T;
    int attempts = 0; // draws consumed by the accepted schedule (paper mode)
};

namespace detail {

/// Canonical rational target duration: cL/ln n rounded up to the grid of
/// multiples of 1/(2n).  Start times are sampled on the grid of multiples of
/// T/(2n), so all schedule arithmetic stays exact.
inline Rational canonical_T(const Rational& c, std::int64_t L, std::int64_t n) {
    const double target = c.to_double() * static_cast<double>(L) / std::log(static_cast<double>(n));
    const double scaled = target * 2.0 * static_cast<double>(n);
    const auto grid_units = static_cast<std::int64_t>(std::ceil(scaled - 1e-12));
    return Rational(std::max<std::int64_t>(grid_units, 1), 2 * n);
}

/// One random draw per the paper's rule: t(s) uniform on the grid points of
/// [-d(s), T], clamped to 0; sensors with d >= T start at 0.
inline Schedule draw_schedule(const SetInstance& inst, const Rational& T, Rng& rng) {
    const std::int64_t n = static_cast<std::int64_t>(inst.sensors.size());
    const Rational delta = T / Rational(2 * n);
    Schedule s;
    for (const auto& sensor : inst.sensors) {
        if (Rational(sensor.duration) >= T) {
            s.starts[sensor.id] = Rational(0);
            continue;
        }
        // grid indices j with j*delta in [-d, T]: j in [-floor(d/delta), 2n]
        const Rational ratio = Rational(sensor.duration) / delta;
        const std::int64_t j_lo = -ratio.floor();
        const std::int64_t j = rng.uniform_int(j_lo, 2 * n);
        s.starts[sensor.id] = j <= 0 ? Rational(0) : Rational(j) * delta;
    }
    return s;
}

} // namespace detail

/// Randomized schedule for the general Sensor Cover problem.  Paper mode
/// samples at T = cL/ln n (c < 1/16) and retries until the draw validates;
/// maximize mode additionally searches upward for the largest validated T.
inline RandomScheduleResult random_schedule(const SetInstance& inst, const Rational& c,
                                            std::uint64_t seed, const RandomScheduleOptions& options = {}) {
    validate_instance(inst);
    const auto profile = load_profile(inst);
    const std::int64_t L = profile.min_load();
    if (L <= 0) throw PreconditionError("random_schedule: instance load must be positive");
    if (options.mode == RandomScheduleMode::kPaper && c >= Rational(1, 16))
        throw PreconditionError("random_schedule: paper mode requires c < 1/16");
    if (c <= Rational(0)) throw PreconditionError("random_schedule: c must be positive");

    const std::int64_t n = static_cast<std::int64_t>(inst.sensors.size());
    if (n == 1) {
        // a single sensor must cover the whole universe (L > 0); its battery
        // is the whole story
        RandomScheduleResult r;
        r.schedule.starts[inst.sensors.front().id] = Rational(0);
        r.T = Rational(inst.sensors.front().duration);
        r.attempts = 1;
        return r;
    }

    Rng rng(seed);
    const Rational base_T = detail::canonical_T(c, L, n);

    auto attempt = [&](const Rational& T, int cap) -> std::pair<bool, RandomScheduleResult> {
        for (int k = 1; k <= cap; ++k) {
            Schedule s = detail::draw_schedule(inst, T, rng);
            if (validate_schedule(inst, s, T).valid) {
                RandomScheduleResult r;
                r.schedule = std::move(s);
                r.T = T;
                r.attempts = k;
                return {true, std::move(r)};
            }
        }
        return {false, {}};
    };

    if (options.mode == RandomScheduleMode::kPaper) {
        auto [ok, result] = attempt(base_T, options.retry_cap);
        if (!ok)
            throw ProbabilisticFailureError("random_schedule: no valid draw at T = " + base_T.to_string() +
                                            " within " + std::to_string(options.retry_cap) + " retries");
        return result;
    }

    // maximize mode: doubling then binary search, every probe validated
    auto [ok, best] = attempt(base_T, options.retry_cap);
    if (!ok)
        throw ProbabilisticFailureError("random_schedule: no valid draw at T = " + base_T.to_string() +
                                        " within " + std::to_string(options.retry_cap) + " retries");
    const Rational cap_T(L); // duration can never exceed the load
    Rational lo = best.T;
    Rational hi;
    bool hi_known = false;
    while (true) {
        Rational probe = lo * Rational(2);
        if (probe >= cap_T) probe = cap_T;
        auto [p_ok, p_res] = attempt(probe, options.retry_cap);
        if (p_ok) {
            best = std::move(p_res);
            lo = probe;
            if (probe == cap_T) return best; // nothing above the load bound
        } else {
            hi = probe;
            hi_known = true;
            break;
        }
    }
    const Rational resolution = base_T / Rational(2 * n);
    while (hi_known && hi - lo > resolution) {
        const Rational mid = (lo + hi) / Rational(2);
        auto [m_ok, m_res] = attempt(mid, options.retry_cap);
        if (m_ok) {
            best = std::move(m_res);
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return best;
}

/// Snaps every start time up to its ceiling.  Snapping can never open a gap
/// (integer durations), so the validated duration does not decrease; if it
/// does, the input was not a valid schedule and this throws.
inline Schedule snap_integer(const SetInstance& inst, const Schedule& schedule) {
    const Rational before = schedule_duration(inst, schedule);
    Schedule out;
    for (const auto& [id, t] : schedule.starts)
        out.starts[id] = t.has_value() ? std::optional<Rational>(Rational(t->ceil())) : std::nullopt;
    const Rational after = schedule_duration(inst, out);
    if (after < before)
        throw InvariantError("snap_integer: duration decreased from " + before.to_string() + " to " +
                             after.to_string() + "; the input schedule was not valid");
    return out;
}

// ---------------------------------------------------------------------------
// Randomized cover peeling (unit durations)

struct PeelOptions {
    int retry_cap = 64; // per-cover resampling budget
};

struct PeelResult {
    std::vector<std::vector<std::int64_t>> covers; // disjoint id sets, each covering U
    std::vector<std::int64_t> remainder;           // ids never taken
};

/// Repeatedly extracts random covers: each remaining sensor joins the
/// candidate with probability min(1, c*ln m / L_i); a candidate is accepted
/// only if it covers the universe and no element's load drops by (1/2)*ln m
/// or more.  Peeling stops before the remaining load could fall under L/2, so
/// the remainder keeps load >= L/2 at every element.
inline PeelResult peel_covers(const SetInstance& inst, const Rational& c, std::uint64_t seed,
                              const PeelOptions& options = {}) {
    validate_instance(inst);
    for (const auto& s : inst.sensors)
        if (s.duration != 1) throw PreconditionError("peel_covers: durations must be 1");
    if (c <= Rational(0)) throw PreconditionError("peel_covers: c must be positive");

    const auto m = inst.universe_size;
    const double ln_m = std::log(static_cast<double>(m));
    const auto profile = load_profile(inst);
    const std::int64_t L = profile.min_load();

    PeelResult result;
    if (static_cast<double>(L) <= c.to_double() * ln_m) {
        for (const auto& s : inst.sensors) result.remainder.push_back(s.id);
        std::sort(result.remainder.begin(), result.remainder.end());
        return result;
    }

    Rng rng(seed);
    std::vector<std::size_t> remaining(inst.sensors.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    std::vector<std::int64_t> load = profile.cell_load;

    auto min_load = [&]() {
        std::int64_t v = load.front();
        for (const auto x : load) v = std::min(v, x);
        return v;
    };

    const double drop_limit = 0.5 * ln_m;
    while (static_cast<double>(min_load()) - drop_limit >= static_cast<double>(L) / 2.0) {
        const std::int64_t L_i = min_load();
        const double p = std::min(1.0, c.to_double() * ln_m / static_cast<double>(L_i));
        bool accepted = false;
        for (int attempt = 0; attempt < options.retry_cap && !accepted; ++attempt) {
            std::vector<std::size_t> candidate;
            for (const auto idx : remaining)
                if (rng.bernoulli(p)) candidate.push_back(idx);

            std::vector<std::int64_t> drop(static_cast<std::size_t>(m), 0);
            for (const auto idx : candidate)
                for (const auto e : inst.sensors[idx].region) drop[static_cast<std::size_t>(e)] += 1;

            bool covers = true;
            bool drop_ok = true;
            for (std::int64_t e = 0; e < m; ++e) {
                if (drop[static_cast<std::size_t>(e)] == 0) covers = false;
                if (static_cast<double>(drop[static_cast<std::size_t>(e)]) >= drop_limit) drop_ok = false;
            }
            if (!covers || !drop_ok) continue;

            accepted = true;
            std::vector<std::int64_t> cover_ids;
            for (const auto idx : candidate) cover_ids.push_back(inst.sensors[idx].id);
            std::sort(cover_ids.begin(), cover_ids.end());
            result.covers.push_back(std::move(cover_ids));

            std::vector<char> taken(inst.sensors.size(), 0);
            for (const auto idx : candidate) taken[idx] = 1;
            std::vector<std::size_t> next;
            for (const auto idx : remaining)
                if (!taken[idx]) next.push_back(idx);
            remaining = std::move(next);
            for (std::int64_t e = 0; e < m; ++e) load[static_cast<std::size_t>(e)] -= drop[static_cast<std::size_t>(e)];
        }
        if (!accepted)
            throw ProbabilisticFailureError(
                "peel_covers: no acceptable cover within " + std::to_string(options.retry_cap) +
                " draws (consider a larger c)");
    }

    for (const auto idx : remaining) result.remainder.push_back(inst.sensors[idx].id);
    std::sort(result.remainder.begin(), result.remainder.end());
    return result;
}

} // namespace rsc
