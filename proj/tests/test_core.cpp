#include <catch2/catch_amalgamated.hpp>

#include "rsc/core.hpp"
#include "rsc/exact.hpp"
#include "rsc/gen.hpp"
#include "test_support.hpp"

using namespace rsc;
using test_support::make_instance;

TEST_CASE("compress returns the distinct sorted endpoints") {
    CHECK(compress(gen_fig_gap()) == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5});
    CHECK(compress(make_instance({{0, 1, 5}})) == std::vector<std::int64_t>{0, 1});
    CHECK(compress(make_instance({{0, 10, 1}, {3, 7, 1}})) == std::vector<std::int64_t>{0, 3, 7, 10});
}

TEST_CASE("load profile matches direct summation") {
    SECTION("gap instance is uniformly loaded at 4") {
        const auto p = load_profile(gen_fig_gap());
        CHECK(p.min_load() == 4);
        CHECK(p.max_load() == 4);
        for (const auto v : p.cell_load) CHECK(v == 4);
    }
    SECTION("single sensor") {
        const auto p = load_profile(make_instance({{0, 1, 7}}));
        CHECK(p.cell_load == std::vector<std::int64_t>{7});
        CHECK(p.min_load() == 7);
    }
    SECTION("two overlapping sensors") {
        const auto p = load_profile(make_instance({{0, 2, 3}, {1, 3, 2}}));
        CHECK(p.cell_load == std::vector<std::int64_t>{3, 5, 2});
        CHECK(p.min_load() == 2);
        CHECK(p.max_load() == 5);
    }
    SECTION("randomized cross-check against the direct-summation oracle") {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            const auto inst = gen_random_interval(12, 10, 4, false, seed);
            const auto p = load_profile(inst);
            CHECK(p.cell_load == test_support::direct_cell_loads(inst));
        }
    }
}

TEST_CASE("live_set follows the semi-closed convention") {
    const auto fig = gen_fig_gap();
    CHECK(live_set(fig, 0) == std::vector<std::int64_t>{0, 1});       // A, B
    CHECK(live_set(fig, 4) == std::vector<std::int64_t>{3, 5, 7});    // D, F, H
    const auto zero_cell = make_instance({{0, 1, 2}, {2, 3, 2}});
    CHECK(live_set(zero_cell, 1).empty()); // [1,2) is a permitted zero-load cell
    CHECK_THROWS_AS(live_set(fig, 5), DomainError);
    CHECK_THROWS_AS(live_set(fig, -1), DomainError);
}

TEST_CASE("coverage height scans live scheduled sensors") {
    const auto fig = gen_fig_gap();
    const auto sched = test_support::fig_gap_schedule_3();
    CHECK(coverage_height(fig, sched, 3) == Rational(3));
    CHECK(coverage_height(fig, empty_schedule(fig), 2) == Rational(0));
    const auto single = make_instance({{0, 1, 5}});
    Schedule s;
    s.starts[0] = Rational(0);
    CHECK(coverage_height(single, s, 0) == Rational(5));
}

TEST_CASE("schedule duration is the minimum over cells") {
    const auto fig = gen_fig_gap();
    CHECK(schedule_duration(fig, test_support::fig_gap_schedule_3()) == Rational(3));
    CHECK(schedule_duration(fig, empty_schedule(fig)) == Rational(0));
}

TEST_CASE("greedy output achieves exactly L on uniform instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = gen_random_interval(20, 12, 5, true, seed);
        const auto sched = solve_uniform_greedy(inst);
        CHECK(schedule_duration(inst, sched) == Rational(load_profile(inst).min_load()));
    }
}

TEST_CASE("validate_schedule reports witnesses and structural errors") {
    const auto fig = gen_fig_gap();
    const auto sched = test_support::fig_gap_schedule_3();

    const auto ok = validate_schedule(fig, sched, Rational(3));
    CHECK(ok.valid);
    CHECK(ok.achieved == Rational(3));
    CHECK_FALSE(ok.first_gap.has_value());

    const auto bad = validate_schedule(fig, sched, Rational(4));
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.first_gap.has_value());
    CHECK(bad.first_gap->second == Rational(3)); // the gap starts at height 3
    CHECK(bad.achieved == Rational(3));

    CHECK(validate_schedule(fig, empty_schedule(fig), Rational(0)).valid);

    Schedule missing = sched;
    missing.starts.erase(7);
    CHECK_THROWS_AS(validate_schedule(fig, missing, Rational(1)), StructuralError);
    Schedule extra = sched;
    extra.starts[99] = Rational(0);
    CHECK_THROWS_AS(validate_schedule(fig, extra, Rational(1)), StructuralError);
    Schedule negative = sched;
    negative.starts[0] = Rational(-1);
    CHECK_THROWS_AS(validate_schedule(fig, negative, Rational(1)), StructuralError);
}

TEST_CASE("coverage height is monotone under sensor removal") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto inst = gen_random_interval(10, 8, 3, false, seed);
        // a deterministic ad-hoc schedule over the variable-duration instance
        Schedule s = empty_schedule(inst);
        Rng rng(seed * 17);
        for (auto& [id, t] : s.starts)
            if (rng.bernoulli(0.7)) t = Rational(rng.uniform_int(0, 4));
        const auto bounds = compress(inst);
        for (const auto& sensor : inst.sensors) {
            if (!s.starts.at(sensor.id).has_value()) continue;
            Schedule removed = s;
            removed.starts.at(sensor.id) = std::nullopt;
            for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
                CHECK(coverage_height(inst, removed, bounds[c]) <= coverage_height(inst, s, bounds[c]));
            }
        }
    }
}

TEST_CASE("validation is self-consistent") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto inst = gen_random_interval(8, 6, 3, false, seed);
        Schedule s = empty_schedule(inst);
        Rng rng(seed);
        for (auto& [id, t] : s.starts)
            if (rng.bernoulli(0.5)) t = Rational(rng.uniform_int(0, 3));
        CHECK(validate_schedule(inst, s, schedule_duration(inst, s)).valid);
    }
}

TEST_CASE("malformed instances are rejected") {
    Instance inst;
    CHECK_THROWS_AS(validate_instance(inst), StructuralError); // empty
    inst.sensors.push_back({0, 3, 3, 1});
    CHECK_THROWS_AS(validate_instance(inst), StructuralError); // left == right
    inst.sensors[0] = {0, 0, 1, 0};
    CHECK_THROWS_AS(validate_instance(inst), StructuralError); // zero duration
    inst.sensors[0] = {0, 0, 1, 1};
    inst.sensors.push_back({0, 2, 3, 1});
    CHECK_THROWS_AS(validate_instance(inst), StructuralError); // duplicate id
}
