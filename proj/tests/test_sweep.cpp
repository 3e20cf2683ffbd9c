#include "doctest.h"

#include "json.hpp"

#include "jpart/sweep.hpp"

using namespace jpart;

TEST_CASE("oracle sweep over a small budget is clean") {
    SweepOptions opt;
    opt.p = 3;
    opt.budget = 60;
    opt.legs = {Leg::recursion_oracle};
    opt.jobs = 1;
    const SweepReport r = run_sweep(opt);
    CHECK(r.checked > 0);
    CHECK(r.mismatches.empty());
}

TEST_CASE("predicate sweeps are clean and deterministic across jobs") {
    SweepOptions opt;
    opt.p = 5;
    opt.max_m = 25;
    opt.max_n = 25;
    opt.legs = {Leg::direct_prop1, Leg::direct_theorems};

    opt.jobs = 1;
    const SweepReport serial = run_sweep(opt);
    opt.jobs = 4;
    const SweepReport parallel = run_sweep(opt);

    CHECK(serial.checked == parallel.checked);
    CHECK(serial.mismatches == parallel.mismatches);
    CHECK(serial.mismatches.empty());
    CHECK(serial.checked == 2 * (25 * 26) / 2);
}

TEST_CASE("direct-theorems leg rejects p = 2") {
    SweepOptions opt;
    opt.p = 2;
    opt.legs = {Leg::direct_theorems};
    CHECK_THROWS_AS(run_sweep(opt), std::invalid_argument);
}

TEST_CASE("mismatch callback streams results") {
    SweepOptions opt;
    opt.p = 2;
    opt.budget = 30;
    opt.legs = {Leg::recursion_oracle, Leg::direct_prop1};
    opt.max_m = 10;
    opt.max_n = 10;
    int calls = 0;
    opt.on_mismatch = [&](const Mismatch&) { ++calls; };
    const SweepReport r = run_sweep(opt);
    CHECK(calls == static_cast<int>(r.mismatches.size()));
    CHECK(r.mismatches.empty());
}

TEST_CASE("report serializes to the fixed schema") {
    SweepReport r;
    r.p = 5;
    r.budget = 900;
    r.checked = 42;
    r.elapsed_ms = 7;
    r.mismatches.push_back({3, 4, "recursion", "oracle", {7, 5}, {12}});

    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j.size() == 5);
    CHECK(j["p"] == 5);
    CHECK(j["budget"] == 900);
    CHECK(j["checked"] == 42);
    CHECK(j["elapsed_ms"] == 7);
    REQUIRE(j["mismatches"].size() == 1);
    CHECK(j["mismatches"][0]["m"] == 3);
    CHECK(j["mismatches"][0]["n"] == 4);
    CHECK(j["mismatches"][0]["legs"] == nlohmann::json({"recursion", "oracle"}));
    CHECK(j["mismatches"][0]["a"] == nlohmann::json({7, 5}));
    CHECK(j["mismatches"][0]["b"] == nlohmann::json({12}));
}

TEST_CASE("leg names") {
    CHECK(std::string(leg_name(Leg::recursion_oracle)) == "recursion-oracle");
    CHECK(std::string(leg_name(Leg::direct_prop1)) == "direct-prop1");
    CHECK(std::string(leg_name(Leg::direct_theorems)) == "direct-theorems");
}
