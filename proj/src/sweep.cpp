#include "jpart/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <optional>
#include <thread>
#include <tuple>

#include "jpart/gfp.hpp"
#include "jpart/recursion.hpp"
#include "jpart/standardness.hpp"

#include "json.hpp"

namespace jpart {

namespace {

struct Cell {
    Leg leg;
    Int m;
    Int n;
};

std::vector<Cell> build_grid(const SweepOptions& opt) {
    std::vector<Cell> cells;
    for (Leg leg : opt.legs) {
        if (leg == Leg::recursion_oracle) {
            for (Int m = 1; m * m <= opt.budget; ++m)
                for (Int n = m; m * n <= opt.budget; ++n)
                    cells.push_back({leg, m, n});
        } else {
            for (Int m = 1; m <= opt.max_m; ++m)
                for (Int n = m; n <= opt.max_n; ++n)
                    cells.push_back({leg, m, n});
        }
    }
    return cells;
}

std::vector<Int> as_flag(bool b) { return {b ? Int{1} : Int{0}}; }

// Runs both legs of one cell; returns a mismatch when they disagree.
std::optional<Mismatch> check_cell(const Cell& cell, const SweepOptions& opt) {
    switch (cell.leg) {
        case Leg::recursion_oracle: {
            const JordanPartition a = jordan_partition(cell.m, cell.n, opt.p);
            const JordanPartition b = tensor_jordan_type(cell.m, cell.n, opt.p, opt.budget);
            if (a.parts != b.parts)
                return Mismatch{cell.m, cell.n, "recursion", "oracle", a.parts, b.parts};
            return std::nullopt;
        }
        case Leg::direct_prop1: {
            const bool a = standard_direct(cell.m, cell.n, opt.p);
            const bool b = standard_prop1(cell.m, cell.n, opt.p);
            if (a != b)
                return Mismatch{cell.m, cell.n, "direct", "prop1", as_flag(a), as_flag(b)};
            return std::nullopt;
        }
        case Leg::direct_theorems: {
            const bool a = standard_direct(cell.m, cell.n, opt.p);
            const bool b = classify(cell.m, cell.n, opt.p).standard;
            if (a != b)
                return Mismatch{cell.m, cell.n, "direct", "theorems", as_flag(a), as_flag(b)};
            return std::nullopt;
        }
    }
    throw std::logic_error("check_cell: bad leg");
}

}  // namespace

const char* leg_name(Leg leg) {
    switch (leg) {
        case Leg::recursion_oracle: return "recursion-oracle";
        case Leg::direct_prop1: return "direct-prop1";
        case Leg::direct_theorems: return "direct-theorems";
    }
    return "?";
}

SweepReport run_sweep(const SweepOptions& opt) {
    if (opt.p < 2) throw std::invalid_argument("p must be >= 2");
    for (Leg leg : opt.legs)
        if (leg == Leg::direct_theorems && opt.p == 2)
            throw std::invalid_argument("classification undefined for p=2");

    const auto start = std::chrono::steady_clock::now();
    const std::vector<Cell> cells = build_grid(opt);

    int jobs = opt.jobs > 0 ? opt.jobs
                            : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, std::max<int>(1, static_cast<int>(cells.size())));

    std::vector<Mismatch> mismatches;
    std::mutex sink_mutex;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            try {
                if (auto mm = check_cell(cells[i], opt)) {
                    std::lock_guard<std::mutex> lock(sink_mutex);
                    mismatches.push_back(*mm);
                    if (opt.on_mismatch) opt.on_mismatch(*mm);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(sink_mutex);
                if (!failure) failure = std::current_exception();
                next.store(cells.size());
                return;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::sort(mismatches.begin(), mismatches.end(), [](const Mismatch& x, const Mismatch& y) {
        return std::tie(x.m, x.n, x.leg_a, x.leg_b) < std::tie(y.m, y.n, y.leg_a, y.leg_b);
    });

    SweepReport report;
    report.p = opt.p;
    report.budget = opt.budget;
    report.checked = static_cast<Int>(cells.size());
    report.mismatches = std::move(mismatches);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

std::string report_to_json(const SweepReport& r) {
    nlohmann::json out;
    out["p"] = r.p;
    out["budget"] = r.budget;
    out["checked"] = r.checked;
    out["mismatches"] = nlohmann::json::array();
    for (const Mismatch& mm : r.mismatches) {
        nlohmann::json j;
        j["m"] = mm.m;
        j["n"] = mm.n;
        j["legs"] = {mm.leg_a, mm.leg_b};
        j["a"] = mm.a;
        j["b"] = mm.b;
        out["mismatches"].push_back(j);
    }
    out["elapsed_ms"] = r.elapsed_ms;
    return out.dump();
}

}  // namespace jpart
