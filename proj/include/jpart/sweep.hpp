#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jpart/seq.hpp"

// Cross-check harness: sweep a (m, n) grid, run independent computation
// legs on each cell and report every disagreement.

namespace jpart {

enum class Leg {
    recursion_oracle,  // recursion partition vs GF(p) tensor type
    direct_prop1,      // direct standardness vs recursive criterion
    direct_theorems,   // direct standardness vs closed-form membership
};

const char* leg_name(Leg leg);

struct Mismatch {
    Int m = 0;
    Int n = 0;
    std::string leg_a;
    std::string leg_b;
    std::vector<Int> a;  // partitions, or {0|1} for predicate legs
    std::vector<Int> b;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct SweepOptions {
    Int p = 3;
    Int budget = 900;   // caps m*n on the oracle leg
    Int max_m = 200;    // predicate-leg grid bounds
    Int max_n = 200;
    std::vector<Leg> legs;
    int jobs = 0;       // 0 = hardware concurrency
    std::function<void(const Mismatch&)> on_mismatch;  // streamed, serialized
};

struct SweepReport {
    Int p = 0;
    Int budget = 0;
    Int checked = 0;
    std::vector<Mismatch> mismatches;  // sorted by (m, n, legs)
    Int elapsed_ms = 0;
};

/// Runs every requested leg over its grid. Deterministic up to elapsed_ms:
/// reports for jobs = 1 and jobs = N are identical. Throws
/// std::invalid_argument for direct_theorems with p = 2.
SweepReport run_sweep(const SweepOptions& opt);

/// The fixed report schema:
/// {"p":., "budget":., "checked":., "mismatches":[...], "elapsed_ms":.}
std::string report_to_json(const SweepReport& r);

}  // namespace jpart
