#pragma once

#include <optional>
#include <string>

#include "jpart/recursion.hpp"

// Three independent deciders for standardness of the Jordan partition:
// the direct definition, a recursive criterion that never materialises
// sequences, and closed-form membership tests (for odd p only). Output
// criterion labels: "direct", "prop1", "theorem1", "theorem2".

namespace jpart {

enum class Criterion {
    direct,
    proposition1,
    theorem1,
    theorem2,
};

const char* criterion_name(Criterion c);

/// Witness for a positive theorem2 verdict:
/// m = i*p^t + x, n = j*p^t + y + kshift*p^{t+1},
/// x, y in {(p^t-1)/2, (p^t+1)/2}, 1 <= i <= (p-1)/2, i <= j <= p-i-1.
struct Theorem2Form {
    Int t = 0;
    Int i = 0;
    Int x = 0;
    Int j = 0;
    Int y = 0;
    Int kshift = 0;

    friend bool operator==(const Theorem2Form&, const Theorem2Form&) = default;
};

struct Verdict {
    bool standard = false;
    Criterion criterion = Criterion::direct;
    std::string witness;                  // matched component, empty if none
    std::optional<Theorem2Form> form;     // present for positive theorem2
    std::optional<CaseTrace> trace;       // populated on request only
};

/// Thrown when a membership test is asked outside its range
/// (even p, or m outside the m < p / m >= p split).
struct TheoremRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Computes the partition and applies the definition. Any prime-like
/// p >= 2 accepted; arguments in either order.
bool standard_direct(Int m, Int n, Int p);

/// Recursive decision without building sequences, case by case.
bool standard_prop1(Int m, Int n, Int p);

/// Closed-form membership for 1 <= m < p, n >= m, odd p:
/// standard iff (m, n) lies in S1 = {(k, d) : 1 <= k <= d <= p+1-k} or
/// S2 = {(k, bp + d) : b >= 1, 1 <= k <= (p+1)/2, k-1 <= d <= p+1-k},
/// testing with the canonical digit 0 <= d < p.
Verdict theorem1_member(Int m, Int n, Int p);

/// Closed-form membership for p^t <= m < p^{t+1}, t >= 1, n >= m, odd p.
/// Returns the witness tuple when standard.
Verdict theorem2_member(Int m, Int n, Int p);

/// Routes m < p to theorem1_member and m >= p to theorem2_member.
/// Rejects p = 2 (no closed-form classification).
Verdict classify(Int m, Int n, Int p);

}  // namespace jpart
