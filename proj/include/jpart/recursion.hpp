#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "jpart/seq.hpp"

// The six-case recursion s_p(m, n) producing the signed balanced sequence
// whose positive part is the Jordan partition of V_m (x) V_n in
// characteristic p.

namespace jpart {

/// Base-p scaffolding of a pair (m, n): the unique k with p^k <= n < p^{k+1}
/// and the leading digits and remainders of n and m at that scale.
struct RadixForm {
    Int k = 0;   // exponent
    Int pk = 1;  // p^k
    Int a = 0;   // leading digit of m, 0 <= a < p
    Int b = 0;   // leading digit of n, 0 < b < p
    Int c = 0;   // remainder of m, 0 <= c < p^k
    Int d = 0;   // remainder of n, 0 <= d < p^k

    friend bool operator==(const RadixForm&, const RadixForm&) = default;
};

enum class SpCase : int {
    base = 0,
    c1 = 1,
    c2 = 2,
    c3 = 3,
    c4 = 4,
    c5 = 5,
    c6 = 6,
};

/// One recursive call: arguments, the case taken and its radix digits.
struct TraceEntry {
    Int m = 0;
    Int n = 0;
    SpCase which = SpCase::base;
    RadixForm rf;  // zeroed for the base case
    int depth = 0;
};

using CaseTrace = std::vector<TraceEntry>;

/// Decomposes (m, n) at the scale of n. Requires 0 <= m <= n, n >= 1,
/// p >= 2 and m + n < 2^31; violations throw std::invalid_argument.
RadixForm radix_form(Int m, Int n, Int p);

/// The six dispatch conditions evaluated independently (for the
/// exclusivity invariant: exactly one must hold whenever m >= 1).
std::array<bool, 6> case_conditions(Int m, Int n, Int p, const RadixForm& rf);

/// The unique case that applies to (m, n) with m >= 1.
SpCase dispatch_case(Int m, Int n, Int p, const RadixForm& rf);

/// The full signed sequence s_p(m, n), length m + n. Requires
/// 0 <= m <= n and p >= 2 (p = 2 is fine; the recursion never assumes
/// oddness). Appends one entry per recursive call to *trace when given.
SignedSequence sp(Int m, Int n, Int p, CaseTrace* trace = nullptr);

/// The positive part of s_p: the decomposition of V_m (x) V_n. Arguments
/// may be given in either order; both must be >= 1.
JordanPartition jordan_partition(Int m, Int n, Int p);

/// Closed form of the full sequence for (m, n) = (a*p^k, b*p^k) with
/// 0 < a <= b and a + b <= p: the runs ((a+b-1)p^k : p^k), ((a+b-3)p^k : p^k),
/// ..., ((b-a+1)p^k : p^k), then zeros, then the negative reverse.
/// Used as a test oracle for the c = d = 0 case.
SignedSequence case6_closed_form(Int a, Int b, Int k, Int p);

}  // namespace jpart
