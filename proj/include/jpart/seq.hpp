#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Nonincreasing integer sequences and the partitions extracted from them.
// All values are immutable after construction; every operation returns a
// fresh sequence, so results can be shared freely between threads.

namespace jpart {

using Int = std::int64_t;

// Internal-invariant check. These guard recursion invariants that are not
// user errors; they stay on in every build unless JPART_NO_CHECKS is set.
#ifndef JPART_NO_CHECKS
#define JPART_CHECK(cond, msg)                                   \
    do {                                                         \
        if (!(cond)) throw std::logic_error(std::string(msg));   \
    } while (0)
#else
#define JPART_CHECK(cond, msg) ((void)0)
#endif

/// A finite nonincreasing sequence of integers (entries may be negative).
class SignedSequence {
public:
    SignedSequence() = default;
    explicit SignedSequence(std::vector<Int> terms);

    const std::vector<Int>& terms() const { return terms_; }
    Int size() const { return static_cast<Int>(terms_.size()); }
    bool empty() const { return terms_.empty(); }
    /// 1-based access, matching the usual s(k) indexing.
    Int term(Int k) const { return terms_.at(static_cast<std::size_t>(k - 1)); }

    friend bool operator==(const SignedSequence&, const SignedSequence&) = default;

private:
    std::vector<Int> terms_;
};

/// Concatenation s ⊕ t. Defined when last(s) >= first(t); the recursion
/// guarantees this, so a violation signals an internal bug.
SignedSequence concat(const SignedSequence& s, const SignedSequence& t);

/// Negative reverse: (a_1,...,a_u) -> (-a_u,...,-a_1). An involution.
SignedSequence negative_reverse(const SignedSequence& s);

/// The constant run (value : count); count = 0 gives the empty sequence.
SignedSequence constant_run(Int value, Int count);

/// Subsequence of strictly positive terms, order preserved.
SignedSequence positive_part(const SignedSequence& s);

/// Subsequence of strictly negative terms, order preserved.
SignedSequence negative_part(const SignedSequence& s);

/// Adds k to every term.
SignedSequence shift(const SignedSequence& s, Int k);

/// The decomposition of a tensor product of two unipotent Jordan blocks:
/// min(m,n) positive parts, nonincreasing, summing to m*n.
struct JordanPartition {
    std::vector<Int> parts;
    Int m = 0;
    Int n = 0;
    Int p = 0;

    friend bool operator==(const JordanPartition&, const JordanPartition&) = default;
};

/// Throws std::logic_error if the structural invariants fail.
void validate(const JordanPartition& lp);

/// True iff part i equals m + n - 2i + 1 for every i (the generic pattern).
bool is_standard(const JordanPartition& lp);

}  // namespace jpart
