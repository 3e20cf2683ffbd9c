#include "jpart/seq.hpp"

#include <algorithm>
#include <numeric>

namespace jpart {

namespace {

bool nonincreasing(const std::vector<Int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

}  // namespace

SignedSequence::SignedSequence(std::vector<Int> terms) : terms_(std::move(terms)) {
    JPART_CHECK(nonincreasing(terms_), "SignedSequence: terms must be nonincreasing");
}

SignedSequence concat(const SignedSequence& s, const SignedSequence& t) {
    if (!s.empty() && !t.empty())
        JPART_CHECK(s.terms().back() >= t.terms().front(),
                    "concat: ordering violated (recursion bug)");
    std::vector<Int> out;
    out.reserve(s.terms().size() + t.terms().size());
    out.insert(out.end(), s.terms().begin(), s.terms().end());
    out.insert(out.end(), t.terms().begin(), t.terms().end());
    return SignedSequence(std::move(out));
}

SignedSequence negative_reverse(const SignedSequence& s) {
    std::vector<Int> out(s.terms().rbegin(), s.terms().rend());
    for (Int& x : out) x = -x;
    return SignedSequence(std::move(out));
}

SignedSequence constant_run(Int value, Int count) {
    if (count < 0) throw std::invalid_argument("constant_run: count must be >= 0");
    return SignedSequence(std::vector<Int>(static_cast<std::size_t>(count), value));
}

SignedSequence positive_part(const SignedSequence& s) {
    std::vector<Int> out;
    for (Int x : s.terms())
        if (x > 0) out.push_back(x);
    return SignedSequence(std::move(out));
}

SignedSequence negative_part(const SignedSequence& s) {
    std::vector<Int> out;
    for (Int x : s.terms())
        if (x < 0) out.push_back(x);
    return SignedSequence(std::move(out));
}

SignedSequence shift(const SignedSequence& s, Int k) {
    std::vector<Int> out = s.terms();
    for (Int& x : out) x += k;
    return SignedSequence(std::move(out));
}

void validate(const JordanPartition& lp) {
    const Int mm = std::min(lp.m, lp.n);
    const Int nn = std::max(lp.m, lp.n);
    JPART_CHECK(lp.m >= 1 && lp.n >= 1, "JordanPartition: m, n must be >= 1");
    JPART_CHECK(static_cast<Int>(lp.parts.size()) == mm,
                "JordanPartition: expected min(m, n) parts");
    for (std::size_t i = 0; i < lp.parts.size(); ++i) {
        JPART_CHECK(lp.parts[i] > 0, "JordanPartition: parts must be positive");
        if (i > 0)
            JPART_CHECK(lp.parts[i - 1] >= lp.parts[i],
                        "JordanPartition: parts must be nonincreasing");
    }
    const Int sum = std::accumulate(lp.parts.begin(), lp.parts.end(), Int{0});
    JPART_CHECK(sum == lp.m * lp.n, "JordanPartition: parts must sum to m*n");
    if (!lp.parts.empty()) {
        JPART_CHECK(lp.parts.front() <= lp.m + lp.n - 1,
                    "JordanPartition: largest part exceeds m + n - 1");
        JPART_CHECK(lp.parts.front() >= nn,
                    "JordanPartition: largest part below max(m, n)");
    }
}

bool is_standard(const JordanPartition& lp) {
    const Int mm = std::min(lp.m, lp.n);
    const Int sum = lp.m + lp.n;
    for (Int i = 1; i <= mm; ++i)
        if (lp.parts[static_cast<std::size_t>(i - 1)] != sum - 2 * i + 1) return false;
    return true;
}

}  // namespace jpart
