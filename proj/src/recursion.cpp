#include "jpart/recursion.hpp"

#include <algorithm>
#include <string>

namespace jpart {

namespace {

constexpr Int kSizeLimit = Int{1} << 31;

void check_args(Int m, Int n, Int p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (m > n) throw std::invalid_argument("require m <= n");
    if (m + n >= kSizeLimit) throw std::invalid_argument("m + n must be < 2^31");
}

SignedSequence sp_rec(Int m, Int n, Int p, CaseTrace* trace, int depth);

SignedSequence assemble(const SignedSequence& s1, const SignedSequence& s2) {
    return concat(s1, concat(s2, negative_reverse(s1)));
}

SignedSequence sp_rec(Int m, Int n, Int p, CaseTrace* trace, int depth) {
    if (m == 0) {
        if (trace) trace->push_back({m, n, SpCase::base, RadixForm{}, depth});
        return constant_run(0, n);
    }

    const RadixForm rf = radix_form(m, n, p);
    const SpCase which = dispatch_case(m, n, p, rf);
    if (trace) trace->push_back({m, n, which, rf, depth});

    const Int pk = rf.pk;
    const Int pk1 = pk * p;
    const Int a = rf.a, b = rf.b, c = rf.c, d = rf.d;

    switch (which) {
        case SpCase::c1: {
            SignedSequence s1 = constant_run(pk1, m + n - pk1);
            SignedSequence s2 = sp_rec(pk1 - n, pk1 - m, p, trace, depth + 1);
            return assemble(s1, s2);
        }
        case SpCase::c2: {
            const Int top = (a + b + 1) * pk;
            SignedSequence s1 = constant_run(top, c + d - pk);
            SignedSequence s2 = sp_rec(top - n, top - m, p, trace, depth + 1);
            return assemble(s1, s2);
        }
        case SpCase::c3: {
            // The inner sequence is shifted wholesale by (a + b)p^k; the
            // shift applies to s_p(min(c,d), max(c,d)) itself, keeping s1
            // at c + d terms. c = d = 0 dispatches to case 6 instead.
            JPART_CHECK(std::max(c, d) >= 1, "case 3 with c = d = 0");
            SignedSequence inner =
                sp_rec(std::min(c, d), std::max(c, d), p, trace, depth + 1);
            SignedSequence s1 = shift(inner, (a + b) * pk);
            SignedSequence s2 =
                sp_rec((a + b) * pk - n, (a + b) * pk - m, p, trace, depth + 1);
            return assemble(s1, s2);
        }
        case SpCase::c4: {
            // s1 is the negative part of s_p(m, bp^k - d) lifted by 2bp^k,
            // which has exactly m terms.
            SignedSequence inner = sp_rec(m, b * pk - d, p, trace, depth + 1);
            SignedSequence s1 = shift(negative_part(inner), 2 * b * pk);
            SignedSequence s2 = constant_run(0, n - m);
            return assemble(s1, s2);
        }
        case SpCase::c5: {
            SignedSequence s1 = constant_run(b * pk, m);
            SignedSequence s2 = constant_run(0, b * pk - m);
            return assemble(s1, s2);
        }
        case SpCase::c6: {
            SignedSequence s1 = constant_run((a + b - 1) * pk, pk);
            SignedSequence s2 = sp_rec((a - 1) * pk, (b - 1) * pk, p, trace, depth + 1);
            return assemble(s1, s2);
        }
        case SpCase::base:
            break;
    }
    throw std::logic_error("sp: unreachable dispatch");
}

}  // namespace

RadixForm radix_form(Int m, Int n, Int p) {
    check_args(m, n, p);
    if (n < 1) throw std::invalid_argument("n must be >= 1");

    RadixForm rf;
    rf.k = 0;
    rf.pk = 1;
    while (rf.pk * p <= n) {
        rf.pk *= p;
        ++rf.k;
    }
    rf.b = n / rf.pk;
    rf.d = n % rf.pk;
    rf.a = m / rf.pk;
    rf.c = m % rf.pk;

    JPART_CHECK(rf.b >= 1 && rf.b < p, "radix_form: leading digit of n out of range");
    JPART_CHECK(rf.a >= 0 && rf.a < p, "radix_form: leading digit of m out of range");
    JPART_CHECK(m == 0 || rf.a + rf.c > 0, "radix_form: a + c must be positive");
    return rf;
}

std::array<bool, 6> case_conditions(Int m, Int n, Int p, const RadixForm& rf) {
    const Int pk = rf.pk;
    const Int pk1 = pk * p;
    const Int cd = rf.c + rf.d;
    const bool small = m + n <= pk1;
    return {
        m + n > pk1,
        small && cd > pk,
        small && cd >= 1 && cd <= pk && rf.a > 0,
        small && cd >= 1 && cd <= pk && rf.a == 0 && rf.d > 0,
        small && cd >= 1 && cd <= pk && rf.a == 0 && rf.d == 0,
        small && rf.c == 0 && rf.d == 0 && rf.a > 0,
    };
}

SpCase dispatch_case(Int m, Int n, Int p, const RadixForm& rf) {
    const auto cond = case_conditions(m, n, p, rf);
    int hit = -1;
    for (int i = 0; i < 6; ++i) {
        if (cond[static_cast<std::size_t>(i)]) {
            JPART_CHECK(hit < 0, "dispatch_case: overlapping cases");
            hit = i;
        }
    }
    JPART_CHECK(hit >= 0, "dispatch_case: no case applies");
    return static_cast<SpCase>(hit + 1);
}

SignedSequence sp(Int m, Int n, Int p, CaseTrace* trace) {
    check_args(m, n, p);
    SignedSequence out = sp_rec(m, n, p, trace, 0);
    JPART_CHECK(out.size() == m + n, "sp: result length must be m + n");
    return out;
}

JordanPartition jordan_partition(Int m, Int n, Int p) {
    if (m < 1 || n < 1) throw std::invalid_argument("m and n must be >= 1");
    const Int mm = std::min(m, n);
    const Int nn = std::max(m, n);
    SignedSequence s = sp(mm, nn, p);

    JordanPartition lp;
    lp.parts.assign(s.terms().begin(), s.terms().begin() + mm);
    lp.m = m;
    lp.n = n;
    lp.p = p;
    return lp;
}

SignedSequence case6_closed_form(Int a, Int b, Int k, Int p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (!(0 < a && a <= b && a + b <= p))
        throw std::invalid_argument("require 0 < a <= b and a + b <= p");

    Int pk = 1;
    for (Int i = 0; i < k; ++i) pk *= p;

    SignedSequence pos;
    for (Int r = 0; r < a; ++r)
        pos = concat(pos, constant_run((a + b - 1 - 2 * r) * pk, pk));
    return concat(pos, concat(constant_run(0, (b - a) * pk), negative_reverse(pos)));
}

}  // namespace jpart
