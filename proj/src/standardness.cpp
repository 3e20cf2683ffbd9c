#include "jpart/standardness.hpp"

#include <algorithm>

namespace jpart {

namespace {

bool prop1_rec(Int m, Int n, Int p) {
    if (m == 0) return true;  // empty partition, nothing to violate

    const RadixForm rf = radix_form(m, n, p);
    const Int pk = rf.pk;
    const Int pk1 = pk * p;
    const Int a = rf.a, b = rf.b, c = rf.c, d = rf.d;

    switch (dispatch_case(m, n, p, rf)) {
        case SpCase::c1:
            return m + n - pk1 == 1 && prop1_rec(pk1 - n, pk1 - m, p);
        case SpCase::c2: {
            const Int top = (a + b + 1) * pk;
            return c + d - pk == 1 && prop1_rec(top - n, top - m, p);
        }
        case SpCase::c3:
            // c = d = 0 lands in case 6 instead, so max(c, d) >= 1 here.
            JPART_CHECK(std::max(c, d) >= 1, "case 3 with c = d = 0");
            return std::abs(c - d) <= 1 &&
                   prop1_rec(std::min(c, d), std::max(c, d), p) &&
                   prop1_rec((a + b) * pk - n, (a + b) * pk - m, p);
        case SpCase::c4:
            return prop1_rec(m, b * pk - d, p);
        case SpCase::c5:
            return m == 1;
        case SpCase::c6:
            return rf.k == 0;
        case SpCase::base:
            break;
    }
    throw std::logic_error("standard_prop1: unreachable dispatch");
}

void check_predicate_args(Int m, Int n, Int p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    if (m < 1 || n < 1) throw std::invalid_argument("m and n must be >= 1");
}

void check_odd(Int p, const char* who) {
    if (p % 2 == 0)
        throw TheoremRangeError(std::string(who) + ": out of theorem range (p must be odd)");
}

Int power_floor(Int m, Int p, Int* t_out) {
    Int t = 0, pt = 1;
    while (pt * p <= m) {
        pt *= p;
        ++t;
    }
    *t_out = t;
    return pt;
}

}  // namespace

const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::direct: return "direct";
        case Criterion::proposition1: return "prop1";
        case Criterion::theorem1: return "theorem1";
        case Criterion::theorem2: return "theorem2";
    }
    return "?";
}

bool standard_direct(Int m, Int n, Int p) {
    check_predicate_args(m, n, p);
    return is_standard(jordan_partition(m, n, p));
}

bool standard_prop1(Int m, Int n, Int p) {
    check_predicate_args(m, n, p);
    return prop1_rec(std::min(m, n), std::max(m, n), p);
}

Verdict theorem1_member(Int m, Int n, Int p) {
    check_predicate_args(m, n, p);
    check_odd(p, "theorem1_member");
    if (m >= p)
        throw TheoremRangeError("theorem1_member: out of theorem range (need m < p)");
    if (n < m) throw std::invalid_argument("theorem1_member: need n >= m");

    Verdict v;
    v.criterion = Criterion::theorem1;

    if (n <= p + 1 - m) {
        v.standard = true;
        v.witness = "S1";
        return v;
    }
    if (n >= p) {
        // Canonical digit 0 <= d < p; for m >= 2 the S2 bound forces
        // d <= p - 1 anyway, and for m = 1 every n >= p belongs.
        const Int b = n / p;
        const Int d = n % p;
        if (m <= (p + 1) / 2 && d >= m - 1 && d <= p + 1 - m) {
            v.standard = true;
            v.witness = "S2 b=" + std::to_string(b) + " d=" + std::to_string(d);
            return v;
        }
    }
    return v;
}

Verdict theorem2_member(Int m, Int n, Int p) {
    check_predicate_args(m, n, p);
    check_odd(p, "theorem2_member");

    Int t = 0;
    const Int pt = power_floor(m, p, &t);
    if (t < 1)
        throw TheoremRangeError("theorem2_member: out of theorem range (need m >= p)");
    if (n < m) throw std::invalid_argument("theorem2_member: need n >= m");

    Verdict v;
    v.criterion = Criterion::theorem2;

    const Int halves[2] = {(pt - 1) / 2, (pt + 1) / 2};
    for (Int x : halves) {
        if ((m - x) % pt != 0) continue;
        const Int i = (m - x) / pt;
        if (i < 1 || i > (p - 1) / 2) continue;
        for (Int y : halves) {
            const Int r = n - y;
            if (r < 0 || r % pt != 0) continue;
            const Int q = r / pt;
            const Int j = q % p;
            const Int kshift = q / p;
            if (j < i || j > p - i - 1) continue;
            v.standard = true;
            v.form = Theorem2Form{t, i, x, j, y, kshift};
            v.witness = "t=" + std::to_string(t) + " i=" + std::to_string(i) +
                        " x=" + std::to_string(x) + " j=" + std::to_string(j) +
                        " y=" + std::to_string(y) + " k=" + std::to_string(kshift);
            return v;
        }
    }
    return v;
}

Verdict classify(Int m, Int n, Int p) {
    check_predicate_args(m, n, p);
    if (p == 2)
        throw TheoremRangeError("classify: classification open for p = 2");
    const Int mm = std::min(m, n);
    const Int nn = std::max(m, n);
    return mm < p ? theorem1_member(mm, nn, p) : theorem2_member(mm, nn, p);
}

}  // namespace jpart
