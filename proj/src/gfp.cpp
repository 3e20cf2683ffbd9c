#include "jpart/gfp.hpp"

#include <algorithm>
#include <string>

namespace jpart {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr Int kMaxModulus = Int{1} << 15;  // keeps products inside u32 range

void check_modulus(Int p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    if (p >= kMaxModulus) throw std::invalid_argument("p must be < 2^15");
}

u32 modinv(u32 a, Int p) {
    Int t = 0, newt = 1, r = p, newr = static_cast<Int>(a);
    while (newr != 0) {
        const Int q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    JPART_CHECK(r == 1, "modinv: argument not invertible");
    t %= p;
    if (t < 0) t += p;
    return static_cast<u32>(t);
}

// Reduced column-echelon collection of vectors: pivot slot i holds a vector
// whose first nonzero entry (scaled to 1) sits at index i.
class EchelonBasis {
public:
    explicit EchelonBasis(Int dim, Int p) : dim_(dim), p_(p), slot_(dim) {}

    Int size() const { return count_; }

    // Reduces v against the basis and inserts what remains (if nonzero).
    void insert(std::vector<u32> v) {
        for (Int i = 0; i < dim_; ++i) {
            if (v[static_cast<std::size_t>(i)] == 0) continue;
            auto& pv = slot_[static_cast<std::size_t>(i)];
            if (pv.empty()) {
                const u64 inv = modinv(v[static_cast<std::size_t>(i)], p_);
                for (auto& x : v) x = static_cast<u32>(x * inv % p_);
                pv = std::move(v);
                ++count_;
                return;
            }
            const u64 f = p_ - v[static_cast<std::size_t>(i)];
            for (Int k = i; k < dim_; ++k)
                v[static_cast<std::size_t>(k)] = static_cast<u32>(
                    (v[static_cast<std::size_t>(k)] + f * pv[static_cast<std::size_t>(k)]) % p_);
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const auto& v : slot_)
            if (!v.empty()) fn(v);
    }

private:
    Int dim_, p_;
    Int count_ = 0;
    std::vector<std::vector<u32>> slot_;
};

}  // namespace

GFpMatrix::GFpMatrix(Int rows, Int cols, Int p) : rows_(rows), cols_(cols), p_(p) {
    check_modulus(p);
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

std::size_t GFpMatrix::idx(Int r, Int c) const {
    JPART_CHECK(r >= 0 && r < rows_ && c >= 0 && c < cols_, "GFpMatrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
}

void GFpMatrix::set(Int r, Int c, Int v) {
    v %= p_;
    if (v < 0) v += p_;
    e_[idx(r, c)] = static_cast<u32>(v);
}

GFpMatrix unipotent_jordan_block(Int size, Int p) {
    if (size < 1) throw std::invalid_argument("block size must be >= 1");
    GFpMatrix J(size, size, p);
    for (Int i = 0; i < size; ++i) {
        J.set(i, i, 1);
        if (i + 1 < size) J.set(i, i + 1, 1);
    }
    return J;
}

GFpMatrix kronecker(const GFpMatrix& A, const GFpMatrix& B) {
    if (A.modulus() != B.modulus())
        throw std::invalid_argument("kronecker: modulus mismatch");
    const Int p = A.modulus();
    GFpMatrix out(A.rows() * B.rows(), A.cols() * B.cols(), p);
    for (Int ia = 0; ia < A.rows(); ++ia)
        for (Int ja = 0; ja < A.cols(); ++ja) {
            const u64 s = A.at(ia, ja);
            if (!s) continue;
            for (Int ib = 0; ib < B.rows(); ++ib)
                for (Int jb = 0; jb < B.cols(); ++jb)
                    out.set(ia * B.rows() + ib, ja * B.cols() + jb,
                            static_cast<Int>(s * B.at(ib, jb) % p));
        }
    return out;
}

Int rank(const GFpMatrix& M) {
    const Int rows = M.rows(), cols = M.cols(), p = M.modulus();
    std::vector<u32> w(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (Int i = 0; i < rows; ++i)
        for (Int j = 0; j < cols; ++j)
            w[static_cast<std::size_t>(i * cols + j)] = M.at(i, j);

    Int rk = 0;
    for (Int col = 0; col < cols && rk < rows; ++col) {
        Int piv = -1;
        for (Int i = rk; i < rows; ++i)
            if (w[static_cast<std::size_t>(i * cols + col)]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (Int j = 0; j < cols; ++j)
            std::swap(w[static_cast<std::size_t>(rk * cols + j)],
                      w[static_cast<std::size_t>(piv * cols + j)]);
        const u64 inv = modinv(w[static_cast<std::size_t>(rk * cols + col)], p);
        for (Int j = col; j < cols; ++j) {
            auto& x = w[static_cast<std::size_t>(rk * cols + j)];
            x = static_cast<u32>(x * inv % p);
        }
        for (Int i = rk + 1; i < rows; ++i) {
            const u64 f = w[static_cast<std::size_t>(i * cols + col)];
            if (!f) continue;
            const u64 g = p - f;
            for (Int j = col; j < cols; ++j) {
                auto& x = w[static_cast<std::size_t>(i * cols + j)];
                x = static_cast<u32>(
                    (x + g * w[static_cast<std::size_t>(rk * cols + j)]) % p);
            }
        }
        ++rk;
    }
    return rk;
}

std::vector<Int> jordan_type_unipotent(const GFpMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("matrix must be square");
    const Int s = M.rows(), p = M.modulus();

    // N = M - I, kept dense; the chain below only ever multiplies by N.
    std::vector<u32> N(static_cast<std::size_t>(s) * static_cast<std::size_t>(s));
    for (Int i = 0; i < s; ++i)
        for (Int j = 0; j < s; ++j) {
            Int v = static_cast<Int>(M.at(i, j)) - (i == j ? 1 : 0);
            if (v < 0) v += p;
            N[static_cast<std::size_t>(i * s + j)] = static_cast<u32>(v);
        }

    auto apply = [&](const std::vector<u32>& v) {
        std::vector<u32> out(static_cast<std::size_t>(s), 0);
        for (Int j = 0; j < s; ++j) {
            const u64 x = v[static_cast<std::size_t>(j)];
            if (!x) continue;
            for (Int i = 0; i < s; ++i) {
                auto& o = out[static_cast<std::size_t>(i)];
                o = static_cast<u32>((o + x * N[static_cast<std::size_t>(i * s + j)]) % p);
            }
        }
        return out;
    };

    // Column-space basis chain: B_1 spans col(N), B_{j+1} = reduce(N * B_j),
    // so |B_j| = rank(N^j) without ever forming a power of N.
    std::vector<Int> r{s};
    EchelonBasis basis(s, p);
    for (Int j = 0; j < s; ++j) {
        std::vector<u32> col(static_cast<std::size_t>(s));
        for (Int i = 0; i < s; ++i) col[static_cast<std::size_t>(i)] = N[static_cast<std::size_t>(i * s + j)];
        basis.insert(std::move(col));
    }
    r.push_back(basis.size());

    while (r.back() > 0) {
        if (static_cast<Int>(r.size()) > s + 1)
            throw std::invalid_argument("jordan_type_unipotent: matrix is not unipotent");
        EchelonBasis next(s, p);
        basis.for_each([&](const std::vector<u32>& b) { next.insert(apply(b)); });
        basis = std::move(next);
        r.push_back(basis.size());
    }

    auto rk = [&](std::size_t j) { return j < r.size() ? r[j] : 0; };
    std::vector<Int> parts;
    Int total = 0;
    for (std::size_t j = r.size(); j-- > 1;) {
        const Int mult = rk(j - 1) - 2 * rk(j) + rk(j + 1);
        JPART_CHECK(mult >= 0, "jordan_type_unipotent: rank sequence not convex");
        for (Int t = 0; t < mult; ++t) parts.push_back(static_cast<Int>(j));
        total += mult * static_cast<Int>(j);
    }
    std::sort(parts.rbegin(), parts.rend());
    JPART_CHECK(total == s, "jordan_type_unipotent: block sizes must sum to the dimension");
    return parts;
}

namespace gfp_detail {

Int series_val(const Series& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) return static_cast<Int>(i);
    return static_cast<Int>(s.size());
}

namespace {

Int series_val_from(const Series& s, Int from) {
    for (std::size_t i = static_cast<std::size_t>(std::max<Int>(from, 0)); i < s.size(); ++i)
        if (s[i]) return static_cast<Int>(i);
    return static_cast<Int>(s.size());
}

// Inverse of the unit series starting at u[from] (u[from] != 0), to `len`
// coefficients, written into out.
void series_inverse(const Series& u, Int from, Int len, Int p, Series& out) {
    out.assign(static_cast<std::size_t>(len), 0);
    const u64 i0 = modinv(u[static_cast<std::size_t>(from)], p);
    out[0] = static_cast<u32>(i0);
    for (Int t = 1; t < len; ++t) {
        u64 acc = 0;
        const Int top = std::min<Int>(t, static_cast<Int>(u.size()) - 1 - from);
        for (Int s = 1; s <= top; ++s)
            acc += static_cast<u64>(u[static_cast<std::size_t>(from + s)]) *
                   out[static_cast<std::size_t>(t - s)];
        acc %= p;
        out[static_cast<std::size_t>(t)] =
            static_cast<u32>(acc ? (p - acc) * i0 % p : 0);
    }
}

// dst -= q * src (mod y^prec), entries mod p. src is known to vanish below
// src_from, q below q_from; the loops skip those ranges. Each output
// coefficient accumulates in 64 bits and reduces once (term count stays
// below 2^12 and p below 2^15, so the sum cannot overflow).
void sub_mul(Series& dst, const Series& q, Int q_from, const Series& src, Int src_from,
             Int p) {
    const Int prec = static_cast<Int>(dst.size());
    const Int qlen = static_cast<Int>(q.size());
    const Int slen = static_cast<Int>(src.size());
    for (Int t = q_from + src_from; t < prec; ++t) {
        const Int ilo = std::max<Int>(q_from, t - slen + 1);
        const Int ihi = std::min<Int>(qlen - 1, t - src_from);
        u64 acc = 0;
        for (Int i = ilo; i <= ihi; ++i)
            acc += static_cast<u64>(q[static_cast<std::size_t>(i)]) *
                   src[static_cast<std::size_t>(t - i)];
        if (!acc) continue;
        acc %= p;
        auto& x = dst[static_cast<std::size_t>(t)];
        x = static_cast<u32>((x + p - acc) % p);
    }
}

}  // namespace

Int smith_kernel_dim(std::vector<Series>& E, Int mm, Int prec, Int p, Int val_floor) {
    auto at = [&](Int r, Int c) -> Series& {
        return E[static_cast<std::size_t>(r * mm + c)];
    };

    Series inv, q;
    Int delta = 0;
    Int floor_v = std::max<Int>(val_floor, 0);  // pivot valuations never decrease
    for (Int r = 0; r < mm; ++r) {
        Int best_v = prec, bi = -1, bj = -1;
        for (Int i = r; i < mm && best_v > floor_v; ++i)
            for (Int j = r; j < mm; ++j) {
                const Int v = series_val_from(at(i, j), floor_v);
                if (v < best_v) {
                    best_v = v;
                    bi = i;
                    bj = j;
                    if (best_v == floor_v) break;
                }
            }
        if (bi < 0) {
            // active submatrix is zero mod y^prec; remaining factors cap at prec
            delta += (mm - r) * prec;
            return delta;
        }
        for (Int j = r; j < mm; ++j) std::swap(at(r, j), at(bi, j));
        for (Int i = r; i < mm; ++i) std::swap(at(i, r), at(i, bj));

        const Int v = best_v;
        delta += v;
        floor_v = v;

        // pivot = y^v * U with U a unit; dividing by it is exact to y^{prec-v},
        // and every active entry has valuation >= v, so the row updates below
        // are exact mod y^prec. The inverse is only needed once a row below
        // actually carries something.
        bool have_inv = false;
        for (Int i = r + 1; i < mm; ++i) {
            Series& e = at(i, r);
            const Int ve = series_val_from(e, v);
            if (ve >= prec) continue;
            if (!have_inv) {
                series_inverse(at(r, r), v, prec - v, p, inv);
                have_inv = true;
            }
            // q = (e >> v) * inv, i.e. e / pivot, correct mod y^{prec-v}
            q.assign(static_cast<std::size_t>(prec - v), 0);
            for (Int t = ve - v; t < prec - v; ++t) {
                u64 acc = 0;
                for (Int s = ve - v; s <= t; ++s) {
                    const Int ei = s + v;
                    if (ei >= prec) break;
                    acc += static_cast<u64>(e[static_cast<std::size_t>(ei)]) *
                           inv[static_cast<std::size_t>(t - s)];
                }
                q[static_cast<std::size_t>(t)] = static_cast<u32>(acc % p);
            }
            const Int qv = series_val(q);
            for (Int j = r; j < mm; ++j) sub_mul(at(i, j), q, qv, at(r, j), v, p);
            JPART_CHECK(series_val(at(i, r)) >= prec, "smith: column clear failed");
        }
        // The implied column operations touch row r only (the column below
        // the pivot is already zero), so the row is cleared outright.
        for (Int j = r + 1; j < mm; ++j)
            std::fill(at(r, j).begin(), at(r, j).end(), 0);
    }
    return delta;
}

}  // namespace gfp_detail

JordanPartition tensor_jordan_type(Int m, Int n, Int p, Int budget) {
    check_modulus(p);
    if (m < 1 || n < 1) throw std::invalid_argument("m and n must be >= 1");
    if (m * n > budget)
        throw std::invalid_argument("m*n = " + std::to_string(m * n) +
                                    " exceeds the size budget " + std::to_string(budget));

    const Int mm = std::min(m, n);
    const Int nn = std::max(m, n);

    // The two blocks act on K[x]/(x^mm) and K[y]/(y^nn) as multiplication by
    // 1 + x and 1 + y, so their tensor acts on K[x, y]/(x^mm, y^nn) as
    // multiplication by (1 + x)(1 + y). Its nilpotent part u = x + y + xy
    // commutes with y, which makes im(N^j) the span over K[y]/(y^nn) of the
    // mm columns u^j * x^c. rank(N^j) then drops out of the invariant-factor
    // valuations of that mm x mm matrix: dim ker = sum_i min(nn, v_i).
    using gfp_detail::Series;
    std::vector<std::vector<Series>> col(
        static_cast<std::size_t>(mm),
        std::vector<Series>(static_cast<std::size_t>(mm),
                            Series(static_cast<std::size_t>(nn), 0)));
    for (Int c = 0; c < mm; ++c)
        col[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)][0] = 1;

    // u * (sum_c f_c x^c): coordinate c picks up y*f_c + (1+y)*f_{c-1}.
    const u32 p2 = static_cast<u32>(2 * p);
    auto umul = [&](std::vector<Series>& v) {
        for (Int c = mm - 1; c >= 0; --c) {
            Series& cur = v[static_cast<std::size_t>(c)];
            const Series* below = c > 0 ? &v[static_cast<std::size_t>(c - 1)] : nullptr;
            for (Int t = nn - 1; t >= 0; --t) {
                u32 acc = t > 0 ? cur[static_cast<std::size_t>(t - 1)] : 0;
                if (below) {
                    acc += (*below)[static_cast<std::size_t>(t)];
                    if (t > 0) acc += (*below)[static_cast<std::size_t>(t - 1)];
                }
                if (acc >= p2) acc -= p2;
                if (acc >= static_cast<u32>(p)) acc -= static_cast<u32>(p);
                cur[static_cast<std::size_t>(t)] = acc;
            }
        }
    };

    const Int total = mm * nn;
    std::vector<Int> kdims{0};
    std::vector<Series> scratch(static_cast<std::size_t>(mm) * static_cast<std::size_t>(mm));
    for (Int j = 1; j <= mm + nn && kdims.back() < total; ++j) {
        for (auto& v : col) umul(v);
        for (Int r = 0; r < mm; ++r)
            for (Int c = 0; c < mm; ++c) {
                const auto& src =
                    col[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
                scratch[static_cast<std::size_t>(r * mm + c)].assign(src.begin(),
                                                                     src.end());
            }
        // every u-multiplication raises the y-valuation except along the
        // x-steps, of which there are at most mm - 1
        kdims.push_back(gfp_detail::smith_kernel_dim(scratch, mm, nn, p,
                                                     std::max<Int>(0, j - mm + 1)));
    }
    JPART_CHECK(kdims.back() == total, "tensor_jordan_type: rank chain did not terminate");

    // kdims[j] - kdims[j-1] counts blocks of size >= j; the parts are the
    // conjugate of that sequence.
    std::vector<Int> blocks_ge;
    for (std::size_t j = 1; j < kdims.size(); ++j) {
        const Int k = kdims[j] - kdims[j - 1];
        if (!blocks_ge.empty())
            JPART_CHECK(k <= blocks_ge.back(),
                        "tensor_jordan_type: kernel growth must be nonincreasing");
        blocks_ge.push_back(k);
    }
    JordanPartition lp;
    lp.m = m;
    lp.n = n;
    lp.p = p;
    for (Int i = 1; i <= (blocks_ge.empty() ? 0 : blocks_ge.front()); ++i) {
        Int len = 0;
        while (len < static_cast<Int>(blocks_ge.size()) &&
               blocks_ge[static_cast<std::size_t>(len)] >= i)
            ++len;
        lp.parts.push_back(len);
    }
    validate(lp);
    return lp;
}

}  // namespace jpart
