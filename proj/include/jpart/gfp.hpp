#pragma once

#include <cstdint>
#include <vector>

#include "jpart/seq.hpp"

// Ground truth for the recursion: build the acting matrix of a tensor
// product of unipotent Jordan blocks over GF(p) and read the block sizes
// off the ranks of powers of its nilpotent part. Nothing here touches the
// radix recursion.

namespace jpart {

/// Dense matrix with entries reduced mod p. Row-major.
class GFpMatrix {
public:
    GFpMatrix(Int rows, Int cols, Int p);

    Int rows() const { return rows_; }
    Int cols() const { return cols_; }
    Int modulus() const { return p_; }

    std::uint32_t at(Int r, Int c) const { return e_[idx(r, c)]; }
    void set(Int r, Int c, Int v);

    friend bool operator==(const GFpMatrix&, const GFpMatrix&) = default;

private:
    std::size_t idx(Int r, Int c) const;

    Int rows_, cols_, p_;
    std::vector<std::uint32_t> e_;
};

/// size x size matrix with 1 on the diagonal and the superdiagonal.
GFpMatrix unipotent_jordan_block(Int size, Int p);

/// Kronecker product; block (i, j) is A[i][j] * B. Moduli must match.
GFpMatrix kronecker(const GFpMatrix& A, const GFpMatrix& B);

/// Rank over GF(p) by Gaussian elimination.
Int rank(const GFpMatrix& M);

/// Block sizes of a unipotent matrix, nonincreasing. With N = M - I and
/// r_j = rank(N^j), the multiplicity of size j is r_{j-1} - 2 r_j + r_{j+1}.
/// Ranks are taken along a shrinking column-space basis chain rather than
/// by powering N. Throws std::invalid_argument if M is not unipotent.
std::vector<Int> jordan_type_unipotent(const GFpMatrix& M);

/// The Jordan type of J_m (x) J_n over GF(p), computed as the type of the
/// multiplication operator the tensor factors induce on
/// K[x, y] / (x^m, y^n); see gfp.cpp for the rank chain used. Requires
/// m, n >= 1 and m*n <= budget.
JordanPartition tensor_jordan_type(Int m, Int n, Int p, Int budget = 4096);

namespace gfp_detail {

/// Truncated power series over GF(p): coefficient i is the y^i term.
using Series = std::vector<std::uint32_t>;

/// Index of the first nonzero coefficient, or len when all zero.
Int series_val(const Series& s);

/// Sum over i of min(prec, v_i), where v_i are the invariant-factor
/// valuations of the mm x mm matrix E over K[y]/(y^prec). E is consumed.
/// This equals the K-dimension of the kernel of E acting on
/// (K[y]/(y^prec))^mm. val_floor may pass a known lower bound on entry
/// valuations to shorten the pivot scans.
Int smith_kernel_dim(std::vector<Series>& E, Int mm, Int prec, Int p, Int val_floor = 0);

}  // namespace gfp_detail

}  // namespace jpart
