#pragma once

#include <optional>
#include <vector>

#include "nwall/seq.hpp"
#include "nwall/wall.hpp"

namespace nwall {

// Row-major square matrix over F_p.
struct MatFp {
    u64 p = 0;
    i64 n = 0;
    std::vector<u64> a;

    Fp at(i64 i, i64 j) const { return Fp::raw(a[static_cast<size_t>(i * n + j)], p); }
    void set(i64 i, i64 j, u64 v) { a[static_cast<size_t>(i * n + j)] = v; }
};

// T_S(n; m): the (m+1)x(m+1) matrix with entry (i,j) = s_{i-j+n}.
// nullopt when some referenced index is undefined.
std::optional<MatFp> toeplitz_matrix(const Seq& s, i64 n, i64 m);

// Gaussian elimination with first-nonzero pivoting.
Fp det_mod_p(MatFp mat);

// Single wall cell by definition: det T_S(n;m) for m >= 0, 1 on row -1,
// 0 below. Undefined when the matrix is.
Cell oracle_cell(const Seq& s, i64 m, i64 n);

// Ground-truth wall over rows [-2, max_row] x cols [col_lo, col_hi].
Wall oracle_wall(const Seq& s, i64 max_row, i64 col_lo, i64 col_hi);
// Columns default to the support.
Wall oracle_wall(const Seq& s, i64 max_row);

} // namespace nwall
