#include "nwall/toeplitz.hpp"

namespace nwall {

std::optional<MatFp> toeplitz_matrix(const Seq& s, i64 n, i64 m) {
    if (!s.defined_range(n - m, n + m)) return std::nullopt;
    MatFp mat;
    mat.p = s.p();
    mat.n = m + 1;
    mat.a.resize(static_cast<size_t>((m + 1) * (m + 1)));
    for (i64 i = 0; i <= m; ++i)
        for (i64 j = 0; j <= m; ++j)
            mat.set(i, j, s.at(i - j + n));
    return mat;
}

Fp det_mod_p(MatFp mat) {
    u64 p = mat.p;
    i64 n = mat.n;
    Fp det = Fp::raw(1 % p, p);
    for (i64 col = 0; col < n; ++col) {
        i64 pivot = -1;
        for (i64 r = col; r < n; ++r)
            if (mat.at(r, col).v != 0) { pivot = r; break; }
        if (pivot < 0) return Fp::raw(0, p);
        if (pivot != col) {
            for (i64 j = 0; j < n; ++j) {
                u64 t = mat.a[static_cast<size_t>(pivot * n + j)];
                mat.set(pivot, j, mat.a[static_cast<size_t>(col * n + j)]);
                mat.set(col, j, t);
            }
            det = -det;
        }
        Fp pv = mat.at(col, col);
        det *= pv;
        Fp inv = pv.inv();
        for (i64 r = col + 1; r < n; ++r) {
            Fp f = mat.at(r, col);
            if (f.is_zero()) continue;
            f *= inv;
            for (i64 j = col; j < n; ++j)
                mat.set(r, j, (mat.at(r, j) - f * mat.at(col, j)).v);
        }
    }
    return det;
}

Cell oracle_cell(const Seq& s, i64 m, i64 n) {
    if (m < -1) return Cell::of(0);
    if (m == -1) return Cell::of(1 % s.p());
    auto mat = toeplitz_matrix(s, n, m);
    if (!mat) return Cell::undefined();
    return Cell::of(det_mod_p(std::move(*mat)).v);
}

Wall oracle_wall(const Seq& s, i64 max_row, i64 col_lo, i64 col_hi) {
    Wall w{WallGrid(s.prime(), -2, max_row, col_lo, col_hi)};
    w.source = "oracle";
    for (i64 m = -2; m <= max_row; ++m)
        for (i64 n = col_lo; n <= col_hi; ++n)
            w.grid.set(m, n, oracle_cell(s, m, n));
    set_infinite_window_metadata(w, s);
    return w;
}

Wall oracle_wall(const Seq& s, i64 max_row) {
    return oracle_wall(s, max_row, s.lo(), s.hi() - 1);
}

} // namespace nwall
