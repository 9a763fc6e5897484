#include "nwall/geometry.hpp"

#include <stdexcept>

namespace nwall {

namespace {

Wall make_like(const Wall& w, i64 rlo, i64 rhi, i64 clo, i64 chi) {
    Wall out{WallGrid(w.prime(), rlo, rhi, clo, chi)};
    out.r0 = w.r0;
    out.a0 = w.a0;
    out.source = w.source;
    return out;
}

} // namespace

Wall reflect_vertical(const Wall& w, i64 span) {
    const WallGrid& g = w.grid;
    Wall out = make_like(w, g.row_lo(), g.row_hi(), span - g.col_hi(), span - g.col_lo());
    for (i64 m = g.row_lo(); m <= g.row_hi(); ++m)
        for (i64 n = g.col_lo(); n <= g.col_hi(); ++n)
            out.grid.set(m, span - n, g.at(m, n));
    return out;
}

Wall reflect_horizontal(const Wall& w) {
    const WallGrid& g = w.grid;
    Wall out = make_like(w, -g.row_hi(), -g.row_lo(), g.col_lo(), g.col_hi());
    for (i64 m = g.row_lo(); m <= g.row_hi(); ++m)
        for (i64 n = g.col_lo(); n <= g.col_hi(); ++n)
            out.grid.set(-m, n, g.at(m, n));
    return out;
}

Wall rotate_cw(const Wall& w) {
    const WallGrid& g = w.grid;
    // out[m,n] = in[-n, m]: rows of out range over -col_hi..-col_lo.
    Wall out = make_like(w, -g.col_hi(), -g.col_lo(), g.row_lo(), g.row_hi());
    for (i64 m = g.row_lo(); m <= g.row_hi(); ++m)
        for (i64 n = g.col_lo(); n <= g.col_hi(); ++n)
            out.grid.set(-n, m, g.at(m, n));
    return out;
}

WallFragment extract_region(const Wall& w, i64 row_lo, i64 row_hi, i64 col_lo, i64 col_hi) {
    const WallGrid& g = w.grid;
    if (row_lo < g.row_lo() || row_hi > g.row_hi() || col_lo < g.col_lo() || col_hi > g.col_hi() ||
        row_hi < row_lo || col_hi < col_lo)
        throw std::invalid_argument("extract_region: region out of range");
    WallFragment frag{make_like(w, 0, row_hi - row_lo, 0, col_hi - col_lo), row_lo, col_lo};
    for (i64 m = row_lo; m <= row_hi; ++m)
        for (i64 n = col_lo; n <= col_hi; ++n)
            frag.wall.grid.set(m - row_lo, n - col_lo, g.at(m, n));
    return frag;
}

ProfileGrid rotate_profile_cw(const ProfileGrid& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("rotate_profile_cw: grid is not square");
    i64 N = g.rows();
    ProfileGrid out(0, N - 1, 0, N - 1);
    for (i64 i = 0; i < N; ++i)
        for (i64 j = 0; j < N; ++j)
            out.set(i, j, g.at(g.row_lo() + N - 1 - j, g.col_lo() + i));
    return out;
}

} // namespace nwall
