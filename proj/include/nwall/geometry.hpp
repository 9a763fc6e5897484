#pragma once

#include "nwall/wall.hpp"

namespace nwall {

// Pure index remappings; Undefined maps to Undefined and all metadata except
// p / (r0,a0) is dropped. Produced walls are fragments: their row ranges need
// not start at -2.

// out[m, span - n] = in[m, n].
Wall reflect_vertical(const Wall& w, i64 span);

// out[m, n] = in[-m, n].
Wall reflect_horizontal(const Wall& w);

// Clockwise quarter turn: out[m, n] = in[-n, m].
Wall rotate_cw(const Wall& w);

// Copy of rows x cols (inclusive), rebased to start at (0,0); the original
// offsets are recorded in origin_row/origin_col.
struct WallFragment {
    Wall wall;
    i64 origin_row = 0;
    i64 origin_col = 0;
};
WallFragment extract_region(const Wall& w, i64 row_lo, i64 row_hi, i64 col_lo, i64 col_hi);

// Clockwise quarter turn of a square profile block: out[i][j] = in[N-1-j][i].
ProfileGrid rotate_profile_cw(const ProfileGrid& g);

} // namespace nwall
