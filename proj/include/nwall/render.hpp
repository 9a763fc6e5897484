#pragma once

#include <string>

#include "nwall/wall.hpp"

namespace nwall {

// Binary PPM (P6), one pixel per cell: zero entries yellow (255,230,0),
// residue v in 1..p-1 on a blue ramp (0, 64+floor(160(v-1)/(p-2)), 255)
// darkest at 1, Undefined mid gray (128,128,128).
std::string render_wall_ppm(const Wall& w);
std::string render_wall_ppm(const Wall& w, i64 row_lo, i64 row_hi, i64 col_lo, i64 col_hi);

// Same palette applied to a profile (X rendered as the darkest blue).
std::string render_profile_ppm(const ProfileGrid& g);

// Binary PGM (P5): zero -> 255, X -> 0, Undefined -> 128.
std::string render_profile_pgm(const ProfileGrid& g);

} // namespace nwall
