#pragma once

#include <vector>

#include "nwall/morphism2d.hpp"
#include "nwall/wall.hpp"

namespace nwall {

// Retained boxes at one refinement level: box (m,n), 0 <= m,n < p^k, is kept
// iff the profile cell is X.
struct BoxLevel {
    int level = 0;
    u64 p = 0;
    i64 dim = 0; // p^level
    std::vector<std::uint8_t> kept; // dim x dim, row-major
    u128 count = 0;

    bool box(i64 m, i64 n) const {
        return kept[static_cast<size_t>(m) * static_cast<size_t>(dim) + static_cast<size_t>(n)] != 0;
    }
};

// Requires the profile to be exactly p^k x p^k and fully Known.
BoxLevel boxes_from_profile(const ProfileGrid& pg, int k, Prime p);

struct FractalCounts {
    u128 n_k = 0;        // ((p^2+1)/2)^k
    u128 a_k = 0;        // recurrence-unrolled
    u128 a_k_closed = 0; // summation closed form
};

// Lemma-level counts: N_k exactly, a_k by unrolling
// a_{j+1} = ((p^2+1)/2) a_j + 2(p^2-1)(p^j-1) from a_1 = p^2, and the same
// value through the closed summation form.
FractalCounts closed_form_counts(Prime p, int k);

struct DimEstimate {
    double deepest = 0.0; // log(count_K) / (K log p)
    double slope = 0.0;   // least-squares slope of log count_k against k log p
};

// counts[i] is the retained-box count at level i+1.
DimEstimate box_dim_estimate(const std::vector<u128>& counts, Prime p);

} // namespace nwall
