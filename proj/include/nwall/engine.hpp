#pragma once

#include <optional>

#include "nwall/seq.hpp"
#include "nwall/toeplitz.hpp"
#include "nwall/wall.hpp"

namespace nwall {

struct GenOptions {
    i64 max_row = 0;
    // Stored column range; defaults to the sequence support.
    std::optional<i64> col_lo, col_hi;
    // Row -1 geometry (Definition of the (r,a)-wall); (1,1) is the plain wall.
    u64 r0 = 1, a0 = 1;
};

struct GenStats {
    u64 fc1 = 0, fc2 = 0, fc3 = 0, window_zero = 0, fallback = 0;
};

// Frame-constraint generation. Equals the Toeplitz oracle on every cell the
// oracle defines; cells outside the oracle-defined region stay Undefined.
// Inconsistencies that would falsify the square-window structure raise
// std::logic_error naming the cell.
Wall generate_wall(const Seq& s, const GenOptions& opt, GenStats* stats = nullptr);
Wall generate_wall(const Seq& s, i64 max_row);
Wall generate_ra_wall(const Seq& s, Fp r0, Fp a0, i64 max_row);

// Post-hoc scan of a finished wall: one record per maximal zero region with
// frames/ratios populated where Known. A non-square maximal zero region whose
// full margin is Known raises std::logic_error.
std::vector<WindowRecord> detect_windows(const Wall& w);

} // namespace nwall
