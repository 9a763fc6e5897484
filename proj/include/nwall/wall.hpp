#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nwall/fp.hpp"
#include "nwall/seq.hpp"

namespace nwall {

struct Cell {
    u64 v = 0;
    bool known = false;

    static Cell undefined() { return {}; }
    static Cell of(u64 value) { return {value, true}; }
    bool is(u64 value) const { return known && v == value; }
    bool nonzero() const { return known && v != 0; }
};

enum class FrameEdge : int { North = 0, West = 1, East = 2, South = 3 };

// A maximal square zero region. Finite windows have their zero region at
// rows [top, top+side) x cols [left, left+side). Infinite registry entries
// cover all rows >= top with one or both column directions unbounded.
struct WindowRecord {
    i64 top = 0;
    i64 left = 0;   // for infinite windows with unbounded_left, the bounded END column instead
    i64 side = 1;
    bool infinite = false;
    bool unbounded_left = false;
    bool unbounded_right = false;

    // complete: the whole 1-cell margin (inner frame ring) is Known.
    bool complete = false;
    std::array<bool, 4> inner_known{};  // per FrameEdge
    std::array<bool, 4> outer_known{};
    std::array<bool, 4> inner_geometric{};
    // Ratios of the inner frame edges, when computable.
    std::optional<u64> P, Q, R, S;

    i64 bottom() const { return top + side - 1; }
    i64 right() const { return left + side - 1; }
};

// Dense 2D array of wall cells over rows [row_lo, row_hi] x cols
// [col_lo, col_hi], all inclusive. Engine- and oracle-built walls span rows
// from -2; geometry operations may produce fragments with any ranges.
class WallGrid {
public:
    WallGrid(Prime p, i64 row_lo, i64 row_hi, i64 col_lo, i64 col_hi);

    Prime prime() const { return Prime(p_); }
    u64 p() const { return p_; }
    i64 row_lo() const { return row_lo_; }
    i64 row_hi() const { return row_hi_; }
    i64 col_lo() const { return col_lo_; }
    i64 col_hi() const { return col_hi_; }
    i64 rows() const { return row_hi_ - row_lo_ + 1; }
    i64 cols() const { return col_hi_ - col_lo_ + 1; }

    bool in_range(i64 m, i64 n) const {
        return m >= row_lo_ && m <= row_hi_ && n >= col_lo_ && n <= col_hi_;
    }
    // Total: Undefined outside the stored range.
    Cell at(i64 m, i64 n) const {
        if (!in_range(m, n)) return Cell::undefined();
        size_t i = idx(m, n);
        return {val_[i], known_[i] != 0};
    }
    void set(i64 m, i64 n, Cell c) {
        size_t i = idx(m, n);
        val_[i] = c.v;
        known_[i] = c.known ? 1 : 0;
    }

private:
    size_t idx(i64 m, i64 n) const {
        return static_cast<size_t>(m - row_lo_) * static_cast<size_t>(cols()) +
               static_cast<size_t>(n - col_lo_);
    }
    u64 p_;
    i64 row_lo_, row_hi_, col_lo_, col_hi_;
    std::vector<u64> val_;
    std::vector<std::uint8_t> known_;
};

struct Wall {
    explicit Wall(WallGrid g) : grid(std::move(g)) {}

    WallGrid grid;
    u64 r0 = 1, a0 = 1;            // row -1 geometry a0 * r0^n
    std::string source;            // free-form descriptor of the generating sequence
    std::vector<WindowRecord> windows;

    // Infinite zero regions implied by a Zero sequence extension: all cells
    // with m >= 0 and n <= inf_left_end (resp. n >= inf_right_start) are zero;
    // zero_half_plane marks the wall of an all-zero sequence.
    std::optional<i64> inf_left_end;
    std::optional<i64> inf_right_start;
    bool zero_half_plane = false;

    Prime prime() const { return grid.prime(); }
    u64 p() const { return grid.p(); }
    Cell at(i64 m, i64 n) const { return grid.at(m, n); }
};

enum class ProfileCell : std::uint8_t { Zero, X, Undefined };

class ProfileGrid {
public:
    ProfileGrid(i64 row_lo, i64 row_hi, i64 col_lo, i64 col_hi);

    i64 row_lo() const { return row_lo_; }
    i64 row_hi() const { return row_hi_; }
    i64 col_lo() const { return col_lo_; }
    i64 col_hi() const { return col_hi_; }
    i64 rows() const { return row_hi_ - row_lo_ + 1; }
    i64 cols() const { return col_hi_ - col_lo_ + 1; }

    ProfileCell at(i64 m, i64 n) const {
        if (m < row_lo_ || m > row_hi_ || n < col_lo_ || n > col_hi_) return ProfileCell::Undefined;
        return cells_[idx(m, n)];
    }
    void set(i64 m, i64 n, ProfileCell c) { cells_[idx(m, n)] = c; }

private:
    size_t idx(i64 m, i64 n) const {
        return static_cast<size_t>(m - row_lo_) * static_cast<size_t>(cols()) +
               static_cast<size_t>(n - col_lo_);
    }
    i64 row_lo_, row_hi_, col_lo_, col_hi_;
    std::vector<ProfileCell> cells_;
};

// chi: 0 -> Zero, nonzero -> X, Undefined -> Undefined, pointwise.
ProfileGrid profile(const Wall& w);

// Profile text: one row per line, '0' / 'X' / '.'.
std::string profile_to_text(const ProfileGrid& g);

struct Mismatch {
    i64 m = 0, n = 0;
    Cell a, b;
};

// First cell where the two walls disagree on mutually Known cells
// (restricted to the overlap of the stored ranges).
std::optional<Mismatch> first_known_mismatch(const Wall& a, const Wall& b);

// Inner/outer frame of a finite window, in frame order and indexing:
// A = north (west to east), B = west (north to south), C = east (south to
// north), D = south (east to west), each of length side+2; outer frames
// E,F,G,H run parallel to A,B,C,D.
std::vector<Cell> inner_frame(const Wall& w, const WindowRecord& rec, FrameEdge e);
std::vector<Cell> outer_frame(const Wall& w, const WindowRecord& rec, FrameEdge e);

// Constant ratio of consecutive entries, if the cells are Known and nonzero.
std::optional<u64> geometric_ratio(const std::vector<Cell>& cells, u64 p);

// Fill in the infinite-window fields implied by s's Zero extensions.
void set_infinite_window_metadata(Wall& w, const Seq& s);

} // namespace nwall
