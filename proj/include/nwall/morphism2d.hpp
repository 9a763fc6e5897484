#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nwall/fp.hpp"
#include "nwall/wall.hpp"

namespace nwall {

// The 12-letter alphabet: units, zeroes, edges and corners.
enum class Letter : std::uint8_t {
    A, B, F, Zero,
    EN, EE, ES, EW,
    CNE, CSE, CSW, CNW,
};
constexpr int kLetterCount = 12;

char letter_char(Letter l);
Letter letter_from_char(char c);

// Rectangular grid of letters (row-major).
class Grid2D {
public:
    Grid2D(i64 rows, i64 cols, Letter fill = Letter::Zero);

    i64 rows() const { return rows_; }
    i64 cols() const { return cols_; }
    Letter at(i64 m, i64 n) const { return cells_[idx(m, n)]; }
    void set(i64 m, i64 n, Letter l) { cells_[idx(m, n)] = l; }

    friend bool operator==(const Grid2D& a, const Grid2D& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

private:
    size_t idx(i64 m, i64 n) const {
        return static_cast<size_t>(m) * static_cast<size_t>(cols_) + static_cast<size_t>(n);
    }
    i64 rows_, cols_;
    std::vector<Letter> cells_;
};

// Uniform [k,l]-morphism: every letter of the domain maps to a k x l block.
class Morphism2D {
public:
    Morphism2D(i64 k, i64 l);
    void set_image(Letter from, Grid2D image);
    bool has_image(Letter from) const { return has_[static_cast<size_t>(from)]; }
    const Grid2D& image(Letter from) const;
    i64 k() const { return k_; }
    i64 l() const { return l_; }

private:
    i64 k_, l_;
    std::vector<Grid2D> images_;
    std::array<bool, kLetterCount> has_{};
};

// phi^iters(seed) as a k^iters x l^iters grid. Throws on a non-prolongable
// seed or a letter without an image.
Grid2D expand2d(const Morphism2D& m, Letter seed, int iters);

// Same iteration without the fixed-point requirement (for block images like
// phi^k(F)).
Grid2D iterate2d(const Morphism2D& m, Letter seed, int iters);

// The [p,p]-morphism whose coded fixed point gives the Cantor wall profile.
Morphism2D phi_p(Prime p);

// The two simplified morphisms bounding its nonzero set: Phi_0 over {0,A}
// and Phi_F over the alphabet without B.
Morphism2D phi_zero_variant(Prime p);
Morphism2D phi_frame_variant(Prime p);
std::pair<Morphism2D, Morphism2D> phi_variants(Prime p);

// [1,1]-coding: letter Zero -> Zero, everything else -> X.
ProfileGrid pi_coding(const Grid2D& g);

// Exact per-letter occurrence counts of phi^iters(seed), without
// materializing the grid.
std::array<u128, kLetterCount> letter_counts(const Morphism2D& m, Letter seed, int iters);
u128 nonzero_count(const Morphism2D& m, Letter seed, int iters);

// Text format: one character per cell, rows newline-separated.
std::string grid_to_text(const Grid2D& g);
Grid2D grid_from_text(const std::string& text);

std::string u128_to_string(u128 v);

} // namespace nwall
