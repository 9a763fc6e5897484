#include "nwall/morphism2d.hpp"

#include <sstream>
#include <stdexcept>

namespace nwall {

char letter_char(Letter l) {
    switch (l) {
        case Letter::A: return 'A';
        case Letter::B: return 'B';
        case Letter::F: return 'F';
        case Letter::Zero: return '0';
        case Letter::EN: return 'N';
        case Letter::EE: return 'E';
        case Letter::ES: return 'S';
        case Letter::EW: return 'W';
        case Letter::CNE: return '1';
        case Letter::CSE: return '2';
        case Letter::CSW: return '3';
        case Letter::CNW: return '4';
    }
    throw std::invalid_argument("letter_char: bad letter");
}

Letter letter_from_char(char c) {
    switch (c) {
        case 'A': return Letter::A;
        case 'B': return Letter::B;
        case 'F': return Letter::F;
        case '0': return Letter::Zero;
        case 'N': return Letter::EN;
        case 'E': return Letter::EE;
        case 'S': return Letter::ES;
        case 'W': return Letter::EW;
        case '1': return Letter::CNE;
        case '2': return Letter::CSE;
        case '3': return Letter::CSW;
        case '4': return Letter::CNW;
    }
    throw std::invalid_argument(std::string("letter_from_char: '") + c + "'");
}

Grid2D::Grid2D(i64 rows, i64 cols, Letter fill)
    : rows_(rows), cols_(cols),
      cells_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("Grid2D: empty grid");
}

Morphism2D::Morphism2D(i64 k, i64 l) : k_(k), l_(l) {
    if (k <= 0 || l <= 0) throw std::invalid_argument("Morphism2D: bad factors");
    images_.assign(kLetterCount, Grid2D(k, l));
}

void Morphism2D::set_image(Letter from, Grid2D image) {
    if (image.rows() != k_ || image.cols() != l_)
        throw std::invalid_argument("Morphism2D: image has wrong shape");
    images_[static_cast<size_t>(from)] = std::move(image);
    has_[static_cast<size_t>(from)] = true;
}

const Grid2D& Morphism2D::image(Letter from) const {
    if (!has_[static_cast<size_t>(from)])
        throw std::invalid_argument(std::string("Morphism2D: letter '") + letter_char(from) +
                                    "' is outside the domain");
    return images_[static_cast<size_t>(from)];
}

Grid2D expand2d(const Morphism2D& m, Letter seed, int iters) {
    if (m.image(seed).at(0, 0) != seed)
        throw std::invalid_argument("expand2d: seed is not prolongable");
    return iterate2d(m, seed, iters);
}

Grid2D iterate2d(const Morphism2D& m, Letter seed, int iters) {
    Grid2D g(1, 1, seed);
    for (int it = 0; it < iters; ++it) {
        Grid2D next(g.rows() * m.k(), g.cols() * m.l());
        for (i64 r = 0; r < g.rows(); ++r)
            for (i64 c = 0; c < g.cols(); ++c) {
                const Grid2D& img = m.image(g.at(r, c));
                for (i64 i = 0; i < m.k(); ++i)
                    for (i64 j = 0; j < m.l(); ++j)
                        next.set(r * m.k() + i, c * m.l() + j, img.at(i, j));
            }
        g = std::move(next);
    }
    return g;
}

namespace {

// Border letter of the frame layout at position (m, n) in a d x d block:
// corners, then edges, zero inside. Shared by Phi_p(F) and the corner/edge
// images at any scale.
Letter frame_letter(i64 m, i64 n, i64 d) {
    bool top = m == 0, bottom = m == d - 1, left = n == 0, right = n == d - 1;
    if (top && left) return Letter::CNW;
    if (top && right) return Letter::CNE;
    if (bottom && left) return Letter::CSW;
    if (bottom && right) return Letter::CSE;
    if (top) return Letter::EN;
    if (bottom) return Letter::ES;
    if (left) return Letter::EW;
    if (right) return Letter::EE;
    return Letter::Zero;
}

Grid2D unit_image(i64 pv, Letter even_even, Letter even_odd, Letter odd_even, Letter odd_odd) {
    Grid2D g(pv, pv);
    for (i64 m = 0; m < pv; ++m)
        for (i64 n = 0; n < pv; ++n) {
            bool me = (m % 2) == 0, ne = (n % 2) == 0;
            g.set(m, n, me ? (ne ? even_even : even_odd) : (ne ? odd_even : odd_odd));
        }
    return g;
}

} // namespace

Morphism2D phi_p(Prime p) {
    i64 pv = static_cast<i64>(p.value());
    Morphism2D phi(pv, pv);

    phi.set_image(Letter::A, unit_image(pv, Letter::A, Letter::Zero, Letter::F, Letter::B));
    phi.set_image(Letter::B, unit_image(pv, Letter::B, Letter::F, Letter::Zero, Letter::A));
    phi.set_image(Letter::Zero, Grid2D(pv, pv, Letter::Zero));

    Grid2D f(pv, pv);
    for (i64 m = 0; m < pv; ++m)
        for (i64 n = 0; n < pv; ++n)
            f.set(m, n, frame_letter(m, n, pv));
    phi.set_image(Letter::F, f);

    auto edge = [&](auto pred, Letter l) {
        Grid2D g(pv, pv, Letter::Zero);
        for (i64 m = 0; m < pv; ++m)
            for (i64 n = 0; n < pv; ++n)
                if (pred(m, n)) g.set(m, n, l);
        return g;
    };
    phi.set_image(Letter::EN, edge([&](i64 m, i64) { return m == 0; }, Letter::EN));
    phi.set_image(Letter::ES, edge([&](i64 m, i64) { return m == pv - 1; }, Letter::ES));
    phi.set_image(Letter::EE, edge([&](i64, i64 n) { return n == pv - 1; }, Letter::EE));
    phi.set_image(Letter::EW, edge([&](i64, i64 n) { return n == 0; }, Letter::EW));

    // Corners keep their corner and grow the two adjacent edges.
    auto corner = [&](Letter c, Letter hedge, bool on_top, Letter vedge, bool on_left) {
        Grid2D g(pv, pv, Letter::Zero);
        i64 cm = on_top ? 0 : pv - 1, cn = on_left ? 0 : pv - 1;
        for (i64 n = 0; n < pv; ++n) g.set(cm, n, hedge);
        for (i64 m = 0; m < pv; ++m) g.set(m, cn, vedge);
        g.set(cm, cn, c);
        return g;
    };
    phi.set_image(Letter::CNW, corner(Letter::CNW, Letter::EN, true, Letter::EW, true));
    phi.set_image(Letter::CNE, corner(Letter::CNE, Letter::EN, true, Letter::EE, false));
    phi.set_image(Letter::CSW, corner(Letter::CSW, Letter::ES, false, Letter::EW, true));
    phi.set_image(Letter::CSE, corner(Letter::CSE, Letter::ES, false, Letter::EE, false));
    return phi;
}

Morphism2D phi_zero_variant(Prime p) {
    i64 pv = static_cast<i64>(p.value());
    Morphism2D phi(pv, pv);
    phi.set_image(Letter::A, unit_image(pv, Letter::A, Letter::Zero, Letter::Zero, Letter::A));
    phi.set_image(Letter::Zero, Grid2D(pv, pv, Letter::Zero));
    return phi;
}

Morphism2D phi_frame_variant(Prime p) {
    i64 pv = static_cast<i64>(p.value());
    Morphism2D full = phi_p(p);
    Morphism2D phi(pv, pv);
    phi.set_image(Letter::A, unit_image(pv, Letter::A, Letter::F, Letter::F, Letter::A));
    for (Letter l : {Letter::F, Letter::Zero, Letter::EN, Letter::EE, Letter::ES, Letter::EW,
                     Letter::CNE, Letter::CSE, Letter::CSW, Letter::CNW})
        phi.set_image(l, full.image(l));
    return phi;
}

std::pair<Morphism2D, Morphism2D> phi_variants(Prime p) {
    return {phi_zero_variant(p), phi_frame_variant(p)};
}

ProfileGrid pi_coding(const Grid2D& g) {
    ProfileGrid out(0, g.rows() - 1, 0, g.cols() - 1);
    for (i64 m = 0; m < g.rows(); ++m)
        for (i64 n = 0; n < g.cols(); ++n)
            out.set(m, n, g.at(m, n) == Letter::Zero ? ProfileCell::Zero : ProfileCell::X);
    return out;
}

std::array<u128, kLetterCount> letter_counts(const Morphism2D& m, Letter seed, int iters) {
    std::array<u128, kLetterCount> counts{};
    counts[static_cast<size_t>(seed)] = 1;
    for (int it = 0; it < iters; ++it) {
        std::array<u128, kLetterCount> next{};
        for (int l = 0; l < kLetterCount; ++l) {
            if (counts[l] == 0) continue;
            const Grid2D& img = m.image(static_cast<Letter>(l));
            for (i64 r = 0; r < img.rows(); ++r)
                for (i64 c = 0; c < img.cols(); ++c)
                    next[static_cast<size_t>(img.at(r, c))] += counts[l];
        }
        counts = next;
    }
    return counts;
}

u128 nonzero_count(const Morphism2D& m, Letter seed, int iters) {
    auto counts = letter_counts(m, seed, iters);
    u128 total = 0;
    for (int l = 0; l < kLetterCount; ++l)
        if (static_cast<Letter>(l) != Letter::Zero) total += counts[l];
    return total;
}

std::string grid_to_text(const Grid2D& g) {
    std::ostringstream os;
    for (i64 m = 0; m < g.rows(); ++m) {
        for (i64 n = 0; n < g.cols(); ++n) os << letter_char(g.at(m, n));
        os << '\n';
    }
    return os.str();
}

Grid2D grid_from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) lines.push_back(line);
    if (lines.empty()) throw std::invalid_argument("grid_from_text: empty");
    Grid2D g(static_cast<i64>(lines.size()), static_cast<i64>(lines[0].size()));
    for (size_t m = 0; m < lines.size(); ++m) {
        if (lines[m].size() != lines[0].size())
            throw std::invalid_argument("grid_from_text: ragged rows");
        for (size_t n = 0; n < lines[m].size(); ++n)
            g.set(static_cast<i64>(m), static_cast<i64>(n), letter_from_char(lines[m][n]));
    }
    return g;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

} // namespace nwall
