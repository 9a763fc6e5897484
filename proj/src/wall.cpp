#include "nwall/wall.hpp"

#include <sstream>
#include <stdexcept>

namespace nwall {

WallGrid::WallGrid(Prime p, i64 row_lo, i64 row_hi, i64 col_lo, i64 col_hi)
    : p_(p.value()), row_lo_(row_lo), row_hi_(row_hi), col_lo_(col_lo), col_hi_(col_hi) {
    if (row_hi < row_lo || col_hi < col_lo) throw std::invalid_argument("WallGrid: empty range");
    size_t n = static_cast<size_t>(rows()) * static_cast<size_t>(cols());
    val_.assign(n, 0);
    known_.assign(n, 0);
}

ProfileGrid::ProfileGrid(i64 row_lo, i64 row_hi, i64 col_lo, i64 col_hi)
    : row_lo_(row_lo), row_hi_(row_hi), col_lo_(col_lo), col_hi_(col_hi) {
    if (row_hi < row_lo || col_hi < col_lo) throw std::invalid_argument("ProfileGrid: empty range");
    cells_.assign(static_cast<size_t>(rows()) * static_cast<size_t>(cols()), ProfileCell::Undefined);
}

ProfileGrid profile(const Wall& w) {
    ProfileGrid g(w.grid.row_lo(), w.grid.row_hi(), w.grid.col_lo(), w.grid.col_hi());
    for (i64 m = g.row_lo(); m <= g.row_hi(); ++m)
        for (i64 n = g.col_lo(); n <= g.col_hi(); ++n) {
            Cell c = w.at(m, n);
            g.set(m, n, !c.known ? ProfileCell::Undefined : (c.v == 0 ? ProfileCell::Zero : ProfileCell::X));
        }
    return g;
}

std::string profile_to_text(const ProfileGrid& g) {
    std::ostringstream os;
    for (i64 m = g.row_lo(); m <= g.row_hi(); ++m) {
        for (i64 n = g.col_lo(); n <= g.col_hi(); ++n) {
            ProfileCell c = g.at(m, n);
            os << (c == ProfileCell::Zero ? '0' : c == ProfileCell::X ? 'X' : '.');
        }
        os << '\n';
    }
    return os.str();
}

std::optional<Mismatch> first_known_mismatch(const Wall& a, const Wall& b) {
    i64 rlo = std::max(a.grid.row_lo(), b.grid.row_lo());
    i64 rhi = std::min(a.grid.row_hi(), b.grid.row_hi());
    i64 clo = std::max(a.grid.col_lo(), b.grid.col_lo());
    i64 chi = std::min(a.grid.col_hi(), b.grid.col_hi());
    for (i64 m = rlo; m <= rhi; ++m)
        for (i64 n = clo; n <= chi; ++n) {
            Cell ca = a.at(m, n), cb = b.at(m, n);
            if (ca.known && cb.known && ca.v != cb.v) return Mismatch{m, n, ca, cb};
        }
    return std::nullopt;
}

namespace {

// Cell positions of a frame edge (i = 0 .. side+1; see the header note).
void frame_pos(const WindowRecord& rec, FrameEdge e, bool outer, i64 i, i64& m, i64& n) {
    i64 t = rec.top, c0 = rec.left, l = rec.side;
    switch (e) {
        case FrameEdge::North: m = t - 1 - (outer ? 1 : 0); n = c0 - 1 + i; break;
        case FrameEdge::West:  m = t - 1 + i; n = c0 - 1 - (outer ? 1 : 0); break;
        case FrameEdge::East:  m = t + l - i; n = c0 + l + (outer ? 1 : 0); break;
        case FrameEdge::South: m = t + l + (outer ? 1 : 0); n = c0 + l - i; break;
    }
}

std::vector<Cell> frame(const Wall& w, const WindowRecord& rec, FrameEdge e, bool outer) {
    if (rec.infinite) throw std::invalid_argument("frame: infinite window has no finite frame");
    std::vector<Cell> out(static_cast<size_t>(rec.side) + 2);
    for (i64 i = 0; i < rec.side + 2; ++i) {
        i64 m = 0, n = 0;
        frame_pos(rec, e, outer, i, m, n);
        out[static_cast<size_t>(i)] = w.at(m, n);
    }
    return out;
}

} // namespace

std::vector<Cell> inner_frame(const Wall& w, const WindowRecord& rec, FrameEdge e) {
    return frame(w, rec, e, false);
}

std::vector<Cell> outer_frame(const Wall& w, const WindowRecord& rec, FrameEdge e) {
    return frame(w, rec, e, true);
}

void set_infinite_window_metadata(Wall& w, const Seq& s) {
    bool lz = s.left_ext() == Ext::Zero, rz = s.right_ext() == Ext::Zero;
    if (!lz && !rz) return;
    i64 e = s.first_nonzero();
    if (e == s.hi() && lz && rz) {
        w.zero_half_plane = true;
        return;
    }
    if (lz) w.inf_left_end = (e == s.hi()) ? s.hi() - 1 : e - 1;
    if (rz) w.inf_right_start = (e == s.hi()) ? s.lo() : s.last_nonzero() + 1;
}

std::optional<u64> geometric_ratio(const std::vector<Cell>& cells, u64 p) {
    if (cells.size() < 2) return std::nullopt;
    for (const Cell& c : cells)
        if (!c.known || c.v == 0) return std::nullopt;
    Fp ratio = Fp::raw(cells[1].v, p) / Fp::raw(cells[0].v, p);
    for (size_t i = 2; i < cells.size(); ++i)
        if (Fp::raw(cells[i].v, p) != Fp::raw(cells[i - 1].v, p) * ratio) return std::nullopt;
    return ratio.v;
}

} // namespace nwall
