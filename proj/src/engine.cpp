#include "nwall/engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nwall {

namespace {

[[noreturn]] void engine_bug(const char* what, i64 m, i64 n) {
    std::ostringstream os;
    os << "wall engine inconsistency at cell [" << m << "," << n << "]: " << what;
    throw std::logic_error(os.str());
}

struct OpenWindow {
    i64 top = 0, c0 = 0, c1 = 0; // zero run of the top row
    bool uncertain = false;      // a margin was not Known-nonzero; side is only a lower bound
    i64 side() const { return c1 - c0 + 1; }
    i64 bottom() const { return top + side() - 1; }
};

class Builder {
public:
    Builder(const Seq& s, const GenOptions& opt, GenStats* stats)
        : s_(s),
          p_(s.prime()),
          virt_(s.prime(), s.lo(), s.values(), Ext::Zero, Ext::Zero),
          opt_(opt),
          stats_(stats),
          w_{WallGrid(s.prime(), -2, opt.max_row,
                      opt.col_lo.value_or(s.lo()),
                      opt.col_hi.value_or(s.hi() - 1))} {
        if (opt.max_row < 0) throw std::invalid_argument("generate_wall: max_row must be >= 0");
        if (opt.r0 % p_.value() == 0 || opt.a0 % p_.value() == 0)
            throw std::invalid_argument("generate_wall: r0 and a0 must be nonzero mod p");
        col_lo_ = w_.grid.col_lo();
        col_hi_ = w_.grid.col_hi();
        w_.r0 = opt.r0 % p_.value();
        w_.a0 = opt.a0 % p_.value();
        // The virtual zero extension turns everything left of the first
        // nonzero entry and right of the last one into zero quarter-planes
        // for m >= 0 (Square Window Theorem: their east/west frame columns
        // stay nonzero, so they never grow into the support).
        i64 e = virt_.first_nonzero();
        if (e == virt_.hi()) {
            all_zero_ = true;
        } else {
            plane_left_end_ = e - 1;
            plane_right_start_ = virt_.last_nonzero() + 1;
        }
    }

    Wall run() {
        std::ostringstream desc;
        desc << "fc-engine p=" << p_.value() << " support=[" << s_.lo() << "," << s_.hi() << ")"
             << (s_.left_ext() == Ext::Zero ? " left-zero" : "")
             << (s_.right_ext() == Ext::Zero ? " right-zero" : "");
        if (w_.r0 != 1 || w_.a0 != 1) desc << " r0=" << w_.r0 << " a0=" << w_.a0;
        w_.source = desc.str();
        fill_initial_rows();
        scan_row_runs(0);
        for (i64 m = 1; m <= opt_.max_row; ++m) {
            for (i64 n = col_lo_; n <= col_hi_; ++n)
                w_.grid.set(m, n, compute(m, n));
            scan_row_runs(m);
            retire(m);
        }
        mask_undefined();
        set_infinite_window_metadata(w_, s_);
        w_.windows = detect_windows(w_);
        return std::move(w_);
    }

private:
    // Wall value over the virtual zero extension; total on rows < 0 and
    // inside the quarter-planes, Undefined beyond the stored range otherwise.
    Cell view(i64 m, i64 n) const {
        if (m < -1) return Cell::of(0);
        if (m == -1) return Cell::of(row_minus1(n));
        if (in_plane(m, n)) return Cell::of(0);
        return w_.at(m, n);
    }

    bool in_plane(i64 m, i64 n) const {
        if (m < 0) return false;
        if (all_zero_) return true;
        return n <= plane_left_end_ || n >= plane_right_start_;
    }

    u64 row_minus1(i64 n) const {
        return (Fp::raw(w_.a0, p_.value()) * Fp::raw(w_.r0, p_.value()).pow(n)).v;
    }

    void fill_initial_rows() {
        for (i64 n = col_lo_; n <= col_hi_; ++n) {
            w_.grid.set(-2, n, Cell::of(0));
            w_.grid.set(-1, n, Cell::of(row_minus1(n)));
            w_.grid.set(0, n, Cell::of(virt_.at(n)));
        }
    }

    Cell compute(i64 m, i64 n) {
        Cell above = view(m - 1, n);
        Cell above2 = view(m - 2, n);
        if (!above.known || !above2.known) return fallback(m, n);

        if (above.v == 0) {
            // Interior of a window or its south inner frame row (FC2).
            if (in_plane(m - 1, n)) return Cell::of(0);
            const OpenWindow* win = find_window(m - 1, n);
            if (!win) engine_bug("zero cell above belongs to no window", m, n);
            if (win->uncertain) {
                if (m <= win->bottom()) return Cell::of(0);
                return fallback(m, n);
            }
            if (m <= win->bottom()) {
                if (stats_) ++stats_->window_zero;
                return Cell::of(0);
            }
            return fc2(*win, m, n);
        }
        if (above2.v == 0) {
            // South outer frame row (FC3).
            if (in_plane(m - 2, n)) engine_bug("nonzero cell directly below a zero quarter-plane", m, n);
            const OpenWindow* win = find_window(m - 2, n);
            if (!win) engine_bug("zero cell two above belongs to no window", m, n);
            if (win->uncertain) return fallback(m, n);
            if (m != win->bottom() + 2) engine_bug("FC3 row does not meet the window bottom", m, n);
            return fc3(*win, m, n);
        }
        Cell west = view(m - 1, n - 1);
        Cell east = view(m - 1, n + 1);
        if (!west.known || !east.known) return fallback(m, n);
        if (stats_) ++stats_->fc1;
        Fp a = fp(above), b = fp(west), c = fp(east), d = fp(above2);
        return Cell::of(((a * a - b * c) / d).v);
    }

    // Zero region of `win` at rows [top, top+l) x cols [c0, c0+l); frames in
    // frame indexing: A_i = [top-1, c0-1+i], B_i = [top-1+i, c0-1],
    // C_i = [top+l-i, c0+l], D_i = [top+l, c0+l-i], E/F/G/H one step out.
    Cell fc2(const OpenWindow& win, i64 m, i64 n) {
        i64 t = win.top, c0 = win.c0, l = win.side();
        i64 k = c0 + l - n; // 1..l on this row
        Cell A = view(t - 1, c0 - 1 + k);
        Cell B = view(t - 1 + k, c0 - 1);
        Cell C = view(t + l - k, c0 + l);
        if (!A.known || !B.known || !C.known) return fallback(m, n);
        if (A.v == 0 || B.v == 0 || C.v == 0) engine_bug("zero entry in an inner frame", m, n);
        if (stats_) ++stats_->fc2;
        Fp v = fp(B) * fp(C) / fp(A);
        if (((l * k) & 1) != 0) v = -v;
        return Cell::of(v.v);
    }

    Cell fc3(const OpenWindow& win, i64 m, i64 n) {
        i64 t = win.top, c0 = win.c0, l = win.side();
        i64 k = c0 + l - n;
        Cell A0 = view(t - 1, c0 - 1), A1 = view(t - 1, c0);
        Cell B1 = view(t, c0 - 1);
        Cell C0 = view(t + l, c0 + l), C1 = view(t + l - 1, c0 + l);
        Cell D1 = view(t + l, c0 + l - 1);
        Cell Ak = view(t - 1, c0 - 1 + k);
        Cell Bk = view(t - 1 + k, c0 - 1);
        Cell Ck = view(t + l - k, c0 + l);
        Cell Dk = view(t + l, c0 + l - k);
        Cell Ek = view(t - 2, c0 - 1 + k);
        Cell Fk = view(t - 1 + k, c0 - 2);
        Cell Gk = view(t + l - k, c0 + l + 1);
        for (Cell c : {A0, A1, B1, C0, C1, D1, Ak, Bk, Ck, Dk, Ek, Fk, Gk})
            if (!c.known) return fallback(m, n);
        for (Cell c : {A0, A1, B1, C0, C1, D1, Ak, Bk, Ck, Dk})
            if (c.v == 0) engine_bug("zero entry in an inner frame", m, n);
        if (stats_) ++stats_->fc3;
        Fp P = fp(A1) / fp(A0);
        Fp Q = fp(B1) / fp(A0); // B0 = A0
        Fp R = fp(C1) / fp(C0);
        Fp S = fp(D1) / fp(C0); // D0 = C0
        Fp acc = Q * fp(Ek) / fp(Ak);
        Fp second = P * fp(Fk) / fp(Bk) - S * fp(Gk) / fp(Ck);
        acc = (k & 1) ? acc - second : acc + second;
        return Cell::of((acc * fp(Dk) / R).v);
    }

    Cell fallback(i64 m, i64 n) {
        if (stats_) ++stats_->fallback;
        Cell c = oracle_cell(virt_, m, n);
        if (!c.known) engine_bug("fallback on an undefined cell", m, n);
        if (w_.r0 != 1 || w_.a0 != 1) {
            // Lemma: W^(r0,a0)(S)[m,n] = W(S)[m,n] / (r0^(nm) a0^m).
            Fp scale = Fp::raw(w_.r0, p_.value()).pow(n * m) * Fp::raw(w_.a0, p_.value()).pow(m);
            c = Cell::of((fp(c) / scale).v);
        }
        return c;
    }

    const OpenWindow* find_window(i64 r, i64 c) const {
        for (const OpenWindow& w : active_) {
            if (c < w.c0 || c > w.c1 || r < w.top) continue;
            if (r <= w.bottom() || w.uncertain) return &w;
        }
        return nullptr;
    }

    void scan_row_runs(i64 r) {
        i64 n = col_lo_;
        while (n <= col_hi_) {
            if (!w_.at(r, n).is(0) || in_plane(r, n)) { ++n; continue; }
            i64 a = n;
            while (n <= col_hi_ && w_.at(r, n).is(0) && !in_plane(r, n)) ++n;
            register_run(r, a, n - 1);
        }
    }

    void register_run(i64 r, i64 a, i64 b) {
        for (OpenWindow& w : active_) {
            bool overlaps = !(b < w.c0 || a > w.c1);
            if (!overlaps || r < w.top) continue;
            if (w.uncertain) {
                // Everything here is oracle territory; just keep the
                // uncertain region wide enough for later lookups.
                w.c0 = std::min(w.c0, a);
                w.c1 = std::max(w.c1, b);
                return;
            }
            if (r <= w.bottom()) {
                if (a != w.c0 || b != w.c1)
                    engine_bug("zero run does not tile its window", r, a);
                return;
            }
        }
        OpenWindow win;
        win.top = r;
        win.c0 = a;
        win.c1 = b;
        Cell left = view(r, a - 1), right = view(r, b + 1);
        if (left.is(0) || right.is(0)) engine_bug("zero run margin is zero", r, a);
        win.uncertain = !(left.nonzero() && right.nonzero());
        active_.push_back(win);
    }

    void retire(i64 m) {
        active_.erase(std::remove_if(active_.begin(), active_.end(),
                                     [&](const OpenWindow& w) {
                                         return !w.uncertain && m > w.bottom() + 2;
                                     }),
                      active_.end());
    }

    // Cells whose Toeplitz matrix over the original sequence has undefined
    // entries are not part of the wall.
    void mask_undefined() {
        if (s_.left_ext() != Ext::Undefined && s_.right_ext() != Ext::Undefined) return;
        for (i64 m = 0; m <= opt_.max_row; ++m)
            for (i64 n = col_lo_; n <= col_hi_; ++n)
                if (!s_.defined_range(n - m, n + m)) w_.grid.set(m, n, Cell::undefined());
    }

    Fp fp(Cell c) const { return Fp::raw(c.v, p_.value()); }

    const Seq& s_;
    Prime p_;
    Seq virt_;
    GenOptions opt_;
    GenStats* stats_;
    i64 col_lo_ = 0, col_hi_ = 0;
    Wall w_;
    bool all_zero_ = false;
    i64 plane_left_end_ = 0, plane_right_start_ = 0;
    std::vector<OpenWindow> active_;
};

} // namespace

Wall generate_wall(const Seq& s, const GenOptions& opt, GenStats* stats) {
    return Builder(s, opt, stats).run();
}

Wall generate_wall(const Seq& s, i64 max_row) {
    GenOptions opt;
    opt.max_row = max_row;
    return generate_wall(s, opt);
}

Wall generate_ra_wall(const Seq& s, Fp r0, Fp a0, i64 max_row) {
    if (r0.p != s.p() || a0.p != s.p())
        throw std::invalid_argument("generate_ra_wall: modulus mismatch");
    if (r0.is_zero() || a0.is_zero())
        throw std::invalid_argument("generate_ra_wall: r0 and a0 must be nonzero");
    GenOptions opt;
    opt.max_row = max_row;
    opt.r0 = r0.v;
    opt.a0 = a0.v;
    return generate_wall(s, opt);
}

std::vector<WindowRecord> detect_windows(const Wall& w) {
    const WallGrid& g = w.grid;
    const i64 C = g.cols();
    std::vector<WindowRecord> out;

    // Distinguished infinite entries first, in a fixed order.
    if (w.zero_half_plane) {
        WindowRecord rec;
        rec.infinite = true;
        rec.unbounded_left = rec.unbounded_right = true;
        rec.top = 0;
        out.push_back(rec);
        return out;
    }
    auto in_plane = [&](i64 m, i64 n) {
        if (m < 0) return false;
        return (w.inf_left_end && n <= *w.inf_left_end) ||
               (w.inf_right_start && n >= *w.inf_right_start);
    };
    if (w.inf_left_end) {
        WindowRecord rec;
        rec.infinite = true;
        rec.unbounded_left = true;
        rec.top = 0;
        rec.left = *w.inf_left_end; // bounded end column
        out.push_back(rec);
    }
    if (w.inf_right_start) {
        WindowRecord rec;
        rec.infinite = true;
        rec.unbounded_right = true;
        rec.top = 0;
        rec.left = *w.inf_right_start; // bounded start column
        out.push_back(rec);
    }

    std::vector<std::int32_t> comp(static_cast<size_t>(g.rows()) * static_cast<size_t>(C), -1);
    auto cidx = [&](i64 m, i64 n) {
        return static_cast<size_t>(m - g.row_lo()) * static_cast<size_t>(C) +
               static_cast<size_t>(n - g.col_lo());
    };

    std::vector<std::pair<i64, i64>> stack;
    for (i64 m = std::max<i64>(0, g.row_lo()); m <= g.row_hi(); ++m) {
        for (i64 n = g.col_lo(); n <= g.col_hi(); ++n) {
            if (!g.at(m, n).is(0) || in_plane(m, n) || comp[cidx(m, n)] >= 0) continue;
            auto id = static_cast<std::int32_t>(out.size());
            i64 rlo = m, rhi = m, clo = n, chi = n;
            bool touches_unknown = false;
            size_t count = 0;
            stack.push_back({m, n});
            comp[cidx(m, n)] = id;
            while (!stack.empty()) {
                auto [cm, cn] = stack.back();
                stack.pop_back();
                ++count;
                rlo = std::min(rlo, cm); rhi = std::max(rhi, cm);
                clo = std::min(clo, cn); chi = std::max(chi, cn);
                static const i64 dm[4] = {1, -1, 0, 0};
                static const i64 dn[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    i64 nm = cm + dm[d], nn = cn + dn[d];
                    if (nm < 0) continue; // row -1 margin is the known convention row
                    if (in_plane(nm, nn)) continue;
                    if (!g.in_range(nm, nn) || !g.at(nm, nn).known) {
                        touches_unknown = true;
                        continue;
                    }
                    if (!g.at(nm, nn).is(0) || comp[cidx(nm, nn)] >= 0) continue;
                    comp[cidx(nm, nn)] = id;
                    stack.push_back({nm, nn});
                }
            }

            WindowRecord rec;
            rec.top = rlo;
            rec.left = clo;
            rec.side = std::max(rhi - rlo, chi - clo) + 1;
            bool is_square = (rhi - rlo == chi - clo) &&
                             count == static_cast<size_t>(rec.side) * static_cast<size_t>(rec.side);
            if (!touches_unknown && !is_square) {
                std::ostringstream os;
                os << "detect_windows: maximal zero region at rows [" << rlo << "," << rhi
                   << "] cols [" << clo << "," << chi << "] with Known margin is not a filled square";
                throw std::logic_error(os.str());
            }
            bool ring_known = true;
            for (int e = 0; e < 4 && !rec.infinite; ++e)
                for (Cell c : inner_frame(w, rec, static_cast<FrameEdge>(e)))
                    ring_known &= c.known;
            rec.complete = !touches_unknown && ring_known;
            for (int e = 0; e < 4; ++e) {
                auto edge = static_cast<FrameEdge>(e);
                auto inner = inner_frame(w, rec, edge);
                auto outer = outer_frame(w, rec, edge);
                rec.inner_known[e] = std::all_of(inner.begin(), inner.end(), [](Cell c) { return c.known; });
                rec.outer_known[e] = std::all_of(outer.begin(), outer.end(), [](Cell c) { return c.known; });
                auto ratio = geometric_ratio(inner, w.p());
                rec.inner_geometric[e] = ratio.has_value();
                switch (edge) {
                    case FrameEdge::North: rec.P = ratio; break;
                    case FrameEdge::West: rec.Q = ratio; break;
                    case FrameEdge::East: rec.R = ratio; break;
                    case FrameEdge::South: rec.S = ratio; break;
                }
            }
            out.push_back(rec);
        }
    }
    return out;
}

} // namespace nwall
