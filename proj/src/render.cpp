#include "nwall/render.hpp"

#include <sstream>
#include <stdexcept>

namespace nwall {

namespace {

struct Rgb {
    unsigned char r, g, b;
};

Rgb cell_color(Cell c, u64 p) {
    if (!c.known) return {128, 128, 128};
    if (c.v == 0) return {255, 230, 0};
    u64 green = p == 3 ? (c.v == 1 ? 64 : 224)
                       : 64 + (160 * (c.v - 1)) / (p - 2);
    return {0, static_cast<unsigned char>(green), 255};
}

std::string ppm_header(i64 width, i64 height) {
    std::ostringstream os;
    os << "P6\n" << width << " " << height << "\n255\n";
    return os.str();
}

} // namespace

std::string render_wall_ppm(const Wall& w, i64 row_lo, i64 row_hi, i64 col_lo, i64 col_hi) {
    if (row_hi < row_lo || col_hi < col_lo) throw std::invalid_argument("render_wall_ppm: empty region");
    std::string out = ppm_header(col_hi - col_lo + 1, row_hi - row_lo + 1);
    out.reserve(out.size() + static_cast<size_t>((row_hi - row_lo + 1) * (col_hi - col_lo + 1)) * 3);
    for (i64 m = row_lo; m <= row_hi; ++m)
        for (i64 n = col_lo; n <= col_hi; ++n) {
            Rgb c = cell_color(w.at(m, n), w.p());
            out.push_back(static_cast<char>(c.r));
            out.push_back(static_cast<char>(c.g));
            out.push_back(static_cast<char>(c.b));
        }
    return out;
}

std::string render_wall_ppm(const Wall& w) {
    return render_wall_ppm(w, w.grid.row_lo(), w.grid.row_hi(), w.grid.col_lo(), w.grid.col_hi());
}

std::string render_profile_ppm(const ProfileGrid& g) {
    std::string out = ppm_header(g.cols(), g.rows());
    for (i64 m = g.row_lo(); m <= g.row_hi(); ++m)
        for (i64 n = g.col_lo(); n <= g.col_hi(); ++n) {
            ProfileCell c = g.at(m, n);
            Rgb rgb = c == ProfileCell::Zero ? Rgb{255, 230, 0}
                    : c == ProfileCell::X    ? Rgb{0, 64, 255}
                                             : Rgb{128, 128, 128};
            out.push_back(static_cast<char>(rgb.r));
            out.push_back(static_cast<char>(rgb.g));
            out.push_back(static_cast<char>(rgb.b));
        }
    return out;
}

std::string render_profile_pgm(const ProfileGrid& g) {
    std::ostringstream os;
    os << "P5\n" << g.cols() << " " << g.rows() << "\n255\n";
    std::string out = os.str();
    for (i64 m = g.row_lo(); m <= g.row_hi(); ++m)
        for (i64 n = g.col_lo(); n <= g.col_hi(); ++n) {
            ProfileCell c = g.at(m, n);
            out.push_back(c == ProfileCell::Zero ? static_cast<char>(255)
                        : c == ProfileCell::X    ? static_cast<char>(0)
                                                 : static_cast<char>(128));
        }
    return out;
}

} // namespace nwall
