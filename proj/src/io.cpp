#include "nwall/io.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace nwall {

namespace {

constexpr char kMagic[4] = {'N', 'W', 'A', 'L'};
constexpr u64 kVersion = 1;
constexpr unsigned char kUndefinedByte = 0xFF;

void put_u64(std::string& out, u64 v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_i64(std::string& out, i64 v) { put_u64(out, static_cast<u64>(v)); }

u64 get_u64(const std::string& in, size_t& pos) {
    if (pos + 8 > in.size()) throw std::invalid_argument("wall_from_bytes: truncated");
    u64 v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<u64>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
    pos += 8;
    return v;
}

i64 get_i64(const std::string& in, size_t& pos) { return static_cast<i64>(get_u64(in, pos)); }

} // namespace

std::string wall_to_bytes(const Wall& w) {
    if (w.p() > 255) throw std::invalid_argument("wall_to_bytes: residues do not fit a byte (p > 255)");
    std::string out(kMagic, 4);
    put_u64(out, kVersion);
    put_u64(out, w.p());
    put_u64(out, w.r0);
    put_u64(out, w.a0);
    put_i64(out, w.grid.row_lo());
    put_i64(out, w.grid.row_hi());
    put_i64(out, w.grid.col_lo());
    put_i64(out, w.grid.col_hi());
    for (i64 m = w.grid.row_lo(); m <= w.grid.row_hi(); ++m)
        for (i64 n = w.grid.col_lo(); n <= w.grid.col_hi(); ++n) {
            Cell c = w.at(m, n);
            out.push_back(static_cast<char>(c.known ? static_cast<unsigned char>(c.v) : kUndefinedByte));
        }
    return out;
}

Wall wall_from_bytes(const std::string& bytes) {
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw std::invalid_argument("wall_from_bytes: bad magic");
    size_t pos = 4;
    u64 version = get_u64(bytes, pos);
    if (version != kVersion) throw std::invalid_argument("wall_from_bytes: unsupported version");
    u64 p = get_u64(bytes, pos);
    u64 r0 = get_u64(bytes, pos);
    u64 a0 = get_u64(bytes, pos);
    i64 row_lo = get_i64(bytes, pos);
    i64 row_hi = get_i64(bytes, pos);
    i64 col_lo = get_i64(bytes, pos);
    i64 col_hi = get_i64(bytes, pos);
    Wall w{WallGrid(Prime(p), row_lo, row_hi, col_lo, col_hi)};
    w.r0 = r0;
    w.a0 = a0;
    size_t need = static_cast<size_t>(w.grid.rows()) * static_cast<size_t>(w.grid.cols());
    if (bytes.size() - pos != need) throw std::invalid_argument("wall_from_bytes: wrong payload size");
    for (i64 m = row_lo; m <= row_hi; ++m)
        for (i64 n = col_lo; n <= col_hi; ++n) {
            auto b = static_cast<unsigned char>(bytes[pos++]);
            if (b == kUndefinedByte)
                w.grid.set(m, n, Cell::undefined());
            else if (b >= p)
                throw std::invalid_argument("wall_from_bytes: residue out of range");
            else
                w.grid.set(m, n, Cell::of(b));
        }
    return w;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::string out((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return out;
}

} // namespace nwall
