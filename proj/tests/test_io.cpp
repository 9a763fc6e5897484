#include "doctest.h"

#include "nwall/engine.hpp"
#include "nwall/io.hpp"
#include "nwall/render.hpp"

using namespace nwall;

TEST_CASE("wall dump roundtrip") {
    Prime p5(5);
    Seq s = Seq::finite(p5, {1, 3, 0, 0, 2, 4, 1, 0, 2});
    Wall w = generate_wall(s, 4);
    std::string bytes = wall_to_bytes(w);
    Wall r = wall_from_bytes(bytes);
    CHECK(r.p() == 5);
    CHECK(r.grid.row_lo() == -2);
    CHECK(r.grid.col_hi() == 8);
    for (i64 m = -2; m <= 4; ++m)
        for (i64 n = 0; n <= 8; ++n) {
            Cell a = w.at(m, n), b = r.at(m, n);
            CHECK(a.known == b.known);
            if (a.known) CHECK(a.v == b.v);
        }
    // dumps are byte-deterministic
    CHECK(bytes == wall_to_bytes(generate_wall(s, 4)));
    CHECK_THROWS(wall_from_bytes(bytes.substr(0, 10)));
    std::string corrupt = bytes;
    corrupt[0] = 'X';
    CHECK_THROWS(wall_from_bytes(corrupt));
}

TEST_CASE("ppm palette") {
    Prime p3(3);
    SUBCASE("all-zero wall renders solid yellow") {
        Seq z = Seq::zero_extended(p3, std::vector<u64>(4, 0));
        Wall w = generate_wall(z, 2);
        std::string img = render_wall_ppm(w, 0, 2, 0, 3);
        std::string head = "P6\n4 3\n255\n";
        REQUIRE(img.substr(0, head.size()) == head);
        for (size_t i = head.size(); i + 2 < img.size(); i += 3) {
            CHECK(static_cast<unsigned char>(img[i]) == 255);
            CHECK(static_cast<unsigned char>(img[i + 1]) == 230);
            CHECK(static_cast<unsigned char>(img[i + 2]) == 0);
        }
    }
    SUBCASE("single Known(2) cell over F_3 is the lightest blue") {
        Wall w{WallGrid(p3, 0, 0, 0, 0)};
        w.grid.set(0, 0, Cell::of(2));
        std::string img = render_wall_ppm(w);
        size_t off = img.size() - 3;
        CHECK(static_cast<unsigned char>(img[off]) == 0);
        CHECK(static_cast<unsigned char>(img[off + 1]) == 224);
        CHECK(static_cast<unsigned char>(img[off + 2]) == 255);
    }
    SUBCASE("undefined cells are mid gray; image dims equal the region") {
        Seq s = Seq::finite(p3, {1, 2, 1});
        Wall w = generate_wall(s, 1);
        std::string img = render_wall_ppm(w, 1, 1, 0, 2);
        std::string head = "P6\n3 1\n255\n";
        REQUIRE(img.substr(0, head.size()) == head);
        // row 1 of a length-3 wall: only column 1 defined
        auto px = [&](int i) {
            size_t o = head.size() + 3 * static_cast<size_t>(i);
            return std::array<int, 3>{img[o] & 0xff, img[o + 1] & 0xff, img[o + 2] & 0xff};
        };
        CHECK(px(0) == std::array<int, 3>{128, 128, 128});
        CHECK(px(2) == std::array<int, 3>{128, 128, 128});
    }
}

TEST_CASE("pgm profile render") {
    Prime p3(3);
    Seq s = Seq::finite(p3, {1, 0, 1});
    Wall w = generate_wall(s, 1);
    std::string img = render_profile_pgm(profile(w));
    std::string head = "P5\n3 4\n255\n"; // rows -2..1
    REQUIRE(img.substr(0, head.size()) == head);
    // row 0: X 0 X -> 0, 255, 0
    size_t row0 = head.size() + 3 * 2;
    CHECK((img[row0] & 0xff) == 0);
    CHECK((img[row0 + 1] & 0xff) == 255);
    CHECK((img[row0 + 2] & 0xff) == 0);
}

TEST_CASE("renders are byte-deterministic") {
    Prime p5(5);
    Seq s = Seq::finite(p5, {1, 3, 0, 0, 2, 4, 1, 0, 2, 2, 3});
    Wall w1 = generate_wall(s, 5);
    Wall w2 = generate_wall(s, 5);
    CHECK(render_wall_ppm(w1) == render_wall_ppm(w2));
    CHECK(render_profile_pgm(profile(w1)) == render_profile_pgm(profile(w2)));
}
