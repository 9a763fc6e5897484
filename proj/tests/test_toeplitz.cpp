#include "doctest.h"

#include "nwall/toeplitz.hpp"

using namespace nwall;

TEST_CASE("toeplitz matrix layout") {
    Prime p3(3);
    SUBCASE("m = 0 is the 1x1 matrix (s_n)") {
        Seq s = Seq::finite(p3, {1, 2, 0});
        auto mat = toeplitz_matrix(s, 1, 0);
        REQUIRE(mat);
        CHECK(mat->n == 1);
        CHECK(mat->at(0, 0).v == 2);
    }
    SUBCASE("constant ones") {
        Seq s = Seq::finite(p3, {1, 1, 1, 1});
        auto mat = toeplitz_matrix(s, 1, 1);
        REQUIRE(mat);
        for (i64 i = 0; i < 2; ++i)
            for (i64 j = 0; j < 2; ++j) CHECK(mat->at(i, j).v == 1);
    }
    SUBCASE("cantor(3) at n=1, m=1 reads entries s_0..s_2 = 1,0,1") {
        Seq c = cantor(p3, 9);
        auto mat = toeplitz_matrix(c, 1, 1);
        REQUIRE(mat);
        CHECK(mat->at(0, 0).v == 0); // s_1
        CHECK(mat->at(0, 1).v == 1); // s_2
        CHECK(mat->at(1, 0).v == 1); // s_0
        CHECK(mat->at(1, 1).v == 0); // s_1
    }
    SUBCASE("undefined index propagates") {
        Seq s = Seq::finite(p3, {1, 2, 0});
        CHECK(!toeplitz_matrix(s, 0, 1)); // needs s_-1
        CHECK(toeplitz_matrix(left_zero_extend(s), 0, 1)); // zero extension defines it
    }
}

TEST_CASE("determinants") {
    Prime p3(3);
    SUBCASE("identity") {
        MatFp id{3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}};
        CHECK(det_mod_p(id).v == 1);
    }
    SUBCASE("antidiagonal 2x2 is -1") {
        MatFp m{3, 2, {0, 1, 1, 0}};
        CHECK(det_mod_p(m).v == 2);
    }
    SUBCASE("repeated rows vanish") {
        MatFp m{3, 3, {1, 2, 0, 1, 2, 0, 2, 1, 1}};
        CHECK(det_mod_p(m).v == 0);
    }
    SUBCASE("cofactor cross-check on random 3x3 over F_5") {
        Prime p5(5);
        u64 seed = 99;
        auto next = [&] { seed = seed * 6364136223846793005ull + 1442695040888963407ull; return (seed >> 33) % 5; };
        for (int t = 0; t < 50; ++t) {
            MatFp m{5, 3, {}};
            m.a.resize(9);
            for (auto& v : m.a) v = next();
            auto c = [&](i64 i, i64 j) { return m.at(i, j); };
            Fp cof = c(0, 0) * (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1)) -
                     c(0, 1) * (c(1, 0) * c(2, 2) - c(1, 2) * c(2, 0)) +
                     c(0, 2) * (c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0));
            CHECK(det_mod_p(m) == cof);
        }
    }
}

TEST_CASE("oracle wall shape and conventions") {
    Prime p3(3);
    Seq s = Seq::finite(p3, {1, 2, 0, 1, 1, 2, 0});
    i64 len = s.size();
    Wall w = oracle_wall(s, 5);
    SUBCASE("row -1 all ones, row -2 zero") {
        for (i64 n = 0; n < len; ++n) {
            CHECK(w.at(-1, n).is(1));
            CHECK(w.at(-2, n).is(0));
        }
    }
    SUBCASE("row 0 equals the sequence") {
        for (i64 n = 0; n < len; ++n) CHECK(w.at(0, n).is(s.at(n)));
    }
    SUBCASE("triangle: max row floor((r-1)/2), definedness matches index window") {
        i64 maxrow = (len - 1) / 2;
        for (i64 m = 0; m <= 5; ++m)
            for (i64 n = 0; n < len; ++n)
                CHECK(w.at(m, n).known == (n - m >= 0 && n + m <= len - 1));
        for (i64 n = 0; n < len; ++n)
            CHECK(w.at(maxrow + 1, n).known == false);
    }
}

TEST_CASE("oracle wall of all-zero sequence") {
    Prime p5(5);
    Wall w = oracle_wall(Seq::zero_extended(p5, std::vector<u64>(6, 0)), 4);
    for (i64 m = 0; m <= 4; ++m)
        for (i64 n = 0; n < 6; ++n) CHECK(w.at(m, n).is(0));
    CHECK(w.zero_half_plane);
}

TEST_CASE("determinant invariance under sequence reflection") {
    Prime p5(5);
    Seq s = Seq::finite(p5, {1, 3, 2, 0, 4, 4, 1, 0, 2, 3});
    i64 ell = s.size() - 1;
    Seq r = reverse_finite(s);
    Wall ws = oracle_wall(s, 4);
    Wall wr = oracle_wall(r, 4);
    for (i64 m = 0; m <= 4; ++m)
        for (i64 n = 0; n <= ell; ++n) {
            Cell a = ws.at(m, n), b = wr.at(m, ell - n);
            CHECK(a.known == b.known);
            if (a.known) CHECK(a.v == b.v);
        }
}
