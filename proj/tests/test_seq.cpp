#include "doctest.h"

#include <random>

#include "nwall/seq.hpp"

using namespace nwall;

namespace {

std::vector<u64> digits(const char* s) {
    std::vector<u64> out;
    for (; *s; ++s) out.push_back(static_cast<u64>(*s - '0'));
    return out;
}

u64 ipow(u64 b, u64 e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

TEST_CASE("fixed point of thue-morse") {
    Morphism1D tm(2, {{0, 1}, {1, 0}});
    CHECK(fixed_point(tm, 0, 8) == digits("01101001")); // three iterations by hand
    CHECK(fixed_point(tm, 0, 1) == digits("0"));
    CHECK_THROWS(fixed_point(tm, 2, 4));
}

TEST_CASE("non-prolongable seed") {
    Morphism1D m(2, {{1, 0}, {1, 1}});
    CHECK_THROWS(fixed_point(m, 0, 4));
    CHECK(fixed_point(m, 1, 3) == digits("111"));
}

TEST_CASE("classical cantor rule") {
    Morphism1D c(2, {{0, 0, 0}, {1, 0, 1}});
    CHECK(fixed_point(c, 1, 9) == digits("101000101"));
}

TEST_CASE("fixed point idempotent under longer expansion") {
    Morphism1D tm(2, {{0, 1}, {1, 0}});
    auto w16 = fixed_point(tm, 0, 16);
    auto w7 = fixed_point(tm, 0, 7);
    CHECK(std::equal(w7.begin(), w7.end(), w16.begin()));
}

TEST_CASE("p-cantor examples") {
    Prime p7(7);
    auto c = cantor(p7, 7);
    CHECK(c.values() == digits("1030301")); // the morphism image of 1
    CHECK(c.at(0) == 1);

    // entries p^h .. 2p^h - 1 are all zero
    for (u64 pv : {3ull, 5ull, 7ull}) {
        Prime p(pv);
        size_t len = pv * pv * pv;
        auto cp = cantor(p, 2 * len);
        for (u64 h = 1; pv * ipow(pv, h - 1) <= len; ++h) {
            u64 ph = ipow(pv, h);
            for (u64 i = ph; i < 2 * ph; ++i) CHECK(cp.at(static_cast<i64>(i)) == 0);
        }
    }
}

TEST_CASE("cantor symmetry c_i = c_(p^k-1-i)") {
    for (u64 pv : {3ull, 5ull, 7ull}) {
        Prime p(pv);
        u64 n = pv * pv * pv;
        auto c = cantor(p, n);
        for (u64 pk = pv; pk <= n; pk *= pv)
            for (u64 i = 0; i < pk; ++i)
                CHECK(c.at(static_cast<i64>(i)) == c.at(static_cast<i64>(pk - 1 - i)));
    }
}

TEST_CASE("cantor self-similarity (p copies scaled by binomials)") {
    for (u64 pv : {3ull, 5ull, 7ull}) {
        Prime p(pv);
        u64 n = pv * pv * pv;
        auto c = cantor(p, n);
        u64 block = n / pv;
        for (u64 j = 0; j < pv; ++j) {
            Fp scale = binomial(Rational(static_cast<i64>(p.half())), Rational(static_cast<i64>(j), 2), p);
            for (u64 i = 0; i < block; ++i)
                CHECK(c.at(static_cast<i64>(j * block + i)) ==
                      (scale * c.fp_at(static_cast<i64>(i))).v);
        }
    }
}

TEST_CASE("p-singer examples") {
    Prime p7(7);
    auto s = singer(p7, 14);
    CHECK(s.values() == digits("10406040100000")); // tau_7(1)
    CHECK(s.at(0) == 1);
    auto s243 = singer(p7, 243);
    for (i64 i = 1; i < 243; i += 2) CHECK(s243.at(i) == 0); // odd entries vanish
}

TEST_CASE("singer symmetry s_i = s_(p^k+1-i)") {
    for (u64 pv : {3ull, 5ull, 7ull}) {
        Prime p(pv);
        u64 n = pv * pv * pv + 2;
        auto s = singer(p, n);
        for (u64 pk = pv; pk + 2 <= n; pk *= pv)
            for (u64 i = 0; i <= pk + 1; ++i)
                CHECK(s.at(static_cast<i64>(i)) == s.at(static_cast<i64>(pk + 1 - i)));
    }
}

TEST_CASE("pseudo-singer prefix for p=7") {
    Prime p7(7);
    auto ps = pseudo_singer(p7, 7);
    CHECK(ps.values() == digits("1331000"));
}

TEST_CASE("geometric transform") {
    Prime p3(3);
    auto c = cantor(p3, 9);
    SUBCASE("identity") {
        auto t = geometric_transform(c, Fp(1, p3), Fp(1, p3));
        CHECK(t.values() == c.values());
    }
    SUBCASE("zero a") {
        auto t = geometric_transform(c, Fp(2, p3), Fp(0, p3));
        for (i64 i = 0; i < 9; ++i) CHECK(t.at(i) == 0);
    }
    SUBCASE("elementwise oracle") {
        Fp r(2, p3), a(2, p3);
        auto t = geometric_transform(c, r, a);
        for (i64 i = 0; i < 9; ++i)
            CHECK(t.at(i) == (a * r.pow(i) * c.fp_at(i)).v);
    }
    SUBCASE("negative support indices") {
        Seq s(p3, -2, {1, 2, 1, 0, 2});
        Fp r(2, p3), a(1, p3);
        auto t = geometric_transform(s, r, a);
        for (i64 i = -2; i < 3; ++i)
            CHECK(t.at(i) == (a * r.pow(i) * s.fp_at(i)).v);
    }
}

TEST_CASE("surgery") {
    Prime p3(3);
    SUBCASE("reverse of a palindrome") {
        Seq c = Seq::finite(p3, digits("101000101"));
        CHECK(reverse_finite(c).values() == c.values());
    }
    SUBCASE("pad and concat bookkeeping") {
        Seq s = Seq::finite(p3, {1, 2});
        Seq padded = concat(concat(zeros(p3, 3), s), zeros(p3, 3));
        CHECK(padded.size() == 8);
        CHECK(padded.values() == std::vector<u64>{0, 0, 0, 1, 2, 0, 0, 0});
        CHECK(zero_pad_both(s, 3).values() == padded.values());
    }
    SUBCASE("left zero extension") {
        auto cl = left_zero_extend(cantor(p3, 9));
        CHECK(cl.defined(-5));
        CHECK(cl.at(-5) == 0);
        CHECK(!cl.defined(9));
        CHECK(cl.at(0) == 1);
    }
    SUBCASE("reversing an infinite-extension sequence fails") {
        CHECK_THROWS(reverse_finite(left_zero_extend(cantor(p3, 9))));
    }
}

TEST_CASE("laurent inverse") {
    Prime p3(3);
    SUBCASE("identity series") {
        Seq one = Seq::finite(p3, {1, 0, 0, 0, 0});
        auto inv = laurent_inverse(one, 5);
        CHECK(inv.values() == std::vector<u64>{1, 0, 0, 0, 0});
    }
    SUBCASE("hand-unrolled recurrence for (1,1,0,0,...) over F_3") {
        Seq s = Seq::finite(p3, {1, 1, 0, 0, 0, 0});
        auto u = laurent_inverse(s, 6);
        CHECK(u.values() == std::vector<u64>{1, 2, 1, 2, 1, 2});
    }
    SUBCASE("zero constant term rejected") {
        Seq s = Seq::finite(p3, {0, 1, 2});
        CHECK_THROWS_AS(laurent_inverse(s, 3), std::domain_error);
    }
    SUBCASE("inverse of cantor is singer") {
        for (u64 pv : {3ull, 5ull, 7ull}) {
            Prime p(pv);
            size_t len = 500;
            auto u = laurent_inverse(cantor(p, len), len);
            auto s = singer(p, len);
            CHECK(u.values() == s.values());
        }
    }
    SUBCASE("involution on prefixes") {
        std::mt19937_64 rng(12345);
        Prime p5(5);
        for (int t = 0; t < 20; ++t) {
            std::vector<u64> vals(40);
            for (auto& v : vals) v = rng() % 5;
            vals[0] = 1 + rng() % 4;
            Seq s = Seq::finite(p5, vals);
            auto inv2 = laurent_inverse(laurent_inverse(s, 40), 40);
            CHECK(inv2.values() == s.values());
        }
    }
}

TEST_CASE("series identities: theta^2 (1 + t^-2) = 1 and xi^2 = 1 + t^-2") {
    for (u64 pv : {3ull, 5ull, 7ull}) {
        Prime p(pv);
        size_t len = 300;
        Seq theta = cantor(p, len);
        Seq xi = singer(p, len);
        std::vector<u64> onett(len, 0);
        onett[0] = 1;
        if (len > 2) onett[2] = 1;
        Seq one_plus_t2 = Seq::finite(p, onett);

        auto theta2 = series_product(theta, theta, len);
        auto lhs = series_product(theta2, one_plus_t2, len);
        CHECK(lhs.at(0) == 1);
        for (size_t i = 1; i < len; ++i) CHECK(lhs.at(static_cast<i64>(i)) == 0);

        auto xi2 = series_product(xi, xi, len);
        CHECK(xi2.values() == one_plus_t2.values());
    }
}

TEST_CASE("sequence text roundtrip") {
    Prime p5(5);
    Seq s(p5, -3, {1, 0, 4, 2, 3});
    Seq t = seq_from_text(seq_to_text(s));
    CHECK(t.p() == 5);
    CHECK(t.lo() == -3);
    CHECK(t.values() == s.values());
}

TEST_CASE("p=7 morphism image tables") {
    Prime p7(7);
    Morphism1D cm = cantor_morphism(p7);
    const char* cimg[7] = {"0000000", "1030301", "2060602", "3020203",
                           "4050504", "5010105", "6040406"};
    for (u64 n = 0; n < 7; ++n) CHECK(cm.image(n) == digits(cimg[n]));

    Morphism1D sm = singer_morphism(p7);
    const char* simg[7] = {"0000000", "1331000", "2662000", "3223000",
                           "4554000", "5115000", "6446000"};
    for (u64 n = 0; n < 7; ++n) CHECK(sm.image(n) == digits(simg[n]));

    Coding1D tau = singer_coding(p7);
    const char* timg[7] = {"00000000000000", "10406040100000", "20105010200000",
                           "30504050300000", "40203020400000", "50602060500000",
                           "60301030600000"};
    for (u64 n = 0; n < 7; ++n) CHECK(tau.apply({n}) == digits(timg[n]));
}
