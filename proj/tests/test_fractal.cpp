#include "doctest.h"

#include <cmath>

#include "nwall/engine.hpp"
#include "nwall/fractal.hpp"
#include "nwall/geometry.hpp"

using namespace nwall;

TEST_CASE("boxes_from_profile") {
    Prime p3(3);
    SUBCASE("all-X profile keeps p^2k boxes") {
        ProfileGrid pg(0, 8, 0, 8);
        for (i64 i = 0; i < 9; ++i)
            for (i64 j = 0; j < 9; ++j) pg.set(i, j, ProfileCell::X);
        BoxLevel b = boxes_from_profile(pg, 2, p3);
        CHECK(b.count == 81);
    }
    SUBCASE("Pi(Phi_0,3(A)) keeps 5 boxes") {
        BoxLevel b = boxes_from_profile(pi_coding(expand2d(phi_zero_variant(p3), Letter::A, 1)), 1, p3);
        CHECK(b.count == 5);
    }
    SUBCASE("size mismatch is an error") {
        ProfileGrid pg(0, 3, 0, 3);
        CHECK_THROWS(boxes_from_profile(pg, 1, p3));
    }
}

TEST_CASE("closed form counts") {
    SUBCASE("p=3 small levels") {
        auto c1 = closed_form_counts(Prime(3), 1);
        CHECK(static_cast<u64>(c1.n_k) == 5);
        CHECK(static_cast<u64>(c1.a_k) == 9);
        auto c2 = closed_form_counts(Prime(3), 2);
        CHECK(static_cast<u64>(c2.n_k) == 25);
        CHECK(static_cast<u64>(c2.a_k) == 77); // 5*9 + 2*8*2, unrolled by hand
        CHECK(c2.a_k == c2.a_k_closed);
    }
    SUBCASE("p=5 level 1") {
        auto c = closed_form_counts(Prime(5), 1);
        CHECK(static_cast<u64>(c.n_k) == 13);
    }
    SUBCASE("recurrence equals closed form for k <= 12, p in {3,5,7,11}") {
        for (u64 pv : {3ull, 5ull, 7ull, 11ull}) {
            for (int k = 1; k <= 12; ++k) {
                auto c = closed_form_counts(Prime(pv), k);
                CHECK(c.a_k == c.a_k_closed);
            }
        }
    }
}

TEST_CASE("morphism counts match closed forms") {
    for (u64 pv : {3ull, 5ull}) {
        Prime p(pv);
        Morphism2D phi0 = phi_zero_variant(p);
        Morphism2D phiF = phi_frame_variant(p);
        for (int k = 1; k <= 6; ++k) {
            auto cf = closed_form_counts(p, k);
            CHECK(nonzero_count(phi0, Letter::A, k) == cf.n_k);
            CHECK(nonzero_count(phiF, Letter::A, k) == cf.a_k);
        }
    }
}

TEST_CASE("sandwich and monotone refinement for the morphism profile") {
    Prime p3(3);
    Morphism2D phi = phi_p(p3);
    Morphism2D phi0 = phi_zero_variant(p3);
    Morphism2D phiF = phi_frame_variant(p3);
    for (int k = 1; k <= 6; ++k) {
        auto cf = closed_form_counts(p3, k);
        u128 wall_boxes = nonzero_count(phi, Letter::A, k);
        CHECK(cf.n_k <= wall_boxes);
        CHECK(wall_boxes <= cf.a_k);
    }
    // setwise: nonzero(phi_0^k) in nonzero(Pi(phi^k)) in nonzero(phi_F^k)
    for (int k = 1; k <= 3; ++k) {
        Grid2D g0 = expand2d(phi0, Letter::A, k);
        Grid2D g = expand2d(phi, Letter::A, k);
        Grid2D gF = expand2d(phiF, Letter::A, k);
        for (i64 i = 0; i < g.rows(); ++i)
            for (i64 j = 0; j < g.cols(); ++j) {
                if (g0.at(i, j) != Letter::Zero) CHECK(g.at(i, j) != Letter::Zero);
                if (g.at(i, j) != Letter::Zero) CHECK(gF.at(i, j) != Letter::Zero);
            }
    }
    // monotone refinement: a retained box at level k+1 sits inside one at level k
    for (int k = 1; k <= 3; ++k) {
        Grid2D g = expand2d(phi, Letter::A, k);
        Grid2D g2 = expand2d(phi, Letter::A, k + 1);
        for (i64 i = 0; i < g2.rows(); ++i)
            for (i64 j = 0; j < g2.cols(); ++j)
                if (g2.at(i, j) != Letter::Zero) CHECK(g.at(i / 3, j / 3) != Letter::Zero);
    }
}

TEST_CASE("box dimension estimator") {
    Prime p3(3);
    double target = std::log(5.0) / std::log(3.0);
    SUBCASE("exact N_k inputs give the formula value exactly") {
        std::vector<u128> counts;
        for (int k = 1; k <= 6; ++k) counts.push_back(closed_form_counts(p3, k).n_k);
        DimEstimate est = box_dim_estimate(counts, p3);
        CHECK(est.deepest == doctest::Approx(target).epsilon(1e-12));
        CHECK(est.slope == doctest::Approx(target).epsilon(1e-12));
    }
    SUBCASE("errors") {
        CHECK_THROWS(box_dim_estimate({}, p3));
        CHECK_THROWS(box_dim_estimate({u128(5)}, p3));
    }
}

TEST_CASE("wall-profile box counts match the morphism counts") {
    Prime p3(3);
    Morphism2D phi = phi_p(p3);
    for (int h = 1; h <= 3; ++h) {
        i64 ph = 1;
        for (int i = 0; i < h; ++i) ph *= 3;
        Seq padded = zero_pad_both(cantor(p3, static_cast<size_t>(ph)), static_cast<size_t>(ph));
        Wall w = generate_wall(padded, ph - 1);
        auto frag = extract_region(w, 0, ph - 1, ph, 2 * ph - 1);
        BoxLevel b = boxes_from_profile(profile(frag.wall), h, p3);
        CHECK(b.count == nonzero_count(phi, Letter::A, h));
    }
}
