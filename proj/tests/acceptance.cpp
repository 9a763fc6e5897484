// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "nwall/engine.hpp"
#include "nwall/fractal.hpp"
#include "nwall/geometry.hpp"
#include "nwall/render.hpp"
#include "nwall/verify.hpp"

using namespace nwall;

namespace {

int failures = 0;

void report(int id, const char* what, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

u64 ipow(u64 b, int e) {
    u64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Seq random_finite(Prime p, std::mt19937_64& rng, i64 len) {
    std::vector<u64> vals(static_cast<size_t>(len));
    for (auto& v : vals) v = rng() % p.value();
    return Seq::finite(p, std::move(vals));
}

constexpr u64 kSeed = 271828;

std::vector<Wall> criterion_walls; // walls produced by criteria 1-2, reused by 3

// 1: engine == oracle, 200 fixed-seed sequences per prime, lengths 20-60
void criterion1() {
    bool ok = true;
    std::string detail;
    for (u64 pv : {3ull, 5ull, 7ull}) {
        Prime p(pv);
        std::mt19937_64 rng(kSeed + pv);
        for (int t = 0; t < 200 && ok; ++t) {
            i64 len = 20 + static_cast<i64>(rng() % 41);
            Seq s = random_finite(p, rng, len);
            i64 maxrow = (len - 1) / 2;
            Wall eng = generate_wall(s, maxrow);
            Wall ora = oracle_wall(s, maxrow);
            for (i64 m = -2; m <= maxrow && ok; ++m)
                for (i64 n = 0; n < len; ++n) {
                    Cell a = eng.at(m, n), b = ora.at(m, n);
                    if (a.known != b.known || (a.known && a.v != b.v)) {
                        ok = false;
                        detail = "p=" + std::to_string(pv) + " trial=" + std::to_string(t) +
                                 " cell(" + std::to_string(m) + "," + std::to_string(n) + ")";
                        break;
                    }
                }
            if (t % 10 == 0) criterion_walls.push_back(eng);
        }
    }
    report(1, "oracle equivalence (200 random sequences per p in {3,5,7})", ok, detail);
}

// 2: profile theorem at (3,1..5), (5,1..3), (7,1..3)
void criterion2() {
    bool ok = true;
    std::string detail;
    auto run = [&](u64 p, int h) {
        CheckResult r = check_profile_theorem(p, h);
        if (!r.pass && ok) {
            ok = false;
            detail = "p=" + std::to_string(p) + " h=" + std::to_string(h) + " first mismatch at (" +
                     std::to_string(r.mismatches[0].m) + "," + std::to_string(r.mismatches[0].n) + ")";
        }
        i64 ph = static_cast<i64>(ipow(p, h));
        Seq padded = zero_pad_both(cantor(Prime(p), static_cast<size_t>(ph)), static_cast<size_t>(ph));
        criterion_walls.push_back(generate_wall(padded, (3 * ph - 1) / 2));
    };
    for (int h = 1; h <= 5; ++h) run(3, h);
    for (int h = 1; h <= 3; ++h) run(5, h);
    for (int h = 1; h <= 3; ++h) run(7, h);
    report(2, "profile of the padded Cantor wall equals the coded morphism image", ok, detail);
}

// 3: square windows, geometric frames, PS/QR = (-1)^l on every wall from 1-2
void criterion3() {
    bool ok = true;
    std::string detail;
    size_t complete = 0;
    try {
        for (const Wall& w : criterion_walls) {
            auto windows = detect_windows(w); // throws on a non-square Known-margin region
            for (const auto& rec : windows) {
                if (rec.infinite || !rec.complete) continue;
                ++complete;
                for (int e = 0; e < 4 && ok; ++e)
                    if (!rec.inner_geometric[e]) {
                        ok = false;
                        detail = "non-geometric inner frame";
                    }
                if (ok && rec.P && rec.Q && rec.R && rec.S) {
                    Fp lhs = Fp::raw(*rec.P, w.p()) * Fp::raw(*rec.S, w.p()) /
                             (Fp::raw(*rec.Q, w.p()) * Fp::raw(*rec.R, w.p()));
                    Fp want = rec.side % 2 == 0 ? Fp::raw(1, w.p()) : -Fp::raw(1, w.p());
                    if (lhs != want) {
                        ok = false;
                        detail = "PS/QR relation violated";
                    }
                } else if (ok) {
                    ok = false;
                    detail = "missing frame ratio on a complete window";
                }
            }
        }
    } catch (const std::logic_error& e) {
        ok = false;
        detail = e.what();
    }
    if (complete == 0) {
        ok = false;
        detail = "no complete windows seen";
    }
    report(3, "square windows, geometric frames, PS/QR = (-1)^l", ok,
           ok ? std::to_string(complete) + " complete windows" : detail);
}

// 4: series identities to degree 2000
void criterion4() {
    bool ok = true;
    std::string detail;
    const size_t deg = 2000;
    for (u64 pv : {3ull, 5ull, 7ull}) {
        Prime p(pv);
        Seq theta = cantor(p, deg);
        Seq xi = singer(p, deg);
        Seq prod = series_product(theta, xi, deg);
        std::vector<u64> onett(deg, 0);
        onett[0] = 1;
        onett[2] = 1;
        Seq one_plus = Seq::finite(p, onett);
        Seq theta2 = series_product(series_product(theta, theta, deg), one_plus, deg);
        Seq xi2 = series_product(xi, xi, deg);
        for (size_t i = 0; i < deg && ok; ++i) {
            u64 want_one = i == 0 ? 1 : 0;
            if (prod.at(static_cast<i64>(i)) != want_one || theta2.at(static_cast<i64>(i)) != want_one ||
                xi2.at(static_cast<i64>(i)) != onett[i]) {
                ok = false;
                detail = "p=" + std::to_string(pv) + " degree " + std::to_string(i);
            }
        }
        if (laurent_inverse(theta, deg).values() != xi.values()) {
            ok = false;
            detail = "p=" + std::to_string(pv) + " inverse(cantor) != singer";
        }
    }
    report(4, "Laurent-series inverses and square identities to degree 2000", ok, detail);
}

// 5: exact fractal counts and sandwich
void criterion5() {
    bool ok = true;
    std::string detail;
    for (u64 pv : {3ull, 5ull}) {
        CheckResult r = check_fractal_counts(pv, 6, pv == 3 ? 5 : 3);
        if (!r.pass && ok) {
            ok = false;
            detail = "p=" + std::to_string(pv) + ": " + r.mismatches[0].expected + " got " +
                     r.mismatches[0].actual;
        }
    }
    report(5, "box-count closed forms and sandwich (p in {3,5}, k <= 6)", ok, detail);
}

// 6: dimension estimate within 0.1 of log5/log3 from wall profile counts
void criterion6() {
    Prime p3(3);
    std::vector<u128> counts;
    for (int k = 1; k <= 5; ++k) {
        i64 ph = static_cast<i64>(ipow(3, k));
        Seq padded = zero_pad_both(cantor(p3, static_cast<size_t>(ph)), static_cast<size_t>(ph));
        Wall w = generate_wall(padded, ph - 1);
        auto frag = extract_region(w, 0, ph - 1, ph, 2 * ph - 1);
        counts.push_back(boxes_from_profile(profile(frag.wall), k, p3).count);
    }
    DimEstimate est = box_dim_estimate(counts, p3);
    double target = std::log(5.0) / std::log(3.0);
    bool ok = std::abs(est.deepest - target) <= 0.1 && std::abs(est.slope - target) <= 0.1;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "deepest=%.5f slope=%.5f target=%.5f tol=0.1", est.deepest,
                  est.slope, target);
    report(6, "box dimension estimate (p=3, levels 1..5)", ok, buf);
}

// 7: base-case closed forms and coefficient recurrences for p up to 13
void criterion7() {
    bool ok = true;
    std::string detail;
    for (u64 pv : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        CheckResult base = check_base_case(pv);
        CheckResult rec = check_recurrence_forms(pv);
        if ((!base.pass || !rec.pass) && ok) {
            ok = false;
            const CheckResult& bad = base.pass ? rec : base;
            detail = bad.check + " p=" + std::to_string(pv) + " at (" +
                     std::to_string(bad.mismatches[0].m) + "," + std::to_string(bad.mismatches[0].n) +
                     "): expected " + bad.mismatches[0].expected;
        }
    }
    report(7, "closed forms: base case and coefficient recurrences (p in {3,5,7,11,13})", ok, detail);
}

// 8: randomized generic-wall identities, 100 instances per p in {3,5}
void criterion8() {
    bool ok = true;
    std::string detail;
    for (u64 pv : {3ull, 5ull}) {
        CheckResult r = check_generic_identities(pv, 100, kSeed);
        if (!r.pass && ok) {
            ok = false;
            detail = "p=" + std::to_string(pv) + ": " + r.mismatches[0].expected + " got " +
                     r.mismatches[0].actual;
        }
    }
    report(8, "scaling/reflection/rotation/inverse-column identities (100 fixed-seed instances)", ok,
           detail);
}

// 9: window lemmata at (3,1),(3,2),(5,1),(7,1)
void criterion9() {
    bool ok = true;
    std::string detail;
    for (auto [pv, h] : {std::pair<u64, int>{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        CheckResult r = check_window_lemmata(pv, h);
        if (!r.pass && ok) {
            ok = false;
            detail = "p=" + std::to_string(pv) + " h=" + std::to_string(h) + ": " +
                     r.mismatches[0].expected + " got " + r.mismatches[0].actual;
        }
    }
    report(9, "window frame lemmata incl. rotated profiles and transform conclusions", ok, detail);
}

// 10: byte-identical verify reports and renders
void criterion10() {
    SuiteOptions opt;
    opt.primes = {3, 5};
    opt.trials = 20;
    opt.seed = kSeed;
    std::string r1 = report_to_json(run_suite(opt));
    std::string r2 = report_to_json(run_suite(opt));
    bool ok = r1 == r2;

    Prime p3(3);
    Seq padded = zero_pad_both(cantor(p3, 27), 27);
    Wall w1 = generate_wall(padded, 40);
    Wall w2 = generate_wall(padded, 40);
    ok = ok && render_wall_ppm(w1) == render_wall_ppm(w2) &&
         render_profile_pgm(profile(w1)) == render_profile_pgm(profile(w2));
    report(10, "deterministic verify reports and renders", ok);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
