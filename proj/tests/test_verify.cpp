#include "doctest.h"

#include <iostream>

#include "nwall/verify.hpp"

using namespace nwall;

namespace {

void report(const CheckResult& r) {
    if (r.pass) return;
    std::cout << "FAILED " << r.check << " params:";
    for (auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
    std::cout << "\n";
    for (auto& m : r.mismatches)
        std::cout << "  at (" << m.m << "," << m.n << ") expected " << m.expected << " got "
                  << m.actual << "\n";
    if (!r.note.empty()) std::cout << "  note: " << r.note << "\n";
}

void expect_pass(const CheckResult& r) {
    report(r);
    CHECK(r.pass);
}

} // namespace

TEST_CASE("profile theorem small cases") {
    expect_pass(check_profile_theorem(3, 0));
    expect_pass(check_profile_theorem(3, 1));
    expect_pass(check_profile_theorem(3, 2));
    expect_pass(check_profile_theorem(5, 1));
    expect_pass(check_profile_theorem(7, 1));
}

TEST_CASE("base case") {
    expect_pass(check_base_case(3));
    expect_pass(check_base_case(5));
    expect_pass(check_base_case(7));
}

TEST_CASE("recurrence forms") {
    expect_pass(check_recurrence_forms(3));
    expect_pass(check_recurrence_forms(5));
    expect_pass(check_recurrence_forms(7));
}

TEST_CASE("oracle equivalence small") {
    expect_pass(check_oracle_equivalence(3, 15, 42));
    expect_pass(check_oracle_equivalence(5, 15, 42));
}

TEST_CASE("section 7 small") {
    expect_pass(check_generic_identities(3, 10, 42));
    expect_pass(check_generic_identities(5, 10, 42));
}

TEST_CASE("window lemmata smallest cases") {
    expect_pass(check_window_lemmata(3, 1));
    expect_pass(check_window_lemmata(5, 1));
}

TEST_CASE("fractal counts") {
    expect_pass(check_fractal_counts(3, 6, 3));
    expect_pass(check_fractal_counts(5, 4, 1));
}

TEST_CASE("suite filtering and determinism") {
    SuiteOptions opt;
    opt.primes = {3};
    opt.trials = 5;
    opt.filters = {"base_case", "recurrence"};
    auto results = run_suite(opt);
    REQUIRE(results.size() == 2);
    CHECK(results[0].check == "base_case");
    CHECK(results[1].check == "recurrence_forms");
    CHECK(all_pass(results));
    std::string j1 = report_to_json(results);
    std::string j2 = report_to_json(run_suite(opt));
    CHECK(j1 == j2); // byte-identical
    CHECK(j1.find("\"millis\": 0") != std::string::npos);
}
