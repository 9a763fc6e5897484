#pragma once

#include <map>
#include <string>
#include <vector>

#include "nwall/fp.hpp"

namespace nwall {

struct CheckMismatch {
    i64 m = 0, n = 0;
    std::string expected, actual;
};

struct CheckResult {
    std::string check;
    std::map<std::string, i64> params; // p, h, seed, trials, levels as applicable
    bool pass = true;
    std::vector<CheckMismatch> mismatches; // capped; first counterexamples with context
    i64 millis = 0;
    std::string note;

    void fail(i64 m, i64 n, std::string expected, std::string actual);
};

// Profile of the padded Cantor wall against Pi(Phi_p^h(A)), cellwise.
CheckResult check_profile_theorem(u64 p, int h);

// Closed forms for the four parity classes of the one-level padded wall,
// plus their nonzeroness.
CheckResult check_base_case(u64 p);

// The eight coefficient recurrences against their closed forms, initial
// values, nonzeroness, and the cross-step product identities.
CheckResult check_recurrence_forms(u64 p);

// Frame lemmata on the padded Cantor wall: corner-overlap window pairs and
// triples, their frame shapes, the rotated-profile identity, and the
// south-outer-frame formulas.
CheckResult check_window_lemmata(u64 p, int h);

// Randomized identities for generic walls: scaling, reflection, rotation of
// triangular portions, inverse columns, and the block transpose identity.
CheckResult check_generic_identities(u64 p, int trials, u64 seed);

// Engine vs oracle on random sequences, plus square-window/frame assertions.
CheckResult check_oracle_equivalence(u64 p, int trials, u64 seed);

// Box counts: digit-parity counts, frame-variant recurrence and closed form,
// and the sandwich against the wall profile.
CheckResult check_fractal_counts(u64 p, int levels, int wall_levels);

struct SuiteOptions {
    std::vector<std::string> filters; // substring match on check names; empty = all
    std::vector<u64> primes{3, 5};
    u64 seed = 271828;
    int trials = 50;
    bool timing = false; // emit measured millis (breaks byte-identical reports)
};

std::vector<CheckResult> run_suite(const SuiteOptions& opt);

std::string report_to_json(const std::vector<CheckResult>& results);
bool all_pass(const std::vector<CheckResult>& results);

} // namespace nwall
