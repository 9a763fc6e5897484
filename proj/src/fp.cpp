#include "nwall/fp.hpp"

namespace nwall {

namespace {

u64 powmod_u64(u64 a, u64 e, u64 p) {
    u64 acc = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) acc = mulmod(acc, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return acc;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    // This base set is deterministic below 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Fp binomial(Rational a, Rational b, Prime p) {
    Fp zero = Fp::raw(0, p.value());
    if (!a.integral() || !b.integral()) return zero;
    i64 an = a.num, bn = b.num;
    if (an < 0 || bn < 0 || an < bn) return zero;
    // Lucas: multiply C(a_i, b_i) over base-p digits.
    u64 pv = p.value();
    u64 av = static_cast<u64>(an), bv = static_cast<u64>(bn);
    Fp acc = Fp::raw(1, pv);
    while (av > 0 || bv > 0) {
        u64 ad = av % pv, bd = bv % pv;
        if (bd > ad) return zero;
        // C(ad, bd) with ad < p: factorials stay below p, no wraparound tricks needed.
        Fp num = Fp::raw(1, pv), den = Fp::raw(1, pv);
        for (u64 k = 0; k < bd; ++k) {
            num *= Fp::raw((ad - k) % pv, pv);
            den *= Fp::raw((k + 1) % pv, pv);
        }
        acc *= num / den;
        av /= pv;
        bv /= pv;
    }
    return acc;
}

} // namespace nwall
