#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nwall {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

// An odd prime modulus, validated at construction.
class Prime {
public:
    explicit Prime(u64 p) : p_(p) {
        if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
            throw std::invalid_argument("Prime: " + std::to_string(p) + " is not an odd prime");
    }
    u64 value() const { return p_; }
    // (p-1)/2, written p_2 throughout.
    u64 half() const { return (p_ - 1) / 2; }
    friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }
    friend bool operator!=(Prime a, Prime b) { return a.p_ != b.p_; }

private:
    u64 p_;
};

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

// Residue with its modulus attached; operations refuse to mix moduli.
struct Fp {
    u64 v = 0;
    u64 p = 0;

    Fp() = default;
    Fp(u64 value, Prime pr) : v(value % pr.value()), p(pr.value()) {}
    static Fp from_int(i64 value, Prime pr) {
        i64 m = static_cast<i64>(pr.value());
        i64 r = value % m;
        if (r < 0) r += m;
        return raw(static_cast<u64>(r), pr.value());
    }
    static Fp raw(u64 value, u64 modulus) {
        Fp x;
        x.v = value;
        x.p = modulus;
        return x;
    }

    bool is_zero() const { return v == 0; }

    friend Fp operator+(Fp a, Fp b) { a.check(b); return raw(a.v + b.v >= a.p ? a.v + b.v - a.p : a.v + b.v, a.p); }
    friend Fp operator-(Fp a, Fp b) { a.check(b); return raw(a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p); }
    friend Fp operator*(Fp a, Fp b) { a.check(b); return raw(mulmod(a.v, b.v, a.p), a.p); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    Fp operator-() const { return raw(v == 0 ? 0 : p - v, p); }

    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    Fp& operator/=(Fp b) { return *this = *this / b; }

    friend bool operator==(Fp a, Fp b) { a.check(b); return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

    // Extended Euclid. Fermat's x^(p-2) is kept as a cross-check in tests.
    Fp inv() const {
        if (v == 0) throw std::domain_error("Fp::inv: inverse of zero");
        i64 t = 0, new_t = 1;
        i64 r = static_cast<i64>(p), new_r = static_cast<i64>(v);
        while (new_r != 0) {
            i64 q = r / new_r;
            i64 tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += static_cast<i64>(p);
        return raw(static_cast<u64>(t), p);
    }

    // Square-and-multiply; negative exponents go through the inverse.
    Fp pow(i64 e) const {
        if (e < 0) return inv().pow(-e);
        Fp base = *this, acc = raw(1 % p, p);
        u64 k = static_cast<u64>(e);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

private:
    void check(Fp b) const {
        if (p != b.p) throw std::invalid_argument("Fp: mixed moduli");
    }
};

// Exact rational with denominator 1 or 2; enough for the half-integer
// binomial arguments.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational(i64 n) : num(n), den(1) {}
    Rational(i64 n, i64 d) : num(n), den(d) {
        if (d != 1 && d != 2) throw std::invalid_argument("Rational: denominator must be 1 or 2");
        if (den == 2 && num % 2 == 0) { num /= 2; den = 1; }
    }
    static Rational half(i64 n) { return Rational(n, 2); }
    bool integral() const { return den == 1; }
};

// C(a,b) mod p for integer a,b with a >= b >= 0 (via Lucas); 0 for every
// other argument, including genuine half-integers.
Fp binomial(Rational a, Rational b, Prime p);

} // namespace nwall
