#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nwall/fp.hpp"

namespace nwall {

// What a sequence looks like beyond its stored support, per side.
enum class Ext : std::uint8_t {
    Undefined, // entries outside the support are unknown
    Zero,      // entries outside the support are 0
};

// A sequence over F_p with an explicit index window [lo, hi). Models finite
// sequences (Undefined/Undefined), two-sided zero paddings like S-tilde read
// as infinite objects (Zero/Zero), and one-sided prefixes S^L (Zero/Undefined).
class Seq {
public:
    Seq(Prime p, i64 lo, std::vector<u64> values, Ext left = Ext::Undefined, Ext right = Ext::Undefined);

    static Seq finite(Prime p, std::vector<u64> values, i64 lo = 0) {
        return Seq(p, lo, std::move(values));
    }
    static Seq zero_extended(Prime p, std::vector<u64> values, i64 lo = 0) {
        return Seq(p, lo, std::move(values), Ext::Zero, Ext::Zero);
    }

    Prime prime() const { return Prime(p_); }
    u64 p() const { return p_; }
    i64 lo() const { return lo_; }
    i64 hi() const { return lo_ + static_cast<i64>(vals_.size()); }
    i64 size() const { return static_cast<i64>(vals_.size()); }
    Ext left_ext() const { return left_; }
    Ext right_ext() const { return right_; }

    bool defined(i64 i) const {
        if (i < lo_) return left_ != Ext::Undefined;
        if (i >= hi()) return right_ != Ext::Undefined;
        return true;
    }
    // All of [a, b] defined (a <= b).
    bool defined_range(i64 a, i64 b) const {
        if (a < lo_ && left_ == Ext::Undefined) return false;
        if (b >= hi() && right_ == Ext::Undefined) return false;
        return true;
    }
    // Requires defined(i).
    u64 at(i64 i) const {
        if (i < lo_ || i >= hi()) return 0; // a defined out-of-support entry is a zero extension
        return vals_[static_cast<size_t>(i - lo_)];
    }
    Fp fp_at(i64 i) const { return Fp::raw(at(i), p_); }

    const std::vector<u64>& values() const { return vals_; }

    i64 first_nonzero() const; // index, or hi() if the support is all zero
    i64 last_nonzero() const;  // index, or lo()-1 if the support is all zero

private:
    u64 p_;
    i64 lo_;
    std::vector<u64> vals_;
    Ext left_, right_;
};

// A uniform k-morphism on the alphabet {0, .., alphabet_size-1}.
class Morphism1D {
public:
    Morphism1D(u64 alphabet_size, std::vector<std::vector<u64>> images);
    u64 alphabet_size() const { return alphabet_; }
    u64 factor() const { return k_; }
    const std::vector<u64>& image(u64 letter) const { return images_[letter]; }
    bool prolongable(u64 letter) const { return images_[letter][0] == letter; }

private:
    u64 alphabet_;
    u64 k_;
    std::vector<std::vector<u64>> images_;
};

// A uniform d-coding from {0, .., in_alphabet-1} into arbitrary letters.
class Coding1D {
public:
    Coding1D(u64 in_alphabet, std::vector<std::vector<u64>> images);
    u64 factor() const { return d_; }
    std::vector<u64> apply(const std::vector<u64>& word) const;

private:
    u64 d_;
    std::vector<std::vector<u64>> images_;
};

// First `len` letters of lim phi^n(seed). Throws if seed is not prolongable.
std::vector<u64> fixed_point(const Morphism1D& m, u64 seed, size_t len);

// The p-Cantor morphism phi_p(n)_i = n * C(p_2, i/2) and its fixed point.
Morphism1D cantor_morphism(Prime p);
Seq cantor(Prime p, size_t len);

// The pseudo-p-Singer morphism phi_p(n)_i = n * C(p_2, i), the 2p-coding
// tau_p(n)_i = n * C(p_2+1, i/2), and the p-Singer sequence tau(phi^inf(1)).
Morphism1D singer_morphism(Prime p);
Coding1D singer_coding(Prime p);
Seq pseudo_singer(Prime p, size_t len);
Seq singer(Prime p, size_t len);

// (r,a)-geometric transform: entry i multiplied by a*r^i.
Seq geometric_transform(const Seq& s, Fp r, Fp a);

// Surgery on finite sequences. reverse_finite rebases to [0, n).
Seq reverse_finite(const Seq& s);
Seq concat(const Seq& a, const Seq& b);                  // support [0, |a|+|b|)
Seq zero_pad_both(const Seq& s, size_t amount);          // S-tilde style padding
Seq left_zero_extend(const Seq& s);                      // S^L: zero for i < lo
Seq zeros(Prime p, size_t len);

// Truncated multiplicative inverse: u_0 = 1/s_0, u_m = -(sum s_j u_{m-j})/s_0.
// Requires s defined on [0, len) with s_0 != 0.
Seq laurent_inverse(const Seq& s, size_t len);

// Truncated product of prefix power series (support [0, len)).
Seq series_product(const Seq& a, const Seq& b, size_t len);

// Plain-text format: "p=<p> lo=<lo>" header plus one line of residues.
std::string seq_to_text(const Seq& s);
Seq seq_from_text(const std::string& text);

} // namespace nwall
