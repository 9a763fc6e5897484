#include "nwall/seq.hpp"

#include <algorithm>
#include <sstream>

namespace nwall {

Seq::Seq(Prime p, i64 lo, std::vector<u64> values, Ext left, Ext right)
    : p_(p.value()), lo_(lo), vals_(std::move(values)), left_(left), right_(right) {
    for (u64& v : vals_) v %= p_;
}

i64 Seq::first_nonzero() const {
    for (i64 i = lo_; i < hi(); ++i)
        if (at(i) != 0) return i;
    return hi();
}

i64 Seq::last_nonzero() const {
    for (i64 i = hi() - 1; i >= lo_; --i)
        if (at(i) != 0) return i;
    return lo_ - 1;
}

Morphism1D::Morphism1D(u64 alphabet_size, std::vector<std::vector<u64>> images)
    : alphabet_(alphabet_size), images_(std::move(images)) {
    if (images_.size() != alphabet_ || images_.empty())
        throw std::invalid_argument("Morphism1D: need one image per letter");
    k_ = images_[0].size();
    for (const auto& w : images_) {
        if (w.size() != k_ || k_ == 0)
            throw std::invalid_argument("Morphism1D: images must share a positive length");
        for (u64 c : w)
            if (c >= alphabet_) throw std::invalid_argument("Morphism1D: image letter out of range");
    }
}

Coding1D::Coding1D(u64 in_alphabet, std::vector<std::vector<u64>> images)
    : images_(std::move(images)) {
    if (images_.size() != in_alphabet || images_.empty())
        throw std::invalid_argument("Coding1D: need one image per letter");
    d_ = images_[0].size();
    for (const auto& w : images_)
        if (w.size() != d_ || d_ == 0)
            throw std::invalid_argument("Coding1D: images must share a positive length");
}

std::vector<u64> Coding1D::apply(const std::vector<u64>& word) const {
    std::vector<u64> out;
    out.reserve(word.size() * d_);
    for (u64 c : word) {
        const auto& img = images_.at(c);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

std::vector<u64> fixed_point(const Morphism1D& m, u64 seed, size_t len) {
    if (seed >= m.alphabet_size()) throw std::invalid_argument("fixed_point: seed out of range");
    if (!m.prolongable(seed)) throw std::invalid_argument("fixed_point: seed is not prolongable");
    std::vector<u64> w{seed};
    if (len == 0) return {};
    // Each pass expands the current prefix; output is capped at len so at
    // most one extra factor-of-k block is ever materialized.
    while (w.size() < len) {
        std::vector<u64> next;
        next.reserve(std::min(len + m.factor(), w.size() * m.factor()));
        for (u64 c : w) {
            const auto& img = m.image(c);
            next.insert(next.end(), img.begin(), img.end());
            if (next.size() >= len) break;
        }
        if (next.size() == w.size()) // factor 1 morphism cannot grow
            throw std::invalid_argument("fixed_point: morphism does not expand");
        w = std::move(next);
    }
    w.resize(len);
    return w;
}

Morphism1D cantor_morphism(Prime p) {
    u64 pv = p.value();
    std::vector<std::vector<u64>> images(pv);
    for (u64 n = 0; n < pv; ++n) {
        images[n].resize(pv);
        for (u64 i = 0; i < pv; ++i) {
            Fp b = binomial(Rational(static_cast<i64>(p.half())), Rational(static_cast<i64>(i), 2), p);
            images[n][i] = (Fp::raw(n, pv) * b).v;
        }
    }
    return Morphism1D(pv, std::move(images));
}

Seq cantor(Prime p, size_t len) {
    return Seq::finite(p, fixed_point(cantor_morphism(p), 1, len));
}

Morphism1D singer_morphism(Prime p) {
    u64 pv = p.value();
    std::vector<std::vector<u64>> images(pv);
    for (u64 n = 0; n < pv; ++n) {
        images[n].resize(pv);
        for (u64 i = 0; i < pv; ++i) {
            Fp b = binomial(Rational(static_cast<i64>(p.half())), Rational(static_cast<i64>(i)), p);
            images[n][i] = (Fp::raw(n, pv) * b).v;
        }
    }
    return Morphism1D(pv, std::move(images));
}

Coding1D singer_coding(Prime p) {
    u64 pv = p.value();
    std::vector<std::vector<u64>> images(pv);
    for (u64 n = 0; n < pv; ++n) {
        images[n].resize(2 * pv);
        for (u64 i = 0; i < 2 * pv; ++i) {
            Fp b = binomial(Rational(static_cast<i64>(p.half() + 1)), Rational(static_cast<i64>(i), 2), p);
            images[n][i] = (Fp::raw(n, pv) * b).v;
        }
    }
    return Coding1D(pv, std::move(images));
}

Seq pseudo_singer(Prime p, size_t len) {
    return Seq::finite(p, fixed_point(singer_morphism(p), 1, len));
}

Seq singer(Prime p, size_t len) {
    size_t blocks = (len + 2 * p.value() - 1) / (2 * p.value());
    std::vector<u64> pre = fixed_point(singer_morphism(p), 1, std::max<size_t>(blocks, 1));
    std::vector<u64> out = singer_coding(p).apply(pre);
    out.resize(len);
    return Seq::finite(p, std::move(out));
}

Seq geometric_transform(const Seq& s, Fp r, Fp a) {
    if (r.p != s.p() || a.p != s.p()) throw std::invalid_argument("geometric_transform: modulus mismatch");
    if (r.is_zero() && s.lo() < 0)
        throw std::invalid_argument("geometric_transform: r = 0 with negative support");
    std::vector<u64> vals(static_cast<size_t>(s.size()));
    Fp scale = a * r.pow(s.lo());
    for (i64 i = s.lo(); i < s.hi(); ++i) {
        vals[static_cast<size_t>(i - s.lo())] = (scale * s.fp_at(i)).v;
        scale *= r;
    }
    return Seq(s.prime(), s.lo(), std::move(vals), s.left_ext(), s.right_ext());
}

Seq reverse_finite(const Seq& s) {
    if (s.left_ext() != Ext::Undefined || s.right_ext() != Ext::Undefined)
        throw std::invalid_argument("reverse_finite: sequence is not finite");
    std::vector<u64> vals(s.values().rbegin(), s.values().rend());
    return Seq::finite(s.prime(), std::move(vals));
}

Seq concat(const Seq& a, const Seq& b) {
    if (a.p() != b.p()) throw std::invalid_argument("concat: modulus mismatch");
    if (a.left_ext() != Ext::Undefined || a.right_ext() != Ext::Undefined ||
        b.left_ext() != Ext::Undefined || b.right_ext() != Ext::Undefined)
        throw std::invalid_argument("concat: sequences must be finite");
    std::vector<u64> vals = a.values();
    vals.insert(vals.end(), b.values().begin(), b.values().end());
    return Seq::finite(a.prime(), std::move(vals));
}

Seq zeros(Prime p, size_t len) {
    return Seq::finite(p, std::vector<u64>(len, 0));
}

Seq zero_pad_both(const Seq& s, size_t amount) {
    return concat(concat(zeros(s.prime(), amount), s), zeros(s.prime(), amount));
}

Seq left_zero_extend(const Seq& s) {
    return Seq(s.prime(), s.lo(), s.values(), Ext::Zero, s.right_ext());
}

Seq laurent_inverse(const Seq& s, size_t len) {
    if (len == 0) return Seq::finite(s.prime(), {});
    if (s.lo() > 0 || !s.defined_range(0, static_cast<i64>(len) - 1))
        throw std::invalid_argument("laurent_inverse: need a defined prefix [0, len)");
    Fp s0 = s.fp_at(0);
    if (s0.is_zero()) throw std::domain_error("laurent_inverse: s_0 = 0");
    Fp s0inv = s0.inv();
    std::vector<Fp> u(len, Fp::raw(0, s.p()));
    u[0] = s0inv;
    for (size_t m = 1; m < len; ++m) {
        Fp acc = Fp::raw(0, s.p());
        for (size_t j = 1; j <= m; ++j)
            acc += s.fp_at(static_cast<i64>(j)) * u[m - j];
        u[m] = -(acc * s0inv);
    }
    std::vector<u64> vals(len);
    for (size_t i = 0; i < len; ++i) vals[i] = u[i].v;
    return Seq::finite(s.prime(), std::move(vals));
}

Seq series_product(const Seq& a, const Seq& b, size_t len) {
    if (a.p() != b.p()) throw std::invalid_argument("series_product: modulus mismatch");
    std::vector<Fp> c(len, Fp::raw(0, a.p()));
    for (size_t i = 0; i < len; ++i) {
        if (!a.defined(static_cast<i64>(i))) break;
        Fp ai = a.fp_at(static_cast<i64>(i));
        if (ai.is_zero()) continue;
        for (size_t j = 0; i + j < len; ++j) {
            if (!b.defined(static_cast<i64>(j))) break;
            c[i + j] += ai * b.fp_at(static_cast<i64>(j));
        }
    }
    std::vector<u64> vals(len);
    for (size_t i = 0; i < len; ++i) vals[i] = c[i].v;
    return Seq::finite(a.prime(), std::move(vals));
}

std::string seq_to_text(const Seq& s) {
    std::ostringstream os;
    os << "p=" << s.p() << " lo=" << s.lo() << "\n";
    for (i64 i = s.lo(); i < s.hi(); ++i) {
        if (i > s.lo()) os << ' ';
        os << s.at(i);
    }
    os << "\n";
    return os.str();
}

Seq seq_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("seq_from_text: missing header");
    u64 p = 0;
    i64 lo = 0;
    if (sscanf(header.c_str(), "p=%lu lo=%ld", &p, &lo) != 2)
        throw std::invalid_argument("seq_from_text: bad header: " + header);
    std::vector<u64> vals;
    u64 v;
    while (is >> v) vals.push_back(v);
    return Seq(Prime(p), lo, std::move(vals));
}

} // namespace nwall
