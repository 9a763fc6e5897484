#include "nwall/fractal.hpp"

#include <cmath>
#include <stdexcept>

namespace nwall {

namespace {

u128 ipow(u128 base, int e) {
    u128 acc = 1;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

} // namespace

BoxLevel boxes_from_profile(const ProfileGrid& pg, int k, Prime p) {
    i64 dim = 1;
    for (int i = 0; i < k; ++i) dim *= static_cast<i64>(p.value());
    if (pg.rows() != dim || pg.cols() != dim)
        throw std::invalid_argument("boxes_from_profile: profile is not p^k x p^k");
    BoxLevel out;
    out.level = k;
    out.p = p.value();
    out.dim = dim;
    out.kept.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), 0);
    for (i64 m = 0; m < dim; ++m)
        for (i64 n = 0; n < dim; ++n) {
            ProfileCell c = pg.at(pg.row_lo() + m, pg.col_lo() + n);
            if (c == ProfileCell::Undefined)
                throw std::invalid_argument("boxes_from_profile: profile has undefined cells");
            if (c == ProfileCell::X) {
                out.kept[static_cast<size_t>(m) * static_cast<size_t>(dim) + static_cast<size_t>(n)] = 1;
                ++out.count;
            }
        }
    return out;
}

FractalCounts closed_form_counts(Prime p, int k) {
    if (k < 1) throw std::invalid_argument("closed_form_counts: k must be >= 1");
    u128 pv = p.value();
    u128 q = (pv * pv + 1) / 2;
    FractalCounts out;
    out.n_k = ipow(q, k);

    u128 a = pv * pv; // a_1
    for (int j = 1; j < k; ++j)
        a = q * a + 2 * (pv * pv - 1) * (ipow(pv, j) - 1);
    out.a_k = a;

    // a_k = p^2 q^(k-1) + 2(p^2-1) sum_{i=1}^{k-1} q^(i-1) (p^(k-i) - 1)
    u128 closed = pv * pv * ipow(q, k - 1);
    for (int i = 1; i <= k - 1; ++i)
        closed += 2 * (pv * pv - 1) * ipow(q, i - 1) * (ipow(pv, k - i) - 1);
    out.a_k_closed = closed;
    return out;
}

DimEstimate box_dim_estimate(const std::vector<u128>& counts, Prime p) {
    if (counts.size() < 2) throw std::invalid_argument("box_dim_estimate: need at least 2 levels");
    double logp = std::log(static_cast<double>(p.value()));
    auto log_u128 = [](u128 v) {
        if (v == 0) throw std::invalid_argument("box_dim_estimate: zero count");
        double acc = 0.0;
        while (v > static_cast<u128>(1e17)) {
            v /= 1024;
            acc += std::log(1024.0);
        }
        return acc + std::log(static_cast<double>(static_cast<u64>(v)));
    };

    size_t K = counts.size();
    DimEstimate est;
    est.deepest = log_u128(counts[K - 1]) / (static_cast<double>(K) * logp);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < K; ++i) {
        double x = static_cast<double>(i + 1) * logp;
        double y = log_u128(counts[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    double n = static_cast<double>(K);
    est.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return est;
}

} // namespace nwall
