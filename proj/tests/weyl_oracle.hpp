#pragma once
// Matrices of PBW coordinates acting on the signed Weyl module of highest weight m.
// Built directly from the module formulas, independent of pbw_mul.

#include "qfrob/linalg.hpp"
#include "qfrob/uq_sl2.hpp"

namespace oracle {

using qfrob::CycloScalar;
using Mat = qfrob::Matrix<CycloScalar>;

inline Mat zero_mat(const qfrob::RootParams* rp, int n) {
    return Mat(n, n, CycloScalar(rp));
}

// F^(a) K^delta [K;t] E^(b) on basis v_0..v_m
inline Mat weyl_basis(const qfrob::RootParams* rp, long m, int sigma, int a, int delta, long t, int b) {
    const int n = static_cast<int>(m) + 1;
    Mat out = zero_mat(rp, n);
    for (long j = 0; j <= m; ++j) {
        long j1 = j - b;
        if (j1 < 0) continue;
        CycloScalar c = qfrob::gauss_binomial_generic(rp, m - j + b, b);
        if (sigma < 0 && b % 2) c = -c;
        const long w = m - 2 * j1;
        CycloScalar tor = qfrob::gauss_binomial_generic(rp, w, t);
        if (sigma < 0 && t % 2) tor = -tor;
        if (delta) tor = tor * qfrob::q_power(rp, w) * CycloScalar(rp, static_cast<long>(sigma));
        long j2 = j1 + a;
        if (j2 > m) continue;
        CycloScalar f = qfrob::gauss_binomial_generic(rp, j1 + a, a);
        out.a[j2 * n + j] = c * tor * f;
    }
    return out;
}

inline Mat weyl_matrix(const qfrob::PBWElement& x, long m, int sigma) {
    const auto* rp = x.params();
    Mat out = zero_mat(rp, static_cast<int>(m) + 1);
    for (const auto& [k, v] : x.coords()) {
        const auto [a, d, t, b] = k;
        Mat bm = weyl_basis(rp, m, sigma, a, d, t, b);
        for (size_t i = 0; i < out.a.size(); ++i)
            if (!bm.a[i].is_zero()) out.a[i] += bm.a[i] * v;
    }
    return out;
}

}  // namespace oracle
