#pragma once
// Independent reference computations used only by the tests.

#include <gmpxx.h>

#include <ostream>
#include <random>
#include <vector>

#include "qfrob/cyclo.hpp"

namespace oracle {

inline qfrob::CycloScalar random_scalar(const qfrob::RootParams* rp, std::mt19937_64& rng, int range = 5,
                                        bool with_den = true) {
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<mpz_class> num(rp->euler_deg);
    for (auto& x : num) x = d(rng);
    mpz_class den = with_den ? mpz_class(1 + std::abs(d(rng))) : mpz_class(1);
    return qfrob::CycloScalar(rp, num, den);
}

// sum of v^e over a list of exponents, reduced
inline qfrob::CycloScalar monomial_sum(const qfrob::RootParams* rp, const std::vector<std::pair<long, long>>& terms) {
    std::vector<mpz_class> c(rp->l, 0);
    for (auto [coef, e] : terms) c[qfrob::pos_mod(e, rp->l)] += coef;
    return qfrob::CycloScalar(rp, c, 1);
}

// binomial via factorials, exact; n >= 0
inline mpz_class factorial_binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class a = 1, b = 1;
    for (long i = 1; i <= k; ++i) {
        a *= n - i + 1;
        b *= i;
    }
    return a / b;
}

// closed form of kappa_n (sign = +1) or kappa_bar_n (sign = -1) as a character function
inline qfrob::CycloScalar closed_kappa(const qfrob::RootParams* rp, long n, int sign, long lambda, int sigma) {
    const long l = rp->l;
    qfrob::CycloScalar s(rp);
    for (long i = 0; i < l; ++i) {
        auto br = qfrob::gauss_binomial_generic(rp, lambda - 2 * n, i);
        if ((sigma < 0 && i % 2) != (sign > 0 && i % 2)) br = -br;
        auto k = qfrob::q_power(rp, lambda);
        if (sigma < 0) k = -k;
        auto tail = qfrob::q_power(rp, -i - 2 * n) * k;
        s += br * (sign > 0 ? qfrob::q_power(rp, i) + tail : qfrob::q_power(rp, i) - tail);
    }
    s.div_int(2);
    return s;
}

}  // namespace oracle

namespace qfrob {
inline void PrintTo(const CycloScalar& s, std::ostream* os) { *os << s.to_string(); }
}  // namespace qfrob
