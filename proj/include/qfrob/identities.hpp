#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qfrob/report.hpp"
#include "qfrob/torus.hpp"

namespace qfrob {

struct EvalPoint {
    const RootParams* rp = nullptr;
    std::vector<CycloScalar> x;

    // x_j = q^{e_j}
    static EvalPoint q_powers(const RootParams* rp, const std::vector<long>& exps);
    bool pairwise_distinct() const;
};

// x = sign * q^e, if it is one
std::optional<std::pair<int, long>> as_signed_q_power(const CycloScalar& x);

// number of weakly increasing index tuples, binom(n+d-1, d)
mpz_class s_poly_term_count(long d, long n);
// direct summation over weakly increasing tuples
CycloScalar s_poly(long d, const EvalPoint& pt);
// S_{d,n} = sum_i x_n^i S_{d-i,n-1}
CycloScalar s_poly_recurrence(long d, const EvalPoint& pt);
// successive quotients of x^{d+n-1}; needs distinct points
CycloScalar s_poly_quotient(long d, const EvalPoint& pt);

CycloScalar a_coef(const RootParams* rp, long c, long t);
CycloScalar b_coef(const RootParams* rp, long c, long t);

using AlphaTable = std::map<std::pair<int, long>, CycloScalar>;  // (delta, n)
// coordinates of K^m [K;c;t] in the basis K^delta [K;c;n], closed form
AlphaTable alpha_coefficients(const RootParams* rp, long m, long t, long c);
// same by evaluation and dense interpolation
AlphaTable alpha_by_interpolation(const RootParams* rp, long m, long t, long c);

struct SuiteOptions {
    std::uint64_t seed = 0;
    int samples = 64;
    bool exhaustive = false;
};

std::vector<Check> vanishing_suite(const RootParams* rp, const SuiteOptions& opt = {});

// the five coordinate families of kappa_{-s}[K; c; s] (times 2l), c = 2s mod l
struct NullityFamilies {
    std::map<std::pair<int, long>, CycloScalar> value;  // (delta, n) -> expression
    std::map<std::pair<int, long>, int> family;         // which of the five
};
NullityFamilies nullity_families(const RootParams* rp, long s);
std::vector<Check> nullity_suite(const RootParams* rp, int a, int b);

}  // namespace qfrob
