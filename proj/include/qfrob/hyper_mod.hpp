#pragma once

#include <vector>

#include "qfrob/classical.hpp"
#include "qfrob/linalg.hpp"
#include "qfrob/report.hpp"
#include "qfrob/uq_sl2.hpp"

namespace qfrob {

using ModElement = HyperElement<PrimeField>;

long int_pow(long b, int e);

// Dist(T_r): coefficients of binom(H, i), i < p^r
struct DistTElement {
    long p = 0;
    int r = 0;
    std::vector<ModPScalar> c;

    DistTElement() = default;
    DistTElement(long p, int r);
    long size() const { return static_cast<long>(c.size()); }
    // value at H = x; depends on x mod p^r only
    ModPScalar value(long x) const;
    static DistTElement from_values(long p, int r, const std::vector<ModPScalar>& v);
    static DistTElement one(long p, int r);
    DistTElement& operator+=(const DistTElement& o);
    friend DistTElement operator+(DistTElement a, const DistTElement& b) { return a += b; }
    friend DistTElement operator*(const DistTElement& a, const DistTElement& b);
    friend bool operator==(const DistTElement& a, const DistTElement& b) { return a.c == b.c; }
    ModElement as_element() const;
};

DistTElement mu(long p, long n, int r);
// entry (i, n) = binom(p^r-1-n, p^r-1-i): mu-coordinates to binom(H,i)-coordinates
Matrix<ModPScalar> mu_to_binom_matrix(long p, int r);
// entry (n, i) = binom(n, i)
Matrix<ModPScalar> binom_to_mu_matrix(long p, int r);

// binom(H - m, n) in the basis binom(H, i); Vandermonde
std::vector<ModPScalar> shifted_binom_vandermonde(long p, long m, long n);
// same through the idempotents of level r (needs n < p^r)
std::vector<ModPScalar> shifted_binom_via_mu(long p, long m, long n, int r);

ModElement mod_basis(long p, int a, int i, int c);
ModElement mu_element(long p, long n, int r);

ModElement fr_dist(const ModElement& x);
ModElement fr_prime(const ModElement& x);
ModElement phi_modular(const ModElement& x);

std::vector<Check> commute_mu(long p, int a, long b, int c, int r);

// q -> 1, K -> 1; needs l prime
ModElement reduction_from_quantum(const PBWElement& x);
ModElement reduce_classical(const ClassicalElement& x, long p);

std::vector<Check> block_decomposition_check(long p, int r, int s);

}  // namespace qfrob
