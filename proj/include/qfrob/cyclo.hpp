#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qfrob/error.hpp"

namespace qfrob {

long floor_div(long a, long b);
long pos_mod(long a, long b);

// Generalized binomial (n may be negative), exact.
mpz_class binom_z(long n, long k);

struct RootParams {
    int l = 0;
    std::vector<mpz_class> phi;  // low to high, monic, size euler_deg + 1
    int euler_deg = 0;
    // q^{1/2} = half_sign * q^{half_exp}
    int half_exp = 0;
    int half_sign = -1;
    // v^k mod Phi_l for k in [0, 2*euler_deg)
    std::vector<std::vector<mpz_class>> reduce_rows;
};

// Interned per l; the returned pointer stays valid for the process lifetime.
const RootParams* make_root_params(int l);

class CycloScalar {
public:
    CycloScalar() = default;  // zero, no ring attached yet
    explicit CycloScalar(const RootParams* rp);
    CycloScalar(const RootParams* rp, long c);
    CycloScalar(const RootParams* rp, const mpz_class& c);
    CycloScalar(const RootParams* rp, std::vector<mpz_class> num, mpz_class den);

    static CycloScalar zero(const RootParams* rp) { return CycloScalar(rp); }
    static CycloScalar one(const RootParams* rp) { return CycloScalar(rp, 1L); }
    static CycloScalar rational(const RootParams* rp, const mpq_class& r);

    const RootParams* params() const { return rp_; }
    const std::vector<mpz_class>& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_dyadic() const;

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);
    CycloScalar& mul_int(const mpz_class& c);
    CycloScalar& div_int(const mpz_class& c);
    // adds c * o without normalizing twice
    CycloScalar& add_mul(const CycloScalar& a, const CycloScalar& b);

    CycloScalar inv() const;
    CycloScalar pow(long e) const;

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
    friend bool operator==(const CycloScalar& a, const CycloScalar& b);
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

    // Polynomial string in q, e.g. "1/2*(1 - q^2)".
    std::string to_string() const;
    // value at q = 1 modulo p; the denominator must be prime to p
    long reduce_mod_p(long p) const;

private:
    void lift(const RootParams* rp);
    void normalize();

    const RootParams* rp_ = nullptr;
    std::vector<mpz_class> num_;  // size euler_deg when rp_ set, else size <= 1
    mpz_class den_ = 1;
};

// q^{e2/2}
CycloScalar q_power_half(const RootParams* rp, long e2);
inline CycloScalar q_power(const RootParams* rp, long e) { return q_power_half(rp, 2 * e); }

// Symmetric Gaussian binomial [n choose k] in v^d, reduced mod Phi_l.
CycloScalar gauss_binomial(const RootParams* rp, long n, long k, int d = 1);
// Same value, via the product formula and exact division in Z[v]. Slow; test oracle.
CycloScalar gauss_binomial_generic(const RootParams* rp, long n, long k, int d = 1);
// Quantum integer [n] in v^d
CycloScalar quantum_int(const RootParams* rp, long n, int d = 1);

class ModPScalar {
public:
    ModPScalar() = default;
    ModPScalar(long value, long p);
    long value() const { return v_; }
    long prime() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    ModPScalar operator-() const { return ModPScalar(-v_, p_); }
    ModPScalar& operator+=(const ModPScalar& o);
    ModPScalar& operator-=(const ModPScalar& o);
    ModPScalar& operator*=(const ModPScalar& o);
    ModPScalar inv() const;
    friend ModPScalar operator+(ModPScalar a, const ModPScalar& b) { return a += b; }
    friend ModPScalar operator-(ModPScalar a, const ModPScalar& b) { return a -= b; }
    friend ModPScalar operator*(ModPScalar a, const ModPScalar& b) { return a *= b; }
    friend bool operator==(const ModPScalar& a, const ModPScalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ModPScalar& a, const ModPScalar& b) { return a.v_ != b.v_; }

private:
    long v_ = 0;
    long p_ = 0;
};

bool is_prime(long n);
// Lucas product of digit binomials; n may be negative.
ModPScalar binom_mod_p(long n, long k, long p);

}  // namespace qfrob
