#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "qfrob/cyclo.hpp"
#include "qfrob/torus_fn.hpp"

namespace qfrob {

// B[K]/(K^{2l} - 1); coordinate i is the coefficient of K^i.
struct SmallTorusElement {
    const RootParams* rp = nullptr;
    std::vector<CycloScalar> c;

    SmallTorusElement() = default;
    explicit SmallTorusElement(const RootParams* rp);
    static SmallTorusElement one(const RootParams* rp) { return k_power(rp, 0); }
    static SmallTorusElement k_power(const RootParams* rp, long i);

    SmallTorusElement& operator+=(const SmallTorusElement& o);
    SmallTorusElement& operator-=(const SmallTorusElement& o);
    friend SmallTorusElement operator+(SmallTorusElement a, const SmallTorusElement& b) { return a += b; }
    friend SmallTorusElement operator-(SmallTorusElement a, const SmallTorusElement& b) { return a -= b; }
    friend bool operator==(const SmallTorusElement& a, const SmallTorusElement& b) { return a.c == b.c; }
    SmallTorusElement scaled(const CycloScalar& s) const;
    bool is_zero() const;
    // K -> -K
    SmallTorusElement sign_flipped() const;
};

SmallTorusElement small_torus_mul(const SmallTorusElement& a, const SmallTorusElement& b);
inline SmallTorusElement operator*(const SmallTorusElement& a, const SmallTorusElement& b) {
    return small_torus_mul(a, b);
}

SmallTorusElement kappa(const RootParams* rp, long n);
SmallTorusElement kappa_prime(const RootParams* rp, long n);
SmallTorusElement kappa_bar(const RootParams* rp, long n);

// Sum coeff * K^delta [K;c;t] over (delta, t); t <= T.
struct BigTorusElement {
    using Key = std::pair<int, long>;  // (delta, t)
    const RootParams* rp = nullptr;
    long c = 0;
    long T = 0;
    std::map<Key, CycloScalar> coords;

    void add(int delta, long t, const CycloScalar& v);
    bool all_dyadic() const;
    friend bool operator==(const BigTorusElement& a, const BigTorusElement& b);
};

struct CharSample {
    long lambda;
    int sigma;
    CycloScalar value;
};

// Characters K -> sigma q^lambda, [K;c;t] -> sigma^t [lambda + c choose t].
CycloScalar eval_char(const SmallTorusElement& x, long lambda, int sigma = 1);
CycloScalar eval_char(const BigTorusElement& x, long lambda, int sigma = 1);
// primed characters K -> zeta^m, zeta = q^{1/2}
CycloScalar eval_char_prime(const SmallTorusElement& x, long m);

// Dense interpolation on an arbitrary sample list into the c = 0 basis, t <= T.
BigTorusElement interpolate(const std::vector<CharSample>& samples, long T);
// samples lambda in [0, width) for both signs
std::vector<long> default_window(const RootParams* rp, long T);
// interpolate with the default window, enlarging on singularity
BigTorusElement interpolate_fn(const std::function<CycloScalar(long, int)>& f, const RootParams* rp, long T);

BigTorusElement expand_shifted(const RootParams* rp, long c, long t, long T);

// Structured conversions between the coordinate form (c = 0) and TorusFn.
TorusFn torus_fn(const SmallTorusElement& x);
TorusFn torus_fn(const BigTorusElement& x);
// basis function K^delta [K;t]
TorusFn basis_fn(const RootParams* rp, int delta, long t);
// [K;c;t] as a function
TorusFn bracket_fn(const RootParams* rp, long c, long t);
BigTorusElement big_from_fn(const TorusFn& f, long T);
// coordinates of an arity-2 function: ((delta,t),(delta',t')) -> scalar
std::map<std::pair<BigTorusElement::Key, BigTorusElement::Key>, CycloScalar> coords2_from_fn(const TorusFn& f);
TorusFn fn2_from_basis(const RootParams* rp, int d1, long t1, int d2, long t2);

// Rank-ell torus with generators K_1..K_ell, each K_j^{2l} = 1.
struct MultiTorusElement {
    const RootParams* rp = nullptr;
    int rank = 0;
    std::vector<int> sym;  // symmetrizers d_i
    std::vector<CycloScalar> c;  // flattened index (i_1, ..., i_ell), base 2l

    MultiTorusElement() = default;
    MultiTorusElement(const RootParams* rp, int rank, std::vector<int> sym);
    static MultiTorusElement one(const RootParams* rp, int rank, std::vector<int> sym);
    static MultiTorusElement k_power(const RootParams* rp, int rank, std::vector<int> sym, int j, long e);
    MultiTorusElement& operator+=(const MultiTorusElement& o);
    friend bool operator==(const MultiTorusElement& a, const MultiTorusElement& b) { return a.c == b.c; }
};

MultiTorusElement multi_mul(const MultiTorusElement& a, const MultiTorusElement& b);

using CartanMatrix = std::vector<std::vector<int>>;
// Checks finite type and symmetrizability; returns the symmetrizers d_i.
std::vector<int> validate_cartan(const CartanMatrix& a);
// Rejects l not coprime to the nonzero entries and symmetrizers.
void check_coprime(const CartanMatrix& a, int l);
MultiTorusElement product_kappa_multi(const RootParams* rp, const CartanMatrix& cartan, const std::vector<long>& j);

}  // namespace qfrob
