#pragma once

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "qfrob/classical.hpp"
#include "qfrob/report.hpp"
#include "qfrob/torus.hpp"

namespace qfrob {

struct PBWBounds {
    int a_max = 0;   // divided-power degree of E and F
    long t_max = 0;  // t in [K;t]
    static PBWBounds defaults(const RootParams* rp) { return {3 * rp->l, 2L * rp->l}; }
};

// Sum of F^(a) f E^(b) in the order F - torus - E. Arity 2 is the tensor square:
// keys carry (a, b) per leg and f is a function of two characters.
class PBWElement {
public:
    using Key = std::array<int, 4>;  // a0, b0, a1, b1
    using Coord = std::tuple<int, int, long, int>;  // a, delta, t, b

    PBWElement() = default;
    PBWElement(const RootParams* rp, int arity, PBWBounds b);
    explicit PBWElement(const RootParams* rp) : PBWElement(rp, 1, PBWBounds::defaults(rp)) {}

    static PBWElement one(const RootParams* rp, PBWBounds b);
    static PBWElement e_pow(const RootParams* rp, int n, PBWBounds b);
    static PBWElement f_pow(const RootParams* rp, int n, PBWBounds b);
    static PBWElement torus(const TorusFn& f, PBWBounds b);
    static PBWElement basis(const RootParams* rp, int a, int delta, long t, int b, PBWBounds bd);
    static PBWElement from_coords(const RootParams* rp, const std::map<Coord, CycloScalar>& c, PBWBounds b);

    const RootParams* params() const { return rp_; }
    int arity() const { return arity_; }
    const PBWBounds& bounds() const { return bounds_; }
    void set_bounds(PBWBounds b) { bounds_ = b; }
    const std::map<Key, TorusFn>& terms() const { return terms_; }

    void add_term(const Key& k, const TorusFn& f);
    bool is_zero() const { return terms_.empty(); }

    // (a, delta, t, b) coordinates; arity 1 only
    std::map<Coord, CycloScalar> coords() const;
    // pairs of PBW coordinates; arity 2 only
    std::map<std::pair<Coord, Coord>, CycloScalar> tensor_coords() const;

    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    PBWElement scaled(const CycloScalar& s) const;
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

private:
    const RootParams* rp_ = nullptr;
    int arity_ = 1;
    PBWBounds bounds_{};
    std::map<Key, TorusFn> terms_;
};

using TensorElement = PBWElement;

PBWElement pbw_mul(const PBWElement& x, const PBWElement& y, Exec ex = Exec::parallel);
inline PBWElement operator*(const PBWElement& x, const PBWElement& y) { return pbw_mul(x, y); }
PBWElement tensor_of(const PBWElement& x, const PBWElement& y);

ClassicalElement frobenius(const PBWElement& x);
// same map computed from values on the characters lambda = l*mu, sigma = +
ClassicalElement frobenius_by_values(const PBWElement& x);
HyperTensor<CycloRing> frobenius_tensor(const PBWElement& t);
PBWElement phi(const ClassicalElement& x, PBWBounds b);

enum class Involution { Omega, Psi, OmegaPsi, tilde, antipode, antipode_printed };
PBWElement involution(const PBWElement& x, Involution which);

PBWElement coproduct(const PBWElement& x);
// torus part only: (lambda, lambda') -> f(lambda + lambda', sigma sigma')
TorusFn coproduct_fn(const TorusFn& f);

std::vector<Check> verify_fundamental_vanishing(const RootParams* rp, int a, int b);

PBWElement kappa_element(const RootParams* rp, long n, PBWBounds b);

}  // namespace qfrob
