#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qfrob/cyclo.hpp"

namespace qfrob {

struct CycloRing {
    using S = CycloScalar;
    const RootParams* rp = nullptr;
    S zero() const { return S(rp); }
    S one() const { return S::one(rp); }
    S from_int(const mpz_class& z) const { return S(rp, z); }
};

struct PrimeField {
    using S = ModPScalar;
    long p = 0;
    S zero() const { return S(0, p); }
    S one() const { return S(1, p); }
    S from_int(const mpz_class& z) const {
        mpz_class r = z % p;
        return S(r.get_si(), p);
    }
};

struct HyperBounds {
    int a_max = 1 << 20;  // X and Y divided-power degrees
    int i_max = 1 << 20;  // binom(H, i)
};

// Sum over (a, c) of X^(a) g(H) Y^(c), with g stored by its coefficients in the
// basis binom(H, i).
template <class R>
class HyperElement {
public:
    using S = typename R::S;
    using Key = std::pair<int, int>;

    HyperElement() = default;
    explicit HyperElement(R ring, HyperBounds b = {}) : ring_(ring), bounds_(b) {}

    static HyperElement basis(R ring, int a, int i, int c, HyperBounds b = {}) {
        HyperElement x(ring, b);
        std::vector<S> g(i + 1, ring.zero());
        g[i] = ring.one();
        x.add_term(a, c, g);
        return x;
    }
    static HyperElement one(R ring, HyperBounds b = {}) { return basis(ring, 0, 0, 0, b); }
    static HyperElement torus(R ring, std::vector<S> g, HyperBounds b = {}) {
        HyperElement x(ring, b);
        x.add_term(0, 0, std::move(g));
        return x;
    }

    const R& ring() const { return ring_; }
    const HyperBounds& bounds() const { return bounds_; }
    void set_bounds(HyperBounds b) { bounds_ = b; }
    const std::map<Key, std::vector<S>>& terms() const { return terms_; }

    void add_term(int a, int c, std::vector<S> g) {
        trim(g);
        if (g.empty()) return;
        if (a > bounds_.a_max || c > bounds_.a_max || static_cast<int>(g.size()) - 1 > bounds_.i_max)
            throw TruncationError("hyperalgebra element leaves its index bounds");
        auto it = terms_.find({a, c});
        if (it == terms_.end()) {
            terms_.emplace(Key{a, c}, std::move(g));
            return;
        }
        auto& h = it->second;
        if (h.size() < g.size()) h.resize(g.size(), ring_.zero());
        for (size_t i = 0; i < g.size(); ++i) h[i] += g[i];
        trim(h);
        if (h.empty()) terms_.erase(it);
    }

    std::map<std::tuple<int, int, int>, S> coords() const {
        std::map<std::tuple<int, int, int>, S> out;
        for (const auto& [k, g] : terms_)
            for (size_t i = 0; i < g.size(); ++i)
                if (!g[i].is_zero()) out.emplace(std::make_tuple(k.first, static_cast<int>(i), k.second), g[i]);
        return out;
    }

    bool is_zero() const { return terms_.empty(); }

    HyperElement& operator+=(const HyperElement& o) {
        for (const auto& [k, g] : o.terms_) add_term(k.first, k.second, g);
        return *this;
    }
    HyperElement& operator-=(const HyperElement& o) { return *this += o.scaled(-ring_.one()); }
    friend HyperElement operator+(HyperElement a, const HyperElement& b) { return a += b; }
    friend HyperElement operator-(HyperElement a, const HyperElement& b) { return a -= b; }
    friend bool operator==(const HyperElement& a, const HyperElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const HyperElement& a, const HyperElement& b) { return !(a == b); }

    HyperElement scaled(const S& s) const {
        HyperElement r(ring_, bounds_);
        for (const auto& [k, g] : terms_) {
            std::vector<S> h = g;
            for (auto& x : h) x = x * s;
            r.add_term(k.first, k.second, std::move(h));
        }
        return r;
    }

    static void trim(std::vector<S>& g) {
        while (!g.empty() && g.back().is_zero()) g.pop_back();
    }

private:
    R ring_{};
    HyperBounds bounds_{};
    std::map<Key, std::vector<S>> terms_;
};

// ---- torus polynomials in the basis binom(H, i)

template <class R>
typename R::S hpoly_eval(const R& ring, const std::vector<typename R::S>& g, long x) {
    auto s = ring.zero();
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i].is_zero()) continue;
        mpz_class b = binom_z(x, static_cast<long>(i));
        if (b != 0) s += ring.from_int(b) * g[i];
    }
    return s;
}

template <class R>
std::vector<typename R::S> hpoly_from_values(std::vector<typename R::S> v) {
    const size_t n = v.size();
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) v[i] -= v[i - 1];
    return v;
}

// g(a*H + m) re-expanded
template <class R>
std::vector<typename R::S> hpoly_affine(const R& ring, const std::vector<typename R::S>& g, int a, long m) {
    std::vector<typename R::S> vals(g.size(), ring.zero());
    for (size_t x = 0; x < g.size(); ++x) vals[x] = hpoly_eval(ring, g, a * static_cast<long>(x) + m);
    return hpoly_from_values<R>(std::move(vals));
}

// pointwise product of several polynomials given as evaluation callbacks of known degree
template <class R, class F>
std::vector<typename R::S> hpoly_from_fn(const R& ring, int deg, F&& f) {
    std::vector<typename R::S> vals(deg + 1, ring.zero());
    for (int x = 0; x <= deg; ++x) vals[x] = f(static_cast<long>(x));
    auto g = hpoly_from_values<R>(std::move(vals));
    HyperElement<R>::trim(g);
    return g;
}

template <class R>
HyperElement<R> hyper_mul(const HyperElement<R>& x, const HyperElement<R>& y) {
    const R& ring = x.ring();
    HyperElement<R> out(ring, x.bounds());
    for (const auto& [kx, g] : x.terms()) {
        const auto [a, c] = kx;
        for (const auto& [ky, h] : y.terms()) {
            const auto [a2, c2] = ky;
            for (int i = 0; i <= std::min(c, a2); ++i) {
                auto coef = ring.from_int(binom_z(a + a2 - i, a) * binom_z(c - i + c2, c2));
                if (coef.is_zero()) continue;
                const int deg = static_cast<int>(g.size()) - 1 + i + static_cast<int>(h.size()) - 1;
                auto mid = hpoly_from_fn(ring, deg, [&](long mu) {
                    auto v = hpoly_eval(ring, g, mu + 2 * (a2 - i));
                    if (v.is_zero()) return v;
                    v = v * ring.from_int(binom_z(-mu - a2 - c + 2 * i, i));
                    if (v.is_zero()) return v;
                    return v * hpoly_eval(ring, h, mu + 2 * (c - i));
                });
                for (auto& m : mid) m = m * coef;
                out.add_term(a + a2 - i, c - i + c2, std::move(mid));
            }
        }
    }
    return out;
}

template <class R>
HyperElement<R> operator*(const HyperElement<R>& x, const HyperElement<R>& y) {
    return hyper_mul(x, y);
}

// X <-> Y anti-involution fixing H
template <class R>
HyperElement<R> classical_tau(const HyperElement<R>& x) {
    HyperElement<R> out(x.ring(), x.bounds());
    for (const auto& [k, g] : x.terms()) out.add_term(k.second, k.first, g);
    return out;
}

// antipode: X -> -X, Y -> -Y, H -> -H, anti-multiplicative
template <class R>
HyperElement<R> classical_antipode(const HyperElement<R>& x) {
    const R& ring = x.ring();
    HyperElement<R> out(ring, x.bounds());
    for (const auto& [k, g] : x.terms()) {
        const auto [a, c] = k;
        auto sign = ((a + c) % 2) ? -ring.one() : ring.one();
        auto y = HyperElement<R>::basis(ring, 0, 0, c, x.bounds());
        auto t = HyperElement<R>::torus(ring, hpoly_affine(ring, g, -1, 0), x.bounds());
        auto xx = HyperElement<R>::basis(ring, a, 0, 0, x.bounds());
        out += hyper_mul(hyper_mul(y, t), xx).scaled(sign);
    }
    return out;
}

// Classical tensor square, coordinates ((a,i,c),(a',i',c')).
template <class R>
struct HyperTensor {
    using S = typename R::S;
    using Key = std::array<int, 6>;
    R ring{};
    std::map<Key, S> coords;

    void add(const Key& k, const S& v) {
        if (v.is_zero()) return;
        auto it = coords.find(k);
        if (it == coords.end()) {
            coords.emplace(k, v);
            return;
        }
        it->second += v;
        if (it->second.is_zero()) coords.erase(it);
    }
    void add_outer(const HyperElement<R>& x, const HyperElement<R>& y, const S& s) {
        for (const auto& [kx, vx] : x.coords())
            for (const auto& [ky, vy] : y.coords())
                add({std::get<0>(kx), std::get<1>(kx), std::get<2>(kx), std::get<0>(ky), std::get<1>(ky),
                     std::get<2>(ky)},
                    vx * vy * s);
    }
    friend bool operator==(const HyperTensor& a, const HyperTensor& b) { return a.coords == b.coords; }
};

// Delta(X^(n)) = sum X^(n-j) (x) X^(j); likewise Y; primitive H
template <class R>
HyperTensor<R> classical_coproduct_x(const R& ring, int n, bool y_side) {
    HyperTensor<R> t;
    t.ring = ring;
    for (int j = 0; j <= n; ++j) {
        auto a = y_side ? HyperElement<R>::basis(ring, 0, 0, n - j) : HyperElement<R>::basis(ring, n - j, 0, 0);
        auto b = y_side ? HyperElement<R>::basis(ring, 0, 0, j) : HyperElement<R>::basis(ring, j, 0, 0);
        t.add_outer(a, b, ring.one());
    }
    return t;
}

using ClassicalElement = HyperElement<CycloRing>;

}  // namespace qfrob
