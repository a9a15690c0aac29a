#include "qfrob/uq_sl2.hpp"

#include <algorithm>

namespace qfrob {

PBWElement::PBWElement(const RootParams* rp, int arity, PBWBounds b) : rp_(rp), arity_(arity), bounds_(b) {}

PBWElement PBWElement::torus(const TorusFn& f, PBWBounds b) {
    PBWElement x(f.params(), f.arity(), b);
    x.add_term({0, 0, 0, 0}, f);
    return x;
}

PBWElement PBWElement::one(const RootParams* rp, PBWBounds b) {
    return torus(TorusFn::constant(rp, 1, CycloScalar::one(rp)), b);
}

PBWElement PBWElement::e_pow(const RootParams* rp, int n, PBWBounds b) {
    PBWElement x(rp, 1, b);
    x.add_term({0, n, 0, 0}, TorusFn::constant(rp, 1, CycloScalar::one(rp)));
    return x;
}

PBWElement PBWElement::f_pow(const RootParams* rp, int n, PBWBounds b) {
    PBWElement x(rp, 1, b);
    x.add_term({n, 0, 0, 0}, TorusFn::constant(rp, 1, CycloScalar::one(rp)));
    return x;
}

PBWElement PBWElement::basis(const RootParams* rp, int a, int delta, long t, int b, PBWBounds bd) {
    PBWElement x(rp, 1, bd);
    x.add_term({a, b, 0, 0}, basis_fn(rp, delta, t));
    return x;
}

PBWElement PBWElement::from_coords(const RootParams* rp, const std::map<Coord, CycloScalar>& c, PBWBounds b) {
    PBWElement x(rp, 1, b);
    for (const auto& [k, v] : c) {
        const auto [a, delta, t, e] = k;
        x.add_term({a, e, 0, 0}, basis_fn(rp, delta, t).scaled(v));
    }
    return x;
}

void PBWElement::add_term(const Key& k, const TorusFn& f) {
    if (f.is_zero()) return;
    for (int i = 0; i < 4; ++i)
        if (k[i] > bounds_.a_max)
            throw TruncationError("divided power degree " + std::to_string(k[i]) + " exceeds A_max=" +
                                  std::to_string(bounds_.a_max));
    if (f.max_degree() > bounds_.t_max / rp_->l)
        throw TruncationError("torus part exceeds T_max=" + std::to_string(bounds_.t_max));
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        it = terms_.emplace(k, f).first;
    } else {
        it->second += f;
        if (it->second.is_zero()) {
            terms_.erase(it);
            return;
        }
    }
    // the degree test above is coarse; at the top degree look at the actual t
    if (it->second.max_degree() == bounds_.t_max / rp_->l) {
        try {
            if (arity_ == 1) big_from_fn(it->second, bounds_.t_max);
            else
                for (const auto& [kk, v] : coords2_from_fn(it->second))
                    if (kk.first.second > bounds_.t_max || kk.second.second > bounds_.t_max)
                        throw TruncationError("tensor torus coordinate exceeds T_max");
        } catch (const TruncationError&) {
            terms_.erase(it);
            throw;
        }
    }
}

std::map<PBWElement::Coord, CycloScalar> PBWElement::coords() const {
    if (arity_ != 1) throw UnsupportedError("coords() needs an arity-1 element");
    std::map<Coord, CycloScalar> out;
    for (const auto& [k, f] : terms_) {
        auto big = big_from_fn(f, bounds_.t_max);
        for (const auto& [bk, v] : big.coords) out.emplace(Coord{k[0], bk.first, bk.second, k[1]}, v);
    }
    return out;
}

std::map<std::pair<PBWElement::Coord, PBWElement::Coord>, CycloScalar> PBWElement::tensor_coords() const {
    if (arity_ != 2) throw UnsupportedError("tensor_coords() needs an arity-2 element");
    std::map<std::pair<Coord, Coord>, CycloScalar> out;
    for (const auto& [k, f] : terms_)
        for (const auto& [pk, v] : coords2_from_fn(f)) {
            if (pk.first.second > bounds_.t_max || pk.second.second > bounds_.t_max)
                throw TruncationError("tensor torus coordinate exceeds T_max");
            out.emplace(std::make_pair(Coord{k[0], pk.first.first, pk.first.second, k[1]},
                                       Coord{k[2], pk.second.first, pk.second.second, k[3]}),
                        v);
        }
    return out;
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    if (!rp_) {
        *this = PBWElement(o.rp_, o.arity_, o.bounds_);
    }
    for (const auto& [k, f] : o.terms_) add_term(k, f);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) { return *this += o.scaled(CycloScalar(o.rp_, -1L)); }

PBWElement PBWElement::scaled(const CycloScalar& s) const {
    PBWElement r(rp_, arity_, bounds_);
    if (s.is_zero()) return r;
    for (const auto& [k, f] : terms_) r.add_term(k, f.scaled(s));
    return r;
}

PBWElement pbw_mul(const PBWElement& x, const PBWElement& y, Exec ex) {
    const RootParams* rp = x.params() ? x.params() : y.params();
    const int n = x.arity();
    PBWBounds bd{std::max(x.bounds().a_max, y.bounds().a_max), std::max(x.bounds().t_max, y.bounds().t_max)};
    PBWElement out(rp, n, bd);
    for (const auto& [kx, f] : x.terms()) {
        for (const auto& [ky, g] : y.terms()) {
            int smax[2] = {0, 0};
            for (int k = 0; k < n; ++k) smax[k] = std::min(kx[2 * k + 1], ky[2 * k]);
            for (int s0 = 0; s0 <= smax[0]; ++s0)
                for (int s1 = 0; s1 <= smax[1]; ++s1) {
                    const int s[2] = {s0, s1};
                    CycloScalar coef = CycloScalar::one(rp);
                    PBWElement::Key key{0, 0, 0, 0};
                    for (int k = 0; k < n; ++k) {
                        const int a = kx[2 * k], b = kx[2 * k + 1], a2 = ky[2 * k], b2 = ky[2 * k + 1];
                        coef *= gauss_binomial(rp, a + a2 - s[k], a);
                        coef *= gauss_binomial(rp, b - s[k] + b2, b2);
                        key[2 * k] = a + a2 - s[k];
                        key[2 * k + 1] = b + b2 - s[k];
                    }
                    if (coef.is_zero()) continue;
                    TorusFn left = f, right = g;
                    for (int k = 0; k < n; ++k) {
                        const int a2 = ky[2 * k], b = kx[2 * k + 1];
                        if (a2 - s[k]) left = left.shifted(k, -2L * (a2 - s[k]));
                        if (b - s[k]) right = right.shifted(k, -2L * (b - s[k]));
                    }
                    TorusFn mid = TorusFn::mul(left, right, ex);
                    for (int k = 0; k < n && !mid.is_zero(); ++k) {
                        if (s[k] == 0) continue;
                        const int a2 = ky[2 * k], b = kx[2 * k + 1];
                        TorusFn br = bracket_fn(rp, 2L * s[k] - a2 - b, s[k]);
                        if (n == 2) br = TorusFn::embed(br, k);
                        mid = TorusFn::mul(mid, br, ex);
                    }
                    out.add_term(key, mid.scaled(coef));
                }
        }
    }
    return out;
}

PBWElement tensor_of(const PBWElement& x, const PBWElement& y) {
    PBWBounds bd{std::max(x.bounds().a_max, y.bounds().a_max), std::max(x.bounds().t_max, y.bounds().t_max)};
    PBWElement out(x.params(), 2, bd);
    for (const auto& [kx, f] : x.terms())
        for (const auto& [ky, g] : y.terms())
            out.add_term({kx[0], kx[1], ky[0], ky[1]}, TorusFn::embed(f, 0) * TorusFn::embed(g, 1));
    return out;
}

// ---------------------------------------------------------------- Frobenius

namespace {

ClassicalElement normal_yx(const RootParams* rp, int a, std::vector<CycloScalar> g, int b) {
    CycloRing ring{rp};
    auto y = ClassicalElement::basis(ring, 0, 0, a);
    auto t = ClassicalElement::torus(ring, std::move(g));
    auto x = ClassicalElement::basis(ring, b, 0, 0);
    return hyper_mul(hyper_mul(y, t), x);
}

}  // namespace

ClassicalElement frobenius(const PBWElement& x) {
    const RootParams* rp = x.params();
    const int l = rp->l;
    ClassicalElement out(CycloRing{rp});
    for (const auto& [k, f] : x.terms()) {
        if (k[0] % l || k[1] % l) continue;
        auto big = big_from_fn(f, x.bounds().t_max);
        std::vector<CycloScalar> g;
        for (const auto& [bk, v] : big.coords) {
            if (bk.second % l) continue;
            const size_t i = bk.second / l;
            if (g.size() <= i) g.resize(i + 1, CycloScalar(rp));
            g[i] += v;
        }
        ClassicalElement::trim(g);
        if (g.empty()) continue;
        out += normal_yx(rp, k[0] / l, std::move(g), k[1] / l);
    }
    return out;
}

ClassicalElement frobenius_by_values(const PBWElement& x) {
    const RootParams* rp = x.params();
    const int l = rp->l;
    ClassicalElement out(CycloRing{rp});
    for (const auto& [k, f] : x.terms()) {
        if (k[0] % l || k[1] % l) continue;
        const auto& b = f.block(f.class_index(0, 1));
        if (b.empty()) continue;
        out += normal_yx(rp, k[0] / l, b.coef, k[1] / l);
    }
    return out;
}

HyperTensor<CycloRing> frobenius_tensor(const PBWElement& t) {
    const RootParams* rp = t.params();
    const int l = rp->l;
    HyperTensor<CycloRing> out;
    out.ring = CycloRing{rp};
    for (const auto& [k, f] : t.terms()) {
        if (k[0] % l || k[1] % l || k[2] % l || k[3] % l) continue;
        const auto& b = f.block(0);  // both characters in class (0, +)
        if (b.empty()) continue;
        for (int i = 0; i <= b.deg[0]; ++i)
            for (int j = 0; j <= b.deg[1]; ++j) {
                const CycloScalar& c = b.coef[i * (b.deg[1] + 1) + j];
                if (c.is_zero()) continue;
                std::vector<CycloScalar> gi(i + 1, CycloScalar(rp)), gj(j + 1, CycloScalar(rp));
                gi[i] = CycloScalar::one(rp);
                gj[j] = CycloScalar::one(rp);
                out.add_outer(normal_yx(rp, k[0] / l, gi, k[1] / l), normal_yx(rp, k[2] / l, gj, k[3] / l), c);
            }
    }
    return out;
}

PBWElement kappa_element(const RootParams* rp, long n, PBWBounds b) {
    return PBWElement::torus(torus_fn(kappa(rp, n)), b);
}

PBWElement phi(const ClassicalElement& x, PBWBounds bd) {
    const RootParams* rp = x.ring().rp;
    const int l = rp->l;
    PBWElement k = kappa_element(rp, 0, bd);
    PBWElement out(rp, 1, bd);
    for (const auto& [c, v] : x.coords()) {
        const auto [a, i, cc] = c;
        PBWElement e = pbw_mul(PBWElement::e_pow(rp, l * a, bd), k);
        PBWElement h = PBWElement::torus(bracket_fn(rp, 0, static_cast<long>(l) * i), bd) * k;
        PBWElement f = pbw_mul(PBWElement::f_pow(rp, l * cc, bd), k);
        out += pbw_mul(pbw_mul(e, h), f).scaled(v);
    }
    return out;
}

// ---------------------------------------------------------------- involutions

namespace {

TorusFn k_power_fn(const RootParams* rp, long e) { return torus_fn(SmallTorusElement::k_power(rp, e)); }

}  // namespace

PBWElement involution(const PBWElement& x, Involution which) {
    const RootParams* rp = x.params();
    const PBWBounds bd = x.bounds();
    PBWElement out(rp, 1, bd);
    for (const auto& [k, f] : x.terms()) {
        const int a = k[0], b = k[1];
        switch (which) {
            case Involution::Omega:
                out += PBWElement::e_pow(rp, a, bd) * PBWElement::torus(f.reflected(0), bd) *
                       PBWElement::f_pow(rp, b, bd);
                break;
            case Involution::Psi:
                out += PBWElement::e_pow(rp, b, bd) * PBWElement::torus(f.reflected(0), bd) *
                       PBWElement::f_pow(rp, a, bd);
                break;
            case Involution::OmegaPsi:
                out.add_term({b, a, 0, 0}, f);
                break;
            case Involution::tilde:
                out.add_term({a, b, 0, 0}, (b % 2) ? f.sign_flipped(0).scaled(CycloScalar(rp, -1L)) : f.sign_flipped(0));
                break;
            case Involution::antipode:
            case Involution::antipode_printed: {
                auto sgn = [&](int n) {
                    if (which == Involution::antipode) return (n % 2) ? -1L : 1L;
                    return n == 0 ? 1L : -1L;
                };
                PBWElement se = (PBWElement::torus(k_power_fn(rp, -b), bd) * PBWElement::e_pow(rp, b, bd))
                                    .scaled(q_power(rp, static_cast<long>(b) * (b - 1)) * CycloScalar(rp, sgn(b)));
                PBWElement sf = (PBWElement::f_pow(rp, a, bd) * PBWElement::torus(k_power_fn(rp, a), bd))
                                    .scaled(q_power(rp, -static_cast<long>(a) * (a - 1)) * CycloScalar(rp, sgn(a)));
                out += se * PBWElement::torus(f.reflected(0), bd) * sf;
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- coproduct

TorusFn coproduct_fn(const TorusFn& f) {
    return TorusFn::from_character2(
        f.params(), [&](long l1, int s1, long l2, int s2) { return f.value(l1 + l2, s1 * s2); },
        std::max(f.max_degree(), 0));
}

namespace {

PBWElement delta_e(const RootParams* rp, int n, PBWBounds bd) {
    PBWElement out(rp, 2, bd);
    for (int j = 0; j <= n; ++j) {
        PBWElement left = PBWElement::e_pow(rp, n - j, bd) * PBWElement::torus(k_power_fn(rp, j), bd);
        out += tensor_of(left, PBWElement::e_pow(rp, j, bd)).scaled(q_power(rp, static_cast<long>(j) * (n - j)));
    }
    return out;
}

PBWElement delta_f(const RootParams* rp, int n, PBWBounds bd) {
    PBWElement out(rp, 2, bd);
    for (int j = 0; j <= n; ++j) {
        PBWElement right = PBWElement::torus(k_power_fn(rp, -j), bd) * PBWElement::f_pow(rp, n - j, bd);
        out += tensor_of(PBWElement::f_pow(rp, j, bd), right).scaled(q_power(rp, -static_cast<long>(j) * (n - j)));
    }
    return out;
}

}  // namespace

PBWElement coproduct(const PBWElement& x) {
    const RootParams* rp = x.params();
    const PBWBounds bd = x.bounds();
    PBWElement out(rp, 2, bd);
    for (const auto& [k, f] : x.terms()) {
        PBWElement df = PBWElement::torus(coproduct_fn(f), bd);
        out += pbw_mul(pbw_mul(delta_f(rp, k[0], bd), df), delta_e(rp, k[1], bd));
    }
    return out;
}

// ---------------------------------------------------------------- vanishing

std::vector<Check> verify_fundamental_vanishing(const RootParams* rp, int a, int b) {
    const int l = rp->l;
    std::vector<Check> out;
    const long smax = static_cast<long>(l) * (a + b) - 1;
    const long T = 2 * smax + 2 * l;
    for (long s = 1; s <= smax; ++s) {
        TorusFn prod = torus_fn(kappa(rp, -s)) * bracket_fn(rp, 2 * s - static_cast<long>(l) * (a + b), s);
        auto big = big_from_fn(prod, T);
        const bool zero = big.coords.empty();
        nlohmann::json w = {{"l", l}, {"a", a}, {"b", b}, {"s", s}, {"nonzero_coords", big.coords.size()}};
        std::string name = "vanishing l=" + std::to_string(l) + " a=" + std::to_string(a) + " b=" +
                           std::to_string(b) + " s=" + std::to_string(s);
        if (s % l) {
            out.push_back(make_check(name, "kappa_{-s} [K; 2s-la-lb; s] = 0 for l not dividing s", zero, w));
        } else {
            Check c = make_check(name, "kappa_{-s} [K; 2s-la-lb; s] survives for l | s", !zero, w);
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace qfrob
