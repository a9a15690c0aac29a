#include "qfrob/torus_fn.hpp"

#include <algorithm>

namespace qfrob {

std::vector<CycloScalar> newton_from_values(std::vector<CycloScalar> v) {
    const size_t n = v.size();
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) v[i] -= v[i - 1];
    return v;
}

CycloScalar newton_eval(const std::vector<CycloScalar>& coef, long x, const RootParams* rp) {
    CycloScalar s(rp);
    for (size_t i = 0; i < coef.size(); ++i) {
        if (coef[i].is_zero()) continue;
        mpz_class b = binom_z(x, static_cast<long>(i));
        if (b == 0) continue;
        CycloScalar t = coef[i];
        t.mul_int(b);
        s += t;
    }
    return s;
}

namespace {

using Block = TorusFn::Block;

// values of a block on the grid [0,n0) x [0,n1)
std::vector<CycloScalar> eval_grid(const Block& b, int n0, int n1, const RootParams* rp) {
    const int d0 = b.deg[0], d1 = b.deg[1];
    std::vector<CycloScalar> tmp(static_cast<size_t>(n0) * (d1 + 1), CycloScalar(rp));
    for (int x = 0; x < n0; ++x)
        for (int i = 0; i <= std::min(d0, x); ++i) {
            mpz_class bx = binom_z(x, i);
            for (int j = 0; j <= d1; ++j) {
                const CycloScalar& c = b.coef[i * (d1 + 1) + j];
                if (c.is_zero()) continue;
                CycloScalar t = c;
                t.mul_int(bx);
                tmp[x * (d1 + 1) + j] += t;
            }
        }
    std::vector<CycloScalar> out(static_cast<size_t>(n0) * n1, CycloScalar(rp));
    for (int x = 0; x < n0; ++x)
        for (int y = 0; y < n1; ++y)
            for (int j = 0; j <= std::min(d1, y); ++j) {
                const CycloScalar& c = tmp[x * (d1 + 1) + j];
                if (c.is_zero()) continue;
                CycloScalar t = c;
                t.mul_int(binom_z(y, j));
                out[x * n1 + y] += t;
            }
    return out;
}

// inverse of eval_grid: forward differences along both axes
Block grid_to_block(std::vector<CycloScalar> g, int n0, int n1) {
    for (int y = 0; y < n1; ++y)
        for (int k = 1; k < n0; ++k)
            for (int x = n0 - 1; x >= k; --x) g[x * n1 + y] -= g[(x - 1) * n1 + y];
    for (int x = 0; x < n0; ++x)
        for (int k = 1; k < n1; ++k)
            for (int y = n1 - 1; y >= k; --y) g[x * n1 + y] -= g[x * n1 + y - 1];
    Block b;
    b.deg[0] = n0 - 1;
    b.deg[1] = n1 - 1;
    b.coef = std::move(g);
    return b;
}

// new block h(x) = f(a*x + e) along axis `axis`
Block affine_block(const Block& f, int axis, int a, long e, const RootParams* rp) {
    if (f.empty()) return f;
    const int d0 = f.deg[0], d1 = f.deg[1];
    Block out = f;
    const int dk = f.deg[axis];
    const int other = axis == 0 ? d1 : d0;
    for (int j = 0; j <= other; ++j) {
        std::vector<CycloScalar> line(dk + 1);
        for (int i = 0; i <= dk; ++i) line[i] = axis == 0 ? f.coef[i * (d1 + 1) + j] : f.coef[j * (d1 + 1) + i];
        std::vector<CycloScalar> vals(dk + 1);
        for (int x = 0; x <= dk; ++x) vals[x] = newton_eval(line, a * x + e, rp);
        auto nc = newton_from_values(std::move(vals));
        for (int i = 0; i <= dk; ++i) {
            if (axis == 0)
                out.coef[i * (d1 + 1) + j] = nc[i];
            else
                out.coef[j * (d1 + 1) + i] = nc[i];
        }
    }
    return out;
}

}  // namespace

TorusFn::TorusFn(const RootParams* rp, int arity) : rp_(rp), arity_(arity) {
    const int n = 2 * rp->l;
    blocks_.resize(arity == 1 ? n : n * n);
}

void TorusFn::trim_block(Block& b) const {
    if (b.empty()) return;
    const int d1 = b.deg[1];
    int m0 = -1, m1 = -1;
    for (int i = 0; i <= b.deg[0]; ++i)
        for (int j = 0; j <= d1; ++j)
            if (!b.coef[i * (d1 + 1) + j].is_zero()) {
                m0 = std::max(m0, i);
                m1 = std::max(m1, j);
            }
    if (m0 < 0) {
        b = Block{};
        return;
    }
    if (m0 == b.deg[0] && m1 == d1) return;
    std::vector<CycloScalar> c(static_cast<size_t>(m0 + 1) * (m1 + 1));
    for (int i = 0; i <= m0; ++i)
        for (int j = 0; j <= m1; ++j) c[i * (m1 + 1) + j] = b.coef[i * (d1 + 1) + j];
    b.deg[0] = m0;
    b.deg[1] = m1;
    b.coef = std::move(c);
}

TorusFn TorusFn::constant(const RootParams* rp, int arity, const CycloScalar& c) {
    TorusFn f(rp, arity);
    if (c.is_zero()) return f;
    for (auto& b : f.blocks_) {
        b.deg[0] = b.deg[1] = 0;
        b.coef = {c};
    }
    return f;
}

TorusFn TorusFn::from_character(const RootParams* rp, const std::function<CycloScalar(long, int)>& fn,
                                int deg_bound) {
    TorusFn f(rp, 1);
    const int l = rp->l;
    for (int c = 0; c < 2 * l; ++c) {
        const int sigma = c < l ? 1 : -1;
        const long l0 = c % l;
        std::vector<CycloScalar> vals(deg_bound + 1);
        for (int x = 0; x <= deg_bound; ++x) vals[x] = fn(l0 + static_cast<long>(l) * x, sigma);
        auto nc = newton_from_values(vals);
        CycloScalar extra = fn(l0 + static_cast<long>(l) * (deg_bound + 1), sigma);
        if (newton_eval(nc, deg_bound + 1, rp) != extra)
            throw ArithmeticError("character function exceeds its degree bound");
        Block b;
        b.deg[0] = deg_bound;
        b.deg[1] = 0;
        b.coef = std::move(nc);
        f.trim_block(b);
        f.blocks_[c] = std::move(b);
    }
    return f;
}

TorusFn TorusFn::from_character2(const RootParams* rp,
                                 const std::function<CycloScalar(long, int, long, int)>& fn, int deg_bound) {
    TorusFn f(rp, 2);
    const int l = rp->l, nc = 2 * l;
    const int n = deg_bound + 1;
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = 0; c2 < nc; ++c2) {
            const int s1 = c1 < l ? 1 : -1, s2 = c2 < l ? 1 : -1;
            const long a0 = c1 % l, b0 = c2 % l;
            std::vector<CycloScalar> g(static_cast<size_t>(n) * n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) g[x * n + y] = fn(a0 + l * static_cast<long>(x), s1, b0 + l * static_cast<long>(y), s2);
            Block b = grid_to_block(std::move(g), n, n);
            // one diagonal check point outside the grid
            auto chk = eval_grid(b, n + 1, n + 1, rp);
            if (chk[n * (n + 1) + n] != fn(a0 + static_cast<long>(l) * n, s1, b0 + static_cast<long>(l) * n, s2))
                throw ArithmeticError("character function exceeds its degree bound");
            f.trim_block(b);
            f.blocks_[c1 * nc + c2] = std::move(b);
        }
    return f;
}

TorusFn TorusFn::embed(const TorusFn& f, int var) {
    const RootParams* rp = f.rp_;
    const int nc = 2 * rp->l;
    TorusFn g(rp, 2);
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = 0; c2 < nc; ++c2) {
            const Block& src = f.blocks_[var == 0 ? c1 : c2];
            if (src.empty()) continue;
            Block b;
            if (var == 0) {
                b.deg[0] = src.deg[0];
                b.deg[1] = 0;
                b.coef = src.coef;
            } else {
                b.deg[0] = 0;
                b.deg[1] = src.deg[0];
                b.coef = src.coef;
            }
            g.blocks_[c1 * nc + c2] = std::move(b);
        }
    return g;
}

CycloScalar TorusFn::value(long lambda, int sigma) const {
    const Block& b = blocks_[class_index(pos_mod(lambda, rp_->l), sigma)];
    if (b.empty()) return CycloScalar(rp_);
    return newton_eval(b.coef, floor_div(lambda, rp_->l), rp_);
}

CycloScalar TorusFn::value2(long l1, int s1, long l2, int s2) const {
    const int l = rp_->l, nc = 2 * l;
    const Block& b = blocks_[class_index(pos_mod(l1, l), s1) * nc + class_index(pos_mod(l2, l), s2)];
    if (b.empty()) return CycloScalar(rp_);
    const long x = floor_div(l1, l), y = floor_div(l2, l);
    CycloScalar s(rp_);
    for (int i = 0; i <= b.deg[0]; ++i)
        for (int j = 0; j <= b.deg[1]; ++j) {
            const CycloScalar& c = b.coef[i * (b.deg[1] + 1) + j];
            if (c.is_zero()) continue;
            CycloScalar t = c;
            t.mul_int(binom_z(x, i) * binom_z(y, j));
            s += t;
        }
    return s;
}

bool TorusFn::is_zero() const {
    for (const auto& b : blocks_)
        if (!b.empty()) return false;
    return true;
}

int TorusFn::max_degree() const {
    int m = -1;
    for (const auto& b : blocks_) m = std::max({m, b.deg[0], b.deg[1]});
    return m;
}

namespace {

Block add_blocks(const Block& a, const Block& b, int sign, const RootParams* rp) {
    if (b.empty()) return a;
    if (a.empty()) {
        Block r = b;
        if (sign < 0)
            for (auto& c : r.coef) c = -c;
        return r;
    }
    Block r;
    r.deg[0] = std::max(a.deg[0], b.deg[0]);
    r.deg[1] = std::max(a.deg[1], b.deg[1]);
    const int w = r.deg[1] + 1;
    r.coef.assign(static_cast<size_t>(r.deg[0] + 1) * w, CycloScalar(rp));
    for (int i = 0; i <= a.deg[0]; ++i)
        for (int j = 0; j <= a.deg[1]; ++j) r.coef[i * w + j] = a.coef[i * (a.deg[1] + 1) + j];
    for (int i = 0; i <= b.deg[0]; ++i)
        for (int j = 0; j <= b.deg[1]; ++j) {
            const CycloScalar& c = b.coef[i * (b.deg[1] + 1) + j];
            if (sign > 0)
                r.coef[i * w + j] += c;
            else
                r.coef[i * w + j] -= c;
        }
    return r;
}

}  // namespace

TorusFn& TorusFn::operator+=(const TorusFn& o) {
    if (!rp_) return *this = o;
    for (size_t c = 0; c < blocks_.size(); ++c) {
        blocks_[c] = add_blocks(blocks_[c], o.blocks_[c], 1, rp_);
        trim_block(blocks_[c]);
    }
    return *this;
}

TorusFn& TorusFn::operator-=(const TorusFn& o) {
    if (!rp_) {
        *this = TorusFn(o.rp_, o.arity_);
    }
    for (size_t c = 0; c < blocks_.size(); ++c) {
        blocks_[c] = add_blocks(blocks_[c], o.blocks_[c], -1, rp_);
        trim_block(blocks_[c]);
    }
    return *this;
}

TorusFn TorusFn::scaled(const CycloScalar& s) const {
    TorusFn r(rp_, arity_);
    if (s.is_zero()) return r;
    for (size_t c = 0; c < blocks_.size(); ++c) {
        if (blocks_[c].empty()) continue;
        Block b = blocks_[c];
        for (auto& x : b.coef) x = x * s;
        r.blocks_[c] = std::move(b);
    }
    return r;
}

bool operator==(const TorusFn& a, const TorusFn& b) {
    if (a.blocks_.size() != b.blocks_.size()) return a.is_zero() && b.is_zero();
    for (size_t c = 0; c < a.blocks_.size(); ++c) {
        const auto& x = a.blocks_[c];
        const auto& y = b.blocks_[c];
        if (x.deg[0] != y.deg[0] || x.deg[1] != y.deg[1]) return false;
        for (size_t i = 0; i < x.coef.size(); ++i)
            if (x.coef[i] != y.coef[i]) return false;
    }
    return true;
}

TorusFn TorusFn::mul(const TorusFn& a, const TorusFn& b, Exec ex) {
    TorusFn r(a.rp_, a.arity_);
    const long n = static_cast<long>(a.blocks_.size());
    auto one = [&](long c) {
        const Block& x = a.blocks_[c];
        const Block& y = b.blocks_[c];
        if (x.empty() || y.empty()) return;
        const int n0 = x.deg[0] + y.deg[0] + 1, n1 = x.deg[1] + y.deg[1] + 1;
        auto gx = eval_grid(x, n0, n1, a.rp_);
        auto gy = eval_grid(y, n0, n1, a.rp_);
        for (size_t i = 0; i < gx.size(); ++i) gx[i] *= gy[i];
        Block out = grid_to_block(std::move(gx), n0, n1);
        r.trim_block(out);
        r.blocks_[c] = std::move(out);
    };
    if (ex == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long c = 0; c < n; ++c) one(c);
    } else {
        for (long c = 0; c < n; ++c) one(c);
    }
    return r;
}

TorusFn TorusFn::shifted(int var, long d) const {
    const int l = rp_->l, nc = 2 * l;
    TorusFn r(rp_, arity_);
    for (int c = 0; c < num_classes(); ++c) {
        int ck = arity_ == 1 ? c : (var == 0 ? c / nc : c % nc);
        const int sig_off = ck >= l ? l : 0;
        const long l0 = ck % l;
        const long src0 = pos_mod(l0 + d, l);
        const long e = floor_div(l0 + d, l);
        int src = sig_off + static_cast<int>(src0);
        int sc = arity_ == 1 ? src : (var == 0 ? src * nc + c % nc : (c / nc) * nc + src);
        r.blocks_[c] = affine_block(blocks_[sc], var, 1, e, rp_);
    }
    return r;
}

TorusFn TorusFn::reflected(int var) const {
    const int l = rp_->l, nc = 2 * l;
    TorusFn r(rp_, arity_);
    for (int c = 0; c < num_classes(); ++c) {
        int ck = arity_ == 1 ? c : (var == 0 ? c / nc : c % nc);
        const int sig_off = ck >= l ? l : 0;
        const long l0 = ck % l;
        const long src0 = pos_mod(-l0, l);
        const long e = floor_div(-l0, l);
        int src = sig_off + static_cast<int>(src0);
        int sc = arity_ == 1 ? src : (var == 0 ? src * nc + c % nc : (c / nc) * nc + src);
        r.blocks_[c] = affine_block(blocks_[sc], var, -1, e, rp_);
    }
    return r;
}

TorusFn TorusFn::sign_flipped(int var) const {
    const int l = rp_->l, nc = 2 * l;
    TorusFn r(rp_, arity_);
    for (int c = 0; c < num_classes(); ++c) {
        int ck = arity_ == 1 ? c : (var == 0 ? c / nc : c % nc);
        int src = (ck + l) % nc;
        int sc = arity_ == 1 ? src : (var == 0 ? src * nc + c % nc : (c / nc) * nc + src);
        r.blocks_[c] = blocks_[sc];
    }
    return r;
}

}  // namespace qfrob
