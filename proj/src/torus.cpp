#include "qfrob/torus.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "qfrob/linalg.hpp"

namespace qfrob {

// ---------------------------------------------------------------- small torus

SmallTorusElement::SmallTorusElement(const RootParams* r) : rp(r), c(2 * r->l, CycloScalar(r)) {}

SmallTorusElement SmallTorusElement::k_power(const RootParams* rp, long i) {
    SmallTorusElement x(rp);
    x.c[pos_mod(i, 2 * rp->l)] = CycloScalar::one(rp);
    return x;
}

SmallTorusElement& SmallTorusElement::operator+=(const SmallTorusElement& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

SmallTorusElement& SmallTorusElement::operator-=(const SmallTorusElement& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

SmallTorusElement SmallTorusElement::scaled(const CycloScalar& s) const {
    SmallTorusElement r = *this;
    for (auto& x : r.c) x = x * s;
    return r;
}

bool SmallTorusElement::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

SmallTorusElement SmallTorusElement::sign_flipped() const {
    SmallTorusElement r = *this;
    for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
    return r;
}

SmallTorusElement small_torus_mul(const SmallTorusElement& a, const SmallTorusElement& b) {
    const size_t n = a.c.size();
    SmallTorusElement r(a.rp);
    for (size_t i = 0; i < n; ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j)
            if (!b.c[j].is_zero()) r.c[(i + j) % n] += a.c[i] * b.c[j];
    }
    return r;
}

namespace {

SmallTorusElement averaged(const RootParams* rp, const std::function<CycloScalar(long)>& coeff) {
    SmallTorusElement x(rp);
    const long n = 2 * rp->l;
    for (long i = 0; i < n; ++i) {
        x.c[i] = coeff(i);
        x.c[i].div_int(n);
    }
    return x;
}

}  // namespace

SmallTorusElement kappa(const RootParams* rp, long n) {
    return averaged(rp, [&](long i) { return q_power(rp, -2 * n * i); });
}

SmallTorusElement kappa_prime(const RootParams* rp, long n) {
    return averaged(rp, [&](long i) { return q_power_half(rp, -n * i); });
}

SmallTorusElement kappa_bar(const RootParams* rp, long n) {
    return averaged(rp, [&](long i) {
        CycloScalar v = q_power(rp, -2 * n * i);
        return (i % 2) ? -v : v;
    });
}

// ---------------------------------------------------------------- big torus

void BigTorusElement::add(int delta, long t, const CycloScalar& v) {
    if (v.is_zero()) return;
    auto key = Key{delta, t};
    auto it = coords.find(key);
    if (it == coords.end()) {
        coords.emplace(key, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) coords.erase(it);
}

bool BigTorusElement::all_dyadic() const {
    for (const auto& [k, v] : coords)
        if (!v.is_dyadic()) return false;
    return true;
}

bool operator==(const BigTorusElement& a, const BigTorusElement& b) {
    return a.c == b.c && a.coords == b.coords;
}

CycloScalar eval_char(const SmallTorusElement& x, long lambda, int sigma) {
    CycloScalar s(x.rp);
    for (size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i].is_zero()) continue;
        CycloScalar t = x.c[i] * q_power(x.rp, lambda * static_cast<long>(i));
        if (sigma < 0 && (i % 2)) t = -t;
        s += t;
    }
    return s;
}

CycloScalar eval_char(const BigTorusElement& x, long lambda, int sigma) {
    CycloScalar s(x.rp);
    for (const auto& [k, v] : x.coords) {
        const auto [delta, t] = k;
        CycloScalar term = v * q_power(x.rp, delta * lambda) * gauss_binomial(x.rp, lambda + x.c, t);
        if (sigma < 0 && ((delta + t) % 2)) term = -term;
        s += term;
    }
    return s;
}

CycloScalar eval_char_prime(const SmallTorusElement& x, long m) {
    CycloScalar s(x.rp);
    for (size_t i = 0; i < x.c.size(); ++i)
        if (!x.c[i].is_zero()) s += x.c[i] * q_power_half(x.rp, m * static_cast<long>(i));
    return s;
}

BigTorusElement interpolate(const std::vector<CharSample>& samples, long T) {
    if (samples.empty()) throw WindowTooSmallError("empty sample window");
    const RootParams* rp = samples.front().value.params();
    for (const auto& s : samples)
        if (s.value.params()) rp = s.value.params();
    if (!rp) throw WindowTooSmallError("samples carry no ring");
    const size_t n = 2 * static_cast<size_t>(T + 1);
    Matrix<CycloScalar> m(samples.size(), n + 1, CycloScalar(rp));
    for (size_t r = 0; r < samples.size(); ++r) {
        const auto& s = samples[r];
        for (int delta = 0; delta < 2; ++delta)
            for (long t = 0; t <= T; ++t) {
                CycloScalar e = q_power(rp, delta * s.lambda) * gauss_binomial(rp, s.lambda, t);
                if (s.sigma < 0 && ((delta + t) % 2)) e = -e;
                m(r, delta * (T + 1) + t) = e;
            }
        m(r, n) = s.value;
    }
    auto piv = rref_serial(m);
    if (!piv.empty() && piv.back() == n) throw ArithmeticError("samples are not values of a truncated torus element");
    if (piv.size() < n) throw WindowTooSmallError("evaluation matrix is singular on this window");
    BigTorusElement out;
    out.rp = rp;
    out.T = T;
    for (size_t k = 0; k < n; ++k) out.add(static_cast<int>(k / (T + 1)), static_cast<long>(k % (T + 1)), m(k, n));
    return out;
}

std::vector<long> default_window(const RootParams* rp, long T) {
    std::vector<long> w;
    const long width = rp->l * (T / rp->l + 2);
    for (long x = 0; x < width; ++x) w.push_back(x);
    return w;
}

BigTorusElement interpolate_fn(const std::function<CycloScalar(long, int)>& f, const RootParams* rp, long T) {
    auto window = default_window(rp, T);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<CharSample> samples;
        for (long x : window)
            for (int s : {1, -1}) samples.push_back({x, s, f(x, s)});
        try {
            return interpolate(samples, T);
        } catch (const WindowTooSmallError&) {
            long next = window.back() + 1;
            for (long k = 0; k < 2 * rp->l; ++k) window.push_back(next + k);
        }
    }
    throw WindowTooSmallError("interpolation window still singular after 3 enlargements");
}

// ---------------------------------------------------------------- structured solve

namespace {

struct Solver {
    Matrix<CycloScalar> m0;  // rows: class (sigma, lambda0); cols: delta*l + t0
    Matrix<CycloScalar> m0inv;
};

const Solver& solver(const RootParams* rp) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Solver>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& s = cache[rp->l];
    if (s) return *s;
    const int l = rp->l, n = 2 * l;
    s = std::make_unique<Solver>();
    s->m0 = Matrix<CycloScalar>(n, n, CycloScalar(rp));
    for (int c = 0; c < n; ++c) {
        const int sigma = c < l ? 1 : -1;
        const long l0 = c % l;
        for (int delta = 0; delta < 2; ++delta)
            for (int t0 = 0; t0 < l; ++t0) {
                CycloScalar e = q_power(rp, delta * l0) * gauss_binomial(rp, l0, t0);
                if (sigma < 0 && ((delta + t0) % 2)) e = -e;
                s->m0(c, delta * l + t0) = e;
            }
    }
    auto inv = mat_inverse(s->m0, CycloScalar(rp), CycloScalar::one(rp));
    if (!inv) throw ArithmeticError("signed characters fail to separate the torus basis");
    s->m0inv = std::move(*inv);
    return *s;
}

}  // namespace

TorusFn basis_fn(const RootParams* rp, int delta, long t) {
    const Solver& s = solver(rp);
    const int l = rp->l;
    const long t0 = t % l, t1 = t / l;
    TorusFn f(rp, 1);
    for (int c = 0; c < 2 * l; ++c) {
        CycloScalar v = s.m0(c, delta * l + t0);
        if (v.is_zero()) continue;
        if (c >= l && (t1 % 2)) v = -v;
        auto& b = f.block(c);
        b.deg[0] = static_cast<int>(t1);
        b.deg[1] = 0;
        b.coef.assign(t1 + 1, CycloScalar(rp));
        b.coef[t1] = v;
    }
    return f;
}

TorusFn bracket_fn(const RootParams* rp, long c, long t) {
    static std::mutex mu;
    static std::map<std::tuple<int, long, long>, TorusFn> cache;
    auto key = std::make_tuple(rp->l, c, t);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    TorusFn f = TorusFn::from_character(
        rp,
        [&](long lambda, int sigma) {
            CycloScalar v = gauss_binomial(rp, lambda + c, t);
            return (sigma < 0 && (t % 2)) ? -v : v;
        },
        static_cast<int>(t / rp->l));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, f);
    return f;
}

TorusFn torus_fn(const SmallTorusElement& x) {
    const RootParams* rp = x.rp;
    const int l = rp->l;
    TorusFn f(rp, 1);
    for (int c = 0; c < 2 * l; ++c) {
        CycloScalar v = eval_char(x, c % l, c < l ? 1 : -1);
        if (v.is_zero()) continue;
        auto& b = f.block(c);
        b.deg[0] = b.deg[1] = 0;
        b.coef = {v};
    }
    return f;
}

TorusFn torus_fn(const BigTorusElement& x) {
    const RootParams* rp = x.rp;
    if (x.c != 0) {
        long tmax = 0;
        for (const auto& [k, v] : x.coords) tmax = std::max(tmax, k.second);
        return TorusFn::from_character(rp, [&](long lam, int sig) { return eval_char(x, lam, sig); },
                                       static_cast<int>(tmax / rp->l));
    }
    TorusFn f(rp, 1);
    for (const auto& [k, v] : x.coords) f += basis_fn(rp, k.first, k.second).scaled(v);
    return f;
}

BigTorusElement big_from_fn(const TorusFn& f, long T) {
    const RootParams* rp = f.params();
    const Solver& s = solver(rp);
    const int l = rp->l, n = 2 * l;
    BigTorusElement out;
    out.rp = rp;
    out.T = T;
    const int dmax = f.max_degree();
    for (int t1 = 0; t1 <= dmax; ++t1) {
        std::vector<CycloScalar> v(n, CycloScalar(rp));
        bool any = false;
        for (int c = 0; c < n; ++c) {
            const auto& b = f.block(c);
            if (b.empty() || b.deg[0] < t1) continue;
            v[c] = b.coef[t1];
            if (c >= l && (t1 % 2)) v[c] = -v[c];
            any = any || !v[c].is_zero();
        }
        if (!any) continue;
        for (int col = 0; col < n; ++col) {
            CycloScalar x(rp);
            for (int c = 0; c < n; ++c)
                if (!v[c].is_zero() && !s.m0inv(col, c).is_zero()) x += s.m0inv(col, c) * v[c];
            if (x.is_zero()) continue;
            const long t = col % l + static_cast<long>(l) * t1;
            if (t > T) throw TruncationError("torus coordinate t=" + std::to_string(t) + " exceeds T=" + std::to_string(T));
            out.add(col / l, t, x);
        }
    }
    return out;
}

std::map<std::pair<BigTorusElement::Key, BigTorusElement::Key>, CycloScalar> coords2_from_fn(const TorusFn& f) {
    const RootParams* rp = f.params();
    const Solver& s = solver(rp);
    const int l = rp->l, n = 2 * l;
    std::map<std::pair<BigTorusElement::Key, BigTorusElement::Key>, CycloScalar> out;
    int d0max = -1, d1max = -1;
    for (int c = 0; c < n * n; ++c) {
        d0max = std::max(d0max, f.block(c).deg[0]);
        d1max = std::max(d1max, f.block(c).deg[1]);
    }
    for (int i = 0; i <= d0max; ++i)
        for (int j = 0; j <= d1max; ++j) {
            Matrix<CycloScalar> C(n, n, CycloScalar(rp));
            bool any = false;
            for (int c1 = 0; c1 < n; ++c1)
                for (int c2 = 0; c2 < n; ++c2) {
                    const auto& b = f.block(c1 * n + c2);
                    if (b.empty() || b.deg[0] < i || b.deg[1] < j) continue;
                    CycloScalar v = b.coef[i * (b.deg[1] + 1) + j];
                    if (c1 >= l && (i % 2)) v = -v;
                    if (c2 >= l && (j % 2)) v = -v;
                    any = any || !v.is_zero();
                    C(c1, c2) = v;
                }
            if (!any) continue;
            auto X = mat_mul(mat_mul(s.m0inv, C, CycloScalar(rp)), s.m0inv.transpose(), CycloScalar(rp));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (X(a, b).is_zero()) continue;
                    BigTorusElement::Key k1{a / l, a % l + static_cast<long>(l) * i};
                    BigTorusElement::Key k2{b / l, b % l + static_cast<long>(l) * j};
                    out[{k1, k2}] += X(a, b);
                }
        }
    return out;
}

TorusFn fn2_from_basis(const RootParams* rp, int d1, long t1, int d2, long t2) {
    return TorusFn::embed(basis_fn(rp, d1, t1), 0) * TorusFn::embed(basis_fn(rp, d2, t2), 1);
}

BigTorusElement expand_shifted(const RootParams* rp, long c, long t, long T) {
    if (t > T) throw TruncationError("bracket degree exceeds truncation");
    return big_from_fn(bracket_fn(rp, c, t), T);
}

// ---------------------------------------------------------------- rank ell

MultiTorusElement::MultiTorusElement(const RootParams* r, int rk, std::vector<int> s)
    : rp(r), rank(rk), sym(std::move(s)) {
    size_t n = 1;
    for (int i = 0; i < rank; ++i) n *= 2 * rp->l;
    c.assign(n, CycloScalar(rp));
}

MultiTorusElement MultiTorusElement::one(const RootParams* rp, int rank, std::vector<int> sym) {
    MultiTorusElement x(rp, rank, std::move(sym));
    x.c[0] = CycloScalar::one(rp);
    return x;
}

MultiTorusElement MultiTorusElement::k_power(const RootParams* rp, int rank, std::vector<int> sym, int j, long e) {
    MultiTorusElement x(rp, rank, std::move(sym));
    size_t stride = 1;
    for (int i = 0; i < j; ++i) stride *= 2 * rp->l;
    x.c[pos_mod(e, 2 * rp->l) * stride] = CycloScalar::one(rp);
    return x;
}

MultiTorusElement& MultiTorusElement::operator+=(const MultiTorusElement& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

MultiTorusElement multi_mul(const MultiTorusElement& a, const MultiTorusElement& b) {
    MultiTorusElement r(a.rp, a.rank, a.sym);
    const long base = 2 * a.rp->l;
    const size_t n = a.c.size();
    auto add_idx = [&](size_t x, size_t y) {
        size_t out = 0, stride = 1;
        for (int k = 0; k < a.rank; ++k) {
            size_t dx = x % base, dy = y % base;
            out += ((dx + dy) % base) * stride;
            stride *= base;
            x /= base;
            y /= base;
        }
        return out;
    };
    for (size_t i = 0; i < n; ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j)
            if (!b.c[j].is_zero()) r.c[add_idx(i, j)] += a.c[i] * b.c[j];
    }
    return r;
}

namespace {

mpq_class det(std::vector<std::vector<mpq_class>> m) {
    const size_t n = m.size();
    mpq_class d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            mpq_class f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

}  // namespace

std::vector<int> validate_cartan(const CartanMatrix& a) {
    const size_t n = a.size();
    if (n == 0) throw ConfigError("empty Cartan matrix");
    for (const auto& row : a)
        if (row.size() != n) throw ConfigError("Cartan matrix must be square");
    for (size_t i = 0; i < n; ++i) {
        if (a[i][i] != 2) throw ConfigError("Cartan matrix diagonal must be 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw ConfigError("Cartan off-diagonal entries must be <= 0");
            if ((a[i][j] == 0) != (a[j][i] == 0)) throw ConfigError("Cartan zero pattern must be symmetric");
        }
    }
    // d_i a_ij = d_j a_ji, propagated along the Dynkin graph
    std::vector<mpq_class> d(n, 0);
    for (size_t root = 0; root < n; ++root) {
        if (d[root] != 0) continue;
        d[root] = 1;
        std::vector<size_t> stack{root};
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                mpq_class dj = d[i] * a[i][j] / a[j][i];
                if (d[j] == 0) {
                    d[j] = dj;
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    throw ConfigError("Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    mpz_class lcm = 1;
    for (auto& x : d) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> di(n);
    mpz_class g = 0;
    for (size_t i = 0; i < n; ++i) {
        mpq_class v = d[i] * lcm;
        di[i] = v.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), di[i].get_mpz_t());
    }
    std::vector<int> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = static_cast<int>(mpz_class(di[i] / g).get_si());
    // finite type: the symmetrized form is positive definite
    for (size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) m[i][j] = mpq_class(out[i]) * a[i][j];
        if (det(m) <= 0) throw ConfigError("Cartan matrix is not of finite type");
    }
    return out;
}

void check_coprime(const CartanMatrix& a, int l) {
    auto sym = validate_cartan(a);
    for (const auto& row : a)
        for (int x : row)
            if (x != 0 && std::gcd(l, std::abs(x)) != 1)
                throw ConfigError("l=" + std::to_string(l) + " is not coprime to Cartan entry " + std::to_string(x));
    for (int d : sym)
        if (std::gcd(l, d) != 1) throw ConfigError("l is not coprime to a symmetrizer");
}

MultiTorusElement product_kappa_multi(const RootParams* rp, const CartanMatrix& cartan, const std::vector<long>& j) {
    check_coprime(cartan, rp->l);
    auto sym = validate_cartan(cartan);
    const int rank = static_cast<int>(cartan.size());
    if (static_cast<int>(j.size()) != rank) throw ConfigError("residue vector length must equal the rank");
    MultiTorusElement out = MultiTorusElement::one(rp, rank, sym);
    const long n = 2 * rp->l;
    for (int i = 0; i < rank; ++i) {
        MultiTorusElement f(rp, rank, sym);
        for (long r = 0; r < n; ++r) {
            CycloScalar cf = q_power_half(rp, -j[i] * r);
            cf.div_int(n);
            MultiTorusElement k = MultiTorusElement::k_power(rp, rank, sym, i, r);
            for (auto& x : k.c) x = x * cf;
            f += k;
        }
        out = multi_mul(out, f);
    }
    return out;
}

}  // namespace qfrob
