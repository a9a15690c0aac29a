#include "qfrob/hyper_mod.hpp"

#include <string>

namespace qfrob {

long int_pow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

namespace {

void check_prime(long p) {
    if (!is_prime(p)) throw ConfigError("p=" + std::to_string(p) + " is not prime");
}

long level_size(long p, int r) {
    if (r < 1) throw ConfigError("level r must be positive");
    long n = int_pow(p, r);
    if (n > 4096) throw ConfigError("p^r too large");
    return n;
}

}  // namespace

DistTElement::DistTElement(long p_, int r_) : p(p_), r(r_) {
    check_prime(p);
    c.assign(level_size(p, r), ModPScalar(0, p));
}

ModPScalar DistTElement::value(long x) const {
    ModPScalar s(0, p);
    for (long i = 0; i < size(); ++i)
        if (!c[i].is_zero()) s += c[i] * binom_mod_p(x, i, p);
    return s;
}

DistTElement DistTElement::from_values(long p, int r, const std::vector<ModPScalar>& v) {
    DistTElement out(p, r);
    const long n = out.size();
    if (static_cast<long>(v.size()) != n) throw ConfigError("need one value per residue");
    for (long i = 0; i < n; ++i) {
        ModPScalar s(0, p);
        for (long j = 0; j <= i; ++j) {
            auto t = binom_mod_p(i, j, p) * v[j];
            s += ((i - j) % 2) ? -t : t;
        }
        out.c[i] = s;
    }
    return out;
}

DistTElement DistTElement::one(long p, int r) {
    DistTElement out(p, r);
    out.c[0] = ModPScalar(1, p);
    return out;
}

DistTElement& DistTElement::operator+=(const DistTElement& o) {
    for (long i = 0; i < size(); ++i) c[i] += o.c[i];
    return *this;
}

DistTElement operator*(const DistTElement& a, const DistTElement& b) {
    if (a.p != b.p || a.r != b.r) throw ConfigError("Dist(T_r) levels differ");
    std::vector<ModPScalar> v;
    for (long x = 0; x < a.size(); ++x) v.push_back(a.value(x) * b.value(x));
    return DistTElement::from_values(a.p, a.r, v);
}

ModElement DistTElement::as_element() const { return ModElement::torus(PrimeField{p}, c); }

DistTElement mu(long p, long n, int r) {
    DistTElement out(p, r);
    const long N = out.size();
    const long m = pos_mod(n, N);
    for (long i = 0; i < N; ++i) out.c[i] = binom_mod_p(N - 1 - m, N - 1 - i, p);
    return out;
}

Matrix<ModPScalar> mu_to_binom_matrix(long p, int r) {
    const long N = level_size(p, r);
    Matrix<ModPScalar> m(N, N, ModPScalar(0, p));
    for (long i = 0; i < N; ++i)
        for (long n = 0; n < N; ++n) m(i, n) = binom_mod_p(N - 1 - n, N - 1 - i, p);
    return m;
}

Matrix<ModPScalar> binom_to_mu_matrix(long p, int r) {
    const long N = level_size(p, r);
    Matrix<ModPScalar> m(N, N, ModPScalar(0, p));
    for (long n = 0; n < N; ++n)
        for (long i = 0; i < N; ++i) m(n, i) = binom_mod_p(n, i, p);
    return m;
}

std::vector<ModPScalar> shifted_binom_vandermonde(long p, long m, long n) {
    std::vector<ModPScalar> g(n + 1, ModPScalar(0, p));
    for (long k = 0; k <= n; ++k) g[k] = binom_mod_p(-m, n - k, p);
    ModElement::trim(g);
    return g;
}

std::vector<ModPScalar> shifted_binom_via_mu(long p, long m, long n, int r) {
    const long N = level_size(p, r);
    if (n >= N) throw ConfigError("binom(H-m, n) needs n < p^r on this route");
    DistTElement acc(p, r);
    for (long j = 0; j < N; ++j) {
        auto w = binom_mod_p(j - m, n, p);
        if (w.is_zero()) continue;
        auto mj = mu(p, j, r);
        for (auto& x : mj.c) x = x * w;
        acc += mj;
    }
    ModElement::trim(acc.c);
    return acc.c;
}

ModElement mod_basis(long p, int a, int i, int c) {
    check_prime(p);
    return ModElement::basis(PrimeField{p}, a, i, c);
}

ModElement mu_element(long p, long n, int r) { return mu(p, n, r).as_element(); }

ModElement fr_dist(const ModElement& x) {
    const long p = x.ring().p;
    ModElement out(x.ring(), x.bounds());
    for (const auto& [k, g] : x.terms()) {
        if (k.first % p || k.second % p) continue;
        std::vector<ModPScalar> h;
        for (size_t i = 0; i < g.size(); i += p) h.push_back(g[i]);
        out.add_term(static_cast<int>(k.first / p), static_cast<int>(k.second / p), std::move(h));
    }
    return out;
}

ModElement fr_prime(const ModElement& x) {
    const long p = x.ring().p;
    ModElement out(x.ring(), x.bounds());
    for (const auto& [k, g] : x.terms()) {
        std::vector<ModPScalar> h((g.size() - 1) * p + 1, ModPScalar(0, p));
        for (size_t i = 0; i < g.size(); ++i) h[i * p] = g[i];
        out.add_term(static_cast<int>(k.first * p), static_cast<int>(k.second * p), std::move(h));
    }
    return out;
}

ModElement phi_modular(const ModElement& x) {
    return hyper_mul(fr_prime(x), mu_element(x.ring().p, 0, 1));
}

std::vector<Check> commute_mu(long p, int a, long b, int c, int r) {
    std::vector<Check> out;
    const std::string tag = " p=" + std::to_string(p) + " r=" + std::to_string(r) + " a=" + std::to_string(a) +
                            " b=" + std::to_string(b) + " c=" + std::to_string(c);
    const nlohmann::json w = {{"p", p}, {"r", r}, {"a", a}, {"b", b}, {"c", c}};
    auto X = mod_basis(p, a, 0, 0), Y = mod_basis(p, 0, 0, c);
    out.push_back(make_check("X mu" + tag, "X^(a) mu_b^(r) = mu_{b+2a}^(r) X^(a)",
                             X * mu_element(p, b, r) == mu_element(p, b + 2L * a, r) * X, w));
    out.push_back(make_check("Y mu" + tag, "Y^(c) mu_b^(r) = mu_{b-2c}^(r) Y^(c)",
                             Y * mu_element(p, b, r) == mu_element(p, b - 2L * c, r) * Y, w));
    // binom(H - m, i) is a function of H mod p^r only when i < p^r
    int rs = r;
    while (int_pow(p, rs) <= std::min(a, c)) ++rs;
    const long N = int_pow(p, rs);
    ModElement rhs(PrimeField{p});
    for (int i = 0; i <= std::min(a, c); ++i) {
        auto yx = mod_basis(p, 0, 0, c - i);
        for (long j = 0; j < N; ++j) {
            auto coef = binom_mod_p(j - a - c + 2L * i, i, p);
            if (coef.is_zero()) continue;
            rhs += (yx * mu_element(p, j, rs) * mod_basis(p, a - i, 0, 0)).scaled(coef);
        }
    }
    out.push_back(make_check("XY straightening" + tag,
                             "X^(a) Y^(c) = sum_i sum_j binom(j-a-c+2i, i) Y^(c-i) mu_j^(r) X^(a-i)", X * Y == rhs,
                             {{"p", p}, {"r", rs}, {"a", a}, {"b", b}, {"c", c}}));
    return out;
}

ModElement reduction_from_quantum(const PBWElement& x) {
    const long p = x.params()->l;
    if (!is_prime(p)) throw UnsupportedError("reduction to Dist(G) needs l prime, got l=" + std::to_string(p));
    PrimeField f{p};
    ModElement out(f);
    for (const auto& [k, v] : x.coords()) {
        const auto [a, delta, t, b] = k;
        (void)delta;
        ModPScalar s(v.reduce_mod_p(p), p);
        if (s.is_zero()) continue;
        auto term = mod_basis(p, 0, 0, a) * ModElement::basis(f, 0, static_cast<int>(t), 0) * mod_basis(p, b, 0, 0);
        out += term.scaled(s);
    }
    return out;
}

ModElement reduce_classical(const ClassicalElement& x, long p) {
    check_prime(p);
    PrimeField f{p};
    ModElement out(f);
    for (const auto& [k, v] : x.coords()) {
        const auto [a, i, c] = k;
        out += ModElement::basis(f, a, i, c).scaled(ModPScalar(v.reduce_mod_p(p), p));
    }
    return out;
}

namespace {

std::vector<ModPScalar> coord_vector(const ModElement& x, long N) {
    const long p = x.ring().p;
    std::vector<ModPScalar> v(N * N * N, ModPScalar(0, p));
    // coordinates in the basis X^(a) mu_j Y^(c): values of the torus part at j
    for (const auto& [k, g] : x.terms())
        for (long j = 0; j < N; ++j) v[(k.first * N + j) * N + k.second] = hpoly_eval(x.ring(), g, j);
    return v;
}

size_t rank_of(const std::vector<std::vector<ModPScalar>>& rows, long p) {
    if (rows.empty()) return 0;
    Matrix<ModPScalar> m(rows.size(), rows[0].size(), ModPScalar(0, p));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return mat_rank(m);
}

}  // namespace

std::vector<Check> block_decomposition_check(long p, int r, int s) {
    check_prime(p);
    if (s < 1 || s > r) throw ConfigError("need 1 <= s <= r");
    const long N = level_size(p, r), Ns = int_pow(p, s);
    if (N * N * N > 200000) throw ConfigError("Dist(G_r) too large for a block check");
    std::vector<Check> out;
    const std::string tag = " p=" + std::to_string(p) + " r=" + std::to_string(r) + " s=" + std::to_string(s);

    std::vector<ModElement> left, right;
    for (long n = 0; n < Ns; ++n) {
        left.push_back(mu_element(p, n, s));
        right.push_back(left.back());
    }
    std::vector<std::vector<ModPScalar>> all_rows;
    long total = 0;
    bool congruence_ok = true, all_nonzero = true;
    nlohmann::json dims = nlohmann::json::array();
    for (long n = 0; n < Ns; ++n)
        for (long m = 0; m < Ns; ++m) {
            std::vector<std::vector<ModPScalar>> rows;
            for (long a = 0; a < N; ++a)
                for (long c = 0; c < N; ++c)
                    for (long j = 0; j < N; ++j) {
                        auto b = mod_basis(p, static_cast<int>(a), 0, 0) * mu_element(p, j, r) *
                                 mod_basis(p, 0, 0, static_cast<int>(c));
                        auto e = left[n] * b * right[m];
                        // predicted: nonzero iff j = n - 2a = m - 2c mod p^s
                        const bool predicted = pos_mod(j - n + 2 * a, Ns) == 0 && pos_mod(j - m + 2 * c, Ns) == 0;
                        if (e.is_zero() == predicted) congruence_ok = false;
                        if (!e.is_zero()) rows.push_back(coord_vector(e, N));
                    }
            const size_t d = rank_of(rows, p);
            if (d == 0 && (p != 2 || n == m)) all_nonzero = false;
            total += static_cast<long>(d);
            dims.push_back({{"n", n}, {"m", m}, {"dim", d}});
            for (auto& row : rows) all_rows.push_back(std::move(row));
        }
    out.push_back(make_check("block congruence" + tag,
                             "mu_n^(s) X^(a) mu_j^(r) Y^(c) mu_m^(s) != 0 iff n+2c = m+2a = j+2a+2c mod p^s (j = n-2a)",
                             congruence_ok));
    out.push_back(make_check("blocks nonzero" + tag, "mu_n^(s) Dist(G_r) mu_m^(s) != 0 whenever n+2c = m+2a is solvable",
                             all_nonzero, {{"dims", dims}}));
    const long full = N * N * N;
    const size_t direct = rank_of(all_rows, p);
    out.push_back(make_check("blocks form a direct sum" + tag,
                             "Dist(G_r) = direct sum of mu_n^(s) Dist(G_r) mu_m^(s)",
                             total == full && static_cast<long>(direct) == full,
                             {{"sum_of_dims", total}, {"rank_of_union", direct}, {"dim", full}}));

    if (r == 1) {
        // left ideals Dist(G_1) mu_n: dimension p^2 and the predicted summands
        for (long n = 0; n < p; ++n) {
            std::vector<std::vector<ModPScalar>> rows;
            std::vector<long> census(p, 0);
            for (long a = 0; a < p; ++a)
                for (long c = 0; c < p; ++c) {
                    auto e = mod_basis(p, static_cast<int>(a), 0, static_cast<int>(c)) * mu_element(p, n, 1);
                    if (!e.is_zero()) rows.push_back(coord_vector(e, N));
                    census[pos_mod(2 * (a - c) + n, p)]++;
                }
            const size_t d = rank_of(rows, p);
            long predicted;
            nlohmann::json w = {{"n", n}, {"dim", d}};
            if (p == 2) {
                predicted = 4;  // Q(0) for n = 0, St + St for n = 1
                w["summands"] = n == 0 ? "Q(0)" : "St+St";
            } else {
                // (p-1)/2 projective covers of dimension 2p and one Steinberg
                predicted = (p - 1) / 2 * 2 * p + p;
                w["summands"] = (p + 1) / 2;
            }
            bool census_ok = true;
            for (long k = 0; k < p; ++k) census_ok &= census[k] == (p == 2 ? (k == n ? 4 : 0) : p);
            w["weight_census"] = census;
            out.push_back(make_check("left ideal Dist(G_1) mu_" + std::to_string(n) + tag,
                                     "dim Dist(G_1) mu_n = p^2 = sum of summand dims (2p per Q(m), p per St)",
                                     static_cast<long>(d) == p * p && predicted == p * p && census_ok, w));
        }
    }
    return out;
}

}  // namespace qfrob
