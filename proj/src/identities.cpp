#include "qfrob/identities.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "qfrob/uq_sl2.hpp"

namespace qfrob {

EvalPoint EvalPoint::q_powers(const RootParams* rp, const std::vector<long>& exps) {
    EvalPoint p{rp, {}};
    for (long e : exps) p.x.push_back(q_power(rp, e));
    return p;
}

bool EvalPoint::pairwise_distinct() const {
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) return false;
    return true;
}

std::optional<std::pair<int, long>> as_signed_q_power(const CycloScalar& x) {
    const RootParams* rp = x.params();
    if (!rp) return std::nullopt;
    for (long e = 0; e < rp->l; ++e) {
        auto qe = q_power(rp, e);
        if (x == qe) return std::make_pair(1, e);
        if (x == -qe) return std::make_pair(-1, e);
    }
    return std::nullopt;
}

mpz_class s_poly_term_count(long d, long n) { return binom_z(n + d - 1, d); }

namespace {

template <class F>
void for_each_tuple(long d, long n, F&& f) {
    std::vector<long> idx(d, 0);
    if (d == 0) {
        f(idx);
        return;
    }
    while (true) {
        f(idx);
        long k = d - 1;
        while (k >= 0 && idx[k] == n - 1) --k;
        if (k < 0) return;
        ++idx[k];
        for (long j = k + 1; j < d; ++j) idx[j] = idx[k];
    }
}

}  // namespace

CycloScalar s_poly(long d, const EvalPoint& pt) {
    const RootParams* rp = pt.rp;
    const long n = static_cast<long>(pt.x.size());
    if (d < 0) throw ConfigError("S_{d,n} needs d >= 0");
    if (d == 0) return CycloScalar::one(rp);
    if (n == 0) return CycloScalar(rp);
    std::vector<std::pair<int, long>> mono;
    for (const auto& xi : pt.x) {
        auto m = as_signed_q_power(xi);
        if (!m) break;
        mono.push_back(*m);
    }
    if (static_cast<long>(mono.size()) == n) {
        // exponent-only: count tuples by (sign, exponent mod l)
        const long l = rp->l;
        std::vector<long> cnt(2 * l, 0);
        for_each_tuple(d, n, [&](const std::vector<long>& idx) {
            long e = 0;
            int s = 1;
            for (long i : idx) {
                e += mono[i].second;
                s *= mono[i].first;
            }
            cnt[(s < 0 ? l : 0) + pos_mod(e, l)]++;
        });
        std::vector<mpz_class> num(l, 0);
        for (long e = 0; e < l; ++e) num[e] = cnt[e] - cnt[l + e];
        return CycloScalar(rp, num, 1);
    }
    CycloScalar sum(rp);
    for_each_tuple(d, n, [&](const std::vector<long>& idx) {
        CycloScalar t = CycloScalar::one(rp);
        for (long i : idx) t *= pt.x[i];
        sum += t;
    });
    return sum;
}

CycloScalar s_poly_recurrence(long d, const EvalPoint& pt) {
    const RootParams* rp = pt.rp;
    if (d < 0) throw ConfigError("S_{d,n} needs d >= 0");
    // row[k] = S_{k, j} for the current prefix length j
    std::vector<CycloScalar> row(d + 1, CycloScalar(rp));
    row[0] = CycloScalar::one(rp);
    for (const auto& xn : pt.x) {
        std::vector<CycloScalar> next(d + 1, CycloScalar(rp));
        for (long k = 0; k <= d; ++k) {
            CycloScalar p = CycloScalar::one(rp);
            for (long i = 0; i <= k; ++i) {
                next[k] += p * row[k - i];
                p *= xn;
            }
        }
        row = std::move(next);
    }
    return row[d];
}

CycloScalar s_poly_quotient(long d, const EvalPoint& pt) {
    const RootParams* rp = pt.rp;
    const long n = static_cast<long>(pt.x.size());
    if (d < 0) throw ConfigError("S_{d,n} needs d >= 0");
    if (!pt.pairwise_distinct()) throw ConfigError("successive quotients need pairwise distinct points");
    if (d == 0) return CycloScalar::one(rp);
    if (n == 0) return CycloScalar(rp);
    std::vector<CycloScalar> q;
    for (const auto& xi : pt.x) q.push_back(xi.pow(d + n - 1));
    for (long k = 1; k < n; ++k)
        for (long i = n - 1; i >= k; --i) q[i] = (q[i] - q[i - 1]) * (pt.x[i] - pt.x[i - k]).inv();
    return q[n - 1];
}

CycloScalar a_coef(const RootParams* rp, long c, long t) {
    return q_power(rp, t - c) * (q_power(rp, t + 1) - q_power(rp, -t - 1));
}

CycloScalar b_coef(const RootParams* rp, long c, long t) { return q_power(rp, 2 * (t - c)); }

namespace {

EvalPoint b_points(const RootParams* rp, long c, long from, long count) {
    EvalPoint p{rp, {}};
    for (long k = 0; k < count; ++k) p.x.push_back(b_coef(rp, c, from + k));
    return p;
}

CycloScalar a_product(const RootParams* rp, long c, long t, long upto) {
    CycloScalar p = CycloScalar::one(rp);
    for (long j = 0; j <= upto; ++j) p *= a_coef(rp, c, t + j);  // empty when upto < 0
    return p;
}

void put(AlphaTable& tab, int delta, long n, const CycloScalar& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = tab.emplace(std::make_pair(delta, n), v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) tab.erase(it);
    }
}

}  // namespace

AlphaTable alpha_coefficients(const RootParams* rp, long m, long t, long c) {
    if (m < 0 || t < 0) throw ConfigError("alpha needs m, t >= 0");
    AlphaTable tab;
    if (m == 0) {
        put(tab, 0, t, CycloScalar::one(rp));
        return tab;
    }
    if (m == 1) {
        put(tab, 1, t, CycloScalar::one(rp));
        return tab;
    }
    const long half = m / 2;
    for (long i = 0; i <= half - 1; ++i) {
        const long w = m - 2 * i;
        CycloScalar prod = a_product(rp, c, t, w - 3);
        put(tab, 1, t + w - 1, a_coef(rp, c, t + w - 2) * prod * s_poly_recurrence(i, b_points(rp, c, t, w)));
        put(tab, 0, t + w - 2, b_coef(rp, c, t + w - 2) * prod * s_poly_recurrence(i, b_points(rp, c, t, w - 1)));
    }
    if (m % 2) put(tab, 1, t, b_coef(rp, c, t).pow(half));
    return tab;
}

AlphaTable alpha_by_interpolation(const RootParams* rp, long m, long t, long c) {
    // K^delta[K;c;n](lambda - c) = q^{-delta c} K^delta[K;0;n](lambda)
    auto f = [&](long lam, int sg) {
        const long x = lam - c;
        CycloScalar v = q_power(rp, m * x) * gauss_binomial(rp, x + c, t);
        if (sg < 0 && (m + t) % 2) v = -v;
        return v;
    };
    auto big = interpolate_fn(f, rp, t + m);
    AlphaTable tab;
    for (const auto& [k, v] : big.coords) put(tab, k.first, k.second, k.first ? v * q_power(rp, c) : v);
    return tab;
}

// ---------------------------------------------------------------- vanishing suite

namespace {

constexpr long kEnumerationCap = 200000;

std::vector<long> distinct_residues(long l, long n, std::mt19937_64& rng, bool exclude_zero) {
    std::vector<long> pool;
    for (long e = exclude_zero ? 1 : 0; e < l; ++e) pool.push_back(e);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(n);
    return pool;
}

EvalPoint q2_points(const RootParams* rp, const std::vector<long>& e) {
    std::vector<long> two;
    for (long x : e) two.push_back(2 * x);
    return EvalPoint::q_powers(rp, two);
}

nlohmann::json exps_json(const std::vector<long>& e) {
    nlohmann::json j = nlohmann::json::array();
    for (long x : e) j.push_back(2 * x);
    return j;
}

}  // namespace

std::vector<Check> vanishing_suite(const RootParams* rp, const SuiteOptions& opt) {
    const long l = rp->l;
    std::vector<Check> out;
    std::mt19937_64 rng(opt.seed);
    const bool exhaustive = opt.exhaustive || l <= 15;
    const std::string ltag = " l=" + std::to_string(l);

    // S_{d,n} = 0 for d + n >= l + 1
    for (long n = 2; n <= l; ++n)
        for (long d = std::max(1L, l + 1 - n); d <= l - 1; ++d) {
            if (!exhaustive && static_cast<int>(rng() % 4) != 0) continue;
            std::vector<std::vector<long>> sets;
            std::vector<long> first(n);
            for (long k = 0; k < n; ++k) first[k] = k;
            sets.push_back(first);
            for (int k = 0; k < 2; ++k) sets.push_back(distinct_residues(l, n, rng, false));
            bool ok = true, routes_agree = true, enumerated = false;
            nlohmann::json w = {{"d", d}, {"n", n}};
            for (const auto& e : sets) {
                auto pt = q2_points(rp, e);
                auto v = s_poly_quotient(d, pt);
                if (!v.is_zero()) {
                    ok = false;
                    w["exponents"] = exps_json(e);
                    w["value"] = scalar_json(v);
                }
                if (s_poly_recurrence(d, pt) != v) routes_agree = false;
                if (s_poly_term_count(d, n) <= kEnumerationCap) {
                    enumerated = true;
                    if (s_poly(d, pt) != v) routes_agree = false;
                }
            }
            w["enumerated"] = enumerated;
            out.push_back(make_check("S_{d,n} vanishes d=" + std::to_string(d) + " n=" + std::to_string(n) + ltag,
                                     "S_{d,n}(q_1..q_n) = 0 for distinct l-th roots, d+n >= l+1", ok && routes_agree,
                                     w));
        }

    // sum_{d<l} S_{d,n} = 0 at distinct roots other than 1
    for (long n = 1; n <= l - 1; ++n) {
        bool ok = true;
        nlohmann::json w = {{"n", n}};
        for (int k = 0; k < 3; ++k) {
            std::vector<long> e(n);
            if (k == 0)
                for (long j = 0; j < n; ++j) e[j] = j + 1;
            else
                e = distinct_residues(l, n, rng, true);
            auto pt = q2_points(rp, e);
            CycloScalar s(rp);
            for (long d = 0; d <= l - 1; ++d) s += s_poly_recurrence(d, pt);
            if (!s.is_zero()) {
                ok = false;
                w["exponents"] = exps_json(e);
                w["value"] = scalar_json(s);
            }
        }
        out.push_back(make_check("sum_d S_{d,n} vanishes n=" + std::to_string(n) + ltag,
                                 "sum_{d=0}^{l-1} S_{d,n}(q_1..q_n) = 0 for distinct roots != 1", ok, w));
    }

    // closed value at (1, q^2, ..., q^{2(n-1)})
    for (long n = 1; n <= l - 1; ++n) {
        std::vector<long> e(n);
        for (long j = 0; j < n; ++j) e[j] = j;
        auto pt = q2_points(rp, e);
        CycloScalar s(rp);
        for (long d = 0; d <= l - 1; ++d) s += s_poly_recurrence(d, pt);
        CycloScalar den = CycloScalar::one(rp), alt = CycloScalar::one(rp);
        for (long k = 1; k <= n - 1; ++k) den *= CycloScalar::one(rp) - q_power(rp, 2 * k);
        for (long i = 0; i <= n - 2; ++i) alt *= a_coef(rp, 0, i);
        alt *= q_power(rp, n - 1);
        if ((n - 1) % 2) alt = -alt;
        CycloScalar want = CycloScalar(rp, l) * den.inv();
        out.push_back(make_check("closed sum n=" + std::to_string(n) + ltag,
                                 "sum_{i<l} S_{i,n}(1,q^2,..,q^{2(n-1)}) = l / prod_{k<n} (1 - q^{2k})",
                                 s == want && den == alt, {{"n", n}, {"value", scalar_json(s)}}));
    }
    return out;
}

// ---------------------------------------------------------------- nullity suite

NullityFamilies nullity_families(const RootParams* rp, long s) {
    const long l = rp->l;
    const long c = 2 * s;
    NullityFamilies nf;
    auto sums = [&](long top, long npts) {
        auto pt = b_points(rp, c, s, npts);
        CycloScalar acc(rp);
        for (long d = 0; d <= top; ++d) acc += q_power(rp, 4 * s * d) * s_poly_recurrence(d, pt);
        return acc;
    };
    auto set = [&](int fam, int delta, long n, const CycloScalar& v) {
        nf.value[{delta, n}] = v;
        nf.family[{delta, n}] = fam;
    };
    set(1, 0, s, sums(l - 1, 1));
    for (long i = 1; i <= 2 * l - 1; i += 2) {
        const long j = (i - 1) / 2;
        set(2, 1, s + i - 1, q_power(rp, 2 * s * i) * a_product(rp, c, s, i - 2) * sums(l - 1 - j, i));
    }
    for (long i = 1; i <= 2 * l - 3; i += 2) {
        const long j = (i - 1) / 2;
        set(3, 0, s + i,
            q_power(rp, 2 * s * (i + 2)) * b_coef(rp, c, s + i) * a_product(rp, c, s, i - 1) * sums(l - 2 - j, i + 1));
    }
    for (long i = 2; i <= 2 * l - 2; i += 2) {
        const long j = i / 2;
        set(4, 1, s + i - 1, q_power(rp, 2 * s * i) * a_product(rp, c, s, i - 2) * sums(l - 1 - j, i));
    }
    for (long i = 2; i <= 2 * l - 4; i += 2) {
        const long j = i / 2;
        set(5, 0, s + i,
            q_power(rp, 2 * s * (i + 2)) * b_coef(rp, c, s + i) * a_product(rp, c, s, i - 1) * sums(l - 2 - j, i + 1));
    }
    return nf;
}

std::vector<Check> nullity_suite(const RootParams* rp, int a, int b) {
    const long l = rp->l;
    std::vector<Check> out;
    const long smax = std::min(l * a, l * b);
    auto fundamental = verify_fundamental_vanishing(rp, a, b);
    for (long s = 1; s <= smax; ++s) {
        const long c = 2 * s - l * (a + b);
        auto nf = nullity_families(rp, s);
        // actual coordinates of kappa_{-s}[K;c;s] in the c-basis
        TorusFn f = torus_fn(kappa(rp, -s)) * bracket_fn(rp, c, s);
        auto big = big_from_fn(f.shifted(0, -c), s + 2 * l);
        std::map<std::pair<int, long>, CycloScalar> actual;
        for (const auto& [k, v] : big.coords) actual[{k.first, k.second}] = k.first ? v * q_power(rp, c) : v;
        bool match = true;
        for (const auto& [k, v] : actual) {
            auto it = nf.value.find(k);
            CycloScalar scaled = it == nf.value.end() ? CycloScalar(rp) : it->second;
            scaled.div_int(2 * l);
            if (scaled != v) match = false;
        }
        for (const auto& [k, v] : nf.value)
            if (!v.is_zero() && !actual.count(k)) match = false;
        bool all_zero = true;
        int first_nonzero_family = 0;
        for (const auto& [k, v] : nf.value)
            if (!v.is_zero()) {
                all_zero = false;
                if (!first_nonzero_family) first_nonzero_family = nf.family.at(k);
            }
        // trivially zero members: products through a_{2s}(l-1)
        bool trivial_ok = true;
        for (const auto& [k, v] : nf.value) {
            const int fam = nf.family.at(k);
            const long i = k.first ? k.second - s + 1 : k.second - s;
            if ((fam == 2 || fam == 4) && i > l && !v.is_zero()) trivial_ok = false;
        }
        const std::string tag = " l=" + std::to_string(l) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                " s=" + std::to_string(s);
        nlohmann::json w = {{"s", s}, {"c", c}, {"coordinates", nf.value.size()}};
        out.push_back(make_check("families match coordinates" + tag,
                                 "2l * coord_{delta,n}(kappa_{-s}[K;c;s]) = family expression (c-basis)", match, w));
        out.push_back(make_check("trivially zero members" + tag,
                                 "prod_{k=0}^{i-2} a_{2s}(s+k) = 0 for i > l (contains a_{2s}(l-1))", trivial_ok, w));
        bool fund_zero = false;
        for (const auto& ch : fundamental)
            if (ch.witness.value("s", -1L) == s) fund_zero = ch.witness.value("nonzero_coords", 1) == 0;
        if (s % l) {
            w["first_nonzero_family"] = first_nonzero_family;
            out.push_back(make_check("five families vanish" + tag,
                                     "families (1)-(5) of kappa_{-s}[K;c;s] are 0 for l not dividing s",
                                     all_zero && fund_zero, w));
        } else {
            Check ch = make_check("families at l | s" + tag, "families (1)-(5) need not vanish for l | s",
                                  !all_zero && !fund_zero, w);
            ch.status = Status::info;
            out.push_back(ch);
        }
    }
    return out;
}

}  // namespace qfrob
