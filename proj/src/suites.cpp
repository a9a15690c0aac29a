#include "qfrob/suites.hpp"

#include <functional>
#include <random>

#include "qfrob/hyper_mod.hpp"
#include "qfrob/repr.hpp"

namespace qfrob {

void SuiteConfig::validate() const {
    if (l < 3 || l % 2 == 0) throw ConfigError("l must be an odd integer >= 3, got " + std::to_string(l));
    if (l > 61) throw ConfigError("l above 61 is out of the supported range");
    if (p && (*p < 2 || !is_prime(*p))) throw ConfigError("p must be prime");
    if (a_max < 0 || t_max < 0) throw ConfigError("bounds must be non-negative");
    if (module_cap == 0 || module_cap > kModuleCap)
        throw ConfigError("module cap must lie in [1, " + std::to_string(kModuleCap) + "]");
    if (opt.samples < 0) throw ConfigError("samples must be non-negative");
    validate_cartan(cartan);
    check_coprime(cartan, l);
}

PBWBounds SuiteConfig::bounds(int a_floor, long t_floor) const {
    return {std::max(a_max, a_floor), std::max(t_max, t_floor)};
}

long SuiteConfig::modular_p() const {
    if (p) return *p;
    if (is_prime(l)) return l;
    throw ConfigError("l = " + std::to_string(l) + " is not prime; pass p for the modular suites");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"torus",       "splitting", "identities", "modular",
                                                   "contraction", "hopf",      "blocks"};
    return names;
}

std::vector<Check> run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "torus") return torus_suite(cfg);
    if (name == "splitting") return splitting_suite(cfg);
    if (name == "identities") return identities_suite(cfg);
    if (name == "modular") return modular_suite(cfg);
    if (name == "contraction") return contraction_suite(cfg);
    if (name == "hopf") return hopf_suite(cfg);
    if (name == "blocks") return blocks_suite(cfg);
    throw ConfigError("unknown suite '" + name + "'");
}

TorusFn kappa_closed_form(const RootParams* rp, long n, int sign) {
    const long l = rp->l;
    TorusFn s(rp, 1);
    const TorusFn k = basis_fn(rp, 1, 0);
    for (long i = 0; i < l; ++i) {
        TorusFn br = bracket_fn(rp, -2 * n, i);
        if (sign > 0 && i % 2) br = br.scaled(CycloScalar(rp, -1L));
        TorusFn tail = k.scaled(q_power(rp, -i - 2 * n));
        TorusFn head = TorusFn::constant(rp, 1, q_power(rp, i));
        s += br * (sign > 0 ? head + tail : head - tail);
    }
    return s.scaled(CycloScalar::rational(rp, mpq_class(1, 2)));
}

namespace {

struct Outcome {
    bool ok = true;
    nlohmann::json witness = nullptr;
};

// Runs body(i) for i < n, OpenMP-parallel unless ex is serial; the first failure
// (lowest index) becomes the witness.
Check sampled(const std::string& name, const std::string& ref, int n, Exec ex,
              const std::function<Outcome(int)>& body) {
    std::vector<Outcome> res(static_cast<size_t>(std::max(n, 0)));
#pragma omp parallel for schedule(dynamic) if (ex == Exec::parallel)
    for (int i = 0; i < n; ++i) {
        try {
            res[i] = body(i);
        } catch (const std::exception& e) {
            res[i] = {false, {{"index", i}, {"error", e.what()}}};
        }
    }
    int failed = 0;
    nlohmann::json first = nullptr;
    for (const auto& r : res)
        if (!r.ok) {
            if (failed++ == 0) first = r.witness;
        }
    nlohmann::json w = {{"cases", n}, {"failed", failed}};
    if (!first.is_null()) w["first_failure"] = first;
    return make_check(name, ref, failed == 0, w);
}

std::string lt(const RootParams* rp) { return " (l=" + std::to_string(rp->l) + ")"; }
std::string pt(long p) { return " (p=" + std::to_string(p) + ")"; }

std::mt19937_64 suite_rng(const SuiteConfig& cfg, std::uint64_t salt) {
    return std::mt19937_64(cfg.opt.seed * 0x9E3779B97F4A7C15ULL + salt);
}

ClassicalElement cbasis(const RootParams* rp, int a, int i, int c) {
    return ClassicalElement::basis(CycloRing{rp}, a, i, c);
}

}  // namespace

// ---------------------------------------------------------------- torus

std::vector<Check> torus_suite(const SuiteConfig& cfg) {
    const RootParams* rp = make_root_params(cfg.l);
    const long l = cfg.l;
    std::vector<Check> out;
    const auto one = SmallTorusElement::one(rp);

    std::vector<SmallTorusElement> kp;
    SmallTorusElement sum(rp);
    for (long n = 0; n < 2 * l; ++n) {
        kp.push_back(kappa_prime(rp, n));
        sum += kp.back();
    }
    out.push_back(make_check("kappa' partition of unity" + lt(rp), "sum_n kappa'_n = 1", sum == one));
    out.push_back(sampled("kappa' orthogonal idempotents" + lt(rp), "kappa'_n kappa'_m = delta_nm kappa'_n",
                          static_cast<int>(4 * l * l), cfg.exec, [&](int idx) {
                              const long n = idx / (2 * l), m = idx % (2 * l);
                              const auto prod = kp[n] * kp[m];
                              const bool ok = n == m ? prod == kp[n] : prod.is_zero();
                              return Outcome{ok, {{"n", n}, {"m", m}}};
                          }));

    bool idem = true, period = true, absorbs = true;
    const auto K = SmallTorusElement::k_power(rp, 1);
    for (long n = 0; n < l; ++n) {
        const auto k = kappa(rp, n);
        idem = idem && k * k == k;
        period = period && kappa(rp, n + l) == k;
    }
    const auto k0 = kappa(rp, 0);
    absorbs = K * k0 == k0;
    out.push_back(make_check("kappa_n idempotent" + lt(rp), "kappa_n^2 = kappa_n", idem));
    out.push_back(make_check("kappa_n periodic in n" + lt(rp), "kappa_{n+l} = kappa_n", period));
    out.push_back(make_check("K kappa = kappa" + lt(rp), "K kappa = kappa", absorbs));

    out.push_back(sampled("averaged and closed forms agree" + lt(rp),
                          "kappa_n = 1/2 sum_i (-1)^i [K;-2n;i](q^i + q^{-i-2n} K), bar likewise",
                          static_cast<int>(2 * l), cfg.exec, [&](int idx) {
                              const long n = idx / 2;
                              const int sign = idx % 2 ? -1 : 1;
                              const auto avg = torus_fn(sign > 0 ? kappa(rp, n) : kappa_bar(rp, n));
                              return Outcome{avg == kappa_closed_form(rp, n, sign), {{"n", n}, {"sign", sign}}};
                          }));
    out.push_back(sampled("coordinates are dyadic" + lt(rp),
                          "kappa_n, kappa-bar_n, kappa'_n in Z[1/2]-span of K^delta [K;t]",
                          static_cast<int>(2 * l), cfg.exec, [&](int idx) {
                              const long n = idx;
                              const bool ok = big_from_fn(torus_fn(kappa(rp, n)), 2 * l).all_dyadic() &&
                                              big_from_fn(torus_fn(kappa_bar(rp, n)), 2 * l).all_dyadic() &&
                                              big_from_fn(torus_fn(kappa_prime(rp, n)), 2 * l).all_dyadic();
                              return Outcome{ok, {{"n", n}}};
                          }));

    const size_t rank = cfg.cartan.size();
    if (rank > 1) {
        const auto sym = validate_cartan(cfg.cartan);
        long count = 1;
        for (size_t i = 0; i < rank; ++i) count *= 2 * l;
        if (count > 4096) {
            out.push_back(Check{"multi-rank idempotents" + lt(rp), "sum_j prod_i kappa'_{j_i} = 1", Status::info,
                                {{"skipped", "index set too large"}, {"size", count}}});
        } else {
            MultiTorusElement total(rp, static_cast<int>(rank), sym);
            for (long idx = 0; idx < count; ++idx) {
                std::vector<long> j(rank);
                long r = idx;
                for (size_t i = 0; i < rank; ++i) {
                    j[i] = r % (2 * l);
                    r /= 2 * l;
                }
                total += product_kappa_multi(rp, cfg.cartan, j);
            }
            out.push_back(make_check("multi-rank idempotents sum to one" + lt(rp), "sum_j prod_i kappa'_{j_i} = 1",
                                     total == MultiTorusElement::one(rp, static_cast<int>(rank), sym),
                                     {{"rank", rank}}));
        }
    }
    return out;
}

// ---------------------------------------------------------------- splitting

std::vector<Check> splitting_suite(const SuiteConfig& cfg) {
    const RootParams* rp = make_root_params(cfg.l);
    const int l = cfg.l;
    const PBWBounds bd = cfg.bounds(5 * l, 8L * l);
    std::vector<Check> out;
    const CycloRing ring{rp};

    out.push_back(make_check("phi(1) = kappa" + lt(rp), "phi(1) = kappa",
                             phi(ClassicalElement::one(ring), bd) == kappa_element(rp, 0, bd)));
    out.push_back(sampled("Fr(phi(x)) = x on basis a,i,c <= 2" + lt(rp), "Fr o phi = id", 27, cfg.exec, [&](int idx) {
        const int a = idx / 9, i = (idx / 3) % 3, c = idx % 3;
        const auto x = cbasis(rp, a, i, c);
        return Outcome{frobenius(phi(x, bd)) == x, {{"a", a}, {"i", i}, {"c", c}}};
    }));

    auto rng = suite_rng(cfg, 1);
    std::uniform_int_distribution<int> d(0, 2);
    std::vector<std::array<int, 6>> pairs(cfg.opt.samples);
    for (auto& p : pairs)
        for (auto& v : p) v = d(rng);
    out.push_back(sampled("phi multiplicative on sampled pairs" + lt(rp), "phi(xy) = phi(x) phi(y)",
                          cfg.opt.samples, cfg.exec, [&](int idx) {
                              const auto& s = pairs[idx];
                              const auto x = cbasis(rp, s[0], s[1], s[2]), y = cbasis(rp, s[3], s[4], s[5]);
                              const auto px = phi(x, bd), py = phi(y, bd);
                              const bool ok = phi(hyper_mul(x, y), bd) == pbw_mul(px, py, Exec::serial);
                              return Outcome{ok, {{"x", {s[0], s[1], s[2]}}, {"y", {s[3], s[4], s[5]}}}};
                          }));

    std::vector<std::array<int, 8>> fr_pairs(cfg.opt.samples);
    std::uniform_int_distribution<int> e(0, 1);
    for (auto& p : fr_pairs)
        for (auto& v : p) v = e(rng);
    out.push_back(sampled("Fr multiplicative on sampled pairs" + lt(rp), "Fr(xy) = Fr(x) Fr(y)", cfg.opt.samples,
                          cfg.exec, [&](int idx) {
                              const auto& s = fr_pairs[idx];
                              const auto x = PBWElement::basis(rp, l * s[0], s[1], l * s[2] + s[3], l * s[0], bd);
                              const auto y = PBWElement::basis(rp, l * s[4], s[5], l * s[6] + s[7], l * s[4], bd);
                              const auto xy = pbw_mul(x, y, Exec::serial);
                              const auto f = frobenius(xy);
                              const bool ok = f == hyper_mul(frobenius(x), frobenius(y)) && f == frobenius_by_values(xy);
                              return Outcome{ok, {{"sample", idx}}};
                          }));

    const auto k = kappa_element(rp, 0, bd);
    bool central = true;
    for (int n = 1; n <= 2; ++n) {
        const auto en = PBWElement::e_pow(rp, l * n, bd), fn = PBWElement::f_pow(rp, l * n, bd);
        central = central && k * en == en * k && k * fn == fn * k;
    }
    out.push_back(make_check("kappa commutes with E^(ln), F^(ln)" + lt(rp), "kappa E^(ln) = E^(ln) kappa", central));

    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            auto v = verify_fundamental_vanishing(rp, a, b);
            out.insert(out.end(), v.begin(), v.end());
        }
    return out;
}

// ---------------------------------------------------------------- identities

std::vector<Check> identities_suite(const SuiteConfig& cfg) {
    const RootParams* rp = make_root_params(cfg.l);
    const long l = cfg.l;
    SuiteOptions opt = cfg.opt;
    auto out = vanishing_suite(rp, opt);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            auto v = nullity_suite(rp, a, b);
            out.insert(out.end(), v.begin(), v.end());
        }
    out.push_back(sampled("alpha closed form equals interpolation" + lt(rp),
                          "f(lambda) [lambda - c; t] expanded in K^delta [K;c;n]", static_cast<int>(2 * l * 3),
                          cfg.exec, [&](int idx) {
                              const long m = idx / 6, t = (idx / 2) % 3, c = (idx % 2) ? -l + 1 : 1;
                              return Outcome{alpha_coefficients(rp, m, t, c) == alpha_by_interpolation(rp, m, t, c),
                                             {{"m", m}, {"t", t}, {"c", c}}};
                          }));
    return out;
}

// ---------------------------------------------------------------- modular

std::vector<Check> modular_suite(const SuiteConfig& cfg) {
    const long p = cfg.modular_p();
    std::vector<Check> out;
    const PrimeField fld{p};
    for (int r = 1; r <= 2; ++r) {
        const long N = int_pow(p, r);
        const std::string tag = " (p=" + std::to_string(p) + " r=" + std::to_string(r) + ")";
        std::vector<DistTElement> mus;
        DistTElement total(p, r);
        for (long n = 0; n < N; ++n) {
            mus.push_back(mu(p, n, r));
            total += mus.back();
        }
        out.push_back(make_check("mu partition of unity" + tag, "sum_n mu_n = 1", total == DistTElement::one(p, r)));
        out.push_back(sampled("mu orthogonal idempotents" + tag, "mu_n mu_m = delta_nm mu_n", static_cast<int>(N * N),
                              cfg.exec, [&](int idx) {
                                  const long n = idx / N, m = idx % N;
                                  const auto prod = mus[n] * mus[m];
                                  return Outcome{prod == (n == m ? mus[n] : DistTElement(p, r)), {{"n", n}, {"m", m}}};
                              }));
        const auto prod = mat_mul(mu_to_binom_matrix(p, r), binom_to_mu_matrix(p, r), ModPScalar(0, p));
        out.push_back(make_check("base change matrices inverse" + tag, "mu <-> binom(H,i) base change",
                                 mat_equal(prod, Matrix<ModPScalar>::identity(N, ModPScalar(0, p), ModPScalar(1, p)))));
        out.push_back(sampled("Fr^r(mu_n) = delta_n0" + tag, "Fr^r(mu_n^(r)) = delta_{n,0}", static_cast<int>(N),
                              cfg.exec, [&](int n) {
                                  auto x = mu_element(p, n, r);
                                  for (int k = 0; k < r; ++k) x = fr_dist(x);
                                  return Outcome{x == (n == 0 ? ModElement::one(fld) : ModElement(fld)), {{"n", n}}};
                              }));
        out.push_back(sampled("mu commutation relations" + tag, "X^(a) mu_b = mu_{b+2a} X^(a)", 9 * 3, cfg.exec,
                              [&](int idx) {
                                  const int a = idx / 9, c = (idx / 3) % 3;
                                  const long b = std::array<long, 3>{0, 1, 4}[idx % 3];
                                  Outcome o{true, {{"a", a}, {"b", b}, {"c", c}}};
                                  for (const auto& ch : commute_mu(p, a, b, c, r)) o.ok = o.ok && ch.status == Status::pass;
                                  return o;
                              }));
    }
    out.push_back(sampled("level raising mu_{m+np}^(2) = mu_m Fr'(mu_n)" + pt(p),
                          "mu_{m+np}^(r+1) = mu_m Fr'(mu_n^(r))", static_cast<int>(p * p), cfg.exec, [&](int idx) {
                              const long m = idx / p, n = idx % p;
                              return Outcome{mu_element(p, m + n * p, 2) ==
                                                 hyper_mul(mu_element(p, m, 1), fr_prime(mu_element(p, n, 1))),
                                             {{"m", m}, {"n", n}}};
                          }));

    // (a, i, c) with a, c <= 2 and i < p^2
    std::vector<std::array<int, 3>> idxs;
    for (int a = 0; a <= 2; ++a)
        for (int c = 0; c <= 2; ++c)
            for (int i = 0; i < p * p; ++i)
                if (i <= 2 || (a == 0 && c == 0)) idxs.push_back({a, i, c});
    out.push_back(sampled("Fr o phi_modular = id" + pt(p), "Fr(phi(x)) = x over F_p", static_cast<int>(idxs.size()),
                          cfg.exec, [&](int k) {
                              const auto [a, i, c] = idxs[k];
                              const auto x = mod_basis(p, a, i, c);
                              return Outcome{fr_dist(phi_modular(x)) == x, {{"a", a}, {"i", i}, {"c", c}}};
                          }));
    auto rng = suite_rng(cfg, 2);
    std::uniform_int_distribution<int> d(0, 2);
    std::vector<std::array<int, 6>> pairs(cfg.opt.samples);
    for (auto& s : pairs)
        for (auto& v : s) v = d(rng);
    out.push_back(sampled("phi_modular multiplicative" + pt(p), "phi(xy) = phi(x) phi(y) over F_p", cfg.opt.samples,
                          cfg.exec, [&](int idx) {
                              const auto& s = pairs[idx];
                              const auto x = mod_basis(p, s[0], s[1], s[2]), y = mod_basis(p, s[3], s[4], s[5]);
                              return Outcome{phi_modular(hyper_mul(x, y)) == hyper_mul(phi_modular(x), phi_modular(y)),
                                             {{"x", {s[0], s[1], s[2]}}, {"y", {s[3], s[4], s[5]}}}};
                          }));
    out.push_back(make_check("phi_modular(1) = mu_0" + pt(p), "phi(1) = mu_0",
                             phi_modular(ModElement::one(fld)) == mu_element(p, 0, 1)));

    if (p == cfg.l) {
        const RootParams* rp = make_root_params(cfg.l);
        const PBWBounds bd = cfg.bounds(3 * cfg.l, 4L * cfg.l);
        bool kap = true, odd = true;
        for (long n = 0; n < p; ++n)
            kap = kap && reduction_from_quantum(kappa_element(rp, n, bd)) == mu_element(p, 2 * n, 1);
        for (long n = 1; n < 2 * p; n += 2)
            odd = odd && reduction_from_quantum(PBWElement::torus(torus_fn(kappa_prime(rp, n)), bd)).is_zero();
        out.push_back(make_check("reduction of kappa_n is mu_2n" + pt(p), "kappa_n mod p = mu_{2n}", kap));
        out.push_back(make_check("reduction of odd kappa'_n vanishes" + pt(p), "kappa'_{odd} mod p = 0", odd));
        out.push_back(sampled("reduction intertwines the splittings" + pt(p), "red(phi(x)) = phi_modular(red(x))", 9,
                              cfg.exec, [&](int idx) {
                                  const int n = idx / 3, kind = idx % 3;
                                  const auto x = kind == 0 ? cbasis(rp, n, 0, 0)
                                                           : kind == 1 ? cbasis(rp, 0, 0, n) : cbasis(rp, 0, n, 0);
                                  return Outcome{reduction_from_quantum(phi(x, bd)) ==
                                                     phi_modular(reduce_classical(x, p)),
                                                 {{"n", n}, {"kind", kind}}};
                              }));
    }
    return out;
}

// ---------------------------------------------------------------- contraction

std::vector<Check> contraction_suite(const SuiteConfig& cfg) {
    const RootParams* rp = make_root_params(cfg.l);
    const long l = cfg.l;
    std::vector<Check> out;
    auto fits = [&](size_t d) { return d <= cfg.module_cap; };

    for (long s = 0; s <= 3; ++s) {
        if (!fits(static_cast<size_t>(l * s + 1))) continue;
        const auto c = contract(weyl_module(rp, l * s));
        std::vector<long> want;
        for (long j = 0; j <= s; ++j) want.push_back(s - 2 * j);
        const bool iso = find_intertwiner(c, classical_weyl_module(rp, s), cfg.opt.seed + 1).has_value();
        out.push_back(make_check("V(ls)^phi has weights s, s-2, ..., -s (l=" + std::to_string(l) +
                                     " s=" + std::to_string(s) + ")",
                                 "V(ls)^phi = sum of weight spaces M_{l lambda}", c.weights == want && iso,
                                 {{"dim", c.dim()}, {"weights", c.weights}, {"isomorphic_to_V(s)", iso}}));
    }
    if (fits(static_cast<size_t>(2 * l + 1))) {
        auto cc = contraction_checks(weyl_module(rp, 2 * l));
        out.insert(out.end(), cc.begin(), cc.end());
    }
    if (fits(static_cast<size_t>(2 * (l + 1) * 3))) {
        auto cc = contraction_checks(tensor(weyl_module(rp, l), weyl_module(rp, 2)));
        out.insert(out.end(), cc.begin(), cc.end());
    }
    if (fits(static_cast<size_t>(4 * (l + 1)))) {
        auto v = frobenius_tensor_checks(rp, weyl_module(rp, l), classical_weyl_module(rp, 1));
        out.insert(out.end(), v.begin(), v.end());
        auto d = duality_checks(weyl_module(rp, l));
        out.insert(out.end(), d.begin(), d.end());
    }
    const int samples = std::min(cfg.opt.samples, 16);
    for (auto m : {weyl_module(rp, l), weyl_module(rp, l + 1, -1)}) {
        auto v = module_relation_checks(m, samples, cfg.opt.seed + 3);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// ---------------------------------------------------------------- hopf

std::vector<Check> hopf_suite(const SuiteConfig& cfg) {
    const RootParams* rp = make_root_params(cfg.l);
    const int l = cfg.l;
    const PBWBounds bd = cfg.bounds(3 * l, 4L * l);
    const CycloRing ring{rp};
    std::vector<Check> out;

    out.push_back(sampled("(Fr (x) Fr) Delta = Delta Fr on divided powers" + lt(rp), "(Fr (x) Fr) o Delta = Delta o Fr",
                          2 * (2 * l + 1), cfg.exec, [&](int idx) {
                              const int n = idx / 2;
                              const bool f_side = idx % 2;
                              const auto x = f_side ? PBWElement::f_pow(rp, n, bd) : PBWElement::e_pow(rp, n, bd);
                              HyperTensor<CycloRing> want;
                              want.ring = ring;
                              if (n % l == 0) want = classical_coproduct_x(ring, n / l, f_side);
                              return Outcome{frobenius_tensor(coproduct(x)) == want, {{"n", n}, {"F", f_side}}};
                          }));
    const auto k = kappa_element(rp, 0, bd);
    const auto kk = tensor_of(k, k);
    out.push_back(make_check("Delta(kappa)(kappa (x) kappa) = kappa (x) kappa" + lt(rp),
                             "Delta(kappa)(kappa (x) kappa) = kappa (x) kappa", pbw_mul(coproduct(k), kk) == kk));
    out.push_back(make_check("Omega Psi fixes kappa" + lt(rp), "Omega Psi(kappa) = kappa",
                             involution(k, Involution::OmegaPsi) == k));
    const auto K = PBWElement::basis(rp, 0, 1, 0, 0, bd);
    out.push_back(make_check("Delta(K) = K (x) K" + lt(rp), "Delta(K) = K (x) K", coproduct(K) == tensor_of(K, K)));

    auto rng = suite_rng(cfg, 3);
    std::uniform_int_distribution<int> a(0, 2), dl(0, 1);
    std::uniform_int_distribution<long> t(0, 2);
    const int ns = std::min(cfg.opt.samples, 8);
    std::vector<std::array<long, 8>> pairs(ns);
    for (auto& s : pairs) s = {a(rng), dl(rng), t(rng), a(rng), a(rng), dl(rng), t(rng), a(rng)};
    out.push_back(sampled("Delta multiplicative on sampled pairs" + lt(rp), "Delta(xy) = Delta(x) Delta(y)", ns,
                          cfg.exec, [&](int idx) {
                              const auto& s = pairs[idx];
                              const auto x = PBWElement::basis(rp, s[0], s[1], s[2], s[3], bd);
                              const auto y = PBWElement::basis(rp, s[4], s[5], s[6], s[7], bd);
                              return Outcome{coproduct(pbw_mul(x, y, Exec::serial)) ==
                                                 pbw_mul(coproduct(x), coproduct(y), Exec::serial),
                                             {{"sample", idx}}};
                          }));

    out.push_back(sampled("S phi = phi S on X^(n), Y^(n)" + lt(rp), "S(phi(x)) = phi(S(x))", 6, cfg.exec, [&](int idx) {
        const int n = idx / 2 + 1;
        const auto x = idx % 2 ? cbasis(rp, 0, 0, n) : cbasis(rp, n, 0, 0);
        return Outcome{involution(phi(x, bd), Involution::antipode) == phi(classical_antipode(x), bd), {{"n", n}}};
    }));
    {
        const auto x = cbasis(rp, 2, 0, 0);
        const bool printed_ok =
            involution(phi(x, bd), Involution::antipode_printed) == phi(classical_antipode(x), bd);
        Check c{"antipode with the printed sign (-1) on E^(n)" + lt(rp), "S(E^(n)) = -v^{n(n-1)} K^-n E^(n)",
                Status::info,
                {{"S_phi_equals_phi_S_at_2l", printed_ok},
                 {"note", "the sign (-1)^n is used; the single (-1) breaks S o phi = phi o S at n = 2l"}}};
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- blocks

std::vector<Check> blocks_suite(const SuiteConfig& cfg) {
    const RootParams* rp = make_root_params(cfg.l);
    const long l = cfg.l;
    std::vector<Check> out;
    if (l > 9) {
        out.push_back(Check{"small quantum group ideals" + lt(rp), "sum_n dim u_q kappa'_n = 2 l^3", Status::info,
                            {{"skipped", "l above 9"}}});
    } else {
        std::vector<std::vector<Check>> per(2 * l);
#pragma omp parallel for schedule(dynamic) if (cfg.exec == Exec::parallel)
        for (long n = 0; n < 2 * l; ++n) per[n] = ideal_dimension_check(rp, n);
        long total = 0;
        for (auto& v : per) {
            for (const auto& c : v)
                if (c.witness.is_object() && c.witness.contains("rank")) total += c.witness["rank"].get<long>();
            out.insert(out.end(), v.begin(), v.end());
        }
        out.push_back(make_check("ideal dimensions sum to dim u_q" + lt(rp), "sum_n dim u_q kappa'_n = 2 l^3",
                                 total == 2 * l * l * l, {{"total", total}, {"expected", 2 * l * l * l}}));
    }
    long p = 0;
    try {
        p = cfg.modular_p();
    } catch (const ConfigError&) {
        p = 3;
    }
    if (p <= 7) {
        auto b = block_decomposition_check(p, 1, 1);
        out.insert(out.end(), b.begin(), b.end());
    }
    if (p == 3) {
        for (int s : {1, 2}) {
            auto b = block_decomposition_check(3, 2, s);
            out.insert(out.end(), b.begin(), b.end());
        }
    }
    auto two = block_decomposition_check(2, 1, 1);
    out.insert(out.end(), two.begin(), two.end());
    return out;
}

}  // namespace qfrob
