#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qfrob/torus.hpp"

using namespace qfrob;

namespace {

const std::vector<int> kLs = {3, 5, 7};

SmallTorusElement small_sum(const std::vector<SmallTorusElement>& xs, const RootParams* rp) {
    SmallTorusElement s(rp);
    for (const auto& x : xs) s += x;
    return s;
}

BigTorusElement random_big(const RootParams* rp, long T, std::mt19937_64& rng) {
    BigTorusElement x{rp, 0, T, {}};
    std::uniform_int_distribution<long> t(0, T);
    for (int k = 0; k < 4; ++k) x.add(static_cast<int>(rng() % 2), t(rng), oracle::random_scalar(rp, rng, 3));
    return x;
}

}  // namespace

TEST(Kappa, PeriodicAndIdempotent) {
    for (int l : kLs) {
        auto rp = make_root_params(l);
        for (long n = 0; n < l; ++n) {
            EXPECT_EQ(kappa(rp, n), kappa(rp, n + l));
            EXPECT_EQ(kappa(rp, n), kappa(rp, n - 3 * l));
            EXPECT_EQ(kappa_bar(rp, n), kappa_bar(rp, n + l));
            for (long m = 0; m < l; ++m) {
                auto prod = kappa(rp, n) * kappa(rp, m);
                if (n == m) EXPECT_EQ(prod, kappa(rp, n));
                else EXPECT_TRUE(prod.is_zero());
            }
        }
    }
}

TEST(Kappa, AbsorbsK) {
    for (int l : kLs) {
        auto rp = make_root_params(l);
        auto k0 = kappa(rp, 0);
        for (long j = -2; j < 2 * l; ++j) EXPECT_EQ(SmallTorusElement::k_power(rp, j) * k0, k0);
    }
}

TEST(Kappa, InvariantUnderAugmentation) {
    std::mt19937_64 rng(11);
    auto rp = make_root_params(5);
    auto k0 = kappa(rp, 0);
    for (int it = 0; it < 10; ++it) {
        SmallTorusElement x(rp);
        CycloScalar eps(rp);
        for (auto& c : x.c) {
            c = oracle::random_scalar(rp, rng, 3);
            eps += c;
        }
        EXPECT_EQ(x * k0, k0.scaled(eps));
    }
}

TEST(Kappa, MatchesClosedForm) {
    for (int l : kLs) {
        auto rp = make_root_params(l);
        for (long n = 0; n < l; ++n)
            for (int sign : {1, -1}) {
                auto mine = torus_fn(sign > 0 ? kappa(rp, n) : kappa_bar(rp, n));
                auto closed = TorusFn::from_character(
                    rp, [&](long lam, int sg) { return oracle::closed_kappa(rp, n, sign, lam, sg); }, 0);
                EXPECT_EQ(mine, closed) << "l=" << l << " n=" << n << " sign=" << sign;
            }
    }
}

TEST(Kappa, BigTorusCoordinatesAreDyadic) {
    for (int l : kLs) {
        auto rp = make_root_params(l);
        for (long n = 0; n < 2 * l; ++n) {
            EXPECT_TRUE(big_from_fn(torus_fn(kappa(rp, n)), 2 * l).all_dyadic());
            EXPECT_TRUE(big_from_fn(torus_fn(kappa_bar(rp, n)), 2 * l).all_dyadic());
            EXPECT_TRUE(big_from_fn(torus_fn(kappa_prime(rp, n)), 2 * l).all_dyadic());
        }
    }
}

TEST(Kappa, BarIsSignFlip) {
    for (int l : kLs) {
        auto rp = make_root_params(l);
        for (long n = 0; n < l; ++n) EXPECT_EQ(kappa_bar(rp, n), kappa(rp, n).sign_flipped());
    }
    auto rp = make_root_params(3);
    auto s = kappa_bar(rp, 0) + kappa(rp, 0);
    for (size_t i = 1; i < s.c.size(); i += 2) EXPECT_TRUE(s.c[i].is_zero());
}

TEST(KappaPrime, PartitionOfUnity) {
    for (int l : kLs) {
        auto rp = make_root_params(l);
        std::vector<SmallTorusElement> ks;
        for (long n = 0; n < 2 * l; ++n) ks.push_back(kappa_prime(rp, n));
        EXPECT_EQ(small_sum(ks, rp), SmallTorusElement::one(rp));
        EXPECT_EQ(ks[0], kappa(rp, 0));
        for (long n = 0; n < 2 * l; ++n)
            for (long m = 0; m < 2 * l; ++m) {
                auto p = ks[n] * ks[m];
                if (n == m) EXPECT_EQ(p, ks[n]);
                else EXPECT_TRUE(p.is_zero());
            }
        for (long m = 0; m < 2 * l; ++m) {
            SmallTorusElement rhs(rp);
            for (long n = 0; n < 2 * l; ++n) rhs += ks[n].scaled(q_power_half(rp, m * n));
            EXPECT_EQ(rhs, SmallTorusElement::k_power(rp, m));
        }
    }
}

TEST(KappaPrime, EvenAndOddMembers) {
    for (int l : kLs) {
        auto rp = make_root_params(l);
        for (long n = 0; n < 2 * l; ++n) {
            auto kp = kappa_prime(rp, n);
            bool found_k = false, found_bar = false;
            for (long m = 0; m < l; ++m) {
                found_k |= kp == kappa(rp, m);
                found_bar |= kp == kappa_bar(rp, m);
            }
            if (n % 2 == 0) EXPECT_TRUE(found_k) << n;
            else EXPECT_TRUE(found_bar) << n;
        }
    }
}

TEST(Characters, Examples) {
    for (int l : kLs) {
        auto rp = make_root_params(l);
        auto k = SmallTorusElement::k_power(rp, 1);
        EXPECT_EQ(eval_char(k, 1), q_power(rp, 1));
        for (long lam = -l; lam < 3 * l; ++lam) {
            auto v = eval_char(kappa(rp, 0), lam);
            EXPECT_EQ(v, CycloScalar(rp, pos_mod(lam, l) == 0 ? 1 : 0));
            EXPECT_EQ(eval_char(kappa_prime(rp, 0), lam, 1), v);
            for (long n = 0; n < 2 * l; ++n)
                EXPECT_EQ(eval_char_prime(kappa_prime(rp, n), lam), CycloScalar(rp, pos_mod(lam - n, 2 * l) == 0));
        }
        BigTorusElement b{rp, 0, 2L * l, {}};
        b.add(0, l, CycloScalar::one(rp));
        EXPECT_TRUE(eval_char(b, l).is_one());
    }
}

TEST(Characters, Multiplicative) {
    std::mt19937_64 rng(5);
    auto rp = make_root_params(5);
    for (int it = 0; it < 10; ++it) {
        SmallTorusElement a(rp), b(rp);
        for (auto& c : a.c) c = oracle::random_scalar(rp, rng, 2);
        for (auto& c : b.c) c = oracle::random_scalar(rp, rng, 2);
        long lam = static_cast<long>(rng() % 40) - 20;
        int sg = rng() % 2 ? 1 : -1;
        EXPECT_EQ(eval_char(a * b, lam, sg), eval_char(a, lam, sg) * eval_char(b, lam, sg));
    }
}

TEST(Interpolation, BasisElementK) {
    auto rp = make_root_params(3);
    auto k = SmallTorusElement::k_power(rp, 1);
    auto x = interpolate_fn([&](long lam, int sg) { return eval_char(k, lam, sg); }, rp, 6);
    ASSERT_EQ(x.coords.size(), 1u);
    EXPECT_TRUE(x.coords.at({1, 0}).is_one());
}

TEST(Interpolation, RecurrenceForKSquared) {
    // K^2 = a_0(0) K [K;1] + b_0(0) with a_0(0) = q - q^{-1}, b_0(0) = 1
    for (int l : kLs) {
        auto rp = make_root_params(l);
        auto k2 = SmallTorusElement::k_power(rp, 2);
        auto x = interpolate_fn([&](long lam, int sg) { return eval_char(k2, lam, sg); }, rp, 2 * l);
        BigTorusElement want{rp, 0, 2L * l, {}};
        want.add(1, 1, q_power(rp, 1) - q_power(rp, -1));
        want.add(0, 0, CycloScalar::one(rp));
        EXPECT_EQ(x, want);
    }
}

TEST(Interpolation, RoundTripAgainstStructuredSolver) {
    std::mt19937_64 rng(17);
    for (int l : {3, 5}) {
        auto rp = make_root_params(l);
        const long T = 2 * l;
        for (int it = 0; it < 6; ++it) {
            auto x = random_big(rp, T, rng);
            auto dense = interpolate_fn([&](long lam, int sg) { return eval_char(x, lam, sg); }, rp, T);
            EXPECT_EQ(dense, x);
            EXPECT_EQ(big_from_fn(torus_fn(x), T), x);
        }
    }
}

TEST(Interpolation, SingularWindowIsReported) {
    auto rp = make_root_params(3);
    std::vector<CharSample> few;
    for (long lam = 0; lam < 3; ++lam) few.push_back({lam, 1, CycloScalar::one(rp)});
    EXPECT_THROW(interpolate(few, 6), WindowTooSmallError);
}

TEST(Interpolation, TruncationIsEnforced) {
    auto rp = make_root_params(3);
    EXPECT_THROW(big_from_fn(basis_fn(rp, 0, 7), 6), TruncationError);
}

TEST(ExpandShifted, EvaluatesCorrectly) {
    std::mt19937_64 rng(23);
    for (int l : kLs) {
        auto rp = make_root_params(l);
        for (long c : {0L, 1L, -3L, 4L})
            for (long t : {0L, 1L, static_cast<long>(l), static_cast<long>(l) + 2}) {
                auto x = expand_shifted(rp, c, t, 2 * l);
                for (int k = 0; k < 10; ++k) {
                    long lam = static_cast<long>(rng() % 60) - 30;
                    EXPECT_EQ(eval_char(x, lam, 1), gauss_binomial_generic(rp, lam + c, t));
                    int sg = -1;
                    auto want = gauss_binomial_generic(rp, lam + c, t);
                    if (t % 2) want = -want;
                    EXPECT_EQ(eval_char(x, lam, sg), want);
                }
            }
        auto id = expand_shifted(rp, 0, 3, 2 * l);
        ASSERT_EQ(id.coords.size(), 1u);
        EXPECT_TRUE(id.coords.at({0, 3}).is_one());
    }
}

TEST(ExpandShifted, KeyVanishing) {
    for (int l : kLs) {
        auto rp = make_root_params(l);
        for (long s = 1; s < l; ++s) {
            auto f = bracket_fn(rp, 2 * s, s) * torus_fn(kappa(rp, -s));
            EXPECT_TRUE(f.is_zero()) << "l=" << l << " s=" << s;
        }
    }
}

TEST(TorusFn, SerialAndParallelProductsAgree) {
    std::mt19937_64 rng(29);
    auto rp = make_root_params(7);
    for (int it = 0; it < 5; ++it) {
        auto a = torus_fn(random_big(rp, 14, rng)), b = torus_fn(random_big(rp, 14, rng));
        auto s = TorusFn::mul(a, b, Exec::serial), p = TorusFn::mul(a, b, Exec::parallel);
        EXPECT_EQ(s, p);
        for (long lam = -10; lam < 10; lam += 3)
            for (int sg : {1, -1}) EXPECT_EQ(s.value(lam, sg), a.value(lam, sg) * b.value(lam, sg));
    }
}

TEST(TorusFn, ShiftReflectFlip) {
    std::mt19937_64 rng(31);
    auto rp = make_root_params(5);
    auto f = torus_fn(random_big(rp, 10, rng));
    for (long d : {-7L, -1L, 0L, 3L, 12L}) {
        auto g = f.shifted(0, d);
        for (long lam = -12; lam < 12; ++lam)
            for (int sg : {1, -1}) EXPECT_EQ(g.value(lam, sg), f.value(lam + d, sg));
    }
    auto r = f.reflected(0), s = f.sign_flipped(0);
    for (long lam = -12; lam < 12; ++lam)
        for (int sg : {1, -1}) {
            EXPECT_EQ(r.value(lam, sg), f.value(-lam, sg));
            EXPECT_EQ(s.value(lam, sg), f.value(lam, -sg));
        }
}

TEST(TorusFn, ArityTwoRoundTrip) {
    auto rp = make_root_params(3);
    auto f = fn2_from_basis(rp, 1, 2, 0, 4);
    auto c = coords2_from_fn(f);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_TRUE(c.begin()->second.is_one());
    EXPECT_EQ(c.begin()->first.first, (BigTorusElement::Key{1, 2}));
    EXPECT_EQ(c.begin()->first.second, (BigTorusElement::Key{0, 4}));
    auto e = TorusFn::embed(basis_fn(rp, 1, 2), 0) * TorusFn::embed(basis_fn(rp, 0, 4), 1);
    EXPECT_EQ(e, f);
}

TEST(MultiTorus, CartanValidation) {
    EXPECT_EQ(validate_cartan({{2, -1}, {-1, 2}}), (std::vector<int>{1, 1}));
    EXPECT_EQ(validate_cartan({{2, -2}, {-1, 2}}), (std::vector<int>{1, 2}));
    EXPECT_NO_THROW(validate_cartan({{2, -3}, {-1, 2}}));
    EXPECT_THROW(validate_cartan({{2, -3}, {-3, 2}}), ConfigError);
    EXPECT_THROW(validate_cartan({{2, 1}, {1, 2}}), ConfigError);
    EXPECT_THROW(validate_cartan({{2, -1}, {0, 2}}), ConfigError);
    EXPECT_THROW(check_coprime({{2, -3}, {-1, 2}}, 3), ConfigError);
    EXPECT_NO_THROW(check_coprime({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, 9));
    EXPECT_NO_THROW(check_coprime({{2, -2}, {-1, 2}}, 5));
}

TEST(MultiTorus, ProductIdempotents) {
    auto rp = make_root_params(5);
    CartanMatrix a2 = {{2, -1}, {-1, 2}};
    auto sym = validate_cartan(a2);
    MultiTorusElement total(rp, 2, sym);
    for (long j1 = 0; j1 < 10; ++j1)
        for (long j2 = 0; j2 < 10; ++j2) {
            auto k = product_kappa_multi(rp, a2, {j1, j2});
            if ((j1 + j2) % 7 == 0) EXPECT_EQ(multi_mul(k, k), k);
            total += k;
        }
    EXPECT_EQ(total, MultiTorusElement::one(rp, 2, sym));
    auto k0 = product_kappa_multi(rp, a2, {0, 0});
    for (int i = 0; i < 2; ++i) EXPECT_EQ(multi_mul(MultiTorusElement::k_power(rp, 2, sym, i, 1), k0), k0);
}

TEST(MultiTorus, RankOneIsKappaPrime) {
    auto rp = make_root_params(3);
    for (long n = 0; n < 6; ++n) {
        auto k = product_kappa_multi(rp, {{2}}, {n});
        EXPECT_EQ(k.c, kappa_prime(rp, n).c);
    }
}
