#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qfrob/cyclo.hpp"

using namespace qfrob;

namespace {

std::vector<long> phi_of(int l) {
    std::vector<long> out;
    for (const auto& c : make_root_params(l)->phi) out.push_back(c.get_si());
    return out;
}

}  // namespace

TEST(RootParams, CyclotomicPolynomials) {
    EXPECT_EQ(phi_of(3), (std::vector<long>{1, 1, 1}));
    EXPECT_EQ(phi_of(9), (std::vector<long>{1, 0, 0, 1, 0, 0, 1}));
    EXPECT_EQ(phi_of(15), (std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1}));
    EXPECT_EQ(make_root_params(7)->euler_deg, 6);
}

TEST(RootParams, RejectsBadL) {
    EXPECT_THROW(make_root_params(4), ConfigError);
    EXPECT_THROW(make_root_params(1), ConfigError);
    EXPECT_THROW(make_root_params(-3), ConfigError);
}

TEST(CycloScalar, SmallIdentities) {
    auto rp = make_root_params(3);
    auto q = q_power(rp, 1);
    EXPECT_TRUE((q * q_power(rp, 2)).is_one());
    auto one_plus_q = CycloScalar::one(rp) + q;
    EXPECT_EQ(one_plus_q, -q_power(rp, 2));
    EXPECT_EQ(one_plus_q.inv(), -q);
    EXPECT_EQ(q + CycloScalar::zero(rp), q);
    EXPECT_THROW(CycloScalar::zero(rp).inv(), ArithmeticError);
}

TEST(CycloScalar, HalfPower) {
    for (int l : {3, 5, 7, 9, 15}) {
        auto rp = make_root_params(l);
        auto z = q_power_half(rp, 1);
        EXPECT_EQ(z * z, q_power(rp, 1));
        EXPECT_TRUE(q_power_half(rp, 2 * l).is_one());
        EXPECT_FALSE(q_power_half(rp, l).is_one());
        EXPECT_TRUE(q_power(rp, l).is_one());
        for (int k = 1; k < l; ++k) EXPECT_FALSE(q_power(rp, k).is_one());
        EXPECT_TRUE(q_power(rp, 0).is_one());
    }
    auto rp3 = make_root_params(3);
    EXPECT_EQ(q_power_half(rp3, 1), -q_power(rp3, 2));
}

TEST(CycloScalar, RingAxiomsRandom) {
    std::mt19937_64 rng(7);
    for (int l : {3, 5, 9, 15}) {
        auto rp = make_root_params(l);
        for (int it = 0; it < 30; ++it) {
            auto a = oracle::random_scalar(rp, rng), b = oracle::random_scalar(rp, rng),
                 c = oracle::random_scalar(rp, rng);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
        }
    }
}

TEST(CycloScalar, DyadicIsMultiplicative) {
    std::mt19937_64 rng(3);
    auto rp = make_root_params(5);
    for (int it = 0; it < 20; ++it) {
        auto a = oracle::random_scalar(rp, rng, 4, false), b = oracle::random_scalar(rp, rng, 4, false);
        a.div_int(1 << (it % 4));
        b.div_int(2);
        EXPECT_TRUE(a.is_dyadic());
        EXPECT_TRUE((a * b).is_dyadic());
    }
    auto third = CycloScalar::one(rp);
    third.div_int(3);
    EXPECT_FALSE(third.is_dyadic());
}

TEST(GaussBinomial, Examples) {
    for (int l : {3, 5}) {
        auto rp = make_root_params(l);
        EXPECT_EQ(gauss_binomial(rp, 2, 1), q_power(rp, 1) + q_power(rp, -1));
        EXPECT_TRUE(gauss_binomial(rp, 7, 0).is_one());
        EXPECT_TRUE(gauss_binomial(rp, -4, 0).is_one());
    }
    EXPECT_TRUE(gauss_binomial(make_root_params(3), 3, 1).is_zero());
}

TEST(GaussBinomial, MatchesGenericDivisionRoute) {
    for (int l : {3, 5, 7}) {
        auto rp = make_root_params(l);
        for (long n = -2 * l; n <= 4 * l; ++n)
            for (long k = 0; k <= std::min<long>(4 * l, std::abs(n) + 3); ++k)
                for (int d : {1, 2}) ASSERT_EQ(gauss_binomial(rp, n, k, d), gauss_binomial_generic(rp, n, k, d))
                    << "l=" << l << " n=" << n << " k=" << k << " d=" << d;
    }
}

TEST(GaussBinomial, QPascal) {
    for (int l : {3, 5, 7}) {
        auto rp = make_root_params(l);
        for (long n = 1; n <= 4 * l; ++n)
            for (long k = 1; k <= n; ++k) {
                auto rhs = q_power(rp, k) * gauss_binomial(rp, n - 1, k) +
                           q_power(rp, k - n) * gauss_binomial(rp, n - 1, k - 1);
                ASSERT_EQ(gauss_binomial(rp, n, k), rhs);
            }
    }
}

TEST(GaussBinomial, QuantumLucas) {
    for (int l : {3, 5, 7}) {
        auto rp = make_root_params(l);
        for (long n = -2 * l; n <= 4 * l; ++n)
            for (long k = 0; k <= 4 * l; ++k) {
                long n0 = pos_mod(n, l), n1 = floor_div(n, l), k0 = k % l, k1 = k / l;
                auto lucas = gauss_binomial_generic(rp, n0, k0);
                lucas.mul_int(binom_z(n1, k1));
                ASSERT_EQ(gauss_binomial_generic(rp, n, k), lucas) << n << " " << k;
            }
    }
}

TEST(BinomModP, LucasAgainstFactorials) {
    for (long p : {2, 3, 5, 7}) {
        for (long n = 0; n < 60; ++n)
            for (long k = 0; k <= n + 2; ++k) {
                mpz_class r = oracle::factorial_binom(n, k) % p;
                ASSERT_EQ(binom_mod_p(n, k, p).value(), r.get_si());
            }
        for (long k = 0; k < 10; ++k) EXPECT_EQ(binom_mod_p(-1, k, p).value(), pos_mod(k % 2 ? -1 : 1, p));
        for (long j = 1; j < p; ++j) EXPECT_TRUE(binom_mod_p(p, j, p).is_zero());
    }
    EXPECT_EQ(binom_mod_p(6, 3, 3).value(), 2);
}

TEST(BinomZ, NegativeUpper) {
    EXPECT_EQ(binom_z(-1, 3), -1);
    EXPECT_EQ(binom_z(-3, 2), 6);
    EXPECT_EQ(binom_z(5, 7), 0);
}

TEST(ModP, FieldOps) {
    ModPScalar a(3, 7), b(5, 7);
    EXPECT_EQ((a * b).value(), 1);
    EXPECT_EQ((a * a.inv()).value(), 1);
    EXPECT_EQ((a - b).value(), 5);
}

TEST(CycloScalar, StringForm) {
    auto rp = make_root_params(5);
    auto x = CycloScalar::one(rp) - q_power(rp, 2);
    x.div_int(2);
    EXPECT_EQ(x.to_string(), "(1 - q^2)/2");
    EXPECT_EQ(CycloScalar::zero(rp).to_string(), "0");
    EXPECT_EQ(q_power(rp, 1).reduce_mod_p(5), 1);
}
