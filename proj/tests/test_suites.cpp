#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qfrob/suites.hpp"

using namespace qfrob;

namespace {

SuiteConfig small_config(int l) {
    SuiteConfig c;
    c.l = l;
    c.opt.samples = 8;
    c.opt.seed = 3;
    return c;
}

}  // namespace

TEST(Suites, AllPassAtThree) {
    const auto cfg = small_config(3);
    for (const auto& name : suite_names()) {
        const auto checks = run_suite(name, cfg);
        EXPECT_FALSE(checks.empty()) << name;
        for (const auto& c : checks) EXPECT_NE(c.status, Status::fail) << name << ": " << c.name << " " << c.witness.dump();
    }
}

TEST(Suites, SerialMatchesParallel) {
    auto par = small_config(5);
    auto ser = par;
    ser.exec = Exec::serial;
    for (const char* name : {"torus", "splitting", "modular"}) {
        auto a = run_suite(name, par), b = run_suite(name, ser);
        ASSERT_EQ(a.size(), b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(a[i].name, b[i].name);
            EXPECT_EQ(a[i].status, b[i].status);
            EXPECT_EQ(a[i].witness, b[i].witness);
        }
    }
}

TEST(Suites, ClosedFormMatchesOracle) {
    for (int l : {3, 5, 7}) {
        auto rp = make_root_params(l);
        for (long n = 0; n < l; ++n)
            for (int sign : {1, -1}) {
                auto want = TorusFn::from_character(
                    rp, [&](long lam, int sg) { return oracle::closed_kappa(rp, n, sign, lam, sg); }, 0);
                EXPECT_EQ(kappa_closed_form(rp, n, sign), want);
            }
    }
}

TEST(Suites, ConfigValidation) {
    SuiteConfig c;
    c.l = 4;
    EXPECT_THROW(c.validate(), ConfigError);
    c.l = 5;
    c.p = 6;
    EXPECT_THROW(c.validate(), ConfigError);
    c.p.reset();
    c.module_cap = 0;
    EXPECT_THROW(c.validate(), ConfigError);
    c.module_cap = 50;
    c.cartan = {{2, -1}, {-1, 2}};
    EXPECT_NO_THROW(c.validate());
    c.cartan = {{2, -5}, {-1, 2}};
    EXPECT_THROW(c.validate(), ConfigError);
    EXPECT_THROW(run_suite("nope", small_config(3)), ConfigError);
}

TEST(Suites, ModularPrime) {
    auto c = small_config(9);
    EXPECT_THROW(c.modular_p(), ConfigError);
    c.p = 5;
    EXPECT_EQ(c.modular_p(), 5);
    EXPECT_EQ(small_config(7).modular_p(), 7);
}

TEST(Suites, ModuleCapLimitsContraction) {
    auto c = small_config(3);
    c.module_cap = 4;
    auto small = run_suite("contraction", c);
    auto full = run_suite("contraction", small_config(3));
    EXPECT_LT(small.size(), full.size());
}
