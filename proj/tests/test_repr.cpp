#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qfrob/repr.hpp"
#include "weyl_oracle.hpp"

using namespace qfrob;

namespace {

void expect_all_pass(const std::vector<Check>& cs) {
    for (const auto& c : cs) EXPECT_NE(c.status, Status::fail) << c.name << " " << c.witness.dump();
}

// action of an arity-2 element on a tensor product, leg by leg
SparseOp tensor_action(const WeightModule& a, const WeightModule& b, const PBWElement& t) {
    const size_t db = b.dim();
    SparseOp out(a.rp, a.dim() * db);
    for (const auto& [k, fn] : t.terms()) {
        std::vector<CycloScalar> d;
        for (long wa : a.weights)
            for (long wb : b.weights) d.push_back(fn.value2(wa, a.sigma, wb, b.sigma));
        out += kron(a.f(k[0]), b.f(k[2])) * SparseOp::diagonal(a.rp, d) * kron(a.e(k[1]), b.e(k[3]));
    }
    return out;
}

}  // namespace

TEST(Repr, TrivialModule) {
    auto rp = make_root_params(3);
    auto m = weyl_module(rp, 0);
    EXPECT_EQ(m.dim(), 1u);
    EXPECT_TRUE(m.e(1).is_zero());
    EXPECT_TRUE(m.f(2).is_zero());
    EXPECT_EQ(m.k_power(1), SparseOp::identity(rp, 1));
    auto c = contract(m);
    EXPECT_EQ(c.dim(), 1u);
    EXPECT_EQ(c.weights[0], 0);
}

TEST(Repr, SteinbergKilledByHighDividedPowers) {
    for (int l : {3, 5}) {
        auto rp = make_root_params(l);
        auto st = weyl_module(rp, l - 1);
        PBWBounds bd{3 * l, 4L * l};
        for (int n = l; n <= 2 * l; ++n) {
            EXPECT_TRUE(st.act(PBWElement::e_pow(rp, n, bd)).is_zero());
            EXPECT_TRUE(st.act(PBWElement::f_pow(rp, n, bd)).is_zero());
        }
    }
}

TEST(Repr, WeylActionMatchesOracle) {
    auto rp = make_root_params(3);
    PBWBounds bd{9, 12};
    std::mt19937_64 rng(5);
    for (int sigma : {1, -1})
        for (long m : {2L, 4L, 7L}) {
            auto M = weyl_module(rp, m, sigma);
            for (int s = 0; s < 10; ++s) {
                auto x = PBWElement::basis(rp, rng() % 5, rng() % 2, rng() % 6, rng() % 5, bd);
                EXPECT_TRUE(mat_equal(M.act(x).dense(), oracle::weyl_matrix(x, m, sigma)));
            }
        }
}

TEST(Repr, ModuleRelations) {
    auto rp = make_root_params(3);
    expect_all_pass(module_relation_checks(weyl_module(rp, 4), 6, 1));
    expect_all_pass(module_relation_checks(weyl_module(rp, 5, -1), 6, 2));
    expect_all_pass(module_relation_checks(tensor(weyl_module(rp, 1), weyl_module(rp, 2, -1)), 4, 3));
    auto rp5 = make_root_params(5);
    expect_all_pass(module_relation_checks(weyl_module(rp5, 6), 4, 4));
}

TEST(Repr, TensorCharacter) {
    auto rp = make_root_params(3);
    auto t = tensor(weyl_module(rp, 1), weyl_module(rp, 1));
    std::map<long, int> want{{2, 1}, {0, 2}, {-2, 1}};
    EXPECT_EQ(t.character(), want);
}

TEST(Repr, TensorMatchesCoproduct) {
    auto rp = make_root_params(3);
    PBWBounds bd{9, 12};
    auto a = weyl_module(rp, 2), b = weyl_module(rp, 4, -1);
    auto t = tensor(a, b);
    std::mt19937_64 rng(9);
    for (int s = 0; s < 6; ++s) {
        auto x = PBWElement::basis(rp, rng() % 4, rng() % 2, rng() % 4, rng() % 4, bd);
        EXPECT_EQ(t.act(x), tensor_action(a, b, coproduct(x)));
    }
}

TEST(Repr, ContractionDimensions) {
    for (int l : {3, 5}) {
        auto rp = make_root_params(l);
        for (long s = 0; s <= 3; ++s) EXPECT_EQ(contract(weyl_module(rp, l * s)).dim(), static_cast<size_t>(s + 1));
        for (long m = 1; m < l; ++m) EXPECT_EQ(contract(weyl_module(rp, m)).dim(), m % 2 ? 0u : 1u);
        EXPECT_EQ(contract(weyl_module(rp, 2 * l, -1)).dim(), 0u);
    }
}

TEST(Repr, ContractionOfWeylIsClassicalWeyl) {
    auto rp = make_root_params(3);
    for (long s : {1L, 2L}) {
        auto c = contract(weyl_module(rp, 3 * s));
        EXPECT_TRUE(find_intertwiner(c, classical_weyl_module(rp, s)).has_value());
    }
}

TEST(Repr, ContractionChecks) {
    auto rp = make_root_params(3);
    expect_all_pass(contraction_checks(weyl_module(rp, 6)));
    expect_all_pass(contraction_checks(tensor(weyl_module(rp, 3), weyl_module(rp, 2))));
}

TEST(Repr, ContractionAddsOverDirectSums) {
    auto rp = make_root_params(3);
    // V(1) (x) V(1) = V(2) + V(0) at the level of weights
    auto t = tensor(weyl_module(rp, 4), weyl_module(rp, 2));
    size_t sum = 0;
    for (long m : {6L, 4L, 2L}) sum += contract(weyl_module(rp, m)).dim();
    EXPECT_EQ(contract(t).dim(), sum);
}

TEST(Repr, FrobeniusTensor) {
    auto rp = make_root_params(3);
    expect_all_pass(frobenius_tensor_checks(rp, weyl_module(rp, 3), classical_weyl_module(rp, 1)));
    expect_all_pass(frobenius_tensor_checks(rp, weyl_module(rp, 4), classical_weyl_module(rp, 2)));
}

TEST(Repr, FrobeniusPullbackIsModule) {
    auto rp = make_root_params(3);
    auto fr = frobenius_pullback(classical_weyl_module(rp, 2), rp);
    expect_all_pass(module_relation_checks(fr, 6, 8));
    EXPECT_TRUE(fr.e(1).is_zero());
}

TEST(Repr, Duality) {
    auto rp = make_root_params(3);
    expect_all_pass(duality_checks(weyl_module(rp, 3)));
    expect_all_pass(duality_checks(tensor(weyl_module(rp, 1), weyl_module(rp, 2))));
    auto triv = weyl_module(rp, 0);
    EXPECT_EQ(dual_omega_psi(triv).k_power(1), triv.k_power(1));
}

TEST(Repr, IntertwinerRejectsCharacterMismatch) {
    auto rp = make_root_params(3);
    EXPECT_FALSE(find_intertwiner(classical_weyl_module(rp, 2), classical_weyl_module(rp, 1)).has_value());
    auto a = classical_tensor(classical_weyl_module(rp, 1), classical_weyl_module(rp, 1));
    EXPECT_FALSE(find_intertwiner(a, classical_weyl_module(rp, 3)).has_value());
}

TEST(Repr, IdealDimensions) {
    auto rp = make_root_params(3);
    long total = 0;
    for (long n = 0; n < 6; ++n) {
        auto cs = ideal_dimension_check(rp, n);
        expect_all_pass(cs);
        for (const auto& c : cs)
            if (c.witness.contains("rank")) total += c.witness["rank"].get<long>();
    }
    EXPECT_EQ(total, 2 * 27);
}

TEST(Repr, IdealDimensionsL5Even) {
    auto rp = make_root_params(5);
    for (long n : {0L, 4L}) expect_all_pass(ideal_dimension_check(rp, n));
}
