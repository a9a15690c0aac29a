#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qfrob/linalg.hpp"
#include "qfrob/report.hpp"
#include "qfrob/uq_sl2.hpp"

namespace qfrob {

constexpr size_t kModuleCap = 400;

// square operator stored by columns: col[j] = {row -> value}
struct SparseOp {
    const RootParams* rp = nullptr;
    size_t n = 0;
    std::vector<std::map<size_t, CycloScalar>> col;

    SparseOp() = default;
    SparseOp(const RootParams* rp, size_t n) : rp(rp), n(n), col(n) {}
    static SparseOp identity(const RootParams* rp, size_t n);
    static SparseOp diagonal(const RootParams* rp, const std::vector<CycloScalar>& d);

    void add(size_t i, size_t j, const CycloScalar& v);
    CycloScalar at(size_t i, size_t j) const;
    bool is_zero() const;
    SparseOp transpose() const;
    SparseOp scaled(const CycloScalar& s) const;
    SparseOp& operator+=(const SparseOp& o);
    friend SparseOp operator+(SparseOp a, const SparseOp& b) { return a += b; }
    friend SparseOp operator-(SparseOp a, const SparseOp& b) { return a += b.scaled(CycloScalar(a.rp, -1L)); }
    friend SparseOp operator*(const SparseOp& a, const SparseOp& b);
    friend bool operator==(const SparseOp& a, const SparseOp& b) { return a.n == b.n && a.col == b.col; }
    Matrix<CycloScalar> dense() const;
};

SparseOp kron(const SparseOp& a, const SparseOp& b);

// Finite-dimensional weight module for U_B. K acts by sigma q^weight.
struct WeightModule {
    const RootParams* rp = nullptr;
    int sigma = 1;
    std::vector<long> weights;
    std::vector<SparseOp> E, F;  // divided powers, index n; missing entries act by 0

    size_t dim() const { return weights.size(); }
    SparseOp e(int n) const;
    SparseOp f(int n) const;
    SparseOp torus(const TorusFn& fn) const;
    SparseOp k_power(long e) const;
    SparseOp act(const PBWElement& x) const;
    std::map<long, int> character() const;
};

// Classical U-module (X, H, Y) with coefficients in B.
struct ClassicalModule {
    const RootParams* rp = nullptr;
    std::vector<long> weights;
    std::vector<SparseOp> X, Y;

    size_t dim() const { return weights.size(); }
    SparseOp x(int n) const;
    SparseOp y(int n) const;
    SparseOp act(const ClassicalElement& e) const;
    std::map<long, int> character() const;
};

WeightModule weyl_module(const RootParams* rp, long m, int sigma = 1);
ClassicalModule classical_weyl_module(const RootParams* rp, long m);

WeightModule tensor(const WeightModule& a, const WeightModule& b);
ClassicalModule classical_tensor(const ClassicalModule& a, const ClassicalModule& b);
// M^Fr: weights l*mu, E^(n) acts by X^(n/l)
WeightModule frobenius_pullback(const ClassicalModule& m, const RootParams* rp);
// dual with action twisted by Omega o Psi
WeightModule dual_omega_psi(const WeightModule& m);
// classical dual twisted by tau (X <-> Y)
ClassicalModule classical_tau_dual(const ClassicalModule& m);

ClassicalModule contract(const WeightModule& m);
std::vector<Check> contraction_checks(const WeightModule& m);

// an invertible T with T x_M = x_N T for all generators, if one exists
std::optional<Matrix<CycloScalar>> find_intertwiner(const ClassicalModule& a, const ClassicalModule& b,
                                                    std::uint64_t seed = 1);

std::vector<Check> module_relation_checks(const WeightModule& m, int samples, std::uint64_t seed);
std::vector<Check> classical_relation_checks(const ClassicalModule& m, int samples, std::uint64_t seed);

// E^(a) F^(b) kappa'_n, a,b < l: rank and weight census
std::vector<Check> ideal_dimension_check(const RootParams* rp, long n);

std::vector<Check> frobenius_tensor_checks(const RootParams* rp, const WeightModule& v, const ClassicalModule& m);
std::vector<Check> duality_checks(const WeightModule& m);

}  // namespace qfrob
