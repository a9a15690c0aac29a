#pragma once

#include <functional>
#include <vector>

#include "qfrob/cyclo.hpp"

namespace qfrob {

enum class Exec { serial, parallel };

// An element of the big torus (arity 1) or of its tensor square (arity 2), stored
// through its values on the signed characters K -> sigma q^lambda.
//
// Write lambda = lambda0 + l*lambda1 with lambda0 in [0,l). For each class
// (lambda0, sigma) the value is a polynomial in lambda1; we keep its Newton
// coefficients (coefficients of binom(lambda1, i)). Class index is
// (sigma == -1) * l + lambda0; arity 2 uses c1 * 2l + c2.
class TorusFn {
public:
    struct Block {
        int deg[2] = {-1, -1};  // -1: block is zero
        std::vector<CycloScalar> coef;  // (deg0+1) x (deg1+1), row-major
        bool empty() const { return deg[0] < 0; }
    };

    TorusFn() = default;
    TorusFn(const RootParams* rp, int arity);

    static TorusFn constant(const RootParams* rp, int arity, const CycloScalar& c);
    // Builds from a character function, assuming degree <= deg_bound in each lambda1;
    // one extra sample per axis is checked and a mismatch throws.
    static TorusFn from_character(const RootParams* rp, const std::function<CycloScalar(long, int)>& f,
                                  int deg_bound);
    static TorusFn from_character2(const RootParams* rp,
                                   const std::function<CycloScalar(long, int, long, int)>& f, int deg_bound);
    // arity-1 f placed in variable `var` of an arity-2 function
    static TorusFn embed(const TorusFn& f, int var);

    const RootParams* params() const { return rp_; }
    int arity() const { return arity_; }
    int num_classes() const { return static_cast<int>(blocks_.size()); }
    const Block& block(int c) const { return blocks_[c]; }
    Block& block(int c) { return blocks_[c]; }
    int class_index(long lambda0, int sigma) const { return (sigma < 0 ? rp_->l : 0) + static_cast<int>(lambda0); }

    CycloScalar value(long lambda, int sigma) const;
    CycloScalar value2(long l1, int s1, long l2, int s2) const;

    bool is_zero() const;
    int max_degree() const;  // over classes and axes; -1 for zero

    TorusFn& operator+=(const TorusFn& o);
    TorusFn& operator-=(const TorusFn& o);
    TorusFn scaled(const CycloScalar& c) const;
    friend TorusFn operator+(TorusFn a, const TorusFn& b) { return a += b; }
    friend TorusFn operator-(TorusFn a, const TorusFn& b) { return a -= b; }
    friend bool operator==(const TorusFn& a, const TorusFn& b);
    friend bool operator!=(const TorusFn& a, const TorusFn& b) { return !(a == b); }

    // pointwise product
    static TorusFn mul(const TorusFn& a, const TorusFn& b, Exec ex = Exec::parallel);
    friend TorusFn operator*(const TorusFn& a, const TorusFn& b) { return mul(a, b); }

    // g(.., lambda, ..) = f(.., lambda + d, ..) in variable var
    TorusFn shifted(int var, long d) const;
    // lambda -> -lambda in variable var
    TorusFn reflected(int var) const;
    // sigma -> -sigma in variable var
    TorusFn sign_flipped(int var) const;

private:
    void trim_block(Block& b) const;

    const RootParams* rp_ = nullptr;
    int arity_ = 1;
    std::vector<Block> blocks_;
};

// 1-d Newton helpers
std::vector<CycloScalar> newton_from_values(std::vector<CycloScalar> vals);
CycloScalar newton_eval(const std::vector<CycloScalar>& coef, long x, const RootParams* rp);

}  // namespace qfrob
