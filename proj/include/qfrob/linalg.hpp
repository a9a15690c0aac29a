#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qfrob/error.hpp"

namespace qfrob {

template <class S>
struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<S> a;

    Matrix() = default;
    Matrix(size_t r, size_t c, const S& fill) : rows(r), cols(c), a(r * c, fill) {}
    S& operator()(size_t i, size_t j) { return a[i * cols + j]; }
    const S& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

    static Matrix identity(size_t n, const S& zero, const S& one) {
        Matrix m(n, n, zero);
        for (size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    Matrix transpose() const {
        Matrix t(cols, rows, a.empty() ? S() : a[0]);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
};

template <class S>
Matrix<S> mat_mul(const Matrix<S>& x, const Matrix<S>& y, const S& zero) {
    if (x.cols != y.rows) throw ArithmeticError("matrix shape mismatch");
    Matrix<S> r(x.rows, y.cols, zero);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const S& v = x(i, k);
            if (v.is_zero()) continue;
            for (size_t j = 0; j < y.cols; ++j)
                if (!y(k, j).is_zero()) r(i, j) += v * y(k, j);
        }
    return r;
}

template <class S>
bool mat_is_zero(const Matrix<S>& m) {
    for (const auto& v : m.a)
        if (!v.is_zero()) return false;
    return true;
}

template <class S>
bool mat_equal(const Matrix<S>& x, const Matrix<S>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (x.a[i] != y.a[i]) return false;
    return true;
}

// In-place reduced row echelon form; returns pivot columns.
// The parallel flavour distributes the row eliminations of each pivot step
// over OpenMP threads; both produce identical results.
template <class S>
std::vector<size_t> rref_serial(Matrix<S>& m) {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t p = r;
        while (p < m.rows && m(p, c).is_zero()) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        S inv = m(r, c).inv();
        for (size_t j = c; j < m.cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            S f = m(i, c);
            for (size_t j = c; j < m.cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class S>
std::vector<size_t> rref_parallel(Matrix<S>& m) {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t p = r;
        while (p < m.rows && m(p, c).is_zero()) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        S inv = m(r, c).inv();
        for (size_t j = c; j < m.cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
        const long nrows = static_cast<long>(m.rows);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < nrows; ++i) {
            if (static_cast<size_t>(i) == r || m(i, c).is_zero()) continue;
            S f = m(i, c);
            for (size_t j = c; j < m.cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class S>
size_t mat_rank(Matrix<S> m, bool parallel = true) {
    return parallel ? rref_parallel(m).size() : rref_serial(m).size();
}

// Basis of {x : m x = 0}.
template <class S>
std::vector<std::vector<S>> nullspace(Matrix<S> m, const S& zero, const S& one) {
    auto piv = rref_parallel(m);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<S>> basis;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<S> v(m.cols, zero);
        v[f] = one;
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class S>
std::optional<Matrix<S>> mat_inverse(const Matrix<S>& m, const S& zero, const S& one) {
    if (m.rows != m.cols) return std::nullopt;
    const size_t n = m.rows;
    Matrix<S> aug(n, 2 * n, zero);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = one;
    }
    auto piv = rref_serial(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix<S> inv(n, n, zero);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace qfrob
