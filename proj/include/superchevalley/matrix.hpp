#pragma once

#include "superchevalley/scalars.hpp"

#include <cassert>
#include <vector>

namespace superchevalley {

// Dense square matrix over a ring; T() must be zero and T(1) the unit.
template <class T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n, const T& fill = T()) : n_(n), e_(static_cast<size_t>(n) * n, fill) {}

    static Matrix identity(int n, const T& one = T(1))
    {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int size() const { return n_; }
    T& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    Matrix& operator+=(const Matrix& o)
    {
        assert(n_ == o.n_);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        assert(n_ == o.n_);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
    friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }

    friend Matrix operator*(const Matrix& x, const Matrix& y)
    {
        assert(x.n_ == y.n_);
        Matrix r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const T& xik = x(i, k);
                if (is_zero(xik)) continue;
                for (int j = 0; j < x.n_; ++j) {
                    const T& ykj = y(k, j);
                    if (!is_zero(ykj)) r(i, j) += xik * ykj;
                }
            }
        return r;
    }

    template <class S>
    Matrix scaled(const S& s) const
    {
        Matrix r = *this;
        for (auto& x : r.e_) x = s * x;
        return r;
    }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    bool is_zero_matrix() const
    {
        for (const auto& x : e_)
            if (!is_zero(x)) return false;
        return true;
    }

    const std::vector<T>& entries() const { return e_; }

private:
    int n_ = 0;
    std::vector<T> e_;
};

}  // namespace superchevalley
