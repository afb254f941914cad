#pragma once

#include "rblie/matrix.hpp"

namespace rblie {

/// Dense element of V (x) V for an n-dimensional space V:
/// t = sum_{i,j} t[i][j] e_i (x) e_j.
struct Tensor2 {
    size_t dim = 0;
    std::vector<GaussRat> v;

    Tensor2() = default;
    explicit Tensor2(size_t n) : dim(n), v(n * n) {}

    GaussRat& at(size_t i, size_t j) { return v[i * dim + j]; }
    const GaussRat& at(size_t i, size_t j) const { return v[i * dim + j]; }

    bool is_zero() const;

    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(const GaussRat& c, Tensor2 t);
    friend bool operator==(const Tensor2& a, const Tensor2& b) {
        return a.dim == b.dim && a.v == b.v;
    }
    friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }
};

/// Dense element of V (x) V (x) V.
struct Tensor3 {
    size_t dim = 0;
    std::vector<GaussRat> v;

    Tensor3() = default;
    explicit Tensor3(size_t n) : dim(n), v(n * n * n) {}

    GaussRat& at(size_t i, size_t j, size_t k) { return v[(i * dim + j) * dim + k]; }
    const GaussRat& at(size_t i, size_t j, size_t k) const { return v[(i * dim + j) * dim + k]; }

    bool is_zero() const;
    size_t nonzero_count() const;

    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.dim == b.dim && a.v == b.v;
    }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }
};

/// Leg swap: (t^21)[i][j] = t[j][i].
Tensor2 transpose21(const Tensor2& t);

/// Reverses the outer legs: out[i][j][k] = t[k][j][i].
Tensor3 reverse13(const Tensor3& t);

/// The linear map V* -> V attached to t by pairing the first leg:
/// op(xi) = t(xi, .).  Column k of the result is t[k][.].
Matrix operator_of(const Tensor2& t);

/// Inverse of operator_of: t with t[i][j] = m[j][i], i.e. the tensor
/// sum_i e_i (x) op(e_i^*).
Tensor2 tensor_of(const Matrix& m);

}  // namespace rblie
