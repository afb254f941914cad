#include "rblie/tensor.hpp"

#include <stdexcept>

namespace rblie {

static void check_same_dim(size_t a, size_t b) {
    if (a != b) throw std::invalid_argument("tensor dimension mismatch");
}

bool Tensor2::is_zero() const {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    check_same_dim(dim, o.dim);
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    check_same_dim(dim, o.dim);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
}

Tensor2 operator*(const GaussRat& c, Tensor2 t) {
    for (auto& x : t.v) x *= c;
    return t;
}

bool Tensor3::is_zero() const {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

size_t Tensor3::nonzero_count() const {
    size_t n = 0;
    for (const auto& x : v)
        if (!x.is_zero()) ++n;
    return n;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
    check_same_dim(dim, o.dim);
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    check_same_dim(dim, o.dim);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
}

Tensor2 transpose21(const Tensor2& t) {
    Tensor2 out(t.dim);
    for (size_t i = 0; i < t.dim; ++i)
        for (size_t j = 0; j < t.dim; ++j) out.at(i, j) = t.at(j, i);
    return out;
}

Tensor3 reverse13(const Tensor3& t) {
    Tensor3 out(t.dim);
    for (size_t i = 0; i < t.dim; ++i)
        for (size_t j = 0; j < t.dim; ++j)
            for (size_t k = 0; k < t.dim; ++k) out.at(i, j, k) = t.at(k, j, i);
    return out;
}

Matrix operator_of(const Tensor2& t) {
    Matrix m(t.dim, t.dim);
    for (size_t i = 0; i < t.dim; ++i)
        for (size_t j = 0; j < t.dim; ++j) m.at(j, i) = t.at(i, j);
    return m;
}

Tensor2 tensor_of(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("tensor_of needs a square matrix");
    Tensor2 t(m.rows());
    for (size_t i = 0; i < t.dim; ++i)
        for (size_t j = 0; j < t.dim; ++j) t.at(i, j) = m.at(j, i);
    return t;
}

}  // namespace rblie
