#include "rblie/subspace.hpp"

#include <stdexcept>

namespace rblie {

Subspace Subspace::span_rows(const Matrix& m) {
    Subspace s(m.cols());
    size_t r = 0;
    Matrix e = rref(m, &r);
    Matrix b(r, m.cols());
    for (size_t i = 0; i < r; i++) b.set_row(i, e.row(i));
    s.basis_ = b;
    return s;
}

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& vectors) {
    Matrix m(vectors.size(), ambient);
    for (size_t i = 0; i < vectors.size(); i++) m.set_row(i, vectors[i]);
    return span_rows(m);
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
    Matrix m(basis_.rows() + 1, ambient_);
    for (size_t i = 0; i < basis_.rows(); i++) m.set_row(i, basis_.row(i));
    m.set_row(basis_.rows(), v);
    return rank(m) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
    return sum(other).dim() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
    return span_rows(vcat(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    // a cap b = ann(ann(a) + ann(b))
    return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::annihilator() const {
    Subspace s(ambient_);
    s.basis_ = kernel_basis(basis_);
    return s;
}

Subspace Subspace::s_orthogonal(const Matrix& gram) const {
    if (gram.rows() != ambient_ || gram.cols() != ambient_)
        throw std::invalid_argument("s_orthogonal: gram size mismatch");
    // constraints: for each basis row u, (G u)^T x = 0
    Matrix constraints = basis_ * gram.transpose();
    Subspace s(ambient_);
    s.basis_ = kernel_basis(constraints);
    return s;
}

Subspace Subspace::map_by(const Matrix& m) const {
    if (m.cols() != ambient_) throw std::invalid_argument("map_by: size mismatch");
    Matrix rows(dim(), m.rows());
    for (size_t i = 0; i < dim(); i++) rows.set_row(i, m.apply(basis_.row(i)));
    return span_rows(rows);
}

Subspace fixed_space(const Matrix& m) { return eigenspace(m, GaussRat(1)); }

Subspace eigenspace(const Matrix& m, const GaussRat& c) {
    if (!m.is_square()) throw std::invalid_argument("eigenspace: square matrix required");
    Matrix shifted = m;
    for (size_t i = 0; i < m.rows(); i++) shifted.at(i, i) -= c;
    return kernel_space(shifted);
}

Subspace kernel_space(const Matrix& m) {
    Subspace s(m.cols());
    Matrix b = kernel_basis(m);
    s = Subspace::span_rows(b);
    return s;
}

Subspace image_space(const Matrix& m) { return Subspace::span_rows(image_basis(m)); }

}  // namespace rblie
