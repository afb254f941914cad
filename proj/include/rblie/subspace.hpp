#pragma once

#include "rblie/matrix.hpp"

namespace rblie {

/// Linear subspace of a fixed-dimension coordinate space, stored as an RREF
/// row basis.  The RREF basis is canonical, so equal subspaces compare equal.
class Subspace {
public:
    /// The zero subspace of the given ambient dimension.
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    /// Span of the rows of m (rows live in a space of dimension m.cols()).
    static Subspace span_rows(const Matrix& m);
    static Subspace span(size_t ambient, const std::vector<Vec>& vectors);
    static Subspace full(size_t ambient) { return span_rows(Matrix::identity(ambient)); }

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(size_t k) const { return basis_.row(k); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    /// Annihilator in the dual space: {xi : <xi, v> = 0 for all v here}.
    /// Coordinates are with respect to the dual basis.
    Subspace annihilator() const;

    /// Orthogonal complement with respect to a bilinear form with Gram
    /// matrix g: {x : g(x, v) = 0 for all v here}, where g(x, v) = x^T G v.
    Subspace s_orthogonal(const Matrix& gram) const;

    /// Image of this subspace under the linear map m (columns = ambient()).
    Subspace map_by(const Matrix& m) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    size_t ambient_;
    Matrix basis_;
};

/// Fixed space ker(m - 1) of a square matrix.
Subspace fixed_space(const Matrix& m);
/// ker(m - c * 1), rows in RREF.
Subspace eigenspace(const Matrix& m, const GaussRat& c);
Subspace kernel_space(const Matrix& m);
Subspace image_space(const Matrix& m);

}  // namespace rblie
