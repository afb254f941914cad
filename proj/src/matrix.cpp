#include "rblie/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace rblie {

namespace {
void check_same_size(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
}
}  // namespace

Vec vec_add(const Vec& a, const Vec& b) {
    check_same_size(a, b);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check_same_size(a, b);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const GaussRat& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = c * a[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

GaussRat dot(const Vec& a, const Vec& b) {
    check_same_size(a, b);
    GaussRat s;
    for (size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
    return s;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussRat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.resize(rows_ * cols_);
    size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        size_t j = 0;
        for (const auto& x : r) e_[i * cols_ + j++] = x;
        i++;
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; i++) m.at(i, i) = GaussRat(1);
    return m;
}

Vec Matrix::row(size_t i) const {
    Vec v(cols_);
    for (size_t j = 0; j < cols_; j++) v[j] = at(i, j);
    return v;
}

Vec Matrix::col(size_t j) const {
    Vec v(rows_);
    for (size_t i = 0; i < rows_; i++) v[i] = at(i, j);
    return v;
}

void Matrix::set_row(size_t i, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("row size mismatch");
    for (size_t j = 0; j < cols_; j++) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; i++)
        for (size_t j = 0; j < cols_; j++) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    Vec r(rows_);
    for (size_t i = 0; i < rows_; i++) {
        GaussRat s;
        for (size_t j = 0; j < cols_; j++) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
        }
        r[i] = s;
    }
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    for (size_t k = 0; k < e_.size(); k++) e_[k] += o.e_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    for (size_t k = 0; k < e_.size(); k++) e_[k] -= o.e_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; i++)
        for (size_t k = 0; k < a.cols_; k++) {
            const GaussRat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; j++) {
                if (!b.at(k, j).is_zero()) r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

Matrix operator*(const GaussRat& c, Matrix m) {
    for (auto& x : m.e_) x = c * x;
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; i++) {
        os << "[";
        for (size_t j = 0; j < cols_; j++) {
            if (j) os << ", ";
            os << at(i, j);
        }
        os << "]\n";
    }
    return os.str();
}

Matrix rref(const Matrix& m, size_t* rank_out) {
    Matrix a = m;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); c++) {
        size_t piv = r;
        while (piv < a.rows() && a.at(piv, c).is_zero()) piv++;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < a.cols(); j++) std::swap(a.at(piv, j), a.at(r, j));
        GaussRat inv = a.at(r, c).inv();
        for (size_t j = c; j < a.cols(); j++) a.at(r, j) = inv * a.at(r, j);
        for (size_t i = 0; i < a.rows(); i++) {
            if (i == r || a.at(i, c).is_zero()) continue;
            GaussRat f = a.at(i, c);
            for (size_t j = c; j < a.cols(); j++) a.at(i, j) -= f * a.at(r, j);
        }
        r++;
    }
    if (rank_out) *rank_out = r;
    return a;
}

size_t rank(const Matrix& m) {
    size_t r = 0;
    rref(m, &r);
    return r;
}

Matrix kernel_basis(const Matrix& m) {
    size_t r = 0;
    Matrix e = rref(m, &r);
    size_t n = m.cols();
    std::vector<size_t> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (size_t i = 0; i < r; i++) {
        size_t c = 0;
        while (c < n && e.at(i, c).is_zero()) c++;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    Matrix out(n - r, n);
    size_t k = 0;
    for (size_t free = 0; free < n; free++) {
        if (is_pivot[free]) continue;
        out.at(k, free) = GaussRat(1);
        for (size_t i = 0; i < r; i++) out.at(k, pivot_col[i]) = -e.at(i, free);
        k++;
    }
    return rref(out);
}

Matrix image_basis(const Matrix& m) {
    size_t r = 0;
    Matrix e = rref(m.transpose(), &r);
    Matrix out(r, m.rows());
    for (size_t i = 0; i < r; i++) out.set_row(i, e.row(i));
    return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    Matrix e = rref(aug);
    Vec x(m.cols());
    for (size_t i = 0; i < m.rows(); i++) {
        size_t c = 0;
        while (c < m.cols() + 1 && e.at(i, c).is_zero()) c++;
        if (c == m.cols() + 1) continue;         // zero row
        if (c == m.cols()) return std::nullopt;  // 0 = nonzero
        x[c] = e.at(i, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: square matrix required");
    size_t n = m.rows();
    Matrix aug = hcat(m, Matrix::identity(n));
    size_t r = 0;
    Matrix e = rref(aug, &r);
    // rank of the left block must be n
    for (size_t i = 0; i < n; i++) {
        bool row_ok = false;
        for (size_t j = 0; j < n; j++)
            if (!e.at(i, j).is_zero()) row_ok = true;
        if (!row_ok) return std::nullopt;
    }
    Matrix inv(n, n);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) inv.at(i, j) = e.at(i, n + j);
    return inv;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row count mismatch");
    Matrix r(a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) r.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols(); j++) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column count mismatch");
    Matrix r(a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++)
        for (size_t j = 0; j < a.cols(); j++) r.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); i++)
        for (size_t j = 0; j < b.cols(); j++) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); i++)
        for (size_t j = 0; j < a.cols(); j++) r.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); i++)
        for (size_t j = 0; j < b.cols(); j++) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

}  // namespace rblie
