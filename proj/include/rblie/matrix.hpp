#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "rblie/rational.hpp"

namespace rblie {

using Vec = std::vector<GaussRat>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const GaussRat& c, const Vec& a);
bool vec_is_zero(const Vec& a);
GaussRat dot(const Vec& a, const Vec& b);  // bilinear, no conjugation

/// Dense matrix over GaussRat, row-major.  Matrices act on column
/// coordinate vectors: (M v)[i] = sum_j M[i][j] v[j].
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<GaussRat>> rows);

    static Matrix identity(size_t n);
    static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    GaussRat& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const GaussRat& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    Vec row(size_t i) const;
    Vec col(size_t j) const;
    void set_row(size_t i, const Vec& v);

    Matrix transpose() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Vec apply(const Vec& v) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const GaussRat& c, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<GaussRat> e_;
};

/// Reduced row echelon form; if rank is non-null it receives the rank.
Matrix rref(const Matrix& m, size_t* rank = nullptr);
size_t rank(const Matrix& m);

/// Row basis of the null space {x : M x = 0}, in RREF.
Matrix kernel_basis(const Matrix& m);
/// Row basis of the column space, in RREF (coordinates in the codomain).
Matrix image_basis(const Matrix& m);

/// One solution of M x = rhs, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);
std::optional<Matrix> inverse(const Matrix& m);

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

}  // namespace rblie
