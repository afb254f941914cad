#pragma once
// Floating-point sampling of the bivector fields induced by the exact
// structures: the left-invariant-minus-right-invariant tensor attached to a
// quadratic operator triple, and the six-term bivector on a semidirect
// product with a dual space, both evaluated in a left-trivialized frame.
//
// Everything exact is proven upstream with rational arithmetic; this module
// only measures float residuals of the group-level formulas: skew-symmetry,
// vanishing at the identity, multiplicativity over sampled pairs, and the
// linear structure of the fiber block. Floats live only here.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "rblie/relativerb.hpp"
#include "rblie/rotabaxter.hpp"

namespace rblie {

using Cplx = std::complex<double>;

/// Dense complex double matrix. Also used for order-2 tensors in basis
/// coordinates (entry (i,j) = coefficient of e_i (x) e_j).
struct FMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Cplx> a;

    FMatrix() = default;
    FMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    Cplx& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Cplx& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static FMatrix identity(size_t n);
};

FMatrix operator+(const FMatrix& x, const FMatrix& y);
FMatrix operator-(const FMatrix& x, const FMatrix& y);
FMatrix operator*(const FMatrix& x, const FMatrix& y);
FMatrix operator*(const Cplx& c, const FMatrix& x);
FMatrix transpose(const FMatrix& x);
double max_abs(const FMatrix& x);
bool all_finite(const FMatrix& x);

/// Componentwise conversion of exact values to complex doubles.
Cplx to_float(const GaussRat& v);
FMatrix to_float(const Matrix& m);

/// Matrix exponential by scaling-and-squaring with a fixed-length series;
/// deterministic for identical inputs. Throws std::overflow_error when the
/// input or result is not finite.
FMatrix mexp(const FMatrix& x);

/// Float structure constants (imported from an exact algebra) plus an
/// optional concrete matrix realization of the basis used only for the
/// realization consistency check.
struct MatrixLieData {
    size_t dim = 0;
    std::vector<Cplx> c;           // c[(i*dim + j)*dim + k]
    std::vector<FMatrix> basis;    // may be empty
    bool complex_coefficients = false;  // sample coefficients from C, not R

    Cplx c_at(size_t i, size_t j, size_t k) const { return c[(i * dim + j) * dim + k]; }

    /// Adjoint action of the coordinate vector x, as a dim x dim matrix.
    FMatrix ad(const std::vector<Cplx>& x) const;

    /// max |[X_i, X_j] - sum_k c_ijk X_k| over the realization; 0 when no
    /// basis matrices are attached.
    double realization_residual() const;

    static MatrixLieData from(const LieAlgebra& g, std::vector<FMatrix> basis_mats,
                              bool complex_coeffs);
};

/// A group element presented as a product of exponentials of algebra
/// coordinate vectors; the empty product is the identity.
struct GroupPoint {
    std::vector<std::vector<Cplx>> factors;
};

GroupPoint point_inverse(const GroupPoint& p);
GroupPoint point_product(const GroupPoint& p, const GroupPoint& q);

/// Adjoint action of the group point: the product of exponentials of the
/// factor adjoints.
FMatrix algebra_adjoint(const MatrixLieData& data, const GroupPoint& p);

/// The full induced tensor of a quadratic triple and its skew part
/// ((r - r^21)/2, computed exactly before conversion), as coordinate floats.
FMatrix full_tensor(const QuadraticRB& q);
FMatrix skew_tensor(const QuadraticRB& q);

/// Left-trivialized bivector of the quadratic triple at a group point:
/// t - (Ad_{g^-1} (x) Ad_{g^-1}) t for the skew tensor t. `use_full`
/// substitutes the full tensor; the symmetric part cancels between the left
/// and right translates, so the result agrees up to float noise.
FMatrix pi_quadratic(const MatrixLieData& data, const QuadraticRB& q, const GroupPoint& g,
                     bool use_full = false);

/// Data for the semidirect-with-dual-fiber bivector: the base algebra, the
/// action matrices on the module, the operator column matrix, an overall
/// scale, and the exact linear structure expected on the fiber block at the
/// identity (L[(a*m + b)*m + c] = coefficient of alpha_c in {u_a, u_b}).
struct SemidirectData {
    MatrixLieData base;
    std::vector<FMatrix> rho;  // rho(e_i) on the module, m x m
    FMatrix t;                 // n x m, column a = coordinates of T(u_a)
    Cplx scale{1.0, 0.0};
    std::vector<Cplx> fiber_linear;  // size m^3

    size_t fiber_dim() const { return rho.empty() ? t.cols : rho.front().rows; }
};

/// Module reading: a weight-0 relative operator with its module action; the
/// fiber block at the identity carries the descendent bracket of the module.
SemidirectData module_data(const MatrixLieData& base, const RelativeRB0& x);

/// Coadjoint reading: a weighted operator on the base algebra acting on its
/// dual; scale 1 at weight 0 and 1/(2*weight) otherwise, with the fiber
/// linear structure (1/(2w))(descendent - w * original) brackets (reducing
/// to the descendent bracket at weight 0).
SemidirectData coadjoint_data(const MatrixLieData& base, const RotaBaxter& rb);

/// A point of the semidirect group: base point and fiber coordinates.
struct SemidirectPoint {
    GroupPoint g;
    std::vector<Cplx> alpha;
};

/// The module action matrix of the base point (product of exponentials).
FMatrix rho_of(const SemidirectData& data, const GroupPoint& g);

SemidirectPoint semidirect_inverse(const SemidirectData& data, const SemidirectPoint& p);
SemidirectPoint semidirect_product(const SemidirectData& data, const SemidirectPoint& p,
                                   const SemidirectPoint& q);

/// Adjoint action of a semidirect point on base (+) fiber coordinates,
/// as an (n+m) x (n+m) matrix.
FMatrix semidirect_adjoint(const SemidirectData& data, const SemidirectPoint& p);

/// Left-trivialized six-term bivector at a semidirect point, an
/// (n+m) x (n+m) coordinate tensor with base coordinates first.
FMatrix pi_semidirect(const SemidirectData& data, const SemidirectPoint& p);

/// Float tolerances, documented in every report.
inline constexpr double kTolSingle = 1e-10;     // one formula evaluation
inline constexpr double kTolIdentity = 1e-12;   // evaluation at g * g^-1
inline constexpr double kTolComposite = 1e-8;   // identities combining evaluations

/// Maximum residuals over a seeded sample run. Rendering is byte-stable for
/// identical inputs.
struct SampleReport {
    std::string formula;
    size_t samples = 0;
    std::uint64_t seed = 0;
    double skew = 0.0;             // pi + pi^T
    double identity = 0.0;         // pi at g * g^-1
    double multiplicativity = 0.0; // pi_{gh} - pi_h - Ad_{h^-1}(x)2 pi_g
    double linear_part = 0.0;      // fiber block at (e, alpha) vs exact linear structure
    double substitution = 0.0;     // full tensor vs skew part (quadratic only)

    bool pass() const;
    std::string text() const;
};

/// Sampled residual suites. Each sample draws from its own deterministic
/// stream derived from (seed, sample index), so runs are order-independent
/// and reproducible.
SampleReport sample_quadratic(const MatrixLieData& data, const QuadraticRB& q, size_t n_samples,
                              std::uint64_t seed);
SampleReport sample_coadjoint(const MatrixLieData& data, const RotaBaxter& rb, size_t n_samples,
                              std::uint64_t seed);
SampleReport sample_module(const MatrixLieData& base, const RelativeRB0& x, size_t n_samples,
                           std::uint64_t seed);

/// The combined suite for a quadratic triple: the quadratic residuals merged
/// with the coadjoint residuals of its operator (the linear-part slot comes
/// from the coadjoint run).
SampleReport sample_suite(const MatrixLieData& data, const QuadraticRB& q, size_t n_samples,
                          std::uint64_t seed);

}  // namespace rblie
