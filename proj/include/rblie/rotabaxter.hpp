#pragma once

#include <string>
#include <vector>

#include "rblie/lie.hpp"
#include "rblie/matrix.hpp"
#include "rblie/subspace.hpp"
#include "rblie/tensor.hpp"

namespace rblie {

/// A linear operator b on a Lie algebra satisfying, for all x, y,
///   [b x, b y] = b([b x, y] + [x, b y] + lambda [x, y]).
struct RotaBaxter {
    LieAlgebra algebra;
    Matrix b;
    GaussRat lambda;

    RotaBaxter() = default;
    RotaBaxter(LieAlgebra g, Matrix op, GaussRat weight);

    /// The modified bracket [x,y]_b = [b x, y] + [x, b y] + lambda [x, y].
    Vec descendent_bracket(const Vec& x, const Vec& y) const;

    /// Violations of the defining identity over basis pairs.
    std::vector<std::string> validate() const;
    bool is_valid() const;
};

/// The Lie algebra carried by the modified bracket [.,.]_b.  The structure
/// constants are filled in from descendent_bracket; callers validate when the
/// operator is not already known to satisfy the defining identity.
LieAlgebra descendent(const RotaBaxter& rb);

/// (g, -lambda 1 - b, lambda): the companion operator of the same weight.
RotaBaxter weight_negation(const RotaBaxter& rb);

/// A Rota-Baxter operator together with a compatible invariant pairing:
/// S symmetric, nondegenerate, ad-invariant, and
///   S(b x, y) + S(x, b y) + lambda S(x, y) = 0.
struct QuadraticRB {
    RotaBaxter rb;
    BilinearForm s;

    QuadraticRB() = default;
    QuadraticRB(RotaBaxter op, BilinearForm form);

    std::vector<std::string> validate() const;
    bool is_valid() const;
};

/// Operator leg of the induced r-matrix: (1/lambda)(b + lambda 1) I_S when
/// lambda != 0, and b I_S when lambda = 0.
Matrix r_plus_from_quadratic(const QuadraticRB& q);

/// The induced r-matrix itself, as a tensor: tensor_of(r_plus).
Tensor2 r_from_quadratic(const QuadraticRB& q);

/// Residuals and predicates for a candidate reflection map on a quadratic
/// Rota-Baxter Lie algebra.  Three dialects are tracked:
///  - "skew":      (tau-1)(b+lambda 1)(tau+1) = 0 and S(tau x,y)+S(x,tau y)=0;
///  - "symmetric": (tau-1)(b+lambda 1)(tau-1) = 0 and S(tau x,y)-S(x,tau y)=0;
///  - "relaxed-ad": the operator equation is only required to commute with
///    ad_x for every x fixed by tau (paired with whichever pairing sign holds).
struct ReflectionReport {
    bool automorphism = false;
    bool skew_equation = false;
    bool symmetric_equation = false;
    bool skew_pairing = false;
    bool symmetric_pairing = false;
    bool relaxed_skew = false;
    bool relaxed_symmetric = false;
    Matrix skew_residual;
    Matrix symmetric_residual;

    /// variant is one of "skew", "symmetric", "relaxed-ad".
    bool passes(const std::string& variant) const;
};

ReflectionReport reflection_report(const QuadraticRB& q, const Matrix& tau);

/// Block decomposition of b against the +/-1 eigenspaces h, p of an
/// involution (std::invalid_argument when tau^2 != 1).  In the ordered basis
/// [h | p], the conjugated operator splits into the four named blocks; the
/// skew operator equation holds iff the p-component of b(h) vanishes, and the
/// skew pairing holds iff h and p are both isotropic.
struct InvolutionBlocks {
    Subspace h;
    Subspace p;
    Matrix basis_change{};    // columns: h basis then p basis
    Matrix conjugated{};      // basis_change^{-1} b basis_change
    Matrix b_h_to_h{};
    Matrix b_h_to_p{};
    Matrix b_p_to_h{};
    Matrix b_p_to_p{};
    bool equation_criterion = false;  // b_h_to_p == 0
    bool h_isotropic = false;
    bool p_isotropic = false;
    bool commutes_with_b = false;     // tau b tau == b
};

InvolutionBlocks involution_blocks(const QuadraticRB& q, const Matrix& tau);

/// The fixed-point set h = ker(tau - 1), its annihilator in coordinates of
/// the dual space, and its orthogonal complement h0 with respect to S.  The
/// complement is computed two ways (directly from the Gram matrix, and as
/// I_S applied to the annihilator) which must agree (std::logic_error).
struct FixedOrthogonal {
    Subspace h;
    Subspace h_perp;
    Subspace h0;
    bool h0_equals_h = false;
    bool h0_equals_im_tau_plus = false;
    bool h0_equals_im_tau_minus = false;
    bool h_equals_im_tau_plus = false;
};

FixedOrthogonal fixed_and_orthogonal(const QuadraticRB& q, const Matrix& tau);

/// Stability and closure facts tying h0 to the modified bracket.  All fields
/// are reported, never asserted; which of them hold depends on which dialect
/// of reflection tau satisfies.
struct OrthogonalFixedReport {
    Subspace h;
    Subspace h0;
    bool b_plus_lambda_h_in_h = false;      // (b + lambda 1)(h) in h
    bool b_h0_in_h0 = false;                // b(h0) in h0
    bool b_plus_lambda_h0_in_h = false;     // (b + lambda 1)(h0) in h
    bool h0_descendent_closed = false;      // [h0, h0]_b in h0
    bool h0_descendent_ideal = false;       // [g, h0]_b in h0
    bool paired_sum_closed = false;         // h0 (x) h closed in the paired sum
};

OrthogonalFixedReport orthogonal_fixed_report(const QuadraticRB& q, const Matrix& tau);

/// The Lie algebra on (g, g) whose first slot carries the modified bracket,
/// second slot the original bracket, and whose mixed bracket is
///   [(xi,0),(0,a)] = ([xi,a], [b xi, a] - b[xi, a]).
LieAlgebra paired_sum(const RotaBaxter& rb);

/// Double-size quadratic structure on the plain direct sum g (+) g:
///   bhat(u,x) = (w,w) with w = b u - (b + lambda 1) x,
///   shat((u,x),(v,y)) = S(u,v) - S(x,y),
/// with the slot swap (u,x) -> (x,u) as canonical reflection.  Requires
/// lambda != 0 (std::invalid_argument).
QuadraticRB doubled_qrb(const QuadraticRB& q);
Matrix doubled_reflection(const QuadraticRB& q);

/// Same structure transported onto the paired sum:
///   b(xi,x) = (0, -lambda x),
///   s((xi,x),(eta,y)) = lambda (S(xi,y) + S(x,eta)),
///   tau(xi,x) = (-xi, (2b + lambda 1) xi + x).
QuadraticRB paired_sum_qrb(const QuadraticRB& q);
Matrix paired_sum_reflection(const QuadraticRB& q);

/// Factorization isomorphisms onto the plain direct sum g (+) g (lambda != 0):
///   psi(alpha, x) = (r_plus alpha + x, r_minus alpha + x)  on dual (x) g,
///   phi(xi, x)    = ((b + lambda 1) xi + x, b xi + x)      on the paired sum.
Matrix factorization_psi(const QuadraticRB& q);
Matrix factorization_phi(const QuadraticRB& q);

/// Lie algebra on g* (+) g: pure slots carry the r-induced dual bracket and
/// the original bracket; the mixed bracket is transported through psi from
/// the plain direct sum.  The pure slots are cross-checked against their
/// intrinsic definitions (std::logic_error on mismatch).  Requires
/// lambda != 0.
LieAlgebra dual_pair_algebra(const QuadraticRB& q);

/// Quadratic structure on the dual pair:
///   b(alpha, x) = (0, -lambda x),
///   s((alpha,x),(beta,y)) = <alpha,y> + <x,beta>,
///   tau(alpha, x) = (-alpha, (1/lambda)(2b + lambda 1) I_S alpha + x).
QuadraticRB dual_pair_qrb(const QuadraticRB& q);
Matrix dual_pair_reflection(const QuadraticRB& q);

/// The semidirect sum g x| g* (coadjoint action) with operator
/// b (+) (-lambda 1 - b^T) and the duality pairing as Gram matrix; a
/// quadratic structure of the same weight for any lambda.
QuadraticRB semidirect_quadratic(const RotaBaxter& rb);

/// The induced r-matrix on the semidirect sum, built independently from the
/// pairing formula
///   r(x+xi, y+eta) = (1/lambda)(<b x, eta> - <xi, b y> + lambda <x, eta>)
/// (the lambda = 0 version drops the 1/lambda and the last term).
Tensor2 r_semidirect(const RotaBaxter& rb);

/// rho(x) = ad*_{b x} - ad*_x b*: the representation of the modified-bracket
/// algebra on g* under which the semidirect sum's descendent factors.
Representation descendent_coadjoint_rep(const RotaBaxter& rb);

/// Reflection conditions on a (plain, not necessarily quadratic) Rota-Baxter
/// Lie algebra: tau an automorphism with
///   tau[tau x, y] - [x, tau y] = 0,
///   lambda(tau^2 - 1) = 0,
///   tau b tau - b + tau b - b tau = 0.
struct RBReflectionReport {
    bool automorphism = false;
    bool homogeneity = false;
    bool involution_scaled = false;
    bool operator_equation = false;
    Matrix operator_residual;

    bool is_reflection() const {
        return automorphism && homogeneity && involution_scaled && operator_equation;
    }
};

RBReflectionReport rb_reflection_report(const RotaBaxter& rb, const Matrix& tau);

/// tau (+) (-tau^T) on the semidirect sum g x| g*.
Matrix lifted_reflection(const RotaBaxter& rb, const Matrix& tau);

/// h (+) l inside g (+) g*, where h = ker(tau - 1) and l = ker(tau^T + 1):
/// the fixed-point set of the lifted map.
Subspace fixed_lift_subspace(const RotaBaxter& rb, const Matrix& tau);

/// Im(tau + 1) (+) h-perp inside g (+) g*: the annihilator of the lifted
/// fixed-point set, together with whether it is closed under the modified
/// bracket of the semidirect sum and stable under its operator.
struct LiftedSubalgebraReport {
    Subspace subspace;
    bool closed_under_descendent = false;
    bool stable_under_operator = false;
};

LiftedSubalgebraReport lifted_subalgebra_report(const RotaBaxter& rb, const Matrix& tau);

}  // namespace rblie
