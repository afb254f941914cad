#pragma once

#include "rblie/lie.hpp"
#include "rblie/rotabaxter.hpp"

#include <string>
#include <vector>

namespace rblie {

/// A linear map t: V -> g from a module (V, rho) into the acting algebra,
/// subject (when valid) to t(rho(tu)v - rho(tv)u) = [tu, tv] on all pairs.
struct RelativeRB0 {
    LieAlgebra algebra;   // g
    Representation rho;   // action of g on V
    Matrix t;             // V -> g, shape dim(g) x dim(V)

    RelativeRB0(LieAlgebra algebra_, Representation rho_, Matrix t_);

    size_t module_dim() const { return rho.space_dim; }

    /// Representation residuals of rho plus the defining identity, checked
    /// on every basis pair of V.  Empty iff the structure is valid.
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }
};

/// The bracket [u,v]_t = rho(tu)v - rho(tv)u on V (a Lie algebra when the
/// defining identity holds).
LieAlgebra descendent_module(const RelativeRB0& x);

/// The action theta of the descendent module on g:
/// theta(u)(y) = [tu, y] + t(rho(y)u).
Representation module_action(const RelativeRB0& x);

/// g acting on the dual module: the ambient algebra g x| V* carrying the
/// induced tensor.  Basis order: g first, then V*.
LieAlgebra ambient_algebra(const RelativeRB0& x);

/// descendent_module acting on g*: the partner algebra V_t x| g*.
LieAlgebra partner_algebra(const RelativeRB0& x);

/// The skew tensor on the ambient algebra with t in the g (x) V* slot:
/// entries r[i][n+a] = t[i][a], r[n+a][i] = -t[i][a].  For t = identity this
/// is sum_i (e_i (x) e_i^* - e_i^* (x) e_i).
Tensor2 r_relative(const RelativeRB0& x);

/// Facts tying the tensor to the two semidirect algebras.  The dual bracket
/// induced by r_relative agrees with the partner algebra up to a global
/// sign: with the sign convention above it is the negation, so
/// dual_matches_negated is the expected-true flag and dual_matches_exactly
/// records the on-the-nose comparison.
struct RelativeZeroReport {
    bool module_valid = false;        // descendent passes the Jacobi identity
    bool action_valid = false;        // theta is a representation of it
    bool t_homomorphism = false;      // t[u,v]_t = [tu,tv] on basis pairs
    bool r_skew = false;
    bool cybe_zero = false;
    bool dual_matches_exactly = false;
    bool dual_matches_negated = false;
};

RelativeZeroReport relative_zero_report(const RelativeRB0& x);

/// Compatibility of a pair (sigma on g, tau on V) with the structure:
/// action_compatible is tau rho(sigma y) = rho(y) tau for all y, and
/// operator_residual is sigma t tau - t + sigma t - t tau.
struct RelReflection0Report {
    bool sigma_automorphism = false;
    bool tau_invertible = false;
    bool action_compatible = false;
    Matrix operator_residual;
    bool operator_equation = false;

    bool is_reflection() const {
        return sigma_automorphism && tau_invertible && action_compatible && operator_equation;
    }
};

RelReflection0Report rel_reflection0_report(const RelativeRB0& x, const Matrix& sigma,
                                            const Matrix& tau);

/// sigma (+) (-tau^T) acting on the ambient algebra g x| V*.
Matrix lift0(const RelativeRB0& x, const Matrix& sigma, const Matrix& tau);

/// Im(tau + 1) (+) h-perp inside the partner algebra V_t x| g*, where h is
/// the fixed set of sigma, together with its closure check.  The pair must
/// pass rel_reflection0_report (std::invalid_argument otherwise).
struct RelLifted0Report {
    Subspace subspace;
    bool closed = false;
};

RelLifted0Report rel_lifted0_report(const RelativeRB0& x, const Matrix& sigma,
                                    const Matrix& tau);

/// A linear map t: k -> g between Lie algebras, with g acting on k by
/// derivations, subject (when valid) to
/// [tu, tv] = t(rho(tu)v - rho(tv)u + lambda [u,v]_k) with lambda != 0.
struct RelativeRBW {
    LieAlgebra algebra;   // g
    LieAlgebra module;    // k
    Representation rho;   // action of g on k by derivations
    Matrix t;             // k -> g
    GaussRat lambda;      // nonzero

    RelativeRBW(LieAlgebra algebra_, LieAlgebra module_, Representation rho_, Matrix t_,
                GaussRat lambda_);

    size_t module_dim() const { return module.dim(); }

    /// Representation + derivation residuals of rho plus the defining
    /// identity on every basis pair of k.
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }
};

/// The joined algebra g x| k (module bracket included).  Basis order: g, k.
LieAlgebra joined_algebra(const RelativeRBW& x);

/// The operator x + u -> -lambda x + tu on the joined algebra, packaged with
/// its weight: a Rota-Baxter structure whenever x is valid.
RotaBaxter joined_operator(const RelativeRBW& x);

/// The quadratic structure on (g x| k) x| (g x| k)* induced by the joined
/// operator.  Basis order: g, k, g*, k*.
QuadraticRB joined_quadratic(const RelativeRBW& x);

/// The induced tensor on the doubled ambient algebra.
Tensor2 r_joined(const RelativeRBW& x);

/// Checks that the induced tensor pairs covectors x+u+xi+alpha, y+v+eta+beta
/// as (1/lambda)(<tu,eta> - <tv,xi> + lambda<xi,y> + lambda<beta,u>), and
/// that the dual brackets follow the three displayed families
///   [x+u, y+v]     = (1/lambda)(-lambda[x,y] + [x,tv] + [tu,y]
///                     + rho(tu)v - rho(tv)u + lambda[u,v]_k)
///   [x+u, xi+alpha] = (1/lambda)(ad*_{tu}xi
///                     + rho*_{-lambda x+tu}alpha - ad*_u t*xi - rho*_x t*xi)
///   [xi+alpha, eta+beta] = 0
/// on every basis pair.
/// families_match uses the corrected mixed family whose g*-component carries
/// the extra term -(1/lambda)<xi, t(rho(.)u)> forced by the coadjoint
/// computation (the same term theta* carries at weight zero);
/// displayed_families_match records the comparison without that term.
struct WeightDualReport {
    bool joined_valid = false;      // the joined operator passes validate
    bool pairing_matches = false;
    bool families_match = false;
    bool displayed_families_match = false;
};

WeightDualReport weight_dual_report(const RelativeRBW& x);

/// The bracket (1/lambda)(theta*(u)eta - theta*(v)xi + rho(tu)v - rho(tv)u
/// + lambda[u,v]_k) on g* (+) k, where theta(u) = [tu, .] + t(rho(.)u) is the
/// weight-zero action map.  Basis order: g*, k.
LieAlgebra quotient_algebra(const RelativeRBW& x);

/// The sub-bialgebra facts: g (+) k* is a subalgebra of the doubled ambient
/// algebra matching g x| k* exactly; its annihilator inside the dual algebra
/// is an ideal; the quotient by that ideal equals quotient_algebra; and the
/// quotient table satisfies the Jacobi identity.
/// quotient_matches compares against quotient_algebra, whose g*-component
/// carries the corrected term (theta in place of the bare coadjoint);
/// displayed_quotient_matches compares against the bare-coadjoint table.
struct SubBialgebraReport {
    bool subalgebra = false;
    bool subalgebra_matches = false;
    bool annihilator_ideal = false;
    bool quotient_matches = false;
    bool displayed_quotient_matches = false;
    bool quotient_lie = false;
};

SubBialgebraReport sub_bialgebra_report(const RelativeRBW& x);

/// Compatibility of involutive automorphisms (sigma on g, tau on k):
/// action_compatible is tau rho(y) = rho(sigma y) tau for all y, and
/// operator_residual is sigma t tau - t + sigma t - t tau.
struct RelReflectionWReport {
    bool sigma_automorphism = false;
    bool tau_automorphism = false;
    bool sigma_involutive = false;
    bool tau_involutive = false;
    bool action_compatible = false;
    Matrix operator_residual;
    bool operator_equation = false;

    bool is_reflection() const {
        return sigma_automorphism && tau_automorphism && sigma_involutive && tau_involutive &&
               action_compatible && operator_equation;
    }
};

RelReflectionWReport rel_reflection_report(const RelativeRBW& x, const Matrix& sigma,
                                           const Matrix& tau);

/// (sigma (+) tau) (+) (-sigma^T (+) -tau^T) on the doubled ambient algebra.
Matrix liftw(const RelativeRBW& x, const Matrix& sigma, const Matrix& tau);

/// A bilinear product on a plain vector space whose associator is symmetric
/// in its first two arguments.  mult[i][j][k] is the e_k coefficient of
/// e_i > e_j.
struct PreLie {
    size_t n;
    Tensor3 mult;

    PreLie(size_t n_, Tensor3 mult_);

    Vec prod(const Vec& x, const Vec& y) const;
    Vec prod_basis(size_t i, size_t j) const;

    /// Left-symmetry residuals of the associator on all basis triples.
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }
};

/// x > y - y > x.
LieAlgebra subadjacent(const PreLie& p);

/// Left multiplication as an action of the subadjacent algebra.
Representation left_action(const PreLie& p);

/// The identity map as a relative operator from (the underlying space of) p
/// into its subadjacent algebra.
RelativeRB0 as_relative(const PreLie& p);

/// A Lie bracket and a product interacting by
///   x > [y,z] = [x>y, z] + [y, x>z]
///   ([x,y] + x>y - y>x) > z = x>(y>z) - y>(x>z).
struct PostLie {
    LieAlgebra lie;
    Tensor3 mult;

    PostLie(LieAlgebra lie_, Tensor3 mult_);

    Vec prod(const Vec& x, const Vec& y) const;
    Vec prod_basis(size_t i, size_t j) const;

    /// Residuals of both axioms on all basis triples.
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }
};

/// [x,y] + x > y - y > x.
LieAlgebra subadjacent(const PostLie& p);

/// Left multiplication as an action of the subadjacent algebra on the
/// original bracket (derivation-valued when the axioms hold).
Representation left_action(const PostLie& p);

/// The identity map as a weight-1 relative operator from the original
/// bracket into the subadjacent algebra.
RelativeRBW as_relative(const PostLie& p);

/// Reads a product with vanishing bracket back as a plain product
/// (std::invalid_argument when the bracket is nonzero).
PreLie as_prelie(const PostLie& p);

/// Embeds a plain product as a product over the zero bracket.
PostLie with_zero_bracket(const PreLie& p);

}  // namespace rblie
