#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rblie/matrix.hpp"
#include "rblie/subspace.hpp"
#include "rblie/tensor.hpp"

namespace rblie {

/// Finite-dimensional Lie algebra given by structure constants:
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(size_t n, std::vector<std::string> names = {});

    size_t dim() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(size_t i) const { return names_[i]; }

    /// Sets [e_i, e_j] = out (i != j) and [e_j, e_i] = -out.
    void set_bracket(size_t i, size_t j, const Vec& out);

    const Tensor3& c() const { return c_; }
    GaussRat c_at(size_t i, size_t j, size_t k) const { return c_.at(i, j, k); }

    /// Sparse row of structure constants: [e_i, e_j] as (k, coeff) pairs.
    const std::vector<std::pair<size_t, GaussRat>>& row(size_t i, size_t j) const;

    Vec bracket(const Vec& x, const Vec& y) const;
    Vec bracket_basis(size_t i, size_t j) const;

    /// Matrix of ad_x: (ad_x)[k][j] = sum_i x_i c[i][j][k], so ad(x) * y = [x, y].
    Matrix ad(const Vec& x) const;
    /// Matrix of the coadjoint action ad*_x = -(ad_x)^T on coordinate covectors.
    Matrix coad(const Vec& x) const;

    /// Lists every violated antisymmetry/Jacobi instance; empty means valid.
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }
    bool is_abelian() const { return c_.is_zero(); }

private:
    size_t n_ = 0;
    Tensor3 c_;
    std::vector<std::string> names_;
    mutable bool rows_fresh_ = false;
    mutable std::vector<std::vector<std::pair<size_t, GaussRat>>> rows_;
};

LieAlgebra abelian_algebra(size_t n);

/// Representation rho of a Lie algebra on a module, mats[i] = rho(e_i).
struct Representation {
    LieAlgebra algebra;
    size_t space_dim = 0;
    std::vector<Matrix> mats;

    Representation() = default;
    Representation(LieAlgebra g, size_t m, std::vector<Matrix> ms);

    Matrix act(const Vec& x) const;
    const Matrix& act_basis(size_t i) const { return mats[i]; }

    /// Homomorphism violations rho([e_i,e_j]) != [rho(e_i), rho(e_j)].
    std::vector<std::string> validate() const;
    /// Violations of rho(e_i)[u,v]_k = [rho(e_i)u, v]_k + [u, rho(e_i)v]_k.
    std::vector<std::string> derivation_violations(const LieAlgebra& k) const;
};

Representation adjoint_rep(const LieAlgebra& g);
Representation coadjoint_rep(const LieAlgebra& g);
/// The dual of rho: x acts on the dual module by -(rho(x))^T.
Representation dual_rep(const Representation& rho);
Representation zero_rep(const LieAlgebra& g, size_t space_dim);

/// Symmetric bilinear form S with Gram matrix gram[i][j] = S(e_i, e_j).
struct BilinearForm {
    LieAlgebra algebra;
    Matrix gram;

    BilinearForm() = default;
    BilinearForm(LieAlgebra g, Matrix m);

    GaussRat eval(const Vec& x, const Vec& y) const;
    bool is_symmetric() const;
    bool is_nondegenerate() const;
    /// Violations of S([x,y],z) + S(y,[x,z]) = 0 over basis triples.
    std::vector<std::string> invariance_violations() const;
};

/// Matrix of I_S: g* -> g defined by <I_S^{-1} x, y> = S(x, y); equals gram^{-1}.
Matrix i_s(const BilinearForm& s);
Matrix i_s_inv(const BilinearForm& s);

/// (A tensor B) applied to t: out[a][b] = sum A[a][i] B[b][j] t[i][j].
Tensor2 apply_pair(const Matrix& a, const Matrix& b, const Tensor2& t);

/// Leibniz action of x on tensors: (ad_x tensor 1 + 1 tensor ad_x) t, etc.
Tensor2 adjoint_act(const LieAlgebra& g, const Vec& x, const Tensor2& t);
Tensor3 adjoint_act(const LieAlgebra& g, const Vec& x, const Tensor3& t);

/// [r,r] = [r12,r13] + [r13,r23] + [r12,r23] in g tensor g tensor g.
Tensor3 cybe_bracket(const LieAlgebra& g, const Tensor2& r);

/// Operator view of the symmetric part: operator_of(r + r^21) = r_+ - r_-.
Matrix symmetric_part_operator(const Tensor2& r);

struct InvarianceReport {
    bool ad_invariant = false;
    /// "triangular" (I = 0), "factorizable" (I invertible), or "neither".
    std::string classification;
    std::vector<std::string> violations;
};

/// Checks I ad*_x = ad_x I for all basis x and classifies the symmetric part.
InvarianceReport symmetric_invariance(const LieAlgebra& g, const Tensor2& r);

/// delta(x) = [x, r], the coboundary cobracket.
Tensor2 cobracket(const LieAlgebra& g, const Tensor2& r, const Vec& x);

/// Dual bracket via the cobracket: <[xi,eta], e_k> = (xi tensor eta)(delta(e_k)).
Vec dual_bracket_delta(const LieAlgebra& g, const Tensor2& r, const Vec& xi, const Vec& eta);
/// Dual bracket via ad*: [xi,eta] = ad*_{r_+ xi} eta - ad*_{r_- eta} xi.
Vec dual_bracket_ad(const LieAlgebra& g, const Tensor2& r, const Vec& xi, const Vec& eta);

/// Lie algebra on g* induced by r; both dual-bracket routes are computed and
/// must agree (std::logic_error otherwise).
LieAlgebra dual_algebra(const LieAlgebra& g, const Tensor2& r);

bool is_automorphism(const LieAlgebra& g, const Matrix& tau);

/// exp(ad_x) as an exact matrix; requires ad_x nilpotent (std::invalid_argument
/// otherwise).
Matrix automorphism_from_nilpotent(const LieAlgebra& g, const Vec& x);

/// C_tau(r) = (tau tensor tau)r + r - (tau tensor 1 + 1 tensor tau)r together
/// with the operator (tau - 1) r_+ (tau^T - 1); the two correspond under
/// tensor_of (std::logic_error otherwise).
std::pair<Tensor2, Matrix> cre_residual(const LieAlgebra& g, const Tensor2& r, const Matrix& tau);

struct FixedSetInvarianceReport {
    bool invariant = false;
    std::vector<std::string> violations;  // per fixed-set basis vector
};

/// For h = ker(tau - 1) (checked; std::invalid_argument otherwise): whether
/// ad_x K = K ad*_x for all x in h, K = (tau-1) r_+ (tau^T-1).  Cross-checked
/// against coideal closure of h-perp (std::logic_error on disagreement).
FixedSetInvarianceReport fixed_set_invariance(const LieAlgebra& g, const Tensor2& r,
                                              const Matrix& tau, const Subspace& h);

/// Coideal test: h-perp closed under the dual bracket; the containment form
/// delta(h) in g tensor h + h tensor g is computed too and must agree
/// (std::logic_error otherwise).
bool is_coideal(const LieAlgebra& g, const Tensor2& r, const Subspace& h);
bool is_subalgebra(const LieAlgebra& g, const Subspace& h);
bool is_ideal(const LieAlgebra& g, const Subspace& h);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Semidirect product on (g basis, module basis); if module is non-null it
/// carries its own bracket and rho must act by derivations.
LieAlgebra semidirect(const LieAlgebra& g, const Representation& rho,
                      const LieAlgebra* module = nullptr);

/// Embeds x in the first summand / v in the second summand of a product basis.
Vec embed_first(const Vec& x, size_t total);
Vec embed_second(const Vec& v, size_t total);

}  // namespace rblie
