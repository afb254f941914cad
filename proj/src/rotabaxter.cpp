#include "rblie/rotabaxter.hpp"

#include <stdexcept>

namespace rblie {

namespace {

Vec basis_vec(size_t n, size_t i) {
    Vec v(n, GaussRat());
    v[i] = GaussRat(1);
    return v;
}

Matrix scaled_identity(const GaussRat& c, size_t n) {
    return c * Matrix::identity(n);
}

/// Columns of `first` followed by columns of `second`, as one square matrix.
Matrix columns_from(const Subspace& first, const Subspace& second) {
    size_t n = first.ambient();
    Matrix p = Matrix::zero(n, first.dim() + second.dim());
    for (size_t c = 0; c < first.dim(); ++c) {
        Vec v = first.basis_vector(c);
        for (size_t r = 0; r < n; ++r) p.at(r, c) = v[r];
    }
    for (size_t c = 0; c < second.dim(); ++c) {
        Vec v = second.basis_vector(c);
        for (size_t r = 0; r < n; ++r) p.at(r, first.dim() + c) = v[r];
    }
    return p;
}

Matrix submatrix(const Matrix& m, size_t r0, size_t r1, size_t c0, size_t c1) {
    Matrix out = Matrix::zero(r1 - r0, c1 - c0);
    for (size_t r = r0; r < r1; ++r)
        for (size_t c = c0; c < c1; ++c) out.at(r - r0, c - c0) = m.at(r, c);
    return out;
}

bool commutes_with_all_fixed(const LieAlgebra& g, const Matrix& residual, const Matrix& tau) {
    Subspace h = fixed_space(tau);
    for (size_t a = 0; a < h.dim(); ++a) {
        Matrix adx = g.ad(h.basis_vector(a));
        if (!(adx * residual - residual * adx).is_zero()) return false;
    }
    return true;
}

Subspace embedded_sum(const Subspace& first, const Subspace& second) {
    size_t total = first.ambient() + second.ambient();
    std::vector<Vec> vectors;
    for (size_t a = 0; a < first.dim(); ++a)
        vectors.push_back(embed_first(first.basis_vector(a), total));
    for (size_t a = 0; a < second.dim(); ++a)
        vectors.push_back(embed_second(second.basis_vector(a), total));
    return Subspace::span(total, vectors);
}

void require_nonzero_weight(const GaussRat& lambda, const char* what) {
    if (lambda.is_zero())
        throw std::invalid_argument(std::string(what) + " requires nonzero weight");
}

}  // namespace

RotaBaxter::RotaBaxter(LieAlgebra g, Matrix op, GaussRat weight)
    : algebra(std::move(g)), b(std::move(op)), lambda(std::move(weight)) {
    if (!b.is_square() || b.rows() != algebra.dim())
        throw std::invalid_argument("operator shape does not match the algebra");
}

Vec RotaBaxter::descendent_bracket(const Vec& x, const Vec& y) const {
    Vec bx = b.apply(x);
    Vec by = b.apply(y);
    Vec out = algebra.bracket(bx, y);
    out = vec_add(out, algebra.bracket(x, by));
    out = vec_add(out, vec_scale(lambda, algebra.bracket(x, y)));
    return out;
}

std::vector<std::string> RotaBaxter::validate() const {
    std::vector<std::string> violations;
    size_t n = algebra.dim();
    for (size_t i = 0; i < n; ++i) {
        Vec bi = b.col(i);
        for (size_t j = i + 1; j < n; ++j) {
            Vec bj = b.col(j);
            Vec lhs = algebra.bracket(bi, bj);
            Vec rhs = b.apply(descendent_bracket(basis_vec(n, i), basis_vec(n, j)));
            if (!vec_is_zero(vec_sub(lhs, rhs)))
                violations.push_back("operator identity fails on (" + algebra.name(i) + ", " +
                                     algebra.name(j) + ")");
        }
    }
    return violations;
}

bool RotaBaxter::is_valid() const { return validate().empty(); }

LieAlgebra descendent(const RotaBaxter& rb) {
    size_t n = rb.algebra.dim();
    LieAlgebra d(n, rb.algebra.names());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            d.set_bracket(i, j, rb.descendent_bracket(basis_vec(n, i), basis_vec(n, j)));
    return d;
}

RotaBaxter weight_negation(const RotaBaxter& rb) {
    size_t n = rb.algebra.dim();
    Matrix c = scaled_identity(-rb.lambda, n);
    c -= rb.b;
    return RotaBaxter(rb.algebra, c, rb.lambda);
}

QuadraticRB::QuadraticRB(RotaBaxter op, BilinearForm form)
    : rb(std::move(op)), s(std::move(form)) {
    if (s.algebra.dim() != rb.algebra.dim() || s.algebra.c() != rb.algebra.c())
        throw std::invalid_argument("pairing and operator live on different algebras");
}

std::vector<std::string> QuadraticRB::validate() const {
    std::vector<std::string> violations = rb.validate();
    if (!s.is_symmetric()) violations.push_back("pairing is not symmetric");
    if (!s.is_nondegenerate()) violations.push_back("pairing is degenerate");
    for (const std::string& v : s.invariance_violations()) violations.push_back(v);
    Matrix compat = rb.b.transpose() * s.gram;
    compat += s.gram * rb.b;
    compat += rb.lambda * s.gram;
    if (!compat.is_zero())
        violations.push_back("pairing is not compatible with the operator");
    return violations;
}

bool QuadraticRB::is_valid() const { return validate().empty(); }

Matrix r_plus_from_quadratic(const QuadraticRB& q) {
    Matrix is = i_s(q.s);
    size_t n = q.rb.algebra.dim();
    if (q.rb.lambda.is_zero()) return q.rb.b * is;
    Matrix shifted = q.rb.b + scaled_identity(q.rb.lambda, n);
    return q.rb.lambda.inv() * (shifted * is);
}

Tensor2 r_from_quadratic(const QuadraticRB& q) { return tensor_of(r_plus_from_quadratic(q)); }

bool ReflectionReport::passes(const std::string& variant) const {
    if (variant == "skew") return automorphism && skew_equation && skew_pairing;
    if (variant == "symmetric") return automorphism && symmetric_equation && symmetric_pairing;
    if (variant == "relaxed-ad")
        return automorphism &&
               ((skew_pairing && relaxed_skew) || (symmetric_pairing && relaxed_symmetric));
    throw std::invalid_argument("unknown reflection variant: " + variant);
}

ReflectionReport reflection_report(const QuadraticRB& q, const Matrix& tau) {
    const LieAlgebra& g = q.rb.algebra;
    size_t n = g.dim();
    if (!tau.is_square() || tau.rows() != n)
        throw std::invalid_argument("map shape does not match the algebra");
    Matrix one = Matrix::identity(n);
    Matrix shifted = q.rb.b + scaled_identity(q.rb.lambda, n);

    ReflectionReport report;
    report.automorphism = is_automorphism(g, tau);
    report.skew_residual = (tau - one) * shifted * (tau + one);
    report.symmetric_residual = (tau - one) * shifted * (tau - one);
    report.skew_equation = report.skew_residual.is_zero();
    report.symmetric_equation = report.symmetric_residual.is_zero();
    report.skew_pairing = (tau.transpose() * q.s.gram + q.s.gram * tau).is_zero();
    report.symmetric_pairing = (tau.transpose() * q.s.gram - q.s.gram * tau).is_zero();
    report.relaxed_skew = commutes_with_all_fixed(g, report.skew_residual, tau);
    report.relaxed_symmetric = commutes_with_all_fixed(g, report.symmetric_residual, tau);
    return report;
}

InvolutionBlocks involution_blocks(const QuadraticRB& q, const Matrix& tau) {
    size_t n = q.rb.algebra.dim();
    if (!tau.is_square() || tau.rows() != n)
        throw std::invalid_argument("map shape does not match the algebra");
    if (tau * tau != Matrix::identity(n))
        throw std::invalid_argument("map is not an involution");

    InvolutionBlocks blocks{.h = fixed_space(tau), .p = eigenspace(tau, GaussRat(-1))};
    size_t dh = blocks.h.dim();
    size_t dp = blocks.p.dim();
    if (dh + dp != n) throw std::logic_error("eigenspaces of an involution must fill the space");

    blocks.basis_change = columns_from(blocks.h, blocks.p);
    auto inverse_p = inverse(blocks.basis_change);
    if (!inverse_p) throw std::logic_error("eigenbasis of an involution must be invertible");
    blocks.conjugated = *inverse_p * q.rb.b * blocks.basis_change;

    blocks.b_h_to_h = submatrix(blocks.conjugated, 0, dh, 0, dh);
    blocks.b_h_to_p = submatrix(blocks.conjugated, dh, n, 0, dh);
    blocks.b_p_to_h = submatrix(blocks.conjugated, 0, dh, dh, n);
    blocks.b_p_to_p = submatrix(blocks.conjugated, dh, n, dh, n);
    blocks.equation_criterion = blocks.b_h_to_p.is_zero();

    auto isotropic = [&](const Subspace& w) {
        for (size_t a = 0; a < w.dim(); ++a)
            for (size_t c = a; c < w.dim(); ++c)
                if (!q.s.eval(w.basis_vector(a), w.basis_vector(c)).is_zero()) return false;
        return true;
    };
    blocks.h_isotropic = isotropic(blocks.h);
    blocks.p_isotropic = isotropic(blocks.p);
    blocks.commutes_with_b = (tau * q.rb.b * tau == q.rb.b);
    return blocks;
}

FixedOrthogonal fixed_and_orthogonal(const QuadraticRB& q, const Matrix& tau) {
    size_t n = q.rb.algebra.dim();
    if (!tau.is_square() || tau.rows() != n)
        throw std::invalid_argument("map shape does not match the algebra");

    Subspace h = fixed_space(tau);
    Subspace h_perp = h.annihilator();
    Subspace direct = h.s_orthogonal(q.s.gram);
    Subspace via_is = h_perp.map_by(i_s(q.s));
    if (direct != via_is) throw std::logic_error("orthogonal-complement routes disagree");
    FixedOrthogonal out{.h = h, .h_perp = h_perp, .h0 = direct};

    Matrix one = Matrix::identity(n);
    Subspace im_plus = image_space(tau + one);
    Subspace im_minus = image_space(tau - one);
    out.h0_equals_h = (out.h0 == out.h);
    out.h0_equals_im_tau_plus = (out.h0 == im_plus);
    out.h0_equals_im_tau_minus = (out.h0 == im_minus);
    out.h_equals_im_tau_plus = (out.h == im_plus);
    return out;
}

OrthogonalFixedReport orthogonal_fixed_report(const QuadraticRB& q, const Matrix& tau) {
    FixedOrthogonal fo = fixed_and_orthogonal(q, tau);
    const LieAlgebra& g = q.rb.algebra;
    size_t n = g.dim();
    Matrix shifted = q.rb.b + scaled_identity(q.rb.lambda, n);

    OrthogonalFixedReport report{.h = fo.h, .h0 = fo.h0};

    auto maps_into = [](const Matrix& m, const Subspace& from, const Subspace& to) {
        for (size_t a = 0; a < from.dim(); ++a)
            if (!to.contains(m.apply(from.basis_vector(a)))) return false;
        return true;
    };
    report.b_plus_lambda_h_in_h = maps_into(shifted, fo.h, fo.h);
    report.b_h0_in_h0 = maps_into(q.rb.b, fo.h0, fo.h0);
    report.b_plus_lambda_h0_in_h = maps_into(shifted, fo.h0, fo.h);

    report.h0_descendent_closed = true;
    for (size_t a = 0; a < fo.h0.dim() && report.h0_descendent_closed; ++a)
        for (size_t c = a + 1; c < fo.h0.dim(); ++c)
            if (!fo.h0.contains(
                    q.rb.descendent_bracket(fo.h0.basis_vector(a), fo.h0.basis_vector(c)))) {
                report.h0_descendent_closed = false;
                break;
            }

    report.h0_descendent_ideal = true;
    for (size_t i = 0; i < n && report.h0_descendent_ideal; ++i)
        for (size_t a = 0; a < fo.h0.dim(); ++a)
            if (!fo.h0.contains(q.rb.descendent_bracket(basis_vec(n, i), fo.h0.basis_vector(a)))) {
                report.h0_descendent_ideal = false;
                break;
            }

    LieAlgebra paired = paired_sum(q.rb);
    report.paired_sum_closed = is_subalgebra(paired, embedded_sum(fo.h0, fo.h));
    return report;
}

LieAlgebra paired_sum(const RotaBaxter& rb) {
    const LieAlgebra& g = rb.algebra;
    size_t n = g.dim();
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) names.push_back(g.name(i) + "'");
    for (size_t i = 0; i < n; ++i) names.push_back(g.name(i));

    LieAlgebra out(2 * n, names);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            out.set_bracket(i, j,
                            embed_first(rb.descendent_bracket(basis_vec(n, i), basis_vec(n, j)),
                                        2 * n));
            out.set_bracket(n + i, n + j, embed_second(g.bracket_basis(i, j), 2 * n));
        }
        for (size_t j = 0; j < n; ++j) {
            // [(xi,0),(0,a)] = ([xi,a], [b xi, a] - b[xi,a]).
            Vec xi = basis_vec(n, i);
            Vec a = basis_vec(n, j);
            Vec mixed_first = g.bracket(xi, a);
            Vec mixed_second = vec_sub(g.bracket(rb.b.apply(xi), a), rb.b.apply(g.bracket(xi, a)));
            Vec value = vec_add(embed_first(mixed_first, 2 * n), embed_second(mixed_second, 2 * n));
            out.set_bracket(i, n + j, value);
        }
    }
    return out;
}

QuadraticRB doubled_qrb(const QuadraticRB& q) {
    require_nonzero_weight(q.rb.lambda, "the doubled quadratic structure");
    const LieAlgebra& g = q.rb.algebra;
    size_t n = g.dim();
    LieAlgebra plain = direct_sum(g, g);

    Matrix shifted = q.rb.b + scaled_identity(q.rb.lambda, n);
    Matrix minus_shifted = GaussRat(-1) * shifted;
    Matrix bhat = vcat(hcat(q.rb.b, minus_shifted), hcat(q.rb.b, minus_shifted));
    Matrix gram = block_diag(q.s.gram, GaussRat(-1) * q.s.gram);
    return QuadraticRB(RotaBaxter(plain, bhat, q.rb.lambda), BilinearForm(plain, gram));
}

Matrix doubled_reflection(const QuadraticRB& q) {
    size_t n = q.rb.algebra.dim();
    Matrix swap = Matrix::zero(2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        swap.at(i, n + i) = GaussRat(1);
        swap.at(n + i, i) = GaussRat(1);
    }
    return swap;
}

QuadraticRB paired_sum_qrb(const QuadraticRB& q) {
    require_nonzero_weight(q.rb.lambda, "the paired-sum quadratic structure");
    const LieAlgebra& g = q.rb.algebra;
    size_t n = g.dim();
    LieAlgebra paired = paired_sum(q.rb);

    Matrix op = block_diag(Matrix::zero(n, n), scaled_identity(-q.rb.lambda, n));
    Matrix lg = q.rb.lambda * q.s.gram;
    Matrix gram = vcat(hcat(Matrix::zero(n, n), lg), hcat(lg, Matrix::zero(n, n)));
    return QuadraticRB(RotaBaxter(paired, op, q.rb.lambda), BilinearForm(paired, gram));
}

Matrix paired_sum_reflection(const QuadraticRB& q) {
    size_t n = q.rb.algebra.dim();
    Matrix one = Matrix::identity(n);
    Matrix lower = GaussRat(2) * q.rb.b + scaled_identity(q.rb.lambda, n);
    return vcat(hcat(GaussRat(-1) * one, Matrix::zero(n, n)), hcat(lower, one));
}

Matrix factorization_psi(const QuadraticRB& q) {
    require_nonzero_weight(q.rb.lambda, "the factorization");
    size_t n = q.rb.algebra.dim();
    Matrix one = Matrix::identity(n);
    Matrix r_plus = r_plus_from_quadratic(q);
    Matrix r_minus = r_plus - i_s(q.s);
    return vcat(hcat(r_plus, one), hcat(r_minus, one));
}

Matrix factorization_phi(const QuadraticRB& q) {
    require_nonzero_weight(q.rb.lambda, "the factorization");
    size_t n = q.rb.algebra.dim();
    Matrix one = Matrix::identity(n);
    Matrix shifted = q.rb.b + scaled_identity(q.rb.lambda, n);
    return vcat(hcat(shifted, one), hcat(q.rb.b, one));
}

LieAlgebra dual_pair_algebra(const QuadraticRB& q) {
    require_nonzero_weight(q.rb.lambda, "the dual pair");
    const LieAlgebra& g = q.rb.algebra;
    size_t n = g.dim();

    LieAlgebra dual = dual_algebra(g, r_from_quadratic(q));
    LieAlgebra plain = direct_sum(g, g);
    Matrix psi = factorization_psi(q);
    auto psi_inverse = inverse(psi);
    if (!psi_inverse) throw std::logic_error("factorization map must be invertible");

    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) names.push_back(dual.name(i));
    for (size_t i = 0; i < n; ++i) names.push_back(g.name(i));

    LieAlgebra out(2 * n, names);
    for (size_t i = 0; i < 2 * n; ++i) {
        for (size_t j = i + 1; j < 2 * n; ++j) {
            Vec transported =
                psi_inverse->apply(plain.bracket(psi.col(i), psi.col(j)));
            if (j < n) {
                Vec expected = embed_first(dual.bracket_basis(i, j), 2 * n);
                if (!vec_is_zero(vec_sub(transported, expected)))
                    throw std::logic_error(
                        "transported bracket disagrees with the dual-slot bracket");
            } else if (i >= n) {
                Vec expected = embed_second(g.bracket_basis(i - n, j - n), 2 * n);
                if (!vec_is_zero(vec_sub(transported, expected)))
                    throw std::logic_error(
                        "transported bracket disagrees with the plain-slot bracket");
            }
            out.set_bracket(i, j, transported);
        }
    }
    return out;
}

QuadraticRB dual_pair_qrb(const QuadraticRB& q) {
    LieAlgebra algebra = dual_pair_algebra(q);
    size_t n = q.rb.algebra.dim();
    Matrix op = block_diag(Matrix::zero(n, n), scaled_identity(-q.rb.lambda, n));
    Matrix one = Matrix::identity(n);
    Matrix gram = vcat(hcat(Matrix::zero(n, n), one), hcat(one, Matrix::zero(n, n)));
    return QuadraticRB(RotaBaxter(algebra, op, q.rb.lambda), BilinearForm(algebra, gram));
}

Matrix dual_pair_reflection(const QuadraticRB& q) {
    require_nonzero_weight(q.rb.lambda, "the dual pair");
    size_t n = q.rb.algebra.dim();
    Matrix one = Matrix::identity(n);
    Matrix lower =
        q.rb.lambda.inv() *
        ((GaussRat(2) * q.rb.b + scaled_identity(q.rb.lambda, n)) * i_s(q.s));
    return vcat(hcat(GaussRat(-1) * one, Matrix::zero(n, n)), hcat(lower, one));
}

QuadraticRB semidirect_quadratic(const RotaBaxter& rb) {
    const LieAlgebra& g = rb.algebra;
    size_t n = g.dim();
    std::vector<std::string> dual_names;
    for (size_t i = 0; i < n; ++i) dual_names.push_back(g.name(i) + "*");
    LieAlgebra dual_space(n, dual_names);
    LieAlgebra big = semidirect(g, coadjoint_rep(g), &dual_space);

    Matrix lower = scaled_identity(-rb.lambda, n);
    lower -= rb.b.transpose();
    Matrix op = block_diag(rb.b, lower);
    Matrix one = Matrix::identity(n);
    Matrix gram = vcat(hcat(Matrix::zero(n, n), one), hcat(one, Matrix::zero(n, n)));
    return QuadraticRB(RotaBaxter(big, op, rb.lambda), BilinearForm(big, gram));
}

Tensor2 r_semidirect(const RotaBaxter& rb) {
    size_t n = rb.algebra.dim();
    Tensor2 t(2 * n);
    if (rb.lambda.is_zero()) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                t.at(i, n + j) = -rb.b.at(i, j);
                t.at(n + i, j) = rb.b.at(j, i);
            }
        return t;
    }
    GaussRat inv_lambda = rb.lambda.inv();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            t.at(i, n + j) = -(inv_lambda * rb.b.at(i, j));
            GaussRat shifted = rb.b.at(j, i);
            if (i == j) shifted += rb.lambda;
            t.at(n + i, j) = inv_lambda * shifted;
        }
    return t;
}

Representation descendent_coadjoint_rep(const RotaBaxter& rb) {
    const LieAlgebra& g = rb.algebra;
    size_t n = g.dim();
    Matrix bt = rb.b.transpose();
    std::vector<Matrix> mats;
    mats.reserve(n);
    for (size_t i = 0; i < n; ++i)
        mats.push_back(g.coad(rb.b.col(i)) - g.coad(basis_vec(n, i)) * bt);
    return Representation(descendent(rb), n, mats);
}

RBReflectionReport rb_reflection_report(const RotaBaxter& rb, const Matrix& tau) {
    const LieAlgebra& g = rb.algebra;
    size_t n = g.dim();
    if (!tau.is_square() || tau.rows() != n)
        throw std::invalid_argument("map shape does not match the algebra");

    RBReflectionReport report;
    report.automorphism = is_automorphism(g, tau);

    report.homogeneity = true;
    for (size_t i = 0; i < n && report.homogeneity; ++i)
        if (tau * g.ad(tau.col(i)) != g.ad(basis_vec(n, i)) * tau) report.homogeneity = false;

    report.involution_scaled = (rb.lambda * (tau * tau - Matrix::identity(n))).is_zero();
    report.operator_residual = tau * rb.b * tau - rb.b + tau * rb.b - rb.b * tau;
    report.operator_equation = report.operator_residual.is_zero();
    return report;
}

Matrix lifted_reflection(const RotaBaxter& rb, const Matrix& tau) {
    size_t n = rb.algebra.dim();
    if (!tau.is_square() || tau.rows() != n)
        throw std::invalid_argument("map shape does not match the algebra");
    return block_diag(tau, GaussRat(-1) * tau.transpose());
}

Subspace fixed_lift_subspace(const RotaBaxter& rb, const Matrix& tau) {
    size_t n = rb.algebra.dim();
    if (!tau.is_square() || tau.rows() != n)
        throw std::invalid_argument("map shape does not match the algebra");
    Subspace h = fixed_space(tau);
    Subspace l = fixed_space(GaussRat(-1) * tau.transpose());
    return embedded_sum(h, l);
}

LiftedSubalgebraReport lifted_subalgebra_report(const RotaBaxter& rb, const Matrix& tau) {
    size_t n = rb.algebra.dim();
    if (!tau.is_square() || tau.rows() != n)
        throw std::invalid_argument("map shape does not match the algebra");

    Matrix one = Matrix::identity(n);
    Subspace image = image_space(tau + one);
    Subspace perp = fixed_space(tau).annihilator();
    LiftedSubalgebraReport report{.subspace = embedded_sum(image, perp)};

    QuadraticRB big = semidirect_quadratic(rb);
    LieAlgebra big_descendent = descendent(big.rb);
    report.closed_under_descendent = is_subalgebra(big_descendent, report.subspace);

    report.stable_under_operator = true;
    for (size_t a = 0; a < report.subspace.dim(); ++a)
        if (!report.subspace.contains(big.rb.b.apply(report.subspace.basis_vector(a)))) {
            report.stable_under_operator = false;
            break;
        }
    return report;
}

}  // namespace rblie
