#include "rblie/relativerb.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rblie {

namespace {

Vec basis_vec(size_t n, size_t k) {
    Vec v(n);
    v[k] = GaussRat(1);
    return v;
}

std::vector<std::string> numbered_names(size_t count, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(count);
    for (size_t i = 0; i < count; ++i) names.push_back(stem + std::to_string(i + 1));
    return names;
}

std::vector<std::string> star_names(const LieAlgebra& g) {
    std::vector<std::string> names;
    names.reserve(g.dim());
    for (size_t i = 0; i < g.dim(); ++i) names.push_back(g.name(i) + "*");
    return names;
}

/// theta(u_a) as a matrix on g: y -> [t u_a, y] + t(rho(y) u_a).
Matrix theta_matrix(const LieAlgebra& g, const Representation& rho, const Matrix& t, size_t a) {
    Matrix out = g.ad(t.col(a));
    const size_t n = g.dim();
    for (size_t j = 0; j < n; ++j) {
        Vec w = t.apply(rho.act_basis(j).col(a));
        for (size_t i = 0; i < n; ++i) out.at(i, j) += w[i];
    }
    return out;
}

Subspace embedded_sum(const Subspace& first, const Subspace& second) {
    const size_t total = first.ambient() + second.ambient();
    std::vector<Vec> gens;
    for (size_t k = 0; k < first.dim(); ++k) gens.push_back(embed_first(first.basis_vector(k), total));
    for (size_t k = 0; k < second.dim(); ++k) gens.push_back(embed_second(second.basis_vector(k), total));
    return Subspace::span(total, gens);
}

}  // namespace

RelativeRB0::RelativeRB0(LieAlgebra algebra_, Representation rho_, Matrix t_)
    : algebra(std::move(algebra_)), rho(std::move(rho_)), t(std::move(t_)) {
    if (rho.algebra.c() != algebra.c())
        throw std::invalid_argument("action is not over the given algebra");
    if (t.rows() != algebra.dim() || t.cols() != rho.space_dim)
        throw std::invalid_argument("operator shape does not match the action");
}

std::vector<std::string> RelativeRB0::validate() const {
    std::vector<std::string> out = rho.validate();
    const size_t m = module_dim();
    for (size_t a = 0; a < m; ++a) {
        for (size_t b = a + 1; b < m; ++b) {
            Vec desc = vec_sub(rho.act(t.col(a)).col(b), rho.act(t.col(b)).col(a));
            if (t.apply(desc) != algebra.bracket(t.col(a), t.col(b)))
                out.push_back("relative identity fails on (u" + std::to_string(a + 1) + ", u" +
                              std::to_string(b + 1) + ")");
        }
    }
    return out;
}

LieAlgebra descendent_module(const RelativeRB0& x) {
    const size_t m = x.module_dim();
    LieAlgebra v(m, numbered_names(m, "u"));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b)
            v.set_bracket(a, b,
                          vec_sub(x.rho.act(x.t.col(a)).col(b), x.rho.act(x.t.col(b)).col(a)));
    return v;
}

Representation module_action(const RelativeRB0& x) {
    std::vector<Matrix> mats;
    mats.reserve(x.module_dim());
    for (size_t a = 0; a < x.module_dim(); ++a)
        mats.push_back(theta_matrix(x.algebra, x.rho, x.t, a));
    return Representation(descendent_module(x), x.algebra.dim(), std::move(mats));
}

LieAlgebra ambient_algebra(const RelativeRB0& x) {
    std::vector<std::string> names;
    for (size_t a = 0; a < x.module_dim(); ++a) names.push_back("u" + std::to_string(a + 1) + "*");
    LieAlgebra vstar(x.module_dim(), std::move(names));
    return semidirect(x.algebra, dual_rep(x.rho), &vstar);
}

LieAlgebra partner_algebra(const RelativeRB0& x) {
    LieAlgebra gstar(x.algebra.dim(), star_names(x.algebra));
    return semidirect(descendent_module(x), dual_rep(module_action(x)), &gstar);
}

Tensor2 r_relative(const RelativeRB0& x) {
    const size_t n = x.algebra.dim();
    const size_t m = x.module_dim();
    Tensor2 r(n + m);
    for (size_t i = 0; i < n; ++i) {
        for (size_t a = 0; a < m; ++a) {
            r.at(i, n + a) = x.t.at(i, a);
            r.at(n + a, i) = -x.t.at(i, a);
        }
    }
    return r;
}

RelativeZeroReport relative_zero_report(const RelativeRB0& x) {
    RelativeZeroReport rep;
    const size_t n = x.algebra.dim();
    const size_t m = x.module_dim();

    LieAlgebra vt = descendent_module(x);
    rep.module_valid = vt.validate().empty();
    rep.action_valid = module_action(x).validate().empty();

    rep.t_homomorphism = true;
    for (size_t a = 0; a < m && rep.t_homomorphism; ++a)
        for (size_t b = a + 1; b < m; ++b)
            if (x.t.apply(vt.bracket_basis(a, b)) != x.algebra.bracket(x.t.col(a), x.t.col(b))) {
                rep.t_homomorphism = false;
                break;
            }

    Tensor2 r = r_relative(x);
    rep.r_skew = (r + transpose21(r)).is_zero();

    try {
        LieAlgebra ambient = ambient_algebra(x);
        rep.cybe_zero = cybe_bracket(ambient, r).is_zero();

        LieAlgebra dual = dual_algebra(ambient, r);
        LieAlgebra partner = partner_algebra(x);
        // Ambient dual coordinates list g* then V; the partner lists V then
        // g*.  Compare across that permutation.
        auto perm = [&](size_t p) { return p < n ? m + p : p - n; };
        rep.dual_matches_exactly = true;
        rep.dual_matches_negated = true;
        for (size_t p = 0; p < n + m; ++p) {
            for (size_t q = p + 1; q < n + m; ++q) {
                Vec lhs = dual.bracket_basis(p, q);
                Vec moved(n + m);
                for (size_t k = 0; k < n + m; ++k) moved[perm(k)] = lhs[k];
                Vec rhs = partner.bracket_basis(perm(p), perm(q));
                if (moved != rhs) rep.dual_matches_exactly = false;
                if (moved != vec_scale(GaussRat(-1), rhs)) rep.dual_matches_negated = false;
            }
        }
    } catch (const std::exception&) {
        // ambient or dual construction failed; the flags stay false
    }
    return rep;
}

RelReflection0Report rel_reflection0_report(const RelativeRB0& x, const Matrix& sigma,
                                            const Matrix& tau) {
    const size_t n = x.algebra.dim();
    const size_t m = x.module_dim();
    if (sigma.rows() != n || sigma.cols() != n)
        throw std::invalid_argument("map shape does not match the algebra");
    if (tau.rows() != m || tau.cols() != m)
        throw std::invalid_argument("map shape does not match the module");

    RelReflection0Report rep;
    rep.sigma_automorphism = is_automorphism(x.algebra, sigma);
    rep.tau_invertible = inverse(tau).has_value();
    rep.action_compatible = true;
    for (size_t i = 0; i < n; ++i) {
        if (tau * x.rho.act(sigma.col(i)) != x.rho.act_basis(i) * tau) {
            rep.action_compatible = false;
            break;
        }
    }
    rep.operator_residual = sigma * x.t * tau - x.t + sigma * x.t - x.t * tau;
    rep.operator_equation = rep.operator_residual.is_zero();
    return rep;
}

Matrix lift0(const RelativeRB0& x, const Matrix& sigma, const Matrix& tau) {
    if (sigma.rows() != x.algebra.dim() || sigma.cols() != x.algebra.dim())
        throw std::invalid_argument("map shape does not match the algebra");
    if (tau.rows() != x.module_dim() || tau.cols() != x.module_dim())
        throw std::invalid_argument("map shape does not match the module");
    return block_diag(sigma, GaussRat(-1) * tau.transpose());
}

RelLifted0Report rel_lifted0_report(const RelativeRB0& x, const Matrix& sigma,
                                    const Matrix& tau) {
    const size_t m = x.module_dim();
    if (!rel_reflection0_report(x, sigma, tau).is_reflection())
        throw std::invalid_argument("maps do not form a valid reflection pair");

    Subspace image = image_space(tau + Matrix::identity(m));
    Subspace h_perp = fixed_space(sigma).annihilator();
    RelLifted0Report rep{.subspace = embedded_sum(image, h_perp)};
    rep.closed = is_subalgebra(partner_algebra(x), rep.subspace);
    return rep;
}

RelativeRBW::RelativeRBW(LieAlgebra algebra_, LieAlgebra module_, Representation rho_, Matrix t_,
                         GaussRat lambda_)
    : algebra(std::move(algebra_)),
      module(std::move(module_)),
      rho(std::move(rho_)),
      t(std::move(t_)),
      lambda(std::move(lambda_)) {
    if (rho.algebra.c() != algebra.c())
        throw std::invalid_argument("action is not over the given algebra");
    if (rho.space_dim != module.dim())
        throw std::invalid_argument("module algebra dimension mismatch");
    if (t.rows() != algebra.dim() || t.cols() != module.dim())
        throw std::invalid_argument("operator shape does not match the action");
    if (lambda.is_zero()) throw std::invalid_argument("weight must be nonzero");
}

std::vector<std::string> RelativeRBW::validate() const {
    std::vector<std::string> out = rho.validate();
    for (std::string& s : rho.derivation_violations(module)) out.push_back(std::move(s));
    const size_t m = module.dim();
    for (size_t a = 0; a < m; ++a) {
        for (size_t b = a + 1; b < m; ++b) {
            Vec inner = vec_add(vec_sub(rho.act(t.col(a)).col(b), rho.act(t.col(b)).col(a)),
                                vec_scale(lambda, module.bracket_basis(a, b)));
            if (algebra.bracket(t.col(a), t.col(b)) != t.apply(inner))
                out.push_back("relative identity fails on (" + module.name(a) + ", " +
                              module.name(b) + ")");
        }
    }
    return out;
}

LieAlgebra joined_algebra(const RelativeRBW& x) { return semidirect(x.algebra, x.rho, &x.module); }

RotaBaxter joined_operator(const RelativeRBW& x) {
    const size_t n = x.algebra.dim();
    const size_t m = x.module.dim();
    Matrix top = hcat((-x.lambda) * Matrix::identity(n), x.t);
    Matrix op = vcat(top, Matrix::zero(m, n + m));
    return RotaBaxter(joined_algebra(x), op, x.lambda);
}

QuadraticRB joined_quadratic(const RelativeRBW& x) {
    return semidirect_quadratic(joined_operator(x));
}

Tensor2 r_joined(const RelativeRBW& x) { return r_semidirect(joined_operator(x)); }

namespace {

/// Block views of a coordinate covector on (g, k, g*, k*): the functional
/// x + u + xi + alpha has coordinates (xi, alpha, x, u) in that basis order.
struct CovBlocks {
    Vec xi, alpha, x, u;
};

CovBlocks split_cov(const Vec& c, size_t n, size_t m) {
    CovBlocks b{Vec(n), Vec(m), Vec(n), Vec(m)};
    for (size_t i = 0; i < n; ++i) b.xi[i] = c[i];
    for (size_t a = 0; a < m; ++a) b.alpha[a] = c[n + a];
    for (size_t i = 0; i < n; ++i) b.x[i] = c[n + m + i];
    for (size_t a = 0; a < m; ++a) b.u[a] = c[2 * n + m + a];
    return b;
}

/// The expected dual bracket of two covectors on the joined double, computed
/// family by family.  When corrected is false the mixed family's g*-component
/// keeps only the bare coadjoint term.
Vec expected_dual_bracket(const RelativeRBW& w, const Vec& c1, const Vec& c2, bool corrected) {
    const size_t n = w.algebra.dim();
    const size_t m = w.module.dim();
    const GaussRat il = w.lambda.inv();
    const CovBlocks a = split_cov(c1, n, m);
    const CovBlocks b = split_cov(c2, n, m);
    Vec out(2 * (n + m));

    // Both arguments from g (+) k: lands back in g (+) k.
    {
        Vec gx = vec_scale(il, vec_add(vec_scale(-w.lambda, w.algebra.bracket(a.x, b.x)),
                                       vec_add(w.algebra.bracket(a.x, w.t.apply(b.u)),
                                               w.algebra.bracket(w.t.apply(a.u), b.x))));
        Vec kx = vec_scale(il, vec_add(vec_sub(w.rho.act(w.t.apply(a.u)).apply(b.u),
                                               w.rho.act(w.t.apply(b.u)).apply(a.u)),
                                       vec_scale(w.lambda, w.module.bracket(a.u, b.u))));
        for (size_t i = 0; i < n; ++i) out[n + m + i] += gx[i];
        for (size_t c = 0; c < m; ++c) out[2 * n + m + c] += kx[c];
    }

    // One argument from g (+) k, the other from g* (+) k*: lands in g* (+) k*.
    auto mixed = [&](const Vec& xp, const Vec& up, const Vec& xiq, const Vec& alq,
                     const GaussRat& sign) {
        Vec tu = w.t.apply(up);
        Vec gstar = w.algebra.coad(tu).apply(xiq);
        if (corrected) {
            // minus the transpose of y -> t(rho(y) u) applied to xi
            for (size_t j = 0; j < n; ++j) {
                Vec column = w.t.apply(w.rho.act_basis(j).apply(up));
                gstar[j] -= dot(xiq, column);
            }
        }
        Vec tsxi = w.t.transpose().apply(xiq);
        Vec z = vec_add(vec_scale(-w.lambda, xp), tu);
        Vec kstar = vec_add(vec_sub(vec_scale(GaussRat(-1), w.rho.act(z).transpose().apply(alq)),
                                    w.module.coad(up).apply(tsxi)),
                            w.rho.act(xp).transpose().apply(tsxi));
        const GaussRat scale = sign * il;
        for (size_t i = 0; i < n; ++i) out[i] += scale * gstar[i];
        for (size_t c = 0; c < m; ++c) out[n + c] += scale * kstar[c];
    };
    mixed(a.x, a.u, b.xi, b.alpha, GaussRat(1));
    mixed(b.x, b.u, a.xi, a.alpha, GaussRat(-1));

    // Both arguments from g* (+) k*: zero.
    return out;
}

/// The quotient table with the mixed slot built from the given operators
/// per module basis vector (theta or its bare-coadjoint variant).
LieAlgebra quotient_table(const RelativeRBW& x, const std::vector<Matrix>& action) {
    const size_t n = x.algebra.dim();
    const size_t m = x.module.dim();
    const GaussRat il = x.lambda.inv();
    std::vector<std::string> names = star_names(x.algebra);
    for (size_t a = 0; a < m; ++a) names.push_back(x.module.name(a));
    LieAlgebra q(n + m, std::move(names));
    for (size_t i = 0; i < n; ++i)
        for (size_t a = 0; a < m; ++a)
            q.set_bracket(i, n + a, embed_first(vec_scale(il, action[a].row(i)), n + m));
    for (size_t a = 0; a < m; ++a) {
        for (size_t b = a + 1; b < m; ++b) {
            Vec w = vec_add(vec_sub(x.rho.act(x.t.col(a)).col(b), x.rho.act(x.t.col(b)).col(a)),
                            vec_scale(x.lambda, x.module.bracket_basis(a, b)));
            q.set_bracket(n + a, n + b, embed_second(vec_scale(il, w), n + m));
        }
    }
    return q;
}

std::vector<Matrix> theta_matrices(const RelativeRBW& x) {
    std::vector<Matrix> mats;
    mats.reserve(x.module.dim());
    for (size_t a = 0; a < x.module.dim(); ++a)
        mats.push_back(theta_matrix(x.algebra, x.rho, x.t, a));
    return mats;
}

std::vector<Matrix> bare_coad_matrices(const RelativeRBW& x) {
    std::vector<Matrix> mats;
    mats.reserve(x.module.dim());
    for (size_t a = 0; a < x.module.dim(); ++a) mats.push_back(x.algebra.ad(x.t.col(a)));
    return mats;
}

}  // namespace

WeightDualReport weight_dual_report(const RelativeRBW& x) {
    WeightDualReport rep;
    const size_t n = x.algebra.dim();
    const size_t m = x.module.dim();
    const size_t half = n + m;
    const size_t total = 2 * half;

    RotaBaxter bar = joined_operator(x);
    rep.joined_valid = bar.validate().empty();

    Tensor2 r = r_semidirect(bar);
    Tensor2 expected(total);
    const GaussRat il = x.lambda.inv();
    for (size_t i = 0; i < n; ++i) {
        for (size_t a = 0; a < m; ++a) {
            expected.at(half + n + a, i) += il * x.t.at(i, a);
            expected.at(i, half + n + a) -= il * x.t.at(i, a);
        }
    }
    for (size_t i = 0; i < n; ++i) expected.at(i, half + i) += GaussRat(1);
    for (size_t a = 0; a < m; ++a) expected.at(half + n + a, n + a) += GaussRat(1);
    rep.pairing_matches = (r == expected);

    try {
        LieAlgebra dual = dual_algebra(semidirect_quadratic(bar).rb.algebra, r);
        rep.families_match = true;
        rep.displayed_families_match = true;
        for (size_t p = 0; p < total; ++p) {
            for (size_t q = p + 1; q < total; ++q) {
                Vec lhs = dual.bracket_basis(p, q);
                Vec c1 = basis_vec(total, p);
                Vec c2 = basis_vec(total, q);
                if (lhs != expected_dual_bracket(x, c1, c2, true)) rep.families_match = false;
                if (lhs != expected_dual_bracket(x, c1, c2, false))
                    rep.displayed_families_match = false;
            }
        }
    } catch (const std::exception&) {
        // the dual bracket is not a Lie bracket here; both flags stay false
    }
    return rep;
}

LieAlgebra quotient_algebra(const RelativeRBW& x) { return quotient_table(x, theta_matrices(x)); }

SubBialgebraReport sub_bialgebra_report(const RelativeRBW& x) {
    SubBialgebraReport rep;
    const size_t n = x.algebra.dim();
    const size_t m = x.module.dim();
    const size_t half = n + m;
    const size_t total = 2 * half;

    RotaBaxter bar = joined_operator(x);
    const LieAlgebra big = semidirect_quadratic(bar).rb.algebra;

    // g (+) k* inside the double, against g acting on the dual module.
    // g slots stay put; the k* slot for s in [n, n+m) sits at half+n+(s-n).
    auto emb = [&](size_t s) { return s < n ? s : half + s; };
    std::vector<Vec> gens;
    for (size_t s = 0; s < half; ++s) gens.push_back(basis_vec(total, emb(s)));
    rep.subalgebra = is_subalgebra(big, Subspace::span(total, gens));

    LieAlgebra small = semidirect(x.algebra, dual_rep(x.rho), nullptr);
    rep.subalgebra_matches = true;
    for (size_t s = 0; s < half && rep.subalgebra_matches; ++s) {
        for (size_t u = s + 1; u < half; ++u) {
            Vec lhs = big.bracket_basis(emb(s), emb(u));
            Vec rhs = small.bracket_basis(s, u);
            for (size_t k = 0; k < total; ++k) {
                GaussRat want;
                if (k < n) want = rhs[k];
                else if (k >= half + n) want = rhs[n + (k - half - n)];
                if (lhs[k] != want) {
                    rep.subalgebra_matches = false;
                    break;
                }
            }
            if (!rep.subalgebra_matches) break;
        }
    }

    LieAlgebra quot = quotient_algebra(x);
    rep.quotient_lie = quot.validate().empty();

    try {
        Tensor2 r = r_semidirect(bar);
        LieAlgebra dual = dual_algebra(big, r);

        // Annihilator of g (+) k*: covectors supported on the alpha and x slots.
        std::vector<Vec> ann;
        for (size_t p = n; p < half + n; ++p) ann.push_back(basis_vec(total, p));
        rep.annihilator_ideal = is_ideal(dual, Subspace::span(total, ann));

        LieAlgebra displayed = quotient_table(x, bare_coad_matrices(x));
        rep.quotient_matches = true;
        rep.displayed_quotient_matches = true;
        for (size_t s = 0; s < half; ++s) {
            for (size_t u = s + 1; u < half; ++u) {
                Vec lhs = dual.bracket_basis(emb(s), emb(u));
                Vec proj(half);
                for (size_t i = 0; i < n; ++i) proj[i] = lhs[i];
                for (size_t a = 0; a < m; ++a) proj[n + a] = lhs[half + n + a];
                if (proj != quot.bracket_basis(s, u)) rep.quotient_matches = false;
                if (proj != displayed.bracket_basis(s, u)) rep.displayed_quotient_matches = false;
            }
        }
    } catch (const std::exception&) {
        // the dual bracket is not a Lie bracket here; the flags stay false
    }
    return rep;
}

RelReflectionWReport rel_reflection_report(const RelativeRBW& x, const Matrix& sigma,
                                           const Matrix& tau) {
    const size_t n = x.algebra.dim();
    const size_t m = x.module.dim();
    if (sigma.rows() != n || sigma.cols() != n)
        throw std::invalid_argument("map shape does not match the algebra");
    if (tau.rows() != m || tau.cols() != m)
        throw std::invalid_argument("map shape does not match the module");

    RelReflectionWReport rep;
    rep.sigma_automorphism = is_automorphism(x.algebra, sigma);
    rep.tau_automorphism = is_automorphism(x.module, tau);
    rep.sigma_involutive = (sigma * sigma == Matrix::identity(n));
    rep.tau_involutive = (tau * tau == Matrix::identity(m));
    rep.action_compatible = true;
    for (size_t i = 0; i < n; ++i) {
        if (tau * x.rho.act_basis(i) != x.rho.act(sigma.col(i)) * tau) {
            rep.action_compatible = false;
            break;
        }
    }
    rep.operator_residual = sigma * x.t * tau - x.t + sigma * x.t - x.t * tau;
    rep.operator_equation = rep.operator_residual.is_zero();
    return rep;
}

Matrix liftw(const RelativeRBW& x, const Matrix& sigma, const Matrix& tau) {
    if (sigma.rows() != x.algebra.dim() || sigma.cols() != x.algebra.dim())
        throw std::invalid_argument("map shape does not match the algebra");
    if (tau.rows() != x.module.dim() || tau.cols() != x.module.dim())
        throw std::invalid_argument("map shape does not match the module");
    return lifted_reflection(joined_operator(x), block_diag(sigma, tau));
}

PreLie::PreLie(size_t n_, Tensor3 mult_) : n(n_), mult(std::move(mult_)) {
    if (mult.dim != n) throw std::invalid_argument("product table dimension mismatch");
}

Vec PreLie::prod(const Vec& x, const Vec& y) const {
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("product arguments have wrong dimension");
    Vec out(n);
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const GaussRat c = x[i] * y[j];
            for (size_t k = 0; k < n; ++k) out[k] += c * mult.at(i, j, k);
        }
    }
    return out;
}

Vec PreLie::prod_basis(size_t i, size_t j) const {
    Vec out(n);
    for (size_t k = 0; k < n; ++k) out[k] = mult.at(i, j, k);
    return out;
}

namespace {

template <typename Product>
Vec associator(const Product& p, size_t n, size_t i, size_t j, size_t k) {
    return vec_sub(p.prod(p.prod_basis(i, j), basis_vec(n, k)),
                   p.prod(basis_vec(n, i), p.prod_basis(j, k)));
}

std::string triple_label(const std::string& a, const std::string& b, const std::string& c) {
    return "(" + a + ", " + b + ", " + c + ")";
}

}  // namespace

std::vector<std::string> PreLie::validate() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (associator(*this, n, i, j, k) != associator(*this, n, j, i, k))
                    out.push_back("left symmetry fails on " +
                                  triple_label("e" + std::to_string(i + 1),
                                               "e" + std::to_string(j + 1),
                                               "e" + std::to_string(k + 1)));
    return out;
}

LieAlgebra subadjacent(const PreLie& p) {
    LieAlgebra g(p.n);
    for (size_t i = 0; i < p.n; ++i)
        for (size_t j = i + 1; j < p.n; ++j)
            g.set_bracket(i, j, vec_sub(p.prod_basis(i, j), p.prod_basis(j, i)));
    return g;
}

namespace {

std::vector<Matrix> left_mult_matrices(const Tensor3& mult) {
    const size_t n = mult.dim;
    std::vector<Matrix> mats;
    mats.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Matrix l(n, n);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) l.at(k, j) = mult.at(i, j, k);
        mats.push_back(std::move(l));
    }
    return mats;
}

}  // namespace

Representation left_action(const PreLie& p) {
    return Representation(subadjacent(p), p.n, left_mult_matrices(p.mult));
}

RelativeRB0 as_relative(const PreLie& p) {
    return RelativeRB0(subadjacent(p), left_action(p), Matrix::identity(p.n));
}

PostLie::PostLie(LieAlgebra lie_, Tensor3 mult_) : lie(std::move(lie_)), mult(std::move(mult_)) {
    if (mult.dim != lie.dim()) throw std::invalid_argument("product table dimension mismatch");
}

Vec PostLie::prod(const Vec& x, const Vec& y) const {
    const size_t n = lie.dim();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("product arguments have wrong dimension");
    Vec out(n);
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const GaussRat c = x[i] * y[j];
            for (size_t k = 0; k < n; ++k) out[k] += c * mult.at(i, j, k);
        }
    }
    return out;
}

Vec PostLie::prod_basis(size_t i, size_t j) const {
    const size_t n = lie.dim();
    Vec out(n);
    for (size_t k = 0; k < n; ++k) out[k] = mult.at(i, j, k);
    return out;
}

std::vector<std::string> PostLie::validate() const {
    std::vector<std::string> out;
    const size_t n = lie.dim();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = j + 1; k < n; ++k) {
                Vec lhs = prod(basis_vec(n, i), lie.bracket_basis(j, k));
                Vec rhs = vec_add(lie.bracket(prod_basis(i, j), basis_vec(n, k)),
                                  lie.bracket(basis_vec(n, j), prod_basis(i, k)));
                if (lhs != rhs)
                    out.push_back("derivation axiom fails on " +
                                  triple_label(lie.name(i), lie.name(j), lie.name(k)));
            }
        }
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Vec sub = vec_add(lie.bracket_basis(i, j),
                              vec_sub(prod_basis(i, j), prod_basis(j, i)));
            for (size_t k = 0; k < n; ++k) {
                Vec lhs = prod(sub, basis_vec(n, k));
                Vec rhs = vec_sub(prod(basis_vec(n, i), prod_basis(j, k)),
                                  prod(basis_vec(n, j), prod_basis(i, k)));
                if (lhs != rhs)
                    out.push_back("action axiom fails on " +
                                  triple_label(lie.name(i), lie.name(j), lie.name(k)));
            }
        }
    }
    return out;
}

LieAlgebra subadjacent(const PostLie& p) {
    const size_t n = p.lie.dim();
    LieAlgebra g(n, p.lie.names());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            g.set_bracket(i, j, vec_add(p.lie.bracket_basis(i, j),
                                        vec_sub(p.prod_basis(i, j), p.prod_basis(j, i))));
    return g;
}

Representation left_action(const PostLie& p) {
    return Representation(subadjacent(p), p.lie.dim(), left_mult_matrices(p.mult));
}

RelativeRBW as_relative(const PostLie& p) {
    return RelativeRBW(subadjacent(p), p.lie, left_action(p), Matrix::identity(p.lie.dim()),
                       GaussRat(1));
}

PreLie as_prelie(const PostLie& p) {
    if (!p.lie.c().is_zero()) throw std::invalid_argument("bracket is not zero");
    return PreLie(p.lie.dim(), p.mult);
}

PostLie with_zero_bracket(const PreLie& p) { return PostLie(abelian_algebra(p.n), p.mult); }

}  // namespace rblie
