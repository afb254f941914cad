#include "rblie/groupeval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace rblie {

FMatrix FMatrix::identity(size_t n) {
    FMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

FMatrix operator+(const FMatrix& x, const FMatrix& y) {
    FMatrix out(x.rows, x.cols);
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = x.a[i] + y.a[i];
    return out;
}

FMatrix operator-(const FMatrix& x, const FMatrix& y) {
    FMatrix out(x.rows, x.cols);
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = x.a[i] - y.a[i];
    return out;
}

FMatrix operator*(const FMatrix& x, const FMatrix& y) {
    FMatrix out(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const Cplx v = x.at(i, k);
            if (v == Cplx{}) continue;
            for (size_t j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

FMatrix operator*(const Cplx& c, const FMatrix& x) {
    FMatrix out(x.rows, x.cols);
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = c * x.a[i];
    return out;
}

FMatrix transpose(const FMatrix& x) {
    FMatrix out(x.cols, x.rows);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
    return out;
}

double max_abs(const FMatrix& x) {
    double m = 0.0;
    for (const Cplx& v : x.a) m = std::max(m, std::abs(v));
    return m;
}

bool all_finite(const FMatrix& x) {
    for (const Cplx& v : x.a)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

Cplx to_float(const GaussRat& v) { return {v.re().get_d(), v.im().get_d()}; }

FMatrix to_float(const Matrix& m) {
    FMatrix out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = to_float(m.at(i, j));
    return out;
}

FMatrix mexp(const FMatrix& x) {
    if (!all_finite(x)) throw std::overflow_error("matrix exponential of non-finite input");
    const size_t n = x.rows;

    int squarings = 0;
    double norm = max_abs(x);
    while (norm > 0.25 && squarings < 64) {
        norm /= 2.0;
        ++squarings;
    }
    const Cplx inv_scale{std::ldexp(1.0, -squarings), 0.0};
    FMatrix scaled = inv_scale * x;

    FMatrix sum = FMatrix::identity(n);
    FMatrix term = FMatrix::identity(n);
    for (int k = 1; k <= 20; ++k) {
        term = Cplx{1.0 / k, 0.0} * (term * scaled);
        sum = sum + term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    if (!all_finite(sum)) throw std::overflow_error("matrix exponential overflowed");
    return sum;
}

FMatrix MatrixLieData::ad(const std::vector<Cplx>& x) const {
    FMatrix m(dim, dim);
    for (size_t i = 0; i < dim; ++i) {
        if (x[i] == Cplx{}) continue;
        for (size_t j = 0; j < dim; ++j)
            for (size_t k = 0; k < dim; ++k) m.at(k, j) += x[i] * c_at(i, j, k);
    }
    return m;
}

double MatrixLieData::realization_residual() const {
    if (basis.empty()) return 0.0;
    double worst = 0.0;
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            FMatrix expect = basis[i] * basis[j] - basis[j] * basis[i];
            for (size_t k = 0; k < dim; ++k) expect = expect - (c_at(i, j, k) * basis[k]);
            worst = std::max(worst, max_abs(expect));
        }
    return worst;
}

MatrixLieData MatrixLieData::from(const LieAlgebra& g, std::vector<FMatrix> basis_mats,
                                  bool complex_coeffs) {
    MatrixLieData data;
    data.dim = g.dim();
    data.c.resize(data.dim * data.dim * data.dim);
    for (size_t i = 0; i < data.dim; ++i)
        for (size_t j = 0; j < data.dim; ++j)
            for (size_t k = 0; k < data.dim; ++k)
                data.c[(i * data.dim + j) * data.dim + k] = to_float(g.c_at(i, j, k));
    data.basis = std::move(basis_mats);
    data.complex_coefficients = complex_coeffs;
    return data;
}

GroupPoint point_inverse(const GroupPoint& p) {
    GroupPoint out;
    for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it) {
        std::vector<Cplx> neg(it->size());
        for (size_t i = 0; i < it->size(); ++i) neg[i] = -(*it)[i];
        out.factors.push_back(std::move(neg));
    }
    return out;
}

GroupPoint point_product(const GroupPoint& p, const GroupPoint& q) {
    GroupPoint out = p;
    out.factors.insert(out.factors.end(), q.factors.begin(), q.factors.end());
    return out;
}

FMatrix algebra_adjoint(const MatrixLieData& data, const GroupPoint& p) {
    FMatrix out = FMatrix::identity(data.dim);
    for (const auto& x : p.factors) out = out * mexp(data.ad(x));
    return out;
}

FMatrix full_tensor(const QuadraticRB& q) {
    Tensor2 r = r_from_quadratic(q);
    FMatrix out(r.dim, r.dim);
    for (size_t i = 0; i < r.dim; ++i)
        for (size_t j = 0; j < r.dim; ++j) out.at(i, j) = to_float(r.at(i, j));
    return out;
}

FMatrix skew_tensor(const QuadraticRB& q) {
    Tensor2 r = r_from_quadratic(q);
    const size_t n = q.rb.algebra.dim();
    const GaussRat half(1, 2);
    FMatrix out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.at(i, j) = to_float(half * (r.at(i, j) - r.at(j, i)));
    return out;
}

FMatrix pi_quadratic(const MatrixLieData& data, const QuadraticRB& q, const GroupPoint& g,
                     bool use_full) {
    FMatrix t = use_full ? full_tensor(q) : skew_tensor(q);
    FMatrix a = algebra_adjoint(data, point_inverse(g));
    return t - a * t * transpose(a);
}

SemidirectData module_data(const MatrixLieData& base, const RelativeRB0& x) {
    SemidirectData data;
    data.base = base;
    for (const Matrix& m : x.rho.mats) data.rho.push_back(to_float(m));
    data.t = to_float(x.t);
    data.scale = Cplx{1.0, 0.0};
    const LieAlgebra module = descendent_module(x);
    const size_t m = module.dim();
    data.fiber_linear.resize(m * m * m);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            for (size_t cc = 0; cc < m; ++cc)
                data.fiber_linear[(a * m + b) * m + cc] = to_float(module.c_at(a, b, cc));
    return data;
}

SemidirectData coadjoint_data(const MatrixLieData& base, const RotaBaxter& rb) {
    SemidirectData data;
    data.base = base;
    const size_t n = rb.algebra.dim();
    for (size_t i = 0; i < n; ++i) {
        std::vector<Cplx> x(n);
        x[i] = 1.0;
        data.rho.push_back(base.ad(x));
    }
    data.t = to_float(rb.b);
    const LieAlgebra desc = descendent(rb);
    data.fiber_linear.resize(n * n * n);
    if (rb.lambda.is_zero()) {
        data.scale = Cplx{1.0, 0.0};
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t cc = 0; cc < n; ++cc)
                    data.fiber_linear[(a * n + b) * n + cc] = to_float(desc.c_at(a, b, cc));
    } else {
        const GaussRat half_inv = (GaussRat(2) * rb.lambda).inv();
        data.scale = to_float(half_inv);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t cc = 0; cc < n; ++cc)
                    data.fiber_linear[(a * n + b) * n + cc] = to_float(
                        half_inv * (desc.c_at(a, b, cc) - rb.lambda * rb.algebra.c_at(a, b, cc)));
    }
    return data;
}

FMatrix rho_of(const SemidirectData& data, const GroupPoint& g) {
    const size_t m = data.fiber_dim();
    FMatrix out = FMatrix::identity(m);
    for (const auto& x : g.factors) {
        FMatrix gen(m, m);
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i] != Cplx{}) gen = gen + (x[i] * data.rho[i]);
        out = out * mexp(gen);
    }
    return out;
}

namespace {

std::vector<Cplx> mat_vec(const FMatrix& m, const std::vector<Cplx>& v) {
    std::vector<Cplx> out(m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

std::vector<Cplx> transpose_vec(const FMatrix& m, const std::vector<Cplx>& v) {
    std::vector<Cplx> out(m.cols);
    for (size_t j = 0; j < m.cols; ++j)
        for (size_t i = 0; i < m.rows; ++i) out[j] += m.at(i, j) * v[i];
    return out;
}

// The empty fiber coordinate denotes zero (the identity element); any other
// size mismatch is a caller error.
std::vector<Cplx> fiber_coords(const SemidirectData& data, const std::vector<Cplx>& alpha) {
    const size_t m = data.fiber_dim();
    if (alpha.empty()) return std::vector<Cplx>(m);
    if (alpha.size() != m) throw std::invalid_argument("fiber coordinate has wrong dimension");
    return alpha;
}

}  // namespace

SemidirectPoint semidirect_inverse(const SemidirectData& data, const SemidirectPoint& p) {
    SemidirectPoint out;
    out.g = point_inverse(p.g);
    // Fiber of the inverse: -(rho(g))^T alpha.
    FMatrix pg = rho_of(data, p.g);
    std::vector<Cplx> w = transpose_vec(pg, fiber_coords(data, p.alpha));
    out.alpha.resize(w.size());
    for (size_t i = 0; i < w.size(); ++i) out.alpha[i] = -w[i];
    return out;
}

SemidirectPoint semidirect_product(const SemidirectData& data, const SemidirectPoint& p,
                                   const SemidirectPoint& q) {
    SemidirectPoint out;
    out.g = point_product(p.g, q.g);
    // Fiber: alpha + (rho(g^-1))^T beta.
    FMatrix pginv = rho_of(data, point_inverse(p.g));
    std::vector<Cplx> moved = transpose_vec(pginv, fiber_coords(data, q.alpha));
    out.alpha = fiber_coords(data, p.alpha);
    for (size_t i = 0; i < out.alpha.size(); ++i) out.alpha[i] += moved[i];
    return out;
}

FMatrix semidirect_adjoint(const SemidirectData& data, const SemidirectPoint& p) {
    const size_t n = data.base.dim;
    const size_t m = data.fiber_dim();
    FMatrix adg = algebra_adjoint(data.base, p.g);
    FMatrix pg = rho_of(data, p.g);
    FMatrix qg = transpose(rho_of(data, point_inverse(p.g)));            // dual action of g
    std::vector<Cplx> w = transpose_vec(pg, fiber_coords(data, p.alpha));  // g^-1 acting on alpha

    FMatrix out(n + m, n + m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.at(i, j) = adg.at(i, j);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) out.at(n + a, n + b) = qg.at(a, b);
    for (size_t j = 0; j < n; ++j) {
        std::vector<Cplx> col = mat_vec(qg, transpose_vec(data.rho[j], w));
        for (size_t a = 0; a < m; ++a) out.at(n + a, j) = col[a];
    }
    return out;
}

FMatrix pi_semidirect(const SemidirectData& data, const SemidirectPoint& p) {
    const size_t n = data.base.dim;
    const size_t m = data.fiber_dim();
    FMatrix adginv = algebra_adjoint(data.base, point_inverse(p.g));
    FMatrix qprime = transpose(rho_of(data, p.g));  // dual action of g^-1

    // Mixed block: the operator tensor minus its translate.
    FMatrix moved = adginv * data.t * transpose(qprime);  // n x m

    // Fiber block seed in the point frame: x5[a][b] = -sum_j (rho_j^T alpha)_b t[j][a].
    const std::vector<Cplx> alpha = fiber_coords(data, p.alpha);
    FMatrix x5(m, m);
    for (size_t j = 0; j < n; ++j) {
        std::vector<Cplx> v = transpose_vec(data.rho[j], alpha);
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b) x5.at(a, b) -= v[b] * data.t.at(j, a);
    }
    FMatrix x5t = qprime * x5 * transpose(qprime);  // left-trivialized

    FMatrix out(n + m, n + m);
    for (size_t i = 0; i < n; ++i)
        for (size_t a = 0; a < m; ++a) {
            Cplx mixed = data.t.at(i, a) - moved.at(i, a);
            out.at(n + a, i) = mixed;
            out.at(i, n + a) = -mixed;
        }
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) out.at(n + a, n + b) = x5t.at(b, a) - x5t.at(a, b);
    return data.scale * out;
}

bool SampleReport::pass() const {
    return skew < kTolSingle && identity < kTolIdentity && multiplicativity < kTolComposite &&
           linear_part < kTolSingle && substitution < kTolComposite;
}

std::string SampleReport::text() const {
    char buf[1024];
    std::snprintf(buf, sizeof(buf),
                  "suite: %s\n"
                  "frame: left-trivialized\n"
                  "samples: %zu\n"
                  "seed: %llu\n"
                  "residual skew-symmetry:    %.6e  (tolerance %.1e)\n"
                  "residual identity:         %.6e  (tolerance %.1e)\n"
                  "residual multiplicativity: %.6e  (tolerance %.1e)\n"
                  "residual linear-part:      %.6e  (tolerance %.1e)\n"
                  "residual substitution:     %.6e  (tolerance %.1e)\n"
                  "status: %s\n",
                  formula.c_str(), samples, static_cast<unsigned long long>(seed), skew, kTolSingle,
                  identity, kTolIdentity, multiplicativity, kTolComposite, linear_part, kTolSingle,
                  substitution, kTolComposite, pass() ? "pass" : "fail");
    return buf;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct Sampler {
    std::mt19937_64 eng;
    bool complex_coeffs;

    Sampler(std::uint64_t s, bool cc) : eng(s), complex_coeffs(cc) {}

    // Uniform in [-1, 1], built from raw engine bits for cross-platform
    // determinism.
    double unit() { return 2.0 * ((eng() >> 11) * 0x1.0p-53) - 1.0; }

    Cplx coeff(double scale) {
        const double re = scale * unit();
        const double im = complex_coeffs ? scale * unit() : 0.0;
        return {re, im};
    }

    std::vector<Cplx> vec(size_t n, double scale = 1.0) {
        std::vector<Cplx> v(n);
        for (auto& x : v) x = coeff(scale);
        return v;
    }

    // Group factors are drawn at half scale: exponential norms grow quickly
    // with the coefficient box and would otherwise drown the identity
    // residual in amplified rounding noise.
    GroupPoint point(size_t n) {
        GroupPoint p;
        p.factors.push_back(vec(n, 0.5));
        p.factors.push_back(vec(n, 0.5));
        return p;
    }
};

double skew_residual(const FMatrix& pi) { return max_abs(pi + transpose(pi)); }

void merge_max(SampleReport& into, const SampleReport& other) {
    into.skew = std::max(into.skew, other.skew);
    into.identity = std::max(into.identity, other.identity);
    into.multiplicativity = std::max(into.multiplicativity, other.multiplicativity);
    into.linear_part = std::max(into.linear_part, other.linear_part);
    into.substitution = std::max(into.substitution, other.substitution);
}

SampleReport sample_semidirect(const SemidirectData& sd, const std::string& label,
                               size_t n_samples, std::uint64_t seed) {
    SampleReport rep;
    rep.formula = label;
    rep.samples = n_samples;
    rep.seed = seed;
    const size_t n = sd.base.dim;
    const size_t m = sd.fiber_dim();
    for (size_t i = 0; i < n_samples; ++i) {
        Sampler s(mix_seed(seed, i), sd.base.complex_coefficients);
        SemidirectPoint p1{s.point(n), s.vec(m)};
        SemidirectPoint p2{s.point(n), s.vec(m)};
        std::vector<Cplx> alpha = s.vec(m);

        FMatrix pi1 = pi_semidirect(sd, p1);
        FMatrix pi2 = pi_semidirect(sd, p2);
        FMatrix pi12 = pi_semidirect(sd, semidirect_product(sd, p1, p2));
        rep.skew = std::max({rep.skew, skew_residual(pi1), skew_residual(pi2),
                             skew_residual(pi12)});

        FMatrix pie = pi_semidirect(sd, semidirect_product(sd, p1, semidirect_inverse(sd, p1)));
        rep.identity = std::max(rep.identity, max_abs(pie));

        FMatrix a2 = semidirect_adjoint(sd, semidirect_inverse(sd, p2));
        rep.multiplicativity =
            std::max(rep.multiplicativity, max_abs(pi12 - pi2 - a2 * pi1 * transpose(a2)));

        FMatrix at_fiber = pi_semidirect(sd, SemidirectPoint{GroupPoint{}, alpha});
        FMatrix expect(n + m, n + m);
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b) {
                Cplx v{};
                for (size_t cc = 0; cc < m; ++cc)
                    v += sd.fiber_linear[(a * m + b) * m + cc] * alpha[cc];
                expect.at(n + a, n + b) = v;
            }
        rep.linear_part = std::max(rep.linear_part, max_abs(at_fiber - expect));
    }
    return rep;
}

}  // namespace

SampleReport sample_quadratic(const MatrixLieData& data, const QuadraticRB& q, size_t n_samples,
                              std::uint64_t seed) {
    SampleReport rep;
    rep.formula = "quadratic";
    rep.samples = n_samples;
    rep.seed = seed;
    const size_t n = data.dim;
    for (size_t i = 0; i < n_samples; ++i) {
        Sampler s(mix_seed(seed, i), data.complex_coefficients);
        GroupPoint g = s.point(n);
        GroupPoint h = s.point(n);

        FMatrix pig = pi_quadratic(data, q, g);
        FMatrix pih = pi_quadratic(data, q, h);
        FMatrix pigh = pi_quadratic(data, q, point_product(g, h));
        rep.skew =
            std::max({rep.skew, skew_residual(pig), skew_residual(pih), skew_residual(pigh)});

        FMatrix pie = pi_quadratic(data, q, point_product(g, point_inverse(g)));
        rep.identity = std::max(rep.identity, max_abs(pie));

        FMatrix ainv = algebra_adjoint(data, point_inverse(h));
        rep.multiplicativity =
            std::max(rep.multiplicativity, max_abs(pigh - pih - ainv * pig * transpose(ainv)));

        FMatrix pig_full = pi_quadratic(data, q, g, /*use_full=*/true);
        rep.substitution = std::max(rep.substitution, max_abs(pig_full - pig));
    }
    return rep;
}

SampleReport sample_coadjoint(const MatrixLieData& data, const RotaBaxter& rb, size_t n_samples,
                              std::uint64_t seed) {
    return sample_semidirect(coadjoint_data(data, rb), "coadjoint", n_samples, seed);
}

SampleReport sample_module(const MatrixLieData& base, const RelativeRB0& x, size_t n_samples,
                           std::uint64_t seed) {
    return sample_semidirect(module_data(base, x), "module", n_samples, seed);
}

SampleReport sample_suite(const MatrixLieData& data, const QuadraticRB& q, size_t n_samples,
                          std::uint64_t seed) {
    SampleReport rep = sample_quadratic(data, q, n_samples, seed);
    rep.formula = "quadratic+coadjoint";
    merge_max(rep, sample_coadjoint(data, q.rb, n_samples, seed));
    return rep;
}

}  // namespace rblie
