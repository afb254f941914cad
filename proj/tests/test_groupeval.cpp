#include "rblie/groupeval.hpp"

#include "doctest.h"
#include "rblie/catalog.hpp"

#include <cmath>
#include <limits>

using namespace rblie;

namespace {

FMatrix fmat2(double a, double b, double c, double d) {
    FMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

QuadraticRB catalog_quadratic(const CatalogEntry& entry) {
    return std::get<QuadraticWithReflections>(entry.payload).q;
}

/// The 2x2 trace-zero realization of the three-dimensional simple algebra
/// in its catalog basis order.
std::vector<FMatrix> sl2_matrices() {
    return {fmat2(1, 0, 0, -1), fmat2(0, 1, 0, 0), fmat2(0, 0, 1, 0)};
}

}  // namespace

TEST_CASE("float matrix arithmetic basics") {
    FMatrix id = FMatrix::identity(3);
    CHECK(max_abs(id * id - id) == 0.0);
    FMatrix m = fmat2(1, 2, 3, 4);
    CHECK((transpose(m).at(0, 1) == Cplx{3.0, 0.0}));
    CHECK(max_abs(m - m) == 0.0);
    CHECK(max_abs(Cplx{2.0, 0.0} * m) == 8.0);
    CHECK(all_finite(m));
    m.at(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK(!all_finite(m));
}

TEST_CASE("exact-to-float conversion") {
    CHECK((to_float(GaussRat(1, 2)) == Cplx{0.5, 0.0}));
    CHECK((to_float(GaussRat(3) * GaussRat::i()) == Cplx{0.0, 3.0}));
}

TEST_CASE("matrix exponential: exact special cases") {
    // Zero matrix.
    CHECK(max_abs(mexp(FMatrix(3, 3)) - FMatrix::identity(3)) == 0.0);

    // Square-zero matrix inside the no-scaling range: the series truncates
    // after the linear term, so the result is binary-exact.
    FMatrix n = fmat2(0, 0.125, 0, 0);
    CHECK(max_abs(mexp(n) - fmat2(1, 0.125, 0, 1)) == 0.0);

    // Square-zero matrix through the scaling-and-squaring path: halving and
    // repeated squaring are exact on powers of two.
    FMatrix big = fmat2(0, 3, 0, 0);
    CHECK(max_abs(mexp(big) - fmat2(1, 3, 0, 1)) == 0.0);

    // Scalar case against the standard exponential.
    FMatrix one = fmat2(1, 0, 0, 1);
    CHECK(max_abs(mexp(one) - (Cplx{std::exp(1.0), 0.0} * one)) < 1e-14);

    // Non-finite input is rejected.
    FMatrix bad = fmat2(0, std::numeric_limits<double>::infinity(), 0, 0);
    CHECK_THROWS_AS(mexp(bad), std::overflow_error);
}

TEST_CASE("structure-constant import and adjoint convention") {
    CatalogEntry entry = sl2_example(GaussRat(1));
    QuadraticRB q = catalog_quadratic(entry);
    MatrixLieData data = MatrixLieData::from(q.rb.algebra, sl2_matrices(), true);
    CHECK(data.dim == 3);
    CHECK(data.complex_coefficients);

    // The attached matrices realize the imported structure constants with no
    // float error (all entries are small integers).
    CHECK(data.realization_residual() == 0.0);

    // ad of the first basis vector scales the second by +2 and the third by
    // -2 (column convention: column j holds the image of basis vector j).
    FMatrix ad0 = data.ad({Cplx{1.0, 0.0}, Cplx{}, Cplx{}});
    CHECK((ad0.at(1, 1) == Cplx{2.0, 0.0}));
    CHECK((ad0.at(2, 2) == Cplx{-2.0, 0.0}));
    CHECK((ad0.at(0, 0) == Cplx{}));

    // Without a realization the residual is defined as zero.
    MatrixLieData bare = MatrixLieData::from(q.rb.algebra, {}, true);
    CHECK(bare.realization_residual() == 0.0);
}

TEST_CASE("group points: adjoint of the empty word and of inverse pairs") {
    CatalogEntry entry = sl2_example(GaussRat(1));
    MatrixLieData data = MatrixLieData::from(catalog_quadratic(entry).rb.algebra, {}, true);

    GroupPoint e;
    CHECK(max_abs(algebra_adjoint(data, e) - FMatrix::identity(3)) == 0.0);

    GroupPoint g;
    g.factors.push_back({Cplx{0.3, 0.1}, Cplx{-0.2, 0.0}, Cplx{0.5, -0.4}});
    g.factors.push_back({Cplx{-0.1, 0.2}, Cplx{0.7, 0.1}, Cplx{0.0, 0.3}});
    FMatrix prod = algebra_adjoint(data, g) * algebra_adjoint(data, point_inverse(g));
    CHECK(max_abs(prod - FMatrix::identity(3)) < 1e-13);

    GroupPoint gg = point_product(g, point_inverse(g));
    CHECK(gg.factors.size() == 4);
    CHECK(max_abs(algebra_adjoint(data, gg) - FMatrix::identity(3)) < 1e-13);
}

TEST_CASE("induced tensors of the three-dimensional quadratic example") {
    QuadraticRB q = catalog_quadratic(sl2_example(GaussRat(1)));

    FMatrix full = full_tensor(q);
    CHECK((full.at(0, 0) == Cplx{0.0625, 0.0}));
    CHECK((full.at(1, 2) == Cplx{0.25, 0.0}));
    CHECK((full.at(2, 1) == Cplx{}));

    FMatrix skew = skew_tensor(q);
    CHECK((skew.at(0, 0) == Cplx{}));
    CHECK((skew.at(1, 2) == Cplx{0.125, 0.0}));
    CHECK((skew.at(2, 1) == Cplx{-0.125, 0.0}));
    CHECK(max_abs(skew + transpose(skew)) == 0.0);
}

TEST_CASE("quadratic bivector: identity point and zero operator") {
    CatalogEntry entry = sl2_example(GaussRat(1));
    QuadraticRB q = catalog_quadratic(entry);
    MatrixLieData data = MatrixLieData::from(q.rb.algebra, {}, true);

    // At the identity the left and right translates coincide.
    CHECK(max_abs(pi_quadratic(data, q, GroupPoint{})) == 0.0);
    CHECK(max_abs(pi_quadratic(data, q, GroupPoint{}, /*use_full=*/true)) == 0.0);

    // Weight zero with the zero operator induces the zero tensor, hence the
    // zero field everywhere.
    QuadraticRB trivial(RotaBaxter(q.rb.algebra, Matrix(3, 3), GaussRat(0)), q.s);
    GroupPoint g;
    g.factors.push_back({Cplx{0.9, 0.0}, Cplx{-0.3, 0.2}, Cplx{0.1, 0.6}});
    CHECK(max_abs(pi_quadratic(data, trivial, g)) == 0.0);
}

TEST_CASE("sampled residuals of the quadratic field on the complex example") {
    CatalogEntry entry = sl2_example(GaussRat(1));
    QuadraticRB q = catalog_quadratic(entry);
    MatrixLieData data = MatrixLieData::from(q.rb.algebra, {}, true);

    SampleReport rep = sample_quadratic(data, q, 100, 42);
    CHECK(rep.pass());
    CHECK(rep.samples == 100);
    CHECK(rep.seed == 42);
    // The skew part cancels exactly: the tensor is stored skew and the
    // translate preserves that by construction.
    CHECK(rep.skew == 0.0);
    CHECK(rep.identity < kTolIdentity);
    CHECK(rep.multiplicativity < kTolComposite);
    CHECK(rep.substitution < kTolComposite);
    // Residuals are genuinely nonzero: the formulas are exercised in floats.
    CHECK(rep.identity > 0.0);
    CHECK(rep.multiplicativity > 0.0);
    CHECK(rep.substitution > 0.0);
}

TEST_CASE("semidirect group operations") {
    QuadraticRB q = catalog_quadratic(sl2_example(GaussRat(1)));
    MatrixLieData base = MatrixLieData::from(q.rb.algebra, {}, true);
    SemidirectData sd = coadjoint_data(base, q.rb);
    CHECK(sd.fiber_dim() == 3);

    SemidirectPoint p;
    p.g.factors.push_back({Cplx{0.4, -0.1}, Cplx{0.2, 0.3}, Cplx{-0.5, 0.0}});
    p.alpha = {Cplx{0.7, 0.0}, Cplx{-0.2, 0.5}, Cplx{0.1, -0.3}};

    // p * p^-1 lands at the identity: base word cancels under the adjoint
    // and the fiber coordinate collapses to zero.
    SemidirectPoint pe = semidirect_product(sd, p, semidirect_inverse(sd, p));
    CHECK(max_abs(algebra_adjoint(base, pe.g) - FMatrix::identity(3)) < 1e-13);
    double fiber = 0.0;
    for (const Cplx& v : pe.alpha) fiber = std::max(fiber, std::abs(v));
    CHECK(fiber < 1e-13);

    // The adjoint of the identity point is the identity matrix.
    CHECK(max_abs(semidirect_adjoint(sd, SemidirectPoint{}) - FMatrix::identity(6)) == 0.0);
}

TEST_CASE("coadjoint field of the negated identity operator") {
    // With b = -1 at weight 1 the mixed block vanishes and the fiber block,
    // read in the point frame, is the negated bracket paired with the fiber
    // coordinate.
    QuadraticRB q = catalog_quadratic(sl2_example(GaussRat(1)));
    CatalogEntry entry = minus_identity(q.rb.algebra, "m");
    const RotaBaxter& rb = std::get<RotaBaxter>(entry.payload);
    MatrixLieData base = MatrixLieData::from(rb.algebra, {}, true);
    SemidirectData sd = coadjoint_data(base, rb);

    SemidirectPoint p;
    p.g.factors.push_back({Cplx{0.3, 0.0}, Cplx{-0.2, 0.0}, Cplx{0.5, 0.0}});
    p.alpha = {Cplx{0.7, 0.0}, Cplx{0.1, 0.0}, Cplx{-0.4, 0.0}};
    FMatrix pi = pi_semidirect(sd, p);
    const size_t n = 3;

    for (size_t i = 0; i < n; ++i)
        for (size_t a = 0; a < n; ++a) CHECK(std::abs(pi.at(i, n + a)) < 1e-12);

    // Undo the frame twist on the fiber block.
    FMatrix qinv = transpose(rho_of(sd, point_inverse(p.g)));
    FMatrix block(n, n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) block.at(a, b) = pi.at(n + a, n + b);
    FMatrix frame = qinv * block * transpose(qinv);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            Cplx expect{};
            for (size_t k = 0; k < n; ++k) expect -= base.c_at(a, b, k) * p.alpha[k];
            CHECK(std::abs(frame.at(a, b) - expect) < 1e-12);
        }
}

TEST_CASE("sampled residuals of the coadjoint field at both weights") {
    CatalogEntry entry = sl2_example(GaussRat(1));
    QuadraticRB q = catalog_quadratic(entry);
    MatrixLieData data = MatrixLieData::from(q.rb.algebra, {}, true);

    SampleReport rep = sample_coadjoint(data, q.rb, 60, 7);
    CHECK(rep.pass());
    CHECK(rep.skew == 0.0);
    CHECK(rep.linear_part < kTolSingle);
    CHECK(rep.multiplicativity > 0.0);

    // Weight zero: the zero operator is a valid degenerate case whose field
    // vanishes identically but whose fiber structure is still checked.
    RotaBaxter zero(q.rb.algebra, Matrix(3, 3), GaussRat(0));
    SampleReport rep0 = sample_coadjoint(data, zero, 20, 7);
    CHECK(rep0.pass());
}

TEST_CASE("sampled residuals of a module field from a two-dimensional product") {
    std::vector<PreLie> all = enumerate_small_prelie();
    REQUIRE(!all.empty());
    // Pick a product with a nonzero table (the first enumerated is all-zero).
    const PreLie& p = all[1];
    RelativeRB0 rel = as_relative(p);
    MatrixLieData base = MatrixLieData::from(rel.algebra, {}, false);
    CHECK(!base.complex_coefficients);

    SampleReport rep = sample_module(base, rel, 50, 11);
    CHECK(rep.pass());
    CHECK(rep.formula == "module");
    CHECK(rep.skew == 0.0);
    CHECK(rep.substitution == 0.0);
}

TEST_CASE("combined suite is deterministic and byte-stable") {
    CatalogEntry entry = sl2_example(GaussRat(1));
    QuadraticRB q = catalog_quadratic(entry);
    MatrixLieData data = MatrixLieData::from(q.rb.algebra, {}, true);

    SampleReport r1 = sample_suite(data, q, 100, 20260501);
    SampleReport r2 = sample_suite(data, q, 100, 20260501);
    CHECK(r1.pass());
    CHECK(r1.formula == "quadratic+coadjoint");
    CHECK(r1.text() == r2.text());
    CHECK(r1.text().find("left-trivialized") != std::string::npos);
    CHECK(r1.text().find("status: pass") != std::string::npos);
    // The substitution slot is populated by the quadratic half of the merge.
    // (The linear-part slot is populated by the coadjoint half, but on this
    // example it is exactly zero: every structure constant and operator
    // entry is a power of two, so both sides round identically.)
    CHECK(r1.substitution > 0.0);
    CHECK(r1.linear_part == 0.0);

    // A different seed changes the sampled residuals.
    SampleReport r3 = sample_suite(data, q, 100, 1);
    CHECK(r3.text() != r1.text());

    // The empty run reports zeros and passes.
    SampleReport r0 = sample_suite(data, q, 0, 5);
    CHECK(r0.pass());
    CHECK(r0.skew == 0.0);
    CHECK(r0.identity == 0.0);
    CHECK(r0.multiplicativity == 0.0);
}
