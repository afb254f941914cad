#include "doctest.h"
#include "rblie/lie.hpp"

using namespace rblie;

namespace {

// Basis (H, X, Y): [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H.
LieAlgebra make_sl2() {
    LieAlgebra g(3, {"H", "X", "Y"});
    g.set_bracket(0, 1, {GaussRat(0), GaussRat(2), GaussRat(0)});
    g.set_bracket(0, 2, {GaussRat(0), GaussRat(0), GaussRat(-2)});
    g.set_bracket(1, 2, {GaussRat(1), GaussRat(0), GaussRat(0)});
    return g;
}

// Non-abelian two-dimensional algebra: [e1, e2] = e2.
LieAlgebra make_aff1() {
    LieAlgebra g(2);
    g.set_bracket(0, 1, {GaussRat(0), GaussRat(1)});
    return g;
}

// Standard quasitriangular tensor on sl2: (1/4) H tensor H + X tensor Y.
Tensor2 sl2_standard_r() {
    Tensor2 r(3);
    r.at(0, 0) = frac(1, 4);
    r.at(1, 2) = GaussRat(1);
    return r;
}

Vec ev(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(GaussRat(x));
    return v;
}

// Independent dense contraction of [r,r], written as plain quadruple loops
// over tensor legs (no sparsity, no shared code with the library routine).
Tensor3 naive_cybe(const LieAlgebra& g, const Tensor2& r) {
    size_t n = g.dim();
    Tensor3 out(n);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            for (size_t k = 0; k < n; k++)
                for (size_t l = 0; l < n; l++) {
                    GaussRat w = r.at(i, j) * r.at(k, l);
                    if (w.is_zero()) continue;
                    for (size_t m = 0; m < n; m++) {
                        GaussRat c1 = g.c_at(i, k, m);
                        if (!c1.is_zero()) out.at(m, j, l) += w * c1;  // first legs bracket
                        GaussRat c2 = g.c_at(j, l, m);
                        if (!c2.is_zero()) out.at(i, k, m) += w * c2;  // last legs bracket
                        GaussRat c3 = g.c_at(j, k, m);
                        if (!c3.is_zero()) out.at(i, m, l) += w * c3;  // middle legs bracket
                    }
                }
    return out;
}

}  // namespace

TEST_CASE("structure constant bookkeeping and validation") {
    LieAlgebra g = make_sl2();
    CHECK(g.validate().empty());
    CHECK(!g.is_abelian());
    CHECK(g.bracket_basis(1, 2) == ev({1, 0, 0}));
    CHECK(g.bracket_basis(2, 1) == ev({-1, 0, 0}));
    CHECK(g.bracket(ev({1, 0, 0}), ev({0, 1, 1})) == ev({0, 2, -2}));

    Matrix adH = g.ad(ev({1, 0, 0}));
    CHECK((adH == Matrix{{GaussRat(0), GaussRat(0), GaussRat(0)},
                         {GaussRat(0), GaussRat(2), GaussRat(0)},
                         {GaussRat(0), GaussRat(0), GaussRat(-2)}}));
    // ad* is minus the transpose.
    CHECK((g.coad(ev({1, 0, 0})) ==
           Matrix{{GaussRat(0), GaussRat(0), GaussRat(0)},
                  {GaussRat(0), GaussRat(-2), GaussRat(0)},
                  {GaussRat(0), GaussRat(0), GaussRat(2)}}));

    LieAlgebra bad(3);
    bad.set_bracket(0, 1, ev({1, 0, 0}));
    bad.set_bracket(0, 2, ev({0, 0, 1}));
    bad.set_bracket(1, 2, ev({0, 1, 0}));
    auto msgs = bad.validate();
    REQUIRE(!msgs.empty());
    CHECK(msgs.front().find("Jacobi") != std::string::npos);
}

TEST_CASE("representations and their duals") {
    LieAlgebra g = make_sl2();
    Representation ad = adjoint_rep(g);
    CHECK(ad.validate().empty());
    Representation coad = coadjoint_rep(g);
    CHECK(coad.validate().empty());
    CHECK((dual_rep(ad).mats[0] == coad.mats[0]));
    // The adjoint representation acts by derivations of the bracket.
    CHECK(ad.derivation_violations(g).empty());
}

TEST_CASE("invariant bilinear forms") {
    LieAlgebra g = make_sl2();
    Matrix gram{{GaussRat(8), GaussRat(0), GaussRat(0)},
                {GaussRat(0), GaussRat(0), GaussRat(4)},
                {GaussRat(0), GaussRat(4), GaussRat(0)}};
    BilinearForm s(g, gram);
    CHECK(s.is_symmetric());
    CHECK(s.is_nondegenerate());
    CHECK(s.invariance_violations().empty());
    CHECK((i_s(s) == Matrix{{frac(1, 8), GaussRat(0), GaussRat(0)},
                            {GaussRat(0), GaussRat(0), frac(1, 4)},
                            {GaussRat(0), frac(1, 4), GaussRat(0)}}));

    BilinearForm bad(g, Matrix::identity(3));
    CHECK(!bad.invariance_violations().empty());
}

TEST_CASE("bracket contraction of tensors matches the dense oracle") {
    LieAlgebra sl2 = make_sl2();
    LieAlgebra aff = make_aff1();

    // Arbitrary tensors, including complex entries: the sparse and dense
    // routes must agree entry for entry.
    Tensor2 a(3);
    a.at(0, 1) = GaussRat(1);
    a.at(1, 1) = GaussRat::i();
    a.at(2, 0) = frac(-3, 5);
    CHECK(cybe_bracket(sl2, a) == naive_cybe(sl2, a));

    Tensor2 b(2);
    b.at(0, 0) = frac(2, 7);
    b.at(1, 0) = GaussRat(1) + GaussRat::i();
    CHECK(cybe_bracket(aff, b) == naive_cybe(aff, b));

    // Leg reversal: flipping both tensor factors reverses the contraction.
    Tensor3 lhs = reverse13(cybe_bracket(sl2, transpose21(a)));
    Tensor3 rhs = cybe_bracket(sl2, a);
    CHECK((lhs + rhs).is_zero());
}

TEST_CASE("classical Yang-Baxter solutions") {
    LieAlgebra sl2 = make_sl2();
    CHECK(cybe_bracket(sl2, sl2_standard_r()).is_zero());

    LieAlgebra aff = make_aff1();
    Tensor2 wedge(2);
    wedge.at(0, 1) = GaussRat(1);
    wedge.at(1, 0) = GaussRat(-1);
    CHECK(cybe_bracket(aff, wedge).is_zero());

    Tensor2 nonsol(3);
    nonsol.at(0, 1) = GaussRat(1);  // H tensor X fails
    CHECK(!cybe_bracket(sl2, nonsol).is_zero());
}

TEST_CASE("symmetric part invariance and classification") {
    LieAlgebra sl2 = make_sl2();
    auto rep = symmetric_invariance(sl2, sl2_standard_r());
    CHECK(rep.ad_invariant);
    CHECK(rep.classification == "factorizable");

    LieAlgebra aff = make_aff1();
    Tensor2 wedge(2);
    wedge.at(0, 1) = GaussRat(1);
    wedge.at(1, 0) = GaussRat(-1);
    auto rep2 = symmetric_invariance(aff, wedge);
    CHECK(rep2.ad_invariant);
    CHECK(rep2.classification == "triangular");

    Tensor2 xy(3);
    xy.at(1, 2) = GaussRat(1);
    auto rep3 = symmetric_invariance(sl2, xy);
    CHECK(!rep3.ad_invariant);
    CHECK(rep3.classification == "neither");
}

TEST_CASE("cobracket values") {
    LieAlgebra sl2 = make_sl2();
    Tensor2 r = sl2_standard_r();
    CHECK(cobracket(sl2, r, ev({1, 0, 0})).is_zero());  // delta(H) = 0
    Tensor2 dX = cobracket(sl2, r, ev({0, 1, 0}));
    Tensor2 expect(3);
    expect.at(1, 0) = frac(1, 2);
    expect.at(0, 1) = frac(-1, 2);
    CHECK(dX == expect);  // delta(X) = (1/2) (X tensor H - H tensor X)
}

TEST_CASE("dual bracket routes agree and freeze to known structure") {
    LieAlgebra sl2 = make_sl2();
    Tensor2 r = sl2_standard_r();

    // Route agreement holds for arbitrary tensors, not only solutions.
    Tensor2 arbitrary(3);
    arbitrary.at(0, 2) = GaussRat::i();
    arbitrary.at(1, 1) = frac(3, 4);
    Vec xi = {GaussRat(1), GaussRat(0), GaussRat(2)};
    Vec eta = {GaussRat(0), GaussRat(1), GaussRat(-1)};
    CHECK(dual_bracket_delta(sl2, arbitrary, xi, eta) == dual_bracket_ad(sl2, arbitrary, xi, eta));

    LieAlgebra dual = dual_algebra(sl2, r);
    CHECK(dual.validate().empty());
    // [H*, X*] = -(1/2) X*, [H*, Y*] = -(1/2) Y*, [X*, Y*] = 0.
    CHECK((dual.bracket_basis(0, 1) == Vec{GaussRat(0), frac(-1, 2), GaussRat(0)}));
    CHECK((dual.bracket_basis(0, 2) == Vec{GaussRat(0), GaussRat(0), frac(-1, 2)}));
    CHECK(vec_is_zero(dual.bracket_basis(1, 2)));

    // A tensor with non-invariant symmetric part has no dual Lie algebra.
    Tensor2 xy(3);
    xy.at(1, 2) = GaussRat(1);
    CHECK_THROWS_AS(dual_algebra(sl2, xy), std::invalid_argument);
}

TEST_CASE("automorphisms") {
    LieAlgebra sl2 = make_sl2();
    Matrix diag{{GaussRat(1), GaussRat(0), GaussRat(0)},
                {GaussRat(0), GaussRat(-1), GaussRat(0)},
                {GaussRat(0), GaussRat(0), GaussRat(-1)}};
    CHECK(is_automorphism(sl2, diag));
    Matrix wrong = Matrix::identity(3);
    wrong.at(1, 1) = GaussRat(2);
    CHECK(!is_automorphism(sl2, wrong));

    Matrix expX = automorphism_from_nilpotent(sl2, ev({0, 1, 0}));
    CHECK((expX == Matrix{{GaussRat(1), GaussRat(0), GaussRat(1)},
                          {GaussRat(-2), GaussRat(1), GaussRat(-1)},
                          {GaussRat(0), GaussRat(0), GaussRat(1)}}));
    CHECK(is_automorphism(sl2, expX));
    CHECK_THROWS_AS(automorphism_from_nilpotent(sl2, ev({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("reflection residual of the twisted equation") {
    LieAlgebra sl2 = make_sl2();
    Tensor2 r = sl2_standard_r();
    Matrix diag{{GaussRat(1), GaussRat(0), GaussRat(0)},
                {GaussRat(0), GaussRat(-1), GaussRat(0)},
                {GaussRat(0), GaussRat(0), GaussRat(-1)}};
    auto [ct, k] = cre_residual(sl2, r, diag);
    Tensor2 expect(3);
    expect.at(1, 2) = GaussRat(4);  // ((tau-1) tensor (tau-1)) r = 4 X tensor Y
    CHECK(ct == expect);
    CHECK(k.at(2, 1) == GaussRat(4));

    Subspace h = fixed_space(diag);
    CHECK(h.dim() == 1);
    auto rep = fixed_set_invariance(sl2, r, diag, h);
    CHECK(rep.invariant);
    CHECK(is_coideal(sl2, r, h));

    // Passing a subspace that is not the fixed set is rejected.
    CHECK_THROWS_AS(fixed_set_invariance(sl2, r, diag, Subspace::full(3)), std::invalid_argument);
    // Non-automorphisms are rejected up front.
    Matrix notauto = Matrix::identity(3);
    notauto.at(0, 0) = GaussRat(2);
    CHECK_THROWS_AS(cre_residual(sl2, r, notauto), std::invalid_argument);
}

TEST_CASE("coideal test sees failures") {
    LieAlgebra sl2 = make_sl2();
    Tensor2 r(3);
    r.at(0, 1) = GaussRat(1);  // H tensor X
    Subspace h = Subspace::span(3, {ev({0, 0, 1})});
    CHECK(!is_coideal(sl2, r, h));
    CHECK(is_coideal(sl2, sl2_standard_r(), h));
}

TEST_CASE("subalgebra and ideal predicates") {
    LieAlgebra sl2 = make_sl2();
    Subspace borel = Subspace::span(3, {ev({1, 0, 0}), ev({0, 1, 0})});
    CHECK(is_subalgebra(sl2, borel));
    CHECK(!is_ideal(sl2, borel));
    Subspace hx = Subspace::span(3, {ev({0, 1, 0}), ev({0, 0, 1})});
    CHECK(!is_subalgebra(sl2, hx));
    CHECK(is_ideal(sl2, Subspace::full(3)));
    CHECK(is_ideal(sl2, Subspace(3)));
}

TEST_CASE("sums and semidirect products") {
    LieAlgebra sl2 = make_sl2();
    LieAlgebra aff = make_aff1();
    LieAlgebra sum = direct_sum(sl2, aff);
    CHECK(sum.dim() == 5);
    CHECK(sum.validate().empty());
    CHECK(vec_is_zero(sum.bracket(embed_first(ev({0, 1, 0}), 5), embed_second(ev({1, 0}), 5))));

    LieAlgebra big = semidirect(sl2, coadjoint_rep(sl2));
    CHECK(big.dim() == 6);
    CHECK(big.validate().empty());
    // [X, H*] = ad*_X H* = -Y*.
    Vec xe = embed_first(ev({0, 1, 0}), 6);
    Vec hs = embed_second(ev({1, 0, 0}), 6);
    CHECK(big.bracket(xe, hs) == embed_second(ev({0, 0, -1}), 6));
    // [X, Y*] = 0 for this action.
    CHECK(vec_is_zero(big.bracket(xe, embed_second(ev({0, 0, 1}), 6))));

    // Module with its own bracket: action must be by derivations.
    LieAlgebra ab2 = abelian_algebra(2);
    Representation triv = zero_rep(sl2, 2);
    LieAlgebra sd = semidirect(sl2, triv, &ab2);
    CHECK(sd.validate().empty());
}

TEST_CASE("tensor actions obey the Leibniz expansion") {
    LieAlgebra aff = make_aff1();
    Tensor3 t(2);
    t.at(0, 0, 0) = GaussRat(1);
    Tensor3 acted = adjoint_act(aff, ev({0, 1}), t);
    // [e2, e1] = -e2 hits each leg once.
    Tensor3 expect(2);
    expect.at(1, 0, 0) = GaussRat(-1);
    expect.at(0, 1, 0) = GaussRat(-1);
    expect.at(0, 0, 1) = GaussRat(-1);
    CHECK(acted == expect);
}
