#include "doctest.h"
#include "rblie/matrix.hpp"
#include "rblie/rational.hpp"
#include "rblie/subspace.hpp"
#include "rblie/tensor.hpp"

using namespace rblie;

TEST_CASE("scalar parse/print round-trips") {
    const char* forms[] = {"0",   "3",        "-3",  "1/2",       "-7/3", "i",
                           "-i",  "3*i",      "-3*i", "2/5*i",    "1/2-2/3*i",
                           "-7/3+i", "1+i",   "-1-i", "1/10+7/10*i"};
    for (const char* f : forms) {
        GaussRat q = GaussRat::parse(f);
        CHECK(q.str() == f);
        CHECK(GaussRat::parse(q.str()) == q);
    }
    CHECK(GaussRat::parse(" 1/2 ") == frac(1, 2));
    CHECK(GaussRat::parse("2/4") == frac(1, 2));
}

TEST_CASE("scalar parse rejects malformed input") {
    const char* bad[] = {"", "1//2", "2i", "i*i", "1/0", "+-1", "1+", "*i", "1 2", "x", "-2/-4"};
    for (const char* f : bad) CHECK_THROWS_AS(GaussRat::parse(f), std::invalid_argument);
}

TEST_CASE("scalar field arithmetic") {
    GaussRat i = GaussRat::i();
    CHECK((GaussRat(1) + i) * (GaussRat(1) - i) == GaussRat(2));
    CHECK(i * i == GaussRat(-1));
    CHECK((GaussRat(1) + GaussRat(2) * i) / (GaussRat(3) - i) == GaussRat::parse("1/10+7/10*i"));
    CHECK(frac(1, 2) + frac(1, 3) == frac(5, 6));
    CHECK(GaussRat::parse("1/2-2/3*i").conj() == GaussRat::parse("1/2+2/3*i"));
    CHECK_THROWS_AS(GaussRat().inv(), std::domain_error);
    GaussRat z = GaussRat::parse("3/7-2/9*i");
    CHECK(z * z.inv() == GaussRat(1));
}

TEST_CASE("rref, rank, kernel over the complex rationals") {
    GaussRat i = GaussRat::i();
    Matrix m{{GaussRat(1), i}, {i, GaussRat(-1)}};
    size_t rk = 0;
    Matrix e = rref(m, &rk);
    CHECK(rk == 1);
    CHECK((e == Matrix{{GaussRat(1), i}, {GaussRat(0), GaussRat(0)}}));
    Matrix k = kernel_basis(m);
    CHECK(k.rows() == 1);
    // kernel spanned by (-i, 1), normalized with leading one.
    CHECK(vec_is_zero(vec_sub(m.apply(k.row(0)), Vec(2))));
}

TEST_CASE("solve and inverse") {
    Matrix g{{GaussRat(8), GaussRat(0), GaussRat(0)},
             {GaussRat(0), GaussRat(0), GaussRat(4)},
             {GaussRat(0), GaussRat(4), GaussRat(0)}};
    auto x = solve(g, {GaussRat(1), GaussRat(0), GaussRat(0)});
    REQUIRE(x.has_value());
    CHECK((*x == Vec{frac(1, 8), GaussRat(0), GaussRat(0)}));
    auto gi = inverse(g);
    REQUIRE(gi.has_value());
    CHECK((*gi == Matrix{{frac(1, 8), GaussRat(0), GaussRat(0)},
                         {GaussRat(0), GaussRat(0), frac(1, 4)},
                         {GaussRat(0), frac(1, 4), GaussRat(0)}}));
    Matrix upper{{GaussRat(1), GaussRat::i()}, {GaussRat(0), GaussRat(1)}};
    CHECK((*inverse(upper) == Matrix{{GaussRat(1), -GaussRat::i()}, {GaussRat(0), GaussRat(1)}}));
    Matrix sing{{GaussRat(1), GaussRat(0)}, {GaussRat(1), GaussRat(0)}};
    CHECK(!inverse(sing).has_value());
    CHECK(!solve(sing, {GaussRat(1), GaussRat(2)}).has_value());
}

TEST_CASE("subspace lattice") {
    Subspace u = Subspace::span(3, {{GaussRat(1), GaussRat(1), GaussRat(0)}, {GaussRat(0), GaussRat(1), GaussRat(0)}});
    CHECK(u.dim() == 2);
    CHECK(u.contains(Vec{GaussRat(1), GaussRat(0), GaussRat(0)}));
    CHECK(!u.contains(Vec{GaussRat(0), GaussRat(0), GaussRat(1)}));
    Subspace w = Subspace::span(3, {{GaussRat(0), GaussRat(0), GaussRat(1)}});
    CHECK(u.intersect(w).dim() == 0);
    CHECK((u.sum(w) == Subspace::full(3)));
    Subspace ann = u.annihilator();
    CHECK(ann.dim() == 1);
    CHECK(ann.annihilator() == u);
}

TEST_CASE("fixed and eigen spaces") {
    Matrix tau{{GaussRat(1), GaussRat(0)}, {GaussRat(0), GaussRat(-1)}};
    Subspace fix = fixed_space(tau);
    CHECK(fix.dim() == 1);
    CHECK(fix.contains(Vec{GaussRat(1), GaussRat(0)}));
    Subspace neg = eigenspace(tau, GaussRat(-1));
    CHECK(neg.dim() == 1);
    CHECK(neg.contains(Vec{GaussRat(0), GaussRat(1)}));
}

TEST_CASE("orthogonal complement under a Gram matrix") {
    // Hyperbolic plane: e1, e2 isotropic, pairing 1.
    Matrix g{{GaussRat(0), GaussRat(1)}, {GaussRat(1), GaussRat(0)}};
    Subspace e1 = Subspace::span(2, {{GaussRat(1), GaussRat(0)}});
    Subspace perp = e1.s_orthogonal(g);
    CHECK(perp == e1);  // isotropic line is its own orthogonal
}

TEST_CASE("tensor views and operator correspondence") {
    Tensor2 t(3);
    t.at(0, 1) = GaussRat(1);          // e1 tensor e2
    t.at(2, 2) = frac(-2, 3);
    Matrix m = operator_of(t);
    CHECK(m.at(1, 0) == GaussRat(1));  // image of first dual vector is e2
    CHECK(m.at(2, 2) == frac(-2, 3));
    CHECK(tensor_of(m) == t);
    CHECK(transpose21(transpose21(t)) == t);
    Tensor2 s = transpose21(t);
    CHECK(s.at(1, 0) == GaussRat(1));

    Tensor3 w(2);
    w.at(0, 1, 1) = GaussRat::i();
    Tensor3 rev = reverse13(w);
    CHECK(rev.at(1, 1, 0) == GaussRat::i());
    CHECK(reverse13(rev) == w);
}
