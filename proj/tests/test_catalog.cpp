#include "doctest.h"
#include "rblie/catalog.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using namespace rblie;

namespace {

Vec v6(std::initializer_list<std::pair<size_t, long>> entries) {
    Vec v(6);
    for (const auto& [k, val] : entries) v[k] = GaussRat(val);
    return v;
}

const QuadraticRB& quad_of(const CatalogEntry& e) {
    return std::get<QuadraticWithReflections>(e.payload).q;
}

const Matrix& first_reflection(const CatalogEntry& e) {
    return std::get<QuadraticWithReflections>(e.payload).reflections.at(0).second;
}

}  // namespace

TEST_CASE("two-dimensional product enumeration is frozen") {
    EnumerationCounts counts = small_enumeration_counts();
    CHECK(counts.prelie_tables == 173);
    CHECK(counts.prelie_classes == 32);
    CHECK(counts.postlie_tables == 337);
    CHECK(counts.postlie_classes == 58);

    std::vector<PreLie> pre = enumerate_small_prelie();
    std::vector<PostLie> post = enumerate_small_postlie();
    CHECK(pre.size() == counts.prelie_tables);
    CHECK(post.size() == counts.postlie_tables);
    for (const PreLie& p : pre) CHECK(p.is_valid());
    for (const PostLie& p : post) CHECK(p.is_valid());

    // Two known members: the zero product and the single idempotent
    // e0 > e0 = e0 (which is associative, hence passes the symmetry axiom).
    Tensor3 zero_table(2);
    Tensor3 idem(2);
    idem.at(0, 0, 0) = GaussRat(1);
    size_t zero_seen = 0, idem_seen = 0;
    for (const PreLie& p : pre) {
        if (p.mult == zero_table) ++zero_seen;
        if (p.mult == idem) ++idem_seen;
    }
    CHECK(zero_seen == 1);
    CHECK(idem_seen == 1);
}

TEST_CASE("canonical class entries are well formed and pass their facts") {
    std::vector<CatalogEntry> entries = small_prelie_postlie();
    CHECK(entries.size() == 90);
    CHECK(entries.front().name == "prelie-2d-00");
    CHECK(entries[31].name == "prelie-2d-31");
    CHECK(entries[32].name == "postlie-2d-00");
    CHECK(entries.back().name == "postlie-2d-57");

    std::set<std::string> names;
    for (const CatalogEntry& e : entries) names.insert(e.name);
    CHECK(names.size() == entries.size());

    // The class representatives keep both known members verbatim: the zero
    // table and the idempotent with coefficient +1 survive canonicalization.
    Tensor3 zero_table(2);
    Tensor3 idem(2);
    idem.at(0, 0, 0) = GaussRat(1);
    size_t zero_seen = 0, idem_seen = 0;
    for (size_t i = 0; i < 32; ++i) {
        const PreLie& p = std::get<PreLie>(entries[i].payload);
        if (p.mult == zero_table) ++zero_seen;
        if (p.mult == idem) ++idem_seen;
    }
    CHECK(zero_seen == 1);
    CHECK(idem_seen == 1);

    for (const CatalogEntry& e : entries) {
        INFO(e.name);
        CHECK(failing_facts(e).empty());
    }
}

TEST_CASE("three-dimensional quadratic entry matches its exact data") {
    CatalogEntry e = sl2_example(GaussRat(1));
    CHECK(e.name == "sl2-quadratic");
    const QuadraticRB& q = quad_of(e);
    const LieAlgebra& g = q.rb.algebra;

    CHECK(g.dim() == 3);
    CHECK((g.names() == std::vector<std::string>{"H", "X", "Y"}));
    CHECK((g.bracket_basis(0, 1) == Vec{GaussRat(0), GaussRat(2), GaussRat(0)}));
    CHECK((g.bracket_basis(0, 2) == Vec{GaussRat(0), GaussRat(0), GaussRat(-2)}));
    CHECK((g.bracket_basis(1, 2) == Vec{GaussRat(1), GaussRat(0), GaussRat(0)}));

    Matrix gram(3, 3);
    gram.at(0, 0) = GaussRat(8);
    gram.at(1, 2) = GaussRat(4);
    gram.at(2, 1) = GaussRat(4);
    CHECK((q.s.gram == gram));

    Matrix b(3, 3);
    b.at(0, 0) = GaussRat(-1, 2);
    b.at(1, 1) = GaussRat(-1);
    CHECK((q.rb.b == b));

    const Matrix& tau = first_reflection(e);
    Matrix tau_expect(3, 3);
    tau_expect.at(0, 0) = GaussRat(-1);
    tau_expect.at(1, 2) = GaussRat(-1);
    tau_expect.at(2, 1) = GaussRat(-1);
    CHECK((tau == tau_expect));

    // The induced invariant tensor, frozen entrywise.
    Tensor2 r = r_from_quadratic(q);
    Tensor2 r_expect(3);
    r_expect.at(0, 0) = GaussRat(1, 16);
    r_expect.at(1, 2) = GaussRat(1, 4);
    CHECK((r == r_expect));

    CHECK(failing_facts(e).empty());
    CHECK_THROWS_AS(sl2_example(GaussRat(0)), std::invalid_argument);
}

TEST_CASE("realified 2x2 entry matches the hand-computed structure") {
    CatalogEntry e = sln_realified(2, GaussRat(1));
    CHECK(e.name == "sl2-realified");
    const QuadraticRB& q = quad_of(e);
    const LieAlgebra& g = q.rb.algebra;

    CHECK(g.dim() == 6);
    CHECK((g.names() ==
           std::vector<std::string>{"ud1", "ua12", "us12", "bd1", "be12", "bi12"}));

    // Commutators of the six stacked 2x2 matrices, computed by hand from
    // matrix products: u-indices 0..2 span the skew-hermitian half, b-indices
    // 3..5 the upper-triangular half.
    CHECK((g.bracket_basis(0, 1) == v6({{2, 2}})));
    CHECK((g.bracket_basis(0, 2) == v6({{1, -2}})));
    CHECK(vec_is_zero(g.bracket_basis(0, 3)));
    CHECK((g.bracket_basis(0, 4) == v6({{5, 2}})));
    CHECK((g.bracket_basis(0, 5) == v6({{4, -2}})));
    CHECK((g.bracket_basis(1, 2) == v6({{0, 2}})));
    CHECK((g.bracket_basis(1, 3) == v6({{1, 2}, {4, -4}})));
    CHECK((g.bracket_basis(1, 4) == v6({{3, 1}})));
    CHECK((g.bracket_basis(1, 5) == v6({{0, 1}})));
    CHECK((g.bracket_basis(2, 3) == v6({{2, 2}, {5, -4}})));
    CHECK((g.bracket_basis(2, 4) == v6({{0, -1}})));
    CHECK((g.bracket_basis(2, 5) == v6({{3, 1}})));
    CHECK((g.bracket_basis(3, 4) == v6({{4, 2}})));
    CHECK((g.bracket_basis(3, 5) == v6({{5, 2}})));
    CHECK(vec_is_zero(g.bracket_basis(4, 5)));

    // Imaginary parts of trace products, hand-computed: both halves are
    // isotropic and pair with each other.
    Matrix gram(6, 6);
    auto sym = [&](size_t i, size_t j, long v) {
        gram.at(i, j) = GaussRat(v);
        gram.at(j, i) = GaussRat(v);
    };
    sym(0, 3, 2);
    sym(1, 5, -1);
    sym(2, 4, 1);
    CHECK((q.s.gram == gram));

    // The operator kills the skew-hermitian half and negates the other.
    Matrix b_expect(6, 6);
    for (size_t k = 3; k < 6; ++k) b_expect.at(k, k) = GaussRat(-1);
    CHECK((q.rb.b == b_expect));

    // Negated conjugate transpose in this basis: fixes the skew-hermitian
    // half, reflects the other half across it.
    const Matrix& tau = first_reflection(e);
    Matrix tau_expect = Matrix::identity(6);
    tau_expect.at(3, 3) = GaussRat(-1);
    tau_expect.at(4, 4) = GaussRat(-1);
    tau_expect.at(5, 5) = GaussRat(-1);
    tau_expect.at(1, 4) = GaussRat(1);
    tau_expect.at(2, 5) = GaussRat(1);
    CHECK((tau == tau_expect));

    CHECK(fixed_and_orthogonal(q, tau).h.dim() == 3);
    CHECK(failing_facts(e).empty());

    CHECK_THROWS_AS(sln_realified(2, GaussRat(0)), std::invalid_argument);
    CHECK_THROWS_AS(sln_realified(1, GaussRat(1)), std::invalid_argument);
    CHECK_THROWS_AS(sln_realified(5, GaussRat(1)), std::invalid_argument);
}

TEST_CASE("realified 3x3 entry has dimension sixteen and passes its facts") {
    CatalogEntry e = sln_realified(3, GaussRat(1));
    CHECK(e.name == "sl3-realified");
    const QuadraticRB& q = quad_of(e);
    CHECK(q.rb.algebra.dim() == 16);

    // Name layout: 2 diagonal + 3 + 3 off-diagonal per half.
    const auto& names = q.rb.algebra.names();
    CHECK(names[0] == "ud1");
    CHECK(names[4] == "ua23");
    CHECK(names[7] == "us23");
    CHECK(names[8] == "bd1");
    CHECK(names[15] == "bi23");

    // Spot value: [ud1, be12] = 2 bi12 (indices 0 and 10 -> 13).
    CHECK(names[10] == "be12");
    CHECK(names[13] == "bi12");
    Vec expect(16);
    expect[13] = GaussRat(2);
    CHECK((q.rb.algebra.bracket_basis(0, 10) == expect));

    CHECK(failing_facts(e).empty());
}

TEST_CASE("dimension-thirty realified entry passes its facts") {
    CatalogEntry e = sln_realified(4, GaussRat(2));
    const QuadraticRB& q = quad_of(e);
    CHECK(q.rb.algebra.dim() == 30);
    CHECK(fixed_and_orthogonal(q, first_reflection(e)).h.dim() == 15);
    CHECK(failing_facts(e).empty());
}

TEST_CASE("doubling with the swap map") {
    CatalogEntry base = sl2_example(GaussRat(2));
    CatalogEntry doubled = direct_sum_swap(base);
    CHECK(doubled.name == "sl2-quadratic-doubled-swap");
    CHECK(quad_of(doubled).rb.algebra.dim() == 6);
    CHECK(failing_facts(doubled).empty());

    // Doubling needs a quadratic payload.
    CatalogEntry mi = minus_identity(quad_of(base).rb.algebra, "sl2");
    CHECK_THROWS_AS(direct_sum_swap(mi), std::invalid_argument);
}

TEST_CASE("negated identity operator entries") {
    CatalogEntry base = sl2_example(GaussRat(1));
    CatalogEntry mi = minus_identity(quad_of(base).rb.algebra, "sl2");
    CHECK(mi.name == "minus-identity-sl2");
    CHECK(failing_facts(mi).empty());

    // On an abelian algebra the negation map also becomes a reflection, so
    // the iff-shaped fact is exercised from the other side.
    CatalogEntry flat = minus_identity(abelian_algebra(2), "abelian");
    CHECK(failing_facts(flat).empty());
}

TEST_CASE("standard catalog is green across weights") {
    const std::vector<std::string> expected_names{
        "sl2-quadratic",    "sl2-realified",
        "sl3-realified",    "sl2-quadratic-doubled-swap",
        "sl2-realified-doubled-swap", "minus-identity-sl2"};
    for (const GaussRat& lam :
         {GaussRat(1), GaussRat(-1), GaussRat(2), GaussRat(1, 2)}) {
        std::vector<CatalogEntry> entries = standard_catalog(lam);
        REQUIRE(entries.size() == expected_names.size());
        for (size_t i = 0; i < entries.size(); ++i) {
            INFO(entries[i].name << " at weight " << lam.str());
            CHECK(entries[i].name == expected_names[i]);
            CHECK(failing_facts(entries[i]).empty());
        }
    }
}
