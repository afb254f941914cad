#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rblie/relativerb.hpp"
#include "rblie/rotabaxter.hpp"

namespace rblie {

/// A quadratic Rota-Baxter structure packaged with named candidate
/// reflection maps on it.
struct QuadraticWithReflections {
    QuadraticRB q;
    std::vector<std::pair<std::string, Matrix>> reflections;
};

/// The kinds of structure a worked example can carry.
using CatalogPayload =
    std::variant<QuadraticWithReflections, RotaBaxter, RelativeRB0, RelativeRBW, PreLie, PostLie>;

/// A named boolean claim about a payload, evaluated on demand through the
/// operations of the other modules.
struct ExpectedFact {
    std::string name;
    std::function<bool()> holds;
};

/// A worked example: a named payload plus the facts expected to hold of it.
/// The facts are the regression data; failing_facts re-evaluates all of them.
struct CatalogEntry {
    std::string name;
    CatalogPayload payload;
    std::vector<ExpectedFact> expected;
};

/// Names of the expected facts that do not hold (empty = entry is good).
std::vector<std::string> failing_facts(const CatalogEntry& entry);

/// sl(2,C) over Q(i) with basis H, X, Y ([H,X] = 2X, [H,Y] = -2Y,
/// [X,Y] = H), pairing S(aH+bX+cY, a'H+b'X+c'Y) = 8aa' + 4(bc'+cb'),
/// operator b(aH+bX+cY) = -(lambda/2)aH - lambda bX, and the
/// negative-transpose map H -> -H, X -> -Y, Y -> -X as candidate
/// reflection (it passes the relaxed-ad dialect, not the skew one).
/// The weight must be nonzero (std::invalid_argument).
CatalogEntry sl2_example(const GaussRat& lambda);

/// sl(n,C) viewed as a real Lie algebra of dimension 2(n^2-1), n in
/// {2,3,4}: basis = (skew-hermitian half, upper-triangular-real-diagonal
/// half), pairing S(X,Y) = Im tr(XY), operator b = -lambda times the
/// projection onto the second half (built entrywise and cross-checked
/// against the block projection), and the map X -> -conj(X)^T as skew
/// reflection.  All structure constants come out rational.
/// Throws std::invalid_argument on n out of range or zero weight.
CatalogEntry sln_realified(size_t n, const GaussRat& lambda);

/// The doubled structure on g (+) g with the slot swap as skew reflection,
/// built from an entry carrying a quadratic payload of nonzero weight
/// (std::invalid_argument otherwise).  The fixed set is the diagonal and
/// its orthogonal complement is an ideal of the descendent.
CatalogEntry direct_sum_swap(const CatalogEntry& base);

/// The negated identity operator at weight 1 on the given algebra.  The
/// induced tensor on g x| g* is the canonical pairing sum e_i (x) e_i*,
/// the descendent of the double is the opposite algebra plus an abelian
/// dual slot, and reflections are exactly the involutive automorphisms.
CatalogEntry minus_identity(const LieAlgebra& algebra, const std::string& label);

/// Every dimension-2 product table with coefficients in {-1, 0, 1} whose
/// associator is symmetric in the first two arguments, in enumeration
/// order (all coefficient tuples, last index fastest).
std::vector<PreLie> enumerate_small_prelie();

/// Every dimension-2 bracket-and-product table with coefficients in
/// {-1, 0, 1} passing both interaction axioms, in enumeration order
/// (bracket coefficients outermost).
std::vector<PostLie> enumerate_small_postlie();

/// The enumerated tables reduced to one representative per orbit of the
/// signed basis permutations (swap and sign flips), each packaged with its
/// regression facts.  A representative is the lexicographically greatest
/// table in its orbit, so the kept tables are bitwise stable.
std::vector<CatalogEntry> small_prelie_postlie();

/// Sizes of the exhaustive searches behind small_prelie_postlie, before
/// and after deduplication; frozen by the regression suite.
struct EnumerationCounts {
    size_t prelie_tables = 0;
    size_t prelie_classes = 0;
    size_t postlie_tables = 0;
    size_t postlie_classes = 0;
};

EnumerationCounts small_enumeration_counts();

/// The named worked examples at the given weight: the sl(2,C) entry, the
/// realified sl(2,C) and sl(3,C) entries, their doubled-swap companions,
/// and the negated identity on sl(2,C).  (The dimension-30 realified
/// sl(4,C) entry and the product tables are available through their own
/// constructors.)
std::vector<CatalogEntry> standard_catalog(const GaussRat& lambda);

}  // namespace rblie
