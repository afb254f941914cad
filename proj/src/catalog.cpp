#include "rblie/catalog.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rblie {

namespace {

// ---------------------------------------------------------------------------
// Realified complex matrix algebras.

struct ComplexBasis {
    std::vector<Matrix> mats;  // complex n x n matrices
    std::vector<std::string> names;
};

// Basis of sl(n,C) as a real space: first the skew-hermitian traceless half
// (i-diagonals, antisymmetric pairs, i-symmetric pairs), then the
// upper-triangular half with real diagonal (diagonals, unit entries,
// i-unit entries).  The two halves are swapped into each other by
// X -> -conj(X)^T up to lower-triangular corrections.
ComplexBasis realified_basis(size_t n) {
    ComplexBasis out;
    const GaussRat one(1);
    const GaussRat im = GaussRat::i();
    auto push = [&](Matrix m, std::string name) {
        out.mats.push_back(std::move(m));
        out.names.push_back(std::move(name));
    };
    for (size_t j = 0; j + 1 < n; ++j) {
        Matrix m(n, n);
        m.at(j, j) = im;
        m.at(j + 1, j + 1) = -im;
        push(std::move(m), "ud" + std::to_string(j + 1));
    }
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
            Matrix m(n, n);
            m.at(j, k) = one;
            m.at(k, j) = -one;
            push(std::move(m), "ua" + std::to_string(j + 1) + std::to_string(k + 1));
        }
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
            Matrix m(n, n);
            m.at(j, k) = im;
            m.at(k, j) = im;
            push(std::move(m), "us" + std::to_string(j + 1) + std::to_string(k + 1));
        }
    for (size_t j = 0; j + 1 < n; ++j) {
        Matrix m(n, n);
        m.at(j, j) = one;
        m.at(j + 1, j + 1) = -one;
        push(std::move(m), "bd" + std::to_string(j + 1));
    }
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
            Matrix m(n, n);
            m.at(j, k) = one;
            push(std::move(m), "be" + std::to_string(j + 1) + std::to_string(k + 1));
        }
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
            Matrix m(n, n);
            m.at(j, k) = im;
            push(std::move(m), "bi" + std::to_string(j + 1) + std::to_string(k + 1));
        }
    return out;
}

// A complex matrix as a real coordinate vector: all real parts, then all
// imaginary parts.
Vec stacked(const Matrix& m) {
    const size_t n = m.rows();
    Vec v(2 * n * n);
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) {
            v[p * n + q] = GaussRat(m.at(p, q).re());
            v[n * n + p * n + q] = GaussRat(m.at(p, q).im());
        }
    return v;
}

GaussRat trace_product(const Matrix& a, const Matrix& b) {
    GaussRat t;
    for (size_t p = 0; p < a.rows(); ++p)
        for (size_t q = 0; q < a.cols(); ++q) t += a.at(p, q) * b.at(q, p);
    return t;
}

// Entrywise projection rule: real part on the diagonal, x_ij + conj(x_ji)
// above it, zero below.  On a traceless matrix this is the projection onto
// the upper-triangular half along the skew-hermitian half.
Matrix projection_upper(const Matrix& x) {
    const size_t n = x.rows();
    Matrix a(n, n);
    for (size_t i = 0; i < n; ++i) {
        a.at(i, i) = GaussRat(x.at(i, i).re());
        for (size_t j = i + 1; j < n; ++j) a.at(i, j) = x.at(i, j) + x.at(j, i).conj();
    }
    return a;
}

Matrix conj_transpose_neg(const Matrix& x) {
    const size_t n = x.rows();
    Matrix t(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t.at(i, j) = -x.at(j, i).conj();
    return t;
}

// ---------------------------------------------------------------------------
// Exhaustive dimension-2 product tables over {-1, 0, 1}.

using Table = std::array<int, 8>;  // t[(i*2 + j)*2 + k] = e_k part of e_i > e_j

int table_at(const Table& t, int i, int j, int k) { return t[(i * 2 + j) * 2 + k]; }

Table decode_table(long code) {
    Table t{};
    for (int digit = 7; digit >= 0; --digit) {
        t[digit] = static_cast<int>(code % 3) - 1;
        code /= 3;
    }
    return t;
}

using IntVec = std::array<int, 2>;

IntVec iv_add(IntVec a, IntVec b) { return {a[0] + b[0], a[1] + b[1]}; }
IntVec iv_sub(IntVec a, IntVec b) { return {a[0] - b[0], a[1] - b[1]}; }
IntVec iv_scale(int c, IntVec a) { return {c * a[0], c * a[1]}; }

IntVec table_prod(const Table& m, int i, int j) {
    return {table_at(m, i, j, 0), table_at(m, i, j, 1)};
}
// x > e_j for a coordinate vector x.
IntVec table_prod_left(const Table& m, IntVec x, int j) {
    return iv_add(iv_scale(x[0], table_prod(m, 0, j)), iv_scale(x[1], table_prod(m, 1, j)));
}
// e_i > y for a coordinate vector y.
IntVec table_prod_right(const Table& m, int i, IntVec y) {
    return iv_add(iv_scale(y[0], table_prod(m, i, 0)), iv_scale(y[1], table_prod(m, i, 1)));
}

// Associator symmetric in the first two arguments, checked on the only
// nontrivial basis pair (e0, e1) against every (k, component).
bool prelie_table_ok(const Table& m) {
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            int v = 0;
            for (int mid = 0; mid < 2; ++mid)
                v += table_at(m, 0, 1, mid) * table_at(m, mid, k, l) -
                     table_at(m, 1, k, mid) * table_at(m, 0, mid, l) -
                     table_at(m, 1, 0, mid) * table_at(m, mid, k, l) +
                     table_at(m, 0, k, mid) * table_at(m, 1, mid, l);
            if (v != 0) return false;
        }
    return true;
}

// Bracket [e0, e1] = al*e0 + be*e1; [x, e1] and [e0, y] for vectors.
IntVec table_brack_left(IntVec x, int k, int al, int be) {
    return k == 1 ? iv_scale(x[0], {al, be}) : iv_scale(-x[1], {al, be});
}
IntVec table_brack_right(int j, IntVec y, int al, int be) {
    return j == 0 ? iv_scale(y[1], {al, be}) : iv_scale(-y[0], {al, be});
}

// Both interaction axioms: the product acts by derivations of the bracket,
// and left multiplication is an action of the combined bracket.
bool postlie_table_ok(const Table& m, int al, int be) {
    for (int i = 0; i < 2; ++i) {
        IntVec lhs = table_prod_right(m, i, {al, be});
        IntVec rhs = iv_add(table_brack_left(table_prod(m, i, 0), 1, al, be),
                            table_brack_right(0, table_prod(m, i, 1), al, be));
        if (lhs != rhs) return false;
    }
    IntVec u = iv_add(IntVec{al, be}, iv_sub(table_prod(m, 0, 1), table_prod(m, 1, 0)));
    for (int k = 0; k < 2; ++k) {
        IntVec lhs = table_prod_left(m, u, k);
        IntVec rhs = iv_sub(table_prod_right(m, 0, table_prod(m, 1, k)),
                            table_prod_right(m, 1, table_prod(m, 0, k)));
        if (lhs != rhs) return false;
    }
    return true;
}

// Conjugation by the signed basis permutation P e_i = s_i e_{pi(i)}:
// m'[i][j][k] = s_i s_j s_k m[pi(i)][pi(j)][pi(k)].
Table transform_table(const Table& m, int swapped, int s0, int s1) {
    const int s[2] = {s0, s1};
    auto pi = [&](int i) { return swapped ? 1 - i : i; };
    Table out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                out[(i * 2 + j) * 2 + k] = s[i] * s[j] * s[k] * table_at(m, pi(i), pi(j), pi(k));
    return out;
}

// The bracket coefficients transform the same way; the slot swap negates
// them on top of relabeling.
IntVec transform_bracket(int al, int be, int swapped, int s0, int s1) {
    const int s[2] = {s0, s1};
    const IntVec c{al, be};
    IntVec out{};
    for (int k = 0; k < 2; ++k) {
        int base = swapped ? -c[1 - k] : c[k];
        out[k] = s0 * s1 * s[k] * base;
    }
    return out;
}

bool prelie_table_canonical(const Table& m) {
    for (int swapped = 0; swapped < 2; ++swapped)
        for (int s0 = -1; s0 <= 1; s0 += 2)
            for (int s1 = -1; s1 <= 1; s1 += 2)
                if (transform_table(m, swapped, s0, s1) > m) return false;
    return true;
}

struct PostTable {
    int al = 0;
    int be = 0;
    Table m{};
};

bool postlie_table_canonical(const PostTable& t) {
    std::array<int, 10> key{};
    key[0] = t.al;
    key[1] = t.be;
    for (int d = 0; d < 8; ++d) key[2 + d] = t.m[d];
    for (int swapped = 0; swapped < 2; ++swapped)
        for (int s0 = -1; s0 <= 1; s0 += 2)
            for (int s1 = -1; s1 <= 1; s1 += 2) {
                Table tm = transform_table(t.m, swapped, s0, s1);
                IntVec tb = transform_bracket(t.al, t.be, swapped, s0, s1);
                std::array<int, 10> other{};
                other[0] = tb[0];
                other[1] = tb[1];
                for (int d = 0; d < 8; ++d) other[2 + d] = tm[d];
                if (other > key) return false;
            }
    return true;
}

std::vector<Table> prelie_tables_raw() {
    std::vector<Table> out;
    for (long code = 0; code < 6561; ++code) {
        Table m = decode_table(code);
        if (prelie_table_ok(m)) out.push_back(m);
    }
    return out;
}

std::vector<PostTable> postlie_tables_raw() {
    std::vector<PostTable> out;
    for (int al = -1; al <= 1; ++al)
        for (int be = -1; be <= 1; ++be)
            for (long code = 0; code < 6561; ++code) {
                Table m = decode_table(code);
                if (postlie_table_ok(m, al, be)) out.push_back({al, be, m});
            }
    return out;
}

PreLie prelie_from(const Table& m) {
    Tensor3 mult(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) mult.at(i, j, k) = GaussRat(table_at(m, i, j, k));
    return PreLie(2, mult);
}

PostLie postlie_from(const PostTable& t) {
    LieAlgebra lie(2);
    lie.set_bracket(0, 1, Vec{GaussRat(t.al), GaussRat(t.be)});
    Tensor3 mult(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) mult.at(i, j, k) = GaussRat(table_at(t.m, i, j, k));
    return PostLie(lie, mult);
}

std::string two_digits(size_t v) {
    std::string s = std::to_string(v);
    return s.size() < 2 ? "0" + s : s;
}

}  // namespace

std::vector<std::string> failing_facts(const CatalogEntry& entry) {
    std::vector<std::string> out;
    for (const ExpectedFact& fact : entry.expected)
        if (!fact.holds()) out.push_back(fact.name);
    return out;
}

CatalogEntry sl2_example(const GaussRat& lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("weight must be nonzero");

    LieAlgebra g(3, {"H", "X", "Y"});
    g.set_bracket(0, 1, Vec{GaussRat(0), GaussRat(2), GaussRat(0)});
    g.set_bracket(0, 2, Vec{GaussRat(0), GaussRat(0), GaussRat(-2)});
    g.set_bracket(1, 2, Vec{GaussRat(1), GaussRat(0), GaussRat(0)});

    Matrix gram(3, 3);
    gram.at(0, 0) = GaussRat(8);
    gram.at(1, 2) = GaussRat(4);
    gram.at(2, 1) = GaussRat(4);

    Matrix b(3, 3);
    b.at(0, 0) = -(lambda * GaussRat(1, 2));
    b.at(1, 1) = -lambda;

    Matrix tau(3, 3);
    tau.at(0, 0) = GaussRat(-1);
    tau.at(1, 2) = GaussRat(-1);
    tau.at(2, 1) = GaussRat(-1);

    QuadraticRB q(RotaBaxter(g, b, lambda), BilinearForm(g, gram));
    ReflectionReport rep = reflection_report(q, tau);

    CatalogEntry entry{"sl2-quadratic",
                       QuadraticWithReflections{q, {{"negative-transpose", tau}}},
                       {}};
    auto& fx = entry.expected;
    fx.push_back({"quadratic-valid", [q] { return q.validate().empty(); }});
    fx.push_back({"descendent-brackets", [q, lambda] {
                      LieAlgebra desc = descendent(q.rb);
                      return desc.bracket_basis(0, 1) == Vec{GaussRat(0), -lambda, GaussRat(0)} &&
                             desc.bracket_basis(0, 2) == Vec{GaussRat(0), GaussRat(0), -lambda} &&
                             vec_is_zero(desc.bracket_basis(1, 2));
                  }});
    fx.push_back({"pairing-symmetric", [rep] { return rep.symmetric_pairing; }});
    fx.push_back({"operator-residual-lambda-scaled", [rep, tau, lambda] {
                      return rep.symmetric_residual == lambda * (Matrix::identity(3) - tau);
                  }});
    fx.push_back({"relaxed-ad-reflection", [rep] { return rep.passes("relaxed-ad"); }});
    fx.push_back({"fixed-set-antisymmetric-line", [q, tau] {
                      FixedOrthogonal fo = fixed_and_orthogonal(q, tau);
                      return fo.h.dim() == 1 &&
                             fo.h.contains(Vec{GaussRat(0), GaussRat(1), GaussRat(-1)});
                  }});
    fx.push_back({"orthogonal-closed-not-ideal", [q, tau] {
                      OrthogonalFixedReport r = orthogonal_fixed_report(q, tau);
                      return r.h0_descendent_closed && !r.h0_descendent_ideal;
                  }});
    fx.push_back({"non-ideal-witness", [q, tau, lambda] {
                      FixedOrthogonal fo = fixed_and_orthogonal(q, tau);
                      Vec w = descendent(q.rb).bracket(Vec{GaussRat(1), GaussRat(1), GaussRat(1)},
                                                       Vec{GaussRat(0), GaussRat(1), GaussRat(0)});
                      return w == Vec{GaussRat(0), -lambda, GaussRat(0)} && !fo.h0.contains(w);
                  }});
    fx.push_back({"r-matrix-cybe-zero", [q] {
                      return cybe_bracket(q.rb.algebra, r_from_quadratic(q)).is_zero();
                  }});
    fx.push_back({"r-matrix-factorizable", [q] {
                      return symmetric_invariance(q.rb.algebra, r_from_quadratic(q))
                                 .classification == "factorizable";
                  }});
    fx.push_back({"weight-negation-valid", [q] { return weight_negation(q.rb).validate().empty(); }});
    return entry;
}

CatalogEntry sln_realified(size_t n, const GaussRat& lambda) {
    if (n < 2 || n > 4) throw std::invalid_argument("matrix size must be 2, 3, or 4");
    if (lambda.is_zero()) throw std::invalid_argument("weight must be nonzero");

    ComplexBasis basis = realified_basis(n);
    const size_t d = basis.mats.size();
    const size_t half = d / 2;

    std::vector<std::pair<size_t, size_t>> pairs;
    pairs.reserve(d * (d - 1) / 2);
    for (size_t a = 0; a < d; ++a)
        for (size_t c = a + 1; c < d; ++c) pairs.emplace_back(a, c);

    // One row reduction decomposes every needed image over the basis:
    // columns are the stacked basis, then all commutators, then the
    // projection images, then the conjugate-transpose images.
    const size_t stacked_dim = 2 * n * n;
    Matrix sheet(stacked_dim, d + pairs.size() + 2 * d);
    auto set_col = [&](size_t col, const Vec& v) {
        for (size_t r = 0; r < stacked_dim; ++r) sheet.at(r, col) = v[r];
    };
    for (size_t a = 0; a < d; ++a) set_col(a, stacked(basis.mats[a]));
    for (size_t idx = 0; idx < pairs.size(); ++idx) {
        const Matrix& ma = basis.mats[pairs[idx].first];
        const Matrix& mc = basis.mats[pairs[idx].second];
        set_col(d + idx, stacked(ma * mc - mc * ma));
    }
    for (size_t a = 0; a < d; ++a)
        set_col(d + pairs.size() + a, stacked(projection_upper(basis.mats[a])));
    for (size_t a = 0; a < d; ++a)
        set_col(d + pairs.size() + d + a, stacked(conj_transpose_neg(basis.mats[a])));

    size_t rk = 0;
    Matrix reduced = rref(sheet, &rk);
    if (rk != d) throw std::logic_error("images do not lie in the span of the basis");
    auto coeffs = [&](size_t col) {
        Vec out(d);
        for (size_t k = 0; k < d; ++k) out[k] = reduced.at(k, col);
        return out;
    };

    LieAlgebra g(d, basis.names);
    for (size_t idx = 0; idx < pairs.size(); ++idx)
        g.set_bracket(pairs[idx].first, pairs[idx].second, coeffs(d + idx));

    Matrix b(d, d);
    Matrix tau(d, d);
    for (size_t a = 0; a < d; ++a) {
        Vec pcol = coeffs(d + pairs.size() + a);
        Vec tcol = coeffs(d + pairs.size() + d + a);
        for (size_t k = 0; k < d; ++k) {
            b.at(k, a) = -(lambda * pcol[k]);
            tau.at(k, a) = tcol[k];
        }
    }

    Matrix gram(d, d);
    for (size_t a = 0; a < d; ++a)
        for (size_t c = a; c < d; ++c) {
            GaussRat v(trace_product(basis.mats[a], basis.mats[c]).im());
            gram.at(a, c) = v;
            gram.at(c, a) = v;
        }

    QuadraticRB q(RotaBaxter(g, b, lambda), BilinearForm(g, gram));

    CatalogEntry entry{"sl" + std::to_string(n) + "-realified",
                       QuadraticWithReflections{q, {{"conjugate-transpose-negated", tau}}},
                       {}};
    auto& fx = entry.expected;
    fx.push_back({"algebra-valid", [q] { return q.rb.algebra.is_valid(); }});
    fx.push_back({"rational-structure-constants", [q, d] {
                      for (size_t i = 0; i < d; ++i)
                          for (size_t j = 0; j < d; ++j)
                              for (size_t k = 0; k < d; ++k)
                                  if (!q.rb.algebra.c_at(i, j, k).is_real()) return false;
                      return true;
                  }});
    fx.push_back({"quadratic-valid", [q] { return q.validate().empty(); }});
    fx.push_back({"pairing-isotropic-halves", [q, half, d] {
                      for (size_t a = 0; a < half; ++a)
                          for (size_t c = 0; c < half; ++c)
                              if (!q.s.gram.at(a, c).is_zero()) return false;
                      for (size_t a = half; a < d; ++a)
                          for (size_t c = half; c < d; ++c)
                              if (!q.s.gram.at(a, c).is_zero()) return false;
                      return true;
                  }});
    fx.push_back({"operator-kills-unitary-half", [q, half, d] {
                      for (size_t k = 0; k < d; ++k)
                          for (size_t a = 0; a < half; ++a)
                              if (!q.rb.b.at(k, a).is_zero()) return false;
                      return true;
                  }});
    fx.push_back({"operator-is-scaled-projection", [q, half, d, lambda] {
                      Matrix expect(d, d);
                      for (size_t k = half; k < d; ++k) expect.at(k, k) = -lambda;
                      return q.rb.b == expect;
                  }});
    fx.push_back({"skew-reflection", [q, tau] { return reflection_report(q, tau).passes("skew"); }});
    fx.push_back({"fixed-set-dimension", [q, tau, half] {
                      return fixed_and_orthogonal(q, tau).h.dim() == half;
                  }});
    fx.push_back({"orthogonal-equals-fixed", [q, tau] {
                      return fixed_and_orthogonal(q, tau).h0_equals_h;
                  }});
    fx.push_back({"orthogonal-ideal", [q, tau] {
                      return orthogonal_fixed_report(q, tau).h0_descendent_ideal;
                  }});
    fx.push_back({"descendent-split-brackets", [q, half, d, lambda] {
                      LieAlgebra desc = descendent(q.rb);
                      const LieAlgebra& g0 = q.rb.algebra;
                      for (size_t a = 0; a < d; ++a)
                          for (size_t c = a + 1; c < d; ++c) {
                              Vec want(d);
                              if (a < half && c < half)
                                  want = vec_scale(lambda, g0.bracket_basis(a, c));
                              else if (a >= half && c >= half)
                                  want = vec_scale(-lambda, g0.bracket_basis(a, c));
                              if (desc.bracket_basis(a, c) != want) return false;
                          }
                      return true;
                  }});
    if (n <= 3) {
        // The tensor check costs the sixth power of the dimension; at n = 4
        // (dimension 30) it is left to callers with time to spend.
        fx.push_back({"r-matrix-cybe-zero", [q] {
                          return cybe_bracket(q.rb.algebra, r_from_quadratic(q)).is_zero();
                      }});
        fx.push_back({"r-matrix-factorizable", [q] {
                          return symmetric_invariance(q.rb.algebra, r_from_quadratic(q))
                                     .classification == "factorizable";
                      }});
    }
    fx.push_back({"weight-negation-valid", [q] { return weight_negation(q.rb).validate().empty(); }});
    return entry;
}

CatalogEntry direct_sum_swap(const CatalogEntry& base) {
    const auto* quad = std::get_if<QuadraticWithReflections>(&base.payload);
    if (!quad) throw std::invalid_argument("base entry does not carry a quadratic structure");
    const QuadraticRB& q = quad->q;
    if (q.rb.lambda.is_zero()) throw std::invalid_argument("weight must be nonzero");

    QuadraticRB dq = doubled_qrb(q);
    Matrix swap = doubled_reflection(q);
    const size_t n = q.rb.algebra.dim();

    CatalogEntry entry{base.name + "-doubled-swap",
                       QuadraticWithReflections{dq, {{"slot-swap", swap}}},
                       {}};
    auto& fx = entry.expected;
    fx.push_back({"doubled-valid", [dq] { return dq.validate().empty(); }});
    fx.push_back({"swap-skew-reflection",
                  [dq, swap] { return reflection_report(dq, swap).passes("skew"); }});
    fx.push_back({"pairing-split-difference", [dq, q] {
                      return dq.s.gram == block_diag(q.s.gram, GaussRat(-1) * q.s.gram);
                  }});
    fx.push_back({"fixed-set-diagonal", [dq, swap, n] {
                      FixedOrthogonal fo = fixed_and_orthogonal(dq, swap);
                      if (fo.h.dim() != n) return false;
                      for (size_t i = 0; i < n; ++i) {
                          Vec v(2 * n);
                          v[i] = GaussRat(1);
                          v[n + i] = GaussRat(1);
                          if (!fo.h.contains(v)) return false;
                      }
                      return true;
                  }});
    fx.push_back({"orthogonal-equals-fixed",
                  [dq, swap] { return fixed_and_orthogonal(dq, swap).h0_equals_h; }});
    fx.push_back({"orthogonal-ideal",
                  [dq, swap] { return orthogonal_fixed_report(dq, swap).h0_descendent_ideal; }});
    fx.push_back({"r-matrix-cybe-zero", [dq] {
                      return cybe_bracket(dq.rb.algebra, r_from_quadratic(dq)).is_zero();
                  }});
    fx.push_back(
        {"weight-negation-valid", [dq] { return weight_negation(dq.rb).validate().empty(); }});
    return entry;
}

CatalogEntry minus_identity(const LieAlgebra& algebra, const std::string& label) {
    const size_t n = algebra.dim();
    RotaBaxter rb(algebra, GaussRat(-1) * Matrix::identity(n), GaussRat(1));

    CatalogEntry entry{"minus-identity-" + label, rb, {}};
    auto& fx = entry.expected;
    fx.push_back({"operator-identity-holds", [rb] { return rb.validate().empty(); }});
    fx.push_back({"semidirect-tensor-is-pairing", [rb, n] {
                      Tensor2 expect(2 * n);
                      for (size_t i = 0; i < n; ++i) expect.at(i, n + i) = GaussRat(1);
                      return r_semidirect(rb) == expect;
                  }});
    fx.push_back({"double-descendent-split", [rb, n] {
                      LieAlgebra opp(n, rb.algebra.names());
                      for (size_t i = 0; i < n; ++i)
                          for (size_t j = i + 1; j < n; ++j)
                              opp.set_bracket(
                                  i, j, vec_scale(GaussRat(-1), rb.algebra.bracket_basis(i, j)));
                      LieAlgebra expect = direct_sum(opp, abelian_algebra(n));
                      return descendent(semidirect_quadratic(rb).rb).c() == expect.c();
                  }});
    fx.push_back({"double-cybe-zero", [rb] {
                      QuadraticRB big = semidirect_quadratic(rb);
                      return cybe_bracket(big.rb.algebra, r_semidirect(rb)).is_zero();
                  }});
    fx.push_back({"identity-map-reflection", [rb, n] {
                      return rb_reflection_report(rb, Matrix::identity(n)).is_reflection();
                  }});
    fx.push_back({"negation-reflection-iff-abelian", [rb, n] {
                      return rb_reflection_report(rb, GaussRat(-1) * Matrix::identity(n))
                                 .is_reflection() == rb.algebra.is_abelian();
                  }});
    fx.push_back(
        {"weight-negation-valid", [rb] { return weight_negation(rb).validate().empty(); }});
    return entry;
}

std::vector<PreLie> enumerate_small_prelie() {
    std::vector<PreLie> out;
    for (const Table& m : prelie_tables_raw()) out.push_back(prelie_from(m));
    return out;
}

std::vector<PostLie> enumerate_small_postlie() {
    std::vector<PostLie> out;
    for (const PostTable& t : postlie_tables_raw()) out.push_back(postlie_from(t));
    return out;
}

std::vector<CatalogEntry> small_prelie_postlie() {
    std::vector<CatalogEntry> out;
    size_t idx = 0;
    for (const Table& m : prelie_tables_raw()) {
        if (!prelie_table_canonical(m)) continue;
        PreLie p = prelie_from(m);
        CatalogEntry entry{"prelie-2d-" + two_digits(idx), p, {}};
        entry.expected.push_back({"axioms-exact", [p] { return p.is_valid(); }});
        entry.expected.push_back(
            {"identity-relative-valid", [p] { return as_relative(p).is_valid(); }});
        entry.expected.push_back({"zero-weight-solution", [p] {
                                      RelativeZeroReport r = relative_zero_report(as_relative(p));
                                      return r.module_valid && r.action_valid &&
                                             r.t_homomorphism && r.r_skew && r.cybe_zero &&
                                             r.dual_matches_negated;
                                  }});
        out.push_back(std::move(entry));
        ++idx;
    }
    idx = 0;
    for (const PostTable& t : postlie_tables_raw()) {
        if (!postlie_table_canonical(t)) continue;
        PostLie p = postlie_from(t);
        CatalogEntry entry{"postlie-2d-" + two_digits(idx), p, {}};
        entry.expected.push_back({"axioms-exact", [p] { return p.is_valid(); }});
        entry.expected.push_back({"subadjacent-valid", [p] { return subadjacent(p).is_valid(); }});
        entry.expected.push_back(
            {"identity-relative-valid", [p] { return as_relative(p).is_valid(); }});
        entry.expected.push_back({"double-solution-cybe", [p] {
                                      RelativeRBW x = as_relative(p);
                                      const LieAlgebra big =
                                          semidirect_quadratic(joined_operator(x)).rb.algebra;
                                      return cybe_bracket(big, r_joined(x)).is_zero();
                                  }});
        out.push_back(std::move(entry));
        ++idx;
    }
    return out;
}

EnumerationCounts small_enumeration_counts() {
    EnumerationCounts out;
    for (const Table& m : prelie_tables_raw()) {
        ++out.prelie_tables;
        if (prelie_table_canonical(m)) ++out.prelie_classes;
    }
    for (const PostTable& t : postlie_tables_raw()) {
        ++out.postlie_tables;
        if (postlie_table_canonical(t)) ++out.postlie_classes;
    }
    return out;
}

std::vector<CatalogEntry> standard_catalog(const GaussRat& lambda) {
    CatalogEntry sl2 = sl2_example(lambda);
    CatalogEntry real2 = sln_realified(2, lambda);
    CatalogEntry real3 = sln_realified(3, lambda);
    CatalogEntry doubled_sl2 = direct_sum_swap(sl2);
    CatalogEntry doubled_real2 = direct_sum_swap(real2);
    CatalogEntry minus_sl2 =
        minus_identity(std::get<QuadraticWithReflections>(sl2.payload).q.rb.algebra, "sl2");

    std::vector<CatalogEntry> out;
    out.push_back(std::move(sl2));
    out.push_back(std::move(real2));
    out.push_back(std::move(real3));
    out.push_back(std::move(doubled_sl2));
    out.push_back(std::move(doubled_real2));
    out.push_back(std::move(minus_sl2));
    return out;
}

}  // namespace rblie
