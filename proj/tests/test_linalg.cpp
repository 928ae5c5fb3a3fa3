#include <random>

#include "doctest.h"
#include "framelat/intlattice.hpp"
#include "framelat/ldl.hpp"
#include "framelat/linsolve.hpp"
#include "framelat/lll.hpp"
#include "framelat/simplex.hpp"
#include "oracles.hpp"

using namespace framelat;

namespace {

RatMatrix ratMat(std::initializer_list<std::initializer_list<long>> rows, long den = 1) {
    RatMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long v : r) m(i, j++) = makeRational(v, den);
        ++i;
    }
    return m;
}

IntMatrix intMat(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

RatMatrix simplexGram2() {
    // Gram of the three unit vectors at mutual angle 120 degrees.
    RatMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = i == j ? makeRational(1) : makeRational(-1, 2);
    return m;
}

IntMatrix randomIntMatrix(std::mt19937& rng, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

} // namespace

TEST_CASE("rank_solve basics") {
    RatMatrix id3 = RatMatrix::identity(3);
    RatMatrix b(3, 1);
    b(0, 0) = makeRational(4);
    b(1, 0) = makeRational(-1);
    b(2, 0) = makeRational(7, 3);
    auto sol = rankSolve(id3, b);
    CHECK(sol.rank == 3);
    CHECK(sol.consistent);
    CHECK(sol.nullspaceBasis.cols() == 0);
    CHECK(sol.particular == b);

    auto ones = rankSolve(ratMat({{1, 1}, {1, 1}}));
    CHECK(ones.rank == 1);
    REQUIRE(ones.nullspaceBasis.cols() == 1);
    CHECK(ones.nullspaceBasis(0, 0) == -ones.nullspaceBasis(1, 0));

    auto hexa = rankSolve(simplexGram2());
    CHECK(hexa.rank == 2);
    REQUIRE(hexa.nullspaceBasis.cols() == 1);
    // kernel is spanned by (1,1,1)
    Rational x = hexa.nullspaceBasis(0, 0);
    CHECK(x != 0);
    CHECK(hexa.nullspaceBasis(1, 0) == x);
    CHECK(hexa.nullspaceBasis(2, 0) == x);

    // inconsistent system is flagged, rank still reported
    RatMatrix a = ratMat({{1, 1}, {1, 1}});
    RatMatrix bb(2, 1);
    bb(0, 0) = makeRational(1);
    bb(1, 0) = makeRational(2);
    auto bad = rankSolve(a, bb);
    CHECK(bad.rank == 1);
    CHECK(!bad.consistent);
}

TEST_CASE("integer kernel examples") {
    CHECK(integerKernel(toRatMatrix(intMat({{1, 0}, {0, 1}}))).cols() == 0);

    IntMatrix k1 = integerKernel(toRatMatrix(intMat({{1, 1}, {1, 1}})));
    REQUIRE(k1.cols() == 1);
    CHECK(k1(0, 0) == 1);
    CHECK(k1(1, 0) == -1);

    IntMatrix k2 = integerKernel(toRatMatrix(intMat({{2, 1, 1}, {1, 2, 1}})));
    REQUIRE(k2.cols() == 1);
    CHECK(k2(0, 0) == 1);
    CHECK(k2(1, 0) == 1);
    CHECK(k2(2, 0) == -3);
}

TEST_CASE("integer kernel is exact and saturated on random matrices") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix a = randomIntMatrix(rng, r, c, -4, 4);
        RatMatrix aq = toRatMatrix(a);
        IntMatrix k = integerKernel(aq);
        CHECK(k.cols() + rankOf(aq) == c);
        if (k.cols() == 0) continue;
        // M K = 0 exactly
        RatMatrix prod = aq * toRatMatrix(k);
        CHECK(prod.isZero());
        // saturation: all Smith invariant factors are 1
        SmithForm f = smithNormalForm(k);
        for (std::size_t i = 0; i < k.cols(); ++i) CHECK(f.s(i, i) == 1);
    }
}

TEST_CASE("smith normal form transforms are consistent") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        IntMatrix a = randomIntMatrix(rng, dim(rng), dim(rng), -6, 6);
        SmithForm f = smithNormalForm(a);
        CHECK(f.v * a * f.w == f.s);
        CHECK(f.v * f.vInverse == IntMatrix::identity(a.rows()));
        // diagonal, nonnegative, divisibility chain
        for (std::size_t i = 0; i < f.s.rows(); ++i)
            for (std::size_t j = 0; j < f.s.cols(); ++j)
                if (i != j) CHECK(f.s(i, j) == 0);
        for (std::size_t i = 0; i + 1 < std::min(f.s.rows(), f.s.cols()); ++i) {
            CHECK(f.s(i, i) >= 0);
            if (f.s(i + 1, i + 1) != 0) CHECK(f.s(i + 1, i + 1) % (f.s(i, i) == 0 ? Int(1) : f.s(i, i)) == 0);
        }
    }
}

TEST_CASE("hnf_complete") {
    CHECK(hnfComplete(IntMatrix(2, 0), 2) == IntMatrix::identity(2));

    IntMatrix k(3, 1);
    k(0, 0) = 1;
    k(1, 0) = 1;
    k(2, 0) = 1;
    IntMatrix u = hnfComplete(k, 3);
    Int det = determinant(u);
    CHECK((det == 1 || det == -1));
    CHECK(u(0, 0) == 1);
    CHECK(u(1, 0) == 1);
    CHECK(u(2, 0) == 1);

    IntMatrix k2(2, 1);
    k2(0, 0) = 2;
    k2(1, 0) = 1;
    IntMatrix u2 = hnfComplete(k2, 2);
    det = determinant(u2);
    CHECK((det == 1 || det == -1));
    CHECK(u2(0, 0) == 2);
    CHECK(u2(1, 0) == 1);

    // non-saturated input is rejected
    IntMatrix bad(2, 1);
    bad(0, 0) = 2;
    bad(1, 0) = 2;
    CHECK_THROWS_AS(hnfComplete(bad, 2), ValidationError);
}

TEST_CASE("hnf columns invariants") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        IntMatrix a = randomIntMatrix(rng, dim(rng), dim(rng), -7, 7);
        ColumnHnf h = hnfColumns(a);
        CHECK(a * h.u == h.h);
        Int det = determinant(h.u);
        CHECK((det == 1 || det == -1));
        for (std::size_t j = h.rank; j < h.h.cols(); ++j)
            for (std::size_t i = 0; i < h.h.rows(); ++i) CHECK(h.h(i, j) == 0);
    }
}

TEST_CASE("ldl decomposition") {
    auto id = ldlDecomposeOrThrow(RatMatrix::identity(2));
    CHECK(id.d[0] == 1);
    CHECK(id.d[1] == 1);

    RatMatrix hexa(2, 2);
    hexa(0, 0) = hexa(1, 1) = makeRational(1);
    hexa(0, 1) = hexa(1, 0) = makeRational(-1, 2);
    auto h = ldlDecomposeOrThrow(hexa);
    CHECK(h.d[0] == 1);
    CHECK(h.d[1] == makeRational(3, 4));

    auto two = ldlDecomposeOrThrow(ratMat({{2, 1}, {1, 2}}));
    CHECK(two.d[0] == 2);
    CHECK(two.d[1] == makeRational(3, 2));

    auto bad = ldlDecompose(ratMat({{1, 2}, {2, 1}}));
    CHECK(!bad.positiveDefinite);
    CHECK(bad.failingMinor == 2);

    // recomposition L D L^T equals the input exactly
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t n = dim(rng);
        IntMatrix b = randomIntMatrix(rng, n, n, -3, 3);
        RatMatrix g = toRatMatrix(b.transposed() * b);
        for (std::size_t i = 0; i < n; ++i) g(i, i) += 1;  // force PD
        auto f = ldlDecomposeOrThrow(g);
        RatMatrix d(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = f.d[i];
        CHECK(f.l * d * f.l.transposed() == g);
    }
}

TEST_CASE("lll examples") {
    auto already = lllReduce(RatMatrix::identity(4));
    CHECK(already.reducedGram == RatMatrix::identity(4));
    CHECK(already.transform == IntMatrix::identity(4));

    auto toI = lllReduce(ratMat({{5, 3}, {3, 2}}));
    CHECK(toI.reducedGram == RatMatrix::identity(2));

    RatMatrix hexa(2, 2);
    hexa(0, 0) = hexa(1, 1) = makeRational(1);
    hexa(0, 1) = hexa(1, 0) = makeRational(-1, 2);
    auto h = lllReduce(hexa);
    CHECK(h.reducedGram(0, 0) == 1);
    CHECK(h.reducedGram(1, 1) == 1);
    CHECK(abs(h.reducedGram(0, 1)) == makeRational(1, 2));

    CHECK_THROWS_AS(lllReduce(ratMat({{1, 2}, {2, 1}})), ValidationError);
    CHECK_THROWS_AS(lllReduce(RatMatrix::identity(2), makeRational(1, 8)), ValidationError);
}

TEST_CASE("lll invariants on random positive definite grams") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t n = dim(rng);
        IntMatrix b = randomIntMatrix(rng, n, n, -5, 5);
        if (determinant(b) == 0) continue;
        RatMatrix g = toRatMatrix(b.transposed() * b);
        auto res = lllReduce(g);
        RatMatrix ut = toRatMatrix(res.transform.transposed());
        CHECK(ut * g * toRatMatrix(res.transform) == res.reducedGram);
        Int det = determinant(res.transform);
        CHECK((det == 1 || det == -1));
        // first minimum bound: b11^n <= (4/3)^(n(n-1)/2) * det(G)
        Rational detG(1);
        auto f = ldlDecomposeOrThrow(res.reducedGram);
        for (const auto& dv : f.d) detG *= dv;
        Rational lhs = powRational(res.reducedGram(0, 0), static_cast<unsigned long>(n));
        Rational rhs = powRational(makeRational(4, 3), static_cast<unsigned long>(n * (n - 1) / 2)) * detG;
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("lp classify nonneg") {
    RatMatrix a1 = ratMat({{1, 1}});
    auto r1 = lpClassifyNonneg(a1, {makeRational(1)});
    CHECK(r1.kind == NonnegFeasibility::FeasibleStrict);
    CHECK(r1.maxMinEntry == makeRational(1, 2));
    CHECK(r1.witness[0] + r1.witness[1] == 1);
    CHECK(sgn(r1.witness[0]) > 0);
    CHECK(sgn(r1.witness[1]) > 0);

    // c1 - c2 = 1 admits strictly positive solutions, e.g. (2, 1); capped
    // objective reports t = 1.
    RatMatrix a2 = ratMat({{1, -1}});
    auto r2 = lpClassifyNonneg(a2, {makeRational(1)});
    CHECK(r2.kind == NonnegFeasibility::FeasibleStrict);
    CHECK(r2.witness[0] - r2.witness[1] == 1);

    RatMatrix a3 = ratMat({{0, 0}});
    auto r3 = lpClassifyNonneg(a3, {makeRational(1)});
    CHECK(r3.kind == NonnegFeasibility::Infeasible);

    // boundary instance: c3 is forced to zero by the off-diagonal equation
    RatMatrix a4 = ratMat({{1, 0, 9}, {0, 1, 16}, {0, 0, 12}});
    auto r4 = lpClassifyNonneg(a4, {makeRational(25), makeRational(25), makeRational(0)});
    CHECK(r4.kind == NonnegFeasibility::FeasibleBoundary);
    CHECK(sgn(r4.witness[2]) == 0);
}

TEST_CASE("lp classification matches vertex enumeration oracle") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<long> entry(-3, 3);
    int nontrivial = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> rows(1, 3), cols(1, 3);
        std::size_t m = rows(rng), n = cols(rng);
        RatMatrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = makeRational(entry(rng));
        std::vector<Rational> b(m);
        for (std::size_t i = 0; i < m; ++i) b[i] = makeRational(entry(rng));
        auto lp = lpClassifyNonneg(a, b);
        auto ref = oracle::classifyByVertexEnumeration(a, b);
        CHECK(lp.kind == ref);
        if (lp.kind != NonnegFeasibility::Infeasible) {
            ++nontrivial;
            // witness satisfies A c = b exactly with the claimed signs
            for (std::size_t i = 0; i < m; ++i) {
                Rational acc(0);
                for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * lp.witness[j];
                CHECK(acc == b[i]);
            }
            for (const auto& w : lp.witness) {
                if (lp.kind == NonnegFeasibility::FeasibleStrict)
                    CHECK(sgn(w) > 0);
                else
                    CHECK(sgn(w) >= 0);
            }
        }
    }
    CHECK(nontrivial > 30);
}
