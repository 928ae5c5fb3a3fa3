#pragma once

// Brute-force reference implementations used only by tests. They stay
// independent of the library code paths they cross-check.

#include <functional>
#include <optional>
#include <vector>

#include "framelat/linsolve.hpp"
#include "framelat/matrix.hpp"
#include "framelat/simplex.hpp"

namespace framelat::oracle {

// All vertices of {x : A x = b, x >= 0} by enumerating basic solutions.
inline std::vector<std::vector<Rational>> polytopeVertices(const RatMatrix& a,
                                                           const std::vector<Rational>& b) {
    const std::size_t m = a.cols();
    RatMatrix bcol(a.rows(), 1);
    for (std::size_t i = 0; i < a.rows(); ++i) bcol(i, 0) = b[i];
    std::size_t r = rankOf(a);
    std::vector<std::vector<Rational>> verts;

    std::vector<std::size_t> idx(r);
    // enumerate all r-subsets of columns
    std::vector<std::size_t> comb;
    std::vector<std::size_t> stack;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (comb.size() == r) {
            std::vector<std::size_t> allRows(a.rows());
            for (std::size_t i = 0; i < a.rows(); ++i) allRows[i] = i;
            RatMatrix sub = a.submatrix(allRows, comb);
            auto sol = rankSolve(sub, bcol);
            if (sol.consistent && sol.rank == r && sol.nullspaceBasis.cols() == 0) {
                std::vector<Rational> x(m, Rational(0));
                bool ok = true;
                for (std::size_t j = 0; j < r; ++j) {
                    x[comb[j]] = sol.particular(j, 0);
                    if (sgn(x[comb[j]]) < 0) ok = false;
                }
                if (ok) verts.push_back(x);
            }
            return;
        }
        for (std::size_t j = start; j < m; ++j) {
            comb.push_back(j);
            rec(j + 1);
            comb.pop_back();
        }
    };
    if (r == 0) {
        bool bZero = true;
        for (const auto& v : b)
            if (sgn(v) != 0) bZero = false;
        if (bZero) verts.push_back(std::vector<Rational>(m, Rational(0)));
        return verts;
    }
    rec(0);
    // dedupe
    std::vector<std::vector<Rational>> out;
    for (auto& v : verts) {
        bool seen = false;
        for (auto& w : out)
            if (w == v) seen = true;
        if (!seen) out.push_back(std::move(v));
    }
    return out;
}

// Exact classification of {A c = b, c >= 0} by vertex + extreme-ray
// enumeration: strict feasibility holds iff every coordinate is positive
// somewhere on the polyhedron (then the average of witnesses is an
// all-positive feasible point).
inline NonnegFeasibility classifyByVertexEnumeration(const RatMatrix& a,
                                                     const std::vector<Rational>& b) {
    auto verts = polytopeVertices(a, b);
    if (verts.empty()) return NonnegFeasibility::Infeasible;
    const std::size_t m = a.cols();

    // extreme rays: vertices of {A c = 0, sum c = 1, c >= 0}
    RatMatrix homog(a.rows() + 1, m);
    std::vector<Rational> hb(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j) homog(i, j) = a(i, j);
    for (std::size_t j = 0; j < m; ++j) homog(a.rows(), j) = Rational(1);
    hb.push_back(Rational(1));
    auto rays = polytopeVertices(homog, hb);

    for (std::size_t i = 0; i < m; ++i) {
        bool positiveSomewhere = false;
        for (const auto& v : verts)
            if (sgn(v[i]) > 0) positiveSomewhere = true;
        for (const auto& rvec : rays)
            if (sgn(rvec[i]) > 0) positiveSomewhere = true;
        if (!positiveSomewhere) return NonnegFeasibility::FeasibleBoundary;
    }
    return NonnegFeasibility::FeasibleStrict;
}

} // namespace framelat::oracle
