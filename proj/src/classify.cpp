#include "framelat/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "framelat/contfrac.hpp"
#include "framelat/linsolve.hpp"
#include "framelat/simplex.hpp"

namespace framelat {

namespace {

std::vector<Int> negated(const std::vector<Int>& a) {
    std::vector<Int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool lexLess(const std::vector<Int>& a, const std::vector<Int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// One representative per +- pair (the lexicographically larger one), plus
// the index map back into S. Rejects sets that are not negation-closed.
struct PairReduction {
    std::vector<std::vector<Int>> reps;
    std::vector<std::size_t> repOfVector;  // per S index
};

PairReduction reduceToPairs(const MinimalVectorSet& s) {
    if (s.vectors.empty()) throw ValidationError("eutaxy/perfection need a nonempty vector set");
    std::map<std::vector<Int>, std::size_t> index;
    for (std::size_t i = 0; i < s.vectors.size(); ++i) {
        if (!index.emplace(s.vectors[i], i).second)
            throw ValidationError("duplicate vector in minimal-vector set");
    }
    PairReduction out;
    out.repOfVector.assign(s.vectors.size(), 0);
    std::map<std::vector<Int>, std::size_t> repIndex;
    for (std::size_t i = 0; i < s.vectors.size(); ++i) {
        std::vector<Int> neg = negated(s.vectors[i]);
        if (index.find(neg) == index.end())
            throw ValidationError("vector set is not closed under negation");
        std::vector<Int> rep = lexLess(s.vectors[i], neg) ? neg : s.vectors[i];
        auto [it, inserted] = repIndex.emplace(rep, out.reps.size());
        if (inserted) out.reps.push_back(rep);
        out.repOfVector[i] = it->second;
    }
    return out;
}

// True when the representatives are exactly {e_1, ..., e_n} up to sign.
bool repsAreStandardBasis(const std::vector<std::vector<Int>>& reps, std::size_t n) {
    if (reps.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (const auto& r : reps) {
        std::size_t nz = 0, pos = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0) {
                ++nz;
                pos = i;
            }
        if (nz != 1 || abs(r[pos]) != 1 || seen[pos]) return false;
        seen[pos] = true;
    }
    return true;
}

// sum over representatives of (M a)(M a)^T, as a rational matrix. For the
// standard-basis case this is M^2, computed through one integer product.
RatMatrix pairOuterSum(const std::vector<std::vector<Int>>& reps, const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (repsAreStandardBasis(reps, n)) {
        Int scale;
        IntMatrix t = scaleToIntegers(m, scale);
        IntMatrix t2 = t * t;
        RatMatrix w(n, n);
        Rational s2 = Rational(scale) * Rational(scale);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w(i, j) = Rational(t2(i, j)) / s2;
        return w;
    }
    RatMatrix w(n, n);
    for (const auto& a : reps) {
        std::vector<Rational> ma(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a[j] != 0) ma[i] += m(i, j) * Rational(a[j]);
        for (std::size_t i = 0; i < n; ++i) {
            if (ma[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) w(i, j) += ma[i] * ma[j];
        }
    }
    return w;
}

} // namespace

QuadScalar normFormEval(const QuadMatrix& m, const std::vector<Int>& a) {
    if (a.size() != m.rows() || m.rows() != m.cols())
        throw ValidationError("norm_form_eval: dimension mismatch");
    QuadScalar acc(0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (a[i] == 0) continue;
        QuadScalar row(0);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (a[j] != 0) row += m(i, j) * QuadScalar(Rational(a[j]));
        acc += row * QuadScalar(Rational(a[i]));
    }
    return acc;
}

Rational normFormEval(const RatMatrix& m, const std::vector<Int>& a) {
    if (a.size() != m.rows() || m.rows() != m.cols())
        throw ValidationError("norm_form_eval: dimension mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (a[i] == 0) continue;
        Rational row(0);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (a[j] != 0) row += m(i, j) * Rational(a[j]);
        acc += row * Rational(a[i]);
    }
    return acc;
}

std::string eutaxyClassName(EutaxyClass c) {
    switch (c) {
        case EutaxyClass::NotWeaklyEutactic: return "NotWeaklyEutactic";
        case EutaxyClass::WeaklyEutactic: return "WeaklyEutactic";
        case EutaxyClass::SemiEutactic: return "SemiEutactic";
        case EutaxyClass::Eutactic: return "Eutactic";
        case EutaxyClass::StronglyEutactic: return "StronglyEutactic";
    }
    return "?";
}

EutaxyReport eutaxyClassify(const MinimalVectorSet& s, const GramFrame& gf) {
    if (gf.d != 0) throw ValidationError("eutaxy classification requires a rational Gram");
    RatMatrix m = toRatMatrix(gf.m);
    const std::size_t n = gf.n;
    PairReduction pairs = reduceToPairs(s);
    const Rational& minsq = s.minNormSq;
    if (sgn(minsq) <= 0) throw ValidationError("minimal norm must be positive");

    EutaxyReport rep;

    // Strong candidate first: a constant weight gamma per pair must satisfy
    // gamma * 2 * sum_reps (Ma)(Ma)^T = minsq * M.
    RatMatrix w = pairOuterSum(pairs.reps, m);
    {
        std::size_t pi = n, pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i)
            for (std::size_t j = 0; j < n && pi == n; ++j)
                if (m(i, j) != 0) {
                    pi = i;
                    pj = j;
                }
        if (pi < n && w(pi, pj) != 0) {
            Rational gamma = minsq * m(pi, pj) / (Rational(2) * w(pi, pj));
            if (sgn(gamma) > 0) {
                bool match = true;
                for (std::size_t i = 0; i < n && match; ++i)
                    for (std::size_t j = 0; j < n && match; ++j)
                        if (Rational(2) * gamma * w(i, j) != minsq * m(i, j)) match = false;
                if (match) {
                    rep.cls = EutaxyClass::StronglyEutactic;
                    rep.strongCoefficient = gamma;
                    rep.coefficients.assign(s.vectors.size(), gamma);
                    return rep;
                }
            }
        }
    }

    // General ladder over the pair weights gamma_r >= 0 etc.
    const std::size_t mReps = pairs.reps.size();
    std::vector<std::vector<Rational>> maCols;
    maCols.reserve(mReps);
    for (const auto& a : pairs.reps) {
        std::vector<Rational> ma(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a[j] != 0) ma[i] += m(i, j) * Rational(a[j]);
        maCols.push_back(std::move(ma));
    }
    const std::size_t rows = n * (n + 1) / 2;
    RatMatrix sys(rows, mReps);
    RatMatrix rhs(rows, 1);
    std::size_t rw = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++rw) {
            for (std::size_t r = 0; r < mReps; ++r) sys(rw, r) = maCols[r][i] * maCols[r][j];
            rhs(rw, 0) = minsq * m(i, j);
        }

    auto sol = rankSolve(sys, rhs);
    if (!sol.consistent) {
        rep.cls = EutaxyClass::NotWeaklyEutactic;
        return rep;
    }
    auto assignFromPairs = [&](const std::vector<Rational>& gamma) {
        rep.coefficients.assign(s.vectors.size(), Rational(0));
        for (std::size_t i = 0; i < s.vectors.size(); ++i)
            rep.coefficients[i] = gamma[pairs.repOfVector[i]] / Rational(2);
    };

    std::vector<Rational> b(rows);
    for (std::size_t i = 0; i < rows; ++i) b[i] = rhs(i, 0);
    NonnegClassification lp = lpClassifyNonneg(sys, b);
    switch (lp.kind) {
        case NonnegFeasibility::Infeasible: {
            rep.cls = EutaxyClass::WeaklyEutactic;
            std::vector<Rational> gamma(mReps);
            for (std::size_t r = 0; r < mReps; ++r) gamma[r] = sol.particular(r, 0);
            assignFromPairs(gamma);
            break;
        }
        case NonnegFeasibility::FeasibleBoundary:
            rep.cls = EutaxyClass::SemiEutactic;
            assignFromPairs(lp.witness);
            break;
        case NonnegFeasibility::FeasibleStrict:
            rep.cls = EutaxyClass::Eutactic;
            assignFromPairs(lp.witness);
            break;
    }
    return rep;
}

PerfectionReport perfectionCheck(const MinimalVectorSet& s, const GramFrame& gf) {
    if (gf.d != 0) throw ValidationError("perfection check requires a rational Gram");
    RatMatrix m = toRatMatrix(gf.m);
    const std::size_t n = gf.n, k = gf.k;
    PairReduction pairs = reduceToPairs(s);
    const Rational& minsq = s.minNormSq;

    PerfectionReport rep;
    rep.required = k * (k + 1) / 2;

    // Closed form for a maximal unit ETF with S = +-F: the outer-product
    // Gram is (1 - 1/a^2) I + (1/a^2) J, invertible because both eigenvalues
    // 1 - 1/a^2 and 1 - 1/a^2 + n/a^2 are positive.
    if (repsAreStandardBasis(pairs.reps, n) && n == rep.required && minsq == 1) {
        bool unitDiag = true;
        Rational b;  // common squared off-diagonal entry
        bool haveB = false, uniformB = true;
        for (std::size_t i = 0; i < n && unitDiag && uniformB; ++i)
            for (std::size_t j = 0; j < n && unitDiag && uniformB; ++j) {
                if (i == j) {
                    if (m(i, i) != 1) unitDiag = false;
                } else {
                    Rational sq = m(i, j) * m(i, j);
                    if (!haveB) {
                        b = sq;
                        haveB = true;
                    } else if (sq != b) {
                        uniformB = false;
                    }
                }
            }
        if (unitDiag && uniformB && haveB && b > 0 && b < 1) {
            // P = (1-b) I + b J; P 1 = (1-b+nb) 1 and P(e_i - e_j) = (1-b)(e_i - e_j)
            // give n independent eigenvectors with positive eigenvalues.
            rep.spanRank = n;
            rep.isPerfect = true;
            rep.usedClosedForm = true;
            return rep;
        }
    }

    const std::size_t mReps = pairs.reps.size();
    std::vector<std::vector<Rational>> maCols;
    for (const auto& a : pairs.reps) {
        std::vector<Rational> ma(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a[j] != 0) ma[i] += m(i, j) * Rational(a[j]);
        maCols.push_back(std::move(ma));
    }
    RatMatrix p(mReps, mReps);
    Rational minsq2 = minsq * minsq;
    for (std::size_t i = 0; i < mReps; ++i)
        for (std::size_t j = i; j < mReps; ++j) {
            Rational ip(0);
            for (std::size_t l = 0; l < n; ++l)
                if (pairs.reps[j][l] != 0) ip += maCols[i][l] * Rational(pairs.reps[j][l]);
            Rational v = ip * ip / minsq2;
            p(i, j) = v;
            p(j, i) = v;
        }
    rep.spanRank = rankOf(p);
    rep.isPerfect = rep.spanRank == rep.required;
    return rep;
}

bool extremeVerdict(const EutaxyReport& e, const PerfectionReport& p) {
    return p.isPerfect &&
           (e.cls == EutaxyClass::Eutactic || e.cls == EutaxyClass::StronglyEutactic);
}

SeparationReport separationSearch(const QuadMatrix& m, long radius, std::uint64_t valueBudget) {
    if (radius < 1) throw ValidationError("separation_search requires radius >= 1");
    if (m.rows() != m.cols() || m.rows() == 0) throw ValidationError("separation_search needs a square matrix");
    const std::size_t n = m.rows();

    double logCount = n * std::log2(2.0 * static_cast<double>(radius) + 1.0);
    if (logCount > 62 || std::pow(2.0 * static_cast<double>(radius) + 1.0, static_cast<double>(n)) >
                             static_cast<double>(valueBudget))
        throw BudgetError("separation_search: (2r+1)^n exceeds the value-count budget");

    SeparationReport out;
    out.radius = radius;

    std::vector<long> a(n, -radius);
    std::vector<std::pair<QuadScalar, std::vector<Int>>> values;
    bool first = true;
    while (true) {
        if (!first) {
            std::size_t i = 0;
            while (i < n && a[i] == radius) {
                a[i] = -radius;
                ++i;
            }
            if (i == n) break;
            ++a[i];
        }
        first = false;
        std::vector<Int> ai(n);
        for (std::size_t i = 0; i < n; ++i) ai[i] = a[i];
        values.emplace_back(normFormEval(m, ai), std::move(ai));
    }

    std::sort(values.begin(), values.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    bool haveGap = false;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i].first == values[i - 1].first) continue;
        QuadScalar gap = values[i].first - values[i - 1].first;
        if (!haveGap || gap < out.minPositiveGap) {
            out.minPositiveGap = gap;
            out.witnessB = values[i - 1].second;
            out.witnessA = values[i].second;
            haveGap = true;
        }
    }
    if (!haveGap) throw ValidationError("separation_search: all values coincide inside the box");

    if (allEntriesRational(m)) {
        out.provablySeparated = true;
        Int den = denominatorLcm(toRatMatrix(m));
        out.quantizationFloor = makeRational(Int(1), den);
    }
    return out;
}

std::pair<Int, Int> xiGapWitness(const QuadScalar& xi, const Rational& eps) {
    if (xi.isRational()) throw ValidationError("xi_gap_witness requires a quadratic irrational");
    if (sgn(eps) <= 0) throw ValidationError("xi_gap_witness requires eps > 0");
    ContinuedFraction cf = cfExpand(xi);
    ConvergentStream conv(cf);
    // (p - q xi)^2 < 1/q^2, so the walk terminates.
    while (true) {
        auto [p, q] = conv.next();
        QuadScalar resid = QuadScalar(Rational(p)) - QuadScalar(Rational(q)) * xi;
        if (resid * resid < QuadScalar(eps)) return {p, -q};
    }
}

} // namespace framelat
