#include "framelat/lattice.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "framelat/ldl.hpp"
#include "framelat/linsolve.hpp"
#include "framelat/lll.hpp"

namespace framelat {

LatticeDetectReport latticeDetect(const FrameInput& input) {
    TightnessReport tight = tightnessCheck(input);
    if (!tight.isTight) throw ValidationError("lattice_detect: input is not a tight frame");
    GramFrame gf = toGramFrame(input);
    const std::size_t n = gf.n, k = gf.k;

    LatticeDetectReport rep;
    rep.k = k;
    // Greedy leftmost independent columns = RREF pivot columns of M.
    rep.pivotColumns = gf.d == 0 ? reducedRowEchelon(toRatMatrix(gf.m)).second
                                 : reducedRowEchelon(gf.m).second;
    if (rep.pivotColumns.size() != k) throw InternalError("rank dropped below k after validation");

    // G0^-1 f_i solves M_JJ x = M_{J,i}: all quantities are Gram entries.
    QuadMatrix mjj = gf.m.submatrix(rep.pivotColumns, rep.pivotColumns);
    std::vector<std::size_t> allCols(n);
    for (std::size_t j = 0; j < n; ++j) allCols[j] = j;
    QuadMatrix rhs = gf.m.submatrix(rep.pivotColumns, allCols);
    auto sol = rankSolve(mjj, rhs);
    if (!sol.consistent || sol.rank != k) throw InternalError("pivot Gram block is singular");

    rep.isLattice = true;
    for (std::size_t i = 0; i < k && rep.isLattice; ++i)
        for (std::size_t j = 0; j < n && rep.isLattice; ++j)
            if (!sol.particular(i, j).isRational()) {
                rep.isLattice = false;
                rep.irrationalEntry = std::make_pair(i, j);
            }
    return rep;
}

QuadraticLattice spanToLattice(const GramFrame& gf, const Rational& lllDelta) {
    if (gf.d != 0)
        throw ValidationError("span_to_lattice requires a rational Gram; use lattice_detect instead");
    RatMatrix m = toRatMatrix(gf.m);
    const std::size_t n = gf.n, k = gf.k;

    IntMatrix kernel = integerKernel(m);
    if (kernel.cols() != n - k) throw InternalError("kernel dimension disagrees with rank");
    IntMatrix u = hnfComplete(kernel, n);

    IntMatrix w(n, k);  // quotient-basis columns: the completion part of U
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) w(i, j) = u(i, n - k + j);

    RatMatrix wq = toRatMatrix(w);
    RatMatrix quotientGram = wq.transposed() * m * wq;
    LllResult red = lllReduce(quotientGram, lllDelta);

    QuadraticLattice lat;
    lat.k = k;
    lat.basisGram = red.reducedGram;
    lat.embed = w * red.transform;

    LdlResult f = ldlDecomposeOrThrow(lat.basisGram);
    lat.detGram = Rational(1);
    for (const auto& dv : f.d) lat.detGram *= dv;

    // classProject = Ulll^-1 * (bottom k rows of U^-1);整数 inverse of a
    // unimodular matrix comes out exactly from the rational solve.
    RatMatrix uq = toRatMatrix(u);
    auto uinv = rankSolve(uq, RatMatrix::identity(n));
    if (!uinv.consistent || uinv.rank != n) throw InternalError("completion matrix not invertible");
    RatMatrix tq = toRatMatrix(red.transform);
    auto tinv = rankSolve(tq, RatMatrix::identity(k));
    IntMatrix proj(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc(0);
            for (std::size_t l = 0; l < k; ++l)
                acc += tinv.particular(i, l) * uinv.particular(n - k + l, j);
            if (!isInteger(acc)) throw InternalError("class projection is not integral");
            proj(i, j) = acc.get_num();
        }
    lat.classProject = proj;
    return lat;
}

MinimalVectorSet minimalVectors(const QuadraticLattice& lattice, std::uint64_t nodeBudget) {
    GramEnumeration en = shortestVectorsOfGram(lattice.basisGram, nodeBudget);
    MinimalVectorSet s;
    s.minNormSq = en.minNormSq;
    const std::size_t n = lattice.embed.rows(), k = lattice.k;
    for (const auto& x : en.vectors) {
        std::vector<Int> a(n, Int(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) a[i] += lattice.embed(i, j) * x[j];
        s.vectors.push_back(std::move(a));
    }
    std::sort(s.vectors.begin(), s.vectors.end(),
              [](const std::vector<Int>& a, const std::vector<Int>& b) {
                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
              });
    return s;
}

MinNormBound minNormBoundCheck(const GramFrame& gf, const QuadScalar& alpha,
                               const Rational& minNormSq) {
    if (!alpha.isRational() || !isInteger(alpha.asRational()) || alpha.asRational() <= 0)
        throw ValidationError("min_norm_bound_check requires a positive integer alpha");
    Int a = alpha.asRational().get_num();
    MinNormBound res;
    Int den = denominatorLcm(toRatMatrix(gf.m));
    res.alphaGramIntegral = a % den == 0;
    Rational bound = makeRational(Int(1), a);
    res.margin = minNormSq - bound;
    res.holds = sgn(res.margin) >= 0;
    return res;
}

bool normFormQuantizationCheck(const GramFrame& gf, const Int& alpha, std::size_t samples,
                               std::uint64_t seed) {
    RatMatrix m = toRatMatrix(gf.m);
    Int scale;
    IntMatrix t = scaleToIntegers(m, scale);  // t = scale * M
    const std::size_t n = gf.n;

    // 64-bit fast path: |a_i| <= 3 keeps <T a, a> far below overflow for the
    // entry sizes seen here.
    bool fits = true;
    for (std::size_t i = 0; i < n && fits; ++i)
        for (std::size_t j = 0; j < n && fits; ++j)
            if (!t(i, j).fits_slong_p() || std::abs(t(i, j).get_si()) > 1000000) fits = false;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<long> a(n);
    std::vector<long long> tFlat;
    if (fits) {
        tFlat.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) tFlat[i * n + j] = t(i, j).get_si();
    }

    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < n; ++i) a[i] = entry(rng);
        Int qScaled;  // <T a, a> = scale * Q(a)
        if (fits) {
            long long acc = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] == 0) continue;
                long long row = 0;
                const long long* ti = tFlat.data() + i * n;
                for (std::size_t j = 0; j < n; ++j) row += ti[j] * a[j];
                acc += row * a[i];
            }
            qScaled = Int(static_cast<long>(acc));
        } else {
            Int acc(0);
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] == 0) continue;
                Int row(0);
                for (std::size_t j = 0; j < n; ++j) row += t(i, j) * a[j];
                acc += row * a[i];
            }
            qScaled = acc;
        }
        Rational q = makeRational(qScaled, scale);
        Rational alphaQ = q * Rational(alpha);
        if (!isInteger(alphaQ) || sgn(alphaQ) < 0) return false;
        if (sgn(q) != 0 && q < makeRational(Int(1), alpha)) return false;
    }
    return true;
}

MinvecVsFrame minvecVsFrame(const MinimalVectorSet& s, const QuadraticLattice& lattice) {
    const std::size_t k = lattice.k, n = lattice.classProject.cols();
    auto classOf = [&](const std::vector<Int>& a) {
        std::vector<Int> c(k, Int(0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) c[i] += lattice.classProject(i, j) * a[j];
        return c;
    };
    std::set<std::vector<Int>> sClasses;
    for (const auto& a : s.vectors) sClasses.insert(classOf(a));
    std::set<std::vector<Int>> frameClasses;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = 1;
        std::vector<Int> c = classOf(e);
        frameClasses.insert(c);
        for (auto& v : c) v = -v;
        frameClasses.insert(std::move(c));
    }
    if (sClasses == frameClasses) return MinvecVsFrame::EqualsPlusMinusFrame;
    if (std::includes(sClasses.begin(), sClasses.end(), frameClasses.begin(), frameClasses.end()))
        return MinvecVsFrame::StrictSuperset;
    return MinvecVsFrame::Other;
}

std::string minvecVsFrameName(MinvecVsFrame v) {
    switch (v) {
        case MinvecVsFrame::EqualsPlusMinusFrame: return "equalsPlusMinusFrame";
        case MinvecVsFrame::StrictSuperset: return "strictSuperset";
        case MinvecVsFrame::Other: return "other";
    }
    return "?";
}

} // namespace framelat
