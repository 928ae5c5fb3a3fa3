#include "framelat/frame.hpp"

#include "framelat/ldl.hpp"
#include "framelat/linsolve.hpp"

namespace framelat {

namespace {

long discriminantOf(const QuadMatrix& m) {
    long d = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d = combineDiscriminants(d, m(i, j).discriminant());
    return d;
}

// Tightness of a rational Gram through a single integer matrix product:
// with T = D*M integral and trace(T)/k = p/q, M^2 = A M  <=>  q T^2 = p T.
bool gramTightRational(const RatMatrix& m, std::size_t k) {
    Int scale;
    IntMatrix t = scaleToIntegers(m, scale);
    Rational a = Rational(t.trace()) / Rational(static_cast<long>(k));
    IntMatrix lhs = (t * t).scaled(a.get_den());
    IntMatrix rhs = t.scaled(a.get_num());
    return lhs == rhs;
}

} // namespace

Frame makeFrame(std::size_t n, std::size_t k, long d, QuadMatrix g) {
    if (n < k || k == 0) throw ValidationError("frame requires n >= k >= 1");
    if (g.rows() != k || g.cols() != n) throw ValidationError("frame matrix must be k x n");
    long dg = discriminantOf(g);
    if (dg != 0 && dg != d) throw ValidationError("frame entries do not live in Q(sqrt(d))");
    if (rankOf(g) != k) throw ValidationError("frame vectors do not span the ambient space");
    return Frame{n, k, d, std::move(g)};
}

GramFrame makeGramFrame(std::size_t n, std::size_t k, QuadMatrix m) {
    if (n < k || k == 0) throw ValidationError("gram frame requires n >= k >= 1");
    if (m.rows() != n || m.cols() != n) throw ValidationError("gram matrix must be n x n");
    if (!m.isSymmetric()) throw ValidationError("gram matrix must be symmetric");
    long d = discriminantOf(m);

    // Rational matrices take the mpq elimination path; quadratic entries cost
    // several rational operations each.
    std::vector<std::size_t> pivots;
    if (d == 0)
        pivots = reducedRowEchelon(toRatMatrix(m)).second;
    else
        pivots = reducedRowEchelon(m).second;
    if (pivots.size() != k)
        throw ValidationError("gram matrix has rank " + std::to_string(pivots.size()) +
                              ", expected " + std::to_string(k));
    // Rank k plus a positive definite principal k x k block certifies PSD:
    // the Schur complement of that block vanishes, so M = X^T (M_JJ) X.
    QuadMatrix sub = m.submatrix(pivots, pivots);
    if (d == 0) {
        if (!ldlDecompose(toRatMatrix(sub)).positiveDefinite)
            throw ValidationError("gram matrix is not positive semidefinite");
    } else {
        // Quadratic entries: run the LDL pivots in Q(sqrt d) directly.
        std::size_t kk = sub.rows();
        QuadMatrix l = QuadMatrix::identity(kk);
        std::vector<QuadScalar> dv(kk);
        for (std::size_t j = 0; j < kk; ++j) {
            QuadScalar pj = sub(j, j);
            for (std::size_t t = 0; t < j; ++t) pj -= l(j, t) * l(j, t) * dv[t];
            if (pj.sign() <= 0) throw ValidationError("gram matrix is not positive semidefinite");
            dv[j] = pj;
            for (std::size_t i = j + 1; i < kk; ++i) {
                QuadScalar v = sub(i, j);
                for (std::size_t t = 0; t < j; ++t) v -= l(i, t) * l(j, t) * dv[t];
                l(i, j) = v / pj;
            }
        }
    }
    return GramFrame{n, k, d, std::move(m)};
}

QuadMatrix gramOf(const Frame& f) {
    return f.g.transposed() * f.g;
}

GramFrame toGramFrame(const FrameInput& input) {
    if (const auto* gf = std::get_if<GramFrame>(&input)) return *gf;
    const Frame& f = std::get<Frame>(input);
    return makeGramFrame(f.n, f.k, gramOf(f));
}

std::size_t frameN(const FrameInput& input) {
    return std::visit([](const auto& f) { return f.n; }, input);
}

std::size_t frameK(const FrameInput& input) {
    return std::visit([](const auto& f) { return f.k; }, input);
}

long frameD(const FrameInput& input) {
    return std::visit([](const auto& f) { return f.d; }, input);
}

TightnessReport tightnessCheck(const FrameInput& input) {
    TightnessReport rep;
    if (const auto* f = std::get_if<Frame>(&input)) {
        QuadMatrix outer = f->g * f->g.transposed();  // k x k
        QuadScalar a = outer.trace() / QuadScalar(Rational(static_cast<long>(f->k)));
        bool tight = true;
        for (std::size_t i = 0; i < f->k && tight; ++i)
            for (std::size_t j = 0; j < f->k && tight; ++j) {
                const QuadScalar expect = i == j ? a : QuadScalar(0);
                if (outer(i, j) != expect) tight = false;
            }
        rep.isTight = tight;
        if (tight) {
            rep.frameConstant = a;
            rep.gamma = QuadScalar(1) / a;
        }
        return rep;
    }
    const GramFrame& gf = std::get<GramFrame>(input);
    QuadScalar a = gf.m.trace() / QuadScalar(Rational(static_cast<long>(gf.k)));
    bool tight;
    if (gf.d == 0) {
        tight = gramTightRational(toRatMatrix(gf.m), gf.k);
    } else {
        QuadMatrix sq = gf.m * gf.m;
        tight = sq == gf.m.scaled(a);
    }
    rep.isTight = tight;
    if (tight) {
        rep.frameConstant = a;
        rep.gamma = QuadScalar(1) / a;
    }
    return rep;
}

EtfReport etfCheck(const FrameInput& input) {
    GramFrame gf = toGramFrame(input);
    const std::size_t n = gf.n, k = gf.k;
    EtfReport rep;
    rep.isMaximal = false;

    const QuadScalar normSq = gf.m(0, 0);
    rep.commonNormSq = normSq;
    for (std::size_t i = 0; i < n; ++i) {
        if (gf.m(i, i) != normSq) {
            rep.witness = EtfWitness{"non-common-norm", i, i};
            return rep;
        }
    }
    if (normSq.sign() <= 0) {
        rep.witness = EtfWitness{"non-common-norm", 0, 0};
        return rep;
    }

    QuadScalar offAbs = gf.m(0, 1).abs();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (gf.m(i, j).abs() != offAbs) {
                rep.witness = EtfWitness{"non-equiangular", i, j};
                return rep;
            }
        }
    if (offAbs.isZero()) {
        rep.witness = EtfWitness{"angle-identity", 0, 1};
        return rep;
    }

    TightnessReport tight = tightnessCheck(input);
    if (!tight.isTight) {
        rep.witness = EtfWitness{"not-tight", 0, 0};
        return rep;
    }

    rep.c = offAbs / normSq;
    rep.alpha = QuadScalar(1) / rep.c;
    // c^2 = (n-k) / (k(n-1)) pins the angle of a unit (n,k) ETF; the cosine
    // is scale-invariant, so the test applies to common-norm systems too.
    Rational expected = makeRational(static_cast<long>(n - k)) /
                        makeRational(static_cast<long>(k * (n - 1)));
    if (rep.c * rep.c != QuadScalar(expected)) {
        rep.witness = EtfWitness{"angle-identity", 0, 1};
        return rep;
    }

    rep.isEtf = true;
    rep.isUnitEtf = normSq == QuadScalar(1);
    rep.alphaIsInteger = rep.alpha.isRational() && isInteger(rep.alpha.asRational()) &&
                         rep.alpha.asRational() > 0;
    rep.isMaximal = n == k * (k + 1) / 2;
    return rep;
}

GerzonClass gerzonCheck(std::size_t n, std::size_t k) {
    if (n <= k) return GerzonClass::BelowRange;
    std::size_t bound = k * (k + 1) / 2;
    if (n < bound) return GerzonClass::InRange;
    if (n == bound) return GerzonClass::Maximal;
    return GerzonClass::AboveRange;
}

std::string gerzonClassName(GerzonClass g) {
    switch (g) {
        case GerzonClass::BelowRange: return "belowRange";
        case GerzonClass::InRange: return "inRange";
        case GerzonClass::Maximal: return "maximal";
        case GerzonClass::AboveRange: return "aboveRange";
    }
    return "?";
}

RationalityClass rationalityClass(const FrameInput& input) {
    GramFrame gf = toGramFrame(input);
    RationalityClass res;
    if (allEntriesRational(gf.m)) {
        res.kind = RationalityClass::Rational;
        return res;
    }
    // First irrational entry fixes the only possible scale class: any mu with
    // mu^2 M rational must satisfy mu^2 = (rational) / m_ij.
    QuadScalar pivot;
    for (std::size_t i = 0; i < gf.n && pivot.isZero(); ++i)
        for (std::size_t j = 0; j < gf.n && pivot.isZero(); ++j)
            if (!gf.m(i, j).isRational()) pivot = gf.m(i, j);
    QuadScalar sigma = QuadScalar(1) / pivot.abs();
    QuadMatrix scaled = gf.m.scaled(sigma);
    if (!allEntriesRational(scaled)) {
        res.kind = RationalityClass::Irrational;
        return res;
    }
    res.kind = RationalityClass::ScaledRational;
    // Canonicalize: mu^2 * M should be a primitive integer matrix.
    RatMatrix r = toRatMatrix(scaled);
    Int den = denominatorLcm(r);
    Int g = 0;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) {
            Rational v = r(i, j) * Rational(den);
            g = gcdOf(g, abs(v.get_num()));
        }
    if (g == 0) g = 1;
    res.muSquared = sigma * QuadScalar(makeRational(den, g));
    return res;
}

std::string rationalityKindName(RationalityClass::Kind k) {
    switch (k) {
        case RationalityClass::Rational: return "Rational";
        case RationalityClass::ScaledRational: return "ScaledRational";
        case RationalityClass::Irrational: return "Irrational";
    }
    return "?";
}

} // namespace framelat
