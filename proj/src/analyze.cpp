#include "framelat/analyze.hpp"

#include <sstream>

namespace framelat {

namespace {

MinimalVectorSet plusMinusFrameSubset(std::size_t n) {
    MinimalVectorSet s;
    s.minNormSq = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = 1;
        s.vectors.push_back(e);
        e[i] = -1;
        s.vectors.push_back(std::move(e));
    }
    return s;
}

} // namespace

AnalysisReport analyze(const FrameInput& input, const AnalyzeOptions& opts,
                       const std::string& source) {
    AnalysisReport rep;
    rep.source = source;
    rep.n = frameN(input);
    rep.k = frameK(input);
    rep.d = frameD(input);
    rep.gramOnly = std::holds_alternative<GramFrame>(input);

    auto fail = [&](const std::string& stage, const std::string& msg) {
        rep.stageError = stage + ": " + msg;
    };

    rep.tightness = tightnessCheck(input);
    rep.gerzon = gerzonCheck(rep.n, rep.k);
    rep.etf = etfCheck(input);
    rep.rationality = rationalityClass(input);

    const bool rational = rep.rationality->kind == RationalityClass::Rational;
    if (!rep.tightness.isTight && !rational) {
        fail("lattice", "the span rationality test is defined for tight frames only");
        return rep;
    }

    if (!rational) {
        // Non-rational tight frame: run the pivot-column rationality test.
        rep.detect = latticeDetect(input);
        if (rep.detect->isLattice)
            rep.notes.push_back(
                "lattice: transformed columns rational; the span is a lattice "
                "(scale multiple of a rational system)");
        else
            rep.notes.push_back(
                "lattice: transformed column with an irrational entry; the integral span "
                "is not discrete, so no lattice is generated");
        if (rep.k <= 3)
            rep.notes.push_back(
                "rule rationality-lattice-equivalence: in dimensions 2 and 3 the test is "
                "decisive for tight frames containing a unit vector");
        return rep;
    }

    // Rational input: the integral span is always a lattice, with values of
    // the norm form quantized to multiples of 1/lcm(denominators).
    rep.notes.push_back("rule rational-span: a rational system spans a lattice; extraction "
                        "via kernel saturation and unimodular completion");
    GramFrame gf = toGramFrame(input);
    try {
        rep.lattice = spanToLattice(gf, opts.lllDelta);
    } catch (const Error& e) {
        fail("lattice", e.what());
        return rep;
    }

    bool gated = false;
    if (opts.runMinvec) {
        if (rep.k >= opts.largeDimensionGate && !opts.allowLarge) {
            gated = true;
            rep.notes.push_back("minvec: enumeration in dimension " + std::to_string(rep.k) +
                                " not attempted without --allow-large; classification falls "
                                "back to the subset +-F");
        } else {
            try {
                rep.minvec = minimalVectors(*rep.lattice, opts.minvecBudget);
            } catch (const BudgetError& e) {
                fail("minvec", e.what());
                return rep;
            }
        }
    }

    MinimalVectorSet classificationSet;
    if (rep.minvec) {
        rep.vsFrame = minvecVsFrame(*rep.minvec, *rep.lattice);
        classificationSet = *rep.minvec;
        if (rep.etf->isUnitEtf && rep.etf->alphaIsInteger) {
            rep.minNormBound = minNormBoundCheck(gf, rep.etf->alpha, rep.minvec->minNormSq);
            rep.notes.push_back(
                "rule etf-min-norm: alpha * Gram is integral, so norm-form values are "
                "multiples of 1/alpha and the minimal norm is at least 1/sqrt(alpha)");
        }
    } else {
        if (!rep.etf->isUnitEtf) {
            fail("classify", gated ? "subset classification needs a unit ETF"
                                   : "classification without enumeration needs a unit ETF");
            return rep;
        }
        rep.subsetMode = true;
        rep.notes.push_back("classify: subset +-F; extremality conditional on the minimal "
                            "norm being 1 (every frame vector is a candidate minimal vector)");
        classificationSet = plusMinusFrameSubset(rep.n);
    }

    try {
        rep.eutaxy = eutaxyClassify(classificationSet, gf);
        rep.perfection = perfectionCheck(classificationSet, gf);
    } catch (const Error& e) {
        fail("classify", e.what());
        return rep;
    }
    rep.extreme = extremeVerdict(*rep.eutaxy, *rep.perfection);
    if (rep.perfection->usedClosedForm)
        rep.notes.push_back("rule maximal-etf-perfection: outer-product Gram has the "
                            "two-eigenvalue closed form, hence full rank");
    rep.notes.push_back("rule extreme-by-perfect-eutactic: perfect + eutactic minimal vectors "
                        "give a local maximum of the packing density");
    return rep;
}

std::string classificationLine(const AnalysisReport& rep) {
    if (!rep.eutaxy || !rep.perfection) return "";
    std::ostringstream out;
    out << "eutaxy=" << eutaxyClassName(rep.eutaxy->cls) << " coeff=";
    if (rep.eutaxy->strongCoefficient)
        out << rationalToString(*rep.eutaxy->strongCoefficient);
    else if (!rep.eutaxy->coefficients.empty())
        out << "varies";
    else
        out << "-";
    out << " perfect=" << (rep.perfection->isPerfect ? "true" : "false");
    out << " rank=" << rep.perfection->spanRank << "/" << rep.perfection->required;
    out << " extreme=" << (rep.extreme && *rep.extreme ? "true" : "false");
    return out.str();
}

std::string renderMachine(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "frame source=" << rep.source << " n=" << rep.n << " k=" << rep.k << " d=" << rep.d
        << " kind=" << (rep.gramOnly ? "gram" : "coords") << "\n";
    out << "tight=" << (rep.tightness.isTight ? "true" : "false");
    if (rep.tightness.isTight)
        out << " A=" << rep.tightness.frameConstant.toString()
            << " gamma=" << rep.tightness.gamma.toString();
    out << "\n";
    if (rep.etf) {
        out << "etf=" << (rep.etf->isUnitEtf ? "unit" : (rep.etf->isEtf ? "scaled" : "none"));
        if (rep.etf->isEtf)
            out << " c=" << rep.etf->c.toString() << " alpha=" << rep.etf->alpha.toString()
                << " alphaInteger=" << (rep.etf->alphaIsInteger ? "true" : "false")
                << " maximal=" << (rep.etf->isMaximal ? "true" : "false");
        out << " gerzon=" << gerzonClassName(rep.gerzon) << "\n";
    }
    if (rep.rationality) {
        out << "rationality=" << rationalityKindName(rep.rationality->kind);
        if (rep.rationality->kind == RationalityClass::ScaledRational)
            out << " muSq=" << rep.rationality->muSquared.toString();
        out << "\n";
    }
    if (rep.detect) {
        out << "lattice=" << (rep.detect->isLattice ? "true" : "false") << " pivots=";
        for (std::size_t i = 0; i < rep.detect->pivotColumns.size(); ++i)
            out << (i ? "," : "") << rep.detect->pivotColumns[i];
        if (rep.detect->irrationalEntry)
            out << " witness=(" << rep.detect->irrationalEntry->first << ","
                << rep.detect->irrationalEntry->second << ")";
        out << "\n";
    }
    if (rep.lattice)
        out << "lattice=extracted rank=" << rep.lattice->k
            << " det=" << rationalToString(rep.lattice->detGram) << "\n";
    if (rep.minvec) {
        out << "minsq=" << rationalToString(rep.minvec->minNormSq)
            << " count=" << rep.minvec->vectors.size();
        if (rep.vsFrame) out << " vsframe=" << minvecVsFrameName(*rep.vsFrame);
        out << "\n";
    }
    if (rep.minNormBound)
        out << "minbound holds=" << (rep.minNormBound->holds ? "true" : "false")
            << " margin=" << rationalToString(rep.minNormBound->margin)
            << " alphaGramIntegral=" << (rep.minNormBound->alphaGramIntegral ? "true" : "false")
            << "\n";
    if (rep.subsetMode) out << "subset=+-F conditional\n";
    if (rep.eutaxy && rep.perfection) out << classificationLine(rep) << "\n";
    for (const auto& n : rep.notes) out << "note=" << n << "\n";
    if (rep.stageError) out << "error=" << *rep.stageError << "\n";
    return out.str();
}

std::string renderText(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "== " << rep.source << " ==\n";
    out << "system: n=" << rep.n << " k=" << rep.k << " over "
        << (rep.d == 0 ? std::string("Q") : "Q(sqrt " + std::to_string(rep.d) + ")")
        << (rep.gramOnly ? " (Gram form)" : " (coordinates)") << "\n";
    if (rep.tightness.isTight)
        out << "tight frame with constant A = " << rep.tightness.frameConstant.toString()
            << " (gamma = " << rep.tightness.gamma.toString() << ")\n";
    else
        out << "not a tight frame\n";
    if (rep.etf) {
        if (rep.etf->isUnitEtf)
            out << "unit equiangular tight frame: c = " << rep.etf->c.toString()
                << ", alpha = " << rep.etf->alpha.toString()
                << (rep.etf->alphaIsInteger ? " (integer)" : " (irrational)")
                << (rep.etf->isMaximal ? ", maximal" : "") << "\n";
        else if (rep.etf->isEtf)
            out << "equiangular tight frame up to scale (common |f|^2 = "
                << rep.etf->commonNormSq.toString() << "), alpha = " << rep.etf->alpha.toString()
                << "\n";
        else
            out << "not an equiangular tight frame (" << rep.etf->witness->reason << " at ("
                << rep.etf->witness->i << "," << rep.etf->witness->j << "))\n";
        out << "Gerzon range: " << gerzonClassName(rep.gerzon) << "\n";
    }
    if (rep.rationality) {
        out << "rationality: " << rationalityKindName(rep.rationality->kind);
        if (rep.rationality->kind == RationalityClass::ScaledRational)
            out << " (mu^2 = " << rep.rationality->muSquared.toString() << ")";
        out << "\n";
    }
    if (rep.detect) {
        if (rep.detect->isLattice)
            out << "integral span IS a lattice (all transformed columns rational)\n";
        else
            out << "integral span is NOT a lattice (irrational transformed entry at pivot row "
                << rep.detect->irrationalEntry->first << ", column "
                << rep.detect->irrationalEntry->second << ")\n";
    }
    if (rep.lattice)
        out << "lattice extracted: rank " << rep.lattice->k
            << ", det(Gram) = " << rationalToString(rep.lattice->detGram) << "\n";
    if (rep.minvec) {
        out << "minimal vectors: " << rep.minvec->vectors.size()
            << " of squared norm " << rationalToString(rep.minvec->minNormSq);
        if (rep.vsFrame) out << " [" << minvecVsFrameName(*rep.vsFrame) << "]";
        out << "\n";
    }
    if (rep.minNormBound)
        out << "minimal-norm bound " << (rep.minNormBound->holds ? "holds" : "FAILS")
            << ", margin " << rationalToString(rep.minNormBound->margin) << "\n";
    if (rep.subsetMode) out << "classification on the subset +-F (conditional on |L| = 1)\n";
    if (rep.eutaxy) {
        out << "eutaxy: " << eutaxyClassName(rep.eutaxy->cls);
        if (rep.eutaxy->strongCoefficient)
            out << " with coefficient " << rationalToString(*rep.eutaxy->strongCoefficient);
        out << "\n";
    }
    if (rep.perfection)
        out << "perfection: rank " << rep.perfection->spanRank << "/" << rep.perfection->required
            << (rep.perfection->isPerfect ? " (perfect)" : " (not perfect)")
            << (rep.perfection->usedClosedForm ? " [closed form]" : "") << "\n";
    if (rep.extreme) out << "extreme: " << (*rep.extreme ? "YES" : "no") << "\n";
    for (const auto& n : rep.notes) out << "  - " << n << "\n";
    if (rep.stageError) out << "ERROR " << *rep.stageError << "\n";
    return out.str();
}

} // namespace framelat
