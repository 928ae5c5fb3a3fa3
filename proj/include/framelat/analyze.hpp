#pragma once

#include <optional>
#include <string>

#include "framelat/classify.hpp"
#include "framelat/frame.hpp"
#include "framelat/lattice.hpp"

namespace framelat {

struct AnalyzeOptions {
    bool runMinvec = true;        // full shortest-vector enumeration
    std::uint64_t minvecBudget = kDefaultNodeBudget;
    bool allowLarge = false;      // unlock enumeration above the dimension gate
    Rational lllDelta = Rational(3, 4);
    std::size_t largeDimensionGate = 10;
};

// End-to-end pipeline: tightness -> ETF/alpha -> rationality -> latticehood
// (span extraction for rational input, the G0^-1 G test otherwise) ->
// minimal vectors -> eutaxy/perfection -> extremality. A stage failure stops
// the pipeline and leaves a partial report with a stage-named error.
struct AnalysisReport {
    std::string source;
    std::size_t n = 0, k = 0;
    long d = 0;
    bool gramOnly = false;

    TightnessReport tightness;
    std::optional<EtfReport> etf;
    GerzonClass gerzon = GerzonClass::BelowRange;
    std::optional<RationalityClass> rationality;

    std::optional<LatticeDetectReport> detect;  // non-rational path
    std::optional<QuadraticLattice> lattice;    // rational path

    std::optional<MinimalVectorSet> minvec;
    std::optional<MinvecVsFrame> vsFrame;
    std::optional<MinNormBound> minNormBound;
    bool subsetMode = false;  // classification ran on +-F, conditional on |L|=1

    std::optional<EutaxyReport> eutaxy;
    std::optional<PerfectionReport> perfection;
    std::optional<bool> extreme;

    std::vector<std::string> notes;          // which rule produced each verdict
    std::optional<std::string> stageError;   // "<stage>: <message>"
};

AnalysisReport analyze(const FrameInput& input, const AnalyzeOptions& opts,
                       const std::string& source);

std::string renderMachine(const AnalysisReport& rep);
std::string renderText(const AnalysisReport& rep);

// The one-line classification summary required by the machine format.
std::string classificationLine(const AnalysisReport& rep);

} // namespace framelat
