// framelat: exact analysis of tight frames and the lattices they span.
//
// Subcommands: construct, analyze, minvec, classify, sepsearch.
// Exit codes: 0 success, 2 parse error, 3 validation failure, 4 budget
// exceeded, 5 internal invariant violation.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "framelat/analyze.hpp"
#include "framelat/construct.hpp"
#include "framelat/io.hpp"

namespace {

using namespace framelat;

struct CommonFlags {
    bool machine = false;
    bool noMinvec = false;
    std::uint64_t minvecBudget = kDefaultNodeBudget;
    bool allowLarge = false;
    std::string lllDelta = "3/4";
};

void addCommonFlags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_flag("--machine", f.machine, "line-oriented machine output");
    cmd->add_flag("--no-minvec", f.noMinvec, "skip enumeration; classify on the subset +-F");
    cmd->add_option("--minvec-budget", f.minvecBudget, "enumeration node budget (default 1e8)");
    cmd->add_flag("--allow-large", f.allowLarge, "unlock enumeration above the dimension gate");
    cmd->add_option("--lll-delta", f.lllDelta, "LLL parameter as p/q in (1/4,1), default 3/4");
}

AnalyzeOptions toOptions(const CommonFlags& f) {
    AnalyzeOptions opts;
    opts.runMinvec = !f.noMinvec;
    opts.minvecBudget = f.minvecBudget;
    opts.allowLarge = f.allowLarge;
    opts.lllDelta = parseRationalToken(f.lllDelta);
    return opts;
}

FrameInput constructByName(const std::string& kind, long k, long n, bool coords,
                           const std::string& seidelPath) {
    if (kind == "simplex") {
        if (k < 1) throw ValidationError("construct simplex needs --k");
        return constructSimplex(static_cast<std::size_t>(k));
    }
    if (kind == "harmonic2d") {
        if (n < 3) throw ValidationError("construct harmonic2d needs --n");
        return constructHarmonic2d(static_cast<std::size_t>(n));
    }
    if (kind == "icosahedron")
        return coords ? FrameInput(constructIcosahedronCoords())
                      : FrameInput(constructIcosahedronGram());
    if (kind == "etf28_7") return constructEtf28();
    if (kind == "etf276_23") {
        if (seidelPath.empty()) throw ValidationError("construct etf276_23 needs --seidel <file>");
        return constructEtf276(parseSeidelFile(seidelPath));
    }
    throw ValidationError("unknown construction '" + kind +
                          "' (simplex, harmonic2d, icosahedron, etf28_7, etf276_23)");
}

int runGuarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}

int exitCodeForStageError(const std::string& stageError) {
    // minvec budget failures map to the budget exit code; everything else
    // that reaches a partial report is a validation-level failure.
    if (stageError.rfind("minvec:", 0) == 0) return 4;
    return 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tight-frame and lattice analysis"};
    app.require_subcommand(1);

    // construct
    std::string kind, outPath, seidelPath;
    long optK = 0, optN = 0;
    bool coords = false;
    CLI::App* cmdConstruct = app.add_subcommand("construct", "build a bundled vector system");
    cmdConstruct->add_option("kind", kind, "simplex|harmonic2d|icosahedron|etf28_7|etf276_23")
        ->required();
    cmdConstruct->add_option("--k", optK, "dimension parameter (simplex)");
    cmdConstruct->add_option("--n", optN, "vector count (harmonic2d)");
    cmdConstruct->add_flag("--coords", coords, "coordinate variant where available");
    cmdConstruct->add_option("--seidel", seidelPath, "seidel matrix file (etf276_23)");
    cmdConstruct->add_option("--out", outPath, "output frame file")->required();

    // analyze / classify / minvec / sepsearch share an input path and flags
    std::string analyzePath, classifyPath, minvecPath, sepPath;
    CommonFlags af, cf, mf, sf;
    CLI::App* cmdAnalyze = app.add_subcommand("analyze", "full pipeline report");
    cmdAnalyze->add_option("frame", analyzePath, "frame file")->required();
    addCommonFlags(cmdAnalyze, af);

    CLI::App* cmdClassify = app.add_subcommand("classify", "eutaxy/perfection/extremality only");
    cmdClassify->add_option("frame", classifyPath, "frame file")->required();
    addCommonFlags(cmdClassify, cf);

    CLI::App* cmdMinvec = app.add_subcommand("minvec", "enumerate the minimal vectors");
    cmdMinvec->add_option("frame", minvecPath, "frame file")->required();
    addCommonFlags(cmdMinvec, mf);

    long radius = 0;
    std::uint64_t sepBudget = 4000000;
    CLI::App* cmdSep = app.add_subcommand("sepsearch", "norm-form separated-values falsifier");
    cmdSep->add_option("frame", sepPath, "frame file")->required();
    cmdSep->add_option("--radius", radius, "enumeration box radius")->required();
    cmdSep->add_option("--budget", sepBudget, "value-count budget (default 4e6)");
    cmdSep->add_flag("--machine", sf.machine, "line-oriented machine output");

    CLI11_PARSE(app, argc, argv);

    if (cmdConstruct->parsed())
        return runGuarded([&] {
            FrameInput f = constructByName(kind, optK, optN, coords, seidelPath);
            writeFrameFile(f, outPath);
            std::cout << "wrote " << outPath << " (n=" << frameN(f) << " k=" << frameK(f) << ")\n";
            return 0;
        });

    if (cmdAnalyze->parsed() || cmdClassify->parsed()) {
        const bool classifyOnly = cmdClassify->parsed();
        const std::string& path = classifyOnly ? classifyPath : analyzePath;
        const CommonFlags& flags = classifyOnly ? cf : af;
        return runGuarded([&] {
            FrameInput f = parseFrameFile(path);
            AnalysisReport rep = analyze(f, toOptions(flags), path);
            if (classifyOnly) {
                std::string line = classificationLine(rep);
                if (line.empty()) {
                    std::cerr << "classification did not run: "
                              << (rep.stageError ? *rep.stageError : "pipeline stopped early")
                              << "\n";
                    return rep.stageError ? exitCodeForStageError(*rep.stageError) : 3;
                }
                std::cout << line << "\n";
                return 0;
            }
            std::cout << (flags.machine ? renderMachine(rep) : renderText(rep));
            if (rep.stageError) return exitCodeForStageError(*rep.stageError);
            return 0;
        });
    }

    if (cmdMinvec->parsed())
        return runGuarded([&] {
            FrameInput f = parseFrameFile(minvecPath);
            GramFrame gf = toGramFrame(f);
            if (rationalityClass(f).kind != RationalityClass::Rational)
                throw ValidationError("minvec needs a rational system (no lattice otherwise)");
            AnalyzeOptions opts = toOptions(mf);
            if (gf.k >= opts.largeDimensionGate && !opts.allowLarge)
                throw BudgetError("enumeration in dimension " + std::to_string(gf.k) +
                                  " is gated behind --allow-large");
            QuadraticLattice lat = spanToLattice(gf, opts.lllDelta);
            MinimalVectorSet s = minimalVectors(lat, opts.minvecBudget);
            std::cout << "minsq=" << rationalToString(s.minNormSq) << " count=" << s.vectors.size()
                      << "\n";
            for (const auto& v : s.vectors) {
                for (std::size_t i = 0; i < v.size(); ++i)
                    std::cout << (i ? " " : "") << v[i].get_str();
                std::cout << "\n";
            }
            return 0;
        });

    if (cmdSep->parsed())
        return runGuarded([&] {
            FrameInput f = parseFrameFile(sepPath);
            GramFrame gf = toGramFrame(f);
            SeparationReport rep = separationSearch(gf.m, radius, sepBudget);
            std::cout << "sep gap=" << rep.minPositiveGap.toString() << " a=";
            for (std::size_t i = 0; i < rep.witnessA.size(); ++i)
                std::cout << (i ? "," : "") << rep.witnessA[i].get_str();
            std::cout << " b=";
            for (std::size_t i = 0; i < rep.witnessB.size(); ++i)
                std::cout << (i ? "," : "") << rep.witnessB[i].get_str();
            std::cout << " radius=" << rep.radius << "\n";
            if (rep.quantizationFloor)
                std::cout << "quantization floor=" << rationalToString(*rep.quantizationFloor)
                          << " (rational form: separation holds globally)\n";
            else
                std::cout << "irrational form: gap exhibited, separation not certified\n";
            return 0;
        });

    return 0;
}
