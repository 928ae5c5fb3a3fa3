#include "framelat/io.hpp"

#include <fstream>
#include <sstream>

namespace framelat {

namespace {

[[noreturn]] void parseFail(const std::string& name, std::size_t line, const std::string& msg) {
    throw ParseError(name + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> splitWhitespace(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long parseHeaderValue(const std::string& tok, const std::string& key, const std::string& name,
                      std::size_t line) {
    if (tok.rfind(key + "=", 0) != 0) parseFail(name, line, "expected '" + key + "=<value>'");
    try {
        std::size_t used = 0;
        long v = std::stol(tok.substr(key.size() + 1), &used);
        if (used != tok.size() - key.size() - 1) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        parseFail(name, line, "bad integer in '" + tok + "'");
    }
}

} // namespace

QuadScalar parseScalarToken(const std::string& tok, long d) {
    std::size_t bar = tok.find('|');
    if (bar == std::string::npos) return QuadScalar(parseRationalToken(tok));
    if (d == 0) throw ParseError("quadratic token '" + tok + "' in a rational file");
    Rational a = parseRationalToken(tok.substr(0, bar));
    Rational b = parseRationalToken(tok.substr(bar + 1));
    if (b == 0) throw ParseError("non-canonical quadratic token '" + tok + "' (zero surd part)");
    return QuadScalar(a, b, d);
}

std::string scalarToToken(const QuadScalar& s) {
    return s.toString();
}

FrameInput parseFrameText(std::istream& in, const std::string& name) {
    std::string header;
    if (!std::getline(in, header)) parseFail(name, 1, "empty file");
    auto toks = splitWhitespace(header);
    if (toks.size() < 3 || toks[0] != "frame") parseFail(name, 1, "expected 'frame coords|gram ...'");
    const bool coords = toks[1] == "coords";
    if (!coords && toks[1] != "gram") parseFail(name, 1, "unknown frame kind '" + toks[1] + "'");

    if (coords ? toks.size() != 5 : (toks.size() != 4 && toks.size() != 5))
        parseFail(name, 1, "malformed header");
    long n = parseHeaderValue(toks[2], "n", name, 1);
    long k = parseHeaderValue(toks[3], "k", name, 1);
    long d = 0;
    if (toks.size() == 5) d = parseHeaderValue(toks[4], "d", name, 1);
    if (n <= 0 || k <= 0) parseFail(name, 1, "n and k must be positive");
    if (d < 0) parseFail(name, 1, "d must be nonnegative");

    const std::size_t rows = coords ? static_cast<std::size_t>(k) : static_cast<std::size_t>(n);
    const std::size_t cols = static_cast<std::size_t>(n);
    QuadMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::string line;
        if (!std::getline(in, line)) parseFail(name, i + 2, "unexpected end of file");
        auto row = splitWhitespace(line);
        if (row.size() != cols)
            parseFail(name, i + 2,
                      "expected " + std::to_string(cols) + " tokens, got " + std::to_string(row.size()));
        for (std::size_t j = 0; j < cols; ++j) {
            try {
                m(i, j) = parseScalarToken(row[j], d);
            } catch (const ParseError& e) {
                parseFail(name, i + 2, "column " + std::to_string(j + 1) + ": " + e.what());
            }
        }
    }
    std::string trailing;
    while (std::getline(in, trailing))
        if (!splitWhitespace(trailing).empty()) parseFail(name, rows + 2, "trailing content");

    if (coords)
        return makeFrame(static_cast<std::size_t>(n), static_cast<std::size_t>(k), d, std::move(m));
    return makeGramFrame(static_cast<std::size_t>(n), static_cast<std::size_t>(k), std::move(m));
}

FrameInput parseFrameFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return parseFrameText(in, path);
}

std::string frameToText(const FrameInput& frame) {
    std::ostringstream out;
    if (const auto* f = std::get_if<Frame>(&frame)) {
        out << "frame coords n=" << f->n << " k=" << f->k << " d=" << f->d << "\n";
        for (std::size_t i = 0; i < f->k; ++i) {
            for (std::size_t j = 0; j < f->n; ++j) out << (j ? " " : "") << f->g(i, j).toString();
            out << "\n";
        }
        return out.str();
    }
    const GramFrame& gf = std::get<GramFrame>(frame);
    out << "frame gram n=" << gf.n << " k=" << gf.k;
    if (gf.d != 0) out << " d=" << gf.d;
    out << "\n";
    for (std::size_t i = 0; i < gf.n; ++i) {
        for (std::size_t j = 0; j < gf.n; ++j) out << (j ? " " : "") << gf.m(i, j).toString();
        out << "\n";
    }
    return out.str();
}

void writeFrameFile(const FrameInput& frame, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError(path + ": cannot write");
    out << frameToText(frame);
}

IntMatrix parseSeidelFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    std::string header;
    if (!std::getline(in, header)) parseFail(path, 1, "empty file");
    auto toks = splitWhitespace(header);
    if (toks.size() != 2 || toks[0] != "seidel") parseFail(path, 1, "expected 'seidel n=<n>'");
    long n = parseHeaderValue(toks[1], "n", path, 1);
    if (n <= 0) parseFail(path, 1, "n must be positive");

    IntMatrix s(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        std::string line;
        if (!std::getline(in, line)) parseFail(path, static_cast<std::size_t>(i) + 2, "unexpected end of file");
        if (line.size() != static_cast<std::size_t>(n))
            parseFail(path, static_cast<std::size_t>(i) + 2,
                      "expected " + std::to_string(n) + " characters");
        for (long j = 0; j < n; ++j) {
            char c = line[static_cast<std::size_t>(j)];
            if (c == '+')
                s(i, j) = 1;
            else if (c == '-')
                s(i, j) = -1;
            else if (c == '0')
                s(i, j) = 0;
            else
                parseFail(path, static_cast<std::size_t>(i) + 2, std::string("bad character '") + c + "'");
            if ((i == j) != (c == '0'))
                parseFail(path, static_cast<std::size_t>(i) + 2, "'0' must appear exactly on the diagonal");
        }
    }
    return s;
}

void writeSeidelFile(const IntMatrix& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError(path + ": cannot write");
    out << "seidel n=" << s.rows() << "\n";
    for (std::size_t i = 0; i < s.rows(); ++i) {
        for (std::size_t j = 0; j < s.cols(); ++j)
            out << (i == j ? '0' : (s(i, j) > 0 ? '+' : '-'));
        out << "\n";
    }
}

} // namespace framelat
