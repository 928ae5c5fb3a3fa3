#include "framelat/construct.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace framelat {

namespace {

// cos(2*pi*m/n) for the supported n, as an exact quadratic scalar.
QuadScalar exactCos(std::size_t n, std::size_t m) {
    m %= n;
    auto q = [](long num, long den) { return QuadScalar(makeRational(num, den)); };
    auto surd = [](long num, long den, long d) {
        return QuadScalar(Rational(0), makeRational(num, den), d);
    };
    switch (n) {
        case 3: {
            const QuadScalar v[] = {q(1, 1), q(-1, 2), q(-1, 2)};
            return v[m];
        }
        case 4: {
            const QuadScalar v[] = {q(1, 1), q(0, 1), q(-1, 1), q(0, 1)};
            return v[m];
        }
        case 5: {
            const QuadScalar v[] = {q(1, 1), QuadScalar(makeRational(-1, 4), makeRational(1, 4), 5),
                                    QuadScalar(makeRational(-1, 4), makeRational(-1, 4), 5),
                                    QuadScalar(makeRational(-1, 4), makeRational(-1, 4), 5),
                                    QuadScalar(makeRational(-1, 4), makeRational(1, 4), 5)};
            return v[m];
        }
        case 6: {
            const QuadScalar v[] = {q(1, 1), q(1, 2), q(-1, 2), q(-1, 1), q(-1, 2), q(1, 2)};
            return v[m];
        }
        case 8: {
            const QuadScalar v[] = {q(1, 1), surd(1, 2, 2), q(0, 1), surd(-1, 2, 2),
                                    q(-1, 1), surd(-1, 2, 2), q(0, 1), surd(1, 2, 2)};
            return v[m];
        }
        case 10: {
            const QuadScalar phiQ(makeRational(1, 4), makeRational(1, 4), 5);    // cos 36
            const QuadScalar psiQ(makeRational(-1, 4), makeRational(1, 4), 5);   // cos 72
            const QuadScalar v[] = {q(1, 1), phiQ, psiQ, -psiQ, -phiQ, q(-1, 1), -phiQ, -psiQ, psiQ, phiQ};
            return v[m];
        }
        case 12: {
            const QuadScalar v[] = {q(1, 1),  surd(1, 2, 3),  q(1, 2),  q(0, 1),
                                    q(-1, 2), surd(-1, 2, 3), q(-1, 1), surd(-1, 2, 3),
                                    q(-1, 2), q(0, 1),        q(1, 2),  surd(1, 2, 3)};
            return v[m];
        }
        default:
            throw ValidationError("harmonic2d supports n in {3,4,5,6,8,10,12}");
    }
}

QuadScalar exactSin(std::size_t n, std::size_t m) {
    m %= n;
    auto q = [](long num, long den) { return QuadScalar(makeRational(num, den)); };
    auto surd = [](long num, long den, long d) {
        return QuadScalar(Rational(0), makeRational(num, den), d);
    };
    switch (n) {
        case 3: {
            const QuadScalar v[] = {q(0, 1), surd(1, 2, 3), surd(-1, 2, 3)};
            return v[m];
        }
        case 4: {
            const QuadScalar v[] = {q(0, 1), q(1, 1), q(0, 1), q(-1, 1)};
            return v[m];
        }
        case 6: {
            const QuadScalar v[] = {q(0, 1), surd(1, 2, 3), surd(1, 2, 3),
                                    q(0, 1), surd(-1, 2, 3), surd(-1, 2, 3)};
            return v[m];
        }
        case 8: {
            const QuadScalar v[] = {q(0, 1), surd(1, 2, 2), q(1, 1), surd(1, 2, 2),
                                    q(0, 1), surd(-1, 2, 2), q(-1, 1), surd(-1, 2, 2)};
            return v[m];
        }
        case 12: {
            const QuadScalar v[] = {q(0, 1),  q(1, 2),  surd(1, 2, 3),  q(1, 1),
                                    surd(1, 2, 3), q(1, 2), q(0, 1),    q(-1, 2),
                                    surd(-1, 2, 3), q(-1, 1), surd(-1, 2, 3), q(-1, 2)};
            return v[m];
        }
        default:
            throw ValidationError("harmonic2d has no exact single-field coordinates for n = " +
                                  std::to_string(n));
    }
}

// Symmetric conference matrix of order 6 (Paley over GF(5)): C^2 = 5 I.
// Any representative of the icosahedral switching class works here.
constexpr std::array<std::array<int, 6>, 6> kConference6 = {{
    {0, 1, 1, 1, 1, 1},
    {1, 0, 1, -1, -1, 1},
    {1, 1, 0, 1, -1, -1},
    {1, -1, 1, 0, 1, -1},
    {1, -1, -1, 1, 0, 1},
    {1, 1, -1, -1, 1, 0},
}};

} // namespace

GramFrame constructSimplex(std::size_t k) {
    if (k == 0) throw ValidationError("simplex requires k >= 1");
    const std::size_t n = k + 1;
    QuadMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = i == j ? QuadScalar(1) : QuadScalar(makeRational(-1, static_cast<long>(k)));
    return makeGramFrame(n, k, std::move(m));
}

FrameInput constructHarmonic2d(std::size_t n) {
    const bool gramOnly = n == 5 || n == 10;
    if (gramOnly) {
        QuadMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = exactCos(n, i >= j ? i - j : j - i);
        return makeGramFrame(n, 2, std::move(m));
    }
    long d = n == 8 ? 2 : (n == 4 ? 0 : 3);
    QuadMatrix g(2, n);
    for (std::size_t j = 0; j < n; ++j) {
        g(0, j) = exactCos(n, j);
        g(1, j) = exactSin(n, j);
    }
    return makeFrame(n, 2, d, std::move(g));
}

GramFrame constructIcosahedronGram() {
    QuadMatrix m(6, 6);
    const QuadScalar invRoot5(Rational(0), makeRational(1, 5), 5);  // 1/sqrt(5)
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            m(i, j) = i == j ? QuadScalar(1) : invRoot5 * QuadScalar(Rational(kConference6[i][j]));
    return makeGramFrame(6, 3, std::move(m));
}

Frame constructIcosahedronCoords() {
    // One direction per icosahedron diagonal; phi = (1+sqrt 5)/2.
    const QuadScalar phi(makeRational(1, 2), makeRational(1, 2), 5);
    const QuadScalar one(1), zero(0);
    const QuadScalar cols[6][3] = {
        {zero, one, phi},  {zero, -one, phi},  {one, phi, zero},
        {-one, phi, zero}, {phi, zero, one},   {phi, zero, -one},
    };
    QuadMatrix g(3, 6);
    for (std::size_t j = 0; j < 6; ++j)
        for (std::size_t i = 0; i < 3; ++i) g(i, j) = cols[j][i];
    return makeFrame(6, 3, 5, std::move(g));
}

GramFrame constructEtf28() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) pairs.emplace_back(i, j);
    const std::size_t n = pairs.size();  // 28
    QuadMatrix m(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q) {
                m(p, q) = QuadScalar(1);
                continue;
            }
            int shared = (pairs[p].first == pairs[q].first) + (pairs[p].first == pairs[q].second) +
                         (pairs[p].second == pairs[q].first) + (pairs[p].second == pairs[q].second);
            m(p, q) = QuadScalar(makeRational(shared == 1 ? 1 : -1, 3));
        }
    return makeGramFrame(n, 7, std::move(m));
}

void validateSeidel276(const IntMatrix& s) {
    const std::size_t n = 276;
    if (s.rows() != n || s.cols() != n)
        throw ValidationError("seidel matrix: wrong size " + std::to_string(s.rows()) + "x" +
                              std::to_string(s.cols()) + ", expected 276x276");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (s(i, j) != s(j, i)) throw ValidationError("seidel matrix: not symmetric");
            if (i == j && s(i, j) != 0) throw ValidationError("seidel matrix: nonzero diagonal");
            if (i != j && s(i, j) != 1 && s(i, j) != -1)
                throw ValidationError("seidel matrix: entry outside {-1,+1}");
        }
    // S^2 = 50 S + 275 I, checked in 64-bit (entries of S^2 are bounded by n).
    std::vector<std::int64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<std::int64_t>(s(i, j).get_si());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (std::size_t l = 0; l < n; ++l) acc += a[i * n + l] * a[l * n + j];
            std::int64_t expect = 50 * a[i * n + j] + (i == j ? 275 : 0);
            if (acc != expect)
                throw ValidationError("seidel matrix: S^2 = 50S + 275I fails at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

GramFrame constructEtf276(const IntMatrix& seidel) {
    validateSeidel276(seidel);
    const std::size_t n = 276;
    QuadMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = i == j ? QuadScalar(1)
                             : QuadScalar(makeRational(Int(seidel(i, j)), Int(5)));
    return makeGramFrame(n, 23, std::move(m));
}

} // namespace framelat
