// Generates the Seidel matrix of the regular two-graph on 276 points and
// writes it in the seidel file format.
//
// Construction: the binary Golay code of length 23 gives the Steiner system
// S(4,7,23); fixing a point yields a 275-vertex strongly regular graph with
// parameters (275, 112, 30, 56); bordering its Seidel matrix with a row and
// column of +1 gives a 276 x 276 matrix with S^2 = 50 S + 275 I. Every stage
// is verified before the file is written.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

int deg(u64 p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

u64 polyMul(u64 a, u64 b) {
    u64 r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

// quotient and remainder of a / m over GF(2)
std::pair<u64, u64> polyDivMod(u64 a, u64 m) {
    u64 q = 0;
    int dm = deg(m);
    while (a && deg(a) >= dm) {
        int s = deg(a) - dm;
        q |= u64(1) << s;
        a ^= m << s;
    }
    return {q, a};
}

int popcount(u32 x) { return __builtin_popcount(x); }

[[noreturn]] void fail(const std::string& msg) {
    std::cerr << "gen_seidel276: " << msg << "\n";
    std::exit(1);
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_seidel276 <output path>\n";
        return 1;
    }

    // x^23 + 1 = (x + 1) g1(x) g2(x); find a degree-11 factor by search.
    const u64 x23p1 = (u64(1) << 23) | 1;
    auto [quot, rem0] = polyDivMod(x23p1, 0b11);
    if (rem0 != 0) fail("x+1 does not divide x^23+1");
    u64 g = 0;
    for (u64 cand = u64(1) << 11; cand < (u64(1) << 12); ++cand) {
        auto [q, r] = polyDivMod(quot, cand);
        if (r == 0) {
            g = cand;
            break;
        }
    }
    if (g == 0) fail("no degree-11 factor found");

    // cyclic [23,12] code: m(x) g(x) for all messages of degree <= 11,
    // extended by an overall parity bit in position 23.
    std::vector<u32> octads;
    for (u32 m = 0; m < (u32(1) << 12); ++m) {
        u32 c = static_cast<u32>(polyMul(m, g));
        int w = popcount(c);
        if (w & 1) {
            c |= u32(1) << 23;
            ++w;
        }
        if (w == 8) octads.push_back(c);
        if (c && w < 8) fail("codeword of weight < 8: minimum distance broken");
    }
    if (octads.size() != 759) fail("expected 759 octads, got " + std::to_string(octads.size()));

    // derived S(4,7,23): octads through the parity point, point removed
    std::vector<u32> heptads;
    for (u32 o : octads)
        if (o & (u32(1) << 23)) heptads.push_back(o & ~(u32(1) << 23));
    if (heptads.size() != 253) fail("expected 253 heptads");

    // 275-vertex graph: fix p = 22 among the 23 remaining points
    const int p = 22;
    std::vector<u32> vertexMask;   // points as singletons, then blocks
    std::vector<int> vertexKind;   // 0 = point, 1 = block thru p, 2 = block avoiding p
    for (int x = 0; x < 23; ++x)
        if (x != p) {
            vertexMask.push_back(u32(1) << x);
            vertexKind.push_back(0);
        }
    for (u32 h : heptads)
        if (h & (u32(1) << p)) {
            vertexMask.push_back(h);
            vertexKind.push_back(1);
        }
    for (u32 h : heptads)
        if (!(h & (u32(1) << p))) {
            vertexMask.push_back(h);
            vertexKind.push_back(2);
        }
    const std::size_t nv = vertexMask.size();
    if (nv != 275) fail("expected 275 vertices");

    std::vector<std::int8_t> adj(nv * nv, 0);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            int ki = vertexKind[i], kj = vertexKind[j];
            u32 vi = vertexMask[i], vj = vertexMask[j];
            int inter = popcount(vi & vj);
            bool edge = false;
            if (ki == 0 && kj == 0)
                edge = false;                       // the 22 points form a coclique
            else if (ki == 0 && kj == 1)
                edge = inter == 0;                  // point outside a block through p
            else if (ki == 0 && kj == 2)
                edge = inter == 1;                  // point inside a block avoiding p
            else if (ki == 1 && kj == 1)
                edge = inter == 1;                  // blocks meeting only in p
            else if (ki == 1 && kj == 2)
                edge = inter == 3;
            else
                edge = inter == 1;                  // both avoid p
            if (edge) adj[i * nv + j] = adj[j * nv + i] = 1;
        }

    // strongly regular (275, 112, 30, 56)
    for (std::size_t i = 0; i < nv; ++i) {
        int degv = 0;
        for (std::size_t j = 0; j < nv; ++j) degv += adj[i * nv + j];
        if (degv != 112) fail("vertex degree " + std::to_string(degv) + ", expected 112");
    }
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            int common = 0;
            for (std::size_t l = 0; l < nv; ++l) common += adj[i * nv + l] & adj[j * nv + l];
            int expect = adj[i * nv + j] ? 30 : 56;
            if (common != expect) fail("common-neighbour count violates (275,112,30,56)");
        }

    // Seidel matrix of the graph, bordered by +1
    const std::size_t n = 276;
    std::vector<int> s(n * n, 0);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j)
            if (i != j) s[(i + 1) * n + (j + 1)] = adj[i * nv + j] ? -1 : 1;
    for (std::size_t i = 1; i < n; ++i) s[i] = s[i * n] = 1;

    // S^2 = 50 S + 275 I
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long acc = 0;
            for (std::size_t l = 0; l < n; ++l) acc += long(s[i * n + l]) * long(s[l * n + j]);
            long expect = 50L * s[i * n + j] + (i == j ? 275L : 0L);
            if (acc != expect) fail("S^2 = 50S + 275I fails");
        }

    FILE* out = std::fopen(argv[1], "w");
    if (!out) fail(std::string("cannot write ") + argv[1]);
    std::fprintf(out, "seidel n=%zu\n", n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            std::fputc(i == j ? '0' : (s[i * n + j] > 0 ? '+' : '-'), out);
        std::fputc('\n', out);
    }
    std::fclose(out);
    std::cout << "wrote " << argv[1] << " (all stage checks passed)\n";
    return 0;
}
