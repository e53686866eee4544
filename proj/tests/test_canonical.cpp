#include <doctest.h>

#include <numeric>
#include <random>

#include "arrlat/canonical.hpp"

using namespace arrlat;

namespace {

ColoredGraph cycle(int n, long long color = 0) {
    ColoredGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(color);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm) {
    ColoredGraph h;
    for (int v = 0; v < g.size(); ++v) h.add_vertex(0);
    for (int v = 0; v < g.size(); ++v) h.color[static_cast<size_t>(perm[static_cast<size_t>(v)])] = g.color[static_cast<size_t>(v)];
    for (int v = 0; v < g.size(); ++v)
        for (int w : g.adj[static_cast<size_t>(v)])
            if (v < w) h.add_edge(perm[static_cast<size_t>(v)], perm[static_cast<size_t>(w)]);
    return h;
}

}  // namespace

TEST_CASE("certificates are invariant under relabeling") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 19);
        ColoredGraph g;
        for (int v = 0; v < n; ++v) g.add_vertex(static_cast<long long>(rng() % 3));
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (rng() % 3 == 0) g.add_edge(v, w);

        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        CHECK(canonical_labeling(g).certificate == canonical_labeling(relabel(g, perm)).certificate);
    }
}

TEST_CASE("certificates separate non-isomorphic regular graphs") {
    // both 2-regular on 6 vertices
    ColoredGraph c6 = cycle(6);
    ColoredGraph two_triangles;
    for (int i = 0; i < 6; ++i) two_triangles.add_vertex(0);
    for (int t = 0; t < 2; ++t)
        for (int i = 0; i < 3; ++i) two_triangles.add_edge(3 * t + i, 3 * t + (i + 1) % 3);
    CHECK(canonical_labeling(c6).certificate != canonical_labeling(two_triangles).certificate);
}

TEST_CASE("colors take part in the certificate") {
    ColoredGraph a = cycle(4);
    ColoredGraph b = cycle(4);
    b.color = {1, 0, 1, 0};  // alternating colors around the cycle
    ColoredGraph c = cycle(4);
    c.color = {1, 1, 0, 0};  // adjacent equal colors
    CHECK(canonical_labeling(a).certificate != canonical_labeling(b).certificate);
    CHECK(canonical_labeling(b).certificate != canonical_labeling(c).certificate);
}

TEST_CASE("highly symmetric graphs canonicalize") {
    // complete graph: every labeling is equivalent
    ColoredGraph k7;
    for (int i = 0; i < 7; ++i) k7.add_vertex(0);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) k7.add_edge(i, j);
    CanonicalLabeling c = canonical_labeling(k7);
    CHECK(c.order.size() == 7);

    std::mt19937_64 rng(9);
    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_labeling(relabel(k7, perm)).certificate == c.certificate);
}

namespace {

// ground truth for small graphs: try all vertex bijections
bool brute_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.size() != b.size()) return false;
    const int n = a.size();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (a.color[static_cast<size_t>(v)] != b.color[static_cast<size_t>(perm[static_cast<size_t>(v)])]) ok = false;
            for (int w = v + 1; w < n && ok; ++w)
                if (a.adjacent(v, w) != b.adjacent(perm[static_cast<size_t>(v)], perm[static_cast<size_t>(w)])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

ColoredGraph random_graph(std::mt19937_64& rng, int n, int colors, int edge_denominator) {
    ColoredGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(static_cast<long long>(rng() % static_cast<unsigned>(colors)));
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (rng() % static_cast<unsigned>(edge_denominator) == 0) g.add_edge(v, w);
    return g;
}

}  // namespace

TEST_CASE("certificate equality matches brute-force isomorphism on small graphs") {
    std::mt19937_64 rng(15);
    int equal_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        ColoredGraph a = random_graph(rng, n, 2, 2);
        ColoredGraph b = random_graph(rng, n, 2, 2);
        bool certs = canonical_labeling(a).certificate == canonical_labeling(b).certificate;
        CHECK(certs == brute_isomorphic(a, b));
        if (certs) ++equal_seen;
    }
    CHECK(equal_seen > 0);  // the sample actually exercises both outcomes
}

TEST_CASE("strongly regular pair that refinement alone cannot split") {
    // 4x4 rook's graph and the Shrikhande graph share all degree and
    // common-neighbor statistics; only the backtracking separates them
    auto vertex = [](int i, int j) { return 4 * ((i % 4 + 4) % 4) + ((j % 4 + 4) % 4); };

    ColoredGraph rook;
    for (int v = 0; v < 16; ++v) rook.add_vertex(0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) rook.add_edge(vertex(i, j), vertex(i, k));
            for (int k = i + 1; k < 4; ++k) rook.add_edge(vertex(i, j), vertex(k, j));
        }

    ColoredGraph shrikhande;
    for (int v = 0; v < 16; ++v) shrikhande.add_vertex(0);
    const int diffs[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (const auto& d : diffs) {
                int u = vertex(i, j), w = vertex(i + d[0], j + d[1]);
                if (!shrikhande.adjacent(u, w)) shrikhande.add_edge(u, w);
            }

    for (int v = 0; v < 16; ++v) {
        REQUIRE(rook.adj[static_cast<size_t>(v)].size() == 6);
        REQUIRE(shrikhande.adj[static_cast<size_t>(v)].size() == 6);
    }

    std::string rook_cert = canonical_labeling(rook).certificate;
    std::string shri_cert = canonical_labeling(shrikhande).certificate;
    CHECK(rook_cert != shri_cert);

    std::mt19937_64 rng(21);
    std::vector<int> perm(16);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_labeling(relabel(rook, perm)).certificate == rook_cert);
    CHECK(canonical_labeling(relabel(shrikhande, perm)).certificate == shri_cert);
}

TEST_CASE("canonical order reproduces the certificate") {
    std::mt19937_64 rng(13);
    ColoredGraph g;
    for (int v = 0; v < 8; ++v) g.add_vertex(static_cast<long long>(v % 2));
    for (int v = 0; v < 8; ++v)
        for (int w = v + 1; w < 8; ++w)
            if (rng() % 2) g.add_edge(v, w);

    CanonicalLabeling c = canonical_labeling(g);
    // applying the canonical order as a relabeling and canonicalizing again
    // must reproduce the same certificate
    std::vector<int> to_position(8);
    for (int pos = 0; pos < 8; ++pos) to_position[static_cast<size_t>(c.order[static_cast<size_t>(pos)])] = pos;
    CHECK(canonical_labeling(relabel(g, to_position)).certificate == c.certificate);
}
