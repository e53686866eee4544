#pragma once

#include <string>
#include <vector>

namespace arrlat {

/// Simple undirected graph with integer vertex colors.
struct ColoredGraph {
    std::vector<long long> color;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists, no multi-edges

    int size() const { return static_cast<int>(color.size()); }
    int add_vertex(long long c);
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
};

struct CanonicalLabeling {
    std::vector<int> order;   // canonical position -> vertex
    std::string certificate;  // equal iff a color-preserving isomorphism exists
};

// Canonical form via equitable refinement plus backtracking over the residual
// symmetry, pruned by automorphisms discovered along the way.
CanonicalLabeling canonical_labeling(const ColoredGraph& g);

}  // namespace arrlat
