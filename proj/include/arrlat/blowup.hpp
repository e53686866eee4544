#pragma once

#include "arrlat/lattice.hpp"

namespace arrlat {

struct NotBlowupShaped : std::runtime_error {
    explicit NotBlowupShaped(const std::string& what) : std::runtime_error(what) {}
};

enum class CurveKind { StrictTransform, Exceptional };

struct GraphVertex {
    CurveKind kind;
    int index;   // line index for strict transforms, lattice point id for exceptionals
    int weight;  // self-intersection number
};

struct GraphEdge {
    int u, v;   // vertex ids, u < v
    int point;  // originating lattice point id (diagnostic label only)
};

/// Curves of the arrangement after blowing up the multiple points, with
/// self-intersection weights; edges are the intersection points.
struct WeightedIncidenceGraph {
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;  // sorted by (u, v)

    std::vector<std::vector<int>> adjacency() const;
};

// One exceptional curve per point of multiplicity >= 3; strict transform of
// line i has weight 1 minus the number of multiple points on it.
WeightedIncidenceGraph blow_up(const IntersectionLattice& lat);

struct GraphCertificate {
    std::string certificate;
    friend bool operator==(const GraphCertificate&, const GraphCertificate&) = default;
};

// Relabeling-invariant; only weights and adjacency are distinguished, not
// vertex kinds.
GraphCertificate graph_certificate(const WeightedIncidenceGraph& g);

// Reconstructs the lattice by contracting the exceptional curves, which are
// recognized structurally rather than by their vertex kinds. Throws
// NotBlowupShaped when no consistent contraction exists.
IntersectionLattice blow_down(const WeightedIncidenceGraph& g);

// Checks that a weight-preserving lattice isomorphism exists iff the
// blow-up graph certificates are equal; a disagreement dumps diagnostics to
// stderr and returns false.
bool blowup_equivalence_check(const IntersectionLattice& a, const IntersectionLattice& b);

}  // namespace arrlat
