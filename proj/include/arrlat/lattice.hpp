#pragma once

#include <optional>

#include "arrlat/geometry.hpp"

namespace arrlat {

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct LatticePoint {
    std::vector<int> lines;  // sorted incident line indices, size >= 2
    int multiplicity() const { return static_cast<int>(lines.size()); }
    long long mobius() const { return multiplicity() - 1; }
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Ranked poset of an arrangement: bottom (the plane), atoms (lines),
/// top-rank elements (points), with per-line weights.
struct IntersectionLattice {
    int n_lines = 0;
    std::vector<LatticePoint> points;
    std::vector<int> line_weights;  // 1 - number of multiple points on the line

    int points_on_line(int i) const;
    int multiple_point_count() const;
};

IntersectionLattice build_lattice(const Arrangement& arr);

// Direct construction from incidence lists (blow-down path); sorts the
// points and recomputes the weights.
IntersectionLattice make_lattice(int n_lines, std::vector<std::vector<int>> point_incidences);

// Every unordered pair of lines lies below exactly one point.
bool pairs_covered_once(int n_lines, const std::vector<LatticePoint>& points);

struct PoincareData {
    std::array<long long, 4> central;    // Betti numbers of the cone complement in C^3
    std::array<long long, 3> projective; // Betti numbers of the projective complement
};

PoincareData poincare(const IntersectionLattice& lat);
long long betti(const IntersectionLattice& lat, int k);
bool is_pencil(const IntersectionLattice& lat);

enum class ClassTag { TooSmall, Pencil, NearPencil, TwoMultiplePoints, OtherExceptional, Nonexceptional };

struct ArrangementClass {
    ClassTag tag = ClassTag::Nonexceptional;
    int p = 0, q = 0;  // TwoMultiplePoints parameters, stored with p <= q
    int witness = -1;  // least line with at most two points on it, -1 if none

    friend bool operator==(const ArrangementClass& a, const ArrangementClass& b) {
        // witness is label-dependent and not part of the classification
        return a.tag == b.tag && a.p == b.p && a.q == b.q;
    }
};

ArrangementClass classify(const IntersectionLattice& lat);
std::string class_str(const ArrangementClass& c);

struct CanonicalForm {
    std::string certificate;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// Relabeling-invariant certificate of the weighted line-point incidence
// structure; equal certificates iff the lattices are isomorphic.
CanonicalForm canonical_form(const IntersectionLattice& lat);

// Explicit line bijection inducing a multiplicity-preserving point
// bijection, or nullopt if none exists. Agrees with certificate equality.
std::optional<std::vector<int>> lattice_isomorphic(const IntersectionLattice& a,
                                                   const IntersectionLattice& b);

// True iff bij maps a's point incidence structure exactly onto b's
// (weights follow, since they are defined from multiplicities).
bool verify_lattice_bijection(const IntersectionLattice& a, const IntersectionLattice& b,
                              const std::vector<int>& bij);

}  // namespace arrlat
