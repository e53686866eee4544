#pragma once

#include <cstdint>

#include "arrlat/blowup.hpp"

namespace arrlat {

enum class ReasonKind { B1Mismatch, B3PencilTest, ClassMismatch, PoincareMismatch, CertificateMismatch };

std::string reason_kind_str(ReasonKind k);

struct DistinctReason {
    ReasonKind kind;
    std::string detail;  // rendered, e.g. "B3PencilTest(0, 2)"
};

struct TraceEntry {
    std::string stage;  // "b1", "b3", "class", "poincare", "certificate"
    std::string left, right;
    bool equal;
};

struct ComparisonVerdict {
    bool isomorphic = false;
    std::vector<int> bijection;            // line map when isomorphic
    std::optional<DistinctReason> reason;  // set when distinct
    std::vector<TraceEntry> trace;         // stages in pipeline order
};

// Staged comparison: b1, then the b3 pencil test, then classification,
// then Poincare polynomials, then canonical certificates. The trace records
// which invariant separated the inputs.
ComparisonVerdict compare(const Arrangement& a, const Arrangement& b);
ComparisonVerdict compare_lattices(const IntersectionLattice& a, const IntersectionLattice& b);

// Compares a against a copy of itself under a seeded random line relabeling
// and invertible rational coordinate change; must come back Isomorphic.
ComparisonVerdict self_witness(const Arrangement& a, std::uint64_t seed);

}  // namespace arrlat
