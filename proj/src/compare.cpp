#include "arrlat/compare.hpp"

#include <cassert>
#include <sstream>

#include "arrlat/generators.hpp"

namespace arrlat {

std::string reason_kind_str(ReasonKind k) {
    switch (k) {
        case ReasonKind::B1Mismatch: return "B1Mismatch";
        case ReasonKind::B3PencilTest: return "B3PencilTest";
        case ReasonKind::ClassMismatch: return "ClassMismatch";
        case ReasonKind::PoincareMismatch: return "PoincareMismatch";
        case ReasonKind::CertificateMismatch: return "CertificateMismatch";
    }
    return "?";
}

namespace {

std::string central_str(const PoincareData& pd) {
    std::ostringstream os;
    os << "[" << pd.central[0];
    for (int k = 1; k < 4; ++k) os << " " << pd.central[k];
    os << "]";
    return os.str();
}

}  // namespace

ComparisonVerdict compare_lattices(const IntersectionLattice& a, const IntersectionLattice& b) {
    ComparisonVerdict v;
    auto distinct = [&](ReasonKind kind, const std::string& detail) {
        v.isomorphic = false;
        v.reason = DistinctReason{kind, detail};
        return v;
    };

    // b1 of the cone complement equals the number of lines
    long long b1a = a.n_lines, b1b = b.n_lines;
    v.trace.push_back({"b1", std::to_string(b1a), std::to_string(b1b), b1a == b1b});
    if (b1a != b1b)
        return distinct(ReasonKind::B1Mismatch,
                        "B1Mismatch(" + std::to_string(b1a) + ", " + std::to_string(b1b) + ")");

    // b3 vanishes exactly for pencils
    long long b3a = betti(a, 3), b3b = betti(b, 3);
    bool b3_agree = (b3a == 0) == (b3b == 0);
    v.trace.push_back({"b3", std::to_string(b3a), std::to_string(b3b), b3_agree});
    if (!b3_agree)
        return distinct(ReasonKind::B3PencilTest,
                        "B3PencilTest(" + std::to_string(b3a) + ", " + std::to_string(b3b) + ")");

    ArrangementClass ca = classify(a), cb = classify(b);
    v.trace.push_back({"class", class_str(ca), class_str(cb), ca == cb});
    if (!(ca == cb))
        return distinct(ReasonKind::ClassMismatch,
                        "ClassMismatch(" + class_str(ca) + ", " + class_str(cb) + ")");

    PoincareData pa = poincare(a), pb = poincare(b);
    bool poincare_equal = pa.central == pb.central;
    v.trace.push_back({"poincare", central_str(pa), central_str(pb), poincare_equal});
    if (!poincare_equal)
        return distinct(ReasonKind::PoincareMismatch,
                        "PoincareMismatch(" + central_str(pa) + ", " + central_str(pb) + ")");

    auto bij = lattice_isomorphic(a, b);
    v.trace.push_back({"certificate", bij ? "equal" : "distinct", bij ? "equal" : "distinct",
                       bij.has_value()});
    if (!bij) return distinct(ReasonKind::CertificateMismatch, "CertificateMismatch");

    assert(verify_lattice_bijection(a, b, *bij));
    v.isomorphic = true;
    v.bijection = std::move(*bij);
    return v;
}

ComparisonVerdict compare(const Arrangement& a, const Arrangement& b) {
    return compare_lattices(build_lattice(a), build_lattice(b));
}

ComparisonVerdict self_witness(const Arrangement& a, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = static_cast<int>(a.lines.size());

    std::vector<int> perm = random_permutation(rng, n);
    Mat3 m = random_invertible_matrix(rng);

    std::vector<Triple> moved;
    moved.reserve(n);
    for (int j = 0; j < n; ++j) moved.push_back(transform_line(a.lines[perm[j]], m).coeffs);

    return compare(a, build_arrangement(moved));
}

}  // namespace arrlat
