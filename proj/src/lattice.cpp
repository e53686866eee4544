#include "arrlat/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>

#include "arrlat/canonical.hpp"

namespace arrlat {

int IntersectionLattice::points_on_line(int i) const {
    int count = 0;
    for (const auto& p : points)
        if (std::binary_search(p.lines.begin(), p.lines.end(), i)) ++count;
    return count;
}

int IntersectionLattice::multiple_point_count() const {
    int count = 0;
    for (const auto& p : points)
        if (p.multiplicity() >= 3) ++count;
    return count;
}

namespace {

std::vector<int> compute_weights(int n_lines, const std::vector<LatticePoint>& points) {
    std::vector<int> w(n_lines, 1);
    for (const auto& p : points)
        if (p.multiplicity() >= 3)
            for (int i : p.lines) --w[i];
    return w;
}

}  // namespace

IntersectionLattice build_lattice(const Arrangement& arr) {
    IntersectionLattice lat;
    lat.n_lines = static_cast<int>(arr.lines.size());
    for (const auto& ap : arr.points) lat.points.push_back(LatticePoint{ap.lines});
    lat.line_weights = compute_weights(lat.n_lines, lat.points);
    assert(pairs_covered_once(lat.n_lines, lat.points));
    return lat;
}

IntersectionLattice make_lattice(int n_lines, std::vector<std::vector<int>> point_incidences) {
    assert(n_lines >= 1);
    IntersectionLattice lat;
    lat.n_lines = n_lines;
    for (auto& inc : point_incidences) {
        std::sort(inc.begin(), inc.end());
        lat.points.push_back(LatticePoint{std::move(inc)});
    }
    std::sort(lat.points.begin(), lat.points.end(),
              [](const LatticePoint& a, const LatticePoint& b) { return a.lines < b.lines; });
    lat.line_weights = compute_weights(lat.n_lines, lat.points);
    return lat;
}

bool pairs_covered_once(int n_lines, const std::vector<LatticePoint>& points) {
    std::vector<int> cover(static_cast<size_t>(n_lines) * n_lines, 0);
    for (const auto& p : points) {
        if (p.multiplicity() < 2) return false;
        for (size_t a = 0; a < p.lines.size(); ++a)
            for (size_t b = a + 1; b < p.lines.size(); ++b) {
                int i = p.lines[a], j = p.lines[b];
                if (i < 0 || j >= n_lines || i == j) return false;
                if (++cover[static_cast<size_t>(i) * n_lines + j] > 1) return false;
            }
    }
    for (int i = 0; i < n_lines; ++i)
        for (int j = i + 1; j < n_lines; ++j)
            if (cover[static_cast<size_t>(i) * n_lines + j] != 1) return false;
    return true;
}

bool is_pencil(const IntersectionLattice& lat) {
    if (lat.n_lines == 1) return true;
    return lat.points.size() == 1 && lat.points[0].multiplicity() == lat.n_lines;
}

PoincareData poincare(const IntersectionLattice& lat) {
    const long long n = lat.n_lines;
    long long b2 = 0;
    for (const auto& p : lat.points) b2 += p.mobius();

    // The cone over a non-pencil has a rank-3 top whose Mobius value is
    // forced by the Whitney sum over the lattice vanishing.
    long long b3 = 0;
    if (!is_pencil(lat)) {
        b3 = 1 - n + b2;
        assert(b3 > 0);
    }

    PoincareData pd;
    pd.central = {1, n, b2, b3};

    // exact division of the central polynomial by (1 + t)
    pd.projective[0] = pd.central[0];
    pd.projective[1] = pd.central[1] - pd.projective[0];
    pd.projective[2] = pd.central[2] - pd.projective[1];
    bool divisible = pd.central[3] == pd.projective[2] && pd.projective[1] >= 0 && pd.projective[2] >= 0;
    assert(divisible);
    if (!divisible) std::abort();  // NotDivisible: impossible for a valid lattice

    return pd;
}

long long betti(const IntersectionLattice& lat, int k) {
    if (k < 0 || k > 3) throw IndexOutOfRange("betti index " + std::to_string(k) + " not in 0..3");
    return poincare(lat).central[static_cast<size_t>(k)];
}

ArrangementClass classify(const IntersectionLattice& lat) {
    const int n = lat.n_lines;

    std::vector<std::vector<int>> points_of_line(n);
    for (int pi = 0; pi < static_cast<int>(lat.points.size()); ++pi)
        for (int i : lat.points[pi].lines) points_of_line[i].push_back(pi);

    ArrangementClass cls;
    for (int i = 0; i < n; ++i)
        if (points_of_line[i].size() <= 2) {
            cls.witness = i;
            break;
        }

    if (n <= 3) {
        cls.tag = ClassTag::TooSmall;
        return cls;
    }
    if (is_pencil(lat)) {
        cls.tag = ClassTag::Pencil;
        return cls;
    }

    std::vector<int> multiples;
    for (int pi = 0; pi < static_cast<int>(lat.points.size()); ++pi)
        if (lat.points[pi].multiplicity() >= 3) multiples.push_back(pi);

    if (multiples.size() == 1 && lat.points[multiples[0]].multiplicity() == n - 1) {
        cls.tag = ClassTag::NearPencil;
        return cls;
    }

    // a line carrying exactly two points, both multiple, covers all other
    // lines through those two points
    for (int i = 0; i < n; ++i) {
        if (points_of_line[i].size() != 2) continue;
        const LatticePoint& a = lat.points[points_of_line[i][0]];
        const LatticePoint& b = lat.points[points_of_line[i][1]];
        if (a.multiplicity() < 3 || b.multiplicity() < 3) continue;
        cls.tag = ClassTag::TwoMultiplePoints;
        cls.p = a.multiplicity() - 1;
        cls.q = b.multiplicity() - 1;
        if (cls.p > cls.q) std::swap(cls.p, cls.q);
        cls.witness = i;
        return cls;
    }

    cls.tag = cls.witness >= 0 ? ClassTag::OtherExceptional : ClassTag::Nonexceptional;
    return cls;
}

std::string class_str(const ArrangementClass& c) {
    switch (c.tag) {
        case ClassTag::TooSmall: return "TooSmall";
        case ClassTag::Pencil: return "Pencil";
        case ClassTag::NearPencil: return "NearPencil";
        case ClassTag::TwoMultiplePoints:
            return "TwoMultiplePoints(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
        case ClassTag::OtherExceptional: return "OtherExceptional";
        case ClassTag::Nonexceptional: return "Nonexceptional";
    }
    return "?";
}

namespace {

// Bipartite incidence structure as a colored graph: lines get color 0,
// points their multiplicity. Multiplicities are >= 2, so the sides can
// never mix under an isomorphism.
ColoredGraph incidence_graph(const IntersectionLattice& lat) {
    ColoredGraph g;
    for (int i = 0; i < lat.n_lines; ++i) g.add_vertex(0);
    for (const auto& p : lat.points) {
        int pv = g.add_vertex(p.multiplicity());
        for (int i : p.lines) g.add_edge(i, pv);
    }
    return g;
}

}  // namespace

CanonicalForm canonical_form(const IntersectionLattice& lat) {
    return CanonicalForm{canonical_labeling(incidence_graph(lat)).certificate};
}

bool verify_lattice_bijection(const IntersectionLattice& a, const IntersectionLattice& b,
                              const std::vector<int>& bij) {
    const int n = a.n_lines;
    if (b.n_lines != n || static_cast<int>(bij.size()) != n) return false;
    if (a.points.size() != b.points.size()) return false;

    std::vector<bool> hit(n, false);
    for (int i : bij) {
        if (i < 0 || i >= n || hit[i]) return false;
        hit[i] = true;
    }

    std::set<std::vector<int>> b_points;
    for (const auto& p : b.points) b_points.insert(p.lines);
    for (const auto& p : a.points) {
        std::vector<int> image;
        image.reserve(p.lines.size());
        for (int i : p.lines) image.push_back(bij[i]);
        std::sort(image.begin(), image.end());
        if (!b_points.count(image)) return false;
    }
    for (int i = 0; i < n; ++i)
        if (a.line_weights[i] != b.line_weights[bij[i]]) return false;
    return true;
}

std::optional<std::vector<int>> lattice_isomorphic(const IntersectionLattice& a,
                                                   const IntersectionLattice& b) {
    if (a.n_lines != b.n_lines || a.points.size() != b.points.size()) return std::nullopt;

    CanonicalLabeling ca = canonical_labeling(incidence_graph(a));
    CanonicalLabeling cb = canonical_labeling(incidence_graph(b));
    if (ca.certificate != cb.certificate) return std::nullopt;

    // Matching canonical positions yield the isomorphism; line vertices sit
    // at the same positions because the color sequences agree.
    const int n = a.n_lines;
    std::vector<int> bij(n, -1);
    for (size_t pos = 0; pos < ca.order.size(); ++pos) {
        int va = ca.order[pos];
        int vb = cb.order[pos];
        if (va < n) {
            assert(vb < n);
            bij[va] = vb;
        }
    }

    if (!verify_lattice_bijection(a, b, bij)) std::abort();  // impossible for equal certificates
    return bij;
}

}  // namespace arrlat
