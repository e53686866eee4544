#include "arrlat/blowup.hpp"

#include <algorithm>
#include <cassert>
#include <iostream>

#include "arrlat/canonical.hpp"

namespace arrlat {

std::vector<std::vector<int>> WeightedIncidenceGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

WeightedIncidenceGraph blow_up(const IntersectionLattice& lat) {
    WeightedIncidenceGraph g;
    for (int i = 0; i < lat.n_lines; ++i)
        g.vertices.push_back({CurveKind::StrictTransform, i, lat.line_weights[i]});

    std::vector<int> exceptional_vertex(lat.points.size(), -1);
    for (int pi = 0; pi < static_cast<int>(lat.points.size()); ++pi)
        if (lat.points[pi].multiplicity() >= 3) {
            exceptional_vertex[pi] = static_cast<int>(g.vertices.size());
            g.vertices.push_back({CurveKind::Exceptional, pi, -1});
        }

    for (int pi = 0; pi < static_cast<int>(lat.points.size()); ++pi) {
        const LatticePoint& p = lat.points[pi];
        if (p.multiplicity() >= 3) {
            for (int i : p.lines) g.edges.push_back({i, exceptional_vertex[pi], pi});
        } else {
            g.edges.push_back({p.lines[0], p.lines[1], pi});
        }
    }
    for (auto& e : g.edges)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(g.edges.begin(), g.edges.end(),
              [](const GraphEdge& a, const GraphEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return g;
}

namespace {

ColoredGraph weight_graph(const WeightedIncidenceGraph& g) {
    ColoredGraph cg;
    for (const auto& v : g.vertices) cg.add_vertex(v.weight);
    for (const auto& e : g.edges) cg.add_edge(e.u, e.v);
    return cg;
}

// Searches for sets S of vertices that can be contracted back to multiple
// points: S is independent, every member has weight -1 and degree >= 3 with
// no positive-weight neighbor, every other vertex u has exactly 1 - w(u)
// neighbors in S, and the contraction covers every pair of remaining
// vertices exactly once.
struct BlowDownSearch {
    const WeightedIncidenceGraph& g;
    std::vector<std::vector<int>> adj;
    std::vector<int> candidates;
    // 0 undecided, 1 in, 2 out; non-candidates are permanently out
    std::vector<int> state;
    std::vector<std::vector<int>> found;  // accepted sets S

    explicit BlowDownSearch(const WeightedIncidenceGraph& graph) : g(graph), adj(graph.adjacency()) {
        const int n = static_cast<int>(g.vertices.size());
        state.assign(n, 2);
        for (int v = 0; v < n; ++v) {
            if (g.vertices[v].weight != -1 || adj[v].size() < 3) continue;
            bool ok = true;
            for (int w : adj[v])
                if (g.vertices[w].weight > 0) { ok = false; break; }
            if (!ok) continue;
            candidates.push_back(v);
            state[v] = 0;
        }
    }

    int required(int u) const { return 1 - g.vertices[u].weight; }

    // counts for a vertex that will remain a line
    bool line_feasible(int u) const {
        int in = 0, open = 0;
        for (int w : adj[u]) {
            if (state[w] == 1) ++in;
            else if (state[w] == 0) ++open;
        }
        return in <= required(u) && in + open >= required(u);
    }

    bool consistent() const {
        for (int u = 0; u < static_cast<int>(state.size()); ++u) {
            if (state[u] == 1 || state[u] == 0) continue;  // settled lines only
            if (!line_feasible(u)) return false;
        }
        return true;
    }

    void run(size_t idx) {
        if (idx == candidates.size()) {
            finish();
            return;
        }
        int v = candidates[idx];

        bool blocked = false;
        for (int w : adj[v])
            if (state[w] == 1) { blocked = true; break; }
        if (!blocked) {
            state[v] = 1;
            if (consistent()) run(idx + 1);
        }
        state[v] = 2;
        if (consistent()) run(idx + 1);
        state[v] = 0;
    }

    void finish() {
        const int n = static_cast<int>(g.vertices.size());
        for (int u = 0; u < n; ++u) {
            if (state[u] == 1) continue;
            int in = 0;
            for (int w : adj[u])
                if (state[w] == 1) ++in;
            if (in != required(u)) return;
        }

        // pair coverage of the contraction
        std::vector<int> line_id(n, -1);
        int m = 0;
        for (int u = 0; u < n; ++u)
            if (state[u] != 1) line_id[u] = m++;
        std::vector<int> cover(static_cast<size_t>(m) * m, 0);
        auto hit = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            return ++cover[static_cast<size_t>(a) * m + b];
        };
        for (int u = 0; u < n; ++u) {
            if (state[u] != 1) continue;
            for (size_t x = 0; x < adj[u].size(); ++x)
                for (size_t y = x + 1; y < adj[u].size(); ++y)
                    if (hit(line_id[adj[u][x]], line_id[adj[u][y]]) > 1) return;
        }
        for (const auto& e : g.edges) {
            if (state[e.u] == 1 || state[e.v] == 1) continue;
            if (hit(line_id[e.u], line_id[e.v]) > 1) return;
        }
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (cover[static_cast<size_t>(a) * m + b] != 1) return;

        std::vector<int> s;
        for (int u = 0; u < n; ++u)
            if (state[u] == 1) s.push_back(u);
        found.push_back(std::move(s));
    }
};

IntersectionLattice reconstruct(const WeightedIncidenceGraph& g, const std::vector<int>& s) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<bool> in_s(n, false);
    for (int v : s) in_s[v] = true;

    std::vector<int> line_id(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!in_s[v]) line_id[v] = m++;

    auto adj = g.adjacency();
    std::vector<std::vector<int>> incidences;
    for (int v : s) {
        std::vector<int> inc;
        for (int w : adj[v]) inc.push_back(line_id[w]);
        incidences.push_back(std::move(inc));
    }
    for (const auto& e : g.edges)
        if (!in_s[e.u] && !in_s[e.v]) incidences.push_back({line_id[e.u], line_id[e.v]});

    return make_lattice(m, std::move(incidences));
}

}  // namespace

GraphCertificate graph_certificate(const WeightedIncidenceGraph& g) {
    return GraphCertificate{canonical_labeling(weight_graph(g)).certificate};
}

IntersectionLattice blow_down(const WeightedIncidenceGraph& g) {
    if (g.vertices.empty()) throw NotBlowupShaped("empty graph");
    for (const auto& v : g.vertices)
        if (v.weight > 1) throw NotBlowupShaped("vertex weight exceeds 1");

    BlowDownSearch search(g);
    search.run(0);
    if (search.found.empty())
        throw NotBlowupShaped("no consistent set of exceptional curves");

    // Several consistent contractions can exist; pick the one with the
    // minimal certificate so the result is independent of vertex labels.
    IntersectionLattice best;
    std::string best_cert;
    for (const auto& s : search.found) {
        IntersectionLattice lat = reconstruct(g, s);
        std::string cert = canonical_form(lat).certificate;
        if (best_cert.empty() || cert < best_cert) {
            best_cert = std::move(cert);
            best = std::move(lat);
        }
    }
    return best;
}

bool blowup_equivalence_check(const IntersectionLattice& a, const IntersectionLattice& b) {
    bool lattice_side = lattice_isomorphic(a, b).has_value();
    bool graph_side = graph_certificate(blow_up(a)) == graph_certificate(blow_up(b));
    if (lattice_side == graph_side) return true;

    auto dump = [](const char* name, const IntersectionLattice& lat) {
        std::cerr << "  " << name << ": n=" << lat.n_lines << " points";
        for (const auto& p : lat.points) {
            std::cerr << " {";
            for (size_t i = 0; i < p.lines.size(); ++i) std::cerr << (i ? " " : "") << p.lines[i];
            std::cerr << "}";
        }
        std::cerr << " weights";
        for (int w : lat.line_weights) std::cerr << " " << w;
        std::cerr << "\n";
    };
    std::cerr << "blowup equivalence check failed: lattice isomorphism "
              << (lattice_side ? "exists" : "missing") << " but graph certificates "
              << (graph_side ? "agree" : "differ") << "\n";
    dump("first", a);
    dump("second", b);
    return false;
}

}  // namespace arrlat
