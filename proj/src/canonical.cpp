#include "arrlat/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <map>
#include <numeric>
#include <optional>

namespace arrlat {

int ColoredGraph::add_vertex(long long c) {
    color.push_back(c);
    adj.emplace_back();
    return size() - 1;
}

void ColoredGraph::add_edge(int u, int v) {
    assert(u != v && u >= 0 && v >= 0 && u < size() && v < size());
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool ColoredGraph::adjacent(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

namespace {

using Cells = std::vector<std::vector<int>>;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Cells initial_cells(const ColoredGraph& g) {
    std::map<long long, std::vector<int>> by_color;
    for (int v = 0; v < g.size(); ++v) by_color[g.color[v]].push_back(v);
    Cells cells;
    for (auto& [c, vs] : by_color) cells.push_back(std::move(vs));
    return cells;
}

// Equitable refinement: split cells by the multiset of neighbor cells until
// stable. Subcell order is determined by the signatures, so the resulting
// ordered partition does not depend on vertex labels.
void refine(const ColoredGraph& g, Cells& cells) {
    const int n = g.size();
    std::vector<int> cell_of(static_cast<size_t>(n));
    std::vector<std::pair<std::vector<std::pair<int, int>>, int>> sigs;  // (signature, vertex)

    bool changed = true;
    while (changed) {
        changed = false;
        for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
            for (int v : cells[ci]) cell_of[static_cast<size_t>(v)] = ci;

        Cells next;
        next.reserve(cells.size());
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            sigs.clear();
            for (int v : cell) {
                std::vector<std::pair<int, int>> sig;  // sorted (cell, count)
                sig.reserve(g.adj[static_cast<size_t>(v)].size());
                for (int w : g.adj[static_cast<size_t>(v)]) sig.push_back({cell_of[static_cast<size_t>(w)], 1});
                std::sort(sig.begin(), sig.end());
                size_t out = 0;
                for (size_t i = 0; i < sig.size(); ++i) {
                    if (out > 0 && sig[out - 1].first == sig[i].first)
                        ++sig[out - 1].second;
                    else
                        sig[out++] = sig[i];
                }
                sig.resize(out);
                sigs.push_back({std::move(sig), v});
            }
            std::sort(sigs.begin(), sigs.end());
            for (size_t i = 0; i < sigs.size();) {
                size_t j = i;
                while (j < sigs.size() && sigs[j].first == sigs[i].first) ++j;
                std::vector<int> sub;
                sub.reserve(j - i);
                for (size_t k = i; k < j; ++k) sub.push_back(sigs[k].second);
                std::sort(sub.begin(), sub.end());
                next.push_back(std::move(sub));
                i = j;
            }
        }
        // a pass split something iff the number of cells grew
        if (next.size() != cells.size()) changed = true;
        cells = std::move(next);
    }
}

Cells individualize(const Cells& cells, int target, int v) {
    Cells out;
    out.reserve(cells.size() + 1);
    for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
        if (ci != target) {
            out.push_back(cells[ci]);
            continue;
        }
        out.push_back({v});
        std::vector<int> rest;
        rest.reserve(cells[ci].size() - 1);
        for (int w : cells[ci])
            if (w != v) rest.push_back(w);
        out.push_back(std::move(rest));
    }
    return out;
}

std::string encode(const ColoredGraph& g, const std::vector<int>& order) {
    const int n = g.size();
    std::vector<int> pos(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) pos[static_cast<size_t>(order[static_cast<size_t>(p)])] = p;

    std::string s = "V" + std::to_string(n) + "|";
    for (int p = 0; p < n; ++p) {
        s += std::to_string(g.color[static_cast<size_t>(order[static_cast<size_t>(p)])]);
        s += ',';
    }
    s += '|';
    std::string bits(static_cast<size_t>(n) * (n - 1) / 2, '0');
    for (int v = 0; v < n; ++v)
        for (int w : g.adj[static_cast<size_t>(v)]) {
            if (w <= v) continue;
            int p = pos[static_cast<size_t>(v)], q = pos[static_cast<size_t>(w)];
            if (p > q) std::swap(p, q);
            bits[static_cast<size_t>(p) * (2 * n - p - 1) / 2 + (q - p - 1)] = '1';
        }
    s += bits;
    return s;
}

constexpr int kNoJump = INT_MAX;

struct SearchCtx {
    const ColoredGraph& g;
    std::optional<std::string> best;
    std::vector<int> best_order;
    std::vector<int> best_prefix;         // individualized vertices along the best leaf
    std::vector<std::vector<int>> autos;  // discovered automorphisms

    void record_automorphism(std::vector<int> a) {
        for (const auto& known : autos)
            if (known == a) return;
        autos.push_back(std::move(a));
    }
};

// Returns the depth the caller should unwind to, or kNoJump. When a leaf
// reproduces the best certificate, the composed automorphism often proves
// the whole subtree since the divergence from the best path redundant; the
// backjump skips the rest of it.
int search(SearchCtx& ctx, Cells cells, std::vector<int>& prefix) {
    const int depth = static_cast<int>(prefix.size());
    refine(ctx.g, cells);

    int target = -1;
    for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
        if (cells[ci].size() > 1) {
            target = ci;
            break;
        }

    if (target < 0) {
        std::vector<int> order;
        order.reserve(static_cast<size_t>(ctx.g.size()));
        for (auto& cell : cells) order.push_back(cell[0]);
        std::string cert = encode(ctx.g, order);
        if (!ctx.best || cert < *ctx.best) {
            ctx.best = std::move(cert);
            ctx.best_order = std::move(order);
            ctx.best_prefix = prefix;
            return kNoJump;
        }
        if (cert != *ctx.best) return kNoJump;

        // Equal certificates from two labelings compose to an automorphism.
        std::vector<int> a(static_cast<size_t>(ctx.g.size()));
        for (int p = 0; p < ctx.g.size(); ++p)
            a[static_cast<size_t>(ctx.best_order[static_cast<size_t>(p)])] = order[static_cast<size_t>(p)];

        size_t d = 0;
        size_t limit = std::min(prefix.size(), ctx.best_prefix.size());
        while (d < limit && prefix[d] == ctx.best_prefix[d]) ++d;
        bool jumpable = d < limit && a[static_cast<size_t>(ctx.best_prefix[d])] == prefix[d];
        for (size_t i = 0; i < d && jumpable; ++i)
            if (a[static_cast<size_t>(prefix[i])] != prefix[i]) jumpable = false;

        ctx.record_automorphism(std::move(a));
        // The subtree below prefix[d] mirrors the already-explored subtree
        // below best_prefix[d]; resume at the divergence node.
        return jumpable ? static_cast<int>(d) : kNoJump;
    }

    // Candidates related by an automorphism fixing the individualized prefix
    // generate identical subtrees; explore one per orbit. Such automorphisms
    // map the refined cells onto themselves, so uniting within the target
    // cell suffices.
    const std::vector<int>& cell = cells[target];
    std::vector<int> slot(static_cast<size_t>(ctx.g.size()), -1);
    for (size_t i = 0; i < cell.size(); ++i) slot[static_cast<size_t>(cell[i])] = static_cast<int>(i);

    UnionFind uf(static_cast<int>(cell.size()));
    size_t autos_merged = 0;
    auto absorb_autos = [&]() {
        for (; autos_merged < ctx.autos.size(); ++autos_merged) {
            const auto& a = ctx.autos[autos_merged];
            bool fixes = true;
            for (int u : prefix)
                if (a[static_cast<size_t>(u)] != u) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (size_t i = 0; i < cell.size(); ++i) {
                int image = a[static_cast<size_t>(cell[i])];
                if (slot[static_cast<size_t>(image)] >= 0)
                    uf.unite(static_cast<int>(i), slot[static_cast<size_t>(image)]);
            }
        }
    };

    std::vector<bool> tried(cell.size(), false);
    for (size_t i = 0; i < cell.size(); ++i) {
        absorb_autos();
        bool seen = false;
        for (size_t j = 0; j < cell.size() && !seen; ++j)
            if (tried[j] && uf.find(static_cast<int>(j)) == uf.find(static_cast<int>(i))) seen = true;
        if (seen) continue;
        tried[i] = true;

        prefix.push_back(cell[i]);
        int jump = search(ctx, individualize(cells, target, cell[i]), prefix);
        prefix.pop_back();
        if (jump < depth) return jump;  // an ancestor owns the redundancy
    }
    return kNoJump;
}

}  // namespace

CanonicalLabeling canonical_labeling(const ColoredGraph& g) {
    if (g.size() == 0) return {{}, "V0||"};
    SearchCtx ctx{g, std::nullopt, {}, {}, {}};
    std::vector<int> prefix;
    search(ctx, initial_cells(g), prefix);
    return {ctx.best_order, *ctx.best};
}

}  // namespace arrlat
