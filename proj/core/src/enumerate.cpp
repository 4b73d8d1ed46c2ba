#include <algorithm>
#include <map>
#include <unordered_set>

#include "probemr/graph.hpp"

namespace probemr {

namespace {

// Minimum upper-triangle adjacency bit-string over all relabelings, found by
// branch-and-bound over slot assignments. Bit for slot pair (i < j) sits at
// position j(j-1)/2 + i, and strings compare by the natural column-major
// order, so candidates are compared one new column at a time.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> slot;      // slot index -> original vertex
    std::vector<int> best_cols; // best column words so far
    std::vector<int> cur_cols;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
        slot.reserve(n);
        best_cols.assign(n, 0);
        cur_cols.assign(n, 0);
    }

    void run() {
        if (n == 0) {
            have_best = true;
            return;
        }
        descend(0, ~VertexMask{0} >> (64 - n));
    }

    // -1, 0, 1 comparison of cur_cols[0..k] against best_cols[0..k]
    int prefix_compare(int k) const {
        for (int i = 0; i <= k; ++i) {
            if (cur_cols[i] != best_cols[i]) return cur_cols[i] < best_cols[i] ? -1 : 1;
        }
        return 0;
    }

    void descend(int k, VertexMask unused) {
        if (k == n) {
            if (!have_best || prefix_compare(n - 1) < 0) {
                best_cols = cur_cols;
                have_best = true;
            }
            return;
        }
        // visiting candidates in column order makes the first completed
        // assignment near-minimal and the bound bite early
        std::vector<std::pair<int, int>> cands;
        VertexMask rest = unused;
        while (rest) {
            int v = lowest_bit(rest);
            rest &= rest - 1;
            int col = 0;
            for (int i = 0; i < k; ++i) col = (col << 1) | (g.has_edge(slot[i], v) ? 1 : 0);
            cands.emplace_back(col, v);
        }
        std::sort(cands.begin(), cands.end());
        for (auto [col, v] : cands) {
            cur_cols[k] = col;
            if (have_best && prefix_compare(k) > 0) continue;
            slot.push_back(v);
            descend(k + 1, unused & ~bit(v));
            slot.pop_back();
        }
    }
};

} // namespace

std::uint64_t canonical_bits(const Graph& g) {
    if (g.order() > 11)
        throw std::invalid_argument("canonical_bits supports up to 11 vertices (55 bits)");
    CanonSearch search(g);
    search.run();
    std::uint64_t bits = 0;
    int shift = 0;
    for (int j = 1; j < g.order(); ++j) {
        bits |= static_cast<std::uint64_t>(search.best_cols[j]) << shift;
        shift += j;
    }
    return bits | (static_cast<std::uint64_t>(g.order()) << 56);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_bits(a) == canonical_bits(b);
}

GraphStream enumerate_graphs(int n, bool connected_only) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumerate_graphs supports 1 <= n <= 8");
    // Grow one vertex at a time, deduplicating by canonical form at each level.
    std::vector<Graph> level = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            for (VertexMask nb = 0; nb < bit(m - 1); ++nb) {
                Graph h(m);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int u : mask_to_vertices(nb)) h.add_edge(u, m - 1);
                if (seen.insert(canonical_bits(h)).second) next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    if (connected_only) {
        std::erase_if(level, [](const Graph& g) { return !g.is_connected(); });
    }
    std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return emit_graph6(a) < emit_graph6(b);
    });
    return GraphStream::of(std::move(level));
}

namespace {

// AHU canonical encoding of a rooted tree.
std::string ahu_encode(const Graph& g, int root, int from) {
    std::vector<std::string> childs;
    VertexMask nb = g.neighbors(root);
    while (nb) {
        int v = lowest_bit(nb);
        nb &= nb - 1;
        if (v != from) childs.push_back(ahu_encode(g, v, root));
    }
    std::sort(childs.begin(), childs.end());
    std::string out = "(";
    for (auto& c : childs) out += c;
    out += ")";
    return out;
}

std::vector<int> tree_centers(const Graph& g) {
    const int n = g.order();
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int removed = 0;
    std::vector<bool> gone(n, false);
    while (removed + static_cast<int>(layer.size()) < n) {
        std::vector<int> next;
        for (int v : layer) {
            gone[v] = true;
            ++removed;
            VertexMask nb = g.neighbors(v);
            while (nb) {
                int u = lowest_bit(nb);
                nb &= nb - 1;
                if (!gone[u] && --deg[u] == 1) next.push_back(u);
            }
        }
        layer = std::move(next);
    }
    return layer;
}

std::string tree_canonical(const Graph& g) {
    std::vector<int> centers = tree_centers(g);
    std::string best;
    for (int c : centers) {
        std::string enc = ahu_encode(g, c, -1);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

} // namespace

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("enumerate_trees supports 1 <= n <= 12");
    std::vector<Graph> level = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::unordered_set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            for (int at = 0; at < m - 1; ++at) {
                Graph h(m);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                h.add_edge(at, m - 1);
                if (seen.insert(tree_canonical(h)).second) next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

} // namespace probemr
