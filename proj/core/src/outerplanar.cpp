#include "probemr/outerplanar.hpp"

#include <algorithm>

namespace probemr {

std::vector<VertexMask> biconnected_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexMask> comps;
    int timer = 0;

    auto pop_component = [&](int u, int v) {
        VertexMask comp = 0;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            comp |= bit(a) | bit(b);
            if (a == u && b == v) break;
        }
        if (comp) comps.push_back(comp);
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<int> stack = {root};
        std::vector<VertexMask> iter(n, 0);
        disc[root] = low[root] = timer++;
        iter[root] = g.neighbors(root);
        while (!stack.empty()) {
            int u = stack.back();
            if (iter[u]) {
                int v = lowest_bit(iter[u]);
                iter[u] &= iter[u] - 1;
                if (disc[v] < 0) {
                    parent[v] = u;
                    disc[v] = low[v] = timer++;
                    iter[v] = g.neighbors(v);
                    edge_stack.emplace_back(u, v);
                    stack.push_back(v);
                } else if (v != parent[u] && disc[v] < disc[u]) {
                    edge_stack.emplace_back(u, v);
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (parent[u] >= 0) {
                    int p = parent[u];
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p]) pop_component(p, u);
                }
            }
        }
    }
    return comps;
}

namespace {

// Searches for a Hamiltonian cycle on local labels 0..n-1 given adjacency
// masks. Returns the cycle as local labels.
bool ham_cycle_search(const std::vector<VertexMask>& adj, std::vector<int>& cycle) {
    const int n = static_cast<int>(adj.size());
    if (n < 3) return false;
    VertexMask all = (n == 64) ? ~VertexMask{0} : (bit(n) - 1);
    std::vector<int> path = {0};
    VertexMask used = bit(0);

    std::function<bool()> extend = [&]() -> bool {
        int v = path.back();
        if (static_cast<int>(path.size()) == n) {
            if (adj[v] & bit(0)) {
                cycle = path;
                return true;
            }
            return false;
        }
        // any stranded unvisited vertex kills the branch
        VertexMask frontier = adj[v] & ~used;
        VertexMask rest = all & ~used;
        VertexMask tmp = rest;
        while (tmp) {
            int w = lowest_bit(tmp);
            tmp &= tmp - 1;
            if (!(adj[w] & (rest | bit(0) | bit(v)))) return false;
        }
        while (frontier) {
            int w = lowest_bit(frontier);
            frontier &= frontier - 1;
            path.push_back(w);
            used |= bit(w);
            if (extend()) return true;
            path.pop_back();
            used &= ~bit(w);
        }
        return false;
    };
    return extend();
}

std::vector<int> normalize_cycle(std::vector<int> cycle) {
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    if (cycle.size() > 2 && cycle[1] > cycle.back())
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

// crossing test in the cyclic order given by pos
bool chords_cross(int a1, int b1, int a2, int b2, const std::vector<int>& pos) {
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
    int x1 = std::min(pos[a1], pos[b1]), y1 = std::max(pos[a1], pos[b1]);
    int x2 = std::min(pos[a2], pos[b2]), y2 = std::max(pos[a2], pos[b2]);
    bool inside2 = (x1 < x2 && x2 < y1);
    bool inside2b = (x1 < y2 && y2 < y1);
    return inside2 != inside2b;
}

} // namespace

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g) {
    const int n = g.order();
    if (n < 3) return std::nullopt;
    std::vector<VertexMask> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<int> cycle;
    if (!ham_cycle_search(adj, cycle)) return std::nullopt;
    return normalize_cycle(cycle);
}

OuterplanarResult is_outerplanar(const Graph& g) {
    OuterplanarResult res;
    const int n = g.order();
    if (n >= 2 && g.size() > 2 * n - 3) return res; // too dense to be outerplanar

    VertexMask core = core_vertices(g);
    std::vector<VertexMask> comps = biconnected_components(g);
    std::optional<std::vector<int>> core_cycle;
    int cyclic_comps = 0;

    for (VertexMask comp : comps) {
        int size = popcount(comp);
        if (size < 3) continue; // bridge
        ++cyclic_comps;
        InducedSubgraph sub = induced_subgraph(g, comp);
        if (sub.graph.size() > 2 * size - 3) return res;
        auto cyc = hamiltonian_cycle(sub.graph);
        if (!cyc) return res; // 2-connected outerplanar graphs are Hamiltonian
        std::vector<int> pos(size);
        for (int i = 0; i < size; ++i) pos[(*cyc)[i]] = i;
        std::vector<std::pair<int, int>> chords;
        for (auto [u, v] : sub.graph.edges()) {
            int d = std::abs(pos[u] - pos[v]);
            if (d != 1 && d != size - 1) chords.emplace_back(u, v);
        }
        for (size_t i = 0; i < chords.size(); ++i)
            for (size_t j = i + 1; j < chords.size(); ++j)
                if (chords_cross(chords[i].first, chords[i].second, chords[j].first,
                                 chords[j].second, pos))
                    return res; // crossing chords hide a K4 subdivision
        if (comp == core) {
            std::vector<int> global;
            global.reserve(size);
            for (int local : *cyc) global.push_back(sub.labels[local]);
            core_cycle = normalize_cycle(std::move(global));
        }
    }

    res.outerplanar = true;
    if (core != 0 && cyclic_comps == 1 && core_cycle) res.outer_cycle = std::move(core_cycle);
    return res;
}

namespace {

struct MinorSearch {
    const Graph& g;
    int n;
    std::vector<std::pair<int, int>> pairs; // endpoints of required paths
    std::vector<int> min_len;               // minimum edge count per path
    VertexMask branch_mask = 0;

    explicit MinorSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    bool paths_exist() { return place(0, branch_mask); }

    bool place(size_t idx, VertexMask used) {
        if (idx == pairs.size()) return true;
        auto [s, t] = pairs[idx];
        return walk(s, t, bit(s), used, min_len[idx], idx, 1);
    }

    // extend a path from cur towards t; `mine` holds the path's own vertices
    bool walk(int cur, int t, VertexMask mine, VertexMask used, int need, size_t idx, int len) {
        if ((g.neighbors(cur) >> t & 1) && len >= need) {
            if (place(idx + 1, used | (mine & ~branch_mask))) return true;
        }
        VertexMask next = g.neighbors(cur) & ~mine & ~used & ~branch_mask;
        while (next) {
            int w = lowest_bit(next);
            next &= next - 1;
            if (w == t) continue; // t is reached via the adjacency check above
            if (walk(w, t, mine | bit(w), used, need, idx, len + 1)) return true;
        }
        return false;
    }
};

} // namespace

bool has_k4_or_k23_topological_minor(const Graph& g) {
    const int n = g.order();
    std::vector<int> branchable;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) branchable.push_back(v);

    // K_{2,3}: two branch vertices joined by three internally disjoint paths,
    // each with at least one internal vertex.
    for (size_t i = 0; i < branchable.size(); ++i)
        for (size_t j = i + 1; j < branchable.size(); ++j) {
            int a = branchable[i], b = branchable[j];
            MinorSearch search(g);
            search.branch_mask = bit(a) | bit(b);
            search.pairs = {{a, b}, {a, b}, {a, b}};
            search.min_len = {2, 2, 2};
            if (search.paths_exist()) return true;
        }

    // K4: four branch vertices pairwise joined by internally disjoint paths.
    const size_t m = branchable.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k)
                for (size_t l = k + 1; l < m; ++l) {
                    int a = branchable[i], b = branchable[j], c = branchable[k],
                        d = branchable[l];
                    MinorSearch search(g);
                    search.branch_mask = bit(a) | bit(b) | bit(c) | bit(d);
                    search.pairs = {{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}};
                    search.min_len = {1, 1, 1, 1, 1, 1};
                    if (search.paths_exist()) return true;
                }
    return false;
}

} // namespace probemr
