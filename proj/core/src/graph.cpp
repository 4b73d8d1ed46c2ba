#include "probemr/graph.hpp"

#include <algorithm>
#include <memory>

namespace probemr {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be between 0 and 64");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (has_edge(u, v)) return;
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
    --edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u) {
        VertexMask higher = adj_[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = lowest_bit(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

VertexMask Graph::component_of(int v) const {
    check_vertex(v);
    VertexMask seen = bit(v), frontier = bit(v);
    while (frontier) {
        VertexMask next = 0;
        while (frontier) {
            int u = lowest_bit(frontier);
            frontier &= frontier - 1;
            next |= adj_[u] & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return component_of(0) == full_mask();
}

int Graph::component_count() const {
    VertexMask rest = full_mask();
    int count = 0;
    while (rest) {
        int v = lowest_bit(rest);
        rest &= ~component_of(v);
        ++count;
    }
    return count;
}

bool Graph::is_forest() const {
    return edge_count_ == n_ - component_count();
}

bool Graph::is_path_graph() const {
    if (n_ == 0) return false;
    if (!is_connected() || edge_count_ != n_ - 1) return false;
    for (int v = 0; v < n_; ++v)
        if (degree(v) > 2) return false;
    return true;
}

bool Graph::is_cycle_graph() const {
    if (n_ < 3 || !is_connected() || edge_count_ != n_) return false;
    for (int v = 0; v < n_; ++v)
        if (degree(v) != 2) return false;
    return true;
}

ProbeGraph::ProbeGraph(Graph g, std::vector<int> n) : graph(std::move(g)), nonprobes(std::move(n)) {
    std::sort(nonprobes.begin(), nonprobes.end());
    nonprobes.erase(std::unique(nonprobes.begin(), nonprobes.end()), nonprobes.end());
    for (int v : nonprobes) graph.check_vertex(v);
    if (!is_independent_set(graph, nonprobes))
        throw std::invalid_argument("non-probe set must be independent");
}

VertexMask ProbeGraph::nonprobe_mask() const { return vertices_to_mask(nonprobes); }

std::vector<int> ProbeGraph::probes() const {
    return mask_to_vertices(graph.full_mask() & ~nonprobe_mask());
}

std::vector<int> ProbeGraph::reindex_nonprobes_last() const {
    std::vector<int> order = probes();
    order.insert(order.end(), nonprobes.begin(), nonprobes.end());
    return order;
}

GraphStream GraphStream::of(std::vector<Graph> graphs) {
    auto shared = std::make_shared<std::vector<Graph>>(std::move(graphs));
    size_t i = 0;
    return GraphStream([shared, i]() mutable -> std::optional<Graph> {
        if (i >= shared->size()) return std::nullopt;
        return (*shared)[i++];
    });
}

std::vector<Graph> GraphStream::drain() {
    std::vector<Graph> out;
    while (auto g = next()) out.push_back(std::move(*g));
    return out;
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    for (int v : vertices) g.check_vertex(v);
    Graph sub(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j]))
                sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(sub), vertices};
}

InducedSubgraph induced_subgraph(const Graph& g, VertexMask vertices) {
    return induced_subgraph(g, mask_to_vertices(vertices));
}

bool is_independent_set(const Graph& g, VertexMask s) {
    VertexMask rest = s;
    while (rest) {
        int v = lowest_bit(rest);
        rest &= rest - 1;
        if (g.neighbors(v) & s) return false;
    }
    return true;
}

bool is_independent_set(const Graph& g, const std::vector<int>& s) {
    return is_independent_set(g, vertices_to_mask(s));
}

std::vector<std::pair<int, int>> addable_nonprobe_pairs(const ProbeGraph& pg) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < pg.nonprobes.size(); ++i)
        for (size_t j = i + 1; j < pg.nonprobes.size(); ++j)
            pairs.emplace_back(pg.nonprobes[i], pg.nonprobes[j]);
    return pairs; // nonprobes are sorted, so this is lexicographic
}

GraphStream completions(const ProbeGraph& pg) {
    auto pairs = std::make_shared<std::vector<std::pair<int, int>>>(addable_nonprobe_pairs(pg));
    if (pairs->size() > 20) throw std::invalid_argument("completion budget exceeded");
    Graph base = pg.graph;
    std::uint64_t subset = 0;
    std::uint64_t total = std::uint64_t{1} << pairs->size();
    return GraphStream([pairs, base, subset, total]() mutable -> std::optional<Graph> {
        if (subset >= total) return std::nullopt;
        Graph g = base;
        for (size_t i = 0; i < pairs->size(); ++i)
            if (subset >> i & 1) g.add_edge((*pairs)[i].first, (*pairs)[i].second);
        ++subset;
        return g;
    });
}

VertexMask core_vertices(const Graph& g) {
    // An edge lies on a cycle iff it is not a bridge; a vertex lies on a cycle
    // iff it has an incident non-bridge edge. Bridges via DFS low-links.
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    VertexMask core = 0;
    int timer = 0;
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
                    stack.push_back(v);
                } else if (v != parent[u]) {
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (parent[u] >= 0) {
                    int p = parent[u];
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] <= disc[p]) core |= bit(p) | bit(u); // tree edge on a cycle
                }
            }
        }
    }
    // Back edges were not marked above; a vertex with a back edge is on a
    // cycle. Re-derive directly: v is in the core iff some incident edge is
    // not a bridge, so mark endpoints of all non-tree edges too.
    for (int u = 0; u < n; ++u) {
        VertexMask nb = g.neighbors(u);
        while (nb) {
            int v = lowest_bit(nb);
            nb &= nb - 1;
            if (v < u) continue;
            bool tree_edge = (parent[v] == u || parent[u] == v);
            if (!tree_edge) core |= bit(u) | bit(v);
        }
    }
    return core;
}

std::vector<int> mask_to_vertices(VertexMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(lowest_bit(m));
        m &= m - 1;
    }
    return out;
}

VertexMask vertices_to_mask(const std::vector<int>& vs) {
    VertexMask m = 0;
    for (int v : vs) {
        if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex label out of range");
        m |= bit(v);
    }
    return m;
}

std::vector<VertexMask> independent_sets(const Graph& g) {
    std::vector<VertexMask> out;
    VertexMask full = g.full_mask();
    for (VertexMask s = 0;; ++s) {
        if (is_independent_set(g, s)) out.push_back(s);
        if (s == full) break;
    }
    return out;
}

std::vector<VertexMask> maximal_independent_sets(const Graph& g) {
    std::vector<VertexMask> all = independent_sets(g);
    std::vector<VertexMask> out;
    for (VertexMask s : all) {
        bool maximal = true;
        for (int v = 0; v < g.order() && maximal; ++v)
            if (!(s >> v & 1) && is_independent_set(g, s | bit(v))) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

Graph make_alpha_graph(int r, int p1, int p2, int p3, int p4, const std::set<int>& interior) {
    if (r < 3) throw std::invalid_argument("alpha graph needs outer-cycle length >= 3");
    if (p1 < 1 || p2 < 1) throw std::invalid_argument("alpha graph needs p1, p2 >= 1");
    if (p3 < 0 || p4 < 0) throw std::invalid_argument("pendant lengths must be non-negative");
    for (int i : interior) {
        if (i <= 1 || i >= r - 1)
            throw std::invalid_argument("interior edge index must avoid r-1, 0, 1");
    }
    int n = r + p1 + p2 + p3 + p4;
    Graph g(n);
    for (int i = 0; i < r; ++i) g.add_edge(i, (i + 1) % r);
    for (int i : interior) g.add_edge(0, i);
    int next = r;
    auto attach_path = [&](int at, int len) {
        int prev = at;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    };
    attach_path(0, p1);
    attach_path(0, p2);
    attach_path(r - 1, p3);
    attach_path(1, p4);
    return g;
}

} // namespace probemr
