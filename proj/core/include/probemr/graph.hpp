#ifndef PROBEMR_GRAPH_HPP
#define PROBEMR_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace probemr {

using VertexMask = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int popcount(VertexMask m) { return __builtin_popcountll(m); }
inline int lowest_bit(VertexMask m) { return __builtin_ctzll(m); }
inline VertexMask bit(int v) { return VertexMask{1} << v; }

// Labeled simple graph on vertices 0..n-1. No loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return edge_count_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u] >> v) & 1;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    VertexMask neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const { return popcount(neighbors(v)); }
    VertexMask full_mask() const { return n_ == 64 ? ~VertexMask{0} : (bit(n_) - 1); }

    std::vector<std::pair<int, int>> edges() const; // sorted lexicographically
    bool operator==(const Graph& rhs) const { return n_ == rhs.n_ && adj_ == rhs.adj_; }

    bool is_connected() const;
    bool is_forest() const;
    bool is_path_graph() const;  // includes K1; the empty graph is not a path
    bool is_cycle_graph() const;
    int component_count() const;
    VertexMask component_of(int v) const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex label out of range");
    }

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexMask> adj_;
};

// Probe graph: G with an independent set N of non-probe vertices.
struct ProbeGraph {
    Graph graph;
    std::vector<int> nonprobes; // sorted, duplicate-free

    ProbeGraph(Graph g, std::vector<int> n);

    int order() const { return graph.order(); }
    VertexMask nonprobe_mask() const;
    std::vector<int> probes() const;

    // Permutation placing probes first (ascending) then non-probes (ascending):
    // result[new_index] = old_label.
    std::vector<int> reindex_nonprobes_last() const;
};

// Lazy ordered sequence of graphs.
class GraphStream {
public:
    explicit GraphStream(std::function<std::optional<Graph>()> next) : next_(std::move(next)) {}
    static GraphStream of(std::vector<Graph> graphs);

    std::optional<Graph> next() { return next_(); }
    std::vector<Graph> drain();

private:
    std::function<std::optional<Graph>()> next_;
};

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& what, size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels; // labels[new] = old
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
InducedSubgraph induced_subgraph(const Graph& g, VertexMask vertices);

bool is_independent_set(const Graph& g, VertexMask s);
bool is_independent_set(const Graph& g, const std::vector<int>& s);

// All graphs obtained from pg.graph by adding a subset of the non-edges inside
// N; subsets run in binary counting order over the lexicographically sorted
// pair list, so the first element is pg.graph itself.
GraphStream completions(const ProbeGraph& pg);
std::vector<std::pair<int, int>> addable_nonprobe_pairs(const ProbeGraph& pg);

// Vertices lying on at least one cycle (= endpoints of non-bridge edges).
VertexMask core_vertices(const Graph& g);

// One representative per isomorphism class. Documented limit n <= 8.
GraphStream enumerate_graphs(int n, bool connected_only);

// One representative per isomorphism class of trees, n <= 10.
std::vector<Graph> enumerate_trees(int n);

// Canonical adjacency bit-string (upper triangle, column-major), minimized
// over all relabelings by branch-and-bound. Usable as an isomorphism key.
std::uint64_t canonical_bits(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Independent sets, each as a mask, in increasing mask order (includes 0).
std::vector<VertexMask> independent_sets(const Graph& g);
std::vector<VertexMask> maximal_independent_sets(const Graph& g);

std::vector<int> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(const std::vector<int>& vs);

// Outer-cycle c_0..c_{r-1} (labels 0..r-1), interior edges c_0 c_i for each
// i in `interior` (i must avoid r-1, 0, 1), pendant paths of p1, p2 vertices
// at c_0, p3 vertices at c_{r-1}, p4 vertices at c_1. p1, p2 >= 1.
Graph make_alpha_graph(int r, int p1, int p2, int p3, int p4, const std::set<int>& interior);

} // namespace probemr

#endif
