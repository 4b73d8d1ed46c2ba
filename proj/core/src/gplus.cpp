#include <algorithm>

#include "probemr/parallel_paths.hpp"

namespace probemr {

namespace {

// closed arc of outer-cycle vertices from x to y in cycle order
VertexMask closed_arc(const CoreStructure& cs, int x, int y) {
    int px = cs.cycle_position(x), py = cs.cycle_position(y);
    const int r = static_cast<int>(cs.outer_cycle.size());
    VertexMask m = 0;
    for (int i = px;; i = (i + 1) % r) {
        m |= bit(cs.outer_cycle[i]);
        if (i == py) break;
    }
    return m;
}

VertexMask open_arc(const CoreStructure& cs, int x, int y) {
    return closed_arc(cs, x, y) & ~bit(x) & ~bit(y);
}

VertexMask pendant_closed_neighborhood(const CoreStructure& cs, int idx) {
    VertexMask m = bit(cs.pendants[idx].insertion);
    for (int v : cs.pendants[idx].vertices) m |= bit(v);
    return m;
}

// phi over a caller-supplied pair of cycles, with an extra constraint hook
bool phi_exists(const CoreStructure& cs, const std::vector<VertexMask>& cycles,
                const std::function<bool(const std::vector<int>&)>& extra) {
    const int k = static_cast<int>(cs.pendants.size());
    for (int assign = 0; assign < (1 << k); ++assign) {
        std::vector<int> phi(k);
        for (int i = 0; i < k; ++i) phi[i] = assign >> i & 1;
        bool ok = true;
        int count[2] = {0, 0};
        for (int i = 0; i < k && ok; ++i) {
            ++count[phi[i]];
            if (!(cycles[phi[i]] >> cs.pendants[i].insertion & 1)) ok = false;
        }
        if (!ok || count[0] > 2 || count[1] > 2) continue;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k && ok; ++j) {
                if (phi[i] != phi[j]) continue;
                if (!cs.cycle_adjacent(cs.pendants[i].insertion, cs.pendants[j].insertion))
                    ok = false;
            }
        if (ok && (!extra || extra(phi))) return true;
    }
    return false;
}

// trees (and 2-path forests): unicyclic G+xy. Every degree-3 vertex must
// lie on the x-y tree path (the cycle of G+xy), otherwise a pendant tree of
// G+xy branches instead of hanging as a path.
bool gplus_tree_case(const Graph& g, int x, int y) {
    if (!g.is_connected()) return g.component_of(x) != g.component_of(y);
    // the unique x-y path: walk from x, parents via BFS
    const int n = g.order();
    std::vector<int> parent(n, -2);
    parent[x] = -1;
    std::vector<int> queue = {x};
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        VertexMask nb = g.neighbors(u);
        while (nb) {
            int v = lowest_bit(nb);
            nb &= nb - 1;
            if (parent[v] == -2) {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    VertexMask on_path = 0;
    for (int v = y; v != -1; v = parent[v]) on_path |= bit(v);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3 && !(on_path >> v & 1)) return false;
    return true;
}

// interior edges of g[R] + xy and its induced one-interior-edge cycle count
struct CorePlus {
    std::vector<VertexMask> one_interior;
    bool every_cycle_ok = true;
};

CorePlus analyze_core_plus(const Graph& g, const CoreStructure& cs, int x, int y) {
    Graph gp = g;
    gp.add_edge(x, y);
    std::vector<std::pair<int, int>> interior = cs.interior_edges;
    interior.emplace_back(x, y);
    VertexMask core = cs.core_mask();
    CorePlus out;
    // induced cycles of g[R]+xy, via subset enumeration on the core
    std::vector<int> vs = mask_to_vertices(core);
    InducedSubgraph sub = induced_subgraph(gp, vs);
    const int k = static_cast<int>(vs.size());
    for (VertexMask s = 0; s < bit(k); ++s) {
        if (popcount(s) < 3) continue;
        bool cycle = true;
        VertexMask subset_local = s;
        for (int i = 0; i < k && cycle; ++i)
            if (s >> i & 1)
                if (popcount(sub.graph.neighbors(i) & subset_local) != 2) cycle = false;
        if (!cycle) continue;
        InducedSubgraph check = induced_subgraph(sub.graph, mask_to_vertices(s));
        if (!check.graph.is_connected()) continue;
        VertexMask global = 0;
        for (int i = 0; i < k; ++i)
            if (s >> i & 1) global |= bit(vs[i]);
        int count = 0;
        for (auto [u, v] : interior)
            if ((global >> u & 1) && (global >> v & 1)) ++count;
        if (count > 2) out.every_cycle_ok = false;
        if (count == 1) out.one_interior.push_back(global);
    }
    return out;
}

// non-cycle core, both new non-probes on the core
bool gplus_mess1(const Graph& g, const CoreStructure& cs, int x, int y) {
    // 1. the new chord must not cross an existing interior edge
    VertexMask a1 = open_arc(cs, x, y), a2 = open_arc(cs, y, x);
    for (auto [u, v] : cs.interior_edges) {
        bool u1 = a1 >> u & 1, v1 = a1 >> v & 1;
        bool u2 = a2 >> u & 1, v2 = a2 >> v & 1;
        if ((u1 && v2) || (u2 && v1)) return false;
    }
    // 2. cycle shape of g[R] + xy
    CorePlus plus = analyze_core_plus(g, cs, x, y);
    if (!plus.every_cycle_ok || plus.one_interior.size() != 2) return false;
    // 3. the pendant assignment against the new end cycles
    return phi_exists(cs, plus.one_interior, nullptr);
}

// cycle core, both on the core: the new end cycles of G+xy are the two
// closed arcs between x and y, and the pendant assignment must work for
// them; two adjacent insertion points may share one arc.
bool gplus_cycle_mess1(const CoreStructure& cs, int x, int y) {
    const int k = static_cast<int>(cs.pendants.size());
    if (k <= 1) return true;
    std::vector<VertexMask> arcs = {closed_arc(cs, x, y), closed_arc(cs, y, x)};
    return phi_exists(cs, arcs, nullptr);
}

// x on a pendant path: the new edge must land one outer-cycle step away,
// and the core spliced through the pendant segment must keep the structure
// conditions, which are evaluated on the spliced graph directly.
bool gplus_pendant_case(const Graph& g, const CoreStructure& cs, int x, int y) {
    if (dstar(g, cs, x, y) != 1) return false;
    Graph plus = g;
    plus.add_edge(x, y);
    return meets_structure_conditions(plus);
}

// alpha graphs: both pendants of the repeated insertion point live at c0
bool gplus_alpha(const Graph& g, const CoreStructure& cs, int x, int y) {
    const AlphaInfo& alpha = *cs.alpha;
    bool x_core = cs.cycle_position(x) >= 0, y_core = cs.cycle_position(y) >= 0;
    if (x_core && y_core) return x == alpha.c0 || y == alpha.c0;
    VertexMask near_c0 = bit(alpha.c0) | pendant_closed_neighborhood(cs, alpha.at_c0[0]) |
                         pendant_closed_neighborhood(cs, alpha.at_c0[1]);
    if (!((near_c0 >> x & 1) || (near_c0 >> y & 1))) return false;
    return dstar(g, cs, x, y) == 1;
}

} // namespace

bool gplus_is_two_parallel_paths(const ProbeGraph& pg) {
    if (pg.nonprobes.size() != 2)
        throw std::invalid_argument("gplus analysis needs exactly two non-probes");
    const Graph& g = pg.graph;
    int x = pg.nonprobes[0], y = pg.nonprobes[1];

    if (g.is_forest()) {
        if (!recognize_tree(g))
            throw std::invalid_argument("gplus analysis requires a graph of two parallel paths");
        return gplus_tree_case(g, x, y);
    }
    RecognitionResult rec = recognize(g);
    if (!rec.is_two_parallel_paths || !rec.core)
        throw std::invalid_argument("gplus analysis requires a graph of two parallel paths");
    const CoreStructure& cs = *rec.core;

    if (!cs.insertion_points_distinct()) return gplus_alpha(g, cs, x, y);

    bool x_core = cs.cycle_position(x) >= 0;
    bool y_core = cs.cycle_position(y) >= 0;
    if (x_core && y_core)
        return cs.interior_edges.empty() ? gplus_cycle_mess1(cs, x, y)
                                         : gplus_mess1(g, cs, x, y);
    return gplus_pendant_case(g, cs, x, y);
}

} // namespace probemr
