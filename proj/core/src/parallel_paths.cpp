#include "probemr/parallel_paths.hpp"

#include <algorithm>
#include <deque>

#include "probemr/outerplanar.hpp"

namespace probemr {

namespace {

bool induces_path_in_order(const Graph& g, const std::vector<int>& seq) {
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j) {
            bool adjacent = g.has_edge(seq[i], seq[j]);
            if ((j == i + 1) != adjacent) return false;
        }
    return true;
}

bool cross_edges_noncrossing(const Graph& g, const std::vector<int>& p,
                             const std::vector<int>& q) {
    std::vector<std::pair<int, int>> cross;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j)
            if (g.has_edge(p[i], q[j])) cross.emplace_back(static_cast<int>(i), static_cast<int>(j));
    for (size_t a = 0; a < cross.size(); ++a)
        for (size_t b = a + 1; b < cross.size(); ++b) {
            auto [i1, j1] = cross[a];
            auto [i2, j2] = cross[b];
            if ((i2 > i1 && j2 < j1) || (i2 < i1 && j2 > j1)) return false;
        }
    return true;
}

} // namespace

bool certificate_valid(const Graph& g, const TwoPathsCertificate& cert) {
    const int n = g.order();
    std::vector<int> all = cert.path_p;
    all.insert(all.end(), cert.path_q.begin(), cert.path_q.end());
    if (static_cast<int>(all.size()) != n) return false;
    std::vector<int> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < n; ++v)
        if (sorted[v] != v) return false;
    if (!induces_path_in_order(g, cert.path_p)) return false;
    if (!induces_path_in_order(g, cert.path_q)) return false;
    return cross_edges_noncrossing(g, cert.path_p, cert.path_q);
}

std::optional<std::vector<int>> induced_path_order(const Graph& g, VertexMask vertices) {
    std::vector<int> vs = mask_to_vertices(vertices);
    if (vs.empty()) return std::vector<int>{};
    if (vs.size() == 1) return vs;
    int edges = 0, end = -1;
    for (int v : vs) {
        int d = popcount(g.neighbors(v) & vertices);
        if (d == 0 || d > 2) return std::nullopt;
        edges += d;
        if (d == 1 && (end < 0 || v < end)) end = v;
    }
    edges /= 2;
    if (end < 0 || edges != static_cast<int>(vs.size()) - 1) return std::nullopt;
    std::vector<int> order = {end};
    VertexMask used = bit(end);
    while (order.size() < vs.size()) {
        VertexMask next = g.neighbors(order.back()) & vertices & ~used;
        if (!next) return std::nullopt; // disconnected
        int w = lowest_bit(next);
        order.push_back(w);
        used |= bit(w);
    }
    // connected, n-1 edges, max degree 2: a path; order needs no induced check
    return order;
}

namespace {

std::optional<TwoPathsCertificate> certificate_for_split(const Graph& g, VertexMask side) {
    auto p = induced_path_order(g, side);
    if (!p) return std::nullopt;
    auto q = induced_path_order(g, g.full_mask() & ~side);
    if (!q) return std::nullopt;
    for (int flip_p = 0; flip_p < 2; ++flip_p) {
        for (int flip_q = 0; flip_q < 2; ++flip_q) {
            TwoPathsCertificate cert{*p, *q};
            if (flip_p) std::reverse(cert.path_p.begin(), cert.path_p.end());
            if (flip_q) std::reverse(cert.path_q.begin(), cert.path_q.end());
            if (cross_edges_noncrossing(g, cert.path_p, cert.path_q)) return cert;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<TwoPathsCertificate> find_certificate_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n > 14) throw std::invalid_argument("brute-force certificate search supports n <= 14");
    if (n == 0) return TwoPathsCertificate{};
    // vertex 0 goes to side P; both sides try both directions
    VertexMask rest = g.full_mask() >> 1;
    for (VertexMask s = 0; s <= rest; ++s) {
        VertexMask side = (s << 1) | 1;
        if (auto cert = certificate_for_split(g, side)) return cert;
    }
    return std::nullopt;
}

std::vector<VertexMask> bruteforce_partitions(const Graph& g) {
    const int n = g.order();
    if (n > 14) throw std::invalid_argument("brute-force partition search supports n <= 14");
    std::vector<VertexMask> out;
    if (n == 0) return out;
    VertexMask rest = g.full_mask() >> 1;
    for (VertexMask s = 0; s <= rest; ++s) {
        VertexMask side = (s << 1) | 1;
        if (certificate_for_split(g, side)) out.push_back(side);
    }
    return out;
}

bool recognize_tree(const Graph& g) {
    if (!g.is_forest()) return false;
    int comps = g.component_count();
    if (comps > 2) return false;
    if (comps == 2) {
        VertexMask c0 = g.component_of(0);
        auto a = induced_path_order(g, c0);
        auto b = induced_path_order(g, g.full_mask() & ~c0);
        return a.has_value() && b.has_value();
    }
    if (comps == 0) return true;
    std::vector<int> degree3;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= 4) return false;
        if (g.degree(v) == 3) degree3.push_back(v);
    }
    if (degree3.size() > 2) return false;
    if (degree3.size() == 2 && !g.has_edge(degree3[0], degree3[1])) return false;
    return true;
}

namespace {

// Greedy maximal path from a leaf, avoiding a second degree-3 vertex
// whenever there is a choice; the rest of the tree is then a path.
std::vector<int> tree_greedy_path(const Graph& g) {
    int leaf = -1;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 1) {
            leaf = v;
            break;
        }
    std::vector<int> path = {leaf};
    int prev = -1, cur = leaf;
    while (true) {
        VertexMask forward = g.neighbors(cur) & ~(prev >= 0 ? bit(prev) : 0);
        if (!forward) break;
        int pick = -1;
        VertexMask rest = forward;
        while (rest) {
            int w = lowest_bit(rest);
            rest &= rest - 1;
            if (pick < 0) pick = w;
            else if (g.degree(pick) == 3 && g.degree(w) != 3) pick = w;
        }
        prev = cur;
        cur = pick;
        path.push_back(cur);
    }
    return path;
}

std::optional<TwoPathsCertificate> tree_certificate(const Graph& g) {
    const int n = g.order();
    if (n == 0) return TwoPathsCertificate{};
    if (g.component_count() == 2) {
        VertexMask c0 = g.component_of(0);
        return certificate_for_split(g, c0);
    }
    std::vector<int> p = tree_greedy_path(g);
    return certificate_for_split(g, vertices_to_mask(p));
}

} // namespace

VertexMask CoreStructure::core_mask() const {
    VertexMask m = 0;
    for (int v : outer_cycle) m |= bit(v);
    return m;
}

int CoreStructure::cycle_position(int v) const {
    for (size_t i = 0; i < outer_cycle.size(); ++i)
        if (outer_cycle[i] == v) return static_cast<int>(i);
    return -1;
}

bool CoreStructure::cycle_adjacent(int u, int v) const {
    int pu = cycle_position(u), pv = cycle_position(v);
    if (pu < 0 || pv < 0) return false;
    int r = static_cast<int>(outer_cycle.size());
    int d = (pu - pv + r) % r;
    return d == 1 || d == r - 1;
}

int CoreStructure::pendant_index(int v) const {
    for (size_t i = 0; i < pendants.size(); ++i)
        for (int u : pendants[i].vertices)
            if (u == v) return static_cast<int>(i);
    return -1;
}

bool CoreStructure::insertion_points_distinct() const {
    for (size_t i = 0; i < pendants.size(); ++i)
        for (size_t j = i + 1; j < pendants.size(); ++j)
            if (pendants[i].insertion == pendants[j].insertion) return false;
    return true;
}

namespace {

std::vector<VertexMask> enumerate_induced_cycles(const Graph& g, VertexMask within) {
    std::vector<int> vs = mask_to_vertices(within);
    std::vector<VertexMask> cycles;
    const int k = static_cast<int>(vs.size());
    for (VertexMask s = 0; s < bit(k); ++s) {
        if (popcount(s) < 3) continue;
        VertexMask subset = 0;
        for (int i = 0; i < k; ++i)
            if (s >> i & 1) subset |= bit(vs[i]);
        bool cycle = true;
        VertexMask rest = subset;
        while (rest) {
            int v = lowest_bit(rest);
            rest &= rest - 1;
            if (popcount(g.neighbors(v) & subset) != 2) {
                cycle = false;
                break;
            }
        }
        if (!cycle) continue;
        // all degrees 2: a disjoint union of cycles; require connectivity
        std::vector<int> sub = mask_to_vertices(subset);
        InducedSubgraph is = induced_subgraph(g, sub);
        if (is.graph.is_connected()) cycles.push_back(subset);
    }
    return cycles;
}

std::optional<AlphaInfo> extract_alpha(const CoreStructure& cs) {
    // the alpha shape: exactly two pendants share insertion point c0, every
    // interior edge touches c0, remaining pendants sit on c0's cycle
    // neighbors, one each
    std::map<int, std::vector<int>> by_insertion;
    for (size_t i = 0; i < cs.pendants.size(); ++i)
        by_insertion[cs.pendants[i].insertion].push_back(static_cast<int>(i));
    int c0 = -1;
    for (auto& [y, idxs] : by_insertion) {
        if (idxs.size() >= 2) {
            if (idxs.size() > 2 || c0 >= 0) return std::nullopt;
            c0 = y;
        }
    }
    if (c0 < 0) return std::nullopt;
    for (auto [u, v] : cs.interior_edges)
        if (u != c0 && v != c0) return std::nullopt;
    const int r = static_cast<int>(cs.outer_cycle.size());
    int pos = cs.cycle_position(c0);
    int prev = cs.outer_cycle[(pos + r - 1) % r];
    int next = cs.outer_cycle[(pos + 1) % r];
    AlphaInfo info;
    info.c0 = c0;
    info.at_c0 = {by_insertion[c0][0], by_insertion[c0][1]};
    for (auto& [y, idxs] : by_insertion) {
        if (y == c0) continue;
        if (y == prev)
            info.at_prev = idxs[0];
        else if (y == next)
            info.at_next = idxs[0];
        else
            return std::nullopt;
    }
    return info;
}

} // namespace

CoreOutcome core_structure(const Graph& g) {
    CoreOutcome out;
    if (!g.is_connected()) {
        out.rejection = "graph is not connected";
        return out;
    }
    if (!is_outerplanar(g).outerplanar) {
        out.rejection = "graph is not outerplanar";
        return out;
    }
    VertexMask core = core_vertices(g);
    if (core == 0) {
        out.rejection = "core is empty";
        return out;
    }
    InducedSubgraph sub = induced_subgraph(g, core);
    auto local_cycle = hamiltonian_cycle(sub.graph);
    if (!local_cycle) {
        out.rejection = "core has no Hamiltonian outer-cycle";
        return out;
    }
    CoreStructure cs;
    cs.outer_cycle.reserve(local_cycle->size());
    for (int local : *local_cycle) cs.outer_cycle.push_back(sub.labels[local]);

    const int r = static_cast<int>(cs.outer_cycle.size());
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < r; ++i) pos[cs.outer_cycle[i]] = i;
    for (auto [u, v] : g.edges()) {
        if (pos[u] < 0 || pos[v] < 0) continue;
        int d = std::abs(pos[u] - pos[v]);
        if (d != 1 && d != r - 1) cs.interior_edges.emplace_back(u, v);
    }

    cs.induced_cycles = enumerate_induced_cycles(g, core);
    for (VertexMask cyc : cs.induced_cycles) {
        int interior = 0;
        for (auto [u, v] : cs.interior_edges)
            if ((cyc >> u & 1) && (cyc >> v & 1)) ++interior;
        if (interior == 1) cs.one_interior_cycles.push_back(cyc);
    }

    VertexMask outside = g.full_mask() & ~core;
    while (outside) {
        int seed = lowest_bit(outside);
        VertexMask compmask = 0;
        {
            // component of seed within the non-core vertices
            VertexMask frontier = bit(seed);
            compmask = frontier;
            while (frontier) {
                VertexMask nxt = 0;
                VertexMask it = frontier;
                while (it) {
                    int u = lowest_bit(it);
                    it &= it - 1;
                    nxt |= g.neighbors(u) & ~core & ~compmask;
                }
                compmask |= nxt;
                frontier = nxt;
            }
        }
        outside &= ~compmask;
        // attachment edges into the core
        std::vector<std::pair<int, int>> attach;
        for (int u : mask_to_vertices(compmask)) {
            VertexMask into = g.neighbors(u) & core;
            for (int y : mask_to_vertices(into)) attach.emplace_back(u, y);
        }
        if (attach.size() != 1) {
            out.rejection = "pendant component attaches by more than one edge";
            return out;
        }
        auto [x, y] = attach[0];
        auto order = induced_path_order(g, compmask);
        if (!order || (order->front() != x && order->back() != x)) {
            out.rejection = "pendant component is not a pendant path";
            return out;
        }
        if (order->back() == x) std::reverse(order->begin(), order->end());
        cs.pendants.push_back(PendantPath{*order, y});
    }
    if (cs.pendants.size() > 4) {
        out.rejection = "more than four pendant paths";
        return out;
    }
    std::sort(cs.pendants.begin(), cs.pendants.end(),
              [](const PendantPath& a, const PendantPath& b) {
                  return a.vertices.front() < b.vertices.front();
              });
    cs.alpha = extract_alpha(cs);
    out.structure = std::move(cs);
    return out;
}

std::optional<PhiAssignment> spokes_assignment(const Graph& g, const CoreStructure& cs) {
    if (!cs.insertion_points_distinct()) return std::nullopt;
    const int k = static_cast<int>(cs.pendants.size());
    if (cs.interior_edges.empty()) {
        if (k <= 2) return PhiAssignment{};
        std::vector<int> ys;
        for (const auto& p : cs.pendants) ys.push_back(p.insertion);
        Graph gy = induced_subgraph(g, ys).graph;
        static const std::vector<Graph> allowed = {
            Graph(3, {{0, 1}}),                   // K2 u K1
            Graph(4, {{0, 1}, {2, 3}}),           // 2K2
            Graph(3, {{0, 1}, {1, 2}}),           // P3
            Graph(4, {{0, 1}, {1, 2}, {2, 3}}),   // P4
            Graph(3, {{0, 1}, {1, 2}, {0, 2}}),   // C3
            Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), // C4
        };
        for (const Graph& a : allowed)
            if (gy.order() == a.order() && isomorphic(gy, a)) return PhiAssignment{};
        return std::nullopt;
    }
    if (cs.one_interior_cycles.size() != 2) return std::nullopt;
    if (k == 0) return PhiAssignment{};
    for (int assign = 0; assign < (1 << k); ++assign) {
        bool ok = true;
        int count[2] = {0, 0};
        for (int i = 0; i < k && ok; ++i) {
            int c = assign >> i & 1;
            ++count[c];
            if (!(cs.one_interior_cycles[c] >> cs.pendants[i].insertion & 1)) ok = false;
        }
        if (!ok || count[0] > 2 || count[1] > 2) continue;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k && ok; ++j) {
                if ((assign >> i & 1) != (assign >> j & 1)) continue;
                if (!cs.cycle_adjacent(cs.pendants[i].insertion, cs.pendants[j].insertion))
                    ok = false;
            }
        if (!ok) continue;
        PhiAssignment phi;
        for (int i = 0; i < k; ++i) phi.phi[i] = assign >> i & 1;
        return phi;
    }
    return std::nullopt;
}

namespace {

// Assembles a certificate for a recognized cyclic graph: split the outer
// cycle into two arcs and extend the arc ends outward through the pendant
// paths.
std::optional<TwoPathsCertificate> cyclic_certificate(const Graph& g, const CoreStructure& cs) {
    const int r = static_cast<int>(cs.outer_cycle.size());
    auto arc = [&](int from, int to) { // inclusive, cyclic
        std::vector<int> vs;
        for (int i = from;; i = (i + 1) % r) {
            vs.push_back(cs.outer_cycle[i]);
            if (i == to) break;
        }
        return vs;
    };
    auto with_pendants = [&](std::vector<int> core_arc) -> std::optional<std::vector<int>> {
        // pendants whose insertion lies on this arc must sit at its ends
        std::vector<int> mine;
        for (size_t i = 0; i < cs.pendants.size(); ++i) {
            int y = cs.pendants[i].insertion;
            if (std::find(core_arc.begin(), core_arc.end(), y) != core_arc.end())
                mine.push_back(static_cast<int>(i));
        }
        if (mine.size() > 2) return std::nullopt;
        const int orig_front = core_arc.front(), orig_back = core_arc.back();
        std::vector<int> result = core_arc;
        bool front_used = false, back_used = false;
        for (int i : mine) {
            const auto& p = cs.pendants[i];
            if (!front_used && p.insertion == orig_front) {
                result.insert(result.begin(), p.vertices.rbegin(), p.vertices.rend());
                front_used = true;
            } else if (!back_used && p.insertion == orig_back) {
                result.insert(result.end(), p.vertices.begin(), p.vertices.end());
                back_used = true;
            } else {
                return std::nullopt;
            }
        }
        return result;
    };
    for (int split_start = 0; split_start < r; ++split_start)
        for (int split_len = 1; split_len < r; ++split_len) {
            int from = split_start, to = (split_start + split_len - 1) % r;
            std::vector<int> arc_p = arc(from, to);
            std::vector<int> arc_q = arc((to + 1) % r, (from + r - 1) % r);
            auto p = with_pendants(arc_p);
            if (!p) continue;
            auto q = with_pendants(arc_q);
            if (!q) continue;
            for (int fp = 0; fp < 2; ++fp)
                for (int fq = 0; fq < 2; ++fq) {
                    TwoPathsCertificate cert{*p, *q};
                    if (fp) std::reverse(cert.path_p.begin(), cert.path_p.end());
                    if (fq) std::reverse(cert.path_q.begin(), cert.path_q.end());
                    if (certificate_valid(g, cert)) return cert;
                }
        }
    return std::nullopt;
}

} // namespace

namespace {

bool cyclic_conditions(const Graph& g, std::optional<CoreStructure>& out) {
    if (!g.is_connected()) return false; // a component with a cycle is not a path
    CoreOutcome co = core_structure(g);
    if (!co.structure) return false;
    CoreStructure& cs = *co.structure;
    out = cs;

    for (VertexMask cyc : cs.induced_cycles) {
        int interior = 0;
        for (auto [u, v] : cs.interior_edges)
            if ((cyc >> u & 1) && (cyc >> v & 1)) ++interior;
        if (interior > 2) return false;
    }
    if (!cs.interior_edges.empty() && cs.one_interior_cycles.size() != 2) return false;
    if (!cs.insertion_points_distinct()) return cs.alpha.has_value();
    return spokes_assignment(g, cs).has_value();
}

} // namespace

RecognitionResult recognize(const Graph& g) {
    RecognitionResult res;
    if (g.order() == 0) {
        res.is_two_parallel_paths = true;
        res.certificate = TwoPathsCertificate{};
        return res;
    }
    if (g.is_forest()) {
        if (!recognize_tree(g)) return res;
        res.is_two_parallel_paths = true;
        res.certificate = tree_certificate(g);
        return res;
    }
    if (!cyclic_conditions(g, res.core)) return res;
    res.is_two_parallel_paths = true;
    res.certificate = cyclic_certificate(g, *res.core);
    return res;
}

bool meets_structure_conditions(const Graph& g) {
    if (g.order() == 0) return true;
    if (g.is_forest()) return recognize_tree(g);
    std::optional<CoreStructure> unused;
    return cyclic_conditions(g, unused);
}

int dstar(const Graph& g, const CoreStructure& cs, int x, int y) {
    g.check_vertex(x);
    g.check_vertex(y);
    const int n = g.order();
    std::vector<int> pos(n, -1);
    const int r = static_cast<int>(cs.outer_cycle.size());
    for (int i = 0; i < r; ++i) pos[cs.outer_cycle[i]] = i;
    auto is_interior = [&](int u, int v) {
        for (auto [a, b] : cs.interior_edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    };
    auto weight = [&](int u, int v) {
        if (pos[u] >= 0 && pos[v] >= 0) {
            int d = std::abs(pos[u] - pos[v]);
            return (d == 1 || d == r - 1) ? 1 : -1; // -1: interior, unusable
        }
        return 0; // pendant-path edge (possibly the attachment edge)
    };
    std::vector<int> dist(n, -1);
    std::deque<int> dq;
    dist[x] = 0;
    dq.push_back(x);
    while (!dq.empty()) {
        int u = dq.front();
        dq.pop_front();
        VertexMask nb = g.neighbors(u);
        while (nb) {
            int v = lowest_bit(nb);
            nb &= nb - 1;
            if (is_interior(u, v)) continue;
            int w = weight(u, v);
            if (w < 0) continue;
            if (dist[v] < 0 || dist[u] + w < dist[v]) {
                dist[v] = dist[u] + w;
                if (w == 0)
                    dq.push_front(v);
                else
                    dq.push_back(v);
            }
        }
    }
    if (dist[y] < 0) throw std::invalid_argument("no interior-free path between the vertices");
    return dist[y];
}

} // namespace probemr
