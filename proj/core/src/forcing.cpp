#include "probemr/forcing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace probemr {

namespace {

// One forcing step under the probe rules; nonprobes == 0 gives the standard
// rule. Returns false at the fixed point.
bool step(const Graph& g, VertexMask nonprobes, VertexMask& blue,
          std::vector<std::pair<int, int>>& log) {
    const VertexMask full = g.full_mask();
    bool nonprobes_ready = (nonprobes & ~blue) == 0;
    VertexMask eligible = blue & (~nonprobes | (nonprobes_ready ? full : 0));
    while (eligible) {
        int v = lowest_bit(eligible);
        eligible &= eligible - 1;
        VertexMask white = g.neighbors(v) & ~blue;
        if (popcount(white) == 1) {
            int w = lowest_bit(white);
            blue |= bit(w);
            log.emplace_back(v, w);
            return true;
        }
    }
    return false;
}

ForcingState run_closure(const Graph& g, VertexMask nonprobes, VertexMask blue) {
    ForcingState state;
    state.blue = blue & g.full_mask();
    while (step(g, nonprobes, state.blue, state.log)) {
    }
    return state;
}

} // namespace

ForcingState standard_closure(const Graph& g, VertexMask blue) {
    return run_closure(g, 0, blue);
}

ForcingState probe_closure(const ProbeGraph& pg, VertexMask blue) {
    return run_closure(pg.graph, pg.nonprobe_mask(), blue);
}

Graph clique_completion(const ProbeGraph& pg) {
    Graph g = pg.graph;
    for (size_t i = 0; i < pg.nonprobes.size(); ++i)
        for (size_t j = i + 1; j < pg.nonprobes.size(); ++j)
            g.add_edge(pg.nonprobes[i], pg.nonprobes[j]);
    return g;
}

ForcingState probe_closure_via_clique(const ProbeGraph& pg, VertexMask blue) {
    return standard_closure(clique_completion(pg), blue);
}

namespace {

template <typename Closure>
ForcingNumber minimum_forcing_set(const Graph& g, int search_limit, Closure&& closure) {
    const int n = g.order();
    if (n > search_limit) throw std::invalid_argument("graph exceeds the forcing search limit");
    const VertexMask full = g.full_mask();
    if (closure(VertexMask{0}) == full) return {0, 0};
    for (int k = 1; k <= n; ++k) {
        // subsets of size k in lexicographic order for a deterministic witness
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            VertexMask b = 0;
            for (int i : idx) b |= bit(i);
            if (closure(b) == full) return {k, b};
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {n, full}; // unreachable: the full set always forces
}

} // namespace

ForcingNumber zero_forcing_number(const Graph& g, int search_limit) {
    return minimum_forcing_set(g, search_limit,
                               [&](VertexMask b) { return standard_closure(g, b).blue; });
}

ForcingNumber probe_zero_forcing_number(const ProbeGraph& pg, int search_limit) {
    VertexMask nonprobes = pg.nonprobe_mask();
    return minimum_forcing_set(pg.graph, search_limit, [&](VertexMask b) {
        return run_closure(pg.graph, nonprobes, b).blue;
    });
}

ForcingChains forcing_chains(const ForcingState& state, VertexMask initial, int n) {
    VertexMask full = n == 64 ? ~VertexMask{0} : (bit(n) - 1);
    if (state.blue != full) throw std::invalid_argument("closure is not complete");
    ForcingChains out;
    std::map<int, size_t> chain_ending_at;
    for (int v : mask_to_vertices(initial)) {
        chain_ending_at[v] = out.chains.size();
        out.chains.push_back({v});
    }
    for (auto [forcer, forced] : state.log) {
        auto it = chain_ending_at.find(forcer);
        if (it == chain_ending_at.end()) throw std::logic_error("forcer is mid-chain");
        size_t c = it->second;
        chain_ending_at.erase(it);
        out.chains[c].push_back(forced);
        chain_ending_at[forced] = c;
    }
    return out;
}

VertexMask reversal(const ForcingChains& chains) {
    VertexMask out = 0;
    for (const auto& chain : chains.chains) out |= bit(chain.back());
    return out;
}

namespace {

struct ReversalSearch {
    const Graph& g;
    VertexMask nonprobes;
    VertexMask full;
    std::set<std::pair<VertexMask, VertexMask>> seen; // (blue, forcer set)
    std::set<VertexMask> reversals;

    // forcers: vertices that have already forced (each forces at most once)
    void explore(VertexMask blue, VertexMask forcers) {
        if (!seen.insert({blue, forcers}).second) return;
        bool nonprobes_ready = (nonprobes & ~blue) == 0;
        VertexMask eligible = blue & ~forcers & (nonprobes_ready ? full : ~nonprobes);
        bool any = false;
        VertexMask rest = eligible;
        while (rest) {
            int v = lowest_bit(rest);
            rest &= rest - 1;
            VertexMask white = g.neighbors(v) & ~blue;
            if (popcount(white) != 1) continue;
            any = true;
            explore(blue | white, forcers | bit(v));
        }
        if (!any && blue == full) reversals.insert(full & ~forcers);
    }
};

} // namespace

std::vector<VertexMask> all_probe_reversals(const ProbeGraph& pg, VertexMask blue) {
    ReversalSearch search{pg.graph, pg.nonprobe_mask(), pg.graph.full_mask(), {}, {}};
    search.explore(blue & search.full, 0);
    return {search.reversals.begin(), search.reversals.end()};
}

bool is_vertex_cut(const Graph& g, VertexMask s) {
    // separation reading: two vertices of one component of g end up in
    // different components once s is removed
    if (s == 0) return false;
    VertexMask todo = g.full_mask() & ~s;
    while (todo) {
        int seed = lowest_bit(todo);
        VertexMask comp = g.component_of(seed);
        VertexMask keep = comp & ~s;
        todo &= ~comp;
        Graph reduced = induced_subgraph(g, mask_to_vertices(keep)).graph;
        if (reduced.component_count() >= 2) return true;
    }
    return false;
}

MinForcingStructureReport check_min_forcing_structure(const ProbeGraph& pg) {
    const int n = pg.order();
    VertexMask nmask = pg.nonprobe_mask();
    ForcingNumber zn = probe_zero_forcing_number(pg);
    if (zn.z != static_cast<int>(pg.nonprobes.size()))
        throw std::invalid_argument("check_min_forcing_structure requires Z(G^N) = |N|");

    MinForcingStructureReport report;
    report.z = zn.z;
    report.nonprobe_count = static_cast<int>(pg.nonprobes.size());
    report.n_is_vertex_cut = is_vertex_cut(pg.graph, nmask);

    const VertexMask full = pg.graph.full_mask();
    bool min_disjoint_ok = true, min_subset_ok = true, all_ok = true;
    for (VertexMask b = 0;; ++b) {
        bool disjoint = (b & nmask) == 0;
        bool not_superset = (nmask & ~b) != 0;
        if ((disjoint || not_superset) && probe_closure(pg, b).blue == full) {
            bool minimum = popcount(b) == zn.z;
            for (VertexMask rev : all_probe_reversals(pg, b)) {
                if (rev != nmask) {
                    if (disjoint) all_ok = false;
                    if (minimum && disjoint) {
                        min_disjoint_ok = false;
                        report.violations.emplace_back(b, rev);
                    }
                    if (minimum && not_superset) min_subset_ok = false;
                }
            }
        }
        if (b == full) break;
    }
    (void)n;
    report.minimum_reading_holds = report.n_is_vertex_cut || min_disjoint_ok;
    report.subset_reading_holds = report.n_is_vertex_cut || min_subset_ok;
    report.all_sets_reading_holds = report.n_is_vertex_cut || all_ok;
    if (report.minimum_reading_holds) report.violations.clear();
    return report;
}

} // namespace probemr
