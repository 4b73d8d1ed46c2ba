// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Run through ctest (one entry per criterion) or directly.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "probemr/forcing.hpp"
#include "probemr/matrix.hpp"
#include "probemr/mr_classify.hpp"
#include "probemr/outerplanar.hpp"
#include "probemr/parallel_paths.hpp"
#include "probemr/rank_witness.hpp"
#include "probemr/scan.hpp"

using namespace probemr;

namespace {

int worker_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void verdict(const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << name << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
}


Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

} // namespace

TEST_CASE("criterion 01 paw forcing number and rank interval") {
    const std::vector<std::vector<int>> n_sets = {{}, {0}, {1}, {3}, {0, 3}, {1, 3}};
    bool ok = true;
    std::string detail;
    for (const auto& ns : n_sets) {
        ProbeGraph pg(paw(), ns);
        int z = probe_zero_forcing_number(pg).z;
        RankInterval iv = mr_interval(pg);
        if (z != 2 || iv.lower != 2 || iv.upper != 2) {
            ok = false;
            detail = "N size " + std::to_string(ns.size()) + " gave Z=" + std::to_string(z);
        }
    }
    verdict("criterion 01 (paw example)", ok, detail);
    CHECK(ok);
}

TEST_CASE("criterion 02 paths and cycles pin Z and the witness nullity") {
    ScanReport r = run_scan("path-cycle", 10, worker_threads());
    verdict("criterion 02 (paths and cycles, n in [4,10])", r.failed == 0,
            std::to_string(r.tested) + " instances");
    CHECK(r.failed == 0);
    CHECK(r.tested > 0);
}

TEST_CASE("criterion 03 nullity witness over maximal independent sets") {
    long tested = 0, failed = 0;
    std::string first;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, true).drain())
            for (VertexMask s : maximal_independent_sets(g)) {
                ProbeGraph pg(g, mask_to_vertices(s));
                RationalMatrix w = nullity_witness(pg);
                ++tested;
                if (!in_S_probe(w, pg) || nullity(w) != popcount(s)) {
                    ++failed;
                    if (first.empty()) first = emit_graph6(g);
                }
            }
    verdict("criterion 03 (nullity witness)", failed == 0,
            std::to_string(tested) + " witnesses" + (first.empty() ? "" : ", first " + first));
    CHECK(failed == 0);
}

TEST_CASE("criterion 04 sandwich construction and tightness") {
    std::mt19937 rng(1234321);
    long tested = 0, failed = 0;
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false).drain())
            for (VertexMask s : independent_sets(g)) {
                ProbeGraph pg(g, mask_to_vertices(s));
                if (pg.probes().empty()) continue;
                for (int rep = 0; rep < 2; ++rep) {
                    Realization real = random_realization(pg, rng);
                    RationalMatrix q = construct_Q(pg, real);
                    RationalMatrix a = real.probe_block(), b = real.nonprobe_block();
                    auto split = projection_split(a, b);
                    bool good = q.is_symmetric();
                    for (int i = 0; i < a.rows() && good; ++i)
                        for (int j = 0; j < q.cols() && good; ++j)
                            if (q(i, j) != real.topblock(i, j)) good = false;
                    if (rank(q) > rank(a) + 2 * rank(split.second)) good = false;
                    ++tested;
                    if (!good) ++failed;
                }
            }
    // upper bound attained on complete bipartite graphs with N one part
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        Graph g = complete_bipartite(a, b);
        std::vector<int> nside;
        for (int v = a; v < a + b; ++v) nside.push_back(v);
        ProbeGraph pg(g, nside);
        RationalMatrix top(a, a + b);
        for (int i = 0; i < a; ++i)
            for (int j = a; j < a + b; ++j) top(i, j) = 1;
        Realization real(top, pg);
        RankInterval sb = sandwich_bounds(pg, real);
        RationalMatrix q = construct_Q(pg, real);
        RankInterval iv = mr_interval(pg);
        ++tested;
        if (rank(q) != sb.upper || iv.lower != sb.upper || iv.upper != sb.upper) ++failed;
    }
    // lower bound attained with B = 0 on K3 u complement(K2)
    {
        Graph g(5, {{0, 1}, {0, 2}, {1, 2}});
        ProbeGraph pg(g, {3, 4});
        RationalMatrix top(3, 5);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) top(i, j) = 1;
        Realization real(top, pg);
        RankInterval sb = sandwich_bounds(pg, real);
        RankInterval iv = mr_interval(pg);
        ++tested;
        if (sb.lower != sb.upper || sb.lower != 1 || iv.lower != 1 || iv.upper != 1) ++failed;
    }
    verdict("criterion 04 (sandwich construction)", failed == 0,
            std::to_string(tested) + " instances");
    CHECK(failed == 0);
}

TEST_CASE("criterion 05 zero forcing two characterization") {
    ScanReport r = run_scan("row-z2", 7, 1); // single-threaded per the stated budget
    verdict("criterion 05 (Z = 2 characterization, n <= 7)", r.failed == 0,
            std::to_string(r.tested) + " graphs, " + std::to_string(r.wall_ms) + " ms");
    CHECK(r.failed == 0);
}

TEST_CASE("criterion 06 recognizer equivalence") {
    ScanReport r = run_scan("oracle-equivalence", 7, worker_threads());
    long tree_failures = 0;
    for (int n = 1; n <= 10; ++n)
        for (const Graph& t : enumerate_trees(n)) {
            bool structural = recognize(t).is_two_parallel_paths;
            if (structural != find_certificate_bruteforce(t).has_value()) ++tree_failures;
        }
    verdict("criterion 06 (recognizer equivalence, n <= 7 and trees to 10)",
            r.failed == 0 && tree_failures == 0,
            std::to_string(r.tested) + " graphs plus trees");
    CHECK(r.failed == 0);
    CHECK(tree_failures == 0);
}

TEST_CASE("criterion 07 edge-addition case analysis") {
    ScanReport r = run_scan("gplus-cases", 8, worker_threads());
    verdict("criterion 07 (G-plus case analysis, n <= 8)", r.failed == 0,
            std::to_string(r.tested) + " pairs");
    CHECK(r.failed == 0);
}

TEST_CASE("criterion 08 alpha graphs have a unique partition") {
    long tested = 0, failed = 0;
    for (int r = 3; r <= 6; ++r)
        for (int p1 = 1; p1 <= 2; ++p1)
            for (int p2 = 1; p2 <= 2; ++p2)
                for (int p3 = 0; p3 <= 2; ++p3)
                    for (int p4 = 0; p4 <= 2; ++p4) {
                        std::vector<int> legal;
                        for (int i = 2; i <= r - 2; ++i) legal.push_back(i);
                        for (VertexMask sub = 0; sub < bit(static_cast<int>(legal.size()));
                             ++sub) {
                            std::set<int> interior;
                            for (size_t i = 0; i < legal.size(); ++i)
                                if (sub >> i & 1) interior.insert(legal[i]);
                            Graph g = make_alpha_graph(r, p1, p2, p3, p4, interior);
                            ++tested;
                            if (!recognize(g).is_two_parallel_paths ||
                                bruteforce_partitions(g).size() != 1)
                                ++failed;
                        }
                    }
    verdict("criterion 08 (alpha-graph uniqueness sweep)", failed == 0,
            std::to_string(tested) + " graphs");
    CHECK(failed == 0);
}

TEST_CASE("criterion 09 probe rules versus forcing on the cliqued graph") {
    // Asserted as specified: identical closures for every blue set. The two
    // processes provably differ when the only available force would run
    // between two non-probes, so this criterion documents that gap honestly
    // rather than weakening the check; the first exhibit is printed.
    long tested = 0, failed = 0;
    std::string first;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false).drain())
            for (VertexMask s : independent_sets(g)) {
                ProbeGraph pg(g, mask_to_vertices(s));
                for (VertexMask blue = 0; blue <= g.full_mask(); ++blue) {
                    ++tested;
                    if (probe_closure(pg, blue).blue !=
                        probe_closure_via_clique(pg, blue).blue) {
                        ++failed;
                        if (first.empty()) {
                            std::ostringstream os;
                            os << emit_graph6(g) << " N={";
                            for (int v : mask_to_vertices(s)) os << v << " ";
                            os << "} blue={";
                            for (int v : mask_to_vertices(blue)) os << v << " ";
                            os << "}";
                            first = os.str();
                        }
                    }
                }
            }
    verdict("criterion 09 (probe-rule equivalence)", failed == 0,
            std::to_string(failed) + "/" + std::to_string(tested) +
                " closures differ; first exhibit " + first);
    CHECK(failed == 0);
}

TEST_CASE("criterion 10 reversal and vertex-cut structure") {
    ScanReport rev = run_scan("reversal", 7, worker_threads());
    ScanReport cut = run_scan("vertexcut", 7, worker_threads());
    verdict("criterion 10 (reversals and the vertex-cut disjunction)",
            rev.failed == 0 && cut.failed == 0,
            std::to_string(rev.tested) + " + " + std::to_string(cut.tested) + " instances");
    CHECK(rev.failed == 0);
    CHECK(cut.failed == 0);
}

namespace {

// Independent route for criterion 11: every candidate joined part is tried
// directly (clique plus adjacency to all the rest), components are checked
// as cliques or complete bipartite graphs by exhaustive bipartitions.
bool le2_oracle_decomposes(const Graph& h) {
    const int n = h.order();
    for (VertexMask w = 0; w < (n == 0 ? 1 : bit(n)); ++w) {
        bool valid = true;
        for (int u : mask_to_vertices(w)) {
            if ((h.neighbors(u) | w | bit(u)) != (h.full_mask() | w)) valid = false;
            if ((h.neighbors(u) & w) != (w & ~bit(u))) valid = false;
        }
        if (!valid) continue;
        VertexMask rest = h.full_mask() & ~w;
        int big_cliques = 0;
        bool good = true;
        VertexMask todo = rest;
        while (todo && good) {
            int seed = lowest_bit(todo);
            VertexMask comp = h.component_of(seed) & rest;
            // component within rest: recompute by BFS restricted to rest
            VertexMask cm = bit(seed), frontier = bit(seed);
            while (frontier) {
                VertexMask nxt = 0;
                for (int u : mask_to_vertices(frontier)) nxt |= h.neighbors(u) & rest & ~cm;
                cm |= nxt;
                frontier = nxt;
            }
            comp = cm;
            todo &= ~comp;
            std::vector<int> vs = mask_to_vertices(comp);
            Graph cg = induced_subgraph(h, vs).graph;
            int m = cg.order();
            bool clique = cg.size() == m * (m - 1) / 2;
            bool bipartite_complete = false;
            for (VertexMask part = 0; part < bit(m) && !bipartite_complete; ++part) {
                int p = popcount(part), q = m - p;
                if (cg.size() != p * q) continue;
                bool all_cross = true;
                for (int u = 0; u < m && all_cross; ++u)
                    for (int v = u + 1; v < m && all_cross; ++v) {
                        bool cross = ((part >> u) & 1) != ((part >> v) & 1);
                        if (cg.has_edge(u, v) != cross) all_cross = false;
                    }
                if (all_cross) bipartite_complete = true;
            }
            if (bipartite_complete) continue;
            if (clique && m >= 3) {
                if (++big_cliques > 2) good = false;
                continue;
            }
            if (clique) continue; // K1, K2 count as complete bipartite anyway
            good = false;
        }
        if (good) return true;
    }
    return false;
}

bool le2_oracle(const ProbeGraph& pg) {
    GraphStream stream = completions(pg);
    while (auto h = stream.next())
        if (le2_oracle_decomposes(complement(*h))) return true;
    return false;
}

} // namespace

TEST_CASE("criterion 11 rank-at-most-two decider against an independent search") {
    long tested = 0, failed = 0;
    std::string first;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false).drain())
            for (VertexMask s : independent_sets(g)) {
                ProbeGraph pg(g, mask_to_vertices(s));
                ++tested;
                if (is_mr_le2(pg).has_value() != le2_oracle(pg)) {
                    ++failed;
                    if (first.empty()) first = emit_graph6(g);
                }
            }
    verdict("criterion 11 (mr <= 2 equivalence)", failed == 0,
            std::to_string(tested) + " probe graphs" + (first.empty() ? "" : ", first " + first));
    CHECK(failed == 0);
}

TEST_CASE("criterion 12 the rank n-2 characterization") {
    const SpecialGraphCatalog& catalog = SpecialGraphCatalog::builtin();
    long tested = 0, failed = 0;
    std::string first;
    auto extreme = [&](const Graph& g) {
        // mr(g) = |g| - 2, combinatorially: two parallel paths but not a
        // path, or one of the catalogued types
        return (find_certificate_bruteforce(g).has_value() && !g.is_path_graph()) ||
               special_graph_match(g, catalog).has_value();
    };
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n, true).drain()) {
            std::vector<std::vector<int>> n_sets = {{}};
            for (int v = 0; v < n; ++v) n_sets.push_back({v});
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    if (!g.has_edge(x, y)) n_sets.push_back({x, y});
            for (const auto& ns : n_sets) {
                ProbeGraph pg(g, ns);
                bool decided = is_mr_nminus2(pg, catalog).has_value();
                bool truth;
                if (ns.size() <= 1) {
                    truth = extreme(g);
                } else {
                    Graph plus = g;
                    plus.add_edge(ns[0], ns[1]);
                    bool ge_g = extreme(g) || g.is_path_graph();
                    bool ge_plus = extreme(plus) || plus.is_path_graph();
                    bool eq_somewhere = extreme(g) || extreme(plus);
                    truth = ge_g && ge_plus && eq_somewhere;
                }
                ++tested;
                if (decided != truth) {
                    ++failed;
                    if (first.empty())
                        first = emit_graph6(g) + " |N|=" + std::to_string(ns.size());
                }
            }
        }
    verdict("criterion 12 (mr = n-2 theorem, special case dormant until transcription)",
            failed == 0,
            std::to_string(tested) + " probe graphs" + (first.empty() ? "" : ", first " + first));
    CHECK(failed == 0);
}

TEST_CASE("criterion 13 recognized graphs exclude the forbidden minors") {
    long tested = 0, failed = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n, true).drain()) {
            if (!recognize(g).is_two_parallel_paths) continue;
            ++tested;
            if (has_k4_or_k23_topological_minor(g)) ++failed;
        }
    verdict("criterion 13 (outerplanarity invariant)", failed == 0,
            std::to_string(tested) + " recognized graphs");
    CHECK(failed == 0);
}
