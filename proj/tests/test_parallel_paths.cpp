#include <doctest.h>

#include <random>

#include "probemr/outerplanar.hpp"
#include "probemr/parallel_paths.hpp"

using namespace probemr;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph spider3() {
    // one degree-3 vertex, three legs of length 2
    return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

} // namespace

TEST_CASE("certificate validation") {
    CHECK(certificate_valid(path(4), {{0, 1}, {2, 3}}));
    CHECK(certificate_valid(cycle(4), {{0, 1}, {3, 2}}));
    CHECK(!certificate_valid(cycle(4), {{0, 1}, {2, 3}})); // crossed orientation
    for (VertexMask s = 1; s < bit(4) - 1; ++s) {
        auto p = induced_path_order(complete(4), s);
        auto q = induced_path_order(complete(4), bit(4) - 1 - s);
        if (!p || !q) continue;
        CHECK(!certificate_valid(complete(4), {*p, *q}));
    }
    CHECK(!certificate_valid(path(4), {{0, 1}, {2}}));       // not a partition
    CHECK(!certificate_valid(path(4), {{0, 2}, {1, 3}}));    // not induced in order
    CHECK(certificate_valid(path(4), {{0, 1, 2, 3}, {}}));   // empty side allowed
}

TEST_CASE("brute force certificate search") {
    for (int n = 1; n <= 8; ++n) CHECK(find_certificate_bruteforce(path(n)).has_value());
    CHECK(find_certificate_bruteforce(paw()).has_value());
    CHECK(!find_certificate_bruteforce(complete(4)).has_value());

    auto cert = find_certificate_bruteforce(paw());
    CHECK(certificate_valid(paw(), *cert));
}

TEST_CASE("tree recognition") {
    CHECK(recognize_tree(spider3()));
    CHECK(!recognize_tree(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}))); // K_{1,4}

    // double spider with the two degree-3 vertices non-adjacent
    Graph far(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 6}, {3, 7}, {7, 8}, {8, 9}});
    CHECK(!recognize_tree(far));

    // adjacent degree-3 vertices are fine
    Graph near(8, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {4, 6}, {5, 7}});
    CHECK(recognize_tree(near));

    // two components, both paths
    Graph twopaths(5, {{0, 1}, {2, 3}, {3, 4}});
    CHECK(recognize_tree(twopaths));
    Graph badcomp(6, {{0, 1}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(!recognize_tree(badcomp));
}

TEST_CASE("tree recognition agrees with brute force on all trees up to 9") {
    for (int n = 1; n <= 9; ++n)
        for (const Graph& t : enumerate_trees(n)) {
            bool structural = recognize_tree(t);
            bool brute = find_certificate_bruteforce(t).has_value();
            CAPTURE(emit_graph6(t));
            CHECK(structural == brute);
        }
}

TEST_CASE("core structure extraction") {
    Graph c5p(6);
    for (auto [u, v] : cycle(5).edges()) c5p.add_edge(u, v);
    c5p.add_edge(0, 5);
    auto co = core_structure(c5p);
    REQUIRE(co.structure.has_value());
    CHECK(co.structure->outer_cycle.size() == 5);
    CHECK(co.structure->interior_edges.empty());
    CHECK(co.structure->pendants.size() == 1);
    CHECK(co.structure->pendants[0].insertion == 0);

    Graph c6c = cycle(6);
    c6c.add_edge(0, 3);
    auto co2 = core_structure(c6c);
    REQUIRE(co2.structure.has_value());
    CHECK(co2.structure->interior_edges.size() == 1);
    CHECK(co2.structure->one_interior_cycles.size() == 2);

    auto co3 = core_structure(make_alpha_graph(5, 1, 1, 0, 0, {3}));
    REQUIRE(co3.structure.has_value());
    CHECK(co3.structure->alpha.has_value());
    CHECK(co3.structure->alpha->c0 == 0);

    CHECK(!core_structure(path(4)).structure.has_value());
    CHECK(!core_structure(complete(4)).structure.has_value());
}

TEST_CASE("spokes assignment") {
    // cycle core, no pendants
    auto co = core_structure(cycle(6));
    REQUIRE(co.structure.has_value());
    CHECK(spokes_assignment(cycle(6), *co.structure).has_value());

    // cycle core, three pendants with insertion points inducing P3
    Graph p3pend(9);
    for (auto [u, v] : cycle(6).edges()) p3pend.add_edge(u, v);
    p3pend.add_edge(0, 6);
    p3pend.add_edge(1, 7);
    p3pend.add_edge(2, 8);
    auto co2 = core_structure(p3pend);
    REQUIRE(co2.structure.has_value());
    CHECK(spokes_assignment(p3pend, *co2.structure).has_value());

    // insertion points pairwise non-adjacent: not in the allowed list
    Graph alt(9);
    for (auto [u, v] : cycle(6).edges()) alt.add_edge(u, v);
    alt.add_edge(0, 6);
    alt.add_edge(2, 7);
    alt.add_edge(4, 8);
    auto co3 = core_structure(alt);
    REQUIRE(co3.structure.has_value());
    CHECK(!spokes_assignment(alt, *co3.structure).has_value());
    CHECK(!find_certificate_bruteforce(alt).has_value());
}

TEST_CASE("recognition of cyclic graphs") {
    Graph c6c = cycle(6);
    c6c.add_edge(0, 3);
    auto r = recognize(c6c);
    CHECK(r.is_two_parallel_paths);
    REQUIRE(r.certificate.has_value());
    CHECK(certificate_valid(c6c, *r.certificate));

    CHECK(!recognize(complete(4)).is_two_parallel_paths);

    for (int reps = 0; reps < 3; ++reps) {
        Graph a = make_alpha_graph(4 + reps, 1 + reps % 2, 1, reps % 2, 0,
                                   reps ? std::set<int>{2} : std::set<int>{});
        auto ra = recognize(a);
        CHECK(ra.is_two_parallel_paths);
        REQUIRE(ra.certificate.has_value());
        CHECK(certificate_valid(a, *ra.certificate));
    }
}

TEST_CASE("recognition matches brute force on all connected graphs up to 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, true).drain()) {
            auto rec = recognize(g);
            bool brute = find_certificate_bruteforce(g).has_value();
            CAPTURE(emit_graph6(g));
            CHECK(rec.is_two_parallel_paths == brute);
            if (rec.is_two_parallel_paths) {
                REQUIRE(rec.certificate.has_value());
                CHECK(certificate_valid(g, *rec.certificate));
            }
        }
}

TEST_CASE("recognition on a randomized corpus at 8 and 9 vertices") {
    std::mt19937 rng(20240817);
    for (int n = 8; n <= 9; ++n) {
        int tried = 0;
        std::uniform_int_distribution<int> extra_edges(0, 3);
        while (tried < 120) {
            // sparse connected candidates: random tree plus a few edges
            Graph g(n);
            for (int v = 1; v < n; ++v)
                g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
            int adds = extra_edges(rng);
            for (int e = 0; e < adds; ++e) {
                int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
                int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
                if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
            }
            ++tried;
            auto rec = recognize(g);
            bool brute = find_certificate_bruteforce(g).has_value();
            CAPTURE(emit_graph6(g));
            CHECK(rec.is_two_parallel_paths == brute);
        }
    }
}

TEST_CASE("recognized graphs are outerplanar and minor-free") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, true).drain())
            if (recognize(g).is_two_parallel_paths) {
                CHECK(is_outerplanar(g).outerplanar);
                CHECK(!has_k4_or_k23_topological_minor(g));
            }
}

TEST_CASE("certificate arcs are consecutive on the outer cycle") {
    for (int n = 4; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n, true).drain()) {
            if (g.is_forest()) continue;
            auto rec = recognize(g);
            if (!rec.is_two_parallel_paths) continue;
            REQUIRE(rec.core.has_value());
            REQUIRE(rec.certificate.has_value());
            const auto& cycle_order = rec.core->outer_cycle;
            const int r = static_cast<int>(cycle_order.size());
            for (const auto& side : {rec.certificate->path_p, rec.certificate->path_q}) {
                std::vector<int> positions;
                for (int v : side) {
                    int p = rec.core->cycle_position(v);
                    if (p >= 0) positions.push_back(p);
                }
                if (positions.empty()) continue;
                // consecutive arc: some rotation covers the positions contiguously
                std::sort(positions.begin(), positions.end());
                int m = static_cast<int>(positions.size());
                bool arc = false;
                for (int s = 0; s < m; ++s) {
                    bool ok = true;
                    for (int i = 0; i < m && ok; ++i)
                        if (positions[(s + i) % m] != (positions[s] + i) % r) ok = false;
                    if (ok) arc = true;
                }
                CHECK(arc);
            }
        }
}

TEST_CASE("alpha graphs are uniquely partitioned") {
    for (int r = 3; r <= 5; ++r)
        for (int p1 = 1; p1 <= 2; ++p1) {
            Graph a = make_alpha_graph(r, p1, 1, 1, 0, r >= 5 ? std::set<int>{2} : std::set<int>{});
            CHECK(recognize(a).is_two_parallel_paths);
            CHECK(bruteforce_partitions(a).size() == 1);
        }
}

TEST_CASE("dstar") {
    Graph c4p(5);
    for (auto [u, v] : cycle(4).edges()) c4p.add_edge(u, v);
    c4p.add_edge(0, 4); // pendant 4 at c0
    auto co = core_structure(c4p);
    REQUIRE(co.structure.has_value());
    CHECK(dstar(c4p, *co.structure, 4, 4) == 0);
    CHECK(dstar(c4p, *co.structure, 4, 1) == 1);
    CHECK(dstar(c4p, *co.structure, 4, 2) == 2);
    CHECK(dstar(c4p, *co.structure, 4, 0) == 0);
}
