#include <doctest.h>

#include "probemr/graph.hpp"
#include "probemr/outerplanar.hpp"

using namespace probemr;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

Graph wheel5() {
    Graph g = cycle(5);
    Graph w(6);
    for (auto [u, v] : g.edges()) w.add_edge(u, v);
    for (int v = 0; v < 5; ++v) w.add_edge(5, v);
    return w;
}

} // namespace

TEST_CASE("topological minor search") {
    CHECK(has_k4_or_k23_topological_minor(complete(4)));
    CHECK(has_k4_or_k23_topological_minor(k23()));
    CHECK(has_k4_or_k23_topological_minor(wheel5()));
    for (const Graph& t : enumerate_trees(8)) CHECK(!has_k4_or_k23_topological_minor(t));
    CHECK(!has_k4_or_k23_topological_minor(cycle(6)));

    // subdivided K4 is still found
    Graph sub(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 4}, {4, 3}});
    CHECK(has_k4_or_k23_topological_minor(sub));
}

TEST_CASE("outerplanar basics") {
    CHECK(!is_outerplanar(complete(4)).outerplanar);
    CHECK(!is_outerplanar(k23()).outerplanar);

    Graph c6_chord = cycle(6);
    c6_chord.add_edge(0, 3);
    auto res = is_outerplanar(c6_chord);
    CHECK(res.outerplanar);
    REQUIRE(res.outer_cycle.has_value());
    CHECK(*res.outer_cycle == std::vector<int>{0, 1, 2, 3, 4, 5});

    CHECK(is_outerplanar(Graph(1)).outerplanar);
    CHECK(is_outerplanar(cycle(5)).outerplanar);

    // two crossing chords force a K4 subdivision
    Graph crossed = cycle(6);
    crossed.add_edge(0, 3);
    crossed.add_edge(1, 4);
    CHECK(!is_outerplanar(crossed).outerplanar);
    CHECK(has_k4_or_k23_topological_minor(crossed));
}

TEST_CASE("outer cycle only reported for 2-connected cores") {
    // two disjoint triangles joined by an edge: core is not 2-connected
    Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
    auto res = is_outerplanar(g);
    CHECK(res.outerplanar);
    CHECK(!res.outer_cycle.has_value());
}

TEST_CASE("two outerplanarity implementations agree on all graphs up to 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n, false).drain())
            CHECK(is_outerplanar(g).outerplanar == !has_k4_or_k23_topological_minor(g));
}
