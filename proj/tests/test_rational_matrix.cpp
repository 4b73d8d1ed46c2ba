#include <doctest.h>

#include <random>

#include "probemr/graph.hpp"
#include "probemr/matrix.hpp"

using namespace probemr;

namespace {

RationalMatrix ones(int r, int c) {
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = 1;
    return m;
}

RationalMatrix column(std::vector<long> vals) {
    RationalMatrix m(static_cast<int>(vals.size()), 1);
    for (size_t i = 0; i < vals.size(); ++i) m(static_cast<int>(i), 0) = rational(vals[i]);
    return m;
}

RationalMatrix random_matrix(std::mt19937& rng, int r, int c) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rational(num(rng), den(rng));
    return m;
}

Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(RationalMatrix::zero(3, 5)) == 0);
    CHECK(rank(RationalMatrix::identity(4)) == 4);
    CHECK(rank(ones(3, 4)) == 1);
    CHECK(rank(RationalMatrix()) == 0);
}

TEST_CASE("nullity basics") {
    CHECK(nullity(RationalMatrix::identity(5)) == 0);
    CHECK(nullity(RationalMatrix::zero(4, 4)) == 4);
    CHECK(nullity(ones(4, 4)) == 3);
    CHECK_THROWS_AS(nullity(RationalMatrix::zero(2, 3)), std::invalid_argument);
}

TEST_CASE("rank equals rank of transpose") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + trial % 6, c = 1 + (trial / 2) % 6;
        RationalMatrix m = random_matrix(rng, r, c);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("rank plus nullity is the order") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + trial % 6;
        RationalMatrix m = random_matrix(rng, n, n);
        CHECK(rank(m) + nullity(m) == n);
    }
}

TEST_CASE("solve") {
    RationalMatrix b = column({5, 7});
    auto x = solve(RationalMatrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto no = solve(ones(2, 2), column({1, 2}));
    CHECK(!no.has_value());

    RationalMatrix d(2, 2);
    d(0, 0) = 2;
    d(1, 1) = 3;
    auto dx = solve(d, column({4, 9}));
    REQUIRE(dx.has_value());
    CHECK(*dx == column({2, 3}));

    CHECK_THROWS_AS(solve(RationalMatrix::zero(2, 2), RationalMatrix::zero(3, 1)),
                    std::invalid_argument);
}

TEST_CASE("projection split hand cases") {
    RationalMatrix b = column({1, 0});
    auto [para_i, perp_i] = projection_split(RationalMatrix::identity(2), b);
    CHECK(para_i == b);
    CHECK(perp_i.is_zero());

    auto [para_z, perp_z] = projection_split(RationalMatrix::zero(2, 2), b);
    CHECK(para_z.is_zero());
    CHECK(perp_z == b);

    auto [para, perp] = projection_split(ones(2, 1), b);
    RationalMatrix want_para(2, 1), want_perp(2, 1);
    want_para(0, 0) = rational(1, 2);
    want_para(1, 0) = rational(1, 2);
    want_perp(0, 0) = rational(1, 2);
    want_perp(1, 0) = rational(-1, 2);
    CHECK(para == want_para);
    CHECK(perp == want_perp);
}

TEST_CASE("projection split properties") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        int r = 1 + trial % 5, ca = 1 + (trial / 3) % 4, cb = 1 + trial % 3;
        RationalMatrix a = random_matrix(rng, r, ca);
        RationalMatrix b = random_matrix(rng, r, cb);
        auto [para, perp] = projection_split(a, b);
        CHECK(para + perp == b);
        CHECK(solve(a, para).has_value());
        CHECK((a.transpose() * perp).is_zero());
    }
}

TEST_CASE("symmetric matrix with same row space") {
    CHECK(symmetric_same_rowspace(RationalMatrix::zero(2, 3)).is_zero());

    RationalMatrix from_id = symmetric_same_rowspace(RationalMatrix::identity(3));
    CHECK(rank(from_id) == 3);

    RationalMatrix b(2, 3);
    b(0, 0) = 1;
    b(0, 1) = 1;
    b(1, 0) = 2;
    b(1, 1) = 2;
    RationalMatrix a = symmetric_same_rowspace(b);
    CHECK(a.rows() == 3);
    CHECK(a.is_symmetric());
    CHECK(rank(a) == 1);
    RationalMatrix want(3, 3);
    want(0, 0) = 1;
    want(0, 1) = 1;
    want(1, 0) = 1;
    want(1, 1) = 1;
    CHECK(a == want);
}

TEST_CASE("row space equality both directions") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + trial % 4, c = 1 + (trial / 2) % 5;
        RationalMatrix b = random_matrix(rng, r, c);
        RationalMatrix a = symmetric_same_rowspace(b);
        CHECK(a.is_symmetric());
        CHECK(rank(a) == rank(b));
        // each row of b solvable against a and vice versa (row spaces agree)
        CHECK(solve(a.transpose(), b.transpose()).has_value());
        CHECK(solve(b.transpose(), a.transpose()).has_value());
    }
}

TEST_CASE("graph and probe patterns") {
    Graph k2(2, {{0, 1}});
    PatternMatrix p = graph_pattern(k2);
    CHECK(p(0, 0) == PatternEntry::Any);
    CHECK(p(0, 1) == PatternEntry::Star);
    CHECK(p(1, 0) == PatternEntry::Star);
    CHECK(p(1, 1) == PatternEntry::Any);

    ProbeGraph pk2(k2, {1});
    PatternMatrix pp = probe_pattern(pk2);
    CHECK(pp.rows() == 1);
    CHECK(pp.cols() == 2);
    CHECK(pp(0, 0) == PatternEntry::Any);
    CHECK(pp(0, 1) == PatternEntry::Star);

    // K_{2,3} with parts {0,1} and {2,3,4}
    Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    ProbeGraph pk23(k23, {2, 3, 4});
    PatternMatrix q = probe_pattern(pk23);
    CHECK(q.rows() == 2);
    CHECK(q.cols() == 5);
    CHECK(q(0, 0) == PatternEntry::Any);
    CHECK(q(0, 1) == PatternEntry::Zero);
    CHECK(q(1, 0) == PatternEntry::Zero);
    CHECK(q(1, 1) == PatternEntry::Any);
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 5; ++j) CHECK(q(i, j) == PatternEntry::Star);
}

TEST_CASE("matches_pattern") {
    PatternMatrix all_any(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) all_any(i, j) = PatternEntry::Any;
    CHECK(matches_pattern(RationalMatrix::zero(2, 2), all_any));

    PatternMatrix with_star(2, 2);
    with_star(0, 1) = PatternEntry::Star;
    CHECK(!matches_pattern(RationalMatrix::zero(2, 2), with_star));

    Graph g = paw();
    RationalMatrix adj(4, 4);
    for (auto [u, v] : g.edges()) adj(u, v) = adj(v, u) = 1;
    CHECK(matches_pattern(adj, graph_pattern(g)));
    CHECK_THROWS_AS(matches_pattern(RationalMatrix::zero(2, 3), all_any), std::invalid_argument);
}

TEST_CASE("in_S_probe") {
    Graph g = paw();
    RationalMatrix adj(4, 4);
    for (auto [u, v] : g.edges()) adj(u, v) = adj(v, u) = 1;
    ProbeGraph pg(g, {0, 3});
    CHECK(in_S_probe(adj, pg));

    RationalMatrix bad = adj;
    bad(1, 3) = bad(3, 1) = 2; // 1-3 is a probe-adjacent non-edge
    CHECK(!in_S_probe(bad, pg));

    RationalMatrix free_n = adj;
    free_n(0, 3) = free_n(3, 0) = 5; // both ends in N
    CHECK(in_S_probe(free_n, pg));

    RationalMatrix asym = adj;
    asym(0, 1) = 2;
    CHECK(!in_S_probe(asym, pg));
    CHECK_THROWS_AS(in_S_probe(RationalMatrix::zero(3, 3), pg), std::invalid_argument);
}

TEST_CASE("matrix text round trip") {
    std::mt19937 rng(5);
    RationalMatrix m = random_matrix(rng, 3, 4);
    CHECK(RationalMatrix::from_text(m.to_text()) == m);
    CHECK(parse_token("-3/6") == rational(-1, 2));
    CHECK(parse_token("7") == rational(7));
    CHECK_THROWS(parse_token("1/0"));
}
