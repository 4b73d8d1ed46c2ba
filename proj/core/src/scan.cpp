#include "probemr/scan.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "probemr/forcing.hpp"
#include "probemr/matrix.hpp"
#include "probemr/mr_classify.hpp"
#include "probemr/parallel_paths.hpp"
#include "probemr/rank_witness.hpp"

namespace probemr {

namespace {

using Case = std::function<std::optional<std::string>()>;

std::string tag(const Graph& g, const std::vector<int>& nonprobes = {}) {
    std::ostringstream os;
    os << emit_graph6(g);
    if (!nonprobes.empty()) {
        os << " N=";
        for (size_t i = 0; i < nonprobes.size(); ++i) os << (i ? "," : "") << nonprobes[i];
    }
    return os.str();
}

std::vector<Graph> all_graphs_up_to(int n_max, bool connected) {
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n)
        for (Graph& g : enumerate_graphs(n, connected).drain()) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> two_path_pool(int n_max) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs_up_to(n_max, true))
        if (recognize(g).is_two_parallel_paths) out.push_back(g);
    for (int n = 2; n <= n_max; ++n)
        for (int a = 1; a + a <= n; ++a) {
            Graph g(n);
            for (int v = 0; v + 1 < a; ++v) g.add_edge(v, v + 1);
            for (int v = a; v + 1 < n; ++v) g.add_edge(v, v + 1);
            out.push_back(g);
        }
    return out;
}

void for_each_probe_graph(int n_max, bool connected,
                          const std::function<void(const ProbeGraph&)>& fn) {
    for (const Graph& g : all_graphs_up_to(n_max, connected))
        for (VertexMask s : independent_sets(g)) fn(ProbeGraph(g, mask_to_vertices(s)));
}

std::vector<Case> build_oracle_equivalence(int n_max) {
    std::vector<Case> cases;
    for (const Graph& g : all_graphs_up_to(n_max, true))
        cases.push_back([g]() -> std::optional<std::string> {
            auto rec = recognize(g);
            bool brute = find_certificate_bruteforce(g).has_value();
            if (rec.is_two_parallel_paths != brute)
                return tag(g) + " structural=" + std::to_string(rec.is_two_parallel_paths) +
                       " brute=" + std::to_string(brute);
            if (rec.is_two_parallel_paths &&
                (!rec.certificate || !certificate_valid(g, *rec.certificate)))
                return tag(g) + " missing or invalid certificate";
            return std::nullopt;
        });
    return cases;
}

std::vector<Case> build_gplus_cases(int n_max) {
    std::vector<Case> cases;
    for (const Graph& g : two_path_pool(n_max))
        for (int x = 0; x < g.order(); ++x)
            for (int y = x + 1; y < g.order(); ++y) {
                if (g.has_edge(x, y)) continue;
                cases.push_back([g, x, y]() -> std::optional<std::string> {
                    bool decided = gplus_is_two_parallel_paths(ProbeGraph(g, {x, y}));
                    Graph plus = g;
                    plus.add_edge(x, y);
                    bool truth = find_certificate_bruteforce(plus).has_value();
                    if (decided != truth)
                        return tag(g, {x, y}) + " decided=" + std::to_string(decided) +
                               " brute=" + std::to_string(truth);
                    return std::nullopt;
                });
            }
    return cases;
}

std::vector<Case> build_forcing_bounds(int n_max) {
    std::vector<Case> cases;
    for_each_probe_graph(n_max, false, [&](const ProbeGraph& pg) {
        cases.push_back([pg]() -> std::optional<std::string> {
            int z = probe_zero_forcing_number(pg).z;
            int k = static_cast<int>(pg.nonprobes.size());
            if (z < k)
                return tag(pg.graph, pg.nonprobes) + " Z=" + std::to_string(z) + " < |N|";
            if (k <= 1 && z != zero_forcing_number(pg.graph).z)
                return tag(pg.graph, pg.nonprobes) + " probe Z differs from Z with |N| <= 1";
            return std::nullopt;
        });
    });
    return cases;
}

std::vector<Case> build_witness_ranks(int n_max) {
    std::vector<Case> cases;
    for_each_probe_graph(n_max, false, [&](const ProbeGraph& pg) {
        cases.push_back([pg]() -> std::optional<std::string> {
            RationalMatrix w = nullity_witness(pg);
            if (!in_S_probe(w, pg)) return tag(pg.graph, pg.nonprobes) + " witness not in class";
            if (nullity(w) != static_cast<int>(pg.nonprobes.size()))
                return tag(pg.graph, pg.nonprobes) + " witness nullity " +
                       std::to_string(nullity(w));
            return std::nullopt;
        });
    });
    return cases;
}

std::vector<Case> build_reversal(int n_max) {
    std::vector<Case> cases;
    for_each_probe_graph(n_max, false, [&](const ProbeGraph& pg) {
        cases.push_back([pg]() -> std::optional<std::string> {
            const VertexMask full = pg.graph.full_mask();
            int z = probe_zero_forcing_number(pg).z;
            for (VertexMask b = 0;; ++b) {
                if (popcount(b) == z && probe_closure(pg, b).blue == full) {
                    for (VertexMask rev : all_probe_reversals(pg, b))
                        if (probe_closure(pg, rev).blue != full)
                            return tag(pg.graph, pg.nonprobes) + " reversal of " +
                                   std::to_string(b) + " does not force";
                }
                if (b == full) break;
            }
            return std::nullopt;
        });
    });
    return cases;
}

std::vector<Case> build_vertexcut(int n_max) {
    std::vector<Case> cases;
    for_each_probe_graph(n_max, false, [&](const ProbeGraph& pg) {
        if (pg.nonprobes.empty()) return;
        cases.push_back([pg]() -> std::optional<std::string> {
            if (probe_zero_forcing_number(pg).z != static_cast<int>(pg.nonprobes.size()))
                return std::nullopt; // the disjunction only applies when Z = |N|
            auto report = check_min_forcing_structure(pg);
            if (!report.minimum_reading_holds)
                return tag(pg.graph, pg.nonprobes) + " vertex-cut disjunction fails";
            return std::nullopt;
        });
    });
    return cases;
}

std::vector<Case> build_mr_consistency(int n_max) {
    std::vector<Case> cases;
    for_each_probe_graph(n_max, false, [&](const ProbeGraph& pg) {
        cases.push_back([pg]() -> std::optional<std::string> {
            MrClassification c = classify(pg);
            if (c.interval.lower > c.interval.upper)
                return tag(pg.graph, pg.nonprobes) + " interval crossed";
            if (c.value && (*c.value < c.interval.lower || *c.value > c.interval.upper))
                return tag(pg.graph, pg.nonprobes) + " verdict outside interval";
            int witness_rank = pg.order() - static_cast<int>(pg.nonprobes.size());
            if (c.interval.upper > witness_rank)
                return tag(pg.graph, pg.nonprobes) + " witness bound not applied";
            return std::nullopt;
        });
    });
    return cases;
}

std::vector<Case> build_path_cycle(int n_max) {
    std::vector<Case> cases;
    for (int n = 4; n <= n_max; ++n) {
        Graph path(n);
        for (int v = 0; v + 1 < n; ++v) path.add_edge(v, v + 1);
        Graph cyc = path;
        cyc.add_edge(n - 1, 0);
        for (const Graph& g : {path, cyc})
            for (VertexMask s : independent_sets(g)) {
                if (popcount(s) < 2) continue;
                ProbeGraph pg(g, mask_to_vertices(s));
                cases.push_back([pg]() -> std::optional<std::string> {
                    int k = static_cast<int>(pg.nonprobes.size());
                    int z = probe_zero_forcing_number(pg).z;
                    if (z != k)
                        return tag(pg.graph, pg.nonprobes) + " Z=" + std::to_string(z) +
                               " expected " + std::to_string(k);
                    RationalMatrix w = nullity_witness(pg);
                    if (nullity(w) != k || !in_S_probe(w, pg))
                        return tag(pg.graph, pg.nonprobes) + " witness nullity mismatch";
                    return std::nullopt;
                });
            }
    }
    return cases;
}

std::vector<Case> build_row_z2(int n_max) {
    std::vector<Case> cases;
    for (const Graph& g : all_graphs_up_to(n_max, true))
        cases.push_back([g]() -> std::optional<std::string> {
            bool z2 = zero_forcing_number(g).z == 2;
            bool characterized =
                find_certificate_bruteforce(g).has_value() && !g.is_path_graph();
            if (z2 != characterized)
                return tag(g) + " Z2=" + std::to_string(z2) +
                       " parallel-paths-non-path=" + std::to_string(characterized);
            return std::nullopt;
        });
    return cases;
}

} // namespace

std::vector<std::string> registered_checks() {
    return {"oracle-equivalence", "gplus-cases", "forcing-bounds",
            "witness-ranks",      "reversal",    "vertexcut",
            "mr-consistency",     "path-cycle",  "row-z2"};
}

ScanReport run_scan(const std::string& check, int n_max, int threads) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Case> cases;
    if (check == "oracle-equivalence") cases = build_oracle_equivalence(n_max);
    else if (check == "gplus-cases") cases = build_gplus_cases(n_max);
    else if (check == "forcing-bounds") cases = build_forcing_bounds(n_max);
    else if (check == "witness-ranks") cases = build_witness_ranks(n_max);
    else if (check == "reversal") cases = build_reversal(n_max);
    else if (check == "vertexcut") cases = build_vertexcut(n_max);
    else if (check == "mr-consistency") cases = build_mr_consistency(n_max);
    else if (check == "path-cycle") cases = build_path_cycle(n_max);
    else if (check == "row-z2") cases = build_row_z2(n_max);
    else throw std::invalid_argument("unknown check: " + check);

    const size_t total = cases.size();
    std::vector<std::optional<std::string>> results(total);
    if (threads < 1) threads = 1;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= total) break;
            results[i] = cases[i]();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    ScanReport report;
    report.check = check;
    report.n_max = n_max;
    report.tested = static_cast<long>(total);
    for (const auto& r : results) {
        if (r) {
            ++report.failed;
            report.exhibits.push_back(*r);
        } else {
            ++report.passed;
        }
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

std::string report_to_json(const ScanReport& report) {
    nlohmann::json j;
    j["check"] = report.check;
    j["n_max"] = report.n_max;
    j["tested"] = report.tested;
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    j["exhibits"] = report.exhibits;
    j["wall_ms"] = report.wall_ms;
    return j.dump();
}

} // namespace probemr
