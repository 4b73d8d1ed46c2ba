#include <benchmark/benchmark.h>

#include <random>

#include "probemr/forcing.hpp"
#include "probemr/matrix.hpp"
#include "probemr/parallel_paths.hpp"
#include "probemr/rank_witness.hpp"

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

} // namespace

static void BM_StandardClosure(benchmark::State& state) {
    Graph g = path(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto s = standard_closure(g, bit(0));
        benchmark::DoNotOptimize(s.blue);
    }
}
BENCHMARK(BM_StandardClosure)->Arg(16)->Arg(32)->Arg(64);

static void BM_ProbeForcingNumber(benchmark::State& state) {
    Graph g = cycle(static_cast<int>(state.range(0)));
    ProbeGraph pg(g, {0, 2, 4});
    for (auto _ : state) {
        auto zn = probe_zero_forcing_number(pg);
        benchmark::DoNotOptimize(zn.z);
    }
}
BENCHMARK(BM_ProbeForcingNumber)->Arg(8)->Arg(10)->Arg(12);

static void BM_BareissRank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-9, 9);
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rational(val(rng), 1 + (val(rng) & 3));
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_BareissRank)->Arg(8)->Arg(16)->Arg(24);

static void BM_NullityWitness(benchmark::State& state) {
    Graph g = path(static_cast<int>(state.range(0)));
    std::vector<int> nonprobes;
    for (int v = 1; v < g.order(); v += 2) nonprobes.push_back(v);
    ProbeGraph pg(g, nonprobes);
    for (auto _ : state) {
        RationalMatrix w = nullity_witness(pg);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_NullityWitness)->Arg(8)->Arg(12);

static void BM_RecognizeCorpus(benchmark::State& state) {
    auto graphs = enumerate_graphs(static_cast<int>(state.range(0)), true).drain();
    for (auto _ : state) {
        int hits = 0;
        for (const Graph& g : graphs)
            if (recognize(g).is_two_parallel_paths) ++hits;
        benchmark::DoNotOptimize(hits);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_RecognizeCorpus)->Arg(6)->Arg(7);

static void BM_BruteforceCertificate(benchmark::State& state) {
    Graph g = make_alpha_graph(5, 2, 2, 1, 1, {2, 3});
    for (auto _ : state) {
        auto cert = find_certificate_bruteforce(g);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_BruteforceCertificate);

static void BM_Graph6Roundtrip(benchmark::State& state) {
    auto graphs = enumerate_graphs(6, false).drain();
    for (auto _ : state) {
        for (const Graph& g : graphs) {
            Graph back = parse_graph6(emit_graph6(g));
            benchmark::DoNotOptimize(back);
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_Graph6Roundtrip);

BENCHMARK_MAIN();
