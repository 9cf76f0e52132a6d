// Timings for the hot paths: normal forms, piece solvers and the graph engine.

#include <benchmark/benchmark.h>

#include <random>

#include "conj/free_product.hpp"
#include "conj/graph.hpp"
#include "conj/seifert.hpp"
#include "conj/sol.hpp"
#include "fixtures.hpp"

using namespace gmc;

namespace {

std::vector<Word> words(const Alphabet& a, std::size_t n, std::size_t len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Word> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(fixtures::random_word(rng, a, len, len));
    return out;
}

void BM_FreeProductConjugacy(benchmark::State& state) {
    freeprod::Group G({{GeneratorId("x"), 2}, {GeneratorId("y"), 3}});
    const auto ws = words(G.alphabet(), 64, static_cast<std::size_t>(state.range(0)), 1);
    std::size_t i = 0;
    for (auto _ : state) {
        const Word& a = ws[i % ws.size()];
        const Word& b = ws[(i + 1) % ws.size()];
        benchmark::DoNotOptimize(freeprod::conjugacy(G, freeprod::normalize(a, G), freeprod::normalize(b, G)));
        ++i;
    }
}
BENCHMARK(BM_FreeProductConjugacy)->Arg(8)->Arg(32)->Arg(128);

void BM_SeifertNormalize(benchmark::State& state) {
    seifert::SeifertPiece P(fixtures::trefoil_invariants());
    const auto ws = words(P.alphabet(), 64, static_cast<std::size_t>(state.range(0)), 2);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(P.normalize(ws[i++ % ws.size()]));
}
BENCHMARK(BM_SeifertNormalize)->Arg(8)->Arg(32)->Arg(128);

void BM_SeifertConjugacy(benchmark::State& state) {
    seifert::SeifertPiece P(fixtures::trefoil_invariants());
    const auto ws = words(P.alphabet(), 64, static_cast<std::size_t>(state.range(0)), 3);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(P.conjugacy(ws[i % ws.size()], ws[(i + 1) % ws.size()]));
        ++i;
    }
}
BENCHMARK(BM_SeifertConjugacy)->Arg(8)->Arg(16);

void BM_GraphDecide(benchmark::State& state) {
    auto G = fixtures::two_trefoil();
    const auto ws = words(G.alphabet(), 64, static_cast<std::size_t>(state.range(0)), 4);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(graph::decide_conjugacy(ws[i % ws.size()], ws[(i + 1) % ws.size()], G));
        ++i;
    }
}
BENCHMARK(BM_GraphDecide)->Arg(4)->Arg(10)->Arg(20);

void BM_TorusBundleConjugacy(benchmark::State& state) {
    sol::TorusBundleGroup G({2, 1, 1, 1});
    const long long p = state.range(0);
    const sol::TorusElement a{{7, -3}, p}, g{{2, 5}, 1};
    const sol::TorusElement b = G.conjugate(g, a);
    for (auto _ : state) benchmark::DoNotOptimize(sol::torus_bundle_conjugacy(a, b, G));
}
BENCHMARK(BM_TorusBundleConjugacy)->Arg(0)->Arg(1)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
