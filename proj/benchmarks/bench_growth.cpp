#include "abelgrowth/bfs.hpp"
#include "abelgrowth/formulas.hpp"
#include "abelgrowth/generating_set.hpp"
#include "abelgrowth/group.hpp"
#include "abelgrowth/torsion_group.hpp"
#include "abelgrowth/witnesses.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

namespace {

using namespace abelgrowth;

GroupElement el(std::vector<std::int64_t> vec, int tor = 0) {
    GroupElement g;
    g.vec = std::move(vec);
    g.tor = tor;
    return g;
}

GeneratingSet standard_set(int d) {
    GroupSpec spec(d, TorsionGroup::trivial());
    std::vector<GroupElement> gens;
    for (int j = 0; j < d; ++j) {
        std::vector<std::int64_t> v(d, 0);
        v[j] = 1;
        gens.push_back(el(v));
        v[j] = -1;
        gens.push_back(el(v));
    }
    return GeneratingSet::create(spec, gens, SetKind::Symmetric);
}

void bm_bfs_lattice(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int radius = static_cast<int>(state.range(1));
    GeneratingSet s = standard_set(d);
    for (auto _ : state) {
        BfsResult res = bfs_growth(s, {.max_radius = radius});
        benchmark::DoNotOptimize(res.series.beta_at(radius));
    }
}
BENCHMARK(bm_bfs_lattice)->Args({2, 50})->Args({2, 200})->Args({3, 40})->Args({4, 25});

void bm_bfs_torsion_witness(benchmark::State& state) {
    const int radius = static_cast<int>(state.range(0));
    WitnessPair w = witness_symmetric(TorsionGroup::from_invariant_factors({4}),
                                      TorsionGroup::from_invariant_factors({6}), 1, 1);
    for (auto _ : state) {
        BfsResult res = bfs_growth(w.left, {.max_radius = radius});
        benchmark::DoNotOptimize(res.series.beta_at(radius));
    }
}
BENCHMARK(bm_bfs_torsion_witness)->Arg(100)->Arg(400);

void bm_closed_form_ball(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Count total = 0;
        for (int r = 0; r <= 200; ++r) total += beta_standard_plus(d, r);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(bm_closed_form_ball)->Arg(2)->Arg(6);

void bm_word_distance(benchmark::State& state) {
    GroupSpec spec(2, TorsionGroup::from_invariant_factors({6}));
    std::vector<GroupElement> gens = {el({1, 0}),  el({-1, 0}), el({0, 1}),
                                      el({0, -1}), el({0, 0}, 1), el({0, 0}, 5)};
    GeneratingSet s = GeneratingSet::create(spec, gens, SetKind::Symmetric);
    GroupElement target = el({17, -23}, 3);
    for (auto _ : state) {
        auto dist = word_distance(spec, s, target, 80);
        benchmark::DoNotOptimize(dist);
    }
}
BENCHMARK(bm_word_distance);

} // namespace

BENCHMARK_MAIN();
