#include "gkm/graph.hpp"
#include "gkm/membership.hpp"
#include "gkm/monster.hpp"
#include "gkm/polyhedral.hpp"
#include "gkm/presets.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace gkm;

namespace {

PathVector random_vector(std::mt19937_64& rng, int window, int total) {
    std::uniform_int_distribution<int> pos(1, window);
    PathVector x;
    for (int u = 0; u < total; ++u) {
        const Int k = pos(rng);
        x.set(k, x.at(k) + 1);
    }
    return x;
}

void BM_lowering(benchmark::State& state) {
    auto z = rank2_crystal({4, 2, 3});
    std::mt19937_64 rng(1);
    std::vector<PathVector> inputs;
    for (int r = 0; r < 64; ++r)
        inputs.push_back(random_vector(rng, 10, static_cast<int>(state.range(0))));
    const IndexId one = IndexId::plain(1);
    std::size_t r = 0;
    for (auto _ : state) {
        auto y = z.f_tilde(inputs[r++ % inputs.size()], one);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_lowering)->Arg(4)->Arg(16);

void BM_bfs_enumeration(benchmark::State& state) {
    auto z = rank2_crystal({2, 1, 1});
    const Int depth = state.range(0);
    for (auto _ : state) {
        auto g = bfs_image(z, depth, 3 * depth);
        benchmark::DoNotOptimize(g.nodes.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_bfs_enumeration)->Arg(4)->Arg(6)->Arg(8)->Complexity();

void BM_bfs_toy_monster(benchmark::State& state) {
    auto z = monster_crystal(toy_monster_config());
    const Int depth = state.range(0);
    for (auto _ : state) {
        auto g = bfs_image(z, depth, 26);
        benchmark::DoNotOptimize(g.nodes.size());
    }
}
BENCHMARK(BM_bfs_toy_monster)->Arg(4)->Arg(6);

void BM_theta_generation(benchmark::State& state) {
    auto z = rank2_crystal({4, 2, 3});
    const Int window = state.range(0);
    for (auto _ : state) {
        auto theta = generate_theta(z, {window, 100000});
        benchmark::DoNotOptimize(theta.size());
    }
}
BENCHMARK(BM_theta_generation)->Arg(8)->Arg(16)->Arg(24);

void BM_membership(benchmark::State& state) {
    auto z = rank2_crystal({4, 2, 3});
    GammaMembership membership(z, {16, 100000});
    std::mt19937_64 rng(7);
    std::vector<PathVector> inputs;
    for (int r = 0; r < 256; ++r)
        inputs.push_back(random_vector(rng, 12, 8));
    std::size_t r = 0;
    for (auto _ : state) {
        auto res = membership.check(inputs[r++ % inputs.size()]);
        benchmark::DoNotOptimize(res.verdict);
    }
}
BENCHMARK(BM_membership);

void BM_monster_member(benchmark::State& state) {
    auto cfg = toy_monster_config();
    std::mt19937_64 rng(11);
    std::vector<PathVector> inputs;
    for (int r = 0; r < 256; ++r)
        inputs.push_back(random_vector(rng, 20, 6));
    std::size_t r = 0;
    for (auto _ : state) {
        bool in = monster_member(cfg, inputs[r++ % inputs.size()]);
        benchmark::DoNotOptimize(in);
    }
}
BENCHMARK(BM_monster_member);

}  // namespace

BENCHMARK_MAIN();
