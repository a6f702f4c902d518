#include <benchmark/benchmark.h>

#include "fht/affine_weyl.hpp"
#include "fht/fht_map.hpp"
#include "fht/sampling.hpp"
#include "fht/theta_algebra.hpp"
#include "fht/verlinde.hpp"

using namespace fht;

namespace {

const RootSystem& a2()
{
    static const RootSystem rs = RootSystem::build(LieType::parse("A2"));
    return rs;
}

const RootSystem& g2()
{
    static const RootSystem rs = RootSystem::build(LieType::parse("G2"));
    return rs;
}

void BM_BuildRootSystem(benchmark::State& state)
{
    const std::vector<LieType> types = {LieType::parse("A4"), LieType::parse("B4"),
                                        LieType::parse("F4"), LieType::parse("E6")};
    for (auto _ : state) {
        for (const auto& t : types) {
            auto rs = RootSystem::build(t);
            benchmark::DoNotOptimize(rs);
        }
    }
}
BENCHMARK(BM_BuildRootSystem);

void BM_AffineFold(benchmark::State& state)
{
    const std::int64_t level = state.range(0);
    Sampler gen(1);
    std::vector<Weight> weights;
    for (int i = 0; i < 256; ++i) weights.push_back(gen.weight(g2(), 4 * level));
    for (auto _ : state) {
        for (const auto& w : weights) {
            auto f = affine_fold(g2(), w, level);
            benchmark::DoNotOptimize(f);
        }
    }
    state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_AffineFold)->Arg(4)->Arg(8)->Arg(16);

void BM_FusionTable(benchmark::State& state)
{
    const std::int64_t k = state.range(0);
    for (auto _ : state) {
        FreudenthalCache cache;
        const LevelWeights lw = level_weights(a2(), k);
        for (const auto& l : lw.weights)
            for (const auto& m : lw.weights) {
                auto f = fusion(a2(), l, m, k, &cache);
                benchmark::DoNotOptimize(f);
            }
    }
}
BENCHMARK(BM_FusionTable)->Arg(2)->Arg(4);

void BM_SMatrix(benchmark::State& state)
{
    for (auto _ : state) {
        auto s = s_matrix(a2(), state.range(0));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SMatrix)->Arg(3)->Arg(5);

void BM_Freudenthal(benchmark::State& state)
{
    const RootSystem rs = RootSystem::build(LieType::parse("B3"));
    const Weight lambda{IntVec{2, 2, 2}};
    for (auto _ : state) {
        auto ws = freudenthal_weights(rs, lambda);
        benchmark::DoNotOptimize(ws);
    }
}
BENCHMARK(BM_Freudenthal);

void BM_WedgeExpansion(benchmark::State& state)
{
    const RootSystem rs = RootSystem::build(LieType::parse("B3"));
    for (auto _ : state) {
        auto c = wedge_n_minus_char(rs);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_WedgeExpansion);

void BM_FhtImage(benchmark::State& state)
{
    const std::int64_t window = state.range(0);
    for (auto _ : state) {
        auto img = fht_image(a2(), Weight{IntVec{1, 0}}, 2, window);
        benchmark::DoNotOptimize(img);
    }
}
BENCHMARK(BM_FhtImage)->Arg(8)->Arg(16)->Arg(24);

void BM_ThetaMatrixModel(benchmark::State& state)
{
    Sampler gen(7);
    ThetaElement elem(2);
    for (int i = 0; i < 6; ++i)
        elem.add(gen.coroot(a2(), 1), gen.weight(a2(), 2), gen.integer(-2, 2));
    for (auto _ : state) {
        auto m = matrix_model(a2(), elem, 4);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_ThetaMatrixModel);

} // namespace

BENCHMARK_MAIN();
