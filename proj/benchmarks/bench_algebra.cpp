#include <benchmark/benchmark.h>

#include "fanocert/catalog.hpp"
#include "fanocert/maps.hpp"
#include "fanocert/matrix.hpp"
#include "fanocert/parser.hpp"
#include "fanocert/suites.hpp"

using namespace fanocert;

namespace {

void BM_PowerExpansion(benchmark::State& state) {
    auto reg = make_registry(World::hirzebruch);
    auto f = parse_polynomial("x1 + a*x0 + lam*y0 - 3/2*y1", reg);
    for (auto _ : state) benchmark::DoNotOptimize(power(f, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_PowerExpansion)->Arg(4)->Arg(8)->Arg(12);

void BM_GroupActionPullback(benchmark::State& state) {
    auto cat = Catalog::standard();
    auto reg = make_registry(World::hirzebruch);
    Substitution s(reg);
    for (const char* c : {"x0", "x1", "y0", "y1"}) s.set(c, cat.get(std::string("action.") + c, reg));
    auto f = cat.get("upsilon_a", reg);
    for (auto _ : state) benchmark::DoNotOptimize(substitute(f, s));
}
BENCHMARK(BM_GroupActionPullback);

void BM_QuadricComposition(benchmark::State& state) {
    auto cat = Catalog::standard();
    auto reg = make_registry(World::quadric);
    std::vector<std::string> w = {"w0", "w1", "w2", "w3", "w4"};
    std::vector<Polynomial> comps;
    for (int k = 0; k < 5; ++k) comps.push_back(cat.get("jq." + std::to_string(k), reg));
    RationalMap jq(reg, {w}, w, comps, cat.get("fc", reg));
    for (auto _ : state) benchmark::DoNotOptimize(compose(jq, jq));
}
BENCHMARK(BM_QuadricComposition);

void BM_Kernel(benchmark::State& state) {
    auto reg = make_registry(World::line);
    const auto n = static_cast<std::size_t>(state.range(0));
    ExactMatrix m(reg, n, n + 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n + 2; ++j)
            m(i, j) = Polynomial(reg, Rational(static_cast<long>((i * 7 + j * 13) % 11) - 5, static_cast<long>(j % 3 + 1)));
    for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(BM_Kernel)->Arg(6)->Arg(12)->Arg(24);

void BM_Suite(benchmark::State& state) {
    const auto& name = suite_names().at(static_cast<std::size_t>(state.range(0)));
    state.SetLabel(name);
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(name));
}
BENCHMARK(BM_Suite)->DenseRange(0, 9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
