#include <benchmark/benchmark.h>

#include "bsassign/assignmod.hpp"
#include "bsassign/gb.hpp"
#include "bsassign/morse.hpp"

using namespace bsassign;

static void BM_build_graph(benchmark::State& state) {
    LieType lt = LieType::parse("A3");
    Word w{{1, 2, 3, 1, 2}};
    for (auto _ : state)
        benchmark::DoNotOptimize(BSGraph::build(lt, w));
}
BENCHMARK(BM_build_graph);

static void BM_cohomology_basis_word5(benchmark::State& state) {
    LieType lt = LieType::parse("A3");
    Word w{{1, 2, 3, 1, 2}};
    for (auto _ : state)
        benchmark::DoNotOptimize(cohomology_basis(lt, w));
}
BENCHMARK(BM_cohomology_basis_word5);

static void BM_assignment_basis_212(benchmark::State& state) {
    LieType lt = LieType::parse("A2");
    Word w{{2, 1, 2}};
    for (auto _ : state)
        benchmark::DoNotOptimize(assignment_basis(lt, w));
}
BENCHMARK(BM_assignment_basis_212);

static void BM_assignment_basis_word4(benchmark::State& state) {
    LieType lt = LieType::parse("B2");
    Word w{{1, 2, 1, 2}};
    for (auto _ : state)
        benchmark::DoNotOptimize(assignment_basis(lt, w));
}
BENCHMARK(BM_assignment_basis_word4);

static void BM_express_in_cohomology(benchmark::State& state) {
    BasisMatrix h = cohomology_basis(LieType::parse("A2"), Word{{2, 1, 2}});
    Assignment delta = delta_vertex(h.graph, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(express_in_cohomology(h, delta.values()));
}
BENCHMARK(BM_express_in_cohomology);

static void BM_groebner_syzygies(benchmark::State& state) {
    Polynomial x = Polynomial::variable(2, 1), y = Polynomial::variable(2, 2);
    std::vector<ModuleElement> gens{{x, y}, {y, x}, {x + y, x + y}, {x * y, y * y}};
    for (auto _ : state)
        benchmark::DoNotOptimize(syzygies(gens, 2, 2));
}
BENCHMARK(BM_groebner_syzygies);

static void BM_morse_212(benchmark::State& state) {
    LieType lt = LieType::parse("A2");
    Word w{{2, 1, 2}};
    Polarization xi{{Rational(1), Rational(1)}};
    for (auto _ : state)
        benchmark::DoNotOptimize(morse_generators(lt, w, xi));
}
BENCHMARK(BM_morse_212);

static void BM_oracle_slice_dim(benchmark::State& state) {
    BSGraph g = BSGraph::build(LieType::parse("A2"), Word{{2, 1, 2}});
    for (auto _ : state)
        benchmark::DoNotOptimize(assignment_slice_dimension(g, 4));
}
BENCHMARK(BM_oracle_slice_dim);

BENCHMARK_MAIN();
