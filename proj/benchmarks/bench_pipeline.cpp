#include <benchmark/benchmark.h>

#include <random>

#include "plonkc/gadgets.hpp"
#include "plonkc/optimizer.hpp"
#include "plonkc/tabulation.hpp"
#include "plonkc/verify.hpp"

using namespace plonkc;

namespace {
const FieldSpec kGoldilocks = FieldSpec::goldilocks();
}

static void BM_BuildShaExpansion(benchmark::State& state) {
    for (auto _ : state) {
        BuiltGadget g = build_gadget("sha_expansion_step", kGoldilocks);
        benchmark::DoNotOptimize(g.built.circuit.wire_count());
    }
}
BENCHMARK(BM_BuildShaExpansion);

static void BM_GenTraceShaExpansion(benchmark::State& state) {
    BuiltGadget g = build_gadget("sha_expansion_step", kGoldilocks);
    std::mt19937_64 rng(1);
    std::vector<FieldElement> in = sample_inputs(g.built.inputs, kGoldilocks, rng);
    Trace seeded = input_trace(g.built, in);
    for (auto _ : state) {
        TraceResult r = gen_trace(g.built.circuit, seeded, g.built.tables);
        benchmark::DoNotOptimize(r.ok());
    }
}
BENCHMARK(BM_GenTraceShaExpansion);

static void BM_OptimizePoseidonRound(benchmark::State& state) {
    BuiltGadget g = build_gadget("toy_poseidon_round", kGoldilocks);
    PassContext ctx = make_context(g.built, kGoldilocks, Profile::boojum());
    for (auto _ : state) {
        OptimizeResult r = optimize(g.built.circuit, ctx);
        benchmark::DoNotOptimize(r.reports.size());
    }
}
BENCHMARK(BM_OptimizePoseidonRound);

static void BM_OptimizeShaExpansion(benchmark::State& state) {
    BuiltGadget g = build_gadget("sha_expansion_step", kGoldilocks);
    PassContext ctx = make_context(g.built, kGoldilocks, Profile::boojum());
    for (auto _ : state) {
        OptimizeResult r = optimize(g.built.circuit, ctx);
        benchmark::DoNotOptimize(r.reports.size());
    }
}
BENCHMARK(BM_OptimizeShaExpansion);

static void BM_TabulateShaExpansion(benchmark::State& state) {
    BuiltGadget g = build_gadget("sha_expansion_step", kGoldilocks);
    ConstraintSystem cs = gen_cs(g.built.circuit, kGoldilocks, g.built.tables);
    for (auto _ : state) {
        PlonkishTable t = tabulate(cs, kGoldilocks);
        benchmark::DoNotOptimize(t.rows.size());
    }
}
BENCHMARK(BM_TabulateShaExpansion);

static void BM_FlattenPoseidonRound(benchmark::State& state) {
    BuiltGadget g = build_gadget("toy_poseidon_round", kGoldilocks);
    for (auto _ : state) {
        CustomGate gate = flatten(g.built.circuit, 8, kGoldilocks, g.built.sig.outputs);
        benchmark::DoNotOptimize(gate.width);
    }
}
BENCHMARK(BM_FlattenPoseidonRound);

BENCHMARK_MAIN();
