#include "paralogic/embedding.hpp"
#include "paralogic/enumerate.hpp"
#include "paralogic/parser.hpp"
#include "paralogic/printer.hpp"
#include "paralogic/prover.hpp"
#include "paralogic/selfcheck.hpp"
#include "paralogic/semantics.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace paralogic;

namespace {

const char* const sample_sequents[] = {
    "p, ~p |- q",
    "|- ((p -> q) -> p) -> p",
    "~(p & q) |- ~p | ~q",
    "p -> q, q -> r, r -> s |- p -> s",
    "p & (q | r) |- p & q | p & r",
    "~(p -> ~(q | r)), s |- q | r",
};

void bench_parse(benchmark::State& state) {
    for (auto _ : state)
        for (const char* text : sample_sequents)
            benchmark::DoNotOptimize(parse_sequent(text));
}
BENCHMARK(bench_parse);

void bench_print(benchmark::State& state) {
    std::vector<sequent> parsed;
    for (const char* text : sample_sequents)
        parsed.push_back(parse_sequent(text));
    for (auto _ : state)
        for (const sequent& s : parsed)
            benchmark::DoNotOptimize(to_string(s));
}
BENCHMARK(bench_print);

void bench_prove(benchmark::State& state) {
    logic_id id = static_cast<logic_id>(state.range(0));
    std::vector<sequent> parsed;
    for (const char* text : sample_sequents)
        parsed.push_back(parse_sequent(text));
    prover_options fast;
    fast.build_proof = false;
    for (auto _ : state)
        for (const sequent& s : parsed)
            benchmark::DoNotOptimize(prove(id, s, fast).valid());
}
BENCHMARK(bench_prove)->DenseRange(0, 3)->ArgNames({"logic"});

void bench_prove_with_tree(benchmark::State& state) {
    std::vector<sequent> parsed;
    for (const char* text : sample_sequents)
        parsed.push_back(parse_sequent(text));
    for (auto _ : state)
        for (const sequent& s : parsed)
            benchmark::DoNotOptimize(prove(logic_id::bdl, s).valid());
}
BENCHMARK(bench_prove_with_tree);

void bench_matrix_consequence(benchmark::State& state) {
    std::vector<sequent> parsed;
    for (const char* text : sample_sequents)
        parsed.push_back(parse_sequent(text));
    for (auto _ : state)
        for (const sequent& s : parsed)
            benchmark::DoNotOptimize(
                matrix_consequence(logic_id::bdl, s));
}
BENCHMARK(bench_matrix_consequence);

void bench_embed(benchmark::State& state) {
    std::vector<sequent> parsed;
    for (const char* text : sample_sequents)
        parsed.push_back(parse_sequent(text));
    for (auto _ : state)
        for (const sequent& s : parsed)
            benchmark::DoNotOptimize(embed_sequent(s));
}
BENCHMARK(bench_embed);

void bench_battery_slice(benchmark::State& state) {
    battery_params params;
    params.atoms = 2;
    params.depth = 1;
    params.per_side = 1;
    for (auto _ : state) {
        battery_report report = run_battery(params);
        benchmark::DoNotOptimize(report.sequents);
    }
}
BENCHMARK(bench_battery_slice)->Unit(benchmark::kMillisecond);

void bench_enumerate(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_formulas(2, 2));
}
BENCHMARK(bench_enumerate)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
