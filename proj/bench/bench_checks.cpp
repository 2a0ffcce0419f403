// Parallel against serial axiom checking.

#include <benchmark/benchmark.h>

#include "wb/algebra.hpp"
#include "wb/models.hpp"

using namespace wb;

namespace {

const Axiom& b_axiom() { return class_axioms(Basis::BIdot).front(); }

void run(benchmark::State& st, const ApplicativeStructure& a, Exec exec) {
    CheckMode mode = CheckMode::sampled(size_t(st.range(0)), 3);
    for (auto _ : st) benchmark::DoNotOptimize(check_axiom(a, b_axiom(), mode, nullptr, exec));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_TermSerial(benchmark::State& st) {
    static auto m = model_LP();
    run(st, *m, Exec::Serial);
}
void BM_TermParallel(benchmark::State& st) {
    static auto m = model_LP();
    run(st, *m, Exec::Parallel);
}
void BM_TreeSerial(benchmark::State& st) {
    static auto m = tree_model(std::make_shared<IntegerGroup>(), Variant::T, 6);
    run(st, *m, Exec::Serial);
}
void BM_TreeParallel(benchmark::State& st) {
    static auto m = tree_model(std::make_shared<IntegerGroup>(), Variant::T, 6);
    run(st, *m, Exec::Parallel);
}

}  // namespace

BENCHMARK(BM_TermSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TermParallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeSerial)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeParallel)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
