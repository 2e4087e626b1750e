#include <benchmark/benchmark.h>

#include "scc/decoder.hpp"
#include "scc/leakage.hpp"
#include "scc/rng.hpp"

namespace {

scc::Placement make_instance(int files, int users, int replication) {
    const auto params = scc::SystemParams::make(files, users, replication);
    scc::ByteRng rng(42);
    return scc::build_placement(scc::FileLibrary::random(params, rng), params, 42);
}

void BM_Placement(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto params = scc::SystemParams::make(k, k, 2);
    scc::ByteRng rng(42);
    const auto library = scc::FileLibrary::random(params, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scc::build_placement(library, params, 42));
    }
}
BENCHMARK(BM_Placement)->Arg(4)->Arg(6)->Arg(8);

void BM_DeliveryCommon(benchmark::State& state) {
    const auto pl = make_instance(5, 5, 2);
    const scc::DemandVector d{1, 1, 2, 2, 3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(scc::transmissions_common(d, pl));
    }
}
BENCHMARK(BM_DeliveryCommon);

void BM_DecodeAllUsers(benchmark::State& state) {
    const auto pl = make_instance(5, 5, 2);
    const scc::DemandVector d{1, 1, 2, 2, 3};
    const auto tx = scc::transmissions_common(d, pl);
    for (auto _ : state) {
        for (int k = 1; k <= 5; ++k) {
            benchmark::DoNotOptimize(scc::decode_user(k, tx, pl));
        }
    }
}
BENCHMARK(BM_DecodeAllUsers);

void BM_LeakOracle(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto pl = make_instance(k, k, 2);
    scc::DemandVector d(k);
    for (int i = 0; i < k; ++i) d[i] = i / 2 + 1;
    const auto tx = scc::transmissions_keyless(d, pl);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scc::analyze_user(1, tx, pl));
    }
}
BENCHMARK(BM_LeakOracle)->Arg(4)->Arg(5)->Arg(6);

}  // namespace
