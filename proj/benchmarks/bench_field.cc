#include <benchmark/benchmark.h>

#include "scc/gf256.hpp"
#include "scc/matrix.hpp"
#include "scc/rng.hpp"

namespace {

void BM_GfMultiply(benchmark::State& state) {
    scc::ByteRng rng(7);
    auto xs = rng.gf_vector(4096);
    auto ys = rng.gf_vector(4096);
    for (auto _ : state) {
        scc::Gf acc{};
        for (size_t i = 0; i < xs.size(); ++i) acc += xs[i] * ys[i];
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(xs.size()));
}
BENCHMARK(BM_GfMultiply);

void BM_AxpyRow(benchmark::State& state) {
    const size_t n = static_cast<size_t>(state.range(0));
    scc::ByteRng rng(11);
    auto dst = rng.gf_vector(n);
    auto src = rng.gf_vector(n);
    const uint8_t* row = scc::mul_row(0x53);
    for (auto _ : state) {
        for (size_t i = 0; i < n; ++i) dst[i] += scc::Gf(row[src[i].byte()]);
        benchmark::DoNotOptimize(dst.data());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_AxpyRow)->Arg(64)->Arg(1024)->Arg(16384);

void BM_MatrixRank(benchmark::State& state) {
    const size_t n = static_cast<size_t>(state.range(0));
    scc::ByteRng rng(13);
    scc::Matrix m(n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < 2 * n; ++c) m.at(r, c) = rng.next_gf();
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(scc::rank(m));
    }
}
BENCHMARK(BM_MatrixRank)->Arg(16)->Arg(64)->Arg(128);

}  // namespace
