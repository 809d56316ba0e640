#include <benchmark/benchmark.h>

#include <random>

#include "mssred/exactnum.hpp"
#include "mssred/fields.hpp"
#include "mssred/oracles.hpp"
#include "mssred/pte.hpp"
#include "mssred/reduction.hpp"
#include "mssred/rscodes.hpp"
#include "mssred/satss.hpp"

using namespace mssred;

namespace {

SatInstance formula(std::size_t n, std::size_t m) {
    std::mt19937_64 rng(n * 1000 + m);
    return random_sat(n, m, rng);
}

void BM_PowerSumsGadget(benchmark::State& st) {
    const std::size_t d = static_cast<std::size_t>(st.range(0));
    auto aux = gen_aux_vars(BigRat(101), BigRat(100), GadgetParams{1, d, 1});
    auto v = aux.X();
    for (auto _ : st) benchmark::DoNotOptimize(power_sums(v, d));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * v.size()));
}
BENCHMARK(BM_PowerSumsGadget)->DenseRange(2, 6);

void BM_CmpPow10(benchmark::State& st) {
    const BigRat x = BigRat::normalize(BigInt::pow10(static_cast<std::uint64_t>(st.range(0))) + BigInt(7), BigInt(3));
    for (auto _ : st) benchmark::DoNotOptimize(cmp_pow10(x, st.range(0) - 1));
}
BENCHMARK(BM_CmpPow10)->Range(64, 1 << 16);

void BM_SatToMss(benchmark::State& st) {
    const auto phi = formula(2, 2);
    const std::size_t d = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(sat_to_mss(phi, d));
}
BENCHMARK(BM_SatToMss)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_InhomogeneousPte(benchmark::State& st) {
    const std::size_t d = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) {
        auto s = solve_inhomogeneous_pte(BigRat(3), BigRat(5), d, PteOptions{1, 1});
        benchmark::DoNotOptimize(verify_pte(s.witness).ok());
    }
}
BENCHMARK(BM_InhomogeneousPte)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_VerifyProperties(benchmark::State& st) {
    auto red = sat_to_mss(formula(7, 3), 2);
    for (auto _ : st) benchmark::DoNotOptimize(verify_properties(red.artifacts, PropertyOptions{1000, 0}));
}
BENCHMARK(BM_VerifyProperties)->Unit(benchmark::kMillisecond);

void BM_PrimeTransport(benchmark::State& st) {
    auto red = sat_to_mss(formula(3, 2), static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(transport_to_prime_field(red.instance));
}
BENCHMARK(BM_PrimeTransport)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ExtTransport(benchmark::State& st) {
    auto red = sat_to_mss(formula(2, 1), 2);
    const std::size_t ell = suggest_ext_degree(13, laurent_reduction(red.artifacts, 13).ell_min);
    for (auto _ : st) benchmark::DoNotOptimize(transport_to_ext_field(red.artifacts, 13, ell));
}
BENCHMARK(BM_ExtTransport)->Unit(benchmark::kMillisecond);

void BM_ExtFieldMul(benchmark::State& st) {
    const std::size_t ell = static_cast<std::size_t>(st.range(0));
    ExtField F(make_ext_field(BigInt(13), suggest_ext_degree(13, ell)));
    std::mt19937_64 rng(1);
    auto a = random_element(F, rng), b = random_element(F, rng);
    for (auto _ : st) benchmark::DoNotOptimize(F.mul(a, b));
}
BENCHMARK(BM_ExtFieldMul)->RangeMultiplier(4)->Range(4, 4096);

void BM_BruteForceMss(benchmark::State& st) {
    auto red = sat_to_mss(formula(2, 2), 2);
    SearchBudget b;
    b.jobs = static_cast<unsigned>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(brute_force_mss(RationalField{}, red.instance, b));
}
BENCHMARK(BM_BruteForceMss)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Interpolate(benchmark::State& st) {
    PrimeField F(BigInt(1000003));
    std::vector<std::pair<BigInt, BigInt>> pts;
    for (long long i = 0; i < st.range(0); ++i) pts.emplace_back(BigInt(i + 1), BigInt((i * i * 31 + 7) % 1000003));
    for (auto _ : st) benchmark::DoNotOptimize(interpolate(F, pts));
}
BENCHMARK(BM_Interpolate)->RangeMultiplier(2)->Range(4, 64);

void BM_SamplerTrials(benchmark::State& st) {
    SmallPrimeField F(101);
    std::vector<std::uint64_t> r{17, 42};
    for (auto _ : st) benchmark::DoNotOptimize(sample_pte_over_fq(F, r, 24, 10000, 3, SamplerOptions{false, true}));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * 10000));
}
BENCHMARK(BM_SamplerTrials)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
