#include <benchmark/benchmark.h>

#include <random>

#include "cplx/clustering.hpp"
#include "cplx/divergence.hpp"
#include "cplx/pipeline.hpp"
#include "cplx/special_functions.hpp"

namespace {

std::vector<cplx::LabeledPosterior> random_posteriors(std::size_t n) {
    std::mt19937_64 rng(n);
    std::vector<cplx::LabeledPosterior> out;
    for (std::size_t i = 0; i < n; ++i) {
        const auto inspected = 50 + rng() % 5000;
        const auto repaired = rng() % (inspected / 10 + 1);
        out.push_back({std::to_string(i), cplx::posterior_from_counts({std::to_string(i), {}, std::nullopt,
                                                                       inspected, repaired})});
    }
    return out;
}

void BM_LogBeta(benchmark::State& state) {
    double a = 3.5, b = 1234.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cplx::special::log_beta(a, b));
        a += 1e-9;
    }
}
BENCHMARK(BM_LogBeta);

void BM_RegIncBeta(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cplx::special::reg_inc_beta(0.03, 40.5, 1400.5));
}
BENCHMARK(BM_RegIncBeta);

void BM_BetaQuantile(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cplx::special::beta_quantile(0.995, 40.5, 1400.5));
}
BENCHMARK(BM_BetaQuantile);

void BM_HellingerBeta(benchmark::State& state) {
    const cplx::BetaDist x(5.5, 195.5), y(4.5, 166.5);
    for (auto _ : state) benchmark::DoNotOptimize(cplx::hellinger_beta(x, y));
}
BENCHMARK(BM_HellingerBeta);

void BM_BuildMatrix(benchmark::State& state) {
    const auto posteriors = random_posteriors(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cplx::build_matrix(posteriors));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildMatrix)->Arg(35)->Arg(200)->Arg(631)->Unit(benchmark::kMillisecond);

void BM_Agglomerate(benchmark::State& state) {
    const auto matrix = cplx::build_matrix(random_posteriors(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(cplx::agglomerate(matrix));
}
BENCHMARK(BM_Agglomerate)->Arg(35)->Arg(200)->Arg(631)->Unit(benchmark::kMillisecond);

void BM_CaseStudyPipeline(benchmark::State& state) {
    cplx::RunConfig cfg;
    cfg.input = std::string(CPLX_BENCH_DATA_DIR) + "/weld_types_top35.csv";
    cfg.type_col = "Weld Type";
    cfg.inspected_col = "Inspected Welds";
    cfg.repaired_col = "Repaired Welds";
    cfg.total_col = "Total Welds";
    cfg.attrs = {"NPS", "Schedule", "Material"};
    cfg.top_n = 35;
    cfg.grand_total = 224298;
    cfg.k = 7;
    for (auto _ : state) {
        const auto report = cplx::analyze_counts(cplx::load_counts(cfg), cfg);
        benchmark::DoNotOptimize(cplx::render_artifacts(report, cfg));
    }
}
BENCHMARK(BM_CaseStudyPipeline)->Unit(benchmark::kMillisecond);

}  // namespace
