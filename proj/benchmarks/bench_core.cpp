#include <benchmark/benchmark.h>

#include "nfl/bounds.hpp"
#include "nfl/enumeration.hpp"
#include "nfl/prior_lab.hpp"

namespace {

using namespace nfl;

void BM_IidRisk(benchmark::State& state) {
    const int bits = static_cast<int>(state.range(0));
    const StochasticSituation d = sample_situation_from_prior(
        UniformConditionalPrior{bits}, std::vector<double>(domain_size(bits), 1.0 / domain_size(bits)),
        7);
    const Classifier f = Classifier::constant(bits, Label::kT);
    for (auto _ : state) benchmark::DoNotOptimize(iid_risk(f, d));
}
BENCHMARK(BM_IidRisk)->Arg(8)->Arg(12);

void BM_PredictorProfiles(benchmark::State& state) {
    const int horizon = static_cast<int>(state.range(0));
    const auto predictors = enumerate_predictors(horizon);
    for (auto _ : state)
        for (const Predictor& p : predictors)
            benchmark::DoNotOptimize(predictor_error_profile(p));
}
BENCHMARK(BM_PredictorProfiles)->Arg(3)->Arg(4);

void BM_Erm(benchmark::State& state) {
    const HypothesisClass f = HypothesisClass::random_class(8, state.range(0), 99);
    const StochasticSituation d = sample_situation_from_prior(
        UniformConditionalPrior{8}, std::vector<double>(256, 1.0 / 256), 13);
    Rng rng(5);
    const Sample s = SituationSampler(d).draw_sample(100, rng);
    for (auto _ : state) benchmark::DoNotOptimize(erm(f, s));
}
BENCHMARK(BM_Erm)->Arg(32)->Arg(256);

void BM_Knn(benchmark::State& state) {
    const StochasticSituation d = sample_situation_from_prior(
        UniformConditionalPrior{8}, std::vector<double>(256, 1.0 / 256), 21);
    Rng rng(6);
    const Sample s = SituationSampler(d).draw_sample(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(knn(3, s));
}
BENCHMARK(BM_Knn)->Arg(50)->Arg(200);

void BM_ExactConservation(benchmark::State& state) {
    const std::vector<double> marginal(4, 0.25);
    const Learner a = Learner::knn(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(expected_ots_risk_under_uniform_prior_exact(a, marginal, 2));
}
BENCHMARK(BM_ExactConservation);

void BM_ParadoxTrialBatch(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_paradox_resolution(10, 4, 277, 100, 42));
}
BENCHMARK(BM_ParadoxTrialBatch);

}  // namespace

BENCHMARK_MAIN();
