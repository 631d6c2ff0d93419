#include <benchmark/benchmark.h>

#include "ald/engine.hpp"
#include "ald/knn.hpp"
#include "ald/mixture.hpp"

namespace {

ald::DiagGMM bimodal(std::size_t d) {
  Eigen::VectorXd w(2);
  w << 0.75, 0.25;
  return ald::build_truncated_mixture(
      w, {ald::CoordinateRule::zero(), ald::CoordinateRule::sparse({{1, 10.0}})},
      {ald::SpectrumSpec::power_law(1.0, 1.25), ald::SpectrumSpec::power_law(1.0, 1.25)},
      {1.2, 2.0}, d);
}

void BM_Score(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const ald::MixtureEvaluator ev(bimodal(d));
  Eigen::VectorXd x = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(d), 0.3);
  Eigen::VectorXd out(static_cast<Eigen::Index>(d));
  double scratch[2];
  for (auto _ : state) {
    ev.score(x.data(), out.data(), scratch);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Score)->Arg(5)->Arg(25)->Arg(75);

// Chain-steps per second of the full engine (exact drift).
void BM_Engine(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto target = bimodal(d);
  ald::ALDConfig cfg{d, ald::AnnealSchedule(200, 9e-3, 20.0),
                     ald::SpectrumSpec::power_law(1.0, 1.5), ald::SpectrumSpec::power_law(1.0, 2.7)};
  ald::RunOptions opts;
  opts.workers = 1;
  for (auto _ : state) {
    auto b = ald::run_chains(cfg, target, 256, 7, opts);
    benchmark::DoNotOptimize(b.samples.data());
  }
  state.SetItemsProcessed(state.iterations() * 256 * 199);
}
BENCHMARK(BM_Engine)->Arg(5)->Arg(25)->Arg(65)->Unit(benchmark::kMillisecond);

void BM_KnnKl(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto target = bimodal(10);
  ald::Rng rng(3);
  const auto p = ald::sample(target, n, rng);
  const auto q = ald::sample(target, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ald::knn_kl(p, q, 20).value);
}
BENCHMARK(BM_KnnKl)->Arg(1000)->Arg(2500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
