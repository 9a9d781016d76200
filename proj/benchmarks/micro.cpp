#include <benchmark/benchmark.h>

#include "hslab/funcspace.hpp"
#include "hslab/inequalities.hpp"
#include "hslab/norms.hpp"
#include "hslab/opalg.hpp"
#include "hslab/quadrature.hpp"

namespace {

void BM_GaussRule(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto& rule = hslab::quadrature::gauss_legendre(points);
    benchmark::DoNotOptimize(rule.nodes.data());
  }
}
BENCHMARK(BM_GaussRule)->Arg(12)->Arg(32)->Arg(64);

void BM_WeightedIntegral1D(benchmark::State& state) {
  const auto f = hslab::funcspace::make_poly_bump(0, 1, 6);
  auto g = [&](double r) { return f.value(r) * f.value(r); };
  for (auto _ : state) {
    auto result = hslab::quadrature::integrate_weighted_1d(g, -0.5, 0, 1, 1e-8);
    benchmark::DoNotOptimize(result.value);
  }
}
BENCHMARK(BM_WeightedIntegral1D);

void BM_CombinatorialResidual(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<hslab::Rational> a;
  for (int i = 1; i <= k; ++i) a.push_back(hslab::Rational(i, i + 1));
  for (auto _ : state) {
    auto residual = hslab::opalg::combinatorial_residual(a, hslab::Rational(1, 3));
    benchmark::DoNotOptimize(residual);
  }
}
BENCHMARK(BM_CombinatorialResidual)->Arg(4)->Arg(8);

void BM_OperatorExpansion(benchmark::State& state) {
  const std::vector<int> j = {1, 2, 3, 4};
  for (auto _ : state) {
    auto sides = hslab::opalg::expand_operator_identity(j, 4);
    benchmark::DoNotOptimize(sides.first.terms().size());
  }
}
BENCHMARK(BM_OperatorExpansion);

void BM_SobolevNorm2D(benchmark::State& state) {
  const auto u = hslab::funcspace::tensorize(
      hslab::funcspace::make_poly_bump(0.05, 0.25, 4),
      {hslab::funcspace::make_poly_bump(-0.1, 0.1, 4)}, 2);
  hslab::norms::WeightedNormSpec spec{2, 1, {0, 1, 2}, hslab::norms::Domain::strip(2)};
  for (auto _ : state) {
    auto norm = hslab::norms::sobolev_norm(u, spec, 1e-5);
    benchmark::DoNotOptimize(norm.value);
  }
}
BENCHMARK(BM_SobolevNorm2D);

void BM_RatioReportOneD(benchmark::State& state) {
  hslab::inequalities::InequalityCase c;
  c.id = hslab::inequalities::CaseId::OneD;
  c.domain = hslab::norms::Domain::half_line();
  c.n = 1;
  c.m = 2;
  c.k = 1;
  c.p = 2;
  c.q = 2;
  const hslab::funcspace::TrialFunctionND u({hslab::funcspace::make_poly_bump(0.5, 2, 6)});
  for (auto _ : state) {
    auto report = hslab::inequalities::ratio_report(c, u, 1e-5);
    benchmark::DoNotOptimize(report.ratio);
  }
}
BENCHMARK(BM_RatioReportOneD);

}  // namespace

BENCHMARK_MAIN();
