#include <benchmark/benchmark.h>

#include "hgterm/log.hpp"
#include "hgterm/oracle.hpp"
#include "hgterm/parse.hpp"
#include "hgterm/structure.hpp"

using namespace hgterm;

namespace {

FactoredRational q(const char* num, const char* den, std::size_t k) {
  return FactoredRational::quotient(parse_poly(num, k), parse_poly(den, k));
}

TermSpec binomial() {
  auto s = TermSpec::from_generators({q("z1+1", "z1+1-z2", 2), q("z1-z2", "z2+1", 2)});
  s.seed = Seed{{0, 0}, 1};
  return s;
}

TermSpec mixed() {
  auto s = TermSpec::from_generators({q("z1+z2+1", "z1+1", 2), q("2*(z1+z2+1)", "1", 2)});
  s.seed = Seed{{0, 0}, 1};
  return s;
}

TermSpec trinomial() {
  // (z1+z2+z3)! / (z1! z2! z3!)
  auto s = TermSpec::from_generators({q("z1+z2+z3+1", "z1+1", 3), q("z1+z2+z3+1", "z2+1", 3),
                                      q("z1+z2+z3+1", "z3+1", 3)});
  s.seed = Seed{{0, 0, 0}, 1};
  return s;
}

void BM_gcd(benchmark::State& state) {
  const MultiPoly a = parse_poly("(z1-z2)^3*(z1+z3+1)^2*(z2*z3+4)", 3);
  const MultiPoly b = parse_poly("(z1-z2)^2*(z2*z3+4)*(z1^2+z3)", 3);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_gcd);

void BM_compose_direction(benchmark::State& state) {
  const TermSpec spec = binomial();
  const IntVec w{3, -2};
  for (auto _ : state) benchmark::DoNotOptimize(compose_direction(spec, w));
}
BENCHMARK(BM_compose_direction);

void BM_decompose(benchmark::State& state) {
  const TermSpec spec = state.range(0) == 0 ? binomial() : trinomial();
  for (auto _ : state) benchmark::DoNotOptimize(decompose(spec));
}
BENCHMARK(BM_decompose)->Arg(0)->Arg(1);

void BM_build_structure(benchmark::State& state) {
  const TermSpec spec = state.range(0) == 0 ? binomial() : mixed();
  for (auto _ : state) benchmark::DoNotOptimize(build_structure(spec));
}
BENCHMARK(BM_build_structure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_grid_compare(benchmark::State& state) {
  const TermSpec spec = binomial();
  const auto ps = build_structure(spec);
  const std::int64_t r = state.range(0);
  const Window w{{-r, -r}, {r, r}};
  for (auto _ : state) benchmark::DoNotOptimize(grid_compare(ps, spec, w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.point_count()));
}
BENCHMARK(BM_grid_compare)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  set_log_level(LogLevel::quiet);
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
