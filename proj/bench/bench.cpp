#include <benchmark/benchmark.h>

#include "cantorfull/cli.hpp"
#include "cantorfull/constructions.hpp"
#include "cantorfull/jm.hpp"
#include "cantorfull/kernels.hpp"

using namespace cantorfull;

namespace {

Engine fibonacci()
{
  static Engine e = parse_subshift("alphabet: a b\nkind: substitution\nrule: a -> ab\nrule: b -> a\n");
  return e;
}

Engine golden()
{
  static Engine e = parse_subshift("alphabet: a b\nkind: sft\nforbidden: bb\n");
  return e;
}

// a product of 3-cycles with a wide table
Element busy()
{
  auto e = golden();
  auto s = sigma_U(CloSet::cylinder(e, Word{e->alphabet().parse("aabaa"), -2}));
  auto t = sigma_U(CloSet::cylinder(e, Word{e->alphabet().parse("aabaa"), 1}));
  return compose(compose(s, shift(e, 2)), compose(t, shift(e, -2)));
}

void compose_serial(benchmark::State &state)
{
  auto f = busy();
  int r = static_cast<int>(state.range(0));
  f.engine()->layer(static_cast<std::size_t>(2 * r + 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::compose_table_serial(f, f, r));
}

void compose_omp(benchmark::State &state)
{
  auto f = busy();
  int r = static_cast<int>(state.range(0));
  f.engine()->layer(static_cast<std::size_t>(2 * r + 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::compose_table_omp(f, f, r));
}

void certificate_serial(benchmark::State &state)
{
  auto f = busy();
  f.engine()->layer(static_cast<std::size_t>(2 * (f.radius() + f.dbound()) + 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::certificate_serial(f.engine(), f.radius(), f.dbound(), f.table()));
}

void certificate_omp(benchmark::State &state)
{
  auto f = busy();
  f.engine()->layer(static_cast<std::size_t>(2 * (f.radius() + f.dbound()) + 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::certificate_omp(f.engine(), f.radius(), f.dbound(), f.table()));
}

std::vector<Element> ball_generators()
{
  auto e = fibonacci();
  return {shift(e, 1), sigma_U(CloSet::cylinder(e, Word{e->alphabet().parse("aab"), -1}))};
}

void ball_serial(benchmark::State &state)
{
  auto gens = ball_generators();
  for (auto _ : state)
    benchmark::DoNotOptimize(ball_sizes_serial(gens, static_cast<int>(state.range(0))));
}

void ball_omp(benchmark::State &state)
{
  auto gens = ball_generators();
  for (auto _ : state)
    benchmark::DoNotOptimize(ball_sizes(gens, static_cast<int>(state.range(0))));
}

void correlation_tree_serial(benchmark::State &state)
{
  auto g = translation_view(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(correlation_serial(g, state.range(0)));
}

void correlation_tree_omp(benchmark::State &state)
{
  auto g = translation_view(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(correlation(g, state.range(0)));
}

}  // namespace

BENCHMARK(compose_serial)->Arg(12)->Arg(15);
BENCHMARK(compose_omp)->Arg(12)->Arg(15);
BENCHMARK(certificate_serial);
BENCHMARK(certificate_omp);
BENCHMARK(ball_serial)->Arg(5);
BENCHMARK(ball_omp)->Arg(5);
BENCHMARK(correlation_tree_serial)->Arg(10000)->Arg(1000000);
BENCHMARK(correlation_tree_omp)->Arg(10000)->Arg(1000000);

BENCHMARK_MAIN();
