#include <benchmark/benchmark.h>

#include "lcoal/lcoal.hpp"

using namespace lcoal;

namespace
{

// Companion of a random graph with exactly `vertices` vertices (companion dim = 2 * vertices).
CompanionCoalgebra companion_of_size(unsigned vertices)
{
  Rng rng(default_seed);
  GraphShape shape;
  shape.min_vertices = shape.max_vertices = vertices;
  return build_companion(markov_from_graph(random_graph(rng, shape)));
}

void BM_BuildCompanion(benchmark::State &state)
{
  Rng rng(default_seed);
  GraphShape shape;
  shape.min_vertices = shape.max_vertices = static_cast<unsigned>(state.range(0));
  const WeightedDigraph g = random_graph(rng, shape);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_companion(markov_from_graph(g)));
}
BENCHMARK(BM_BuildCompanion)->Arg(4)->Arg(8);

void BM_InvertPsi(benchmark::State &state)
{
  const CompanionCoalgebra c = companion_of_size(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(invert(c.psi_left()));
}
BENCHMARK(BM_InvertPsi)->Arg(4)->Arg(8);

void BM_VerifyYbe(benchmark::State &state)
{
  const CompanionCoalgebra c = companion_of_size(static_cast<unsigned>(state.range(0)));
  const TwoTensorEndo r = companion_r_matrix(c, Side::Left, 1);
  const auto arithmetic = state.range(1) ? YbeArithmetic::Rational : YbeArithmetic::Auto;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_ybe(r, {}, arithmetic));
  state.SetItemsProcessed(state.iterations() * r.dim() * r.dim() * r.dim());
}
BENCHMARK(BM_VerifyYbe)
    ->ArgNames({"vertices", "rational"})
    ->Args({4, 0})
    ->Args({4, 1})
    ->Args({8, 0})
    ->Args({8, 1})
    ->Unit(benchmark::kMillisecond);

// n = 5 strands over a 16-dimensional W: 16^5 basis tensors, evaluated factor-locally.
void BM_BraidWordStress(benchmark::State &state)
{
  const CompanionCoalgebra c = companion_of_size(8);
  const auto rep = BraidRepresentation::unchecked(companion_r_matrix(c, Side::Right, 1));
  const BraidWord w = parse_braid_word("s1 s2 s3 s4 s3^-1 s2 s1^-1", 5);
  Rng rng(default_seed);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(rep.r().dim() - 1));
  std::vector<TensorN> states;
  for (int i = 0; i < 64; ++i)
    states.push_back(TensorN::unit(Word{pick(rng), pick(rng), pick(rng), pick(rng), pick(rng)}));
  for (auto _ : state)
    for (const auto &s : states)
      benchmark::DoNotOptimize(evaluate_word(rep, w, s));
  state.SetItemsProcessed(state.iterations() * states.size());
}
BENCHMARK(BM_BraidWordStress)->Unit(benchmark::kMillisecond);

void BM_BraidRelationsSampled(benchmark::State &state)
{
  const CompanionCoalgebra c = companion_of_size(8);
  const auto rep = BraidRepresentation::unchecked(companion_r_matrix(c, Side::Left, 1));
  BraidCheckOptions options;
  options.samples = 200;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_braid_relations(rep, 5, options));
}
BENCHMARK(BM_BraidRelationsSampled)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
