#include <benchmark/benchmark.h>

#include "chev/arrangement.hpp"
#include "chev/cycles.hpp"
#include "chev/relations.hpp"
#include "chev/symbols.hpp"

using namespace chev;

namespace {

GroupModel model_of(int64_t family, int64_t n) {
  static const Family families[] = {Family::Sp, Family::SLR, Family::SLC};
  return GroupModel(families[family], static_cast<int>(n));
}

void BM_GeneratorProduct(benchmark::State& state) {
  GroupModel m = model_of(state.range(0), state.range(1));
  RootSystem rs(m);
  const auto& roots = rs.roots();
  std::size_t k = 0;
  for (auto _ : state) {
    const Root& r = roots[k % roots.size()];
    const Root& p = roots[(k * 7 + 3) % roots.size()];
    Param a = param_arity(m, r) == 2 ? Param(Scalar(2), Scalar(Rational(-1, 3))) : Param(Scalar(2));
    Param b = param_arity(m, p) == 2 ? Param(Scalar(Rational(5, 7)), Scalar(3)) : Param(Scalar(3));
    benchmark::DoNotOptimize(mat_mul(gen_x(m, r, a), gen_x(m, p, b)));
    ++k;
  }
}
BENCHMARK(BM_GeneratorProduct)->Args({0, 2})->Args({0, 4})->Args({1, 4})->Args({2, 4});

void BM_PresentationGrid(benchmark::State& state) {
  GroupModel m = model_of(state.range(0), state.range(1));
  auto rels = presentation_relations(m);
  Grid g = Grid::default_for(m);
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(rels, Regime::Grid, g));
  state.counters["instances"] = static_cast<double>(rels.size());
}
BENCHMARK(BM_PresentationGrid)->Args({0, 2})->Args({1, 2})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_PresentationSymbolic(benchmark::State& state) {
  GroupModel m = model_of(state.range(0), state.range(1));
  auto rels = presentation_relations(m);
  Grid g = Grid::default_for(m);
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(rels, Regime::Symbolic, g));
}
BENCHMARK(BM_PresentationSymbolic)->Args({0, 3})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_DecomposeCommutator(benchmark::State& state) {
  GroupModel m(Family::Sp, static_cast<int>(state.range(0)));
  std::size_t n = m.rank();
  Root r = Root::diff(n, 0, 1), p = Root::twice(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_commutator(m, r, p, Param(Scalar(Rational(3, 2))), Param(Scalar(-2))));
  }
}
BENCHMARK(BM_DecomposeCommutator)->Arg(2)->Arg(4);

void BM_ReduceHMultiplicativity(benchmark::State& state) {
  GroupModel m = model_of(state.range(0), 3);
  Word w = h_multiplicativity_word(m, Root::diff(3, 0, 1), m.is_sl() ? Param(Scalar(2), Scalar(0)) : Param(Scalar(2)),
                                   m.is_sl() ? Param(Scalar(-3), Scalar(0)) : Param(Scalar(-3)));
  Plane region = Plane::full(m.rank());
  for (auto _ : state) benchmark::DoNotOptimize(reduce_cycle(w, region));
}
BENCHMARK(BM_ReduceHMultiplicativity)->Arg(0)->Arg(1);

void BM_ReduceCommutatorWords(benchmark::State& state) {
  GroupModel m(Family::Sp, 3);
  auto words = relation_words(m);
  Plane region = Plane::full(m.rank());
  for (auto _ : state) {
    for (const auto& nw : words) benchmark::DoNotOptimize(reduce_cycle(nw.word, region));
  }
  state.counters["words"] = static_cast<double>(words.size());
}
BENCHMARK(BM_ReduceCommutatorWords)->Unit(benchmark::kMillisecond);

void BM_Genericity(benchmark::State& state) {
  auto hps = lyapunov_hyperplanes(RootSystem(GroupModel(Family::SLStd, 2)).roots(), 4);
  CartanVector e1{1, 1, 1, 1}, e2{0, 1, 2, 3};
  Plane plane = Plane::from_equations(4, {e1, e2});
  for (auto _ : state) benchmark::DoNotOptimize(is_generic(plane, hps));
}
BENCHMARK(BM_Genericity);

void BM_Chambers(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto hps = lyapunov_hyperplanes(RootSystem(GroupModel(Family::Sp, static_cast<int>(n))).roots(), n);
  Plane full = Plane::full(n);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_chambers(hps, full));
}
BENCHMARK(BM_Chambers)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SymbolConsequence(benchmark::State& state) {
  Universe u = parse_universe("1,-1,2,-2,3,-3,1/2,-1/2,1/3,-1/3,6,-6,2/3,-2/3");
  SymbolExpr e = parse_symbol_expr("{2,2}*{2,-1}^-1");
  for (auto _ : state) {
    AxiomLattice lat = build_axiom_lattice(u);
    benchmark::DoNotOptimize(is_consequence(e, lat));
  }
}
BENCHMARK(BM_SymbolConsequence)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
