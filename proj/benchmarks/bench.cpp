#include <benchmark/benchmark.h>

#include "fusioncat/gt.hpp"
#include "fusioncat/h8.hpp"
#include "fusioncat/modcat.hpp"
#include "fusioncat/oracle.hpp"

using namespace fc;

static void BM_H2Classes(benchmark::State& st) {
  Subgroup g = Subgroup::whole(builtin::d8());
  for (auto _ : st) benchmark::DoNotOptimize(h2_classes(g));
}
BENCHMARK(BM_H2Classes);

static void BM_ClassifyCyclic(benchmark::State& st) {
  auto zn = builtin::cyclic(static_cast<int>(st.range(0)));
  Cochain w = builtin_cochain::omega_cyclic(zn, 1);
  for (auto _ : st) benchmark::DoNotOptimize(classify(w));
}
BENCHMARK(BM_ClassifyCyclic)->Arg(4)->Arg(8)->Arg(12);

static void BM_RankTableD8Omega(benchmark::State& st) {
  Cochain w = builtin_cochain::omega_d8(builtin::d8());
  for (auto _ : st) benchmark::DoNotOptimize(rank_table(w, true));
}
BENCHMARK(BM_RankTableD8Omega)->Unit(benchmark::kMillisecond);

static void BM_SimpleCatalogue(benchmark::State& st) {
  auto d8 = builtin::d8();
  Cochain w = builtin_cochain::omega_d8(d8);
  auto amb = make_ambient(w);
  auto n = parse_subgroup(d8, "x,y");
  auto a = twisted_group_algebra(amb, *solve_psi(w, n));
  for (auto _ : st) benchmark::DoNotOptimize(simple_catalogue(a, a));
}
BENCHMARK(BM_SimpleCatalogue)->Unit(benchmark::kMillisecond);

static void BM_InvertibleGroupS3(benchmark::State& st) {
  auto s3 = builtin::s3();
  auto amb = make_ambient(builtin_cochain::trivial(Subgroup::whole(s3), 3));
  auto a = twisted_group_algebra(amb, builtin_cochain::trivial(parse_subgroup(s3, "r"), 2));
  for (auto _ : st) benchmark::DoNotOptimize(invertible_group(a));
}
BENCHMARK(BM_InvertibleGroupS3)->Unit(benchmark::kMillisecond);

static void BM_HopfAxioms(benchmark::State& st) {
  auto h = h8::build_h8();
  for (auto _ : st) benchmark::DoNotOptimize(h8::check_hopf_axioms(h));
}
BENCHMARK(BM_HopfAxioms)->Unit(benchmark::kMillisecond);

static void BM_MatchClassification(benchmark::State& st) {
  auto h = h8::build_h8();
  auto c = h8_category();
  for (auto _ : st) benchmark::DoNotOptimize(h8::match_classification(c, h));
}
BENCHMARK(BM_MatchClassification)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
