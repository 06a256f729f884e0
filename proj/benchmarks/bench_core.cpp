#include <benchmark/benchmark.h>

#include "blackwell/detmdp.hpp"
#include "blackwell/instances.hpp"
#include "blackwell/laurent.hpp"
#include "blackwell/oracle.hpp"
#include "blackwell/policy_iteration.hpp"
#include "blackwell/random_facet.hpp"
#include "blackwell/symbolic_eval.hpp"

using namespace blackwell;

static void BM_MuCompare(benchmark::State& state) {
  const RationalFunction r1(pow(Polynomial::one_minus_x(), 2) * Polynomial{-10, 5}, Polynomial{-2, 1});
  const RationalFunction r2(Polynomial::one_minus_x() * Polynomial{-5, 1}, Polynomial{-4, 1});
  for (auto _ : state) benchmark::DoNotOptimize(mu_compare(r1, r2));
}
BENCHMARK(BM_MuCompare);

static void BM_SymbolicEval(benchmark::State& state) {
  const Mdp m = random_mdp(static_cast<std::size_t>(state.range(0)), 3, 1, 3);
  const Policy pi = first_action_policy(m);
  for (auto _ : state) benchmark::DoNotOptimize(policy_evaluate_symbolic(m, pi));
}
BENCHMARK(BM_SymbolicEval)->Arg(4)->Arg(8)->Arg(16);

static void BM_Howard(benchmark::State& state) {
  const Mdp m = random_mdp(static_cast<std::size_t>(state.range(0)), 3, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(generic_pi(m, first_action_policy(m), SwitchRule::howard()));
}
BENCHMARK(BM_Howard)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_RandomFacet(benchmark::State& state) {
  const Mdp m = random_mdp(static_cast<std::size_t>(state.range(0)), 3, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(random_facet_blackwell(m, first_action_policy(m)));
}
BENCHMARK(BM_RandomFacet)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_DetMdp(benchmark::State& state) {
  const Mdp m = random_mdp(static_cast<std::size_t>(state.range(0)), 3, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(detmdp2_blackwell(m));
}
BENCHMARK(BM_DetMdp)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Psi(benchmark::State& state) {
  const Mdp m = random_mdp(static_cast<std::size_t>(state.range(0)), 3, 4, 3);
  const Policy pi = first_action_policy(m);
  for (auto _ : state) benchmark::DoNotOptimize(psi_matrix(m, pi, 1));
}
BENCHMARK(BM_Psi)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_LowerBoundThreshold(benchmark::State& state) {
  const Mdp m = lower_bound(static_cast<std::size_t>(state.range(0)), Rational(1, 3));
  const Policy pi = generic_pi(m, first_action_policy(m), SwitchRule::howard()).policy;
  for (auto _ : state) benchmark::DoNotOptimize(deviation_threshold(m, pi));
}
BENCHMARK(BM_LowerBoundThreshold)->Arg(6)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_GammaBwFig1b(benchmark::State& state) {
  const Mdp m = fig1b();
  Precision prec;
  prec.width = Rational(1, 10000);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_bw_exact(m, prec));
}
BENCHMARK(BM_GammaBwFig1b)->Unit(benchmark::kMillisecond)->Iterations(3);
BENCHMARK_MAIN();
