#include <benchmark/benchmark.h>

#include "bis/free_bias.hpp"
#include "bis/rook.hpp"
#include "bis/term.hpp"
#include "bis/type_structure.hpp"
#include "bis/variety.hpp"

using namespace bis;

namespace {

Bias gz(const Group& g) { return boolean_closure(group_with_zero(g)); }

void BM_SymmetricMonoid(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto m = symmetric_inverse_monoid(n);
    benchmark::DoNotOptimize(m.elements.size());
  }
}
BENCHMARK(BM_SymmetricMonoid)->Arg(3)->Arg(4);

void BM_BooleanClosure(benchmark::State& state) {
  auto m = symmetric_inverse_monoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto b = boolean_closure(m.sgp);
    benchmark::DoNotOptimize(b.one());
  }
}
BENCHMARK(BM_BooleanClosure)->Arg(3)->Arg(4);

void BM_RookBias(benchmark::State& state) {
  Bias base = gz(cyclic_group(2));
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rb = rook_bias(n, base);
    benchmark::DoNotOptimize(rb.bias.size());
  }
}
BENCHMARK(BM_RookBias)->Arg(2)->Arg(3);

void BM_CongruenceLattice(benchmark::State& state) {
  Bias b = rook_bias(2, gz(cyclic_group(2))).bias;
  for (auto _ : state) {
    auto lat = congruence_lattice(b);
    benchmark::DoNotOptimize(lat.all.size());
  }
}
BENCHMARK(BM_CongruenceLattice);

void BM_DecideEqual(benchmark::State& state) {
  std::vector<std::string> xy = {"x", "y"};
  auto lhs = parse_term("(x ~ y) ~ y", xy);
  auto rhs = parse_term("x ~ (y + y)", xy);
  for (auto _ : state)
    benchmark::DoNotOptimize(free_decide_equal_terms(lhs, rhs, xy));
}
BENCHMARK(BM_DecideEqual);

void BM_Falsify(benchmark::State& state) {
  std::vector<std::string> xy = {"x", "y"};
  auto lhs = parse_term("x * y", xy);
  auto rhs = parse_term("y * x", xy);
  for (auto _ : state) benchmark::DoNotOptimize(falsify(lhs, rhs, 2).has_value());
}
BENCHMARK(BM_Falsify);

void BM_Decompose(benchmark::State& state) {
  Bias b = product_bias(rook_bias(2, gz(cyclic_group(2))).bias, gz(cyclic_group(3)));
  for (auto _ : state) {
    auto dec = decompose(b);
    benchmark::DoNotOptimize(dec.factors.size());
  }
}
BENCHMARK(BM_Decompose);

void BM_GroupVarietyMember(benchmark::State& state) {
  Group s3 = symmetric_group(3);
  for (auto _ : state) {
    auto r = group_variety_member(s3, {s3});
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_GroupVarietyMember);

void BM_IdentityCheck(benchmark::State& state) {
  Bias b = rook_bias(static_cast<int>(state.range(0)), gz(cyclic_group(2))).bias;
  std::vector<std::string> x = {"x"};
  auto lhs = parse_term("d(x*x)", x);
  auto rhs = parse_term("r(x*x)", x);
  for (auto _ : state) {
    auto check = satisfies_identity(b, lhs, rhs);
    benchmark::DoNotOptimize(check.holds);
  }
}
BENCHMARK(BM_IdentityCheck)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
