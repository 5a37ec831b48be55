// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "hyperpde/pde.hpp"
#include "hyperpde/search.hpp"

using namespace hyperpde;

namespace {

Pde laplace3() {
  std::vector<std::pair<MultiIndex, Scalar>> t{
      {{2, 0, 0}, Scalar(1)}, {{0, 2, 0}, Scalar(1)}, {{0, 0, 2}, Scalar(1)}};
  return Pde::make(3, 2, t);
}

Pde biharmonic() {
  std::vector<std::pair<MultiIndex, Scalar>> t{{{4, 0}, Scalar(1)}, {{2, 2}, Scalar(2)}, {{0, 4}, Scalar(1)}};
  return Pde::make(2, 4, t);
}

Algebra q(const char* p) { return quotient_algebra(UPoly::parse(p), Field::Q); }

// dim 27: three cubic quotients tensored together.
const StructureTensor& big_table() {
  static const StructureTensor t = tensor_product(tensor_product(q("t^3-t-1"), q("t^3+t^2-1")), q("t^3-2")).tensor();
  return t;
}

void BM_AssociativitySerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(find_associativity_violation_serial(big_table()));
}
void BM_AssociativityParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(find_associativity_violation(big_table()));
}

AlgebraPolyFunction biharmonic_power(unsigned j) {
  Algebra a = q("t^4+2*t^2+1");
  return build_monomial(check_basis(a, {Element::unit(a), Element::basis(a, 1)}), j);
}

void BM_CertifySerial(benchmark::State& s) {
  auto f = biharmonic_power(static_cast<unsigned>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(certify_serial(biharmonic(), f));
}
void BM_CertifyParallel(benchmark::State& s) {
  auto f = biharmonic_power(static_cast<unsigned>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(certify(biharmonic(), f));
}

SearchSpace tensor_space() {
  SearchSpace s;
  s.family = Family::Tensor;
  s.max_candidates = 50'000;
  return s;
}

void BM_SearchSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_serial(laplace3(), tensor_space()));
}
void BM_SearchParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate(laplace3(), tensor_space()));
}

}  // namespace

BENCHMARK(BM_AssociativitySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssociativityParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CertifySerial)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyParallel)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
