#include "kmw/kmw.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

kmw::CartanPtr type(const char* label) { return kmw::cartan_data(kmw::AffineType::parse(label)); }

const char* const kTypes[] = {"A1~", "A2~", "C2~", "G2~", "A3~", "B3~", "D4~"};

void BM_Freudenthal(benchmark::State& state) {
  const auto data = type(kTypes[state.range(0)]);
  const kmw::Weight lam = kmw::rho(data) * kmw::Rational(2);
  const int depth = static_cast<int>(state.range(1));
  const auto strategy = state.range(2) ? kmw::FreudenthalStrategy::AllWeights
                                       : kmw::FreudenthalStrategy::DominantOrbits;
  for (auto _ : state) benchmark::DoNotOptimize(kmw::freudenthal(lam, depth, strategy).size());
  state.SetLabel(data->label());
}
BENCHMARK(BM_Freudenthal)
    ->ArgsProduct({{0, 1, 2, 3}, {1, 2}, {0, 1}})
    ->Args({4, 1, 0})
    ->Args({5, 1, 0})
    ->Unit(benchmark::kMillisecond);

void BM_TensorRhoRho(benchmark::State& state) {
  const auto data = type(kTypes[state.range(0)]);
  const kmw::Weight r = kmw::rho(data);
  const int depth = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kmw::tensor_decompose(r, r, depth).entries().size());
  state.SetLabel(data->label());
}
BENCHMARK(BM_TensorRhoRho)->Args({0, 3})->Args({1, 2})->Args({2, 1})->Args({3, 1})->Args({6, 1})
    ->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& state) {
  const auto data = type(kTypes[state.range(0)]);
  const kmw::Weight lam = kmw::rho(data) * kmw::Rational(2);
  const auto poly = kmw::build_polyhedron(lam);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> coeff(0, 5);
  std::vector<kmw::Weight> samples;
  for (int t = 0; t < 64; ++t) {
    kmw::RationalVector m(data->size());
    long total = 0;
    for (int i = 0; i < data->size(); ++i) {
      const int r = coeff(rng) + 1;
      m[i] = r;
      total += static_cast<long>(r) * data->comarks()[i];
    }
    for (auto& x : m) {
      x = x * kmw::level(lam) / kmw::Rational(total);
      x.canonicalize();
    }
    samples.emplace_back(data, m, kmw::Rational(-coeff(rng), 2));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& mu = samples[i++ % samples.size()];
    benchmark::DoNotOptimize(state.range(1) ? kmw::contains_decomposition_test(poly, mu)
                                            : kmw::contains_root_test(lam, mu));
  }
  state.SetLabel(std::string(data->label()) + (state.range(1) ? " simplex" : " root"));
}
BENCHMARK(BM_Membership)->ArgsProduct({{0, 1, 4, 5}, {0, 1}});

void BM_Verify(benchmark::State& state) {
  const auto t = kmw::AffineType::parse(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(kmw::verify_conjecture(t, kmw::default_depth(t)).passed());
  state.SetLabel(t.label());
}
BENCHMARK(BM_Verify)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
