// Parallel kernels against their serial references, plus one full
// right-hand-side evaluation. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ldm/kernels.hpp"
#include "ldm/solver.hpp"

namespace k = ldm::kernels;
using ldm::kernels::cplx;

namespace {

std::vector<cplx> complex_data(int n, int ncomp) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> v(std::size_t(n) * n * n * ncomp);
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

std::vector<double> real_data(std::size_t count) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(count);
  for (auto& x : v) x = u(rng);
  return v;
}

std::vector<double> table(int n) {
  std::vector<double> t(3 * (n / 2) * (n / 2) + 1);
  for (std::size_t q = 0; q < t.size(); ++q) t[q] = 1.0 / (1.0 + 0.25 * double(q));
  return t;
}

template <auto Fn>
void scale_radial(benchmark::State& state) {
  const int n = int(state.range(0));
  auto data = complex_data(n, 3);
  const auto t = table(n);
  for (auto _ : state) {
    Fn(data, n, 3, t);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(data.size()));
}

template <auto Fn>
void van_cittert_step(benchmark::State& state) {
  const int n = int(state.range(0));
  auto w = complex_data(n, 3);
  const auto fbar = w;
  const auto t = table(n);
  for (auto _ : state) {
    Fn(w, fbar, n, t);
    benchmark::DoNotOptimize(w.data());
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(w.size()));
}

template <auto Fn>
void leray_project(benchmark::State& state) {
  const int n = int(state.range(0));
  auto data = complex_data(n, 3);
  for (auto _ : state) {
    Fn(data, n);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(data.size()));
}

template <auto Fn>
void weighted_energy(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto data = complex_data(n, 3);
  const auto t = table(n);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(data, n, 3, t));
  state.SetItemsProcessed(state.iterations() * std::int64_t(data.size()));
}

template <auto Fn>
void advect(benchmark::State& state) {
  const int n = int(state.range(0));
  const std::size_t pts = std::size_t(n) * n * n;
  const auto u = real_data(3 * pts), grad = real_data(9 * pts);
  std::vector<double> out(3 * pts);
  for (auto _ : state) {
    Fn(u, grad, out, pts);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(pts));
}

template <auto Fn>
void tensor_l1(benchmark::State& state) {
  const int n = int(state.range(0));
  const std::size_t pts = std::size_t(n) * n * n;
  const auto a = real_data(3 * pts), c = real_data(3 * pts), b = real_data(3 * pts);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, c, b, pts));
  state.SetItemsProcessed(state.iterations() * std::int64_t(pts));
}

void rhs_evaluation(benchmark::State& state) {
  ldm::SolverConfig c;
  c.grid = ldm::Grid::make(int(state.range(0)));
  c.nu = 0.1;
  c.dt = 0.01;
  c.t_end = 0.01;
  c.ic.kind = ldm::FieldSpec::Kind::random_solenoidal;
  c.model = ldm::ModelKind::leray_deconv(2);
  c.filter = ldm::FilterSpec::make(0.3, 2);
  ldm::Integrator integ(c);
  const ldm::SpectralField w = ldm::initial_state(c);
  for (auto _ : state) benchmark::DoNotOptimize(integ.rhs(w));
}

}  // namespace

#define LDM_PAIR(name)                                                  \
  BENCHMARK_TEMPLATE(name, k::name)->Name(#name "/parallel")->Arg(32)->Arg(64); \
  BENCHMARK_TEMPLATE(name, k::serial::name)->Name(#name "/serial")->Arg(32)->Arg(64)

LDM_PAIR(scale_radial);
LDM_PAIR(van_cittert_step);
LDM_PAIR(leray_project);
LDM_PAIR(weighted_energy);
LDM_PAIR(advect);
LDM_PAIR(tensor_l1);
BENCHMARK(rhs_evaluation)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
