// Serial and OpenMP lanes side by side on the three batch kernels.
// Run with --benchmark_min_time=0.1 for a quick look.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rta/bsgs.hpp"
#include "rta/field.hpp"
#include "rta/gate.hpp"
#include "rta/kernels.hpp"

using namespace rta;

namespace {

std::vector<Perm> random_perms(Point degree, int count) {
  std::mt19937_64 rng(0x51f7ed15ULL);
  std::vector<Perm> out;
  std::vector<Point> img(degree);
  for (int i = 0; i < count; ++i) {
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    out.emplace_back(Perm(img));
  }
  return out;
}

void bm_parity(benchmark::State& state, Exec mode) {
  auto perms = random_perms(static_cast<Point>(state.range(0)), 2000);
  for (auto _ : state) {
    auto r = parity_batch(perms, mode);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * 2000);
}

void bm_sift(benchmark::State& state, Exec mode) {
  const Point degree = 64;
  // the even slice of the 64 points, then a batch of mixed candidates
  std::vector<Perm> gens{Perm::from_cycles(degree, {{0, 1, 2}})};
  std::vector<Point> rot(degree);
  for (Point i = 1; i < degree; ++i) rot[i] = i % (degree - 1) + 1;
  rot[0] = 0;
  gens.emplace_back(Perm(rot));
  Bsgs chain = Bsgs::build(degree, gens);
  auto batch = random_perms(degree, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = sift_batch_is_member(chain, batch, mode);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_additivity(benchmark::State& state, Exec mode) {
  const int k = 3, n = static_cast<int>(state.range(0));
  const FieldTable& F = FieldTable::of(k);
  Point m = checked_degree(k, n);
  // an additive map forces the full quadratic scan
  std::vector<Point> lin(m);
  for (Point x = 0; x < m; ++x) {
    auto digits = decode(x, k, n);
    for (int& d : digits) d = F.mul(2, d);
    lin[x] = encode(digits, k);
  }
  for (auto _ : state) {
    auto r = additivity_violation(lin, F.add_table(), k, n, mode);
    benchmark::DoNotOptimize(r);
  }
}

void parity_serial(benchmark::State& s) { bm_parity(s, Exec::serial); }
void parity_parallel(benchmark::State& s) { bm_parity(s, Exec::parallel); }
void sift_serial(benchmark::State& s) { bm_sift(s, Exec::serial); }
void sift_parallel(benchmark::State& s) { bm_sift(s, Exec::parallel); }
void additivity_serial(benchmark::State& s) { bm_additivity(s, Exec::serial); }
void additivity_parallel(benchmark::State& s) { bm_additivity(s, Exec::parallel); }

}  // namespace

BENCHMARK(parity_serial)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(parity_parallel)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(sift_serial)->Arg(200)->Arg(1000);
BENCHMARK(sift_parallel)->Arg(200)->Arg(1000);
BENCHMARK(additivity_serial)->Arg(4)->Arg(6);
BENCHMARK(additivity_parallel)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
