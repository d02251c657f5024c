// Serial reference vs OpenMP kernels on MNIST-shaped batches.
//
//   bench_kernels --benchmark_filter=dense
//
// COHERENT_MESH_THREADS caps the omp flavour as it does in training.

#include <benchmark/benchmark.h>

#include <vector>

#include "cmesh/kernels.hpp"
#include "cmesh/mesh.hpp"
#include "cmesh/rng.hpp"
#include "cmesh/unitcell.hpp"

namespace {

using namespace cmesh;

MatrixXr random_real(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  Rng rng(seed);
  MatrixXr m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = rng.uniform(-1, 1);
  return m;
}

MatrixXc random_complex(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  return random_real(rows, cols, seed).cast<cplx>() + cplx(0, 1) * random_real(rows, cols, seed + 1).cast<cplx>();
}

template <bool Parallel>
void BM_DenseAffine(benchmark::State& state) {
  const auto batch = state.range(0);
  const MatrixXr w = random_real(8, 784, 1), x = random_real(784, batch, 2);
  const VectorXr b = random_real(8, 1, 3);
  MatrixXr y;
  for (auto _ : state) {
    if constexpr (Parallel) kernels::omp::dense_affine(w, b, x, y);
    else kernels::serial::dense_affine(w, b, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * batch);
}

template <bool Parallel>
void BM_ComplexAffine(benchmark::State& state) {
  const auto batch = state.range(0);
  const MatrixXc u = random_complex(8, 8, 4);
  const MatrixXr x = random_real(8, batch, 5);
  MatrixXc z;
  for (auto _ : state) {
    if constexpr (Parallel) kernels::omp::complex_affine(u, x, z);
    else kernels::serial::complex_affine(u, x, z);
    benchmark::DoNotOptimize(z.data());
  }
  state.SetItemsProcessed(state.iterations() * batch);
}

template <bool Parallel>
void BM_Magnitude(benchmark::State& state) {
  const auto batch = state.range(0);
  const MatrixXc z = random_complex(8, batch, 6);
  MatrixXr y;
  for (auto _ : state) {
    if constexpr (Parallel) kernels::omp::magnitude(z, y);
    else kernels::serial::magnitude(z, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * batch);
}

template <bool Parallel>
void BM_MeshApply(benchmark::State& state) {
  const auto batch = state.range(0);
  const MeshLayout layout = MeshLayout::build(8, false);
  std::vector<TransferMatrix> cells;
  Rng rng(7);
  for (std::size_t k = 0; k < layout.size(); ++k) cells.push_back(transfer({rng.uniform(0, kTwoPi), rng.uniform(0, kTwoPi)}));
  const MatrixXc x0 = random_complex(8, batch, 8);
  MatrixXc x;
  for (auto _ : state) {
    x = x0;
    if constexpr (Parallel) kernels::omp::mesh_apply(layout, cells, x);
    else kernels::serial::mesh_apply(layout, cells, x);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetItemsProcessed(state.iterations() * batch);
}

#define CMESH_BENCH_PAIR(fn)                                           \
  BENCHMARK(fn<false>)->Name(#fn "/serial")->RangeMultiplier(10)->Range(10, 100000); \
  BENCHMARK(fn<true>)->Name(#fn "/omp")->RangeMultiplier(10)->Range(10, 100000)

CMESH_BENCH_PAIR(BM_DenseAffine);
CMESH_BENCH_PAIR(BM_ComplexAffine);
CMESH_BENCH_PAIR(BM_Magnitude);
CMESH_BENCH_PAIR(BM_MeshApply);

}  // namespace

BENCHMARK_MAIN();
