#include <benchmark/benchmark.h>

#include "homcode/gf2.hpp"
#include "homcode/hsc.hpp"
#include "homcode/lattices.hpp"
#include "homcode/stabilizer.hpp"
#include "homcode/transforms.hpp"

namespace {

void BM_Gf2Rank(benchmark::State& state) {
  std::size_t n = std::size_t(state.range(0));
  homcode::Gf2Matrix matrix(n, 2 * n);
  // Deterministic dense-ish pattern with full row rank.
  for (std::size_t r = 0; r < n; ++r) {
    matrix.set(r, r, true);
    for (std::size_t c = 0; c < 2 * n; ++c)
      if (((r * 2654435761u) >> (c % 13)) & 1u) matrix.set(r, c, true);
  }
  for (auto _ : state) {
    homcode::Gf2Matrix copy = matrix;
    benchmark::DoNotOptimize(copy.rank());
  }
}
BENCHMARK(BM_Gf2Rank)->Arg(64)->Arg(256);

void BM_Medial(benchmark::State& state) {
  auto map = homcode::generate("square_torus:L=" + std::to_string(state.range(0)));
  for (auto _ : state) {
    auto result = homcode::medial(map);
    benchmark::DoNotOptimize(result.map.dart_count());
  }
}
BENCHMARK(BM_Medial)->Arg(8)->Arg(16);

void BM_ThreeColoring(benchmark::State& state) {
  auto map = homcode::generate("hex_torus:a=" + std::to_string(state.range(0)) +
                               ",b=" + std::to_string(state.range(0)));
  for (auto _ : state) {
    auto coloring = homcode::face_coloring(map, 3);
    benchmark::DoNotOptimize(coloring.color_of_face.size());
  }
}
BENCHMARK(BM_ThreeColoring)->Arg(6)->Arg(9);

void BM_MinDistance(benchmark::State& state) {
  auto map = homcode::generate("square_torus:L=4");
  homcode::HscCode code = homcode::build_ktc(map);
  auto gens = homcode::code_generators(code);
  for (auto _ : state) {
    auto result = homcode::min_distance(gens, std::size_t(state.range(0)));
    benchmark::DoNotOptimize(result.distance);
  }
}
BENCHMARK(BM_MinDistance)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
