#include <filesystem>
#include <random>

#include <benchmark/benchmark.h>

#include "guideme/catalog.hpp"
#include "guideme/classifier.hpp"
#include "guideme/descriptor.hpp"
#include "guideme/geodesy.hpp"
#include "guideme/image.hpp"
#include "guideme/reference_index.hpp"

namespace {

const std::filesystem::path kSource = GUIDEME_SOURCE_DIR;

void BM_Haversine(benchmark::State& state) {
  const guideme::GeoPoint a(21.4225, 39.8262);
  const guideme::GeoPoint b(24.4672, 39.6111);
  for (auto _ : state) benchmark::DoNotOptimize(guideme::haversine_distance(a, b));
}
BENCHMARK(BM_Haversine);

// Scan cost as the catalog grows; places are scattered around one city.
void BM_NearestPlace(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> offset(-0.05, 0.05);
  std::vector<guideme::Place> places;
  for (int i = 0; i < state.range(0); ++i) {
    places.push_back({"p" + std::to_string(i), "Place " + std::to_string(i),
                      guideme::GeoPoint(21.42 + offset(rng), 39.82 + offset(rng)), 21.0});
  }
  const guideme::Catalog catalog("bench", std::move(places), {});
  const guideme::GeoPoint query(21.42, 39.82);
  for (auto _ : state) benchmark::DoNotOptimize(guideme::nearest_place(catalog, query));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NearestPlace)->RangeMultiplier(10)->Range(10, 10000)->Complexity(benchmark::oN);

void BM_ExtractDescriptor(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  guideme::RgbImage img(size, size);
  std::mt19937 rng(2);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng());
  for (auto _ : state) benchmark::DoNotOptimize(guideme::extract_descriptor(img));
  state.SetItemsProcessed(state.iterations() * size * size);
}
BENCHMARK(BM_ExtractDescriptor)->Arg(64)->Arg(256)->Arg(1024);

void BM_ClassifyShippedIndex(benchmark::State& state) {
  const auto index = guideme::load_index(kSource / "data" / "index");
  const auto bytes = guideme::read_file_bytes(kSource / "data" / "samples" / "kaaba.png");
  const auto descriptor = guideme::extract_descriptor(guideme::decode_image(bytes));
  for (auto _ : state) benchmark::DoNotOptimize(guideme::classify(descriptor, index));
}
BENCHMARK(BM_ClassifyShippedIndex);

void BM_ClassifyPngBytes(benchmark::State& state) {
  const auto index = guideme::load_index(kSource / "data" / "index");
  const auto bytes = guideme::read_file_bytes(kSource / "data" / "samples" / "kaaba.png");
  for (auto _ : state) benchmark::DoNotOptimize(guideme::classify(bytes, index));
}
BENCHMARK(BM_ClassifyPngBytes);

}  // namespace

BENCHMARK_MAIN();
