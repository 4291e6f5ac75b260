#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "protolex/dt.hpp"
#include "protolex/pcz.hpp"
#include "protolex/wsi.hpp"

using namespace protolex;

namespace {

// Synthetic count table: `words` words, `features_per_word` features drawn
// from a shared pool so profiles overlap.
FeatureCounts synthetic_counts(int words, int pool, int features_per_word,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FeatureCounts counts;
  for (int w = 0; w < words; ++w) {
    std::string word = "w" + std::to_string(w);
    for (int f = 0; f < features_per_word; ++f) {
      std::string feature = "f" + std::to_string(rng() % pool);
      counts.add(word, feature, 1 + rng() % 9);
    }
  }
  return counts;
}

void BM_build_profiles(benchmark::State& state) {
  FeatureCounts counts = synthetic_counts(static_cast<int>(state.range(0)), 2000, 50, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_profiles(counts, 1000, 1000));
  }
}
BENCHMARK(BM_build_profiles)->Arg(200)->Arg(1000);

void BM_build_dt(benchmark::State& state) {
  FeatureCounts counts = synthetic_counts(static_cast<int>(state.range(0)), 2000, 50, 7);
  ProfileSet profiles = build_profiles(counts, 1000, 1000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_dt(profiles, 200));
  }
}
BENCHMARK(BM_build_dt)->Arg(200)->Arg(1000);

void BM_chinese_whispers(benchmark::State& state) {
  // Random ego-network with two planted communities.
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(11);
  EgoNetwork g;
  g.target = "t";
  for (int i = 0; i < n; ++i) g.nodes.push_back("n" + std::to_string(1000 + i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool same = (i < n / 2) == (j < n / 2);
      if (rng() % 100 < static_cast<std::uint64_t>(same ? 30 : 2)) {
        g.edges[{i, j}] = 1.0;
      }
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(chinese_whispers(g, 20, 1));
  }
}
BENCHMARK(BM_chinese_whispers)->Arg(50)->Arg(200);

void BM_disambiguate(benchmark::State& state) {
  // Inventory of two-sense words with overlapping clusters.
  SenseInventory inv;
  int words = static_cast<int>(state.range(0));
  for (int w = 0; w < words; ++w) {
    std::string word = "w" + std::to_string(w);
    for (int s = 0; s < 2; ++s) {
      SenseEntry entry;
      entry.word = word;
      entry.sense_id = s;
      for (int k = 0; k < 20; ++k) {
        entry.cluster.emplace_back("w" + std::to_string((w + s * 31 + k * 7) % words), 1.0);
      }
      inv.entries[word].push_back(entry);
    }
  }
  std::vector<std::pair<std::string, double>> cluster;
  for (int k = 0; k < 20; ++k) cluster.emplace_back("w" + std::to_string(k * 3 % words), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(disambiguate(cluster, "w0", inv));
  }
}
BENCHMARK(BM_disambiguate)->Arg(100)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
