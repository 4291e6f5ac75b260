#include "protolex/dt.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "protolex/error.hpp"
#include "protolex/parallel.hpp"

namespace protolex {

bool WordProfile::has(const std::string& feature) const {
  for (const auto& [f, w] : features) {
    if (f == feature) return true;
  }
  return false;
}

double lmi(std::uint64_t count_wf, std::uint64_t count_w, std::uint64_t count_f,
           std::uint64_t total) {
  if (count_wf == 0) return 0.0;
  if (count_w == 0 || count_f == 0 || total == 0) {
    throw InvariantError("lmi: nonzero joint count with zero marginal");
  }
  double ratio = (static_cast<double>(count_wf) * static_cast<double>(total)) /
                 (static_cast<double>(count_w) * static_cast<double>(count_f));
  return static_cast<double>(count_wf) * std::log2(ratio);
}

ProfileSet build_profiles(const FeatureCounts& counts, std::size_t p,
                          std::size_t max_words_per_feature) {
  ProfileSet profiles;
  for (const auto& [term, row] : counts.rows()) {
    WordProfile profile;
    profile.term = term;
    std::uint64_t cw = counts.term_marginal(term);
    for (const auto& [feature, cwf] : row) {
      double weight = lmi(cwf, cw, counts.feature_marginal(feature), counts.total());
      if (weight > 0.0) profile.features.emplace_back(feature, weight);
    }
    std::sort(profile.features.begin(), profile.features.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
              });
    if (profile.features.size() > p) profile.features.resize(p);
    profiles.emplace(term, std::move(profile));
  }

  // Feature-side pruning happens after the word-side cut: a feature kept by
  // too many words survives only in the highest-scoring profiles.
  std::map<std::string, std::vector<std::pair<double, std::string>>> holders;
  for (const auto& [term, profile] : profiles) {
    for (const auto& [feature, weight] : profile.features) {
      holders[feature].emplace_back(weight, term);
    }
  }
  std::map<std::string, std::unordered_set<std::string>> drop;  // term -> features to drop
  for (auto& [feature, words] : holders) {
    if (words.size() <= max_words_per_feature) continue;
    std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    for (std::size_t i = max_words_per_feature; i < words.size(); ++i) {
      drop[words[i].second].insert(feature);
    }
  }
  for (auto& [term, features] : drop) {
    auto& vec = profiles[term].features;
    std::erase_if(vec, [&](const auto& fw) { return features.count(fw.first) > 0; });
  }
  return profiles;
}

int similarity(const WordProfile& a, const WordProfile& b) {
  const WordProfile& small = a.features.size() <= b.features.size() ? a : b;
  const WordProfile& large = a.features.size() <= b.features.size() ? b : a;
  std::unordered_set<std::string> index;
  index.reserve(small.features.size());
  for (const auto& [f, w] : small.features) index.insert(f);
  int shared = 0;
  for (const auto& [f, w] : large.features) {
    if (index.count(f)) ++shared;
  }
  return shared;
}

const std::vector<std::pair<std::string, int>>* TermGraph::neighbors(
    const std::string& term) const {
  auto it = edges.find(term);
  return it == edges.end() ? nullptr : &it->second;
}

TermGraph build_dt(const ProfileSet& profiles, std::size_t K, int threads) {
  // Inverted index over features; candidate neighbors are exactly the words
  // sharing at least one feature, so similarity never needs the full matrix.
  std::unordered_map<std::string, std::vector<const std::string*>> by_feature;
  for (const auto& [term, profile] : profiles) {
    for (const auto& [feature, weight] : profile.features) {
      by_feature[feature].push_back(&term);
    }
  }

  std::vector<const WordProfile*> order;
  order.reserve(profiles.size());
  for (const auto& [term, profile] : profiles) order.push_back(&profile);

  const auto& index = by_feature;
  std::vector<std::vector<std::pair<std::string, int>>> results(order.size());
  parallel_for(order.size(), threads, [&](std::size_t i) {
    const WordProfile& profile = *order[i];
    std::unordered_map<std::string, int> shared;
    for (const auto& [feature, weight] : profile.features) {
      auto it = index.find(feature);
      if (it == index.end()) continue;
      for (const std::string* other : it->second) {
        if (*other != profile.term) ++shared[*other];
      }
    }
    std::vector<std::pair<std::string, int>> ranked(shared.begin(), shared.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    if (ranked.size() > K) ranked.resize(K);
    results[i] = std::move(ranked);
  });

  TermGraph graph;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!results[i].empty()) graph.edges.emplace(order[i]->term, std::move(results[i]));
  }
  return graph;
}

}  // namespace protolex
