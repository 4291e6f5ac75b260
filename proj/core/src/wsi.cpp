#include "protolex/wsi.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "protolex/parallel.hpp"

namespace protolex {

int EgoNetwork::node_index(const std::string& term) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), term);
  if (it == nodes.end() || *it != term) return -1;
  return static_cast<int>(it - nodes.begin());
}

double EgoNetwork::weight(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = edges.find({a, b});
  return it == edges.end() ? 0.0 : it->second;
}

std::vector<std::pair<int, double>> EgoNetwork::neighbors_of(int node) const {
  std::vector<std::pair<int, double>> out;
  for (const auto& [key, w] : edges) {
    if (key.first == node) out.emplace_back(key.second, w);
    else if (key.second == node) out.emplace_back(key.first, w);
  }
  return out;
}

EgoNetwork build_ego_network(const TermGraph& dt, const std::string& target,
                             std::size_t N, std::size_t n) {
  EgoNetwork g;
  g.target = target;
  const auto* neigh = dt.neighbors(target);
  if (neigh == nullptr) return g;

  std::size_t take = std::min(N, neigh->size());
  g.nodes.reserve(take);
  for (std::size_t i = 0; i < take; ++i) g.nodes.push_back((*neigh)[i].first);
  std::sort(g.nodes.begin(), g.nodes.end());

  for (const std::string& v : g.nodes) {
    const auto* vn = dt.neighbors(v);
    if (vn == nullptr) continue;
    int vi = g.node_index(v);
    std::size_t limit = std::min(n, vn->size());
    for (std::size_t k = 0; k < limit; ++k) {
      const auto& [u, sim] = (*vn)[k];
      int ui = g.node_index(u);
      if (ui < 0 || ui == vi) continue;
      auto key = std::minmax(vi, ui);
      double w = static_cast<double>(sim);
      auto [it, inserted] = g.edges.emplace(std::pair{key.first, key.second}, w);
      if (!inserted && w > it->second) it->second = w;
    }
  }
  return g;
}

namespace {

// Deterministic Fisher-Yates; std::shuffle's draw sequence is
// implementation-defined, so the permutation is derived from raw mt19937
// output directly.
void shuffle_indices(std::vector<int>& idx, std::mt19937_64& rng) {
  for (std::size_t i = idx.size(); i > 1; --i) {
    std::uint64_t j = rng() % i;
    std::swap(idx[i - 1], idx[j]);
  }
}

}  // namespace

std::vector<std::vector<int>> chinese_whispers(const EgoNetwork& g, int max_iterations,
                                               std::uint64_t seed) {
  int count = static_cast<int>(g.nodes.size());
  std::vector<std::vector<int>> clusters;
  if (count == 0) return clusters;

  // Adjacency lists once, O(E).
  std::vector<std::vector<std::pair<int, double>>> adj(count);
  for (const auto& [key, w] : g.edges) {
    adj[key.first].emplace_back(key.second, w);
    adj[key.second].emplace_back(key.first, w);
  }

  std::vector<int> label(count);
  std::iota(label.begin(), label.end(), 0);

  std::mt19937_64 rng(seed);
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);

  std::vector<double> score(count, 0.0);
  for (int iter = 0; iter < max_iterations; ++iter) {
    shuffle_indices(order, rng);
    bool changed = false;
    for (int node : order) {
      if (adj[node].empty()) continue;  // isolated nodes keep their label
      std::vector<int> seen;
      for (const auto& [other, w] : adj[node]) {
        int l = label[other];
        if (score[l] == 0.0) seen.push_back(l);
        score[l] += w;
      }
      int best = label[node];
      double best_score = 0.0;
      std::sort(seen.begin(), seen.end());  // ties -> smallest label id
      for (int l : seen) {
        if (score[l] > best_score) {
          best_score = score[l];
          best = l;
        }
        score[l] = 0.0;
      }
      if (best != label[node]) {
        label[node] = best;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::map<int, std::vector<int>> by_label;
  for (int i = 0; i < count; ++i) by_label[label[i]].push_back(i);
  clusters.reserve(by_label.size());
  for (auto& [l, members] : by_label) clusters.push_back(std::move(members));
  return clusters;
}

const SenseEntry* SenseInventory::find(const std::string& word, int sense_id) const {
  auto it = entries.find(word);
  if (it == entries.end()) return nullptr;
  for (const auto& entry : it->second) {
    if (entry.sense_id == sense_id) return &entry;
  }
  return nullptr;
}

const std::vector<SenseEntry>* SenseInventory::senses(const std::string& word) const {
  auto it = entries.find(word);
  return it == entries.end() ? nullptr : &it->second;
}

std::size_t SenseInventory::sense_count() const {
  std::size_t total = 0;
  for (const auto& [word, list] : entries) total += list.size();
  return total;
}

SenseInventory induce_senses(const TermGraph& dt, const WsiParams& params, int threads) {
  SenseInventory inventory;
  inventory.params = params;

  std::vector<const std::string*> terms;
  terms.reserve(dt.edges.size());
  for (const auto& [term, neigh] : dt.edges) terms.push_back(&term);

  std::vector<std::vector<SenseEntry>> results(terms.size());
  parallel_for(terms.size(), threads, [&](std::size_t i) {
    const std::string& target = *terms[i];
    EgoNetwork ego = build_ego_network(dt, target, params.N, params.n);
    if (ego.nodes.empty()) return;

    // DT weight of each node back to the target; nodes come from the
    // target's neighbor list so a weight always exists.
    std::map<std::string, double> dt_weight;
    for (const auto& [neighbor, sim] : *dt.neighbors(target)) {
      dt_weight[neighbor] = static_cast<double>(sim);
    }

    auto clusters = chinese_whispers(ego, params.max_iterations, params.seed);

    struct Ranked {
      double aggregate;
      std::vector<std::pair<std::string, double>> members;
    };
    std::vector<Ranked> ranked;
    for (const auto& cluster : clusters) {
      if (cluster.size() < params.min_cluster_size) continue;
      Ranked r;
      r.aggregate = 0.0;
      for (int idx : cluster) {
        double w = dt_weight[ego.nodes[idx]];
        r.aggregate += w;
        r.members.emplace_back(ego.nodes[idx], w);
      }
      std::sort(r.members.begin(), r.members.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
      });
      ranked.push_back(std::move(r));
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
      if (a.aggregate != b.aggregate) return a.aggregate > b.aggregate;
      return a.members < b.members;
    });

    std::vector<SenseEntry> senses;
    senses.reserve(ranked.size());
    for (std::size_t s = 0; s < ranked.size(); ++s) {
      SenseEntry entry;
      entry.word = target;
      entry.sense_id = static_cast<int>(s);
      entry.cluster = std::move(ranked[s].members);
      senses.push_back(std::move(entry));
    }
    results[i] = std::move(senses);
  });

  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!results[i].empty()) inventory.entries.emplace(*terms[i], std::move(results[i]));
  }
  return inventory;
}

}  // namespace protolex
