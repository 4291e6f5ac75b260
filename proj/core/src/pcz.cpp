#include "protolex/pcz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>

#include "protolex/parallel.hpp"

namespace protolex {

std::string sense_key(const std::string& word, int sense_id) {
  return word + "#" + std::to_string(sense_id);
}

namespace {

using SparseVec = std::map<std::string, double>;

SparseVec to_vec(const std::vector<std::pair<std::string, double>>& items) {
  SparseVec v;
  for (const auto& [term, w] : items) v.emplace(term, w);
  return v;
}

double norm(const SparseVec& v) {
  double sum = 0.0;
  for (const auto& [t, w] : v) sum += w * w;
  return std::sqrt(sum);
}

double cosine(const SparseVec& a, double norm_a, const SparseVec& b, std::uint64_t* ops) {
  if (ops) *ops += a.size() + b.size();
  if (a.empty() || b.empty()) return 0.0;
  double dot = 0.0;
  const SparseVec& small = a.size() <= b.size() ? a : b;
  const SparseVec& large = a.size() <= b.size() ? b : a;
  for (const auto& [t, w] : small) {
    auto it = large.find(t);
    if (it != large.end()) dot += w * it->second;
  }
  double nb = norm(b);
  if (norm_a == 0.0 || nb == 0.0) return 0.0;
  return dot / (norm_a * nb);
}

}  // namespace

std::vector<RefItem> disambiguate(const std::vector<std::pair<std::string, double>>& cluster,
                                  const std::string& cword, const SenseInventory& inventory,
                                  PczStats* stats) {
  SparseVec context = to_vec(cluster);
  context.emplace(cword, 1.0);  // emplace keeps an existing cluster weight
  double context_norm = norm(context);

  std::vector<RefItem> out;
  out.reserve(cluster.size());
  for (const auto& [word, sim] : cluster) {
    RefItem item{word, sim, -1};
    const auto* senses = inventory.senses(word);
    if (senses != nullptr && !senses->empty()) {
      if (senses->size() == 1) {
        item.sense_id = senses->front().sense_id;
      } else {
        double best = -1.0;
        for (const auto& candidate : *senses) {
          SparseVec dcluster = to_vec(candidate.cluster);
          double c = cosine(context, context_norm, dcluster,
                            stats ? &stats->cosine_ops : nullptr);
          if (c > best) {  // ties keep the lowest sense id seen first
            best = c;
            item.sense_id = candidate.sense_id;
          }
        }
      }
    }
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<PczEntry> build_pcz(const SenseInventory& labeled, PczStats* stats, int threads) {
  std::vector<const SenseEntry*> flat;
  for (const auto& [word, senses] : labeled.entries) {
    for (const auto& sense : senses) flat.push_back(&sense);
  }

  std::vector<PczEntry> entries(flat.size());
  std::atomic<std::uint64_t> total_ops{0};
  parallel_for(flat.size(), threads, [&](std::size_t i) {
    const SenseEntry& sense = *flat[i];
    PczStats local;
    PczEntry entry;
    entry.word = sense.word;
    entry.sense_id = sense.sense_id;
    entry.cluster = disambiguate(sense.cluster, sense.word, labeled, &local);
    entry.isas = disambiguate(sense.isas, sense.word, labeled, &local);
    entries[i] = std::move(entry);
    total_ops.fetch_add(local.cosine_ops, std::memory_order_relaxed);
  });
  if (stats) stats->cosine_ops += total_ops.load();
  return entries;
}

SenseVector aggregate_context_clues(const SenseEntry& sense, const ProfileSet& profiles,
                                    std::size_t max_clues) {
  double gamma_sum = 0.0;
  std::map<std::string, double> weighted;
  for (const auto& [word, gamma] : sense.cluster) {
    auto it = profiles.find(word);
    if (it == profiles.end()) continue;  // absent vectors join neither sum
    gamma_sum += gamma;
    for (const auto& [feature, w] : it->second.features) {
      weighted[feature] += gamma * w;
    }
  }
  SenseVector clues;
  if (gamma_sum <= 0.0) return clues;
  clues.reserve(weighted.size());
  for (const auto& [feature, w] : weighted) {
    clues.emplace_back(feature, w / gamma_sum);
  }
  std::sort(clues.begin(), clues.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (clues.size() > max_clues) clues.resize(max_clues);
  return clues;
}

void attach_context_clues(std::vector<PczEntry>& entries, const SenseInventory& inventory,
                          const ProfileSet& profiles, std::size_t max_clues) {
  for (auto& entry : entries) {
    const SenseEntry* sense = inventory.find(entry.word, entry.sense_id);
    if (sense == nullptr) continue;
    entry.clues = aggregate_context_clues(*sense, profiles, max_clues);
  }
}

}  // namespace protolex
