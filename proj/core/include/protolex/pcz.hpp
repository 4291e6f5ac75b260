#ifndef PROTOLEX_PCZ_HPP
#define PROTOLEX_PCZ_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "protolex/dt.hpp"
#include "protolex/wsi.hpp"

namespace protolex {

// A related-term or hypernym reference carrying its resolved sense id.
// sense_id -1 means the term has no senses in the inventory.
struct RefItem {
  std::string term;
  double weight = 0.0;
  int sense_id = -1;
};

struct PczEntry {
  std::string word;
  int sense_id = 0;
  std::vector<RefItem> cluster;
  std::vector<RefItem> isas;
  std::vector<std::pair<std::string, double>> clues;  // sorted by weight desc
};

/// Canonical sense key, e.g. "mouse#1".
std::string sense_key(const std::string& word, int sense_id);

struct PczStats {
  // Sparse-vector work performed by the cosine argmax; proportional to
  // candidate cluster sizes, so it tracks the analytic cost model rather
  // than wall-clock noise.
  std::uint64_t cosine_ops = 0;
};

// Assigns every word of `cluster` the sense whose own cluster has maximal
// cosine similarity with the context vector (the cluster plus the carrier
// word at weight 1.0). Ties pick the lowest sense id; a word with a single
// candidate sense takes it outright; a word with no senses gets -1.
std::vector<RefItem> disambiguate(const std::vector<std::pair<std::string, double>>& cluster,
                                  const std::string& cword, const SenseInventory& inventory,
                                  PczStats* stats = nullptr);

// Disambiguates related terms and hypernyms for every inventory entry.
// Entry count and sense ids are preserved; clues stay empty here.
std::vector<PczEntry> build_pcz(const SenseInventory& labeled, PczStats* stats = nullptr,
                                int threads = 1);

using SenseVector = std::vector<std::pair<std::string, double>>;

// Weighted mean of the member words' feature profiles, using cluster
// similarities as weights. Members without a profile contribute to neither
// sum. Truncated to the max_clues heaviest features.
SenseVector aggregate_context_clues(const SenseEntry& sense, const ProfileSet& profiles,
                                    std::size_t max_clues);

// Convenience pass: attaches aggregated clues to already-built PCZ entries.
void attach_context_clues(std::vector<PczEntry>& entries, const SenseInventory& inventory,
                          const ProfileSet& profiles, std::size_t max_clues);

}  // namespace protolex

#endif
