#ifndef PROTOLEX_WSI_HPP
#define PROTOLEX_WSI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "protolex/dt.hpp"

namespace protolex {

// Undirected weighted graph over a target word's nearest neighbors. The
// target itself is never a node. Nodes are kept sorted so that indices are
// stable across runs.
struct EgoNetwork {
  std::string target;
  std::vector<std::string> nodes;                    // sorted lexicographically
  std::map<std::pair<int, int>, double> edges;       // key (i, j) with i < j

  int node_index(const std::string& term) const;     // -1 when absent
  double weight(int a, int b) const;
  std::vector<std::pair<int, double>> neighbors_of(int node) const;
};

// Nodes = top-N DT neighbors of target; each node connects to those of its
// own top-n DT neighbors that are also nodes. When an edge is generated from
// both directions the larger weight wins.
EgoNetwork build_ego_network(const TermGraph& dt, const std::string& target,
                             std::size_t N, std::size_t n);

// Chinese Whispers label propagation. Nodes are visited in an order shuffled
// once per iteration from the seed; each node adopts the label with the
// maximal incident edge-weight sum, ties going to the smallest label id.
// Stops at a fixpoint or after max_iterations. Returns clusters as sorted
// node-index lists, in deterministic order (largest aggregate first is NOT
// applied here; callers order clusters themselves).
std::vector<std::vector<int>> chinese_whispers(const EgoNetwork& g, int max_iterations,
                                               std::uint64_t seed);

struct SenseEntry {
  std::string word;
  int sense_id = 0;
  // Related terms with their DT similarity to the target, sorted by weight
  // descending then term.
  std::vector<std::pair<std::string, double>> cluster;
  // Hypernym labels, empty until the labeling stage fills them.
  std::vector<std::pair<std::string, double>> isas;
};

struct WsiParams {
  std::size_t N = 200;
  std::size_t n = 200;
  std::uint64_t seed = 0;
  std::size_t min_cluster_size = 2;
  int max_iterations = 20;
};

struct SenseInventory {
  std::map<std::string, std::vector<SenseEntry>> entries;
  WsiParams params;

  const SenseEntry* find(const std::string& word, int sense_id) const;
  const std::vector<SenseEntry>* senses(const std::string& word) const;
  std::size_t sense_count() const;
};

// Induces one inventory entry per DT term: ego-network clusters become
// senses, ordered by descending aggregate DT weight; clusters smaller than
// min_cluster_size are discarded as noise.
SenseInventory induce_senses(const TermGraph& dt, const WsiParams& params, int threads = 1);

}  // namespace protolex

#endif
