#ifndef PROTOLEX_DT_HPP
#define PROTOLEX_DT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "protolex/corpus.hpp"

namespace protolex {

// Per-word feature profile after LMI weighting and pruning. Features are
// sorted by weight descending, ties broken by feature string, and only
// strictly positive weights are kept.
struct WordProfile {
  std::string term;
  std::vector<std::pair<std::string, double>> features;

  bool has(const std::string& feature) const;
};

using ProfileSet = std::map<std::string, WordProfile>;

// Local mutual information of a (word, feature) pair:
//   count_wf * log2(count_wf * total / (count_w * count_f))
// Returns 0 for an absent pair; a nonzero joint count with a zero marginal
// (or zero total) is a corrupted count table.
double lmi(std::uint64_t count_wf, std::uint64_t count_w, std::uint64_t count_f,
           std::uint64_t total);

// Builds pruned profiles: per word, keep the top `p` positive-LMI features;
// then any feature retained by more than `max_words_per_feature` words is
// kept only for the words scoring it highest.
ProfileSet build_profiles(const FeatureCounts& counts, std::size_t p,
                          std::size_t max_words_per_feature);

/// Number of features two profiles share.
int similarity(const WordProfile& a, const WordProfile& b);

// Distributional thesaurus: each term points at its K most similar terms.
// Edge weights are shared-feature counts (always >= 1); neighbor lists are
// sorted by weight descending with lexicographic tie-break.
struct TermGraph {
  std::map<std::string, std::vector<std::pair<std::string, int>>> edges;

  const std::vector<std::pair<std::string, int>>* neighbors(const std::string& term) const;
};

TermGraph build_dt(const ProfileSet& profiles, std::size_t K, int threads = 1);

}  // namespace protolex

#endif
