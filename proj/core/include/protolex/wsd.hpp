#ifndef PROTOLEX_WSD_HPP
#define PROTOLEX_WSD_HPP

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "protolex/align.hpp"
#include "protolex/lexres.hpp"
#include "protolex/pcz.hpp"

namespace protolex {

// Weighted bag-of-words standing in for one synset during disambiguation.
struct SenseRepresentation {
  std::string synset_id;
  std::map<std::string, double> bag;
};

enum class ReprMode { Base, BaseRelated, BaseRelatedContext };

std::optional<ReprMode> parse_repr_mode(const std::string& name);
std::string repr_mode_name(ReprMode mode);

/// Clue term without its dependency type: everything before the first ':'.
std::string strip_dependency(const std::string& clue);

// Base: lemmas and gloss content words of the synset and of every directly
// connected synset, term-frequency weighted. +Related adds the related terms
// of the PCZ sense linked to this synset. +Context additionally adds the
// dependency-stripped context clues (up to max_clues, stopwords and numbers
// dropped).
SenseRepresentation build_sense_repr(const Synset& synset, ReprMode mode,
                                     const std::vector<PczEntry>& pcz, const Mapping& m,
                                     const LexicalResource& w, std::size_t max_clues);

struct WsdInstance {
  std::string id;
  std::string lemma;
  std::string pos;
  std::vector<std::string> context;
  std::set<std::string> gold;
};

// Picks the representation with the highest overlap against the instance
// context. Weighted overlap sums min(context tf, bag weight) per shared term;
// the unweighted variant counts shared terms. A single candidate is returned
// without scoring; all-zero overlap abstains (nullopt).
std::optional<std::string> lesk(const WsdInstance& instance,
                                const std::vector<SenseRepresentation>& reprs,
                                bool weighted = true);

/// First synset of the lemma in sense-rank order; abstains on unknown lemmas.
std::optional<std::string> mfs_baseline(const WsdInstance& instance, const LexicalResource& w);

/// Uniform choice among the lemma's candidate synsets.
std::optional<std::string> random_baseline(const WsdInstance& instance,
                                           const LexicalResource& w, std::mt19937_64& rng);

struct WsdScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t attempted = 0;
  std::size_t correct = 0;
  std::size_t total = 0;
};

inline constexpr const char* kAbstain = "ABSTAIN";

// Scores decisions (instance id -> synset id or ABSTAIN). Missing decisions
// count as abstentions; a decision for an unknown instance id is an error.
WsdScores evaluate(const std::vector<WsdInstance>& instances,
                   const std::map<std::string, std::string>& decisions);

}  // namespace protolex

#endif
