#include "protolex/wsd.hpp"

#include <algorithm>

#include "protolex/error.hpp"
#include "protolex/text.hpp"

namespace protolex {

std::optional<ReprMode> parse_repr_mode(const std::string& name) {
  if (name == "base") return ReprMode::Base;
  if (name == "base+related") return ReprMode::BaseRelated;
  if (name == "base+related+context") return ReprMode::BaseRelatedContext;
  return std::nullopt;
}

std::string repr_mode_name(ReprMode mode) {
  switch (mode) {
    case ReprMode::Base: return "base";
    case ReprMode::BaseRelated: return "base+related";
    case ReprMode::BaseRelatedContext: return "base+related+context";
  }
  return "base";
}

std::string strip_dependency(const std::string& clue) {
  std::size_t pos = clue.find(':');
  return pos == std::string::npos ? clue : clue.substr(0, pos);
}

SenseRepresentation build_sense_repr(const Synset& synset, ReprMode mode,
                                     const std::vector<PczEntry>& pcz, const Mapping& m,
                                     const LexicalResource& w, std::size_t max_clues) {
  SenseRepresentation repr;
  repr.synset_id = synset.id;
  for (const auto& [term, count] : w.bow(synset)) {
    repr.bag[term] += static_cast<double>(count);
  }
  if (mode == ReprMode::Base) return repr;

  // PCZ senses linked to this synset contribute their related terms; with
  // +Context also their clue terms, dependency type stripped.
  for (const auto& entry : pcz) {
    const Mapping::Link* link = m.get(sense_key(entry.word, entry.sense_id));
    if (link == nullptr || link->phase == "self" || link->target != synset.id) continue;
    for (const auto& ref : entry.cluster) {
      repr.bag[ref.term] += 1.0;
    }
    if (mode == ReprMode::BaseRelatedContext) {
      std::size_t used = 0;
      for (const auto& [clue, weight] : entry.clues) {
        if (used >= max_clues) break;
        ++used;
        std::string term = strip_dependency(clue);
        if (term.empty() || is_stopword(term) || is_number_token(term)) continue;
        repr.bag[term] += 1.0;
      }
    }
  }
  return repr;
}

namespace {

std::map<std::string, int> context_counts(const WsdInstance& instance) {
  std::map<std::string, int> counts;
  for (const auto& token : instance.context) {
    counts[lower_ascii(token)] += 1;
  }
  return counts;
}

}  // namespace

std::optional<std::string> lesk(const WsdInstance& instance,
                                const std::vector<SenseRepresentation>& reprs,
                                bool weighted) {
  if (reprs.empty()) return std::nullopt;
  if (reprs.size() == 1) return reprs.front().synset_id;

  auto context = context_counts(instance);
  double best_score = 0.0;
  const SenseRepresentation* best = nullptr;
  for (const auto& repr : reprs) {
    double score = 0.0;
    for (const auto& [term, count] : context) {
      auto it = repr.bag.find(term);
      if (it == repr.bag.end()) continue;
      score += weighted ? std::min(static_cast<double>(count), it->second) : 1.0;
    }
    if (score > best_score) {  // ties keep the earlier (higher-ranked) sense
      best_score = score;
      best = &repr;
    }
  }
  if (best == nullptr) return std::nullopt;  // zero overlap everywhere
  return best->synset_id;
}

std::optional<std::string> mfs_baseline(const WsdInstance& instance, const LexicalResource& w) {
  auto senses = w.get_senses(instance.lemma, instance.pos);
  if (senses.empty() && !instance.pos.empty()) senses = w.get_senses(instance.lemma);
  if (senses.empty()) return std::nullopt;
  return senses.front()->id;
}

std::optional<std::string> random_baseline(const WsdInstance& instance,
                                           const LexicalResource& w, std::mt19937_64& rng) {
  auto senses = w.get_senses(instance.lemma, instance.pos);
  if (senses.empty() && !instance.pos.empty()) senses = w.get_senses(instance.lemma);
  if (senses.empty()) return std::nullopt;
  return senses[rng() % senses.size()]->id;
}

WsdScores evaluate(const std::vector<WsdInstance>& instances,
                   const std::map<std::string, std::string>& decisions) {
  std::set<std::string> known;
  for (const auto& instance : instances) known.insert(instance.id);
  for (const auto& [id, decision] : decisions) {
    if (!known.count(id)) {
      throw InputError("decision for unknown instance id '" + id + "'");
    }
  }

  WsdScores scores;
  scores.total = instances.size();
  for (const auto& instance : instances) {
    auto it = decisions.find(instance.id);
    if (it == decisions.end() || it->second == kAbstain) continue;
    ++scores.attempted;
    if (instance.gold.count(it->second)) ++scores.correct;
  }
  scores.precision = scores.attempted == 0
                         ? 0.0
                         : static_cast<double>(scores.correct) / scores.attempted;
  scores.recall = scores.total == 0 ? 0.0
                                    : static_cast<double>(scores.correct) / scores.total;
  scores.f1 = (scores.precision + scores.recall) == 0.0
                  ? 0.0
                  : 2.0 * scores.precision * scores.recall /
                        (scores.precision + scores.recall);
  return scores;
}

}  // namespace protolex
