#include "protolex/align.hpp"

#include <algorithm>

#include "protolex/error.hpp"
#include "protolex/parallel.hpp"

namespace protolex {

bool Mapping::linked(const std::string& sense) const {
  auto it = pairs.find(sense);
  return it != pairs.end() && it->second.phase != "self";
}

const Mapping::Link* Mapping::get(const std::string& sense) const {
  auto it = pairs.find(sense);
  return it == pairs.end() ? nullptr : &it->second;
}

std::size_t Mapping::linked_count() const {
  std::size_t count = 0;
  for (const auto& [sense, link] : pairs) {
    if (link.phase != "self") ++count;
  }
  return count;
}

std::size_t Mapping::self_count() const {
  return pairs.size() - linked_count();
}

namespace {

void absorb_refs(const std::vector<RefItem>& refs, const Mapping& m, const LexicalResource& w,
                 std::set<std::string>& bag) {
  for (const auto& ref : refs) {
    bag.insert(ref.term);
    if (ref.sense_id < 0) continue;
    const Mapping::Link* link = m.get(sense_key(ref.term, ref.sense_id));
    if (link == nullptr || link->phase == "self") continue;
    const Synset* synset = w.find(link->target);
    if (synset == nullptr) continue;
    for (const auto& [term, count] : w.bow(*synset)) bag.insert(term);
  }
}

}  // namespace

std::set<std::string> t_bow(const PczEntry& entry, const Mapping& m, const LexicalResource& w) {
  std::set<std::string> bag;
  absorb_refs(entry.cluster, m, w, bag);
  absorb_refs(entry.isas, m, w, bag);
  return bag;
}

double sim(const PczEntry& entry, const Synset& synset, const Mapping& m,
           const LexicalResource& w) {
  std::set<std::string> source = t_bow(entry, m, w);
  if (source.empty()) return 0.0;
  TermBag target = w.bow(synset);
  std::size_t overlap = 0;
  for (const auto& term : source) {
    if (target.count(term)) ++overlap;
  }
  return static_cast<double>(overlap) / static_cast<double>(source.size());
}

Mapping link(const std::vector<PczEntry>& pcz, const LexicalResource& w, double th, int m,
             int threads) {
  // Senses in deterministic key order; remember per-word polysemy for the
  // monosemous phase.
  std::map<std::string, const PczEntry*> by_key;
  std::map<std::string, int> senses_per_word;
  for (const auto& entry : pcz) {
    by_key.emplace(sense_key(entry.word, entry.sense_id), &entry);
    senses_per_word[entry.word] += 1;
  }

  Mapping mapping;

  // Phase 1: a sense that is the only one of its word, whose lemma has
  // exactly one candidate synset. The similarity check runs against an empty
  // mapping.
  Mapping empty;
  for (const auto& [key, entry] : by_key) {
    if (senses_per_word[entry->word] != 1) continue;
    auto candidates = w.get_senses(entry->word);
    if (candidates.size() != 1) continue;
    double score = sim(*entry, *candidates.front(), empty, w);
    if (score >= th) {
      mapping.pairs[key] = {candidates.front()->id, score, "mono"};
    }
  }

  // Iterative phase: candidates are ranked against the mapping frozen at the
  // start of the iteration; links are collected and merged at the end.
  for (int step = 1; step <= m; ++step) {
    std::vector<std::pair<std::string, const PczEntry*>> pending;
    for (const auto& [key, entry] : by_key) {
      if (!mapping.pairs.count(key)) pending.emplace_back(key, entry);
    }
    if (pending.empty()) break;

    std::vector<std::pair<std::string, Mapping::Link>> found(pending.size());
    std::vector<char> has_link(pending.size(), 0);
    parallel_for(pending.size(), threads, [&](std::size_t i) {
      const auto& [key, entry] = pending[i];
      auto candidates = w.get_senses(entry->word);
      if (candidates.empty()) return;
      std::vector<double> ranks(candidates.size());
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        ranks[c] = sim(*entry, *candidates[c], mapping, w);
      }
      std::size_t best = 0;
      for (std::size_t c = 1; c < candidates.size(); ++c) {
        if (ranks[c] > ranks[best]) best = c;
      }
      // "single top value": no other candidate may tie the best rank
      int top_count = 0;
      for (double r : ranks) {
        if (r == ranks[best]) ++top_count;
      }
      if (top_count != 1 || ranks[best] < th) return;
      found[i] = {key, {candidates[best]->id, ranks[best], "iter" + std::to_string(step)}};
      has_link[i] = 1;
    });

    bool any = false;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (has_link[i]) {
        mapping.pairs.emplace(found[i].first, std::move(found[i].second));
        any = true;
      }
    }
    if (!any) break;  // fixpoint; further iterations cannot change anything
  }

  // Unlinked senses map to themselves, making the mapping total.
  for (const auto& [key, entry] : by_key) {
    if (!mapping.pairs.count(key)) {
      mapping.pairs[key] = {key, 0.0, "self"};
    }
  }
  return mapping;
}

std::pair<double, double> coverage_metrics(const Mapping& m, const LexicalResource& w) {
  if (w.empty()) throw InputError("coverage_metrics: empty lexical resource");
  std::set<std::string> hit;
  std::size_t self_mapped = 0;
  for (const auto& [sense, link] : m.pairs) {
    if (link.phase == "self") {
      ++self_mapped;
    } else {
      hit.insert(link.target);
    }
  }
  double denom = static_cast<double>(w.size());
  return {static_cast<double>(hit.size()) / denom, static_cast<double>(self_mapped) / denom};
}

TypeMap type_unmapped(const Mapping& m, const std::vector<PczEntry>& pcz,
                      const LexicalResource& w, int top_h) {
  std::map<std::string, const PczEntry*> by_key;
  for (const auto& entry : pcz) {
    by_key.emplace(sense_key(entry.word, entry.sense_id), &entry);
  }

  TypeMap types;
  for (const auto& [key, link] : m.pairs) {
    if (link.phase != "self") continue;
    auto it = by_key.find(key);
    if (it == by_key.end()) continue;

    std::map<std::string, double> rank;
    for (const auto& ref : it->second->cluster) {
      if (ref.sense_id < 0) continue;
      const Mapping::Link* rlink = m.get(sense_key(ref.term, ref.sense_id));
      if (rlink == nullptr || rlink->phase == "self") continue;
      if (w.find(rlink->target) == nullptr) continue;
      for (int hop = 1; hop <= 3; ++hop) {
        for (const auto& ancestor : w.ancestors(rlink->target, hop)) {
          rank[ancestor] += 1.0 / static_cast<double>(hop);
        }
      }
    }
    if (rank.empty()) continue;

    std::vector<std::pair<std::string, double>> ranked(rank.begin(), rank.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    if (ranked.size() > static_cast<std::size_t>(top_h)) ranked.resize(top_h);
    types.pairs.emplace(key, std::move(ranked));
  }
  return types;
}

}  // namespace protolex
