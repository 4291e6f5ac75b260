#ifndef PROTOLEX_ALIGN_HPP
#define PROTOLEX_ALIGN_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "protolex/lexres.hpp"
#include "protolex/pcz.hpp"

namespace protolex {

// Total mapping from PCZ senses to the reference resource: every sense is
// either linked to a synset or maps to itself. `phase` records how the link
// was made: "mono", "iterN", or "self".
struct Mapping {
  struct Link {
    std::string target;
    double score = 0.0;
    std::string phase;
  };
  std::map<std::string, Link> pairs;  // key = sense key ("word#id")

  bool linked(const std::string& sense) const;
  const Link* get(const std::string& sense) const;
  std::size_t linked_count() const;
  std::size_t self_count() const;
};

// Bag of words of a PCZ entry: the surface terms of its related and hypernym
// senses, expanded with the resource bag of every such sense already linked
// in M. Returned as a set because the overlap similarity is set-based.
std::set<std::string> t_bow(const PczEntry& entry, const Mapping& m, const LexicalResource& w);

// Overlap of the entry's bag with the synset's bag, normalized by the size of
// the entry's bag. 0 when the entry bag is empty.
double sim(const PczEntry& entry, const Synset& synset, const Mapping& m,
           const LexicalResource& w);

// Links induced senses to resource synsets. Phase 1 handles senses that are
// monosemous on both sides; then up to m batch-synchronous iterations link a
// sense whenever one candidate's rank strictly tops the rest and meets th.
// Everything still unlinked maps to itself.
Mapping link(const std::vector<PczEntry>& pcz, const LexicalResource& w, double th, int m,
             int threads = 1);

// coverage      = fraction of resource synsets hit by the mapping
// extra_coverage = self-mapped senses over the resource size
std::pair<double, double> coverage_metrics(const Mapping& m, const LexicalResource& w);

struct TypeMap {
  // self-mapped sense -> candidate types with their rank, best first
  std::map<std::string, std::vector<std::pair<std::string, double>>> pairs;
};

// Infers a type for senses the mapping could not link: each linked related
// sense votes 1/hop for every ancestor of its synset at hop 1..3; the top_h
// ranked synsets become the sense's types.
TypeMap type_unmapped(const Mapping& m, const std::vector<PczEntry>& pcz,
                      const LexicalResource& w, int top_h);

}  // namespace protolex

#endif
