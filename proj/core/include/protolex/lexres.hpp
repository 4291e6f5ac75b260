#ifndef PROTOLEX_LEXRES_HPP
#define PROTOLEX_LEXRES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace protolex {

struct Synset {
  std::string id;
  std::string pos;
  std::vector<std::string> lemmas;  // never empty
  std::string gloss;                // may be empty
  std::vector<std::string> hypernyms;
  std::vector<std::string> related;
};

// Term multiset used for overlap computations: term -> occurrence count.
using TermBag = std::map<std::string, int>;

/// Gloss tokens, punctuation-stripped and lowercased, minus stopwords and numbers.
std::vector<std::string> gloss_content_words(const std::string& gloss);

// WordNet-like synset graph. Immutable after load; reads are safe from any
// number of threads.
class LexicalResource {
 public:
  // File format: id, pos, comma-separated lemmas, gloss, comma-separated
  // hypernym ids, comma-separated related ids. Duplicate ids, dangling edge
  // references and empty lemma lists are load errors. The optional rank file
  // (`lemma<TAB>pos<TAB>id1,id2,...`) reorders senses per lemma; without it,
  // file order decides.
  static LexicalResource load(const std::string& path, const std::string& rank_path = "");
  static LexicalResource from_synsets(const std::vector<Synset>& synsets);

  void apply_rank(const std::string& lemma, const std::string& pos,
                  const std::vector<std::string>& ordered_ids);

  const Synset* find(const std::string& id) const;
  std::size_t size() const { return synsets_.size(); }
  bool empty() const { return synsets_.empty(); }
  const std::map<std::string, Synset>& synsets() const { return synsets_; }

  // Candidate synsets for a lemma in sense-rank order (most frequent first).
  // An empty pos matches every part of speech.
  std::vector<const Synset*> get_senses(const std::string& lemma,
                                        const std::string& pos = "") const;

  // Lemmas and gloss content words of the synset plus the same for every
  // directly related and hypernym synset.
  TermBag bow(const Synset& synset) const;
  TermBag bow(const std::string& id) const;

  /// Synsets reachable via exactly `hop` hypernym edges.
  std::set<std::string> ancestors(const std::string& id, int hop) const;

  /// Synsets with no hypernyms.
  std::vector<std::string> roots() const;

  /// Canonical serialization; load(serialize(x)) == x byte for byte.
  std::string serialize() const;

 private:
  void index_synset(const Synset& synset);
  void validate() const;

  std::map<std::string, Synset> synsets_;
  // (lemma, pos) -> synset ids in sense-rank order
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> lemma_index_;
};

}  // namespace protolex

#endif
