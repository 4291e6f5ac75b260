#ifndef PROTOLEX_LABELING_HPP
#define PROTOLEX_LABELING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "protolex/corpus.hpp"
#include "protolex/wsi.hpp"

namespace protolex {

// Pattern-extracted hyponym/hypernym pair frequencies. Reflexive pairs are
// never stored.
class HypernymDB {
 public:
  void add(const std::string& hyponym, const std::string& hypernym, std::uint64_t count = 1);
  std::uint64_t freq(const std::string& hyponym, const std::string& hypernym) const;
  /// Hypernym counts observed for one hyponym; nullptr when none.
  const std::map<std::string, std::uint64_t>* row(const std::string& hyponym) const;
  const std::map<std::string, std::map<std::string, std::uint64_t>>& rows() const {
    return freq_;
  }
  std::size_t pair_count() const;

 private:
  std::map<std::string, std::map<std::string, std::uint64_t>> freq_;
};

// Scans one sentence for the six classic surface patterns
//   X such as Y / such X as Y / Y and other X / Y or other X /
//   X including Y / X especially Y
// and adds one (Y, X) pair per matched hyponym. Tokens are normalized before
// matching; when POS tags are present only nouns fill the X/Y slots.
void scan_hearst(const TokenizedSentence& sentence, HypernymDB& db);

HypernymDB extract_hearst(const std::vector<TokenizedSentence>& sentences);

// Scores every candidate hypernym for a sense cluster as
//   relevance(c,h) = sum_w rel(t,w) * freq(w,h)
//   coverage(c,h)  = sum_w min(freq(w,h), 1)
//   score          = relevance * coverage
// keeping candidates with coverage >= 1, sorted by score descending with a
// lexicographic tie-break. The target word itself is excluded.
std::vector<std::pair<std::string, double>> rank_hypernyms(const SenseEntry& cluster,
                                                           const HypernymDB& db);

// Fills isas for every sense of the inventory; at most max_isas hypernyms are
// kept per sense.
void label_inventory(SenseInventory& inventory, const HypernymDB& db, std::size_t max_isas);

// Search query used to illustrate a sense: target word plus its top hypernym.
// Absent when the sense has no hypernyms.
std::optional<std::string> image_query(const SenseEntry& labeled);

// Pluggable image search backend. The default build ships only the stub; a
// real client can be dropped in without touching the pipeline.
class ImageSearchClient {
 public:
  virtual ~ImageSearchClient() = default;
  virtual std::optional<std::string> search(const std::string& query) = 0;
};

class StubImageClient : public ImageSearchClient {
 public:
  std::optional<std::string> search(const std::string&) override { return std::nullopt; }
};

/// Table-backed client for tests.
class FixtureImageClient : public ImageSearchClient {
 public:
  explicit FixtureImageClient(std::map<std::string, std::string> table)
      : table_(std::move(table)) {}
  std::optional<std::string> search(const std::string& query) override;

 private:
  std::map<std::string, std::string> table_;
};

// First result for the query. Client failures are logged and swallowed; image
// lookup never aborts the pipeline.
std::optional<std::string> fetch_image(const std::string& query, ImageSearchClient& client);

}  // namespace protolex

#endif
