#ifndef PROTOLEX_CORPUS_HPP
#define PROTOLEX_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace protolex {

// Coarse POS tags: NN, NP, VB, JJ, OT (other). Anything unrecognized in an
// input file is treated as OT. An empty tag means "untagged".
bool known_pos_tag(const std::string& tag);

struct TokenizedSentence {
  std::vector<std::string> tokens;
  // Either empty (untagged sentence) or one entry per token ("" = untagged).
  std::vector<std::string> pos;

  bool tagged() const { return !pos.empty(); }
};

struct FeatureRecord {
  std::string term;
  std::string feature;
  std::uint64_t count = 0;
};

// Sparse (term, feature) count store with marginals. Immutable once the
// ingest that produced it finishes; merge() exists so shard-local counts can
// be combined (associative and commutative).
class FeatureCounts {
 public:
  void add(const std::string& term, const std::string& feature, std::uint64_t count);
  void merge(const FeatureCounts& other);

  std::uint64_t joint(const std::string& term, const std::string& feature) const;
  std::uint64_t term_marginal(const std::string& term) const;
  std::uint64_t feature_marginal(const std::string& feature) const;
  std::uint64_t total() const { return total_; }

  const std::map<std::string, std::map<std::string, std::uint64_t>>& rows() const {
    return joint_;
  }
  const std::map<std::string, std::uint64_t>& term_marginals() const { return term_marginal_; }
  const std::map<std::string, std::uint64_t>& feature_marginals() const {
    return feature_marginal_;
  }

  bool operator==(const FeatureCounts& other) const = default;

 private:
  std::map<std::string, std::map<std::string, std::uint64_t>> joint_;
  std::map<std::string, std::uint64_t> term_marginal_;
  std::map<std::string, std::uint64_t> feature_marginal_;
  std::uint64_t total_ = 0;
};

// Trigram fallback features: token i is described by the concatenation of its
// two neighbors, with "^" and "$" padding at the sentence boundaries. Emits
// exactly one record per token.
std::vector<FeatureRecord> extract_trigram_features(const TokenizedSentence& sentence);

FeatureCounts ingest_feature_records(const std::vector<FeatureRecord>& records);

struct IngestStats {
  std::size_t records = 0;
  std::size_t skipped = 0;
};

// Reads `term<TAB>feature<TAB>count` lines. Malformed lines are reported to
// `errlog` with their line number, skipped, and counted in stats.skipped.
FeatureCounts ingest_feature_tsv(std::istream& in, IngestStats* stats = nullptr,
                                 std::ostream* errlog = nullptr);

// Parses one `tok tok/POS ...` line. Tokens keep their surface form here;
// normalization happens separately so the same sentences can feed both the
// trigram extractor and the hypernym-pattern scanner.
TokenizedSentence parse_tokenized_line(const std::string& line);

// Terms are lowercased except proper nouns (tag NP), which keep their case.
std::string normalize_token(const std::string& token, const std::string& pos_tag);

// Applies normalize_token to every token of the sentence.
TokenizedSentence normalize_sentence(const TokenizedSentence& sentence);

// Runs the trigram extractor over a tokenized text stream (one sentence per
// line), normalizing tokens first.
FeatureCounts ingest_tokenized_text(std::istream& in, IngestStats* stats = nullptr);

}  // namespace protolex

#endif
