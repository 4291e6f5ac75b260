#include "protolex/corpus.hpp"

#include <istream>
#include <ostream>

#include "protolex/error.hpp"
#include "protolex/text.hpp"

namespace protolex {

bool known_pos_tag(const std::string& tag) {
  return tag == "NN" || tag == "NP" || tag == "VB" || tag == "JJ" || tag == "OT";
}

void FeatureCounts::add(const std::string& term, const std::string& feature,
                        std::uint64_t count) {
  if (count == 0) return;
  joint_[term][feature] += count;
  term_marginal_[term] += count;
  feature_marginal_[feature] += count;
  total_ += count;
}

void FeatureCounts::merge(const FeatureCounts& other) {
  for (const auto& [term, row] : other.joint_) {
    for (const auto& [feature, count] : row) {
      add(term, feature, count);
    }
  }
}

std::uint64_t FeatureCounts::joint(const std::string& term, const std::string& feature) const {
  auto row = joint_.find(term);
  if (row == joint_.end()) return 0;
  auto it = row->second.find(feature);
  return it == row->second.end() ? 0 : it->second;
}

std::uint64_t FeatureCounts::term_marginal(const std::string& term) const {
  auto it = term_marginal_.find(term);
  return it == term_marginal_.end() ? 0 : it->second;
}

std::uint64_t FeatureCounts::feature_marginal(const std::string& feature) const {
  auto it = feature_marginal_.find(feature);
  return it == feature_marginal_.end() ? 0 : it->second;
}

std::vector<FeatureRecord> extract_trigram_features(const TokenizedSentence& sentence) {
  std::vector<FeatureRecord> out;
  const auto& toks = sentence.tokens;
  out.reserve(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const std::string& left = (i == 0) ? std::string("^") : toks[i - 1];
    const std::string& right = (i + 1 == toks.size()) ? std::string("$") : toks[i + 1];
    out.push_back(FeatureRecord{toks[i], left + "_" + right, 1});
  }
  return out;
}

FeatureCounts ingest_feature_records(const std::vector<FeatureRecord>& records) {
  FeatureCounts counts;
  for (const auto& rec : records) {
    counts.add(rec.term, rec.feature, rec.count);
  }
  return counts;
}

FeatureCounts ingest_feature_tsv(std::istream& in, IngestStats* stats, std::ostream* errlog) {
  FeatureCounts counts;
  IngestStats local;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line, '\t');
    bool ok = fields.size() == 3 && !fields[0].empty() && !fields[1].empty();
    std::uint64_t count = 0;
    if (ok) {
      const std::string& c = fields[2];
      ok = !c.empty() && c.find_first_not_of("0123456789") == std::string::npos;
      if (ok) count = std::stoull(c);
      ok = ok && count >= 1;
    }
    if (!ok) {
      ++local.skipped;
      if (errlog) *errlog << "skipping malformed feature record at line " << lineno << "\n";
      continue;
    }
    counts.add(fields[0], fields[1], count);
    ++local.records;
  }
  if (stats) *stats = local;
  return counts;
}

TokenizedSentence parse_tokenized_line(const std::string& line) {
  TokenizedSentence sent;
  bool any_tag = false;
  for (const auto& raw : split_ws(line)) {
    std::string token = raw;
    std::string tag;
    std::size_t slash = raw.rfind('/');
    if (slash != std::string::npos && slash > 0) {
      std::string suffix = raw.substr(slash + 1);
      if (known_pos_tag(suffix)) {
        token = raw.substr(0, slash);
        tag = suffix;
        any_tag = true;
      }
    }
    sent.tokens.push_back(token);
    sent.pos.push_back(tag);
  }
  if (!any_tag) sent.pos.clear();
  return sent;
}

std::string normalize_token(const std::string& token, const std::string& pos_tag) {
  if (pos_tag == "NP") return token;
  return lower_ascii(token);
}

TokenizedSentence normalize_sentence(const TokenizedSentence& sentence) {
  TokenizedSentence out = sentence;
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    const std::string tag = out.tagged() ? out.pos[i] : std::string();
    out.tokens[i] = normalize_token(out.tokens[i], tag);
  }
  return out;
}

FeatureCounts ingest_tokenized_text(std::istream& in, IngestStats* stats) {
  FeatureCounts counts;
  IngestStats local;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    TokenizedSentence sent = normalize_sentence(parse_tokenized_line(line));
    for (const auto& rec : extract_trigram_features(sent)) {
      counts.add(rec.term, rec.feature, rec.count);
      ++local.records;
    }
  }
  if (stats) *stats = local;
  return counts;
}

}  // namespace protolex
