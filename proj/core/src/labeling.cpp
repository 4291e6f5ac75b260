#include "protolex/labeling.hpp"

#include <algorithm>
#include <iostream>

#include "protolex/text.hpp"

namespace protolex {

void HypernymDB::add(const std::string& hyponym, const std::string& hypernym,
                     std::uint64_t count) {
  if (hyponym == hypernym || count == 0) return;
  freq_[hyponym][hypernym] += count;
}

std::uint64_t HypernymDB::freq(const std::string& hyponym, const std::string& hypernym) const {
  auto r = freq_.find(hyponym);
  if (r == freq_.end()) return 0;
  auto it = r->second.find(hypernym);
  return it == r->second.end() ? 0 : it->second;
}

const std::map<std::string, std::uint64_t>* HypernymDB::row(const std::string& hyponym) const {
  auto it = freq_.find(hyponym);
  return it == freq_.end() ? nullptr : &it->second;
}

std::size_t HypernymDB::pair_count() const {
  std::size_t total = 0;
  for (const auto& [hypo, row] : freq_) total += row.size();
  return total;
}

namespace {

bool noun_at(const TokenizedSentence& s, std::size_t i) {
  if (!s.tagged()) return true;  // no tags, no gating
  return s.pos[i] == "NN" || s.pos[i] == "NP";
}

// Scans left from `from` (inclusive) for the nearest noun, skipping at most
// `window` tokens.
int nearest_noun_left(const TokenizedSentence& s, int from, int window) {
  for (int i = from, skipped = 0; i >= 0 && skipped <= window; --i, ++skipped) {
    if (noun_at(s, static_cast<std::size_t>(i))) return i;
  }
  return -1;
}

// Collects an enumeration of nouns starting at `from`: skips up to two
// non-noun tokens before each item and continues across "," / "and" / "or".
std::vector<int> noun_list_right(const TokenizedSentence& s, std::size_t from) {
  std::vector<int> found;
  std::size_t i = from;
  while (i < s.tokens.size()) {
    int skipped = 0;
    while (i < s.tokens.size() && !noun_at(s, i) && skipped < 2) {
      ++i;
      ++skipped;
    }
    if (i >= s.tokens.size() || !noun_at(s, i)) break;
    found.push_back(static_cast<int>(i));
    ++i;
    if (i < s.tokens.size() &&
        (s.tokens[i] == "," || s.tokens[i] == "and" || s.tokens[i] == "or")) {
      ++i;
      continue;
    }
    break;
  }
  return found;
}

// Comma-separated noun enumeration ending at `from` (inclusive), scanning
// left: "rats , mice and other ..." yields both rats and mice.
std::vector<int> noun_list_left(const TokenizedSentence& s, int from) {
  std::vector<int> found;
  int i = nearest_noun_left(s, from, 2);
  while (i >= 0) {
    found.push_back(i);
    if (i >= 2 && s.tokens[static_cast<std::size_t>(i) - 1] == "," &&
        noun_at(s, static_cast<std::size_t>(i) - 2)) {
      i -= 2;
      continue;
    }
    break;
  }
  return found;
}

}  // namespace

void scan_hearst(const TokenizedSentence& sentence, HypernymDB& db) {
  const TokenizedSentence s = normalize_sentence(sentence);
  const auto& toks = s.tokens;
  auto emit = [&](int hypo, int hyper) {
    if (hypo < 0 || hyper < 0 || hypo == hyper) return;
    db.add(toks[static_cast<std::size_t>(hypo)], toks[static_cast<std::size_t>(hyper)]);
  };

  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i] == "such") {
      if (i + 1 < toks.size() && toks[i + 1] == "as") {
        // X such as Y1, Y2 and Y3
        int x = nearest_noun_left(s, static_cast<int>(i) - 1, 2);
        for (int y : noun_list_right(s, i + 2)) emit(y, x);
      } else {
        // such X as Y1, Y2
        std::size_t j = i + 1;
        int skipped = 0;
        while (j < toks.size() && !noun_at(s, j) && skipped < 2) ++j, ++skipped;
        if (j < toks.size() && noun_at(s, j) && j + 1 < toks.size() && toks[j + 1] == "as") {
          for (int y : noun_list_right(s, j + 2)) emit(y, static_cast<int>(j));
        }
      }
    } else if ((toks[i] == "and" || toks[i] == "or") && i + 1 < toks.size() &&
               toks[i + 1] == "other") {
      // Y and other X / Y or other X
      std::size_t j = i + 2;
      int skipped = 0;
      while (j < toks.size() && !noun_at(s, j) && skipped < 2) ++j, ++skipped;
      if (j < toks.size() && noun_at(s, j)) {
        for (int y : noun_list_left(s, static_cast<int>(i) - 1)) emit(y, static_cast<int>(j));
      }
    } else if (toks[i] == "including" || toks[i] == "especially") {
      // X including Y+ / X especially Y+
      int x = nearest_noun_left(s, static_cast<int>(i) - 1, 2);
      for (int y : noun_list_right(s, i + 1)) emit(y, x);
    }
  }
}

HypernymDB extract_hearst(const std::vector<TokenizedSentence>& sentences) {
  HypernymDB db;
  for (const auto& sentence : sentences) scan_hearst(sentence, db);
  return db;
}

std::vector<std::pair<std::string, double>> rank_hypernyms(const SenseEntry& cluster,
                                                           const HypernymDB& db) {
  // relevance and coverage per candidate, accumulated over cluster members
  std::map<std::string, double> relevance;
  std::map<std::string, std::uint64_t> coverage;
  for (const auto& [word, rel] : cluster.cluster) {
    const auto* row = db.row(word);
    if (row == nullptr) continue;
    for (const auto& [hyper, freq] : *row) {
      if (hyper == cluster.word) continue;  // self-hypernymy is vacuous
      relevance[hyper] += rel * static_cast<double>(freq);
      coverage[hyper] += 1;
    }
  }
  std::vector<std::pair<std::string, double>> ranked;
  for (const auto& [hyper, cov] : coverage) {
    if (cov < 1) continue;
    double score = relevance[hyper] * static_cast<double>(cov);
    if (score > 0.0) ranked.emplace_back(hyper, score);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return ranked;
}

void label_inventory(SenseInventory& inventory, const HypernymDB& db, std::size_t max_isas) {
  for (auto& [word, senses] : inventory.entries) {
    for (auto& sense : senses) {
      auto ranked = rank_hypernyms(sense, db);
      if (ranked.size() > max_isas) ranked.resize(max_isas);
      sense.isas = std::move(ranked);
    }
  }
}

std::optional<std::string> image_query(const SenseEntry& labeled) {
  if (labeled.isas.empty()) return std::nullopt;
  return labeled.word + " " + labeled.isas.front().first;
}

std::optional<std::string> FixtureImageClient::search(const std::string& query) {
  auto it = table_.find(query);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> fetch_image(const std::string& query, ImageSearchClient& client) {
  try {
    return client.search(query);
  } catch (const std::exception& e) {
    std::cerr << "image search failed for '" << query << "': " << e.what() << "\n";
    return std::nullopt;
  }
}

}  // namespace protolex
