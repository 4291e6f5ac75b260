#include "protolex/lexres.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "protolex/error.hpp"
#include "protolex/text.hpp"

namespace protolex {

std::vector<std::string> gloss_content_words(const std::string& gloss) {
  std::vector<std::string> out;
  for (const auto& raw : split_ws(gloss)) {
    std::string word = lower_ascii(strip_punct(raw));
    if (word.empty() || is_stopword(word) || is_number_token(word)) continue;
    out.push_back(word);
  }
  return out;
}

namespace {

std::vector<std::string> parse_id_list(const std::string& field) {
  std::vector<std::string> out;
  if (field.empty()) return out;
  for (auto& id : split(field, ',')) {
    if (!id.empty()) out.push_back(std::move(id));
  }
  return out;
}

}  // namespace

LexicalResource LexicalResource::load(const std::string& path, const std::string& rank_path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open resource file: " + path);

  LexicalResource res;
  std::vector<std::string> file_order;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() != 6) {
      throw InputError(path + ":" + std::to_string(lineno) + ": expected 6 fields, got " +
                       std::to_string(fields.size()));
    }
    Synset synset;
    synset.id = fields[0];
    synset.pos = fields[1];
    synset.lemmas = parse_id_list(fields[2]);
    synset.gloss = fields[3];
    synset.hypernyms = parse_id_list(fields[4]);
    synset.related = parse_id_list(fields[5]);
    if (synset.id.empty()) {
      throw InputError(path + ":" + std::to_string(lineno) + ": empty synset id");
    }
    if (synset.lemmas.empty()) {
      throw InputError(path + ":" + std::to_string(lineno) + ": synset '" + synset.id +
                       "' has no lemmas");
    }
    if (res.synsets_.count(synset.id)) {
      throw InputError(path + ":" + std::to_string(lineno) + ": duplicate synset id '" +
                       synset.id + "'");
    }
    file_order.push_back(synset.id);
    res.synsets_.emplace(synset.id, std::move(synset));
  }

  for (const auto& id : file_order) res.index_synset(res.synsets_.at(id));
  res.validate();

  if (!rank_path.empty()) {
    std::ifstream rin(rank_path);
    if (!rin) throw InputError("cannot open rank file: " + rank_path);
    lineno = 0;
    while (std::getline(rin, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      auto fields = split(line, '\t');
      if (fields.size() != 3) {
        throw InputError(rank_path + ":" + std::to_string(lineno) + ": expected 3 fields");
      }
      res.apply_rank(fields[0], fields[1], parse_id_list(fields[2]));
    }
  }
  return res;
}

LexicalResource LexicalResource::from_synsets(const std::vector<Synset>& synsets) {
  LexicalResource res;
  for (const auto& synset : synsets) {
    if (synset.lemmas.empty()) {
      throw InputError("synset '" + synset.id + "' has no lemmas");
    }
    if (res.synsets_.count(synset.id)) {
      throw InputError("duplicate synset id '" + synset.id + "'");
    }
    res.synsets_.emplace(synset.id, synset);
  }
  for (const auto& synset : synsets) res.index_synset(res.synsets_.at(synset.id));
  res.validate();
  return res;
}

void LexicalResource::index_synset(const Synset& synset) {
  for (const auto& lemma : synset.lemmas) {
    auto& ids = lemma_index_[{lemma, synset.pos}];
    if (std::find(ids.begin(), ids.end(), synset.id) == ids.end()) {
      ids.push_back(synset.id);
    }
  }
}

void LexicalResource::validate() const {
  for (const auto& [id, synset] : synsets_) {
    for (const auto& hid : synset.hypernyms) {
      if (hid == id) throw InputError("synset '" + id + "' is its own hypernym");
      if (!synsets_.count(hid)) {
        throw InputError("synset '" + id + "' has dangling hypernym reference '" + hid + "'");
      }
    }
    for (const auto& rid : synset.related) {
      if (!synsets_.count(rid)) {
        throw InputError("synset '" + id + "' has dangling related reference '" + rid + "'");
      }
    }
  }
}

void LexicalResource::apply_rank(const std::string& lemma, const std::string& pos,
                                 const std::vector<std::string>& ordered_ids) {
  auto it = lemma_index_.find({lemma, pos});
  if (it == lemma_index_.end()) {
    throw InputError("rank entry for unknown lemma '" + lemma + "' (" + pos + ")");
  }
  auto& current = it->second;
  std::vector<std::string> sorted_current = current;
  std::vector<std::string> sorted_new = ordered_ids;
  std::sort(sorted_current.begin(), sorted_current.end());
  std::sort(sorted_new.begin(), sorted_new.end());
  if (sorted_current != sorted_new) {
    throw InputError("rank entry for '" + lemma + "' is not a permutation of its senses");
  }
  current = ordered_ids;
}

const Synset* LexicalResource::find(const std::string& id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

std::vector<const Synset*> LexicalResource::get_senses(const std::string& lemma,
                                                       const std::string& pos) const {
  std::vector<const Synset*> out;
  if (!pos.empty()) {
    auto it = lemma_index_.find({lemma, pos});
    if (it == lemma_index_.end()) return out;
    for (const auto& id : it->second) out.push_back(&synsets_.at(id));
    return out;
  }
  // All parts of speech: pos groups in sorted order, rank order within each.
  auto it = lemma_index_.lower_bound({lemma, ""});
  for (; it != lemma_index_.end() && it->first.first == lemma; ++it) {
    for (const auto& id : it->second) out.push_back(&synsets_.at(id));
  }
  return out;
}

TermBag LexicalResource::bow(const Synset& synset) const {
  TermBag bag;
  auto absorb = [&](const Synset& s) {
    for (const auto& lemma : s.lemmas) bag[lemma] += 1;
    for (const auto& word : gloss_content_words(s.gloss)) bag[word] += 1;
  };
  absorb(synset);
  for (const auto& hid : synset.hypernyms) absorb(synsets_.at(hid));
  for (const auto& rid : synset.related) absorb(synsets_.at(rid));
  return bag;
}

TermBag LexicalResource::bow(const std::string& id) const {
  const Synset* synset = find(id);
  if (synset == nullptr) throw InputError("bow: unknown synset id '" + id + "'");
  return bow(*synset);
}

std::set<std::string> LexicalResource::ancestors(const std::string& id, int hop) const {
  std::set<std::string> frontier;
  if (!synsets_.count(id)) return frontier;
  frontier.insert(id);
  for (int step = 0; step < hop; ++step) {
    std::set<std::string> next;
    for (const auto& node : frontier) {
      for (const auto& hid : synsets_.at(node).hypernyms) next.insert(hid);
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return frontier;
}

std::vector<std::string> LexicalResource::roots() const {
  std::vector<std::string> out;
  for (const auto& [id, synset] : synsets_) {
    if (synset.hypernyms.empty()) out.push_back(id);
  }
  return out;
}

std::string LexicalResource::serialize() const {
  std::ostringstream out;
  auto join = [](const std::vector<std::string>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += ',';
      s += items[i];
    }
    return s;
  };
  for (const auto& [id, synset] : synsets_) {
    out << id << '\t' << synset.pos << '\t' << join(synset.lemmas) << '\t' << synset.gloss
        << '\t' << join(synset.hypernyms) << '\t' << join(synset.related) << '\n';
  }
  return out.str();
}

}  // namespace protolex
