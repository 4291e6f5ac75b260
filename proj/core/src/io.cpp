#include "protolex/io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "protolex/error.hpp"
#include "protolex/text.hpp"

namespace protolex {

namespace {

std::vector<std::string> tsv_fields(const std::string& line, std::size_t expected,
                                    const char* what) {
  auto fields = split(line, '\t');
  if (fields.size() != expected) {
    throw InputError(std::string(what) + ": expected " + std::to_string(expected) +
                     " fields, got " + std::to_string(fields.size()));
  }
  return fields;
}

std::string trim_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// `term:weight` items, split at the last ':'.
std::string join_weighted(const std::vector<std::pair<std::string, double>>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i].first;
    out += ':';
    out += fmt_number(items[i].second);
  }
  return out;
}

// Every serialized item ends in ":<number>" and numbers never contain commas,
// so a fragment whose tail after the last ':' is not a number must have been
// produced by a ',' inside the term; it is rejoined with the next fragment.
bool item_complete(const std::string& item) {
  std::size_t pos = item.rfind(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == item.size()) return false;
  const char* begin = item.data() + pos + 1;
  const char* end = item.data() + item.size();
  double value = 0.0;
  auto res = std::from_chars(begin, end, value);
  return res.ec == std::errc() && res.ptr == end;
}

std::vector<std::string> split_items(const std::string& field, const char* what) {
  std::vector<std::string> out;
  std::string buffer;
  bool pending = false;
  for (const auto& fragment : split(field, ',')) {
    if (pending) {
      buffer += ',';
      buffer += fragment;
    } else {
      buffer = fragment;
      pending = true;
    }
    if (item_complete(buffer)) {
      out.push_back(buffer);
      pending = false;
    }
  }
  if (pending) {
    throw InputError(std::string("malformed ") + what + " item '" + buffer + "'");
  }
  return out;
}

std::vector<std::pair<std::string, double>> parse_weighted(const std::string& field) {
  std::vector<std::pair<std::string, double>> out;
  if (field.empty()) return out;
  for (const auto& item : split_items(field, "weighted")) {
    std::size_t pos = item.rfind(':');
    out.emplace_back(item.substr(0, pos), parse_number(item.substr(pos + 1)));
  }
  return out;
}

// `term#senseid:weight` items.
std::string join_refs(const std::vector<RefItem>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i].term;
    out += '#';
    out += std::to_string(items[i].sense_id);
    out += ':';
    out += fmt_number(items[i].weight);
  }
  return out;
}

std::vector<RefItem> parse_refs(const std::string& field) {
  std::vector<RefItem> out;
  if (field.empty()) return out;
  for (const auto& item : split_items(field, "ref")) {
    std::size_t colon = item.rfind(':');
    std::size_t hash = item.rfind('#', colon);
    if (hash == std::string::npos || hash == 0) {
      throw InputError("malformed ref item '" + item + "'");
    }
    RefItem ref;
    ref.term = item.substr(0, hash);
    ref.sense_id = static_cast<int>(parse_number(item.substr(hash + 1, colon - hash - 1)));
    ref.weight = parse_number(item.substr(colon + 1));
    out.push_back(std::move(ref));
  }
  return out;
}

}  // namespace

void write_feature_counts(std::ostream& out, const FeatureCounts& counts) {
  for (const auto& [term, row] : counts.rows()) {
    for (const auto& [feature, count] : row) {
      out << term << '\t' << feature << '\t' << count << '\n';
    }
  }
}

FeatureCounts read_feature_counts(std::istream& in) {
  IngestStats stats;
  std::ostringstream errors;
  FeatureCounts counts = ingest_feature_tsv(in, &stats, &errors);
  if (stats.skipped > 0) {
    throw InputError("feature file is not canonical: " + errors.str());
  }
  return counts;
}

void write_term_graph(std::ostream& out, const TermGraph& graph) {
  for (const auto& [term, neighbors] : graph.edges) {
    for (const auto& [neighbor, sim] : neighbors) {
      out << term << '\t' << neighbor << '\t' << sim << '\n';
    }
  }
}

TermGraph read_term_graph(std::istream& in) {
  TermGraph graph;
  std::string line;
  while (std::getline(in, line)) {
    line = trim_cr(line);
    if (line.empty()) continue;
    auto fields = tsv_fields(line, 3, "term graph");
    graph.edges[fields[0]].emplace_back(fields[1],
                                        static_cast<int>(parse_number(fields[2])));
  }
  return graph;
}

void write_inventory(std::ostream& out, const SenseInventory& inventory, bool with_isas) {
  for (const auto& [word, senses] : inventory.entries) {
    for (const auto& sense : senses) {
      out << word << '\t' << sense.sense_id << '\t' << join_weighted(sense.cluster);
      if (with_isas) out << '\t' << join_weighted(sense.isas);
      out << '\n';
    }
  }
}

SenseInventory read_inventory(std::istream& in, bool with_isas) {
  SenseInventory inventory;
  std::string line;
  while (std::getline(in, line)) {
    line = trim_cr(line);
    if (line.empty()) continue;
    auto fields = tsv_fields(line, with_isas ? 4 : 3, "inventory");
    SenseEntry entry;
    entry.word = fields[0];
    entry.sense_id = static_cast<int>(parse_number(fields[1]));
    entry.cluster = parse_weighted(fields[2]);
    if (with_isas) entry.isas = parse_weighted(fields[3]);
    inventory.entries[entry.word].push_back(std::move(entry));
  }
  for (auto& [word, senses] : inventory.entries) {
    std::sort(senses.begin(), senses.end(),
              [](const SenseEntry& a, const SenseEntry& b) { return a.sense_id < b.sense_id; });
  }
  return inventory;
}

void write_hypernym_db(std::ostream& out, const HypernymDB& db) {
  for (const auto& [hypo, row] : db.rows()) {
    for (const auto& [hyper, freq] : row) {
      out << hypo << '\t' << hyper << '\t' << freq << '\n';
    }
  }
}

HypernymDB read_hypernym_db(std::istream& in) {
  HypernymDB db;
  std::string line;
  while (std::getline(in, line)) {
    line = trim_cr(line);
    if (line.empty()) continue;
    auto fields = tsv_fields(line, 3, "hypernym db");
    db.add(fields[0], fields[1], static_cast<std::uint64_t>(parse_number(fields[2])));
  }
  return db;
}

void write_pcz(std::ostream& out, const std::vector<PczEntry>& entries) {
  for (const auto& entry : entries) {
    out << entry.word << '\t' << entry.sense_id << '\t' << join_refs(entry.cluster) << '\t'
        << join_refs(entry.isas) << '\t' << join_weighted(entry.clues) << '\n';
  }
}

std::vector<PczEntry> read_pcz(std::istream& in) {
  std::vector<PczEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    line = trim_cr(line);
    if (line.empty()) continue;
    auto fields = tsv_fields(line, 5, "pcz");
    PczEntry entry;
    entry.word = fields[0];
    entry.sense_id = static_cast<int>(parse_number(fields[1]));
    entry.cluster = parse_refs(fields[2]);
    entry.isas = parse_refs(fields[3]);
    entry.clues = parse_weighted(fields[4]);
    entries.push_back(std::move(entry));
  }
  return entries;
}

void write_mapping(std::ostream& out, const Mapping& mapping) {
  for (const auto& [sense, link] : mapping.pairs) {
    out << sense << '\t' << link.target << '\t' << fmt_number(link.score) << '\t' << link.phase
        << '\n';
  }
}

Mapping read_mapping(std::istream& in) {
  Mapping mapping;
  std::string line;
  while (std::getline(in, line)) {
    line = trim_cr(line);
    if (line.empty()) continue;
    auto fields = tsv_fields(line, 4, "mapping");
    mapping.pairs[fields[0]] = {fields[1], parse_number(fields[2]), fields[3]};
  }
  return mapping;
}

void write_type_map(std::ostream& out, const TypeMap& types) {
  for (const auto& [sense, ranked] : types.pairs) {
    for (const auto& [type, rank] : ranked) {
      out << sense << '\t' << type << '\t' << fmt_number(rank) << '\n';
    }
  }
}

void write_graph(std::ostream& out, const HypernymGraph& graph) {
  for (const auto& [edge, weight] : graph.edges) {
    out << edge.first << '\t' << edge.second << '\t' << fmt_number(weight) << '\n';
  }
}

HypernymGraph read_graph(std::istream& in) {
  HypernymGraph graph;
  std::string line;
  while (std::getline(in, line)) {
    line = trim_cr(line);
    if (line.empty()) continue;
    auto fields = tsv_fields(line, 3, "graph");
    graph.add_edge(fields[0], fields[1], parse_number(fields[2]));
  }
  return graph;
}

void write_edge_list(std::ostream& out, const EdgeList& edges) {
  for (const auto& [hypo, hyper, weight] : edges) {
    out << hypo << '\t' << hyper << '\t' << fmt_number(weight) << '\n';
  }
}

std::vector<WsdInstance> read_wsd_dataset(std::istream& in) {
  std::vector<WsdInstance> instances;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim_cr(line);
    if (line.empty()) continue;
    auto fields = tsv_fields(line, 5, "wsd dataset");
    WsdInstance instance;
    instance.id = fields[0];
    instance.lemma = fields[1];
    instance.pos = fields[2];
    instance.context = split_ws(fields[3]);
    for (auto& gold : split(fields[4], ',')) {
      if (!gold.empty()) instance.gold.insert(std::move(gold));
    }
    if (instance.gold.empty()) {
      throw InputError("wsd dataset line " + std::to_string(lineno) + ": no gold ids");
    }
    bool target_found = false;
    std::string lemma_lc = lower_ascii(instance.lemma);
    for (const auto& token : instance.context) {
      if (lower_ascii(token) == lemma_lc) {
        target_found = true;
        break;
      }
    }
    if (!target_found) {
      throw InputError("wsd dataset line " + std::to_string(lineno) +
                       ": target lemma missing from context");
    }
    instances.push_back(std::move(instance));
  }
  return instances;
}

void write_decisions(std::ostream& out, const std::map<std::string, std::string>& decisions) {
  for (const auto& [id, decision] : decisions) {
    out << id << '\t' << decision << '\n';
  }
}

void write_scores(std::ostream& out, const WsdScores& scores) {
  out << "precision\t" << fmt_number(scores.precision) << '\n';
  out << "recall\t" << fmt_number(scores.recall) << '\n';
  out << "f1\t" << fmt_number(scores.f1) << '\n';
  out << "attempted\t" << scores.attempted << '\n';
  out << "correct\t" << scores.correct << '\n';
  out << "total\t" << scores.total << '\n';
}

void write_file(const std::string& path, const std::string& contents) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << contents;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  return out;
}

}  // namespace protolex
