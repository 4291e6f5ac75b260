#include "protolex/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "protolex/align.hpp"
#include "protolex/corpus.hpp"
#include "protolex/dt.hpp"
#include "protolex/error.hpp"
#include "protolex/io.hpp"
#include "protolex/labeling.hpp"
#include "protolex/lexres.hpp"
#include "protolex/pcz.hpp"
#include "protolex/taxonomy.hpp"
#include "protolex/text.hpp"
#include "protolex/wsd.hpp"
#include "protolex/wsi.hpp"

namespace protolex {

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("config key '" + key + "' expects a non-negative integer, got '" +
                     value + "'");
  }
  return std::stoull(value);
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    return parse_number(value);
  } catch (const InputError&) {
    throw UsageError("config key '" + key + "' expects a number, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw UsageError("config key '" + key + "' expects true/false, got '" + value + "'");
}

}  // namespace

void PipelineConfig::set(const std::string& key, const std::string& value) {
  if (key == "corpus") corpus = value;
  else if (key == "corpus_format") corpus_format = value;
  else if (key == "resource") resource = value;
  else if (key == "rank") rank = value;
  else if (key == "wsd_dataset") wsd_dataset = value;
  else if (key == "seeds") seeds = value;
  else if (key == "features") features = value;
  else if (key == "dt") dt = value;
  else if (key == "inventory") inventory = value;
  else if (key == "hypernyms") hypernyms = value;
  else if (key == "labeled") labeled = value;
  else if (key == "pcz") pcz = value;
  else if (key == "mapping") mapping = value;
  else if (key == "types") types = value;
  else if (key == "graph") graph = value;
  else if (key == "taxonomy") taxonomy = value;
  else if (key == "removed_edges") removed_edges = value;
  else if (key == "decisions") decisions = value;
  else if (key == "scores") scores = value;
  else if (key == "p") p = parse_u64(key, value);
  else if (key == "max_words_per_feature") max_words_per_feature = parse_u64(key, value);
  else if (key == "K") K = parse_u64(key, value);
  else if (key == "N") N = parse_u64(key, value);
  else if (key == "n") n = parse_u64(key, value);
  else if (key == "seed") seed = parse_u64(key, value);
  else if (key == "min_cluster_size") min_cluster_size = parse_u64(key, value);
  else if (key == "max_cw_iterations") max_cw_iterations = parse_u64(key, value);
  else if (key == "max_clues") max_clues = parse_u64(key, value);
  else if (key == "max_isas") max_isas = parse_u64(key, value);
  else if (key == "th") th = parse_real(key, value);
  else if (key == "m") m = parse_u64(key, value);
  else if (key == "top_h") top_h = parse_u64(key, value);
  else if (key == "cm_iters") cm_iters = parse_u64(key, value);
  else if (key == "cm_damping") cm_damping = parse_real(key, value);
  else if (key == "taxonomy_method") taxonomy_method = value;
  else if (key == "domain_fixed_point") domain_fixed_point = parse_bool(key, value);
  else if (key == "wsd_mode") wsd_mode = value;
  else if (key == "wsd_weighted_overlap") wsd_weighted_overlap = parse_bool(key, value);
  else if (key == "threads") threads = parse_u64(key, value);
  else throw UsageError("unknown config key '" + key + "'");
}

void PipelineConfig::validate() const {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw UsageError("invalid config: " + msg);
  };
  require(corpus_format == "auto" || corpus_format == "text" || corpus_format == "tsv",
          "corpus_format must be auto, text, or tsv");
  require(p >= 1, "p must be >= 1");
  require(max_words_per_feature >= 1, "max_words_per_feature must be >= 1");
  require(K >= 1, "K must be >= 1");
  require(N >= 1, "N must be >= 1");
  require(n >= 1, "n must be >= 1");
  require(min_cluster_size >= 1, "min_cluster_size must be >= 1");
  require(max_cw_iterations >= 1, "max_cw_iterations must be >= 1");
  require(max_clues >= 1, "max_clues must be >= 1");
  require(th >= 0.0, "th must be >= 0");
  require(m >= 1, "m must be >= 1");
  require(top_h >= 1, "top_h must be >= 1");
  require(cm_damping >= 0.0 && cm_damping <= 1.0, "cm_damping must be in [0,1]");
  require(taxonomy_method == "cm" || taxonomy_method == "tarjan",
          "taxonomy_method must be cm or tarjan");
  require(parse_repr_mode(wsd_mode).has_value(),
          "wsd_mode must be base, base+related, or base+related+context");
  require(threads >= 1, "threads must be >= 1");
}

std::string PipelineConfig::resolved() const {
  std::map<std::string, std::string> kv = {
      {"corpus", corpus},
      {"corpus_format", corpus_format},
      {"resource", resource},
      {"rank", rank},
      {"wsd_dataset", wsd_dataset},
      {"seeds", seeds},
      {"features", features},
      {"dt", dt},
      {"inventory", inventory},
      {"hypernyms", hypernyms},
      {"labeled", labeled},
      {"pcz", pcz},
      {"mapping", mapping},
      {"types", types},
      {"graph", graph},
      {"taxonomy", taxonomy},
      {"removed_edges", removed_edges},
      {"decisions", decisions},
      {"scores", scores},
      {"p", std::to_string(p)},
      {"max_words_per_feature", std::to_string(max_words_per_feature)},
      {"K", std::to_string(K)},
      {"N", std::to_string(N)},
      {"n", std::to_string(n)},
      {"seed", std::to_string(seed)},
      {"min_cluster_size", std::to_string(min_cluster_size)},
      {"max_cw_iterations", std::to_string(max_cw_iterations)},
      {"max_clues", std::to_string(max_clues)},
      {"max_isas", std::to_string(max_isas)},
      {"th", fmt_number(th)},
      {"m", std::to_string(m)},
      {"top_h", std::to_string(top_h)},
      {"cm_iters", std::to_string(cm_iters)},
      {"cm_damping", fmt_number(cm_damping)},
      {"taxonomy_method", taxonomy_method},
      {"domain_fixed_point", domain_fixed_point ? "true" : "false"},
      {"wsd_mode", wsd_mode},
      {"wsd_weighted_overlap", wsd_weighted_overlap ? "true" : "false"},
      {"threads", std::to_string(threads)},
  };
  std::string out;
  for (const auto& [key, value] : kv) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

PipelineConfig PipelineConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file: " + path);
  PipelineConfig config;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    config.set(line.substr(0, eq), line.substr(eq + 1));
  }
  return config;
}

const std::vector<std::string> kStages = {"ingest", "dt",  "wsi", "label",    "pcz",
                                          "link",   "type", "wsd", "taxonomy", "all"};

bool known_stage(const std::string& stage) {
  for (const auto& s : kStages) {
    if (s == stage) return true;
  }
  return false;
}

namespace {

void require_input(const std::string& path, const char* what) {
  if (path.empty()) {
    throw InputError(std::string("missing required input: no ") + what + " configured");
  }
  if (!std::filesystem::exists(path)) {
    throw InputError(std::string("missing required input file for ") + what + ": " + path);
  }
}

std::string effective_corpus_format(const PipelineConfig& config) {
  if (config.corpus_format != "auto") return config.corpus_format;
  return config.corpus.ends_with(".tsv") ? "tsv" : "text";
}

void write_snapshot(const PipelineConfig& config, const std::string& primary_output) {
  std::filesystem::path dir = std::filesystem::path(primary_output).parent_path();
  std::string path = (dir.empty() ? std::filesystem::path(".") : dir) / "config.resolved";
  write_file(path, config.resolved());
}

std::vector<TokenizedSentence> read_corpus_sentences(const PipelineConfig& config) {
  auto in = open_input(config.corpus);
  std::vector<TokenizedSentence> sentences;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    sentences.push_back(parse_tokenized_line(line));
  }
  return sentences;
}

ProfileSet profiles_from_features(const PipelineConfig& config) {
  auto in = open_input(config.features);
  FeatureCounts counts = read_feature_counts(in);
  return build_profiles(counts, config.p, config.max_words_per_feature);
}

void stage_ingest(const PipelineConfig& config) {
  require_input(config.corpus, "corpus");
  auto in = open_input(config.corpus);
  FeatureCounts counts;
  if (effective_corpus_format(config) == "tsv") {
    IngestStats stats;
    counts = ingest_feature_tsv(in, &stats, &std::cerr);
  } else {
    counts = ingest_tokenized_text(in);
  }
  std::ostringstream out;
  write_feature_counts(out, counts);
  write_file(config.features, out.str());
  write_snapshot(config, config.features);
}

void stage_dt(const PipelineConfig& config) {
  require_input(config.features, "features");
  ProfileSet profiles = profiles_from_features(config);
  TermGraph graph = build_dt(profiles, config.K, static_cast<int>(config.threads));
  std::ostringstream out;
  write_term_graph(out, graph);
  write_file(config.dt, out.str());
  write_snapshot(config, config.dt);
}

void stage_wsi(const PipelineConfig& config) {
  require_input(config.dt, "dt");
  auto in = open_input(config.dt);
  TermGraph graph = read_term_graph(in);
  WsiParams params;
  params.N = config.N;
  params.n = config.n;
  params.seed = config.seed;
  params.min_cluster_size = config.min_cluster_size;
  params.max_iterations = static_cast<int>(config.max_cw_iterations);
  SenseInventory inventory = induce_senses(graph, params, static_cast<int>(config.threads));
  std::ostringstream out;
  write_inventory(out, inventory, /*with_isas=*/false);
  write_file(config.inventory, out.str());
  write_snapshot(config, config.inventory);
}

void stage_label(const PipelineConfig& config) {
  require_input(config.inventory, "inventory");
  HypernymDB db;
  if (effective_corpus_format(config) == "text") {
    require_input(config.corpus, "corpus");
    for (const auto& sentence : read_corpus_sentences(config)) {
      scan_hearst(sentence, db);
    }
  } else {
    std::cerr << "label: corpus is a feature table, the hypernym database will be empty\n";
  }
  {
    std::ostringstream out;
    write_hypernym_db(out, db);
    write_file(config.hypernyms, out.str());
  }
  auto in = open_input(config.inventory);
  SenseInventory inventory = read_inventory(in, /*with_isas=*/false);
  label_inventory(inventory, db, config.max_isas);
  std::ostringstream out;
  write_inventory(out, inventory, /*with_isas=*/true);
  write_file(config.labeled, out.str());
  write_snapshot(config, config.hypernyms);
}

void stage_pcz(const PipelineConfig& config) {
  require_input(config.labeled, "labeled inventory");
  require_input(config.features, "features");
  auto in = open_input(config.labeled);
  SenseInventory labeled = read_inventory(in, /*with_isas=*/true);
  std::vector<PczEntry> entries =
      build_pcz(labeled, nullptr, static_cast<int>(config.threads));
  ProfileSet profiles = profiles_from_features(config);
  attach_context_clues(entries, labeled, profiles, config.max_clues);
  std::ostringstream out;
  write_pcz(out, entries);
  write_file(config.pcz, out.str());
  write_snapshot(config, config.pcz);
}

void stage_link(const PipelineConfig& config) {
  require_input(config.pcz, "pcz");
  require_input(config.resource, "resource");
  auto in = open_input(config.pcz);
  std::vector<PczEntry> entries = read_pcz(in);
  LexicalResource resource = LexicalResource::load(config.resource, config.rank);
  Mapping mapping = link(entries, resource, config.th, static_cast<int>(config.m),
                         static_cast<int>(config.threads));
  std::ostringstream out;
  write_mapping(out, mapping);
  write_file(config.mapping, out.str());
  auto [coverage, extra] = coverage_metrics(mapping, resource);
  std::cerr << "link: coverage=" << fmt_number(coverage)
            << " extra_coverage=" << fmt_number(extra) << "\n";
  write_snapshot(config, config.mapping);
}

void stage_type(const PipelineConfig& config) {
  require_input(config.mapping, "mapping");
  require_input(config.pcz, "pcz");
  require_input(config.resource, "resource");
  auto min = open_input(config.mapping);
  Mapping mapping = read_mapping(min);
  auto pin = open_input(config.pcz);
  std::vector<PczEntry> entries = read_pcz(pin);
  LexicalResource resource = LexicalResource::load(config.resource, config.rank);
  TypeMap types = type_unmapped(mapping, entries, resource, static_cast<int>(config.top_h));
  std::ostringstream out;
  write_type_map(out, types);
  write_file(config.types, out.str());
  write_snapshot(config, config.types);
}

void stage_wsd(const PipelineConfig& config) {
  require_input(config.wsd_dataset, "wsd dataset");
  require_input(config.resource, "resource");
  require_input(config.pcz, "pcz");
  require_input(config.mapping, "mapping");
  auto din = open_input(config.wsd_dataset);
  std::vector<WsdInstance> instances = read_wsd_dataset(din);
  LexicalResource resource = LexicalResource::load(config.resource, config.rank);
  auto pin = open_input(config.pcz);
  std::vector<PczEntry> entries = read_pcz(pin);
  auto min = open_input(config.mapping);
  Mapping mapping = read_mapping(min);

  ReprMode mode = *parse_repr_mode(config.wsd_mode);
  std::map<std::string, SenseRepresentation> cache;
  auto repr_for = [&](const Synset& synset) -> const SenseRepresentation& {
    auto it = cache.find(synset.id);
    if (it == cache.end()) {
      it = cache
               .emplace(synset.id, build_sense_repr(synset, mode, entries, mapping, resource,
                                                    config.max_clues))
               .first;
    }
    return it->second;
  };

  std::map<std::string, std::string> decisions;
  for (const auto& instance : instances) {
    auto candidates = resource.get_senses(instance.lemma, instance.pos);
    if (candidates.empty() && !instance.pos.empty()) {
      candidates = resource.get_senses(instance.lemma);
    }
    std::vector<SenseRepresentation> reprs;
    reprs.reserve(candidates.size());
    for (const Synset* synset : candidates) reprs.push_back(repr_for(*synset));
    auto decision = lesk(instance, reprs, config.wsd_weighted_overlap);
    decisions[instance.id] = decision.value_or(kAbstain);
  }

  {
    std::ostringstream out;
    write_decisions(out, decisions);
    write_file(config.decisions, out.str());
  }
  WsdScores result = evaluate(instances, decisions);
  std::ostringstream out;
  write_scores(out, result);
  write_file(config.scores, out.str());
  write_snapshot(config, config.decisions);
}

void stage_taxonomy(const PipelineConfig& config) {
  require_input(config.pcz, "pcz");
  auto pin = open_input(config.pcz);
  std::vector<PczEntry> entries = read_pcz(pin);
  if (!config.seeds.empty()) {
    std::set<std::string> seeds;
    for (auto& seed : split(config.seeds, ',')) {
      if (!seed.empty()) seeds.insert(std::move(seed));
    }
    entries = domain_filter(entries, seeds, config.domain_fixed_point);
  }
  HypernymGraph noisy = build_noisy_graph(entries);
  {
    std::ostringstream out;
    write_graph(out, noisy);
    write_file(config.graph, out.str());
  }

  HypernymGraph cleaned;
  EdgeList removed;
  if (config.taxonomy_method == "cm") {
    require_input(config.resource, "resource");
    require_input(config.mapping, "mapping");
    LexicalResource resource = LexicalResource::load(config.resource, config.rank);
    auto min = open_input(config.mapping);
    Mapping mapping = read_mapping(min);
    CmParams params;
    params.iters = static_cast<int>(config.cm_iters);
    params.damping = config.cm_damping;
    CmResult result = contrast_medium(noisy, resource, mapping, params);
    cleaned = std::move(result.taxonomy);
    removed = std::move(result.removed_edges);
  } else {
    TarjanResult result = tarjan_prune(noisy, config.seed);
    cleaned = std::move(result.taxonomy);
    removed = std::move(result.removed_edges);
  }
  {
    std::ostringstream out;
    write_graph(out, cleaned);
    write_file(config.taxonomy, out.str());
  }
  std::ostringstream out;
  write_edge_list(out, removed);
  write_file(config.removed_edges, out.str());
  write_snapshot(config, config.taxonomy);
}

}  // namespace

void run_stage(const std::string& stage, const PipelineConfig& config) {
  config.validate();
  if (stage == "ingest") stage_ingest(config);
  else if (stage == "dt") stage_dt(config);
  else if (stage == "wsi") stage_wsi(config);
  else if (stage == "label") stage_label(config);
  else if (stage == "pcz") stage_pcz(config);
  else if (stage == "link") stage_link(config);
  else if (stage == "type") stage_type(config);
  else if (stage == "wsd") stage_wsd(config);
  else if (stage == "taxonomy") stage_taxonomy(config);
  else if (stage == "all") {
    stage_ingest(config);
    stage_dt(config);
    stage_wsi(config);
    stage_label(config);
    stage_pcz(config);
    stage_link(config);
    stage_type(config);
    if (!config.wsd_dataset.empty()) stage_wsd(config);
    stage_taxonomy(config);
  } else {
    throw UsageError("unknown stage '" + stage + "'");
  }
}

}  // namespace protolex
