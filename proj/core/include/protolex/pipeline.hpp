#ifndef PROTOLEX_PIPELINE_HPP
#define PROTOLEX_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace protolex {

// Every run parameter and file path of the batch pipeline. String fields map
// 1:1 onto config-file keys and CLI overrides.
struct PipelineConfig {
  // inputs
  std::string corpus;
  std::string corpus_format = "auto";  // auto | text | tsv
  std::string resource;
  std::string rank;
  std::string wsd_dataset;
  std::string seeds;  // comma-separated domain seed terms; empty = no filter

  // stage outputs
  std::string features = "out/features.tsv";
  std::string dt = "out/dt.tsv";
  std::string inventory = "out/inventory.tsv";
  std::string hypernyms = "out/hypernyms.tsv";
  std::string labeled = "out/labeled.tsv";
  std::string pcz = "out/pcz.tsv";
  std::string mapping = "out/mapping.tsv";
  std::string types = "out/types.tsv";
  std::string graph = "out/graph.tsv";
  std::string taxonomy = "out/taxonomy.tsv";
  std::string removed_edges = "out/removed_edges.tsv";
  std::string decisions = "out/decisions.tsv";
  std::string scores = "out/scores.tsv";

  // parameters
  std::uint64_t p = 1000;                  // features kept per word
  std::uint64_t max_words_per_feature = 1000;
  std::uint64_t K = 200;                   // DT neighbors per term
  std::uint64_t N = 200;                   // ego-network size
  std::uint64_t n = 200;                   // connectivity of ego nodes
  std::uint64_t seed = 0;
  std::uint64_t min_cluster_size = 2;
  std::uint64_t max_cw_iterations = 20;
  std::uint64_t max_clues = 5000;
  std::uint64_t max_isas = 5;
  double th = 0.0;                         // linking similarity threshold
  std::uint64_t m = 5;                     // linking iterations
  std::uint64_t top_h = 1;                 // types kept per unmapped sense
  std::uint64_t cm_iters = 10;
  double cm_damping = 0.5;
  std::string taxonomy_method = "cm";      // cm | tarjan
  bool domain_fixed_point = false;
  std::string wsd_mode = "base+related+context";
  bool wsd_weighted_overlap = true;
  std::uint64_t threads = 1;

  /// Applies `key=value`; unknown keys or unparsable values are usage errors.
  void set(const std::string& key, const std::string& value);
  /// Range-checks every parameter; throws UsageError before anything runs.
  void validate() const;
  /// Sorted key=value view, written as the provenance snapshot.
  std::string resolved() const;

  static PipelineConfig from_file(const std::string& path);
};

extern const std::vector<std::string> kStages;
bool known_stage(const std::string& stage);

// Runs one pipeline stage (or "all"). Outputs are byte-deterministic in the
// inputs, the config, and the seed. A resolved-config snapshot lands next to
// the stage's primary output.
void run_stage(const std::string& stage, const PipelineConfig& config);

}  // namespace protolex

#endif
