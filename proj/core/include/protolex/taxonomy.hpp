#ifndef PROTOLEX_TAXONOMY_HPP
#define PROTOLEX_TAXONOMY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "protolex/align.hpp"
#include "protolex/lexres.hpp"
#include "protolex/pcz.hpp"

namespace protolex {

// Directed hypernym graph (hyponym -> hypernym). Cycles and multiple
// inheritance are expected on input; the pruners below turn it into a DAG.
struct HypernymGraph {
  std::set<std::string> nodes;
  std::map<std::pair<std::string, std::string>, double> edges;

  void add_edge(const std::string& hypo, const std::string& hyper, double weight);
  std::size_t edge_count() const { return edges.size(); }
};

using EdgeList = std::vector<std::tuple<std::string, std::string, double>>;

/// Union of the hypernym links of all PCZ entries; duplicate edges sum weights.
HypernymGraph build_noisy_graph(const std::vector<PczEntry>& pczs);

// Keeps every sense whose word is a seed plus every sense referenced from a
// kept sense's related list. One expansion round by default; with
// to_fixed_point the expansion repeats until stable.
std::vector<PczEntry> domain_filter(const std::vector<PczEntry>& pcz,
                                    const std::set<std::string>& seeds,
                                    bool to_fixed_point = false);

struct CmParams {
  int iters = 10;
  double damping = 0.5;          // blend factor of the neighbor mean per shake
  double root_injection = 1.0;   // quantity injected at the reference root(s)
};

struct CmResult {
  HypernymGraph taxonomy;
  std::map<std::string, double> levels;   // final node levels
  double initial_mass = 0.0;              // total level right after transfer
  std::vector<double> mass_trace;         // total level after each renormalization
  EdgeList removed_edges;                 // input edges absent from the output
};

// Taxonomy cleaning driven by a reference resource:
//  1. levels on the reference: the root quantity splits equally between a
//     node and its hyponym children, accumulating downward, so specific
//     synsets end up with strictly less than their ancestors;
//  2. graph nodes linked in the mapping take their synset's level, others 0;
//  3. `iters` rounds of damped-mean shaking, alternating a pass over outgoing
//     and a pass over incoming edges, each followed by renormalization back
//     to the post-transfer total mass;
//  4. edges pointing from a higher to a strictly lower level are reversed
//     (they contradict the induced order); remaining cycles run between
//     equal-level nodes and lose their minimum-weight edge until none is
//     left. Reversal rather than deletion keeps weak connectivity intact.
CmResult contrast_medium(const HypernymGraph& g, const LexicalResource& ref, const Mapping& m,
                         const CmParams& params);

struct TarjanResult {
  HypernymGraph taxonomy;
  EdgeList removed_edges;
};

// Baseline cleaner: find a cycle, delete one of its edges at random, repeat
// until acyclic.
TarjanResult tarjan_prune(const HypernymGraph& g, std::uint64_t seed);

struct TaxonomyMetrics {
  double edge_precision = 0.0;
  double edge_recall = 0.0;
  double f1 = 0.0;
  bool is_dag = false;
  long wcc_delta = 0;  // wcc(system) - wcc(gold)
};

// Edge-set precision/recall after stripping sense ids from node names, plus a
// DAG flag for the system graph.
TaxonomyMetrics taxonomy_metrics(const HypernymGraph& system, const HypernymGraph& gold);

bool is_acyclic(const HypernymGraph& g);
std::size_t weakly_connected_components(const HypernymGraph& g);

/// "mouse#1" -> "mouse"; nodes without a sense id pass through.
std::string strip_sense_id(const std::string& node);

}  // namespace protolex

#endif
