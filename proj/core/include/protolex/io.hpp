#ifndef PROTOLEX_IO_HPP
#define PROTOLEX_IO_HPP

#include <fstream>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "protolex/align.hpp"
#include "protolex/corpus.hpp"
#include "protolex/dt.hpp"
#include "protolex/labeling.hpp"
#include "protolex/pcz.hpp"
#include "protolex/taxonomy.hpp"
#include "protolex/wsd.hpp"
#include "protolex/wsi.hpp"

// TSV serialization for every pipeline artifact. All writers emit
// deterministic, sorted output with '\n' line endings so identical inputs
// produce byte-identical files.

namespace protolex {

void write_feature_counts(std::ostream& out, const FeatureCounts& counts);
FeatureCounts read_feature_counts(std::istream& in);

/// `term<TAB>neighbor<TAB>similarity`, sorted by (term, -similarity, neighbor).
void write_term_graph(std::ostream& out, const TermGraph& graph);
TermGraph read_term_graph(std::istream& in);

// `word<TAB>sense_id<TAB>rel1:sim1,...`; the labeled variant appends an isas
// column `hyp1:score1,...`.
void write_inventory(std::ostream& out, const SenseInventory& inventory, bool with_isas);
SenseInventory read_inventory(std::istream& in, bool with_isas);

/// `hyponym<TAB>hypernym<TAB>freq`.
void write_hypernym_db(std::ostream& out, const HypernymDB& db);
HypernymDB read_hypernym_db(std::istream& in);

// `word<TAB>sense_id<TAB>cluster<TAB>isas<TAB>clues` with cluster/isas items
// `term#senseid:weight` and clue items `feature:weight`. Separators inside
// feature strings are not escaped; items split on the last ':' / '#'.
void write_pcz(std::ostream& out, const std::vector<PczEntry>& entries);
std::vector<PczEntry> read_pcz(std::istream& in);

/// `pcz_sense<TAB>target<TAB>score<TAB>phase`.
void write_mapping(std::ostream& out, const Mapping& mapping);
Mapping read_mapping(std::istream& in);

/// `pcz_sense<TAB>type_synset<TAB>rank`.
void write_type_map(std::ostream& out, const TypeMap& types);

/// `hyponym<TAB>hypernym<TAB>weight`.
void write_graph(std::ostream& out, const HypernymGraph& graph);
HypernymGraph read_graph(std::istream& in);
void write_edge_list(std::ostream& out, const EdgeList& edges);

/// `instance_id<TAB>lemma<TAB>pos<TAB>context tokens<TAB>gold ids`.
std::vector<WsdInstance> read_wsd_dataset(std::istream& in);
void write_decisions(std::ostream& out, const std::map<std::string, std::string>& decisions);
void write_scores(std::ostream& out, const WsdScores& scores);

// Path-based convenience wrappers; open failures raise InputError naming the
// file.
void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);
std::ifstream open_input(const std::string& path);
std::ofstream open_output(const std::string& path);

}  // namespace protolex

#endif
