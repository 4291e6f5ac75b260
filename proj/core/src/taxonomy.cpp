#include "protolex/taxonomy.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "protolex/error.hpp"

namespace protolex {

void HypernymGraph::add_edge(const std::string& hypo, const std::string& hyper, double weight) {
  nodes.insert(hypo);
  nodes.insert(hyper);
  edges[{hypo, hyper}] += weight;
}

HypernymGraph build_noisy_graph(const std::vector<PczEntry>& pczs) {
  HypernymGraph g;
  for (const auto& entry : pczs) {
    std::string node = sense_key(entry.word, entry.sense_id);
    g.nodes.insert(node);
    for (const auto& isa : entry.isas) {
      g.add_edge(node, sense_key(isa.term, isa.sense_id), isa.weight);
    }
  }
  return g;
}

std::vector<PczEntry> domain_filter(const std::vector<PczEntry>& pcz,
                                    const std::set<std::string>& seeds, bool to_fixed_point) {
  std::set<std::string> available;
  for (const auto& entry : pcz) available.insert(sense_key(entry.word, entry.sense_id));

  std::set<std::string> kept;
  for (const auto& entry : pcz) {
    if (seeds.count(entry.word)) kept.insert(sense_key(entry.word, entry.sense_id));
  }

  while (true) {
    std::set<std::string> expanded = kept;
    for (const auto& entry : pcz) {
      if (!kept.count(sense_key(entry.word, entry.sense_id))) continue;
      for (const auto& ref : entry.cluster) {
        if (ref.sense_id < 0) continue;
        std::string key = sense_key(ref.term, ref.sense_id);
        if (available.count(key)) expanded.insert(key);
      }
    }
    bool grew = expanded.size() > kept.size();
    kept = std::move(expanded);
    if (!to_fixed_point || !grew) break;
  }

  std::vector<PczEntry> out;
  for (const auto& entry : pcz) {
    if (kept.count(sense_key(entry.word, entry.sense_id))) out.push_back(entry);
  }
  return out;
}

namespace {

// Levels on the reference resource: process synsets most-general-first; each
// node's quantity is split into equal shares between the node itself and its
// direct hyponyms, so a child chain decays geometrically and ties only occur
// between siblings.
std::map<std::string, double> reference_levels(const LexicalResource& ref,
                                               double root_injection) {
  auto roots = ref.roots();
  if (roots.empty()) {
    throw InputError("reference resource has no root synset");
  }

  std::map<std::string, std::vector<std::string>> children;  // parent -> hyponyms
  std::map<std::string, int> pending;                        // unprocessed hypernym count
  for (const auto& [id, synset] : ref.synsets()) {
    pending[id] = static_cast<int>(synset.hypernyms.size());
    for (const auto& hid : synset.hypernyms) children[hid].push_back(id);
  }

  std::map<std::string, double> level;
  // Virtual super-root: the injected quantity splits equally over the roots.
  for (const auto& root : roots) {
    level[root] = root_injection / static_cast<double>(roots.size());
  }

  std::set<std::string> ready(roots.begin(), roots.end());
  while (!ready.empty()) {
    std::string node = *ready.begin();
    ready.erase(ready.begin());
    const auto& kids = children[node];
    if (!kids.empty()) {
      double share = level[node] / static_cast<double>(kids.size() + 1);
      for (const auto& kid : kids) level[kid] += share;
    }
    for (const auto& kid : kids) {
      if (--pending[kid] == 0) ready.insert(kid);
    }
  }
  // Synsets stuck in reference cycles keep whatever they accumulated.
  for (const auto& [id, synset] : ref.synsets()) level.emplace(id, 0.0);
  return level;
}

struct Adjacency {
  std::vector<std::string> nodes;           // sorted
  std::map<std::string, int> index;
  std::vector<std::vector<int>> out;        // u -> v edges
  std::vector<std::vector<int>> in;
};

Adjacency adjacency_of(const HypernymGraph& g) {
  Adjacency a;
  a.nodes.assign(g.nodes.begin(), g.nodes.end());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) a.index[a.nodes[i]] = static_cast<int>(i);
  a.out.resize(a.nodes.size());
  a.in.resize(a.nodes.size());
  for (const auto& [edge, w] : g.edges) {
    int u = a.index.at(edge.first);
    int v = a.index.at(edge.second);
    a.out[u].push_back(v);
    a.in[v].push_back(u);
  }
  return a;
}

// Deterministic cycle search: DFS from every node in sorted order, sorted
// neighbor order. Returns the cycle as a list of edges, or empty when acyclic.
std::vector<std::pair<std::string, std::string>> find_cycle(const HypernymGraph& g) {
  Adjacency a = adjacency_of(g);
  for (auto& row : a.out) std::sort(row.begin(), row.end());

  int count = static_cast<int>(a.nodes.size());
  std::vector<int> color(count, 0);  // 0 white, 1 on stack, 2 done
  std::vector<int> parent(count, -1);

  for (int start = 0; start < count; ++start) {
    if (color[start] != 0) continue;
    // Iterative DFS with explicit edge iterators.
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    color[start] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < a.out[node].size()) {
        int to = a.out[node][next++];
        if (color[to] == 1) {
          // Back edge: unwind the stack from `node` up to `to`.
          std::vector<std::pair<std::string, std::string>> cycle;
          std::vector<int> path;
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            path.push_back(it->first);
            if (it->first == to) break;
          }
          std::reverse(path.begin(), path.end());  // to ... node
          for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            cycle.emplace_back(a.nodes[path[i]], a.nodes[path[i + 1]]);
          }
          cycle.emplace_back(a.nodes[node], a.nodes[to]);
          return cycle;
        }
        if (color[to] == 0) {
          color[to] = 1;
          stack.emplace_back(to, 0);
        }
      } else {
        color[node] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

EdgeList diff_edges(const HypernymGraph& before, const HypernymGraph& after) {
  EdgeList removed;
  for (const auto& [edge, w] : before.edges) {
    if (!after.edges.count(edge)) removed.emplace_back(edge.first, edge.second, w);
  }
  return removed;
}

// Removes the minimum-weight edge of the given cycle (ties: lexicographic).
void remove_min_weight_edge(HypernymGraph& g,
                            const std::vector<std::pair<std::string, std::string>>& cycle) {
  const std::pair<std::string, std::string>* victim = nullptr;
  double victim_weight = 0.0;
  for (const auto& edge : cycle) {
    double w = g.edges.at(edge);
    if (victim == nullptr || w < victim_weight ||
        (w == victim_weight && edge < *victim)) {
      victim = &edge;
      victim_weight = w;
    }
  }
  g.edges.erase(*victim);
}

}  // namespace

CmResult contrast_medium(const HypernymGraph& g, const LexicalResource& ref, const Mapping& m,
                         const CmParams& params) {
  CmResult result;
  if (g.nodes.empty()) return result;

  auto ref_levels = reference_levels(ref, params.root_injection);

  Adjacency a = adjacency_of(g);
  int count = static_cast<int>(a.nodes.size());

  // Transfer: linked nodes take their synset's level, the rest start dry.
  std::vector<double> level(count, 0.0);
  for (int i = 0; i < count; ++i) {
    const Mapping::Link* link = m.get(a.nodes[i]);
    if (link == nullptr || link->phase == "self") continue;
    auto it = ref_levels.find(link->target);
    if (it != ref_levels.end()) level[i] = it->second;
  }
  double mass = 0.0;
  for (double l : level) mass += l;
  result.initial_mass = mass;

  // Shaking: each pass blends a node's level with the mean over one edge
  // direction, bulk-synchronously, then rescales back to the original mass.
  std::vector<double> next(count);
  auto renormalize = [&](std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    if (sum > 0.0 && mass > 0.0) {
      double scale = mass / sum;
      for (double& v : values) v *= scale;
    }
    double after = 0.0;
    for (double v : values) after += v;
    result.mass_trace.push_back(after);
  };
  for (int round = 0; round < params.iters; ++round) {
    for (int u = 0; u < count; ++u) {
      if (a.out[u].empty()) {
        next[u] = level[u];
        continue;
      }
      double mean = 0.0;
      for (int v : a.out[u]) mean += level[v];
      mean /= static_cast<double>(a.out[u].size());
      next[u] = (1.0 - params.damping) * level[u] + params.damping * mean;
    }
    level.swap(next);
    renormalize(level);

    for (int v = 0; v < count; ++v) {
      if (a.in[v].empty()) {
        next[v] = level[v];
        continue;
      }
      double mean = 0.0;
      for (int u : a.in[v]) mean += level[u];
      mean /= static_cast<double>(a.in[v].size());
      next[v] = (1.0 - params.damping) * level[v] + params.damping * mean;
    }
    level.swap(next);
    renormalize(level);
  }

  // Pruning: an edge must point from a lower level to a higher one. Edges
  // running strictly downhill are reversed instead of dropped, which cannot
  // disconnect anything; the cycles that survive connect equal-level nodes
  // and lose their lightest edge.
  HypernymGraph pruned;
  pruned.nodes = g.nodes;
  for (const auto& [edge, w] : g.edges) {
    double lu = level[a.index.at(edge.first)];
    double lv = level[a.index.at(edge.second)];
    if (lu > lv) {
      pruned.edges[{edge.second, edge.first}] += w;
    } else {
      pruned.edges[{edge.first, edge.second}] += w;
    }
  }
  while (true) {
    auto cycle = find_cycle(pruned);
    if (cycle.empty()) break;
    remove_min_weight_edge(pruned, cycle);
  }
  if (!is_acyclic(pruned)) {
    throw InvariantError("contrast_medium produced a cyclic graph");
  }

  for (int i = 0; i < count; ++i) result.levels[a.nodes[i]] = level[i];
  result.removed_edges = diff_edges(g, pruned);
  result.taxonomy = std::move(pruned);
  return result;
}

TarjanResult tarjan_prune(const HypernymGraph& g, std::uint64_t seed) {
  TarjanResult result;
  result.taxonomy = g;
  std::mt19937_64 rng(seed);
  while (true) {
    auto cycle = find_cycle(result.taxonomy);
    if (cycle.empty()) break;
    const auto& victim = cycle[rng() % cycle.size()];
    result.taxonomy.edges.erase(victim);
  }
  result.removed_edges = diff_edges(g, result.taxonomy);
  return result;
}

TaxonomyMetrics taxonomy_metrics(const HypernymGraph& system, const HypernymGraph& gold) {
  auto surface_edges = [](const HypernymGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [edge, w] : g.edges) {
      out.emplace(strip_sense_id(edge.first), strip_sense_id(edge.second));
    }
    return out;
  };
  auto sys = surface_edges(system);
  auto gld = surface_edges(gold);

  std::size_t both = 0;
  for (const auto& edge : sys) {
    if (gld.count(edge)) ++both;
  }

  TaxonomyMetrics metrics;
  metrics.edge_precision = sys.empty() ? 0.0 : static_cast<double>(both) / sys.size();
  metrics.edge_recall = gld.empty() ? 0.0 : static_cast<double>(both) / gld.size();
  metrics.f1 = (metrics.edge_precision + metrics.edge_recall) == 0.0
                   ? 0.0
                   : 2.0 * metrics.edge_precision * metrics.edge_recall /
                         (metrics.edge_precision + metrics.edge_recall);
  metrics.is_dag = is_acyclic(system);
  metrics.wcc_delta = static_cast<long>(weakly_connected_components(system)) -
                      static_cast<long>(weakly_connected_components(gold));
  return metrics;
}

bool is_acyclic(const HypernymGraph& g) {
  return find_cycle(g).empty();
}

std::size_t weakly_connected_components(const HypernymGraph& g) {
  std::map<std::string, std::string> parent;
  for (const auto& node : g.nodes) parent[node] = node;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    std::string root = x;
    while (parent[root] != root) root = parent[root];
    std::string cur = x;
    while (parent[cur] != root) {
      std::string next = parent[cur];
      parent[cur] = root;
      cur = next;
    }
    return root;
  };
  for (const auto& [edge, w] : g.edges) {
    std::string a = find(edge.first);
    std::string b = find(edge.second);
    if (a != b) parent[a] = b;
  }
  std::set<std::string> roots;
  for (const auto& node : g.nodes) roots.insert(find(node));
  return roots.size();
}

std::string strip_sense_id(const std::string& node) {
  std::size_t pos = node.rfind('#');
  return pos == std::string::npos ? node : node.substr(0, pos);
}

}  // namespace protolex
