// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GEOLAT_CHAIN_GRAPH_H_
#define GEOLAT_CHAIN_GRAPH_H_

#include <map>
#include <optional>
#include <vector>

#include "geolat/labeling.h"

namespace geolat {

// Facet-ridge incidence graph of the order complex: one vertex per maximal
// chain, an edge between chains that differ in exactly one interior element.
// Chains include the bottom and top; every facet contains both, so the
// adjacency is the same as for the proper part.
class FacetRidgeGraph {
 public:
  int size() const { return static_cast<int>(chains_.size()); }
  const std::vector<MaximalChain>& chains() const { return chains_; }
  const MaximalChain& chain(int v) const { return chains_[v]; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int a, int b) const;
  std::optional<int> index_of(const MaximalChain& chain) const;
  std::size_t edge_count() const;

 private:
  friend FacetRidgeGraph build_facet_ridge_graph(const FlatsLattice&,
                                                 const Limits&);
  std::vector<MaximalChain> chains_;
  std::vector<std::vector<int>> adjacency_;  // sorted
  std::map<std::vector<int>, int> index_;
};

FacetRidgeGraph build_facet_ridge_graph(const FlatsLattice& lattice,
                                        const Limits& limits = {});

// Directed edge M -> M' replacing the descent (j, i) at `rank` by the ascent
// (i, j') of the rank-2 interval around it.
struct GlexEdge {
  int from;
  int to;
  int rank;        // position of the descent, 1..r-1
  int upper;       // j: label below the replaced element in M
  int lower;       // i
  int new_upper;   // j': label above the new element in M'
};

class GlexGraph {
 public:
  int size() const { return static_cast<int>(chains_.size()); }
  const std::vector<MaximalChain>& chains() const { return chains_; }
  const MaximalChain& chain(int v) const { return chains_[v]; }
  const std::vector<GlexEdge>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  const AtomOrder& order() const { return order_; }
  // Vertex of the ascending chain.
  int sink() const { return sink_; }
  std::size_t edge_count() const;
  std::vector<LabelSequence> labels() const { return labels_; }
  const LabelSequence& label(int v) const { return labels_[v]; }

 private:
  friend GlexGraph build_glex(const FlatsLattice&, const AtomOrder&,
                              const Limits&);
  explicit GlexGraph(AtomOrder ord) : order_(std::move(ord)) {}
  AtomOrder order_;
  std::vector<MaximalChain> chains_;
  std::vector<LabelSequence> labels_;
  std::vector<std::vector<GlexEdge>> out_;  // sorted by rank
  std::vector<std::vector<int>> in_;
  int sink_ = -1;
};

GlexGraph build_glex(const FlatsLattice& lattice, const AtomOrder& ord,
                     const Limits& limits = {});

// Unweighted BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const FacetRidgeGraph& graph, int source);
int distance(const FacetRidgeGraph& graph, int a, int b);

struct Diameter {
  int value = 0;
  int from = 0;  // witness pair, smallest in canonical order
  int to = 0;
};

// All-pairs BFS. Throws std::runtime_error naming the component count if
// the graph is disconnected.
Diameter diameter(const FacetRidgeGraph& graph);
int connected_components(const FacetRidgeGraph& graph);

// Shortest directed distance from every vertex to the sink; -1 if the sink
// is unreachable.
std::vector<int> directed_distances_to_sink(const GlexGraph& graph);
int directed_distance_to_sink(const GlexGraph& graph, int v);

struct Eccentricity {
  int value = 0;
  int vertex = 0;  // first vertex attaining the maximum
};
Eccentricity max_directed_eccentricity(const GlexGraph& graph);

// True if the directed graph has no cycle (Kahn's algorithm).
bool is_acyclic(const GlexGraph& graph);

// Facet-ridge edges {u, v} carrying no G_lex edge in either direction yet
// leading from u to a vertex strictly closer to the sink in G_lex. Reported
// as a statistic only.
int shortcut_edge_count(const FacetRidgeGraph& graph, const GlexGraph& glex);

inline int binomial2(int r) { return r * (r - 1) / 2; }

}  // namespace geolat

#endif  // GEOLAT_CHAIN_GRAPH_H_
