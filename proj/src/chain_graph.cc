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

#include "geolat/chain_graph.h"

#include <algorithm>
#include <deque>
#include <future>
#include <stdexcept>
#include <thread>

namespace geolat {

bool FacetRidgeGraph::adjacent(int a, int b) const {
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::optional<int> FacetRidgeGraph::index_of(const MaximalChain& chain) const {
  auto it = index_.find(chain.flats);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FacetRidgeGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& adj : adjacency_) total += adj.size();
  return total / 2;
}

FacetRidgeGraph build_facet_ridge_graph(const FlatsLattice& lattice,
                                        const Limits& limits) {
  FacetRidgeGraph graph;
  graph.chains_ = enumerate_maximal_chains(lattice, limits);
  const int count = graph.size();
  graph.adjacency_.assign(count, {});
  for (int v = 0; v < count; ++v) graph.index_.emplace(graph.chains_[v].flats, v);
  const int r = lattice.rank();
  // Chains sharing everything but rank i fall in the same bucket.
  for (int i = 1; i < r; ++i) {
    std::map<std::vector<int>, std::vector<int>> buckets;
    for (int v = 0; v < count; ++v) {
      std::vector<int> key = graph.chains_[v].flats;
      key[i] = -1;
      buckets[std::move(key)].push_back(v);
    }
    for (const auto& [key, members] : buckets) {
      for (int a : members) {
        for (int b : members) {
          if (a != b) graph.adjacency_[a].push_back(b);
        }
      }
    }
  }
  for (auto& adj : graph.adjacency_) std::sort(adj.begin(), adj.end());
  return graph;
}

std::size_t GlexGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& out : out_) total += out.size();
  return total;
}

GlexGraph build_glex(const FlatsLattice& lattice, const AtomOrder& ord,
                     const Limits& limits) {
  GlexGraph graph(ord);
  graph.chains_ = enumerate_maximal_chains(lattice, limits);
  const int count = graph.size();
  std::map<std::vector<int>, int> index;
  for (int v = 0; v < count; ++v) {
    index.emplace(graph.chains_[v].flats, v);
    graph.labels_.push_back(label_sequence(lattice, ord, graph.chains_[v]));
  }
  graph.out_.assign(count, {});
  graph.in_.assign(count, {});
  for (int v = 0; v < count; ++v) {
    const MaximalChain& m = graph.chains_[v];
    const LabelSequence& seq = graph.labels_[v];
    if (is_ascending(seq, ord)) {
      if (graph.sink_ >= 0) {
        throw std::runtime_error("labeling has two ascending maximal chains");
      }
      graph.sink_ = v;
    }
    for (int i : descents(seq, ord)) {
      const Interval around = lattice.interval(m.flats[i - 1], m.flats[i + 1]);
      const MaximalChain local = ascending_chain(lattice, ord, around);
      MaximalChain next = m;
      next.flats[i] = local.flats[1];
      const int to = index.at(next.flats);
      graph.out_[v].push_back({v, to, i, seq.labels[i - 1], seq.labels[i],
                               minimal_label(lattice, ord, next.flats[i],
                                             next.flats[i + 1])});
      graph.in_[to].push_back(v);
    }
  }
  if (graph.sink_ < 0 && count > 0) {
    throw std::runtime_error("labeling has no ascending maximal chain");
  }
  for (auto& in : graph.in_) std::sort(in.begin(), in.end());
  return graph;
}

std::vector<int> bfs_distances(const FacetRidgeGraph& graph, int source) {
  std::vector<int> dist(graph.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : graph.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int distance(const FacetRidgeGraph& graph, int a, int b) {
  return bfs_distances(graph, a)[b];
}

int connected_components(const FacetRidgeGraph& graph) {
  std::vector<int> seen(graph.size(), 0);
  int components = 0;
  for (int s = 0; s < graph.size(); ++s) {
    if (seen[s]) continue;
    ++components;
    for (int v = 0; auto d : bfs_distances(graph, s)) {
      if (d >= 0) seen[v] = 1;
      ++v;
    }
  }
  return components;
}

Diameter diameter(const FacetRidgeGraph& graph) {
  const int count = graph.size();
  if (count == 0) return {};
  const int workers = std::max(
      1, std::min<int>(static_cast<int>(std::thread::hardware_concurrency()),
                       count));
  // Each worker scans a strided slice of sources; ties keep the smallest
  // (from, to), so the merged result does not depend on scheduling.
  auto scan = [&](int first) {
    Diameter best{-1, 0, 0};
    for (int s = first; s < count; s += workers) {
      const auto dist = bfs_distances(graph, s);
      for (int t = 0; t < count; ++t) {
        if (dist[t] < 0) {
          throw std::runtime_error(
              "facet-ridge graph is disconnected (" +
              std::to_string(connected_components(graph)) + " components)");
        }
        if (dist[t] > best.value) best = {dist[t], s, t};
      }
    }
    return best;
  };
  std::vector<std::future<Diameter>> parts;
  for (int w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, scan, w));
  }
  Diameter best{-1, 0, 0};
  for (auto& part : parts) {
    const Diameter d = part.get();
    if (d.value > best.value ||
        (d.value == best.value &&
         std::pair(d.from, d.to) < std::pair(best.from, best.to))) {
      best = d;
    }
  }
  return best;
}

std::vector<int> directed_distances_to_sink(const GlexGraph& graph) {
  std::vector<int> dist(graph.size(), -1);
  if (graph.sink() < 0) return dist;
  std::deque<int> queue{graph.sink()};
  dist[graph.sink()] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : graph.in_neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

int directed_distance_to_sink(const GlexGraph& graph, int v) {
  return directed_distances_to_sink(graph)[v];
}

Eccentricity max_directed_eccentricity(const GlexGraph& graph) {
  const auto dist = directed_distances_to_sink(graph);
  Eccentricity best{-1, 0};
  for (int v = 0; v < graph.size(); ++v) {
    if (dist[v] < 0) {
      throw std::runtime_error("G_lex vertex " + std::to_string(v) +
                               " cannot reach the ascending chain");
    }
    if (dist[v] > best.value) best = {dist[v], v};
  }
  return best;
}

bool is_acyclic(const GlexGraph& graph) {
  std::vector<int> indegree(graph.size(), 0);
  for (int v = 0; v < graph.size(); ++v) {
    for (const auto& e : graph.out_edges(v)) ++indegree[e.to];
  }
  std::deque<int> ready;
  for (int v = 0; v < graph.size(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int visited = 0;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    ++visited;
    for (const auto& e : graph.out_edges(v)) {
      if (--indegree[e.to] == 0) ready.push_back(e.to);
    }
  }
  return visited == graph.size();
}

int shortcut_edge_count(const FacetRidgeGraph& graph, const GlexGraph& glex) {
  const auto dist = directed_distances_to_sink(glex);
  auto has_edge = [&](int a, int b) {
    const auto& out = glex.out_edges(a);
    return std::any_of(out.begin(), out.end(),
                       [&](const GlexEdge& e) { return e.to == b; });
  };
  int count = 0;
  for (int u = 0; u < graph.size(); ++u) {
    for (int v : graph.neighbors(u)) {
      if (!has_edge(u, v) && !has_edge(v, u) && dist[v] < dist[u]) ++count;
    }
  }
  return count;
}

}  // namespace geolat
