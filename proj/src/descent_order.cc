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

#include "geolat/descent_order.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace geolat {

std::vector<PolygonMove> polygon_moves(const FlatsLattice& lattice,
                                       const AtomOrder& ord,
                                       const MaximalChain& chain) {
  std::vector<PolygonMove> moves;
  const LabelSequence seq = label_sequence(lattice, ord, chain);
  for (int i : descents(seq, ord)) {
    const MaximalChain local = ascending_chain(
        lattice, ord, lattice.interval(chain.flats[i - 1], chain.flats[i + 1]));
    MaximalChain next;
    next.flats.assign(chain.flats.begin(), chain.flats.begin() + i);
    next.flats.insert(next.flats.end(), local.flats.begin() + 1,
                      local.flats.end() - 1);
    next.flats.insert(next.flats.end(), chain.flats.begin() + i + 1,
                      chain.flats.end());
    moves.push_back({i, std::move(next)});
  }
  return moves;
}

bool DescentOrder::above(int v, int u) const {
  return (reach_[v][u / 64] >> (u % 64)) & 1u;
}

DescentOrder build_descent_order(const FlatsLattice& lattice,
                                 const AtomOrder& ord, const Limits& limits) {
  DescentOrder order;
  order.chains_ = enumerate_maximal_chains(lattice, limits);
  const int count = order.size();
  if (count > kMaxDescentOrderChains) {
    throw ResourceError("descent order needs a " + std::to_string(count) +
                        "-square reachability matrix; limit is " +
                        std::to_string(kMaxDescentOrderChains) + " chains");
  }
  std::map<std::vector<int>, int> index;
  for (int v = 0; v < count; ++v) index.emplace(order.chains_[v].flats, v);

  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < count; ++v) {
    for (const auto& move : polygon_moves(lattice, ord, order.chains_[v])) {
      const int u = index.at(move.result.flats);
      out[v].push_back(u);
      order.moves_.emplace_back(v, u);
    }
    std::sort(out[v].begin(), out[v].end());
    out[v].erase(std::unique(out[v].begin(), out[v].end()), out[v].end());
  }
  std::sort(order.moves_.begin(), order.moves_.end());

  // Reachability by repeated relaxation in reverse topological order; a
  // cycle shows up as a vertex that never becomes ready.
  const std::size_t words = (count + 63) / 64;
  order.reach_.assign(count, std::vector<std::uint64_t>(words, 0));
  std::vector<int> pending(count);
  std::vector<std::vector<int>> in(count);
  for (int v = 0; v < count; ++v) {
    pending[v] = static_cast<int>(out[v].size());
    for (int u : out[v]) in[u].push_back(v);
  }
  std::vector<int> ready;
  for (int v = 0; v < count; ++v) {
    if (pending[v] == 0) ready.push_back(v);
  }
  int done = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++done;
    auto& row = order.reach_[v];
    row[v / 64] |= std::uint64_t{1} << (v % 64);
    for (int u : out[v]) {
      for (std::size_t w = 0; w < words; ++w) row[w] |= order.reach_[u][w];
    }
    for (int p : in[v]) {
      if (--pending[p] == 0) ready.push_back(p);
    }
  }
  if (done != count) {
    throw std::runtime_error(
        "polygon moves contain a cycle; the closure is not antisymmetric");
  }
  for (int v = 0; v < count; ++v) {
    for (int u = 0; u < count; ++u) {
      if (u != v && order.above(v, u) && order.above(u, v)) {
        throw std::runtime_error("closure is not antisymmetric");
      }
    }
  }
  // Transitive reduction: a move v -> u is a cover unless another move
  // out of v already reaches u.
  for (int v = 0; v < count; ++v) {
    for (int u : out[v]) {
      const bool shortcut = std::any_of(out[v].begin(), out[v].end(), [&](int w) {
        return w != u && order.above(w, u);
      });
      if (!shortcut) order.hasse_.emplace_back(v, u);
    }
  }
  std::sort(order.hasse_.begin(), order.hasse_.end());
  for (int v = 0; v < count; ++v) {
    if (out[v].empty()) {
      if (order.minimum_ >= 0) {
        throw std::runtime_error("descent order has two minimal elements");
      }
      order.minimum_ = v;
    }
  }
  return order;
}

HasseGlexReport compare_hasse_glex(const DescentOrder& order,
                                   const GlexGraph& glex) {
  std::vector<std::pair<int, int>> glex_edges;
  for (int v = 0; v < glex.size(); ++v) {
    for (const auto& e : glex.out_edges(v)) glex_edges.emplace_back(e.from, e.to);
  }
  std::sort(glex_edges.begin(), glex_edges.end());
  HasseGlexReport report;
  const auto& hasse = order.hasse_edges();
  std::set_difference(hasse.begin(), hasse.end(), glex_edges.begin(),
                      glex_edges.end(),
                      std::back_inserter(report.only_in_hasse));
  std::set_difference(glex_edges.begin(), glex_edges.end(), hasse.begin(),
                      hasse.end(), std::back_inserter(report.only_in_glex));
  return report;
}

HasseGlexReport check_hasse_equals_glex(const FlatsLattice& lattice,
                                        const AtomOrder& ord,
                                        const Limits& limits) {
  return compare_hasse_glex(build_descent_order(lattice, ord, limits),
                            build_glex(lattice, ord, limits));
}

}  // namespace geolat
