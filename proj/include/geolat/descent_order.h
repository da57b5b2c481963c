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

#ifndef GEOLAT_DESCENT_ORDER_H_
#define GEOLAT_DESCENT_ORDER_H_

#include <string>
#include <utility>
#include <vector>

#include "geolat/chain_graph.h"
#include "geolat/labeling.h"

namespace geolat {

struct PolygonMove {
  int rank;
  MaximalChain result;
};

// One move per descent: x_i is replaced by the interior of the ascending
// chain of [x_{i-1}, x_{i+1}].
std::vector<PolygonMove> polygon_moves(const FlatsLattice& lattice,
                                       const AtomOrder& ord,
                                       const MaximalChain& chain);

// Maximal chain descent order: the transitive closure of polygon moves,
// with v >= u whenever a move leads from v to u.
class DescentOrder {
 public:
  int size() const { return static_cast<int>(chains_.size()); }
  const std::vector<MaximalChain>& chains() const { return chains_; }
  // Directed move edges (from, to), sorted.
  const std::vector<std::pair<int, int>>& moves() const { return moves_; }
  // Cover relations (upper, lower) of the closure, sorted.
  const std::vector<std::pair<int, int>>& hasse_edges() const { return hasse_; }
  // v >= u in the order (reflexive).
  bool above(int v, int u) const;
  int minimum() const { return minimum_; }

 private:
  friend DescentOrder build_descent_order(const FlatsLattice&,
                                          const AtomOrder&, const Limits&);
  std::vector<MaximalChain> chains_;
  std::vector<std::pair<int, int>> moves_;
  std::vector<std::pair<int, int>> hasse_;
  std::vector<std::vector<std::uint64_t>> reach_;  // bitset rows
  int minimum_ = -1;
};

// The closure is stored as a dense bitset matrix.
inline constexpr int kMaxDescentOrderChains = 50'000;

// Throws std::runtime_error if the closure is not antisymmetric.
DescentOrder build_descent_order(const FlatsLattice& lattice,
                                 const AtomOrder& ord,
                                 const Limits& limits = {});

struct HasseGlexReport {
  std::vector<std::pair<int, int>> only_in_hasse;
  std::vector<std::pair<int, int>> only_in_glex;
  bool equal() const { return only_in_hasse.empty() && only_in_glex.empty(); }
};

HasseGlexReport check_hasse_equals_glex(const FlatsLattice& lattice,
                                        const AtomOrder& ord,
                                        const Limits& limits = {});
HasseGlexReport compare_hasse_glex(const DescentOrder& order,
                                   const GlexGraph& glex);

}  // namespace geolat

#endif  // GEOLAT_DESCENT_ORDER_H_
