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

#ifndef GEOLAT_MATROID_H_
#define GEOLAT_MATROID_H_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geolat/atom_set.h"

namespace geolat {

struct UniformSource {
  int rank;
};

struct GraphicSource {
  int vertices;
  std::vector<std::pair<int, int>> edges;  // 1-based vertex indices
};

struct LinearSource {
  int prime;
  std::vector<std::vector<int>> vectors;  // reduced mod prime
};

struct FlatsSource {
  std::vector<AtomSet> flats;
};

using MatroidSource =
    std::variant<UniformSource, GraphicSource, LinearSource, FlatsSource>;

// A simple matroid on atoms 1..n. The rank of every subset is tabulated at
// construction, so rank() and closure() are table lookups. Immutable.
class Matroid {
 public:
  int size() const { return n_; }
  AtomSet ground() const { return AtomSet::full(n_); }
  // Rank of the whole ground set.
  int rank() const { return rank(ground()); }
  int rank(AtomSet s) const { return rank_[s.bits()]; }
  // {x : r(s + x) = r(s)}.
  AtomSet closure(AtomSet s) const;
  bool is_flat(AtomSet s) const { return closure(s) == s; }
  const MatroidSource& source() const { return source_; }
  std::string kind() const;

 private:
  friend Matroid make_uniform(int, int, const Limits&);
  friend Matroid make_graphic(int, const std::vector<std::pair<int, int>>&,
                              const Limits&);
  friend Matroid make_linear(int, const std::vector<std::vector<int>>&,
                             const Limits&);
  friend Matroid make_from_flats(int, const std::vector<AtomSet>&,
                                 const Limits&);

  Matroid(int n, MatroidSource source, std::vector<std::uint8_t> rank)
      : n_(n), source_(std::move(source)), rank_(std::move(rank)) {}

  int n_;
  MatroidSource source_;
  std::vector<std::uint8_t> rank_;  // indexed by AtomSet bits
};

// U_{k,n}: r(S) = min(|S|, k). Requires 2 <= k <= n <= cap.
Matroid make_uniform(int k, int n, const Limits& limits = {});

// Cycle matroid of a simple graph on vertices 1..V; atom i is edge i.
Matroid make_graphic(int vertices,
                     const std::vector<std::pair<int, int>>& edges,
                     const Limits& limits = {});

// Column matroid of the given vectors over GF(p), p in {2,3,5,7}.
Matroid make_linear(int prime, const std::vector<std::vector<int>>& vectors,
                    const Limits& limits = {});

// Matroid whose flats are exactly the listed sets. The list must contain the
// empty set and the full ground set, be intersection-closed, and form a
// geometric lattice; otherwise InputError names the failure.
Matroid make_from_flats(int n, const std::vector<AtomSet>& flats,
                        const Limits& limits = {});

// Rank of a vector family over GF(p) by elimination.
int rank_mod_p(std::vector<std::vector<int>> rows, int prime);

// Result of checking the rank axioms.
struct RankAxiomReport {
  bool normalized = true;     // r(empty) = 0
  bool unit_increase = true;  // r(S) <= r(S+x) <= r(S)+1
  bool submodular = true;
  bool simple = true;  // r({x}) = 1, r({x,y}) = 2
  bool exhaustive = true;  // false when submodularity was sampled
  std::string witness;     // first failure, if any
  bool ok() const { return normalized && unit_increase && submodular && simple; }
};

// Exhaustive over all subset pairs when n <= 8; otherwise unit increase is
// still exhaustive and submodularity uses `samples` seeded random pairs.
RankAxiomReport check_rank_axioms(const Matroid& m, std::uint64_t seed = 1,
                                  int samples = 10'000);

}  // namespace geolat

#endif  // GEOLAT_MATROID_H_
