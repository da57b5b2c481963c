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

#ifndef GEOLAT_FLATS_LATTICE_H_
#define GEOLAT_FLATS_LATTICE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "geolat/atom_set.h"
#include "geolat/matroid.h"

namespace geolat {

class Interval;

// A finite lattice whose elements are sets of ground atoms, ordered by
// containment. Elements ("flats") are indexed in canonical order: by rank,
// then by lexicographic order of the sorted atom list. Flat 0 is the bottom
// and the last flat is the top.
//
// Built either from a matroid (the lattice of flats) or from an explicit
// intersection-closed family of sets. The second route also admits
// non-geometric posets so that verify_geometric can report on them.
class FlatsLattice {
 public:
  static FlatsLattice from_matroid(const Matroid& m, const Limits& limits = {});
  // Sets must be distinct, contain a unique minimum and maximum and be
  // closed under intersection; rank is the longest chain length from the
  // minimum.
  static FlatsLattice from_sets(int ground_size, std::vector<AtomSet> sets);

  int ground_size() const { return n_; }
  int size() const { return static_cast<int>(flats_.size()); }
  int rank() const { return rank_.back(); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  AtomSet flat(int u) const { return flats_[u]; }
  // A(u): the atoms below u.
  AtomSet atom_set(int u) const { return flats_[u]; }
  int rank_of(int u) const { return rank_[u]; }
  const std::vector<int>& covers_up(int u) const { return up_[u]; }
  const std::vector<int>& covers_down(int u) const { return down_[u]; }
  bool covers(int u, int v) const;  // u is covered by v
  bool leq(int u, int v) const { return flats_[u].subset_of(flats_[v]); }
  std::optional<int> index_of(AtomSet s) const;

  // Smallest element containing every atom of s.
  int closure_of(AtomSet s) const;
  int join(int u, int v) const;
  int meet(int u, int v) const;

  // Rank-1 elements, in canonical order.
  std::vector<int> atoms() const;
  // Rank-1 element whose atom set is {a}; InputError if absent.
  int atom_flat(int a) const;
  // All element indices with the given rank.
  std::vector<int> rank_level(int k) const;

  Interval interval(int lo, int hi) const;

 private:
  FlatsLattice() = default;
  void finish();  // builds covers_down, index and join/meet tables
  int compute_join(int u, int v) const;
  int compute_meet(int u, int v) const;
  std::size_t tri(int u, int v) const;

  int n_ = 0;
  std::vector<AtomSet> flats_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::unordered_map<std::uint32_t, int> index_;
  // Memoized when size() <= kMemoLimit; lower-triangular, u >= v.
  std::vector<std::uint16_t> join_table_;
  std::vector<std::uint16_t> meet_table_;

 public:
  static constexpr int kMemoLimit = 4096;
};

// The closed interval [lo, hi] with covers inherited from the lattice.
class Interval {
 public:
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  // Lattice indices of the members, in canonical order.
  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int u) const;
  // Upper covers of u that stay inside the interval.
  std::vector<int> covers_up(int u) const;
  // The interval as a standalone lattice on the sets f \ lo.
  FlatsLattice as_lattice() const;

 private:
  friend class FlatsLattice;
  const FlatsLattice* lattice_ = nullptr;
  int lo_ = 0;
  int hi_ = 0;
  std::vector<int> elements_;
};

struct AxiomResult {
  bool passed = true;
  std::string witness;
};

struct GeometricReport {
  AxiomResult bounded;
  AxiomResult graded;
  AxiomResult atomic;
  AxiomResult semimodular;
  bool ok() const {
    return bounded.passed && graded.passed && atomic.passed &&
           semimodular.passed;
  }
  // Name of the first failing axiom, or "" when all pass.
  std::string first_failure() const;
};

GeometricReport verify_geometric(const FlatsLattice& lattice);

}  // namespace geolat

#endif  // GEOLAT_FLATS_LATTICE_H_
