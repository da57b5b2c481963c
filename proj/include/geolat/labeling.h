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

#ifndef GEOLAT_LABELING_H_
#define GEOLAT_LABELING_H_

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "geolat/flats_lattice.h"

namespace geolat {

// A total order on atoms 1..n.
class AtomOrder {
 public:
  // order[k] is the (k+1)-th smallest atom. Must be a permutation of 1..n.
  explicit AtomOrder(std::vector<int> order);
  static AtomOrder natural(int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  // 0-based ordinal of an atom.
  int position(int atom) const { return position_[atom]; }
  bool less(int a, int b) const { return position_[a] < position_[b]; }
  std::string to_string() const;  // "4,3,1,2"

  friend bool operator==(const AtomOrder& a, const AtomOrder& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<int> order_;
  std::vector<int> position_;  // indexed by atom, slot 0 unused
};

AtomOrder parse_atom_order(const std::string& text, int n);

// Saturated chain x_0 < x_1 < ... < x_k given by lattice indices. For a
// maximal chain x_0 is the bottom and x_k the top.
struct MaximalChain {
  std::vector<int> flats;
  int length() const { return static_cast<int>(flats.size()) - 1; }
  friend auto operator<=>(const MaximalChain&, const MaximalChain&) = default;
};

// Labels of consecutive covers, stored as raw atoms.
struct LabelSequence {
  std::vector<int> labels;
  friend bool operator==(const LabelSequence&, const LabelSequence&) = default;
};

std::string to_string(const LabelSequence& seq);  // "(4,3,1)"

// Edge labeling of cover relations: (lower, upper) -> atom.
using EdgeLabeler = std::function<int(int, int)>;

// The ord-least atom of A(v) \ A(u). Requires u covered by v.
int minimal_label(const FlatsLattice& lattice, const AtomOrder& ord, int u,
                  int v);
EdgeLabeler minimal_labeler(const FlatsLattice& lattice, const AtomOrder& ord);

LabelSequence label_sequence(const FlatsLattice& lattice, const AtomOrder& ord,
                             const MaximalChain& chain);
LabelSequence label_sequence(const EdgeLabeler& label,
                             const MaximalChain& chain);

// Checks that consecutive entries are covers and, when `maximal`, that the
// chain runs bottom to top.
bool is_saturated_chain(const FlatsLattice& lattice, const MaximalChain& chain,
                        bool maximal);

// All saturated chains from lo to hi, lexicographic in lattice indices.
std::vector<MaximalChain> enumerate_saturated_chains(
    const FlatsLattice& lattice, int lo, int hi, std::size_t cap);
std::vector<MaximalChain> enumerate_maximal_chains(const FlatsLattice& lattice,
                                                   const Limits& limits = {});

// 1-based positions i with label_i > label_{i+1} under ord.
std::vector<int> descents(const LabelSequence& seq, const AtomOrder& ord);
bool is_ascending(const LabelSequence& seq, const AtomOrder& ord);
// Strict lexicographic comparison under ord.
bool lex_less(const LabelSequence& a, const LabelSequence& b,
              const AtomOrder& ord);
// Inversion pairs of the sequence under ord.
int inversions(const LabelSequence& seq, const AtomOrder& ord);

// Greedy ascending chain of [lo, hi]: always step to the cover with the
// least label.
MaximalChain ascending_chain(const FlatsLattice& lattice, const AtomOrder& ord,
                             const Interval& interval);
MaximalChain ascending_chain(const FlatsLattice& lattice, const AtomOrder& ord);

struct ElViolation {
  int lo;
  int hi;
  int ascending_chains;  // number of weakly ascending saturated chains
  std::string detail;
};

struct ElReport {
  int intervals_checked = 0;
  std::vector<ElViolation> violations;  // sorted by (lo, hi)
  bool ok() const { return violations.empty(); }
};

// For every interval [u, v]: exactly one weakly ascending saturated chain,
// and its label sequence is strictly lex-smallest in the interval.
ElReport verify_el(const FlatsLattice& lattice, const EdgeLabeler& label,
                   const AtomOrder& ord, const Limits& limits = {});
ElReport verify_el(const FlatsLattice& lattice, const AtomOrder& ord,
                   const Limits& limits = {});

// Chain text: semicolon-separated flats, each a comma-separated atom list;
// the bottom is the empty token, e.g. ";4;3,4;1,2,3,4".
std::string format_chain(const FlatsLattice& lattice,
                         const MaximalChain& chain);
MaximalChain parse_chain(const FlatsLattice& lattice, const std::string& text);

}  // namespace geolat

#endif  // GEOLAT_LABELING_H_
