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

#ifndef GEOLAT_DESCENT_PATH_H_
#define GEOLAT_DESCENT_PATH_H_

#include <vector>

#include "geolat/coxeter.h"
#include "geolat/labeling.h"

namespace geolat {

// T_i: replaces the descent at rank i of M by the ascent through the rank-2
// interval [x_{i-1}, x_{i+1}]. The new element is x_{i-1} joined with the
// atom labelling x_i < x_{i+1}. Throws InputError if i is not a descent.
MaximalChain apply_t(const FlatsLattice& lattice, const AtomOrder& ord,
                     const MaximalChain& chain, int rank);

struct StraighteningResult {
  Word word;                        // letters in application order
  std::vector<MaximalChain> path;   // word.size() + 1 chains
  MaximalChain terminal() const { return path.back(); }
};

// Moves the smallest remaining label down to its slot, then the next
// smallest, and so on, with T_p, T_{p-1}, ..., T_k. The resulting word is
// reduced and the path ends at the ascending chain.
StraighteningResult straighten(const FlatsLattice& lattice,
                               const AtomOrder& ord, const MaximalChain& chain);

// Atom order listing A(x_1), then A(x_2) \ A(x_1), ... with ascending atom
// index inside each block; under it the chain is the ascending one.
AtomOrder atom_order_for_chain(const FlatsLattice& lattice,
                               const MaximalChain& chain);

// Facet-ridge path from `from` to `to` of length at most C(r,2), obtained by
// straightening `from` under the order that makes `to` ascending. Not
// necessarily shortest.
std::vector<MaximalChain> connect(const FlatsLattice& lattice,
                                  const MaximalChain& from,
                                  const MaximalChain& to);

// Chain of successive joins of the ascending labels taken from the top down;
// its labels are the ascending sequence reversed.
MaximalChain reversal_chain(const FlatsLattice& lattice, const AtomOrder& ord);

}  // namespace geolat

#endif  // GEOLAT_DESCENT_PATH_H_
