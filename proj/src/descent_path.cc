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

#include "geolat/descent_path.h"

#include <algorithm>
#include <stdexcept>

namespace geolat {

MaximalChain apply_t(const FlatsLattice& lattice, const AtomOrder& ord,
                     const MaximalChain& chain, int rank) {
  const int r = chain.length();
  if (rank < 1 || rank >= r) {
    throw InputError("T_" + std::to_string(rank) + " out of range 1.." +
                     std::to_string(r - 1));
  }
  const int below = minimal_label(lattice, ord, chain.flats[rank - 1],
                                  chain.flats[rank]);
  const int above = minimal_label(lattice, ord, chain.flats[rank],
                                  chain.flats[rank + 1]);
  if (!ord.less(above, below)) {
    throw InputError("no descent at rank " + std::to_string(rank));
  }
  MaximalChain next = chain;
  next.flats[rank] =
      lattice.join(chain.flats[rank - 1], lattice.atom_flat(above));
  return next;
}

StraighteningResult straighten(const FlatsLattice& lattice,
                               const AtomOrder& ord,
                               const MaximalChain& chain) {
  StraighteningResult result;
  result.path.push_back(chain);
  const int r = chain.length();
  for (int k = 1; k <= r; ++k) {
    const LabelSequence seq = label_sequence(lattice, ord, result.path.back());
    // 1-based position of the least label among positions k..r.
    int p = k;
    for (int q = k + 1; q <= r; ++q) {
      if (ord.less(seq.labels[q - 1], seq.labels[p - 1])) p = q;
    }
    for (int i = p - 1; i >= k; --i) {
      result.path.push_back(apply_t(lattice, ord, result.path.back(), i));
      result.word.letters.push_back(i);
    }
  }
  return result;
}

AtomOrder atom_order_for_chain(const FlatsLattice& lattice,
                               const MaximalChain& chain) {
  std::vector<int> order;
  for (int k = 1; k <= chain.length(); ++k) {
    for (int a : (lattice.atom_set(chain.flats[k]) -
                  lattice.atom_set(chain.flats[k - 1]))
                     .atoms()) {
      order.push_back(a);
    }
  }
  return AtomOrder(std::move(order));
}

std::vector<MaximalChain> connect(const FlatsLattice& lattice,
                                  const MaximalChain& from,
                                  const MaximalChain& to) {
  const AtomOrder ord = atom_order_for_chain(lattice, to);
  StraighteningResult s = straighten(lattice, ord, from);
  if (s.terminal() != to) {
    throw std::logic_error("straightening did not reach the target chain");
  }
  return std::move(s.path);
}

MaximalChain reversal_chain(const FlatsLattice& lattice, const AtomOrder& ord) {
  const LabelSequence ascending =
      label_sequence(lattice, ord, ascending_chain(lattice, ord));
  MaximalChain chain{{lattice.bottom()}};
  for (auto it = ascending.labels.rbegin(); it != ascending.labels.rend();
       ++it) {
    chain.flats.push_back(
        lattice.join(chain.flats.back(), lattice.atom_flat(*it)));
  }
  LabelSequence expected = ascending;
  std::reverse(expected.labels.begin(), expected.labels.end());
  if (!is_saturated_chain(lattice, chain, true) ||
      label_sequence(lattice, ord, chain) != expected) {
    throw std::logic_error("reversal chain does not carry the reversed labels");
  }
  return chain;
}

}  // namespace geolat
