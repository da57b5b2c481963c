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

#ifndef GEOLAT_TESTS_FIXTURES_H_
#define GEOLAT_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "geolat/flats_lattice.h"
#include "geolat/labeling.h"
#include "geolat/matroid.h"

namespace geolat::fixture {

inline Matroid boolean(int r) { return make_uniform(r, r); }
inline Matroid u34() { return make_uniform(3, 4); }
inline Matroid k4() {
  return make_graphic(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
}

// Four points in the plane, three of them (1, 2, 4) on a line.
inline std::vector<AtomSet> three_point_line_flats() {
  std::vector<AtomSet> out;
  for (const auto& f : std::vector<std::vector<int>>{
           {}, {1}, {2}, {3}, {4}, {1, 3}, {2, 3}, {3, 4}, {1, 2, 4},
           {1, 2, 3, 4}}) {
    out.push_back(AtomSet::from_atoms(f));
  }
  return out;
}
inline Matroid three_point_line() {
  return make_from_flats(4, three_point_line_flats());
}
inline Matroid three_point_line_linear() {
  return make_linear(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
}

inline MaximalChain chain(const FlatsLattice& lattice,
                          const std::string& text) {
  return parse_chain(lattice, text);
}

}  // namespace geolat::fixture

#endif  // GEOLAT_TESTS_FIXTURES_H_
