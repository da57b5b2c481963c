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

#ifndef GEOLAT_COXETER_H_
#define GEOLAT_COXETER_H_

#include <string>
#include <utility>
#include <vector>

namespace geolat {

// Words in the adjacent transpositions s_i = (i, i+1) of S_r. Words act on
// positions: reading left to right, s_i swaps whatever wires currently sit
// at positions i and i+1.

// images[k] = pi(k+1).
struct Permutation {
  std::vector<int> images;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

struct Word {
  std::vector<int> letters;  // generator indices, each in 1..r-1
  friend bool operator==(const Word&, const Word&) = default;
};

// Unordered pair of wire labels, first < second.
using Transposition = std::pair<int, int>;

Permutation identity_permutation(int r);
Permutation longest_element(int r);
// (a o b)(k) = a(b(k)).
Permutation compose(const Permutation& a, const Permutation& b);

Permutation evaluate(const Word& w, int r);
int inversions(const Permutation& p);
std::vector<Transposition> reflection_sequence(const Word& w, int r);
// No repeated reflection, i.e. no pair of wires crosses twice.
bool is_reduced(const Word& w, int r);
// Independent check: length equals the inversion count of the permutation.
bool is_reduced_by_length(const Word& w, int r);

struct WiringDiagram {
  int wires = 0;
  std::vector<Transposition> crossings;  // per step, wire labels crossing
  std::vector<int> positions_crossed;    // per step, the upper position i
  std::vector<int> final_order;          // wire labels top to bottom
  std::vector<Transposition> double_crossings;  // pairs crossing twice
  std::string render() const;
};

WiringDiagram wiring_diagram(const Word& w, int r);

// "1,2,3,1,2,1" <-> {1,2,3,1,2,1}; the empty string is the empty word.
Word parse_word(const std::string& text, int r);
std::string to_string(const Word& w);

}  // namespace geolat

#endif  // GEOLAT_COXETER_H_
