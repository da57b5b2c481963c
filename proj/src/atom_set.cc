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

#include "geolat/atom_set.h"

#include <algorithm>
#include <sstream>

namespace geolat {

AtomSet AtomSet::from_atoms(const std::vector<int>& atoms) {
  AtomSet s;
  for (int a : atoms) {
    if (a < 1 || a > kMaxGroundSize) {
      throw InputError("atom index " + std::to_string(a) + " out of range");
    }
    s = s.with(a);
  }
  return s;
}

std::vector<int> AtomSet::atoms() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string AtomSet::to_string() const {
  std::string out;
  for (int a : atoms()) {
    if (!out.empty()) out += ',';
    out += std::to_string(a);
  }
  return out;
}

bool lex_less(AtomSet a, AtomSet b) {
  const auto x = a.atoms();
  const auto y = b.atoms();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

AtomSet parse_atom_set(const std::string& text, int n) {
  AtomSet s;
  if (text.empty()) return s;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    int atom = 0;
    try {
      std::size_t used = 0;
      atom = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError("bad atom '" + token + "' in '" + text + "'");
    }
    if (atom < 1 || atom > n) {
      throw InputError("atom " + std::to_string(atom) + " outside 1.." +
                       std::to_string(n));
    }
    s = s.with(atom);
  }
  return s;
}

}  // namespace geolat
