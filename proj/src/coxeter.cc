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

#include "geolat/coxeter.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "geolat/atom_set.h"

namespace geolat {
namespace {

void check_word(const Word& w, int r) {
  for (int i : w.letters) {
    if (i < 1 || i >= r) {
      throw InputError("generator s_" + std::to_string(i) +
                       " out of range for S_" + std::to_string(r));
    }
  }
}

}  // namespace

Permutation identity_permutation(int r) {
  Permutation p;
  for (int k = 1; k <= r; ++k) p.images.push_back(k);
  return p;
}

Permutation longest_element(int r) {
  Permutation p;
  for (int k = r; k >= 1; --k) p.images.push_back(k);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out;
  for (int x : b.images) out.images.push_back(a.images[x - 1]);
  return out;
}

Permutation evaluate(const Word& w, int r) {
  check_word(w, r);
  Permutation p = identity_permutation(r);
  for (int i : w.letters) std::swap(p.images[i - 1], p.images[i]);
  return p;
}

int inversions(const Permutation& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    for (std::size_t j = i + 1; j < p.images.size(); ++j) {
      if (p.images[i] > p.images[j]) ++count;
    }
  }
  return count;
}

std::vector<Transposition> reflection_sequence(const Word& w, int r) {
  check_word(w, r);
  std::vector<int> wires = identity_permutation(r).images;
  std::vector<Transposition> out;
  for (int i : w.letters) {
    const int a = wires[i - 1];
    const int b = wires[i];
    out.emplace_back(std::min(a, b), std::max(a, b));
    std::swap(wires[i - 1], wires[i]);
  }
  return out;
}

bool is_reduced(const Word& w, int r) {
  std::set<Transposition> seen;
  for (const auto& t : reflection_sequence(w, r)) {
    if (!seen.insert(t).second) return false;
  }
  return true;
}

bool is_reduced_by_length(const Word& w, int r) {
  return static_cast<int>(w.letters.size()) == inversions(evaluate(w, r));
}

WiringDiagram wiring_diagram(const Word& w, int r) {
  check_word(w, r);
  WiringDiagram d;
  d.wires = r;
  d.final_order = identity_permutation(r).images;
  std::set<Transposition> seen;
  std::set<Transposition> doubled;
  for (int i : w.letters) {
    const int a = d.final_order[i - 1];
    const int b = d.final_order[i];
    const Transposition t{std::min(a, b), std::max(a, b)};
    d.crossings.push_back(t);
    d.positions_crossed.push_back(i);
    if (!seen.insert(t).second) doubled.insert(t);
    std::swap(d.final_order[i - 1], d.final_order[i]);
  }
  d.double_crossings.assign(doubled.begin(), doubled.end());
  return d;
}

std::string WiringDiagram::render() const {
  // Wire rows sit on even lines, gaps between them on odd lines. Each step
  // is a 3-column cell; a crossing at position i draws an X between rows.
  const int lines = 2 * wires - 1;
  std::vector<std::string> grid(lines);
  int label_width = static_cast<int>(std::to_string(wires).size());
  for (int row = 0; row < lines; ++row) {
    if (row % 2 == 0) {
      std::string label = std::to_string(row / 2 + 1);
      grid[row] = std::string(label_width - label.size(), ' ') + label + " -";
    } else {
      grid[row] = std::string(label_width + 2, ' ');
    }
  }
  for (int i : positions_crossed) {
    const int top = 2 * (i - 1);
    for (int row = 0; row < lines; ++row) {
      if (row == top) {
        grid[row] += "\\ /-";
      } else if (row == top + 1) {
        grid[row] += " X  ";
      } else if (row == top + 2) {
        grid[row] += "/ \\-";
      } else if (row % 2 == 0) {
        grid[row] += "----";
      } else {
        grid[row] += "    ";
      }
    }
  }
  std::string out;
  for (int row = 0; row < lines; ++row) {
    if (row % 2 == 0) {
      grid[row] += "- " + std::to_string(final_order[row / 2]);
    }
    while (!grid[row].empty() && grid[row].back() == ' ') grid[row].pop_back();
    out += grid[row] + "\n";
  }
  return out;
}

Word parse_word(const std::string& text, int r) {
  Word w;
  if (text.empty()) return w;
  if (text.back() == ',') throw InputError("empty generator in word '" + text + "'");
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw InputError("empty generator in word '" + text + "'");
    try {
      std::size_t used = 0;
      w.letters.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError("bad generator '" + token + "' in word '" + text + "'");
    }
  }
  check_word(w, r);
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (int i : w.letters) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

}  // namespace geolat
