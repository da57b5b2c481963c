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

#include "geolat/labeling.h"

#include <algorithm>
#include <sstream>

namespace geolat {

AtomOrder::AtomOrder(std::vector<int> order) : order_(std::move(order)) {
  const int n = size();
  position_.assign(n + 1, -1);
  for (int k = 0; k < n; ++k) {
    const int a = order_[k];
    if (a < 1 || a > n || position_[a] != -1) {
      throw InputError("atom order is not a permutation of 1.." +
                       std::to_string(n));
    }
    position_[a] = k;
  }
}

AtomOrder AtomOrder::natural(int n) {
  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) order[k] = k + 1;
  return AtomOrder(std::move(order));
}

std::string AtomOrder::to_string() const {
  std::string out;
  for (int a : order_) {
    if (!out.empty()) out += ',';
    out += std::to_string(a);
  }
  return out;
}

AtomOrder parse_atom_order(const std::string& text, int n) {
  std::vector<int> order;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      order.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw InputError("bad atom '" + token + "' in order '" + text + "'");
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw InputError("atom order must list all " + std::to_string(n) +
                     " atoms");
  }
  return AtomOrder(std::move(order));
}

std::string to_string(const LabelSequence& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq.labels[i]);
  }
  return out + ")";
}

int minimal_label(const FlatsLattice& lattice, const AtomOrder& ord, int u,
                  int v) {
  if (!lattice.covers(u, v)) {
    throw InputError("{" + lattice.flat(u).to_string() +
                     "} is not covered by {" + lattice.flat(v).to_string() +
                     "}");
  }
  const std::vector<int> fresh =
      (lattice.atom_set(v) - lattice.atom_set(u)).atoms();
  return *std::min_element(fresh.begin(), fresh.end(),
                           [&](int a, int b) { return ord.less(a, b); });
}

EdgeLabeler minimal_labeler(const FlatsLattice& lattice, const AtomOrder& ord) {
  return [&lattice, ord](int u, int v) {
    return minimal_label(lattice, ord, u, v);
  };
}

LabelSequence label_sequence(const EdgeLabeler& label,
                             const MaximalChain& chain) {
  LabelSequence seq;
  for (int k = 0; k < chain.length(); ++k) {
    seq.labels.push_back(label(chain.flats[k], chain.flats[k + 1]));
  }
  return seq;
}

LabelSequence label_sequence(const FlatsLattice& lattice, const AtomOrder& ord,
                             const MaximalChain& chain) {
  LabelSequence seq;
  for (int k = 0; k < chain.length(); ++k) {
    seq.labels.push_back(
        minimal_label(lattice, ord, chain.flats[k], chain.flats[k + 1]));
  }
  return seq;
}

bool is_saturated_chain(const FlatsLattice& lattice, const MaximalChain& chain,
                        bool maximal) {
  if (chain.flats.empty()) return false;
  for (int u : chain.flats) {
    if (u < 0 || u >= lattice.size()) return false;
  }
  for (int k = 0; k < chain.length(); ++k) {
    if (!lattice.covers(chain.flats[k], chain.flats[k + 1])) return false;
  }
  return !maximal || (chain.flats.front() == lattice.bottom() &&
                      chain.flats.back() == lattice.top());
}

std::vector<MaximalChain> enumerate_saturated_chains(
    const FlatsLattice& lattice, int lo, int hi, std::size_t cap) {
  std::vector<MaximalChain> out;
  std::vector<int> path{lo};
  // Iterative DFS; covers_up lists are sorted, so output is lexicographic.
  std::vector<std::size_t> next{0};
  while (!path.empty()) {
    const int u = path.back();
    if (u == hi) {
      if (out.size() >= cap) {
        throw ResourceError("saturated chain count exceeds cap of " +
                            std::to_string(cap));
      }
      out.push_back({path});
      path.pop_back();
      next.pop_back();
      continue;
    }
    const auto& ups = lattice.covers_up(u);
    std::size_t& i = next.back();
    while (i < ups.size() && !lattice.leq(ups[i], hi)) ++i;
    if (i == ups.size()) {
      path.pop_back();
      next.pop_back();
      continue;
    }
    path.push_back(ups[i++]);
    next.push_back(0);
  }
  return out;
}

std::vector<MaximalChain> enumerate_maximal_chains(const FlatsLattice& lattice,
                                                   const Limits& limits) {
  return enumerate_saturated_chains(lattice, lattice.bottom(), lattice.top(),
                                    limits.max_chains);
}

std::vector<int> descents(const LabelSequence& seq, const AtomOrder& ord) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < seq.labels.size(); ++i) {
    // Ascent is <=, so only a strict decrease counts.
    if (ord.less(seq.labels[i + 1], seq.labels[i])) {
      out.push_back(static_cast<int>(i) + 1);
    }
  }
  return out;
}

bool is_ascending(const LabelSequence& seq, const AtomOrder& ord) {
  return descents(seq, ord).empty();
}

bool lex_less(const LabelSequence& a, const LabelSequence& b,
              const AtomOrder& ord) {
  return std::lexicographical_compare(
      a.labels.begin(), a.labels.end(), b.labels.begin(), b.labels.end(),
      [&](int x, int y) { return ord.less(x, y); });
}

int inversions(const LabelSequence& seq, const AtomOrder& ord) {
  int count = 0;
  for (std::size_t i = 0; i < seq.labels.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.labels.size(); ++j) {
      if (ord.less(seq.labels[j], seq.labels[i])) ++count;
    }
  }
  return count;
}

MaximalChain ascending_chain(const FlatsLattice& lattice, const AtomOrder& ord,
                             const Interval& interval) {
  MaximalChain chain{{interval.lo()}};
  while (chain.flats.back() != interval.hi()) {
    const int u = chain.flats.back();
    int best = -1;
    int best_label = 0;
    for (int v : interval.covers_up(u)) {
      const int label = minimal_label(lattice, ord, u, v);
      if (best < 0 || ord.less(label, best_label)) {
        best = v;
        best_label = label;
      }
    }
    chain.flats.push_back(best);
  }
  return chain;
}

MaximalChain ascending_chain(const FlatsLattice& lattice,
                             const AtomOrder& ord) {
  return ascending_chain(lattice, ord,
                         lattice.interval(lattice.bottom(), lattice.top()));
}

ElReport verify_el(const FlatsLattice& lattice, const EdgeLabeler& label,
                   const AtomOrder& ord, const Limits& limits) {
  ElReport report;
  for (int u = 0; u < lattice.size(); ++u) {
    for (int v = 0; v < lattice.size(); ++v) {
      if (u == v || !lattice.leq(u, v)) continue;
      ++report.intervals_checked;
      const auto chains = enumerate_saturated_chains(
          lattice, u, v, limits.max_interval_chains);
      int ascending = 0;
      int ascending_index = -1;
      std::vector<LabelSequence> seqs;
      for (const auto& c : chains) {
        seqs.push_back(label_sequence(label, c));
        if (is_ascending(seqs.back(), ord)) {
          ++ascending;
          ascending_index = static_cast<int>(seqs.size()) - 1;
        }
      }
      const std::string where = "[{" + lattice.flat(u).to_string() + "},{" +
                                lattice.flat(v).to_string() + "}]";
      if (ascending != 1) {
        report.violations.push_back(
            {u, v, ascending,
             where + " has " + std::to_string(ascending) +
                 " weakly ascending chains"});
        continue;
      }
      for (std::size_t k = 0; k < seqs.size(); ++k) {
        if (static_cast<int>(k) == ascending_index) continue;
        if (!lex_less(seqs[ascending_index], seqs[k], ord)) {
          report.violations.push_back(
              {u, v, ascending,
               where + " ascending labels " + to_string(seqs[ascending_index]) +
                   " not strictly below " + to_string(seqs[k])});
          break;
        }
      }
    }
  }
  return report;
}

ElReport verify_el(const FlatsLattice& lattice, const AtomOrder& ord,
                   const Limits& limits) {
  return verify_el(lattice, minimal_labeler(lattice, ord), ord, limits);
}

std::string format_chain(const FlatsLattice& lattice,
                         const MaximalChain& chain) {
  std::string out;
  for (std::size_t k = 0; k < chain.flats.size(); ++k) {
    if (k) out += ';';
    out += lattice.flat(chain.flats[k]).to_string();
  }
  return out;
}

MaximalChain parse_chain(const FlatsLattice& lattice, const std::string& text) {
  MaximalChain chain;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    const std::string token = text.substr(start, end - start);
    const AtomSet s = parse_atom_set(token, lattice.ground_size());
    const auto u = lattice.index_of(s);
    if (!u) throw InputError("{" + token + "} is not a flat");
    chain.flats.push_back(*u);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (!is_saturated_chain(lattice, chain, true)) {
    throw InputError("'" + text + "' is not a maximal chain");
  }
  return chain;
}

}  // namespace geolat
