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

#include "geolat/flats_lattice.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace geolat {
namespace {

struct Node {
  AtomSet set;
  int rank;
};

bool canonical_less(const Node& a, const Node& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return lex_less(a.set, b.set);
}

std::string brace(AtomSet s) { return "{" + s.to_string() + "}"; }

}  // namespace

FlatsLattice FlatsLattice::from_matroid(const Matroid& m,
                                        const Limits& limits) {
  std::vector<Node> nodes{{AtomSet(), 0}};
  std::unordered_map<std::uint32_t, int> found{{0u, 0}};
  std::vector<std::vector<int>> up(1);
  const int n = m.size();
  // Breadth-first: closures of F + x are exactly the upper covers of F.
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    const AtomSet f = nodes[u].set;
    for (int x = 1; x <= n; ++x) {
      if (f.contains(x)) continue;
      const AtomSet g = m.closure(f.with(x));
      auto [it, inserted] =
          found.try_emplace(g.bits(), static_cast<int>(nodes.size()));
      if (inserted) {
        if (nodes.size() >= limits.max_flats) {
          throw ResourceError("flat count exceeds cap of " +
                              std::to_string(limits.max_flats));
        }
        nodes.push_back({g, nodes[u].rank + 1});
        up.emplace_back();
      }
      if (std::find(up[u].begin(), up[u].end(), it->second) == up[u].end()) {
        up[u].push_back(it->second);
      }
    }
  }
  std::vector<int> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return canonical_less(nodes[a], nodes[b]);
  });
  std::vector<int> remap(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = i;

  FlatsLattice lattice;
  lattice.n_ = n;
  for (int old : order) {
    lattice.flats_.push_back(nodes[old].set);
    lattice.rank_.push_back(nodes[old].rank);
    std::vector<int> covers;
    for (int v : up[old]) covers.push_back(remap[v]);
    std::sort(covers.begin(), covers.end());
    lattice.up_.push_back(std::move(covers));
  }
  lattice.finish();
  return lattice;
}

FlatsLattice FlatsLattice::from_sets(int ground_size,
                                     std::vector<AtomSet> sets) {
  if (sets.empty()) throw InputError("empty set family");
  std::sort(sets.begin(), sets.end(), [](AtomSet a, AtomSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  if (std::adjacent_find(sets.begin(), sets.end()) != sets.end()) {
    throw InputError("duplicate set in family");
  }
  std::unordered_set<std::uint32_t> present;
  for (AtomSet s : sets) present.insert(s.bits());
  for (AtomSet a : sets) {
    for (AtomSet b : sets) {
      if (!present.count((a & b).bits())) {
        throw InputError("family is not closed under intersection: " +
                         brace(a) + " & " + brace(b));
      }
    }
  }
  const int count = static_cast<int>(sets.size());
  std::vector<std::vector<int>> up(count);
  for (int u = 0; u < count; ++u) {
    std::vector<int> above;
    for (int v = 0; v < count; ++v) {
      if (sets[u].proper_subset_of(sets[v])) above.push_back(v);
    }
    for (int v : above) {
      const bool minimal = std::none_of(above.begin(), above.end(), [&](int w) {
        return sets[w].proper_subset_of(sets[v]);
      });
      if (minimal) up[u].push_back(v);
    }
  }
  // Sets are sorted by size, so every cover goes to a larger index.
  std::vector<int> height(count, 0);
  for (int u = 0; u < count; ++u) {
    for (int v : up[u]) height[v] = std::max(height[v], height[u] + 1);
  }
  std::vector<Node> nodes;
  for (int u = 0; u < count; ++u) nodes.push_back({sets[u], height[u]});
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return canonical_less(nodes[a], nodes[b]);
  });
  std::vector<int> remap(count);
  for (int i = 0; i < count; ++i) remap[order[i]] = i;

  FlatsLattice lattice;
  lattice.n_ = ground_size;
  for (int old : order) {
    lattice.flats_.push_back(nodes[old].set);
    lattice.rank_.push_back(nodes[old].rank);
    std::vector<int> covers;
    for (int v : up[old]) covers.push_back(remap[v]);
    std::sort(covers.begin(), covers.end());
    lattice.up_.push_back(std::move(covers));
  }
  lattice.finish();
  return lattice;
}

void FlatsLattice::finish() {
  const int count = size();
  down_.assign(count, {});
  for (int u = 0; u < count; ++u) {
    for (int v : up_[u]) down_[v].push_back(u);
  }
  for (int u = 0; u < count; ++u) index_.emplace(flats_[u].bits(), u);
  if (count <= kMemoLimit) {
    const std::size_t cells = tri(count - 1, count - 1) + 1;
    join_table_.resize(cells);
    meet_table_.resize(cells);
    for (int u = 0; u < count; ++u) {
      for (int v = 0; v <= u; ++v) {
        join_table_[tri(u, v)] = static_cast<std::uint16_t>(compute_join(u, v));
        meet_table_[tri(u, v)] = static_cast<std::uint16_t>(compute_meet(u, v));
      }
    }
  }
}

std::size_t FlatsLattice::tri(int u, int v) const {
  if (u < v) std::swap(u, v);
  return static_cast<std::size_t>(u) * (u + 1) / 2 + v;
}

bool FlatsLattice::covers(int u, int v) const {
  return std::binary_search(up_[u].begin(), up_[u].end(), v);
}

std::optional<int> FlatsLattice::index_of(AtomSet s) const {
  auto it = index_.find(s.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FlatsLattice::closure_of(AtomSet s) const {
  if (auto hit = index_of(s)) return *hit;
  // Intersection of everything above s; the family is intersection-closed.
  std::optional<AtomSet> acc;
  for (AtomSet f : flats_) {
    if (s.subset_of(f)) acc = acc ? (*acc & f) : f;
  }
  if (!acc) throw InputError("no element contains " + brace(s));
  return *index_of(*acc);
}

int FlatsLattice::compute_join(int u, int v) const {
  return closure_of(flats_[u] | flats_[v]);
}

int FlatsLattice::compute_meet(int u, int v) const {
  return *index_of(flats_[u] & flats_[v]);
}

int FlatsLattice::join(int u, int v) const {
  if (!join_table_.empty()) return join_table_[tri(u, v)];
  return compute_join(u, v);
}

int FlatsLattice::meet(int u, int v) const {
  if (!meet_table_.empty()) return meet_table_[tri(u, v)];
  return compute_meet(u, v);
}

std::vector<int> FlatsLattice::atoms() const { return rank_level(1); }

std::vector<int> FlatsLattice::rank_level(int k) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u) {
    if (rank_[u] == k) out.push_back(u);
  }
  return out;
}

int FlatsLattice::atom_flat(int a) const {
  auto hit = index_of(AtomSet::single(a));
  if (!hit || rank_[*hit] != 1) {
    throw InputError("atom " + std::to_string(a) + " has no rank-1 flat");
  }
  return *hit;
}

Interval FlatsLattice::interval(int lo, int hi) const {
  if (lo < 0 || hi < 0 || lo >= size() || hi >= size()) {
    throw InputError("interval endpoint out of range");
  }
  if (!leq(lo, hi)) {
    throw InputError("interval endpoints not ordered: " + brace(flats_[lo]) +
                     " is not below " + brace(flats_[hi]));
  }
  Interval iv;
  iv.lattice_ = this;
  iv.lo_ = lo;
  iv.hi_ = hi;
  for (int u = 0; u < size(); ++u) {
    if (leq(lo, u) && leq(u, hi)) iv.elements_.push_back(u);
  }
  return iv;
}

bool Interval::contains(int u) const {
  return lattice_->leq(lo_, u) && lattice_->leq(u, hi_);
}

std::vector<int> Interval::covers_up(int u) const {
  std::vector<int> out;
  for (int v : lattice_->covers_up(u)) {
    if (lattice_->leq(v, hi_)) out.push_back(v);
  }
  return out;
}

FlatsLattice Interval::as_lattice() const {
  std::vector<AtomSet> sets;
  const AtomSet base = lattice_->flat(lo_);
  for (int u : elements_) sets.push_back(lattice_->flat(u) - base);
  return FlatsLattice::from_sets(lattice_->ground_size(), std::move(sets));
}

std::string GeometricReport::first_failure() const {
  if (!bounded.passed) return "bounded";
  if (!graded.passed) return "graded";
  if (!atomic.passed) return "atomic";
  if (!semimodular.passed) return "semimodular";
  return "";
}

GeometricReport verify_geometric(const FlatsLattice& lattice) {
  GeometricReport report;
  const int count = lattice.size();

  std::vector<int> minimal;
  std::vector<int> maximal;
  for (int u = 0; u < count; ++u) {
    if (lattice.covers_down(u).empty()) minimal.push_back(u);
    if (lattice.covers_up(u).empty()) maximal.push_back(u);
  }
  if (minimal.size() != 1 || maximal.size() != 1) {
    report.bounded.passed = false;
    report.bounded.witness = std::to_string(minimal.size()) +
                             " minimal and " + std::to_string(maximal.size()) +
                             " maximal elements";
  }

  // Shortest distance from the minimal elements must match the longest one.
  std::vector<int> shortest(count, -1);
  std::deque<int> queue(minimal.begin(), minimal.end());
  for (int u : minimal) shortest[u] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : lattice.covers_up(u)) {
      if (shortest[v] < 0) {
        shortest[v] = shortest[u] + 1;
        queue.push_back(v);
      }
    }
  }
  for (int u = 0; u < count && report.graded.passed; ++u) {
    if (shortest[u] != lattice.rank_of(u)) {
      report.graded.passed = false;
      report.graded.witness = "saturated chains of lengths " +
                              std::to_string(shortest[u]) + " and " +
                              std::to_string(lattice.rank_of(u)) + " reach " +
                              brace(lattice.flat(u));
    }
  }
  for (std::size_t i = 1; i < maximal.size() && report.graded.passed; ++i) {
    if (lattice.rank_of(maximal[i]) != lattice.rank_of(maximal[0])) {
      report.graded.passed = false;
      report.graded.witness = "maximal elements " +
                              brace(lattice.flat(maximal[0])) + " and " +
                              brace(lattice.flat(maximal[i])) +
                              " have different ranks";
    }
  }

  const std::vector<int> atoms = lattice.atoms();
  for (int u = 0; u < count && report.atomic.passed; ++u) {
    AtomSet below;
    for (int a : atoms) {
      if (lattice.leq(a, u)) below = below | lattice.flat(a);
    }
    const int join = lattice.closure_of(below);
    if (join != u) {
      report.atomic.passed = false;
      report.atomic.witness = brace(lattice.flat(u)) +
                              " is not the join of the atoms below it";
    }
  }

  for (int x = 0; x < count && report.semimodular.passed; ++x) {
    const auto& ups = lattice.covers_up(x);
    for (std::size_t i = 0; i < ups.size() && report.semimodular.passed; ++i) {
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        const auto& a = lattice.covers_up(ups[i]);
        const auto& b = lattice.covers_up(ups[j]);
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        if (common.empty()) {
          report.semimodular.passed = false;
          report.semimodular.witness =
              "x=" + brace(lattice.flat(x)) + " y=" +
              brace(lattice.flat(ups[i])) + " y'=" +
              brace(lattice.flat(ups[j])) + " have no common upper cover";
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace geolat
