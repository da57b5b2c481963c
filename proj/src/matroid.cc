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

#include "geolat/matroid.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "geolat/flats_lattice.h"

namespace geolat {
namespace {

void check_ground(int n, const Limits& limits) {
  if (n < 1) throw InputError("ground set must be non-empty");
  const int cap = std::min(limits.max_ground, kMaxGroundSize);
  if (n > cap) {
    throw InputError("ground set size " + std::to_string(n) +
                     " exceeds cap " + std::to_string(cap));
  }
}

// Rejects loops and parallel pairs using the finished rank table.
void require_simple(int n, const std::vector<std::uint8_t>& rank) {
  for (int x = 1; x <= n; ++x) {
    if (rank[AtomSet::single(x).bits()] != 1) {
      throw InputError("not simple: atom " + std::to_string(x) +
                       " is a loop");
    }
  }
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      if (rank[AtomSet::single(x).with(y).bits()] != 2) {
        throw InputError("not simple: atoms " + std::to_string(x) + " and " +
                         std::to_string(y) + " are parallel");
      }
    }
  }
}

bool is_small_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  return 0;
}

}  // namespace

AtomSet Matroid::closure(AtomSet s) const {
  const int r = rank(s);
  AtomSet out = s;
  for (int x = 1; x <= n_; ++x) {
    if (!s.contains(x) && rank(s.with(x)) == r) out = out.with(x);
  }
  return out;
}

std::string Matroid::kind() const {
  struct Visitor {
    std::string operator()(const UniformSource&) const { return "uniform"; }
    std::string operator()(const GraphicSource&) const { return "graphic"; }
    std::string operator()(const LinearSource&) const { return "linear"; }
    std::string operator()(const FlatsSource&) const { return "flats"; }
  };
  return std::visit(Visitor{}, source_);
}

Matroid make_uniform(int k, int n, const Limits& limits) {
  check_ground(n, limits);
  if (k < 2) throw InputError("uniform matroid of rank < 2 is not simple");
  if (k > n) throw InputError("uniform matroid rank exceeds ground size");
  std::vector<std::uint8_t> rank(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < rank.size(); ++s) {
    rank[s] = static_cast<std::uint8_t>(std::min(std::popcount(s), k));
  }
  return Matroid(n, UniformSource{k}, std::move(rank));
}

Matroid make_graphic(int vertices,
                     const std::vector<std::pair<int, int>>& edges,
                     const Limits& limits) {
  if (vertices < 1) throw InputError("graph needs at least one vertex");
  const int n = static_cast<int>(edges.size());
  check_ground(n, limits);
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < n; ++i) {
    auto [a, b] = edges[i];
    if (a < 1 || a > vertices || b < 1 || b > vertices) {
      throw InputError("edge " + std::to_string(i + 1) +
                       " has a vertex outside 1.." + std::to_string(vertices));
    }
    if (a == b) {
      throw InputError("not simple: edge " + std::to_string(i + 1) +
                       " is a loop at vertex " + std::to_string(a));
    }
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw InputError("not simple: edge " + std::to_string(i + 1) +
                       " is parallel to an earlier edge {" +
                       std::to_string(a) + "," + std::to_string(b) + "}");
    }
  }
  std::vector<std::uint8_t> rank(std::size_t{1} << n);
  std::vector<int> parent(vertices + 1);
  for (std::uint32_t s = 0; s < rank.size(); ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int forest = 0;
    for (int i : AtomSet(s).atoms()) {
      int a = find(edges[i - 1].first);
      int b = find(edges[i - 1].second);
      if (a != b) {
        parent[a] = b;
        ++forest;
      }
    }
    rank[s] = static_cast<std::uint8_t>(forest);
  }
  return Matroid(n, GraphicSource{vertices, edges}, std::move(rank));
}

int rank_mod_p(std::vector<std::vector<int>> rows, int prime) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size());
       ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [&](const auto& row) { return row[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    auto& p = rows[rank];
    const int inv = inverse_mod(p[c], prime);
    for (auto& x : p) x = x * inv % prime;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const int f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = ((rows[r][k] - f * p[k]) % prime + prime) % prime;
      }
    }
    ++rank;
  }
  return rank;
}

Matroid make_linear(int prime, const std::vector<std::vector<int>>& vectors,
                    const Limits& limits) {
  if (!is_small_prime(prime)) {
    throw InputError("prime must be one of 2, 3, 5, 7; got " +
                     std::to_string(prime));
  }
  const int n = static_cast<int>(vectors.size());
  check_ground(n, limits);
  const std::size_t dim = vectors.front().size();
  if (dim == 0) throw InputError("vectors must have positive length");
  std::vector<std::vector<int>> reduced;
  for (int i = 0; i < n; ++i) {
    if (vectors[i].size() != dim) {
      throw InputError("vector " + std::to_string(i + 1) +
                       " has the wrong length");
    }
    std::vector<int> v;
    for (int x : vectors[i]) v.push_back(((x % prime) + prime) % prime);
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) {
      throw InputError("not simple: vector " + std::to_string(i + 1) +
                       " is zero (a loop)");
    }
    reduced.push_back(std::move(v));
  }
  std::vector<std::uint8_t> rank(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < rank.size(); ++s) {
    std::vector<std::vector<int>> rows;
    for (int i : AtomSet(s).atoms()) rows.push_back(reduced[i - 1]);
    rank[s] = static_cast<std::uint8_t>(rank_mod_p(std::move(rows), prime));
  }
  require_simple(n, rank);
  return Matroid(n, LinearSource{prime, std::move(reduced)}, std::move(rank));
}

Matroid make_from_flats(int n, const std::vector<AtomSet>& flats,
                        const Limits& limits) {
  check_ground(n, limits);
  const AtomSet ground = AtomSet::full(n);
  std::set<std::uint32_t> distinct;
  for (AtomSet f : flats) {
    if (!f.subset_of(ground)) {
      throw InputError("flat {" + f.to_string() + "} leaves the ground set");
    }
    if (!distinct.insert(f.bits()).second) {
      throw InputError("flat {" + f.to_string() + "} listed twice");
    }
  }
  if (!distinct.count(0)) throw InputError("flat list lacks the empty set");
  if (!distinct.count(ground.bits())) {
    throw InputError("flat list lacks the full ground set");
  }
  for (AtomSet a : flats) {
    for (AtomSet b : flats) {
      if (!distinct.count((a & b).bits())) {
        throw InputError("flat list is not closed under intersection: {" +
                         a.to_string() + "} & {" + b.to_string() + "} = {" +
                         (a & b).to_string() + "} is missing");
      }
    }
  }
  FlatsLattice lattice = FlatsLattice::from_sets(n, flats);
  if (lattice.size() > static_cast<int>(limits.max_flats)) {
    throw ResourceError("flat count exceeds cap");
  }
  const GeometricReport report = verify_geometric(lattice);
  if (!report.ok()) {
    const AxiomResult& bad = report.first_failure() == "bounded" ? report.bounded
                             : report.first_failure() == "graded"
                                 ? report.graded
                             : report.first_failure() == "atomic"
                                 ? report.atomic
                                 : report.semimodular;
    throw InputError("flat list is not a geometric lattice: " +
                     report.first_failure() + " fails (" + bad.witness + ")");
  }
  std::vector<std::uint8_t> rank(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < rank.size(); ++s) {
    rank[s] = static_cast<std::uint8_t>(
        lattice.rank_of(lattice.closure_of(AtomSet(s))));
  }
  require_simple(n, rank);
  std::vector<AtomSet> sorted;
  for (int u = 0; u < lattice.size(); ++u) sorted.push_back(lattice.flat(u));
  return Matroid(n, FlatsSource{std::move(sorted)}, std::move(rank));
}

RankAxiomReport check_rank_axioms(const Matroid& m, std::uint64_t seed,
                                  int samples) {
  RankAxiomReport report;
  const int n = m.size();
  const std::uint32_t count = std::uint32_t{1} << n;
  auto fail = [&](bool& flag, const std::string& what) {
    if (report.witness.empty()) report.witness = what;
    flag = false;
  };
  if (m.rank(AtomSet()) != 0) fail(report.normalized, "r(empty) != 0");
  for (std::uint32_t s = 0; s < count && report.unit_increase; ++s) {
    for (int x = 1; x <= n; ++x) {
      const AtomSet set(s);
      if (set.contains(x)) continue;
      const int d = m.rank(set.with(x)) - m.rank(set);
      if (d < 0 || d > 1) {
        fail(report.unit_increase, "r({" + set.to_string() + "} + " +
                                       std::to_string(x) + ") jumps by " +
                                       std::to_string(d));
        break;
      }
    }
  }
  auto check_pair = [&](AtomSet s, AtomSet t) {
    if (m.rank(s | t) + m.rank(s & t) > m.rank(s) + m.rank(t)) {
      fail(report.submodular, "S={" + s.to_string() + "} T={" +
                                  t.to_string() + "}");
    }
  };
  if (n <= 8) {
    for (std::uint32_t s = 0; s < count && report.submodular; ++s) {
      for (std::uint32_t t = 0; t < count && report.submodular; ++t) {
        check_pair(AtomSet(s), AtomSet(t));
      }
    }
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples && report.submodular; ++i) {
      check_pair(AtomSet(static_cast<std::uint32_t>(rng() % count)),
                 AtomSet(static_cast<std::uint32_t>(rng() % count)));
    }
  }
  for (int x = 1; x <= n; ++x) {
    if (m.rank(AtomSet::single(x)) != 1) {
      fail(report.simple, "atom " + std::to_string(x) + " is a loop");
    }
    for (int y = x + 1; y <= n; ++y) {
      if (m.rank(AtomSet::single(x).with(y)) != 2) {
        fail(report.simple, "atoms " + std::to_string(x) + "," +
                                std::to_string(y) + " are parallel");
      }
    }
  }
  return report;
}

}  // namespace geolat
