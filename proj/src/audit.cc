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

#include "geolat/audit.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "geolat/coxeter.h"
#include "geolat/descent_path.h"

namespace geolat {
namespace {

// Collects violations for one claim and emits a single info row if none.
class ClaimLog {
 public:
  ClaimLog(std::vector<Finding>& out, std::string claim, std::string instance)
      : out_(out), claim_(std::move(claim)), instance_(std::move(instance)) {}
  ~ClaimLog() {
    if (violations_ == 0) {
      out_.push_back({Severity::kInfo, claim_, instance_,
                      summary_.empty() ? "holds" : summary_});
    }
  }
  void violation(std::string witness) {
    ++violations_;
    out_.push_back(
        {Severity::kViolation, claim_, instance_, std::move(witness)});
  }
  void summary(std::string text) { summary_ = std::move(text); }
  bool clean() const { return violations_ == 0; }

 private:
  std::vector<Finding>& out_;
  std::string claim_;
  std::string instance_;
  std::string summary_;
  int violations_ = 0;
};

std::string tag(const OrderContext& ctx) {
  return ctx.inst.id + " order=" + ctx.ord.to_string();
}

std::string chain_text(const Instance& inst, const MaximalChain& c) {
  return "\"" + format_chain(inst.lattice, c) + "\"";
}

// Labels sorted ascending under ord.
LabelSequence increasing_rearrangement(LabelSequence seq,
                                       const AtomOrder& ord) {
  std::sort(seq.labels.begin(), seq.labels.end(),
            [&](int a, int b) { return ord.less(a, b); });
  return seq;
}

AtomSet as_set(const LabelSequence& seq) {
  return AtomSet::from_atoms(seq.labels);
}

}  // namespace

std::string to_string(Severity s) {
  return s == Severity::kInfo ? "info" : "violation";
}

bool has_violation(const std::vector<Finding>& findings) {
  return std::any_of(findings.begin(), findings.end(), [](const Finding& f) {
    return f.severity == Severity::kViolation;
  });
}

Instance make_instance(std::string id, Matroid matroid, const Limits& limits) {
  FlatsLattice lattice = FlatsLattice::from_matroid(matroid, limits);
  return {std::move(id), std::move(matroid), std::move(lattice)};
}

std::vector<AtomOrder> all_orders(int n) {
  if (n > 8) throw InputError("--all-orders is limited to 8 atoms");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<AtomOrder> out;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<AtomOrder> random_orders(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<AtomOrder> out;
  for (int k = 0; k < count; ++k) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    // Explicit Fisher-Yates: std::shuffle's output is library-specific.
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(perm[i], perm[j]);
    }
    out.emplace_back(std::move(perm));
  }
  return out;
}

std::vector<AtomOrder> sweep_orders(int n, int count, std::uint64_t seed) {
  return n <= 5 ? all_orders(n) : random_orders(n, count, seed);
}

std::vector<Finding> check_matroid(const Instance& inst) {
  std::vector<Finding> out;
  const Matroid& m = inst.matroid;
  const int n = m.size();
  {
    ClaimLog log(out, "rank-axioms", inst.id);
    const RankAxiomReport report = check_rank_axioms(m);
    if (!report.ok()) log.violation(report.witness);
    log.summary(report.exhaustive ? "exhaustive" : "submodularity sampled");
  }
  {
    ClaimLog log(out, "closure-operator", inst.id);
    const std::uint32_t count = std::uint32_t{1} << n;
    const bool exhaustive = n <= 8;
    for (std::uint32_t s = 0; s < count && log.clean(); ++s) {
      const AtomSet set(s);
      const AtomSet c = m.closure(set);
      if (!set.subset_of(c)) log.violation("not extensive on {" + set.to_string() + "}");
      if (m.closure(c) != c) log.violation("not idempotent on {" + set.to_string() + "}");
      if (!exhaustive) continue;
      // Monotone: every subset of s closes inside closure(s).
      for (std::uint32_t t = s; log.clean(); t = (t - 1) & s) {
        if (!m.closure(AtomSet(t)).subset_of(c)) {
          log.violation("not monotone: {" + AtomSet(t).to_string() + "} in {" +
                        set.to_string() + "}");
        }
        if (t == 0) break;
      }
    }
  }
  {
    ClaimLog log(out, "advertised-rank", inst.id);
    int expected = -1;
    if (const auto* u = std::get_if<UniformSource>(&m.source())) {
      expected = u->rank;
    } else if (const auto* g = std::get_if<GraphicSource>(&m.source())) {
      // Components by DFS over the whole edge set.
      std::vector<std::vector<int>> adj(g->vertices + 1);
      for (auto [a, b] : g->edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
      std::vector<int> seen(g->vertices + 1, 0);
      int components = 0;
      for (int v = 1; v <= g->vertices; ++v) {
        if (seen[v]) continue;
        ++components;
        std::vector<int> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
          const int x = stack.back();
          stack.pop_back();
          for (int y : adj[x]) {
            if (!seen[y]) {
              seen[y] = 1;
              stack.push_back(y);
            }
          }
        }
      }
      expected = g->vertices - components;
    } else if (const auto* l = std::get_if<LinearSource>(&m.source())) {
      expected = rank_mod_p(l->vectors, l->prime);
    } else {
      expected = inst.lattice.rank();
    }
    if (m.rank() != expected) {
      log.violation("rank " + std::to_string(m.rank()) + " != advertised " +
                    std::to_string(expected));
    }
  }
  return out;
}

std::vector<Finding> check_lattice(const Instance& inst) {
  std::vector<Finding> out;
  const FlatsLattice& L = inst.lattice;
  {
    ClaimLog log(out, "geometric-axioms", inst.id);
    const GeometricReport report = verify_geometric(L);
    if (!report.ok()) {
      log.violation(report.first_failure() + " fails");
    }
  }
  {
    ClaimLog log(out, "flats-match-matroid", inst.id);
    for (int u = 0; u < L.size(); ++u) {
      if (!inst.matroid.is_flat(L.flat(u))) {
        log.violation("{" + L.flat(u).to_string() + "} is not closed");
      }
      if (L.rank_of(u) != inst.matroid.rank(L.flat(u))) {
        log.violation("rank mismatch at {" + L.flat(u).to_string() + "}");
      }
      for (int v : L.covers_up(u)) {
        if (L.rank_of(v) != L.rank_of(u) + 1) {
          log.violation("cover {" + L.flat(u).to_string() + "} < {" +
                        L.flat(v).to_string() + "} skips a rank");
        }
      }
    }
    if (static_cast<int>(L.atoms().size()) != inst.matroid.size()) {
      log.violation("atom count differs from ground set size");
    }
  }
  {
    ClaimLog log(out, "meet-closed", inst.id);
    const bool exhaustive = L.size() <= 2000;
    std::mt19937_64 rng(7);
    const long pairs = exhaustive ? static_cast<long>(L.size()) * L.size() : 200'000;
    for (long k = 0; k < pairs && log.clean(); ++k) {
      const int u = exhaustive ? static_cast<int>(k / L.size())
                               : static_cast<int>(rng() % L.size());
      const int v = exhaustive ? static_cast<int>(k % L.size())
                               : static_cast<int>(rng() % L.size());
      if (!L.index_of(L.flat(u) & L.flat(v))) {
        log.violation("{" + L.flat(u).to_string() + "} & {" +
                      L.flat(v).to_string() + "} is not a flat");
      }
    }
  }
  {
    ClaimLog log(out, "interval-roundtrip", inst.id);
    const FlatsLattice whole = L.interval(L.bottom(), L.top()).as_lattice();
    bool same = whole.size() == L.size();
    for (int u = 0; same && u < L.size(); ++u) {
      same = whole.flat(u) == L.flat(u) && whole.covers_up(u) == L.covers_up(u);
    }
    if (!same) log.violation("interval(bottom, top) differs from the lattice");
  }
  {
    ClaimLog log(out, "intervals-geometric", inst.id);
    // All intervals on small lattices, upper intervals above atoms otherwise.
    const bool all = L.size() <= 64;
    for (int u = 0; u < L.size() && log.clean(); ++u) {
      if (!all && L.rank_of(u) != 1) continue;
      for (int v = u; v < L.size(); ++v) {
        if (!all && v != L.top()) continue;
        if (!L.leq(u, v)) continue;
        const GeometricReport report =
            verify_geometric(L.interval(u, v).as_lattice());
        if (!report.ok()) {
          log.violation("[{" + L.flat(u).to_string() + "},{" +
                        L.flat(v).to_string() + "}] " +
                        report.first_failure() + " fails");
          break;
        }
      }
    }
  }
  return out;
}

std::vector<Finding> check_diameter_bound(const Instance& inst,
                                          const FacetRidgeGraph& graph) {
  std::vector<Finding> out;
  ClaimLog log(out, "diameter-upper-bound", inst.id);
  const int r = inst.lattice.rank();
  try {
    const Diameter d = diameter(graph);
    if (d.value > binomial2(r)) {
      log.violation("distance " + std::to_string(d.value) + " > C(" +
                    std::to_string(r) + ",2) between " +
                    chain_text(inst, graph.chain(d.from)) + " and " +
                    chain_text(inst, graph.chain(d.to)));
    }
    log.summary("diameter " + std::to_string(d.value) + " <= " +
                std::to_string(binomial2(r)));
  } catch (const std::runtime_error& e) {
    log.violation(e.what());
  }
  return out;
}

std::vector<Finding> check_connect(const Instance& inst,
                                   const FacetRidgeGraph& graph,
                                   int max_chains) {
  std::vector<Finding> out;
  if (graph.size() > max_chains) {
    out.push_back({Severity::kInfo, "connect-bound", inst.id,
                   "skipped: " + std::to_string(graph.size()) + " chains"});
    return out;
  }
  ClaimLog log(out, "connect-bound", inst.id);
  const int bound = binomial2(inst.lattice.rank());
  for (int a = 0; a < graph.size() && log.clean(); ++a) {
    for (int b = 0; b < graph.size(); ++b) {
      const auto path = connect(inst.lattice, graph.chain(a), graph.chain(b));
      bool valid = path.front() == graph.chain(a) && path.back() == graph.chain(b);
      for (std::size_t k = 0; valid && k + 1 < path.size(); ++k) {
        const auto x = graph.index_of(path[k]);
        const auto y = graph.index_of(path[k + 1]);
        valid = x && y && graph.adjacent(*x, *y);
      }
      if (!valid || static_cast<int>(path.size()) - 1 > bound) {
        log.violation("connect " + chain_text(inst, graph.chain(a)) + " -> " +
                      chain_text(inst, graph.chain(b)) + " gave length " +
                      std::to_string(path.size() - 1) +
                      (valid ? "" : " (invalid path)"));
        break;
      }
    }
  }
  return out;
}

std::vector<Finding> check_el(const OrderContext& ctx) {
  std::vector<Finding> out;
  const FlatsLattice& L = ctx.inst.lattice;
  {
    ClaimLog log(out, "el-labeling", tag(ctx));
    const ElReport report = verify_el(L, ctx.ord);
    for (const auto& v : report.violations) log.violation(v.detail);
    log.summary(std::to_string(report.intervals_checked) + " intervals");
  }
  {
    ClaimLog log(out, "greedy-ascending-chain", tag(ctx));
    for (int u = 0; u < L.size() && log.clean(); ++u) {
      for (int v = u + 1; v < L.size(); ++v) {
        if (!L.leq(u, v)) continue;
        const Interval iv = L.interval(u, v);
        const MaximalChain greedy = ascending_chain(L, ctx.ord, iv);
        std::vector<MaximalChain> found;
        for (auto& c : enumerate_saturated_chains(L, u, v, 1'000'000)) {
          if (is_ascending(label_sequence(L, ctx.ord, c), ctx.ord)) {
            found.push_back(std::move(c));
          }
        }
        if (found.size() != 1 || found.front() != greedy) {
          log.violation("greedy chain differs from exhaustive search on [{" +
                        L.flat(u).to_string() + "},{" + L.flat(v).to_string() +
                        "}]");
          break;
        }
      }
    }
  }
  return out;
}

std::vector<Finding> check_lemmas(const OrderContext& ctx) {
  std::vector<Finding> out;
  const FlatsLattice& L = ctx.inst.lattice;
  const int r = L.rank();
  const auto& glex = ctx.glex;
  std::vector<LabelSequence> labels = glex.labels();
  std::set<std::vector<int>> realized;
  for (const auto& s : labels) realized.insert(s.labels);
  const LabelSequence ascending = glex.label(glex.sink());

  {
    ClaimLog log(out, "independent-labels", tag(ctx));
    for (int v = 0; v < glex.size() && log.clean(); ++v) {
      const AtomSet set = as_set(labels[v]);
      if (set.size() != r || ctx.inst.matroid.rank(set) != r) {
        log.violation(chain_text(ctx.inst, glex.chain(v)) + " labels " +
                      to_string(labels[v]) + " are not independent");
      }
    }
  }
  {
    ClaimLog log(out, "rearrangement-realizability", tag(ctx));
    if (r <= 5) {
      std::vector<int> perm = ascending.labels;
      std::sort(perm.begin(), perm.end());
      int checked = 0;
      do {
        ++checked;
        if (!realized.count(perm)) {
          log.violation("rearrangement " + to_string(LabelSequence{perm}) +
                        " of " + to_string(ascending) + " is not realized");
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      log.summary(std::to_string(checked) + " rearrangements realized");
    } else {
      log.summary("skipped: rank above 5");
    }
  }
  {
    ClaimLog log(out, "lex-min-rearrangement", tag(ctx));
    std::optional<LabelSequence> least;
    for (const auto& s : labels) {
      const LabelSequence inc = increasing_rearrangement(s, ctx.ord);
      if (!least || lex_less(inc, *least, ctx.ord)) least = inc;
    }
    for (int v = 0; v < glex.size(); ++v) {
      const LabelSequence inc = increasing_rearrangement(labels[v], ctx.ord);
      const bool is_realized = realized.count(inc.labels) > 0;
      const bool is_least = inc == *least;
      if (is_realized != is_least) {
        log.violation(chain_text(ctx.inst, glex.chain(v)) +
                      ": increasing rearrangement " + to_string(inc) +
                      (is_realized ? " realized" : " not realized") +
                      " but lex-min is " + to_string(*least));
        break;
      }
    }
  }
  {
    ClaimLog log(out, "descent-swapping", tag(ctx));
    const AtomSet target = as_set(ascending);
    int edges = 0;
    for (int v = 0; v < glex.size(); ++v) {
      if (as_set(labels[v]) != target) continue;
      const MaximalChain& m = glex.chain(v);
      for (const auto& e : glex.out_edges(v)) {
        ++edges;
        const int lo = m.flats[e.rank - 1];
        const int hi = m.flats[e.rank + 1];
        const LabelSequence swapped{{e.lower, e.upper}};
        bool smallest = e.new_upper == e.upper;
        for (const auto& c : enumerate_saturated_chains(L, lo, hi, 1'000'000)) {
          const LabelSequence s = label_sequence(L, ctx.ord, c);
          if (lex_less(s, swapped, ctx.ord)) smallest = false;
        }
        if (!smallest) {
          log.violation(chain_text(ctx.inst, m) + " descent at rank " +
                        std::to_string(e.rank) + " became (" +
                        std::to_string(e.lower) + "," +
                        std::to_string(e.new_upper) + ")");
        }
      }
    }
    log.summary(std::to_string(edges) + " rearrangement edges");
  }
  return out;
}

std::vector<Finding> check_glex(const OrderContext& ctx) {
  std::vector<Finding> out;
  const FlatsLattice& L = ctx.inst.lattice;
  const auto& glex = ctx.glex;
  const auto& graph = ctx.graph;
  const int bound = binomial2(L.rank());
  {
    ClaimLog log(out, "glex-acyclic-unique-sink", tag(ctx));
    if (!is_acyclic(glex)) log.violation("G_lex has a directed cycle");
    if (glex.chain(glex.sink()) != ascending_chain(L, ctx.ord)) {
      log.violation("sink is not the ascending chain");
    }
    for (int v = 0; v < glex.size(); ++v) {
      const int out_degree = static_cast<int>(glex.out_edges(v).size());
      const int d = static_cast<int>(descents(glex.label(v), ctx.ord).size());
      if (out_degree != d || (out_degree == 0 && v != glex.sink())) {
        log.violation(chain_text(ctx.inst, glex.chain(v)) + " out-degree " +
                      std::to_string(out_degree) + " vs " +
                      std::to_string(d) + " descents");
      }
    }
  }
  {
    ClaimLog log(out, "glex-spanning-subgraph", tag(ctx));
    for (int v = 0; v < glex.size(); ++v) {
      for (const auto& e : glex.out_edges(v)) {
        if (graph.chain(e.from) != glex.chain(e.from) ||
            !graph.adjacent(e.from, e.to)) {
          log.violation("edge " + chain_text(ctx.inst, glex.chain(e.from)) +
                        " -> " + chain_text(ctx.inst, glex.chain(e.to)) +
                        " is not a facet-ridge edge");
        }
      }
    }
  }
  {
    ClaimLog log(out, "glex-edge-contract", tag(ctx));
    for (int v = 0; v < glex.size(); ++v) {
      for (const auto& e : glex.out_edges(v)) {
        const bool ok = ctx.ord.less(e.lower, e.upper) &&
                        ctx.ord.less(e.lower, e.new_upper) &&
                        !ctx.ord.less(e.upper, e.new_upper);
        const auto& after = glex.label(e.to);
        const bool labels_ok = after.labels[e.rank - 1] == e.lower &&
                               after.labels[e.rank] == e.new_upper;
        if (!ok || !labels_ok) {
          log.violation(chain_text(ctx.inst, glex.chain(v)) + " at rank " +
                        std::to_string(e.rank));
        }
      }
    }
  }
  {
    ClaimLog log(out, "glex-distance-bounds", tag(ctx));
    const auto directed = directed_distances_to_sink(glex);
    const auto undirected = bfs_distances(graph, glex.sink());
    for (int v = 0; v < glex.size(); ++v) {
      if (directed[v] < 0 || directed[v] > bound ||
          directed[v] < undirected[v]) {
        log.violation(chain_text(ctx.inst, glex.chain(v)) + " directed " +
                      std::to_string(directed[v]) + " undirected " +
                      std::to_string(undirected[v]));
      }
    }
  }
  {
    ClaimLog log(out, "apply-t-matches-glex", tag(ctx));
    for (int v = 0; v < glex.size(); ++v) {
      for (const auto& e : glex.out_edges(v)) {
        MaximalChain moved;
        try {
          moved = apply_t(L, ctx.ord, glex.chain(v), e.rank);
        } catch (const InputError& err) {
          log.violation("T_" + std::to_string(e.rank) + " on " +
                        chain_text(ctx.inst, glex.chain(v)) + ": " + err.what());
          continue;
        }
        if (moved != glex.chain(e.to)) {
          log.violation("T_" + std::to_string(e.rank) + " on " +
                        chain_text(ctx.inst, glex.chain(v)) +
                        " disagrees with the interval ascending chain");
        }
        if (!lex_less(glex.label(e.to), glex.label(v), ctx.ord)) {
          log.violation("T_" + std::to_string(e.rank) + " on " +
                        chain_text(ctx.inst, glex.chain(v)) +
                        " does not decrease the labels lexicographically");
        }
      }
    }
  }
  return out;
}

std::vector<Finding> check_straightening(const OrderContext& ctx) {
  std::vector<Finding> out;
  const FlatsLattice& L = ctx.inst.lattice;
  const int r = L.rank();
  const auto& glex = ctx.glex;
  ClaimLog log(out, "straightening-reduced", tag(ctx));
  std::map<std::vector<int>, int> index;
  for (int v = 0; v < glex.size(); ++v) index.emplace(glex.chain(v).flats, v);
  int longest = 0;
  for (int v = 0; v < glex.size(); ++v) {
    const std::string where = chain_text(ctx.inst, glex.chain(v));
    StraighteningResult s;
    try {
      s = straighten(L, ctx.ord, glex.chain(v));
    } catch (const std::exception& e) {
      log.violation(where + ": " + e.what());
      continue;
    }
    const int d = static_cast<int>(s.word.letters.size());
    longest = std::max(longest, d);
    if (s.terminal() != glex.chain(glex.sink())) {
      log.violation(where + " did not reach the ascending chain");
    }
    const bool by_reflections = is_reduced(s.word, std::max(r, 1));
    const bool by_length = is_reduced_by_length(s.word, std::max(r, 1));
    if (!by_reflections || !by_length) {
      log.violation(where + " word " + to_string(s.word) + " not reduced");
    }
    if (d > binomial2(r)) {
      log.violation(where + " word length " + std::to_string(d));
    }
    for (int k = 0; k < d; ++k) {
      const int from = index.at(s.path[k].flats);
      const int to = index.at(s.path[k + 1].flats);
      const auto& edges = glex.out_edges(from);
      const bool is_edge =
          std::any_of(edges.begin(), edges.end(), [&](const GlexEdge& e) {
            return e.to == to && e.rank == s.word.letters[k];
          });
      if (!is_edge) {
        log.violation(where + " step " + std::to_string(k + 1) +
                      " is not a G_lex edge");
        break;
      }
    }
  }
  log.summary("longest word " + std::to_string(longest));
  return out;
}

std::vector<Finding> check_sharpness(const OrderContext& ctx) {
  std::vector<Finding> out;
  const FlatsLattice& L = ctx.inst.lattice;
  const int r = L.rank();
  const int bound = binomial2(r);
  const auto& glex = ctx.glex;
  {
    ClaimLog log(out, "sharpness-exact", tag(ctx));
    try {
      const Eccentricity ecc = max_directed_eccentricity(glex);
      if (ecc.value != bound) {
        log.violation("max directed distance " + std::to_string(ecc.value) +
                      " != " + std::to_string(bound) + " at " +
                      chain_text(ctx.inst, glex.chain(ecc.vertex)));
      }
    } catch (const std::runtime_error& e) {
      log.violation(e.what());
    }
  }
  {
    ClaimLog log(out, "reversal-paths-exact", tag(ctx));
    MaximalChain rev;
    try {
      rev = reversal_chain(L, ctx.ord);
    } catch (const std::exception& e) {
      log.violation(e.what());
      return out;
    }
    int start = -1;
    for (int v = 0; v < glex.size(); ++v) {
      if (glex.chain(v) == rev) start = v;
    }
    // Every edge reachable from the reversal chain must drop exactly one
    // inversion; then every maximal path has length C(r,2).
    std::vector<int> seen(glex.size(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    std::vector<int> longest(glex.size(), -1);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const int inv = inversions(glex.label(v), ctx.ord);
      for (const auto& e : glex.out_edges(v)) {
        const int drop = inv - inversions(glex.label(e.to), ctx.ord);
        if (drop != 1) {
          log.violation("edge " + chain_text(ctx.inst, glex.chain(v)) +
                        " -> " + chain_text(ctx.inst, glex.chain(e.to)) +
                        " removes " + std::to_string(drop) + " inversions");
        }
        if (!seen[e.to]) {
          seen[e.to] = 1;
          stack.push_back(e.to);
        }
      }
      if (glex.out_edges(v).empty() && v != glex.sink()) {
        log.violation("directed path from the reversal chain stops at " +
                      chain_text(ctx.inst, glex.chain(v)));
      }
    }
    // Longest path by memoized DFS over the DAG.
    std::function<int(int)> depth = [&](int v) {
      if (longest[v] >= 0) return longest[v];
      int best = 0;
      for (const auto& e : glex.out_edges(v)) best = std::max(best, 1 + depth(e.to));
      return longest[v] = best;
    };
    const int shortest = directed_distance_to_sink(glex, start);
    const int deepest = depth(start);
    if (shortest != bound || deepest != bound) {
      log.violation("reversal chain " + chain_text(ctx.inst, rev) +
                    " has path lengths " + std::to_string(shortest) + ".." +
                    std::to_string(deepest));
    }
  }
  return out;
}

std::vector<Finding> check_descent_order(const OrderContext& ctx) {
  std::vector<Finding> out;
  const FlatsLattice& L = ctx.inst.lattice;
  const auto& glex = ctx.glex;
  {
    ClaimLog log(out, "polygon-moves-equal-glex", tag(ctx));
    for (int v = 0; v < glex.size(); ++v) {
      std::vector<std::pair<int, MaximalChain>> moves;
      for (auto& m : polygon_moves(L, ctx.ord, glex.chain(v))) {
        moves.emplace_back(m.rank, std::move(m.result));
      }
      std::vector<std::pair<int, MaximalChain>> edges;
      for (const auto& e : glex.out_edges(v)) {
        edges.emplace_back(e.rank, glex.chain(e.to));
      }
      if (moves != edges) {
        log.violation(chain_text(ctx.inst, glex.chain(v)) +
                      " polygon moves differ from G_lex out-edges");
      }
    }
  }
  {
    ClaimLog log(out, "hasse-equals-glex", tag(ctx));
    try {
      const DescentOrder order = build_descent_order(L, ctx.ord);
      if (order.minimum() != glex.sink()) {
        log.violation("descent order minimum is not the ascending chain");
      }
      const HasseGlexReport report = compare_hasse_glex(order, glex);
      for (auto [a, b] : report.only_in_glex) {
        log.violation("G_lex edge " + chain_text(ctx.inst, glex.chain(a)) +
                      " -> " + chain_text(ctx.inst, glex.chain(b)) +
                      " is not a cover");
      }
      for (auto [a, b] : report.only_in_hasse) {
        log.violation("cover " + chain_text(ctx.inst, glex.chain(a)) + " > " +
                      chain_text(ctx.inst, glex.chain(b)) + " is not in G_lex");
      }
    } catch (const std::runtime_error& e) {
      log.violation(e.what());
    }
  }
  return out;
}

SharpnessRow sharpness_row(const Instance& inst, const AtomOrder& ord,
                           const FacetRidgeGraph& graph, int diameter_value) {
  const GlexGraph glex = build_glex(inst.lattice, ord);
  SharpnessRow row;
  row.spec_id = inst.id;
  row.order = ord.to_string();
  row.r = inst.lattice.rank();
  row.chains = graph.size();
  row.diameter_undirected = diameter_value;
  row.max_directed_ecc = max_directed_eccentricity(glex).value;
  row.binom_r_2 = binomial2(row.r);
  row.tight = row.max_directed_ecc == row.binom_r_2;
  const MaximalChain rev = reversal_chain(inst.lattice, ord);
  const auto dist = directed_distances_to_sink(glex);
  for (int v = 0; v < glex.size(); ++v) {
    if (glex.chain(v) == rev) row.reversal_distance = dist[v];
  }
  return row;
}

std::vector<Finding> audit_instance(const Instance& inst,
                                    const std::vector<AtomOrder>& orders,
                                    const Limits& limits) {
  std::vector<Finding> out;
  auto append = [&](std::vector<Finding> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  };
  append(check_matroid(inst));
  append(check_lattice(inst));
  const FacetRidgeGraph graph = build_facet_ridge_graph(inst.lattice, limits);
  append(check_diameter_bound(inst, graph));
  append(check_connect(inst, graph));
  for (const AtomOrder& ord : orders) {
    const GlexGraph glex = build_glex(inst.lattice, ord, limits);
    const OrderContext ctx{inst, ord, graph, glex};
    append(check_el(ctx));
    append(check_lemmas(ctx));
    append(check_glex(ctx));
    append(check_straightening(ctx));
    append(check_sharpness(ctx));
    append(check_descent_order(ctx));
  }
  return out;
}

}  // namespace geolat
