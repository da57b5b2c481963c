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

// Command-line front end: builds lattices from matroid spec files, runs the
// verifications and experiments, and writes reports, DOT and CSV.
//
// Exit codes: 0 all claims hold, 1 a claim was violated, 2 input or
// resource error.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "geolat/audit.h"
#include "geolat/chain_graph.h"
#include "geolat/coxeter.h"
#include "geolat/descent_order.h"
#include "geolat/descent_path.h"
#include "geolat/dot.h"
#include "geolat/matroid_spec.h"

namespace {

using json = nlohmann::ordered_json;
using namespace geolat;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string spec_path;
  std::vector<std::string> spec_paths;
  std::string order;
  bool all_orders = false;
  int random_orders = 0;
  std::uint64_t seed = 1;
  std::string dot_path;
  std::string csv_path;
  std::string format = "text";
  Limits limits;
  std::string chain;
  std::string from;
  std::string to;
  bool check_glex = false;
  std::string word;
  int wiring_rank = 0;
  bool corpus = false;
  std::string corpus_dir;
  int random_graphic = 0;
  int vertices = 5;
  int random_linear = 0;
  int prime = 3;
  int dim = 3;
  int elements = 5;
};

// Human rendering of a report: the same content as the JSON twin.
void render_text(const json& value, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, item] : value.items()) {
    if (item.is_object()) {
      out << pad << key << ":\n";
      render_text(item, out, indent + 2);
    } else if (item.is_array() && !item.empty() && item.front().is_object()) {
      out << pad << key << ":\n";
      for (std::size_t k = 0; k < item.size(); ++k) {
        out << pad << "  [" << k << "]\n";
        render_text(item[k], out, indent + 4);
      }
    } else if (item.is_array()) {
      out << pad << key << ": ";
      for (std::size_t k = 0; k < item.size(); ++k) {
        if (k) out << ", ";
        out << (item[k].is_string() ? item[k].get<std::string>()
                                    : item[k].dump());
      }
      out << "\n";
    } else if (item.is_string()) {
      const std::string s = item.get<std::string>();
      if (s.find('\n') != std::string::npos) {
        out << pad << key << ":\n" << s;
      } else {
        out << pad << key << ": " << s << "\n";
      }
    } else {
      out << pad << key << ": " << item.dump() << "\n";
    }
  }
}

void emit(const RunConfig& cfg, const json& report) {
  if (cfg.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    render_text(report, std::cout, 0);
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

std::string spec_id(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

Instance load_instance(const RunConfig& cfg, const std::string& path) {
  return make_instance(spec_id(path), load_matroid_spec(path, cfg.limits),
                       cfg.limits);
}

std::vector<AtomOrder> resolve_orders(const RunConfig& cfg, int n) {
  if (!cfg.order.empty()) return {parse_atom_order(cfg.order, n)};
  if (cfg.all_orders) return all_orders(n);
  if (cfg.random_orders > 0) return random_orders(n, cfg.random_orders, cfg.seed);
  return {AtomOrder::natural(n)};
}

json chain_json(const FlatsLattice& L, const AtomOrder& ord,
                const MaximalChain& c) {
  return {{"chain", format_chain(L, c)},
          {"labels", label_sequence(L, ord, c).labels}};
}

json geometric_json(const GeometricReport& g) {
  auto axiom = [](const AxiomResult& a) {
    json j = {{"passed", a.passed}};
    if (!a.passed) j["witness"] = a.witness;
    return j;
  };
  return {{"bounded", axiom(g.bounded)},
          {"graded", axiom(g.graded)},
          {"atomic", axiom(g.atomic)},
          {"semimodular", axiom(g.semimodular)}};
}

int cmd_lattice(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg, cfg.spec_path);
  const FlatsLattice& L = inst.lattice;
  json flats = json::array();
  for (int u = 0; u < L.size(); ++u) {
    std::vector<std::string> ups;
    for (int v : L.covers_up(u)) ups.push_back("{" + L.flat(v).to_string() + "}");
    flats.push_back({{"flat", "{" + L.flat(u).to_string() + "}"},
                     {"rank", L.rank_of(u)},
                     {"covered_by", ups}});
  }
  const GeometricReport g = verify_geometric(L);
  json report = {{"spec", inst.id},
                 {"kind", inst.matroid.kind()},
                 {"atoms", inst.matroid.size()},
                 {"rank", L.rank()},
                 {"flat_count", L.size()},
                 {"geometric", geometric_json(g)},
                 {"flats", flats}};
  if (!cfg.dot_path.empty()) write_file(cfg.dot_path, lattice_to_dot(L));
  emit(cfg, report);
  return g.ok() ? kExitOk : kExitViolation;
}

int cmd_verify(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg, cfg.spec_path);
  const GeometricReport g = verify_geometric(inst.lattice);
  bool ok = g.ok();
  json orders = json::array();
  for (const AtomOrder& ord : resolve_orders(cfg, inst.matroid.size())) {
    const ElReport el = verify_el(inst.lattice, ord, cfg.limits);
    ok = ok && el.ok();
    json entry = {{"order", ord.to_string()},
                  {"intervals", el.intervals_checked},
                  {"el_labeling", el.ok() ? "pass" : "VIOLATION"}};
    std::vector<std::string> witnesses;
    for (const auto& v : el.violations) witnesses.push_back(v.detail);
    if (!witnesses.empty()) entry["violations"] = witnesses;
    orders.push_back(entry);
  }
  emit(cfg, {{"spec", inst.id},
             {"geometric", geometric_json(g)},
             {"orders_checked", orders.size()},
             {"orders", orders},
             {"verdict", ok ? "pass" : "VIOLATION"}});
  return ok ? kExitOk : kExitViolation;
}

int cmd_diameter(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg, cfg.spec_path);
  const FlatsLattice& L = inst.lattice;
  const FacetRidgeGraph graph = build_facet_ridge_graph(L, cfg.limits);
  const Diameter d = diameter(graph);
  const int bound = binomial2(L.rank());
  const AtomOrder natural = AtomOrder::natural(inst.matroid.size());
  json report = {{"spec", inst.id},
                 {"rank", L.rank()},
                 {"chains", graph.size()},
                 {"edges", graph.edge_count()},
                 {"diameter", d.value},
                 {"binom_r_2", bound},
                 {"witness_from", chain_json(L, natural, graph.chain(d.from))},
                 {"witness_to", chain_json(L, natural, graph.chain(d.to))},
                 {"verdict", d.value <= bound
                                 ? (d.value == bound ? "bound holds (tight)"
                                                     : "bound holds")
                                 : "VIOLATION"}};
  std::map<int, int> histogram;
  for (int a = 0; a < graph.size(); ++a) {
    for (int dist : bfs_distances(graph, a)) ++histogram[dist];
  }
  json hist = json::array();
  for (auto [dist, count] : histogram) {
    hist.push_back({{"distance", dist}, {"ordered_pairs", count}});
  }
  report["pair_distances"] = hist;
  if (!cfg.from.empty() && !cfg.to.empty()) {
    const auto a = graph.index_of(parse_chain(L, cfg.from));
    const auto b = graph.index_of(parse_chain(L, cfg.to));
    report["query"] = {{"from", cfg.from},
                       {"to", cfg.to},
                       {"distance", distance(graph, *a, *b)}};
  }
  if (!cfg.dot_path.empty()) write_file(cfg.dot_path, facet_ridge_to_dot(L, graph));
  emit(cfg, report);
  return d.value <= bound ? kExitOk : kExitViolation;
}

int cmd_glex(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg, cfg.spec_path);
  const FlatsLattice& L = inst.lattice;
  const AtomOrder ord = resolve_orders(cfg, inst.matroid.size()).front();
  const GlexGraph glex = build_glex(L, ord, cfg.limits);
  const FacetRidgeGraph graph = build_facet_ridge_graph(L, cfg.limits);
  const auto dist = directed_distances_to_sink(glex);
  json vertices = json::array();
  for (int v = 0; v < glex.size(); ++v) {
    json out = json::array();
    for (const auto& e : glex.out_edges(v)) {
      out.push_back({{"rank", e.rank},
                     {"to", format_chain(L, glex.chain(e.to))},
                     {"change", "(" + std::to_string(e.upper) + "," +
                                    std::to_string(e.lower) + ")->(" +
                                    std::to_string(e.lower) + "," +
                                    std::to_string(e.new_upper) + ")"}});
    }
    vertices.push_back({{"chain", format_chain(L, glex.chain(v))},
                        {"labels", glex.label(v).labels},
                        {"distance_to_sink", dist[v]},
                        {"out_edges", out}});
  }
  const Eccentricity ecc = max_directed_eccentricity(glex);
  emit(cfg, {{"spec", inst.id},
             {"order", ord.to_string()},
             {"chains", glex.size()},
             {"edges", glex.edge_count()},
             {"acyclic", is_acyclic(glex)},
             {"sink", format_chain(L, glex.chain(glex.sink()))},
             {"max_directed_ecc", ecc.value},
             {"max_directed_ecc_chain", format_chain(L, glex.chain(ecc.vertex))},
             {"shortcut_edges", shortcut_edge_count(graph, glex)},
             {"vertices", vertices}});
  if (!cfg.dot_path.empty()) write_file(cfg.dot_path, glex_to_dot(L, glex));
  return kExitOk;
}

json path_json(const FlatsLattice& L, const AtomOrder& ord,
               const std::vector<MaximalChain>& path) {
  json steps = json::array();
  for (const auto& c : path) steps.push_back(chain_json(L, ord, c));
  return steps;
}

int cmd_straighten(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg, cfg.spec_path);
  const FlatsLattice& L = inst.lattice;
  const AtomOrder ord = resolve_orders(cfg, inst.matroid.size()).front();
  const MaximalChain chain = parse_chain(L, cfg.chain);
  const StraighteningResult s = straighten(L, ord, chain);
  const int r = std::max(L.rank(), 1);
  const bool reduced = is_reduced(s.word, r);
  const bool by_length = is_reduced_by_length(s.word, r);
  const bool ok = reduced && by_length &&
                  static_cast<int>(s.word.letters.size()) <= binomial2(L.rank());
  emit(cfg, {{"spec", inst.id},
             {"order", ord.to_string()},
             {"word", to_string(s.word)},
             {"length", s.word.letters.size()},
             {"binom_r_2", binomial2(L.rank())},
             {"reduced_no_double_crossing", reduced},
             {"reduced_length_equals_inversions", by_length},
             {"path", path_json(L, ord, s.path)},
             {"verdict", ok ? "pass" : "VIOLATION"}});
  return ok ? kExitOk : kExitViolation;
}

int cmd_connect(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg, cfg.spec_path);
  const FlatsLattice& L = inst.lattice;
  const MaximalChain from = parse_chain(L, cfg.from);
  const MaximalChain to = parse_chain(L, cfg.to);
  const auto path = connect(L, from, to);
  const FacetRidgeGraph graph = build_facet_ridge_graph(L, cfg.limits);
  const int shortest =
      distance(graph, *graph.index_of(from), *graph.index_of(to));
  const int length = static_cast<int>(path.size()) - 1;
  const AtomOrder ord = atom_order_for_chain(L, to);
  const bool ok = length <= binomial2(L.rank());
  emit(cfg, {{"spec", inst.id},
             {"order", ord.to_string()},
             {"length", length},
             {"bfs_distance", shortest},
             {"binom_r_2", binomial2(L.rank())},
             {"path", path_json(L, ord, path)},
             {"verdict", ok ? "pass" : "VIOLATION"}});
  return ok ? kExitOk : kExitViolation;
}

int cmd_reversal(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg, cfg.spec_path);
  const FlatsLattice& L = inst.lattice;
  const AtomOrder ord = resolve_orders(cfg, inst.matroid.size()).front();
  const MaximalChain rev = reversal_chain(L, ord);
  const GlexGraph glex = build_glex(L, ord, cfg.limits);
  int dist = -1;
  const auto all = directed_distances_to_sink(glex);
  for (int v = 0; v < glex.size(); ++v) {
    if (glex.chain(v) == rev) dist = all[v];
  }
  const bool ok = dist == binomial2(L.rank());
  emit(cfg, {{"spec", inst.id},
             {"order", ord.to_string()},
             {"ascending", chain_json(L, ord, ascending_chain(L, ord))},
             {"reversal", chain_json(L, ord, rev)},
             {"directed_distance_to_sink", dist},
             {"binom_r_2", binomial2(L.rank())},
             {"verdict", ok ? "pass" : "VIOLATION"}});
  return ok ? kExitOk : kExitViolation;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_sharpness(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg, cfg.spec_path);
  const FacetRidgeGraph graph = build_facet_ridge_graph(inst.lattice, cfg.limits);
  const int diam = diameter(graph).value;
  std::ostringstream csv;
  csv << "spec_id,order,r,chains,diameter_undirected,max_directed_ecc,"
         "binom_r_2,tight\n";
  json rows = json::array();
  bool ok = true;
  for (const AtomOrder& ord : resolve_orders(cfg, inst.matroid.size())) {
    const SharpnessRow row = sharpness_row(inst, ord, graph, diam);
    ok = ok && row.tight && row.reversal_distance == row.binom_r_2;
    csv << csv_field(row.spec_id) << ',' << csv_field(row.order) << ','
        << row.r << ',' << row.chains << ',' << row.diameter_undirected << ','
        << row.max_directed_ecc << ',' << row.binom_r_2 << ','
        << (row.tight ? "true" : "false") << "\n";
    rows.push_back({{"order", row.order},
                    {"max_directed_ecc", row.max_directed_ecc},
                    {"reversal_chain",
                     format_chain(inst.lattice, reversal_chain(inst.lattice, ord))},
                    {"reversal_distance", row.reversal_distance},
                    {"tight", row.tight}});
  }
  if (!cfg.csv_path.empty()) write_file(cfg.csv_path, csv.str());
  emit(cfg, {{"spec", inst.id},
             {"rank", inst.lattice.rank()},
             {"chains", graph.size()},
             {"diameter_undirected", diam},
             {"binom_r_2", binomial2(inst.lattice.rank())},
             {"orders", rows},
             {"verdict", ok ? "sharp for every order" : "VIOLATION"}});
  return ok ? kExitOk : kExitViolation;
}

int cmd_descent_order(const RunConfig& cfg) {
  const Instance inst = load_instance(cfg, cfg.spec_path);
  const FlatsLattice& L = inst.lattice;
  bool ok = true;
  json orders = json::array();
  for (const AtomOrder& ord : resolve_orders(cfg, inst.matroid.size())) {
    const DescentOrder order = build_descent_order(L, ord, cfg.limits);
    json entry = {{"order", ord.to_string()},
                  {"elements", order.size()},
                  {"polygon_moves", order.moves().size()},
                  {"hasse_edges", order.hasse_edges().size()},
                  {"minimum", format_chain(L, order.chains()[order.minimum()])}};
    if (cfg.check_glex) {
      const HasseGlexReport report =
          compare_hasse_glex(order, build_glex(L, ord, cfg.limits));
      ok = ok && report.equal();
      entry["hasse_equals_glex"] = report.equal();
      std::vector<std::string> diffs;
      for (auto [a, b] : report.only_in_hasse) {
        diffs.push_back("only in Hasse: " + format_chain(L, order.chains()[a]) +
                        " > " + format_chain(L, order.chains()[b]));
      }
      for (auto [a, b] : report.only_in_glex) {
        diffs.push_back("only in G_lex: " + format_chain(L, order.chains()[a]) +
                        " -> " + format_chain(L, order.chains()[b]));
      }
      if (!diffs.empty()) entry["differences"] = diffs;
    }
    if (!cfg.dot_path.empty()) write_file(cfg.dot_path, descent_order_to_dot(L, order));
    orders.push_back(entry);
  }
  emit(cfg, {{"spec", inst.id}, {"orders", orders}});
  return ok ? kExitOk : kExitViolation;
}

int cmd_wiring(const RunConfig& cfg) {
  const Word w = parse_word(cfg.word, cfg.wiring_rank);
  const WiringDiagram d = wiring_diagram(w, cfg.wiring_rank);
  std::vector<std::string> crossings;
  for (auto [a, b] : d.crossings) {
    crossings.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  std::vector<std::string> doubles;
  for (auto [a, b] : d.double_crossings) {
    doubles.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  emit(cfg, {{"word", to_string(w)},
             {"rank", cfg.wiring_rank},
             {"permutation", evaluate(w, cfg.wiring_rank).images},
             {"inversions", inversions(evaluate(w, cfg.wiring_rank))},
             {"reflections", crossings},
             {"double_crossings", doubles},
             {"reduced", is_reduced(w, cfg.wiring_rank)},
             {"final_order_top_to_bottom", d.final_order},
             {"diagram", d.render()}});
  return kExitOk;
}

std::vector<std::pair<int, int>> random_connected_graph(int vertices,
                                                        std::mt19937_64& rng) {
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= vertices; ++a) {
      for (int b = a + 1; b <= vertices; ++b) {
        if (rng() % 2 == 0) edges.emplace_back(a, b);
      }
    }
    if (edges.empty()) continue;
    // Reject graphs whose rank falls short of V - 1.
    const Matroid m = make_graphic(vertices, edges, {.max_ground = kMaxGroundSize});
    if (m.rank() == vertices - 1) return edges;
  }
}

std::vector<std::vector<int>> random_vectors(int prime, int dim, int count,
                                             std::mt19937_64& rng) {
  while (true) {
    std::vector<std::vector<int>> vectors;
    int attempts = 0;
    while (static_cast<int>(vectors.size()) < count && attempts++ < 10'000) {
      std::vector<int> v(dim);
      for (int& x : v) x = static_cast<int>(rng() % prime);
      bool keep = std::any_of(v.begin(), v.end(), [](int x) { return x; });
      for (const auto& w : vectors) {
        if (keep && rank_mod_p({v, w}, prime) < 2) keep = false;
      }
      if (keep) vectors.push_back(v);
    }
    if (static_cast<int>(vectors.size()) < count) {
      throw InputError("cannot draw " + std::to_string(count) +
                       " pairwise non-parallel vectors in GF(" +
                       std::to_string(prime) + ")^" + std::to_string(dim));
    }
    if (rank_mod_p(vectors, prime) == dim) return vectors;
  }
}

const char* kCorpus[] = {"b3", "b4", "u24", "u34", "u35", "k4", "line4"};

Matroid corpus_matroid(const std::string& id, const Limits& limits) {
  if (id == "b3") return make_uniform(3, 3, limits);
  if (id == "b4") return make_uniform(4, 4, limits);
  if (id == "u24") return make_uniform(2, 4, limits);
  if (id == "u34") return make_uniform(3, 4, limits);
  if (id == "u35") return make_uniform(3, 5, limits);
  if (id == "k4") {
    return make_graphic(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}},
                        limits);
  }
  return make_linear(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}}, limits);
}

int cmd_sweep(const RunConfig& cfg) {
  struct Job {
    std::string id;
    std::function<Matroid()> make;
  };
  std::vector<Job> jobs;
  json generators = json::array();
  if (cfg.corpus) {
    for (const char* id : kCorpus) {
      jobs.push_back({id, [id, &cfg] { return corpus_matroid(id, cfg.limits); }});
    }
  }
  for (const auto& path : cfg.spec_paths) {
    jobs.push_back({spec_id(path),
                    [path, &cfg] { return load_matroid_spec(path, cfg.limits); }});
  }
  std::mt19937_64 rng(cfg.seed);
  if (cfg.random_graphic > 0) {
    generators.push_back({{"generator", "graphic"},
                          {"count", cfg.random_graphic},
                          {"vertices", cfg.vertices},
                          {"edge_probability", 0.5},
                          {"seed", cfg.seed}});
    for (int k = 0; k < cfg.random_graphic; ++k) {
      auto edges = random_connected_graph(cfg.vertices, rng);
      const int v = cfg.vertices;
      jobs.push_back({"random-graphic-" + std::to_string(k + 1),
                      [v, edges, &cfg] { return make_graphic(v, edges, cfg.limits); }});
    }
  }
  if (cfg.random_linear > 0) {
    generators.push_back({{"generator", "linear"},
                          {"count", cfg.random_linear},
                          {"prime", cfg.prime},
                          {"dim", cfg.dim},
                          {"elements", cfg.elements},
                          {"seed", cfg.seed}});
    for (int k = 0; k < cfg.random_linear; ++k) {
      auto vectors = random_vectors(cfg.prime, cfg.dim, cfg.elements, rng);
      const int p = cfg.prime;
      jobs.push_back({"random-linear-" + std::to_string(k + 1),
                      [p, vectors, &cfg] { return make_linear(p, vectors, cfg.limits); }});
    }
  }
  if (jobs.empty()) throw InputError("sweep needs --corpus, spec files or a random generator");

  const int orders_per_instance = cfg.random_orders > 0 ? cfg.random_orders : 50;
  std::vector<std::vector<Finding>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        const Instance inst = make_instance(jobs[k].id, jobs[k].make(), cfg.limits);
        results[k] = audit_instance(
            inst, sweep_orders(inst.matroid.size(), orders_per_instance, cfg.seed),
            cfg.limits);
      } catch (const std::exception& e) {
        results[k] = {{Severity::kViolation, "instance-error", jobs[k].id, e.what()}};
      }
    }
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "spec_id,claim,severity,instance,witness\n";
  int violations = 0;
  int rows = 0;
  json instances = json::array();
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    int bad = 0;
    for (const Finding& f : results[k]) {
      ++rows;
      if (f.severity == Severity::kViolation) ++bad;
      csv << csv_field(jobs[k].id) << ',' << csv_field(f.claim) << ','
          << to_string(f.severity) << ',' << csv_field(f.instance) << ','
          << csv_field(f.witness) << "\n";
    }
    violations += bad;
    json entry = {{"spec", jobs[k].id},
                  {"checks", results[k].size()},
                  {"violations", bad}};
    std::vector<std::string> witnesses;
    for (const Finding& f : results[k]) {
      if (f.severity == Severity::kViolation) {
        witnesses.push_back(f.claim + ": " + f.instance + ": " + f.witness);
      }
    }
    if (!witnesses.empty()) entry["witnesses"] = witnesses;
    instances.push_back(entry);
  }
  if (!cfg.csv_path.empty()) write_file(cfg.csv_path, csv.str());
  json report = {{"seed", cfg.seed},
                 {"instances", instances},
                 {"findings", rows},
                 {"violations", violations},
                 {"verdict", violations == 0 ? "all claims hold" : "VIOLATION"}};
  if (!generators.empty()) report["generators"] = generators;
  emit(cfg, report);
  return violations == 0 ? kExitOk : kExitViolation;
}

void add_spec(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("spec", cfg.spec_path, "matroid spec file (JSON)")->required();
}

void add_orders(CLI::App* sub, RunConfig& cfg, bool sweeps) {
  auto* order = sub->add_option("--order", cfg.order,
                                "atom order as a comma list, e.g. 4,3,1,2");
  if (sweeps) {
    auto* all = sub->add_flag("--all-orders", cfg.all_orders, "every atom order");
    auto* rnd = sub->add_option("--random-orders", cfg.random_orders,
                                "number of seeded random orders");
    order->excludes(all)->excludes(rnd);
    all->excludes(rnd);
  }
  sub->add_option("--seed", cfg.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric lattices, minimal EL-labelings and facet-ridge diameters"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap-ground", cfg.limits.max_ground, "ground set cap")
      ->check(CLI::Range(1, kMaxGroundSize));
  app.add_option("--cap-flats", cfg.limits.max_flats, "flat count cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-chains", cfg.limits.max_chains, "maximal chain cap")
      ->check(CLI::PositiveNumber);

  auto* lattice = app.add_subcommand("lattice", "build and print the lattice of flats");
  add_spec(lattice, cfg);
  lattice->add_option("--dot", cfg.dot_path, "write the Hasse diagram as DOT");

  auto* verify = app.add_subcommand("verify", "check geometric axioms and EL-labelings");
  add_spec(verify, cfg);
  add_orders(verify, cfg, true);

  auto* diam = app.add_subcommand("diameter", "facet-ridge graph diameter");
  add_spec(diam, cfg);
  diam->add_option("--dot", cfg.dot_path, "write the facet-ridge graph as DOT");
  diam->add_option("--from", cfg.from, "chain for a distance query");
  diam->add_option("--to", cfg.to, "chain for a distance query");

  auto* glex = app.add_subcommand("glex", "directed graph of descent moves");
  add_spec(glex, cfg);
  add_orders(glex, cfg, false);
  glex->add_option("--dot", cfg.dot_path, "write G_lex as DOT");

  auto* straight = app.add_subcommand("straighten", "straighten a chain to the ascending chain");
  add_spec(straight, cfg);
  add_orders(straight, cfg, false);
  straight->add_option("--chain", cfg.chain, "chain, e.g. \";4;3,4;1,2,3,4\"")->required();

  auto* conn = app.add_subcommand("connect", "path between two chains of length <= C(r,2)");
  add_spec(conn, cfg);
  conn->add_option("--from", cfg.from, "start chain")->required();
  conn->add_option("--to", cfg.to, "target chain")->required();

  auto* rev = app.add_subcommand("reversal", "chain labelled by the reversed ascending sequence");
  add_spec(rev, cfg);
  add_orders(rev, cfg, false);

  auto* sharp = app.add_subcommand("sharpness", "max directed distance to the ascending chain");
  add_spec(sharp, cfg);
  add_orders(sharp, cfg, true);
  sharp->add_option("--csv", cfg.csv_path, "write one CSV row per order");

  auto* dorder = app.add_subcommand("descent-order", "maximal chain descent order");
  add_spec(dorder, cfg);
  add_orders(dorder, cfg, true);
  dorder->add_flag("--check-glex", cfg.check_glex, "compare the Hasse diagram with G_lex");
  dorder->add_option("--dot", cfg.dot_path, "write the Hasse diagram as DOT");

  auto* wiring = app.add_subcommand("wiring", "wiring diagram of a word");
  wiring->add_option("word", cfg.word, "word as comma-separated indices, e.g. 1,2,1")->required();
  wiring->add_option("--rank", cfg.wiring_rank, "r for S_r")->required()->check(CLI::Range(1, 64));

  auto* sweep = app.add_subcommand("sweep", "run the full invariant suite over many instances");
  sweep->add_option("specs", cfg.spec_paths, "matroid spec files");
  sweep->add_flag("--corpus", cfg.corpus, "include the built-in corpus");
  sweep->add_option("--random-orders", cfg.random_orders,
                    "random orders per instance above 5 atoms (default 50)");
  sweep->add_option("--seed", cfg.seed, "random seed");
  sweep->add_option("--csv", cfg.csv_path, "write findings as CSV");
  sweep->add_option("--random-graphic", cfg.random_graphic, "random connected graphs");
  sweep->add_option("--vertices", cfg.vertices, "vertices per random graph");
  sweep->add_option("--random-linear", cfg.random_linear, "random linear matroids");
  sweep->add_option("--prime", cfg.prime, "field size for random linear matroids");
  sweep->add_option("--dim", cfg.dim, "dimension for random linear matroids");
  sweep->add_option("--elements", cfg.elements, "vectors per random linear matroid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*lattice) return cmd_lattice(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*diam) return cmd_diameter(cfg);
    if (*glex) return cmd_glex(cfg);
    if (*straight) return cmd_straighten(cfg);
    if (*conn) return cmd_connect(cfg);
    if (*rev) return cmd_reversal(cfg);
    if (*sharp) return cmd_sharpness(cfg);
    if (*dorder) return cmd_descent_order(cfg);
    if (*wiring) return cmd_wiring(cfg);
    if (*sweep) return cmd_sweep(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitInput;
}
