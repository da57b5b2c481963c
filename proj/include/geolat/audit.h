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

#ifndef GEOLAT_AUDIT_H_
#define GEOLAT_AUDIT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geolat/chain_graph.h"
#include "geolat/descent_order.h"
#include "geolat/flats_lattice.h"
#include "geolat/labeling.h"
#include "geolat/matroid.h"

namespace geolat {

// Exhaustive checks of the structural claims on one lattice. Each check
// returns findings: a single info row when the claim holds, or one
// violation row per counterexample, each with a concrete witness.

enum class Severity { kInfo, kViolation };

struct Finding {
  Severity severity = Severity::kInfo;
  std::string claim;     // e.g. "diameter-upper-bound"
  std::string instance;  // spec id, plus the atom order when relevant
  std::string witness;
};

std::string to_string(Severity s);
bool has_violation(const std::vector<Finding>& findings);

struct Instance {
  std::string id;
  Matroid matroid;
  FlatsLattice lattice;
};

Instance make_instance(std::string id, Matroid matroid,
                       const Limits& limits = {});

// Every permutation of 1..n in lexicographic order. InputError if n > 8.
std::vector<AtomOrder> all_orders(int n);
// `count` orders from a seeded Fisher-Yates shuffle of 1..n.
std::vector<AtomOrder> random_orders(int n, int count, std::uint64_t seed);
// All n! orders when n <= 5, otherwise `count` seeded random orders.
std::vector<AtomOrder> sweep_orders(int n, int count, std::uint64_t seed);

// Order-independent claims.
std::vector<Finding> check_matroid(const Instance& inst);
std::vector<Finding> check_lattice(const Instance& inst);
std::vector<Finding> check_diameter_bound(const Instance& inst,
                                          const FacetRidgeGraph& graph);
// connect() on every ordered chain pair; skipped above `max_chains` chains.
std::vector<Finding> check_connect(const Instance& inst,
                                   const FacetRidgeGraph& graph,
                                   int max_chains = 150);

// Claims about one minimal labeling. `graph` and `glex` must come from the
// same lattice (they share the canonical chain indexing).
struct OrderContext {
  const Instance& inst;
  const AtomOrder& ord;
  const FacetRidgeGraph& graph;
  const GlexGraph& glex;
};

std::vector<Finding> check_el(const OrderContext& ctx);
std::vector<Finding> check_lemmas(const OrderContext& ctx);
std::vector<Finding> check_glex(const OrderContext& ctx);
std::vector<Finding> check_straightening(const OrderContext& ctx);
std::vector<Finding> check_sharpness(const OrderContext& ctx);
std::vector<Finding> check_descent_order(const OrderContext& ctx);

struct SharpnessRow {
  std::string spec_id;
  std::string order;
  int r = 0;
  int chains = 0;
  int diameter_undirected = 0;
  int max_directed_ecc = 0;
  int binom_r_2 = 0;
  bool tight = false;
  int reversal_distance = 0;
};

SharpnessRow sharpness_row(const Instance& inst, const AtomOrder& ord,
                           const FacetRidgeGraph& graph, int diameter_value);

// Runs every check above over the given orders.
std::vector<Finding> audit_instance(const Instance& inst,
                                    const std::vector<AtomOrder>& orders,
                                    const Limits& limits = {});

}  // namespace geolat

#endif  // GEOLAT_AUDIT_H_
