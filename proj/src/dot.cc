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

#include "geolat/dot.h"

#include <sstream>

namespace geolat {
namespace {

std::string quoted_chain(const FlatsLattice& lattice, const MaximalChain& c) {
  return "\"" + format_chain(lattice, c) + "\"";
}

}  // namespace

std::string lattice_to_dot(const FlatsLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int k = 0; k <= lattice.rank(); ++k) {
    out << "  subgraph cluster_rank" << k << " {\n    label=\"rank " << k
        << "\";\n    rank=same;\n";
    for (int u : lattice.rank_level(k)) {
      out << "    f" << u << " [label=\"{" << lattice.flat(u).to_string()
          << "}\"];\n";
    }
    out << "  }\n";
  }
  for (int u = 0; u < lattice.size(); ++u) {
    for (int v : lattice.covers_up(u)) {
      out << "  f" << u << " -> f" << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string facet_ridge_to_dot(const FlatsLattice& lattice,
                               const FacetRidgeGraph& graph) {
  std::ostringstream out;
  out << "graph facet_ridge {\n";
  for (int v = 0; v < graph.size(); ++v) {
    out << "  c" << v << " [label=" << quoted_chain(lattice, graph.chain(v))
        << "];\n";
  }
  for (int v = 0; v < graph.size(); ++v) {
    for (int w : graph.neighbors(v)) {
      if (v < w) out << "  c" << v << " -- c" << w << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string glex_to_dot(const FlatsLattice& lattice, const GlexGraph& glex) {
  std::ostringstream out;
  out << "digraph glex {\n";
  for (int v = 0; v < glex.size(); ++v) {
    out << "  c" << v << " [label=" << quoted_chain(lattice, glex.chain(v))
        << ", xlabel=\"" << to_string(glex.label(v)) << "\""
        << (v == glex.sink() ? ", peripheries=2" : "") << "];\n";
  }
  for (int v = 0; v < glex.size(); ++v) {
    for (const auto& e : glex.out_edges(v)) {
      out << "  c" << e.from << " -> c" << e.to << " [label=\"T" << e.rank
          << " (" << e.upper << "," << e.lower << ")->(" << e.lower << ","
          << e.new_upper << ")\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string descent_order_to_dot(const FlatsLattice& lattice,
                                 const DescentOrder& order) {
  std::ostringstream out;
  out << "digraph descent_order {\n  rankdir=BT;\n";
  for (int v = 0; v < order.size(); ++v) {
    out << "  c" << v << " [label=" << quoted_chain(lattice, order.chains()[v])
        << "];\n";
  }
  for (auto [upper, lower] : order.hasse_edges()) {
    out << "  c" << lower << " -> c" << upper << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace geolat
