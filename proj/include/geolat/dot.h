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

#ifndef GEOLAT_DOT_H_
#define GEOLAT_DOT_H_

#include <string>

#include "geolat/chain_graph.h"
#include "geolat/descent_order.h"
#include "geolat/flats_lattice.h"

namespace geolat {

// Graphviz renderings. Vertex labels for chains use format_chain.

// Hasse diagram, one same-rank cluster per rank.
std::string lattice_to_dot(const FlatsLattice& lattice);
std::string facet_ridge_to_dot(const FlatsLattice& lattice,
                               const FacetRidgeGraph& graph);
// Edges annotated with the rank and the label change (j,i)->(i,j').
std::string glex_to_dot(const FlatsLattice& lattice, const GlexGraph& glex);
std::string descent_order_to_dot(const FlatsLattice& lattice,
                                 const DescentOrder& order);

}  // namespace geolat

#endif  // GEOLAT_DOT_H_
