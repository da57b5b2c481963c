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

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.h"

namespace geolat {
namespace {

bool has_claim_violation(const std::vector<Finding>& findings,
                         const std::string& claim) {
  return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) {
    return f.severity == Severity::kViolation && f.claim == claim;
  });
}

TEST(AuditTest, OrderGenerators) {
  EXPECT_EQ(all_orders(4).size(), 24u);
  EXPECT_EQ(all_orders(4).front().to_string(), "1,2,3,4");
  EXPECT_THROW(all_orders(9), InputError);
  const auto a = random_orders(6, 5, 42);
  const auto b = random_orders(6, 5, 42);
  ASSERT_EQ(a.size(), 5u);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k], b[k]);
  EXPECT_FALSE(random_orders(6, 5, 43)[0] == a[0] &&
               random_orders(6, 5, 43)[1] == a[1]);
  EXPECT_EQ(sweep_orders(5, 3, 1).size(), 120u);
  EXPECT_EQ(sweep_orders(6, 3, 1).size(), 3u);
}

TEST(AuditTest, CorpusLatticesHaveNoViolations) {
  for (auto [id, m] : std::vector<std::pair<std::string, Matroid>>{
           {"b3", fixture::boolean(3)},
           {"u34", fixture::u34()},
           {"fig", fixture::three_point_line()}}) {
    const Instance inst = make_instance(id, m);
    const auto findings =
        audit_instance(inst, sweep_orders(m.size(), 50, 42));
    for (const Finding& f : findings) {
      EXPECT_EQ(f.severity, Severity::kInfo)
          << f.claim << " " << f.instance << " " << f.witness;
    }
    EXPECT_FALSE(findings.empty());
  }
}

TEST(AuditTest, MismatchedLatticeIsReported) {
  Instance inst = make_instance("u34", fixture::u34());
  inst.lattice = FlatsLattice::from_matroid(fixture::boolean(4));
  const auto findings = check_lattice(inst);
  EXPECT_TRUE(has_violation(findings));
  EXPECT_TRUE(has_claim_violation(findings, "flats-match-matroid"));
}

TEST(AuditTest, GlexBuiltForAnotherOrderIsReported) {
  const Instance inst = make_instance("b3", fixture::boolean(3));
  const FacetRidgeGraph graph = build_facet_ridge_graph(inst.lattice);
  const GlexGraph glex = build_glex(inst.lattice, AtomOrder({3, 2, 1}));
  const AtomOrder natural = AtomOrder::natural(3);
  const OrderContext ctx{inst, natural, graph, glex};
  EXPECT_TRUE(has_violation(check_glex(ctx)));
}

TEST(AuditTest, SharpnessRowForBooleanLattice) {
  const Instance inst = make_instance("b4", fixture::boolean(4));
  const FacetRidgeGraph graph = build_facet_ridge_graph(inst.lattice);
  const SharpnessRow row = sharpness_row(inst, AtomOrder::natural(4), graph,
                                         diameter(graph).value);
  EXPECT_EQ(row.r, 4);
  EXPECT_EQ(row.chains, 24);
  EXPECT_EQ(row.diameter_undirected, 6);
  EXPECT_EQ(row.max_directed_ecc, 6);
  EXPECT_EQ(row.reversal_distance, 6);
  EXPECT_TRUE(row.tight);
}

TEST(AuditTest, SeverityNames) {
  EXPECT_EQ(to_string(Severity::kInfo), "info");
  EXPECT_EQ(to_string(Severity::kViolation), "violation");
}

}  // namespace
}  // namespace geolat
