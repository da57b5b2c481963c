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

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.h"
#include "oracles.h"

namespace geolat {
namespace {

AtomSet S(std::vector<int> atoms) { return AtomSet::from_atoms(atoms); }

std::vector<AtomSet> sets_of(const FlatsLattice& lattice) {
  std::vector<AtomSet> out;
  for (int u = 0; u < lattice.size(); ++u) out.push_back(lattice.flat(u));
  return out;
}

void expect_same_family(std::vector<AtomSet> a, std::vector<AtomSet> b) {
  auto key = [](AtomSet x, AtomSet y) { return x.bits() < y.bits(); };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  EXPECT_EQ(a, b);
}

TEST(FlatsLatticeTest, FlatsAgreeWithDefinition) {
  for (const Matroid& m :
       {fixture::boolean(3), fixture::u34(), make_uniform(2, 4),
        make_uniform(3, 5), fixture::k4(), fixture::three_point_line()}) {
    const FlatsLattice lattice = FlatsLattice::from_matroid(m);
    expect_same_family(sets_of(lattice),
                       oracle::flats_by_definition(
                           m.size(), [&](AtomSet s) { return m.rank(s); }));
    EXPECT_EQ(lattice.rank(), m.rank());
    for (int u = 0; u < lattice.size(); ++u) {
      EXPECT_EQ(lattice.rank_of(u), m.rank(lattice.flat(u)));
    }
  }
}

TEST(FlatsLatticeTest, SizesOfKnownLattices) {
  EXPECT_EQ(FlatsLattice::from_matroid(fixture::boolean(4)).size(), 16);
  EXPECT_EQ(FlatsLattice::from_matroid(fixture::u34()).size(), 12);
  EXPECT_EQ(FlatsLattice::from_matroid(fixture::k4()).size(), oracle::bell(4));
  EXPECT_EQ(FlatsLattice::from_matroid(fixture::three_point_line()).size(), 10);
}

TEST(FlatsLatticeTest, CanonicalOrderIsRankThenLex) {
  const FlatsLattice lattice = FlatsLattice::from_matroid(fixture::u34());
  EXPECT_EQ(lattice.flat(lattice.bottom()), AtomSet());
  EXPECT_EQ(lattice.flat(lattice.top()), S({1, 2, 3, 4}));
  for (int u = 1; u < lattice.size(); ++u) {
    const bool ordered =
        lattice.rank_of(u - 1) < lattice.rank_of(u) ||
        (lattice.rank_of(u - 1) == lattice.rank_of(u) &&
         lex_less(lattice.flat(u - 1), lattice.flat(u)));
    EXPECT_TRUE(ordered) << u;
  }
  EXPECT_EQ(lattice.flat(1), S({1}));
  EXPECT_EQ(lattice.flat(5), S({1, 2}));
  EXPECT_EQ(lattice.flat(10), S({3, 4}));
}

TEST(FlatsLatticeTest, CoversMatchContainmentOracle) {
  for (const Matroid& m : {fixture::u34(), fixture::k4(),
                           fixture::three_point_line(), make_uniform(3, 5)}) {
    const FlatsLattice lattice = FlatsLattice::from_matroid(m);
    const auto family = sets_of(lattice);
    for (int u = 0; u < lattice.size(); ++u) {
      for (int v = 0; v < lattice.size(); ++v) {
        const bool expected =
            oracle::covered_by(family, lattice.flat(u), lattice.flat(v));
        EXPECT_EQ(lattice.covers(u, v), expected);
        const auto& up = lattice.covers_up(u);
        EXPECT_EQ(std::count(up.begin(), up.end(), v), expected ? 1 : 0);
        const auto& down = lattice.covers_down(v);
        EXPECT_EQ(std::count(down.begin(), down.end(), u), expected ? 1 : 0);
      }
    }
  }
}

TEST(FlatsLatticeTest, JoinAndMeetMatchMatroidClosure) {
  const Matroid m = fixture::k4();
  const FlatsLattice lattice = FlatsLattice::from_matroid(m);
  for (int u = 0; u < lattice.size(); ++u) {
    for (int v = 0; v < lattice.size(); ++v) {
      EXPECT_EQ(lattice.flat(lattice.join(u, v)),
                m.closure(lattice.flat(u) | lattice.flat(v)));
      EXPECT_EQ(lattice.flat(lattice.meet(u, v)),
                lattice.flat(u) & lattice.flat(v));
      EXPECT_EQ(lattice.join(u, v), lattice.join(v, u));
      EXPECT_EQ(lattice.leq(u, v), lattice.join(u, v) == v);
    }
  }
}

TEST(FlatsLatticeTest, ClosureOfAndAtomLookup) {
  const FlatsLattice lattice =
      FlatsLattice::from_matroid(fixture::three_point_line());
  EXPECT_EQ(lattice.flat(lattice.closure_of(S({1, 4}))), S({1, 2, 4}));
  EXPECT_EQ(lattice.flat(lattice.closure_of(S({1, 3}))), S({1, 3}));
  EXPECT_EQ(lattice.flat(lattice.atom_flat(3)), S({3}));
  EXPECT_EQ(lattice.atoms().size(), 4u);
  EXPECT_EQ(lattice.rank_level(2).size(), 4u);
  EXPECT_EQ(*lattice.index_of(S({3, 4})), lattice.closure_of(S({3, 4})));
  EXPECT_FALSE(lattice.index_of(S({1, 2})).has_value());
}

TEST(FlatsLatticeTest, IntervalAboveAnAtomOfU34) {
  const FlatsLattice lattice = FlatsLattice::from_matroid(fixture::u34());
  const Interval above = lattice.interval(lattice.atom_flat(1), lattice.top());
  // [1] plus the three pairs containing 1 plus the top.
  EXPECT_EQ(above.size(), 5);
  EXPECT_TRUE(above.contains(*lattice.index_of(S({1, 3}))));
  EXPECT_FALSE(above.contains(*lattice.index_of(S({2, 3}))));
  const FlatsLattice local = above.as_lattice();
  EXPECT_EQ(local.size(), 5);
  EXPECT_EQ(local.rank(), 2);
  EXPECT_TRUE(verify_geometric(local).ok());
  EXPECT_EQ(above.covers_up(above.lo()).size(), 3u);
}

TEST(FlatsLatticeTest, EveryIntervalOfAGeometricLatticeIsGeometric) {
  const FlatsLattice lattice = FlatsLattice::from_matroid(fixture::k4());
  for (int u = 0; u < lattice.size(); ++u) {
    for (int v = 0; v < lattice.size(); ++v) {
      if (!lattice.leq(u, v)) continue;
      const FlatsLattice local = lattice.interval(u, v).as_lattice();
      EXPECT_TRUE(verify_geometric(local).ok()) << u << " " << v;
      EXPECT_EQ(local.rank(), lattice.rank_of(v) - lattice.rank_of(u));
    }
  }
}

TEST(FlatsLatticeTest, GeometricAxiomsPassOnMatroidLattices) {
  for (const Matroid& m : {fixture::boolean(4), fixture::u34(), fixture::k4(),
                           fixture::three_point_line()}) {
    const GeometricReport report =
        verify_geometric(FlatsLattice::from_matroid(m));
    EXPECT_TRUE(report.ok()) << report.first_failure();
    EXPECT_EQ(report.first_failure(), "");
  }
}

TEST(FlatsLatticeTest, ChainIsNotAtomic) {
  const FlatsLattice chain = FlatsLattice::from_sets(
      3, {S({}), S({1}), S({1, 2}), S({1, 2, 3})});
  const GeometricReport report = verify_geometric(chain);
  EXPECT_FALSE(report.atomic.passed);
  EXPECT_FALSE(report.atomic.witness.empty());
  EXPECT_EQ(report.first_failure(), "atomic");
}

TEST(FlatsLatticeTest, PentagonIsNotGraded) {
  // 0 < {1} < {1,2} < top and 0 < {3} < top.
  const FlatsLattice pentagon = FlatsLattice::from_sets(
      3, {S({}), S({1}), S({1, 2}), S({3}), S({1, 2, 3})});
  const GeometricReport report = verify_geometric(pentagon);
  EXPECT_FALSE(report.graded.passed);
  EXPECT_FALSE(report.graded.witness.empty());
}

TEST(FlatsLatticeTest, MissingLineBreaksSemimodularity) {
  std::vector<AtomSet> sets{S({}), S({1}), S({2}), S({3}), S({4}), S({1, 3}),
                            S({1, 4}), S({2, 3}), S({2, 4}), S({3, 4}),
                            S({1, 2, 3, 4})};
  const GeometricReport report =
      verify_geometric(FlatsLattice::from_sets(4, sets));
  EXPECT_TRUE(report.bounded.passed);
  EXPECT_FALSE(report.semimodular.passed);
  EXPECT_NE(report.semimodular.witness.find("1"), std::string::npos);
}

TEST(FlatsLatticeTest, FromSetsRejectsBadFamilies) {
  EXPECT_THROW(FlatsLattice::from_sets(2, {S({}), S({1}), S({1})}),
               InputError);
  EXPECT_THROW(FlatsLattice::from_sets(3, {S({}), S({1, 2}), S({2, 3}),
                                           S({1, 2, 3})}),
               InputError);
}

TEST(FlatsLatticeTest, FlatCapIsEnforced) {
  Limits limits;
  limits.max_flats = 10;
  EXPECT_THROW(FlatsLattice::from_matroid(fixture::boolean(4), limits),
               ResourceError);
}

}  // namespace
}  // namespace geolat
