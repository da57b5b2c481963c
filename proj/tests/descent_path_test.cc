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

#include "geolat/descent_path.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "geolat/chain_graph.h"

namespace geolat {
namespace {

class U34Test : public ::testing::Test {
 protected:
  FlatsLattice lattice = FlatsLattice::from_matroid(fixture::u34());
  AtomOrder natural = AtomOrder::natural(4);
  MaximalChain m = fixture::chain(lattice, ";4;3,4;1,2,3,4");

  std::string labels(const MaximalChain& chain) const {
    return to_string(label_sequence(lattice, natural, chain));
  }
  MaximalChain t(const MaximalChain& chain, int i) const {
    return apply_t(lattice, natural, chain, i);
  }
};

TEST_F(U34Test, OperatorSequencesFromTheDecreasingChain) {
  EXPECT_EQ(labels(m), "(4,3,1)");
  EXPECT_EQ(labels(t(m, 2)), "(4,1,2)");
  EXPECT_EQ(labels(t(t(m, 2), 1)), "(1,4,2)");
  EXPECT_EQ(labels(t(t(t(m, 2), 1), 2)), "(1,2,3)");
  EXPECT_EQ(labels(t(m, 1)), "(3,4,1)");
  EXPECT_EQ(labels(t(t(m, 1), 2)), "(3,1,2)");
  EXPECT_EQ(labels(t(t(t(m, 1), 2), 1)), "(1,3,2)");
}

TEST_F(U34Test, OperatorsFailTheBraidRelation) {
  const MaximalChain a = t(t(t(m, 2), 1), 2);
  const MaximalChain b = t(t(t(m, 1), 2), 1);
  EXPECT_NE(a, b);
  EXPECT_EQ(t(b, 2), a);
  EXPECT_EQ(a, ascending_chain(lattice, natural));
}

TEST_F(U34Test, ApplyTRejectsAscents) {
  const MaximalChain up = t(m, 2);  // (4,1,2): ascent at 2
  EXPECT_THROW(t(up, 2), InputError);
  EXPECT_THROW(t(m, 0), InputError);
  EXPECT_THROW(t(m, 3), InputError);
}

TEST_F(U34Test, StraighteningWordOfTheDecreasingChain) {
  const StraighteningResult result = straighten(lattice, natural, m);
  EXPECT_EQ(to_string(result.word), "2,1,2");
  ASSERT_EQ(result.path.size(), 4u);
  EXPECT_EQ(labels(result.path[1]), "(4,1,2)");
  EXPECT_EQ(labels(result.path[2]), "(1,4,2)");
  EXPECT_EQ(result.terminal(), ascending_chain(lattice, natural));
  EXPECT_TRUE(is_reduced(result.word, 3));
}

TEST_F(U34Test, AtomOrderForChainListsDifferenceBlocks) {
  EXPECT_EQ(atom_order_for_chain(lattice, m).to_string(), "4,3,1,2");
  const AtomOrder ord = atom_order_for_chain(lattice, m);
  EXPECT_EQ(ascending_chain(lattice, ord), m);
}

TEST_F(U34Test, ReversalChainCarriesReversedLabels) {
  const MaximalChain rev = reversal_chain(lattice, natural);
  EXPECT_EQ(format_chain(lattice, rev), ";3;2,3;1,2,3,4");
  EXPECT_EQ(labels(rev), "(3,2,1)");
}

TEST(DescentPathTest, StraighteningIsReducedOnEveryChainAndOrder) {
  for (const Matroid& mat : {fixture::boolean(4), fixture::u34(),
                             fixture::k4(), fixture::three_point_line()}) {
    const FlatsLattice lattice = FlatsLattice::from_matroid(mat);
    const int r = lattice.rank();
    const auto chains = enumerate_maximal_chains(lattice);
    for (const auto& perm : std::vector<std::vector<int>>{
             {1, 2, 3, 4, 5, 6}, {6, 5, 4, 3, 2, 1}, {2, 5, 1, 6, 3, 4}}) {
      std::vector<int> p;
      for (int a : perm) {
        if (a <= mat.size()) p.push_back(a);
      }
      const AtomOrder ord(p);
      const MaximalChain target = ascending_chain(lattice, ord);
      for (const auto& chain : chains) {
        const StraighteningResult res = straighten(lattice, ord, chain);
        EXPECT_EQ(res.terminal(), target);
        EXPECT_TRUE(is_reduced(res.word, r));
        EXPECT_TRUE(is_reduced_by_length(res.word, r));
        EXPECT_LE(static_cast<int>(res.word.letters.size()), r * (r - 1) / 2);
        if (chain == target) EXPECT_TRUE(res.word.letters.empty());
        for (std::size_t k = 0; k + 1 < res.path.size(); ++k) {
          EXPECT_EQ(res.path[k + 1],
                    apply_t(lattice, ord, res.path[k], res.word.letters[k]));
        }
      }
    }
  }
}

TEST(DescentPathTest, ConnectStaysWithinBinomialBound) {
  const FlatsLattice lattice = FlatsLattice::from_matroid(fixture::boolean(3));
  const FacetRidgeGraph graph = build_facet_ridge_graph(lattice);
  const MaximalChain from = fixture::chain(lattice, ";1;1,2;1,2,3");
  const MaximalChain to = fixture::chain(lattice, ";3;2,3;1,2,3");
  const auto path = connect(lattice, from, to);
  EXPECT_EQ(path.front(), from);
  EXPECT_EQ(path.back(), to);
  EXPECT_EQ(path.size() - 1, 3u);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    EXPECT_TRUE(graph.adjacent(*graph.index_of(path[k]),
                               *graph.index_of(path[k + 1])));
  }
  for (const auto& a : graph.chains()) {
    for (const auto& b : graph.chains()) {
      EXPECT_LE(connect(lattice, a, b).size() - 1, 3u);
    }
  }
}

}  // namespace
}  // namespace geolat
