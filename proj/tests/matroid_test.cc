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

#include <gtest/gtest.h>

#include "fixtures.h"
#include "geolat/matroid_spec.h"
#include "oracles.h"

namespace geolat {
namespace {

AtomSet S(std::vector<int> atoms) { return AtomSet::from_atoms(atoms); }

TEST(MatroidTest, UniformRankIsTruncatedCardinality) {
  const Matroid m = make_uniform(3, 4);
  EXPECT_EQ(m.rank(S({1, 2, 3, 4})), 3);
  EXPECT_EQ(m.rank(S({1, 2, 3})), 3);
  EXPECT_EQ(m.rank(S({})), 0);
  EXPECT_EQ(m.closure(S({1, 2})), S({1, 2}));
  EXPECT_EQ(m.closure(S({1, 2, 3})), S({1, 2, 3, 4}));
}

TEST(MatroidTest, RankThreeUniformOnFourAtomsHasFlatsOfSizeNotThree) {
  const Matroid m = make_uniform(3, 4);
  const auto flats = oracle::flats_by_definition(
      4, [&](AtomSet s) { return m.rank(s); });
  EXPECT_EQ(flats.size(), 12u);
  for (AtomSet f : flats) EXPECT_NE(f.size(), 3);
}

TEST(MatroidTest, FreeMatroidEverySubsetIsFlat) {
  const Matroid m = make_uniform(4, 4);
  for (std::uint32_t s = 0; s < 16; ++s) EXPECT_TRUE(m.is_flat(AtomSet(s)));
}

TEST(MatroidTest, RankTwoOnThreeAtomsClosesEveryPair) {
  const Matroid m = make_uniform(2, 3);
  EXPECT_EQ(m.rank(S({1, 2})), 2);
  EXPECT_EQ(m.closure(S({1, 2})), S({1, 2, 3}));
}

TEST(MatroidTest, UniformRejectsBadParameters) {
  EXPECT_THROW(make_uniform(1, 4), InputError);
  EXPECT_THROW(make_uniform(5, 4), InputError);
  EXPECT_THROW(make_uniform(3, 15), InputError);
  EXPECT_NO_THROW(make_uniform(3, 15, {.max_ground = 15}));
}

TEST(MatroidTest, GraphicTriangleAndPath) {
  const Matroid triangle = make_graphic(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(triangle.rank(), 2);
  const Matroid path = make_graphic(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(path.rank(), 2);
  for (std::uint32_t s = 0; s < 4; ++s) EXPECT_TRUE(path.is_flat(AtomSet(s)));
}

TEST(MatroidTest, CompleteGraphK4FlatsAreSetPartitions) {
  const Matroid m = fixture::k4();
  EXPECT_EQ(m.rank(), 3);
  const auto flats = oracle::flats_by_definition(
      6, [&](AtomSet s) { return m.rank(s); });
  EXPECT_EQ(static_cast<long>(flats.size()), oracle::bell(4));
  EXPECT_EQ(oracle::bell(4), 15);
}

TEST(MatroidTest, GraphicRejectsLoopsParallelsAndBadVertices) {
  try {
    make_graphic(3, {{1, 2}, {2, 1}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("parallel"), std::string::npos);
  }
  try {
    make_graphic(3, {{2, 2}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("loop"), std::string::npos);
  }
  EXPECT_THROW(make_graphic(3, {{1, 4}}), InputError);
}

TEST(MatroidTest, LinearMatchesThreePointLineFlats) {
  const Matroid m = fixture::three_point_line_linear();
  const auto flats = oracle::flats_by_definition(
      4, [&](AtomSet s) { return m.rank(s); });
  auto expected = fixture::three_point_line_flats();
  auto key = [](AtomSet a, AtomSet b) { return a.bits() < b.bits(); };
  auto got = flats;
  std::sort(got.begin(), got.end(), key);
  std::sort(expected.begin(), expected.end(), key);
  EXPECT_EQ(got, expected);
  EXPECT_EQ(m.rank(S({1, 2, 4})), 2);
  EXPECT_EQ(m.closure(S({1, 2})), S({1, 2, 4}));
}

TEST(MatroidTest, LinearStandardBasisIsBoolean) {
  const Matroid m = make_linear(5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  for (std::uint32_t s = 0; s < 8; ++s) EXPECT_TRUE(m.is_flat(AtomSet(s)));
}

TEST(MatroidTest, LinearOverGf2OfThreeVectorsIsU23) {
  const Matroid m = make_linear(2, {{1, 0}, {0, 1}, {1, 1}});
  const Matroid u = make_uniform(2, 3);
  for (std::uint32_t s = 0; s < 8; ++s) {
    EXPECT_EQ(m.rank(AtomSet(s)), u.rank(AtomSet(s)));
  }
}

TEST(MatroidTest, LinearRejectsNonSimpleInput) {
  EXPECT_THROW(make_linear(3, {{1, 0}, {0, 0}}), InputError);
  EXPECT_THROW(make_linear(3, {{1, 0}, {2, 0}}), InputError);
  EXPECT_THROW(make_linear(4, {{1, 0}, {0, 1}}), InputError);
  EXPECT_THROW(make_linear(3, {{1, 0}, {0, 1, 0}}), InputError);
}

TEST(MatroidTest, RankModPEliminatesExactly) {
  EXPECT_EQ(rank_mod_p({{1, 2}, {2, 4}}, 7), 1);
  EXPECT_EQ(rank_mod_p({{1, 1}, {1, 2}}, 3), 2);
  EXPECT_EQ(rank_mod_p({{1, 1, 0}, {0, 1, 1}, {1, 0, 2}}, 3), 2);
}

TEST(MatroidTest, FromFlatsAcceptsThreePointLine) {
  const Matroid m = fixture::three_point_line();
  EXPECT_EQ(m.rank(), 3);
  EXPECT_EQ(m.rank(S({1, 2, 4})), 2);
  EXPECT_EQ(m.closure(S({1, 2})), S({1, 2, 4}));
  const Matroid linear = fixture::three_point_line_linear();
  for (std::uint32_t s = 0; s < 16; ++s) {
    EXPECT_EQ(m.rank(AtomSet(s)), linear.rank(AtomSet(s)));
  }
}

TEST(MatroidTest, FromFlatsAcceptsAllSubsetsAsBoolean) {
  std::vector<AtomSet> flats;
  for (std::uint32_t s = 0; s < 8; ++s) flats.emplace_back(s);
  const Matroid m = make_from_flats(3, flats);
  EXPECT_EQ(m.rank(), 3);
  for (std::uint32_t s = 0; s < 8; ++s) {
    EXPECT_EQ(m.rank(AtomSet(s)), AtomSet(s).size());
  }
}

TEST(MatroidTest, FromFlatsRejectsNonSemimodularFamily) {
  // Flats of U(3,4) without {1,2}: {1} and {2} have no common upper cover.
  std::vector<AtomSet> flats{S({}), S({1}), S({2}), S({3}), S({4})};
  for (auto pair : std::vector<std::vector<int>>{
           {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}) {
    flats.push_back(S(pair));
  }
  flats.push_back(S({1, 2, 3, 4}));
  try {
    make_from_flats(4, flats);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("semimodular"), std::string::npos)
        << e.what();
  }
}

TEST(MatroidTest, FromFlatsRejectsMissingIntersection) {
  EXPECT_THROW(make_from_flats(3, {S({}), S({1}), S({3}), S({1, 2}),
                                   S({2, 3}), S({1, 2, 3})}),
               InputError);
  EXPECT_THROW(make_from_flats(2, {S({1}), S({1, 2})}), InputError);
  EXPECT_THROW(make_from_flats(2, {S({}), S({1})}), InputError);
}

TEST(MatroidTest, FromFlatsRejectsParallelAtoms) {
  try {
    make_from_flats(3, {S({}), S({1, 2}), S({3}), S({1, 2, 3})});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("parallel"), std::string::npos);
  }
}

// Rank axioms and closure properties, exhaustive for every fixture.
TEST(MatroidTest, RankAxiomsHoldForAllConstructors) {
  const std::vector<Matroid> all{
      make_uniform(2, 4),         make_uniform(3, 5),
      fixture::boolean(4),        fixture::k4(),
      fixture::three_point_line(), fixture::three_point_line_linear(),
      make_linear(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1},
                      {0, 1, 1}, {1, 1, 1}})};
  for (const Matroid& m : all) {
    const RankAxiomReport report = check_rank_axioms(m);
    EXPECT_TRUE(report.ok()) << m.kind() << ": " << report.witness;
    EXPECT_TRUE(report.exhaustive);
    const std::uint32_t count = 1u << m.size();
    for (std::uint32_t s = 0; s < count; ++s) {
      const AtomSet c = m.closure(AtomSet(s));
      EXPECT_TRUE(AtomSet(s).subset_of(c));
      EXPECT_EQ(m.closure(c), c);
      for (std::uint32_t t = s;; t = (t - 1) & s) {
        EXPECT_TRUE(m.closure(AtomSet(t)).subset_of(c));
        if (t == 0) break;
      }
    }
  }
}

TEST(MatroidTest, SubmodularityIsSampledAboveEightAtoms) {
  const RankAxiomReport report = check_rank_axioms(make_uniform(4, 10));
  EXPECT_TRUE(report.ok());
  EXPECT_FALSE(report.exhaustive);
}

TEST(MatroidSpecTest, ParsesAllFourKinds) {
  using nlohmann::json;
  EXPECT_EQ(matroid_from_json(json::parse(
                R"({"kind":"uniform","rank":3,"elements":4})"))
                .rank(),
            3);
  EXPECT_EQ(matroid_from_json(
                json::parse(R"({"kind":"graphic","vertices":4,"edges":[[1,2],[1,3],[2,3],[1,4],[2,4],[3,4]]})"))
                .size(),
            6);
  EXPECT_EQ(matroid_from_json(json::parse(
                R"({"kind":"linear","prime":3,"vectors":[[1,0,0],[0,1,0],[0,0,1],[1,1,0]]})"))
                .rank(S({1, 2, 4})),
            2);
  EXPECT_EQ(matroid_from_json(json::parse(
                R"({"kind":"flats","ground":4,"flats":[[],[1],[2],[3],[4],[1,3],[2,3],[3,4],[1,2,4],[1,2,3,4]]})"))
                .rank(),
            3);
}

TEST(MatroidSpecTest, RejectsMalformedDocuments) {
  using nlohmann::json;
  EXPECT_THROW(matroid_from_json(json::parse(R"({"kind":"uniform"})")),
               InputError);
  EXPECT_THROW(matroid_from_json(json::parse(R"({"kind":"oriented"})")),
               InputError);
  EXPECT_THROW(matroid_from_json(json::parse(R"([1,2])")), InputError);
  EXPECT_THROW(matroid_from_json(json::parse(
                   R"({"kind":"uniform","rank":"three","elements":4})")),
               InputError);
  EXPECT_THROW(matroid_from_json(json::parse(
                   R"({"kind":"flats","ground":2,"flats":[[],[3]]})")),
               InputError);
  EXPECT_THROW(load_matroid_spec("/nonexistent/spec.json"), InputError);
}

TEST(MatroidSpecTest, WriterRoundTripsThroughReader) {
  for (const Matroid& m : {fixture::u34(), fixture::k4(),
                           fixture::three_point_line(),
                           fixture::three_point_line_linear()}) {
    const Matroid back = matroid_from_json(matroid_to_json(m));
    ASSERT_EQ(back.size(), m.size());
    for (std::uint32_t s = 0; s < (1u << m.size()); ++s) {
      EXPECT_EQ(back.rank(AtomSet(s)), m.rank(AtomSet(s)));
    }
  }
}

}  // namespace
}  // namespace geolat
