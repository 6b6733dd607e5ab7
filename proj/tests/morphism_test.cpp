// Copyright 2026 The dtk Authors
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

#include <gtest/gtest.h>

#include "dtk/errors.hpp"
#include "dtk/harness.hpp"
#include "dtk/morphism.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace dtk {
namespace {

using testing::diamond8;
using testing::finite;
using testing::fixture_curve;
using testing::fixtures;
using testing::square4;

DigitalMap map_5_1() { return fixtures().map("map_5_1"); }

// Every map between small images, for exhaustive oracle comparisons.
std::vector<DigitalMap> small_corpus() {
  CorpusSpec spec;
  spec.box = {2, 3};
  spec.max_points = 3;
  spec.connected_only = false;
  const auto imgs = enumerate_images(spec).images;
  std::vector<DigitalMap> out;
  for (const auto& x : imgs) {
    for (const auto& y : imgs) {
      enumerate_maps(x, y, {}, [&](const DigitalMap& m) {
        out.push_back(m);
        return true;
      });
    }
  }
  return out;
}

const std::vector<DigitalMap>& corpus() {
  static const std::vector<DigitalMap> c = small_corpus();
  return c;
}

TEST(DigitalMap, RejectsPartialAndOutsideRules) {
  const auto sq = square4();
  EXPECT_THROW(testing::table_map(sq, sq, {{{0, 0}, {0, 0}}}), DomainError);
  const auto one = finite("one", {{0, 0}}, 1);
  EXPECT_THROW(testing::table_map(one, one, {{{0, 0}, {3, 3}}}), DomainError);
}

TEST(Continuity, Examples) {
  const Verdict v = is_continuous(map_5_1());
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->points.front(), (Point{0, 0}));
  EXPECT_TRUE(is_continuous(identity_map(square4())).holds);
  for (const char* name : {"sc8_l4", "sc8_l6", "sc8_l7", "sc8_l8"}) {
    const Verdict z = is_continuous(testing::modular_on_line(fixture_curve(name)));
    EXPECT_TRUE(z.holds) << name;
    EXPECT_GT(z.checked_points, 0);
  }
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphism(identity_map(diamond8())).holds);
  const auto idx = testing::table_map(
      square4(), diamond8(),
      {{{0, 0}, {0, 0}}, {{1, 0}, {1, 1}}, {{1, 1}, {0, 2}}, {{0, 1}, {-1, 1}}});
  EXPECT_TRUE(is_isomorphism(idx).holds);
  const Verdict z = is_isomorphism(testing::modular_on_line(fixture_curve("sc8_l6")));
  EXPECT_FALSE(z.holds);
  EXPECT_EQ(z.witness->kind, "not-injective");
}

TEST(LIsomorphism, Examples) {
  EXPECT_TRUE(is_L_isomorphism(testing::modular_on_line(fixture_curve("sc8_l4"))).holds);
  EXPECT_FALSE(is_L_isomorphism(map_5_1()).holds);
  EXPECT_TRUE(is_L_isomorphism(identity_map(square4())).holds);
}

TEST(Radius2LIsomorphism, Examples) {
  for (const char* name : {"sc8_l6", "sc8_l7", "sc8_l8"}) {
    EXPECT_TRUE(is_radius2_L_isomorphism(testing::modular_on_line(fixture_curve(name))).holds)
        << name;
  }
  EXPECT_FALSE(is_radius2_L_isomorphism(testing::modular_on_line(fixture_curve("sc8_l4"))).holds);
  EXPECT_TRUE(is_radius2_L_isomorphism(identity_map(diamond8())).holds);
}

TEST(WLIsomorphism, Examples) {
  const Verdict v = is_WL_isomorphism(map_5_1());
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness->points.front(), (Point{0, 0}));
  EXPECT_EQ(v.witness->onto, "image");
  const auto edge = finite("edge", {{0, 0}, {1, 0}}, 1);
  const auto one = finite("one", {{0, 0}}, 1);
  EXPECT_FALSE(is_WL_isomorphism(testing::table_map(edge, one, {{{0, 0}, {0, 0}}, {{1, 0}, {0, 0}}}))
                   .holds);
}

TEST(PLIsomorphism, Examples) {
  EXPECT_TRUE(is_PL_isomorphism(identity_map(square4())).holds);
  EXPECT_FALSE(is_PL_isomorphism(map_5_1()).holds);
  const auto one = finite("one", {{0, 0}}, 1);
  const auto edge = finite("edge", {{0, 0}, {1, 0}}, 1);
  const auto incl = testing::table_map(one, edge, {{{0, 0}, {0, 0}}});
  EXPECT_TRUE(is_WL_isomorphism(incl).holds);
  EXPECT_FALSE(is_PL_isomorphism(incl).holds);
}

TEST(DTEmbedding, Examples) {
  EXPECT_TRUE(exists_DT_embedding(square4(), diamond8()).has_value());
  EXPECT_FALSE(exists_DT_embedding(diamond8(), fixture_curve("sc8_l6")).has_value());
  const auto self = exists_DT_embedding(fixture_curve("sc8_l7"), fixture_curve("sc8_l7"));
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(is_isomorphism(corestrict_to_image(*self)).holds);
}

TEST(DTEmbedding, ReturnedMapsAreIsomorphismsOntoTheirImage) {
  CorpusSpec spec;
  spec.max_points = 4;
  const auto imgs = enumerate_images(spec).images;
  int found = 0;
  for (std::size_t i = 0; i < imgs.size(); i += 7) {
    for (std::size_t j = 0; j < imgs.size(); j += 5) {
      const auto e = exists_DT_embedding(imgs[i], imgs[j]);
      bool any = false;
      enumerate_maps(imgs[i], imgs[j], {}, [&](const DigitalMap& m) {
        any = is_DT_embedding(m).holds;
        return !any;
      });
      EXPECT_EQ(e.has_value(), any) << imgs[i]->name() << " -> " << imgs[j]->name();
      if (e) {
        ++found;
        EXPECT_TRUE(is_DT_embedding(*e).holds);
        EXPECT_TRUE(is_isomorphism(corestrict_to_image(*e)).holds);
      }
    }
  }
  EXPECT_GT(found, 0);
}

TEST(DTEmbedding, BudgetExhaustion) {
  EXPECT_THROW(exists_DT_embedding(fixture_curve("sc8_l7"), fixture_curve("sc8_l8"), 3),
               ResourceError);
}

TEST(Oracle, PredicatesAgreeOnSmallCorpus) {
  for (const auto& m : corpus()) {
    const auto r = oracle::raw(m);
    ASSERT_EQ(is_continuous(m).holds, oracle::continuous(r));
    ASSERT_EQ(is_isomorphism(m).holds, oracle::isomorphism(r));
    ASSERT_EQ(is_L_isomorphism(m).holds, oracle::local_iso(r, 1));
    ASSERT_EQ(is_radius2_L_isomorphism(m).holds, oracle::local_iso(r, 2));
    ASSERT_EQ(is_WL_isomorphism(m).holds, oracle::wl_iso(r));
    ASSERT_EQ(is_PL_isomorphism(m).holds, oracle::pl_iso(r));
  }
}

TEST(Property, ImplicationChainsOnSmallCorpus) {
  for (const auto& m : corpus()) {
    const bool r2 = is_radius2_L_isomorphism(m).holds;
    const bool l = is_L_isomorphism(m).holds;
    const bool c = is_continuous(m).holds;
    if (r2) {
      ASSERT_TRUE(l);
    }
    if (l) {
      ASSERT_TRUE(c);
    }
    if (l) {
      ASSERT_TRUE(is_WL_isomorphism(m).holds);
    }
  }
}

TEST(Property, IsomorphismMatchesGraphFormulation) {
  for (const auto& m : corpus()) {
    const auto& x = m.domain();
    const auto& y = m.codomain();
    bool graph_iso = x.size() == y.size();
    std::vector<bool> hit(static_cast<std::size_t>(y.size()), false);
    for (int i = 0; i < x.size() && graph_iso; ++i) {
      if (hit[static_cast<std::size_t>(m(i))]) graph_iso = false;
      hit[static_cast<std::size_t>(m(i))] = true;
    }
    for (int i = 0; i < x.size() && graph_iso; ++i) {
      for (int j = 0; j < x.size() && graph_iso; ++j) {
        if (i != j && x.adjacent(i, j) != y.adjacent(m(i), m(j))) graph_iso = false;
      }
    }
    ASSERT_EQ(is_isomorphism(m).holds, graph_iso);
  }
}

TEST(Witness, EveryFailureReplays) {
  for (const auto& m : corpus()) {
    for (Property p : {Property::kContinuous, Property::kIso, Property::kLIso, Property::kR2LIso,
                       Property::kWL, Property::kPL, Property::kEmbed}) {
      const Verdict v = evaluate(p, m);
      if (v.holds) continue;
      ASSERT_TRUE(v.witness.has_value());
      ASSERT_TRUE(replay(m, *v.witness)) << property_name(p) << " " << v.witness->kind;
    }
  }
}

TEST(Witness, TamperedWitnessDoesNotReplay) {
  const auto m = identity_map(square4());
  Witness w{"discontinuous", {{0, 0}, {1, 0}}, 1, "", "", {}};
  EXPECT_FALSE(replay(m, w));
  Witness bogus{"not-injective", {{0, 0}, {1, 0}}, 0, "", "", {}};
  EXPECT_FALSE(replay(m, bogus));
}

TEST(Truncation, ModularVerdictsStableUnderDoubling) {
  for (const auto& [name, sc] : fixtures().curves) {
    if (sc->adjacency().t() != 2) continue;
    for (const DigitalMap& m : {testing::modular_on_line(sc), testing::modular_on_ray(sc)}) {
      const DigitalMap big = m.rebind(with_doubled_window(m.domain_ptr()), m.codomain_ptr());
      for (Property p : {Property::kContinuous, Property::kLIso, Property::kR2LIso, Property::kWL,
                         Property::kPL}) {
        EXPECT_EQ(evaluate(p, m).holds, evaluate(p, big).holds) << name << " " << property_name(p);
      }
    }
  }
}

TEST(Truncation, ShiftByOnePeriodGivesSameLocalVerdicts) {
  const auto sc = fixture_curve("sc8_l6");
  const auto m = testing::modular_on_ray(sc);
  for (int x = 6; x < 12; ++x) {
    const int i = *m.domain().index_of(Point{x});
    const int j = *m.domain().index_of(Point{x + 6});
    if (!m.domain().trusted(j, 2)) continue;
    for (int r : {1, 2}) {
      EXPECT_EQ(detail::restriction_failure(m, i, r, false).has_value(),
                detail::restriction_failure(m, j, r, false).has_value())
          << x << " r=" << r;
    }
  }
}

TEST(LocalPredicates, SeparateWithDisconnectedCodomains) {
  const auto edge = finite("edge", {{0, 0}, {0, 1}}, 1);
  const auto one = finite("one", {{0, 0}}, 1);
  const auto two_points = finite("apart", {{0, 0}, {2, 2}}, 1);
  const auto edge_and_point = finite("edge+", {{0, 0}, {0, 1}, {3, 3}}, 1);
  ASSERT_FALSE(is_connected(*two_points));
  ASSERT_FALSE(is_connected(*edge_and_point));
  const DigitalMap fold = DigitalMap::from_indices(edge, two_points, {0, 0});
  EXPECT_TRUE(is_PL_isomorphism(fold).holds);
  EXPECT_FALSE(is_WL_isomorphism(fold).holds);
  const DigitalMap include = DigitalMap::from_indices(one, edge_and_point, {0});
  EXPECT_TRUE(is_WL_isomorphism(include).holds);
  EXPECT_FALSE(is_PL_isomorphism(include).holds);
}

}  // namespace
}  // namespace dtk
