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
#include "dtk/lattice.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace dtk {
namespace {

using testing::diamond8;
using testing::finite;
using testing::square4;

TEST(KValue, MatchesKnownValues) {
  EXPECT_EQ(k_value(2, 2), 8);
  EXPECT_EQ(k_value(1, 2), 4);
  EXPECT_EQ(k_value(3, 6), 232);
  EXPECT_EQ(k_value(6, 6), 728);
  EXPECT_EQ(k_value(1, 1), 2);
}

TEST(KValue, AgreesWithOffsetCount) {
  for (int n = 1; n <= 8; ++n) {
    for (int t = 1; t <= n; ++t) EXPECT_EQ(k_value(t, n), oracle::k_value(t, n)) << t << "," << n;
  }
}

TEST(KValue, IncreasingInTAndFullValue) {
  for (int n = 1; n <= 8; ++n) {
    std::int64_t three = 1;
    for (int i = 0; i < n; ++i) three *= 3;
    EXPECT_EQ(k_value(n, n), three - 1);
    for (int t = 1; t < n; ++t) EXPECT_LT(k_value(t, n), k_value(t + 1, n));
  }
}

TEST(KValue, RejectsOutOfRange) {
  EXPECT_THROW(k_value(0, 2), DomainError);
  EXPECT_THROW(k_value(3, 2), DomainError);
  EXPECT_THROW(k_value(1, 9), DomainError);
  EXPECT_THROW(Adjacency(2, 1), DomainError);
}

TEST(Adjacent, Examples) {
  EXPECT_TRUE(adjacent({0, 0}, {1, 0}, Adjacency(1, 2)));
  EXPECT_FALSE(adjacent({0, 0}, {1, 1}, Adjacency(1, 2)));
  EXPECT_FALSE(adjacent({0, 0}, {2, 0}, Adjacency(2, 2)));
  EXPECT_FALSE(adjacent({0, 0}, {0, 0}, Adjacency(2, 2)));
  EXPECT_THROW(adjacent({0, 0}, {0, 0, 0}, Adjacency(2, 2)), DomainError);
}

TEST(Adjacent, SymmetricIrreflexiveAndMatchesOracle) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Point> cube;
    std::vector<int> c(static_cast<std::size_t>(n), -1);
    while (true) {
      cube.emplace_back(std::span<const int>(c));
      std::size_t i = 0;
      while (i < c.size() && c[i] == 1) c[i++] = -1;
      if (i == c.size()) break;
      ++c[i];
    }
    cube.push_back(Point(std::vector<int>(static_cast<std::size_t>(n), 2)));
    for (int t = 1; t <= n; ++t) {
      const Adjacency adj(t, n);
      for (const auto& p : cube) {
        EXPECT_FALSE(adjacent(p, p, adj));
        for (const auto& q : cube) {
          EXPECT_EQ(adjacent(p, q, adj), adjacent(q, p, adj));
          EXPECT_EQ(adjacent(p, q, adj), oracle::adjacent(p, q, t));
        }
      }
    }
  }
}

TEST(Image, RejectsDuplicatesAndBadWindows) {
  EXPECT_THROW(finite("dup", {{0, 0}, {0, 0}}, 1), DomainError);
  EXPECT_THROW(finite("dim", {{0, 0}, {0, 0, 1}}, 1), DomainError);
  EXPECT_THROW(testing::ray(0, 5, 2, 4), DomainError);
  EXPECT_THROW(testing::line(0, 10, -1), DomainError);
  EXPECT_NO_THROW(testing::ray(0, 12, 2, 4));
}

TEST(Neighborhood, SquareCorner) {
  const auto sq = square4();
  EXPECT_EQ(neighborhood(*sq, {0, 0}, 1), (std::vector<Point>{{0, 0}, {0, 1}, {1, 0}}));
  const std::vector<Point> pts(sq->points().begin(), sq->points().end());
  const auto expect = oracle::ball(pts, 1, {0, 0}, 1);
  const auto nb = neighborhood(*sq, {0, 0}, 1);
  EXPECT_EQ(std::set<Point>(nb.begin(), nb.end()), expect);
}

TEST(Neighborhood, RayEndpointAndSingleton) {
  const auto r = testing::ray(0, 20);
  EXPECT_EQ(neighborhood(*r, {0}, 1), (std::vector<Point>{{0}, {1}}));
  const auto s = finite("one", {{4, 4}}, 2);
  for (int eps = 1; eps <= 4; ++eps) {
    EXPECT_EQ(neighborhood(*s, {4, 4}, eps), (std::vector<Point>{{4, 4}}));
  }
}

TEST(Neighborhood, Errors) {
  EXPECT_THROW(neighborhood(*square4(), {5, 5}, 1), DomainError);
  EXPECT_THROW(neighborhood(*square4(), {0, 0}, 0), DomainError);
}

TEST(Neighborhood, NestedAndEqualToOracleBall) {
  const auto img = finite("blob", {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {0, 2}, {5, 5}}, 2);
  const std::vector<Point> pts(img->points().begin(), img->points().end());
  for (int t = 1; t <= 2; ++t) {
    const auto im = finite("blob", pts, t);
    for (const auto& x : pts) {
      for (int eps = 1; eps <= 4; ++eps) {
        const auto nb = neighborhood(*im, x, eps);
        EXPECT_TRUE(std::binary_search(nb.begin(), nb.end(), x));
        EXPECT_EQ(std::set<Point>(nb.begin(), nb.end()), oracle::ball(pts, t, x, eps));
        const auto wider = neighborhood(*im, x, eps + 1);
        EXPECT_TRUE(std::includes(wider.begin(), wider.end(), nb.begin(), nb.end()));
      }
    }
  }
}

TEST(KDistance, RayLine) {
  EXPECT_EQ(k_distance(*testing::ray(0, 20), {0}, {5}), 5);
  EXPECT_EQ(k_distance(*square4(), {0, 0}, {0, 0}), 0);
}

TEST(KDistance, AntipodalOnLengthSixCurveMatchesBruteForce) {
  const auto sc = testing::fixture_curve("sc8_l6");
  const auto c = testing::curve_of(sc);
  const std::vector<Point> pts(sc->points().begin(), sc->points().end());
  for (int i = 0; i < 6; ++i) {
    const Point& a = c.sequence[static_cast<std::size_t>(i)];
    const Point& b = c.sequence[static_cast<std::size_t>((i + 3) % 6)];
    EXPECT_EQ(k_distance(*sc, a, b), 3);
    EXPECT_EQ(oracle::brute_distance(pts, 2, a, b), 3);
  }
}

TEST(KDistance, DifferentComponentsIsInfinite) {
  const auto img = finite("apart", {{0, 0}, {5, 5}}, 2);
  EXPECT_EQ(k_distance(*img, {0, 0}, {5, 5}), kInfinite);
  EXPECT_THROW(k_distance(*img, {0, 0}, {1, 1}), DomainError);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(*finite("one", {{3, 3}}, 1)));
  const auto apart = finite("apart", {{0, 0}, {5, 5}}, 2);
  EXPECT_FALSE(is_connected(*apart));
  EXPECT_EQ(components(*apart).parts.size(), 2u);
  EXPECT_TRUE(is_connected(*diamond8()));
  EXPECT_THROW(components(*finite("none", {}, 1)), DomainError);
}

TEST(Scc, Validator) {
  const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_TRUE(validate_scc({sq, Adjacency(1, 2)}).valid);
  const auto chord = validate_scc({sq, Adjacency(2, 2)});
  EXPECT_FALSE(chord.valid);
  ASSERT_TRUE(chord.violation.has_value());
  EXPECT_EQ(*chord.violation, std::make_pair(0, 2));
  EXPECT_FALSE(validate_scc({{{0, 0}, {1, 0}, {1, 1}}, Adjacency(2, 2)}).valid);
  EXPECT_FALSE(validate_scc({{{0, 0}, {1, 0}, {1, 0}, {0, 1}}, Adjacency(1, 2)}).valid);
}

TEST(Scc, EveryAcceptedCurveHasTwoNeighborsPerPoint) {
  for (int l : {4, 6, 7, 8}) {
    for (const auto& c : search_scc(Adjacency(2, 2), box_of_extent(std::vector<int>{5, 5}), l)) {
      ASSERT_TRUE(validate_scc(c).valid);
      for (const auto& p : c.sequence) {
        int deg = 0;
        for (const auto& q : c.sequence) deg += oracle::adjacent(p, q, 2);
        EXPECT_EQ(deg, 2);
      }
    }
  }
}

TEST(Scc, SearchExamples) {
  const Box five = box_of_extent(std::vector<int>{5, 5});
  const auto fours = search_scc(Adjacency(2, 2), five, 4);
  EXPECT_FALSE(fours.empty());
  const std::set<Point> diamond{{1, 0}, {2, 1}, {1, 2}, {0, 1}};
  EXPECT_TRUE(std::any_of(fours.begin(), fours.end(), [&](const CurveSpec& c) {
    return std::set<Point>(c.sequence.begin(), c.sequence.end()) == diamond;
  }));
  EXPECT_TRUE(search_scc(Adjacency(2, 2), five, 5).empty());
  const auto unit = search_scc(Adjacency(1, 2), box_of_extent(std::vector<int>{4, 4}), 4);
  const std::set<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_TRUE(std::any_of(unit.begin(), unit.end(), [&](const CurveSpec& c) {
    return std::set<Point>(c.sequence.begin(), c.sequence.end()) == square;
  }));
}

TEST(Scc, SearchIsCanonicalAndDuplicateFree) {
  const auto curves = search_scc(Adjacency(2, 2), box_of_extent(std::vector<int>{5, 5}), 6);
  std::set<std::set<Point>> seen;
  for (const auto& c : curves) {
    EXPECT_TRUE(seen.insert({c.sequence.begin(), c.sequence.end()}).second);
    EXPECT_EQ(c.sequence.front(), *std::min_element(c.sequence.begin(), c.sequence.end()));
    EXPECT_LT(c.sequence[1], c.sequence.back());
  }
}

TEST(Scc, BudgetExhaustionIsAResourceError) {
  EXPECT_THROW(search_scc(Adjacency(2, 2), box_of_extent(std::vector<int>{6, 6}), 8, 1000),
               ResourceError);
}

TEST(Scc, FixturesAreCurvesOfTheirLength) {
  for (const auto& [name, img] : testing::fixtures().curves) {
    const auto order = curve_order(*img);
    ASSERT_TRUE(order.has_value()) << name;
    EXPECT_TRUE(validate_scc(*order).valid);
    EXPECT_EQ(static_cast<int>(order->sequence.size()), img->size());
  }
}

TEST(Truncation, RayEndpointIsInteriorCutIsNot) {
  const auto r = testing::ray(0, 12, 2, 4);
  EXPECT_TRUE(r->interior(*r->index_of({0})));
  EXPECT_FALSE(r->interior(*r->index_of({12})));
  EXPECT_FALSE(r->interior(*r->index_of({11})));
  EXPECT_TRUE(r->interior(*r->index_of({10})));
  const auto l = testing::line(-8, 8, 2, 4);
  EXPECT_FALSE(l->interior(*l->index_of({-7})));
  EXPECT_TRUE(l->interior(*l->index_of({-6})));
}

TEST(Truncation, DoubledWindowKeepsMarginAndPeriod) {
  const auto r = with_doubled_window(testing::ray(0, 14, 2, 4));
  EXPECT_EQ(r->size(), 29);
  EXPECT_EQ(r->margin(), 2);
  EXPECT_EQ(r->period(), 4);
  const auto l = with_doubled_window(testing::line(-8, 8, 2, 4));
  EXPECT_EQ(l->size(), 33);
}

}  // namespace
}  // namespace dtk
