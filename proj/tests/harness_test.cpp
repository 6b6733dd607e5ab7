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

#include <cmath>

#include "dtk/errors.hpp"
#include "dtk/harness.hpp"
#include "dtk/io.hpp"
#include "support.hpp"

namespace dtk {
namespace {

CorpusSpec tiny(int max_points, bool connected = true) {
  CorpusSpec s;
  s.max_points = max_points;
  s.connected_only = connected;
  return s;
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t surjections(int n, int k) {
  std::int64_t total = 0;
  for (int j = 0; j <= k; ++j) {
    std::int64_t term = binomial(k, j);
    for (int i = 0; i < n; ++i) term *= (k - j);
    total += (j % 2 == 0 ? term : -term);
  }
  return total;
}

TEST(EnumerateImages, SubsetCountsBeforeDedup) {
  CorpusSpec s;
  s.box = {2, 2};
  s.max_points = 2;
  s.adjacencies = {Adjacency(1, 2)};
  s.connected_only = false;
  const auto c = enumerate_images(s);
  ASSERT_EQ(c.subsets_by_size.size(), 3u);
  EXPECT_EQ(c.subsets_by_size[1], 4);
  EXPECT_EQ(c.subsets_by_size[2], 6);
  // Singleton, horizontal pair, vertical pair, two diagonals.
  EXPECT_EQ(c.images.size(), 5u);
}

TEST(EnumerateImages, ConnectedFilterAndTranslationCanonical) {
  const auto c = enumerate_images(tiny(4));
  EXPECT_FALSE(c.images.empty());
  std::set<std::pair<std::int64_t, std::vector<Point>>> seen;
  for (const auto& img : c.images) {
    EXPECT_TRUE(is_connected(*img)) << img->name();
    std::vector<Point> pts(img->points().begin(), img->points().end());
    for (int axis = 0; axis < 2; ++axis) {
      int lo = pts.front()[axis];
      for (const auto& p : pts) lo = std::min(lo, p[axis]);
      EXPECT_EQ(lo, 0);
    }
    EXPECT_TRUE(seen.insert({img->adjacency().k(), pts}).second);
  }
}

TEST(EnumerateImages, EmptyBoxAndBudget) {
  CorpusSpec s;
  s.box = {0, 3};
  EXPECT_TRUE(enumerate_images(s).images.empty());
  CorpusSpec b;
  b.budget = 10;
  EXPECT_THROW(enumerate_images(b), ResourceError);
}

TEST(EnumerateMaps, CountsMatchClosedForms) {
  auto img = [](int n) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({i, 0});
    return testing::finite("row" + std::to_string(n), pts, 1);
  };
  auto none = [](const DigitalMap&) { return true; };
  EXPECT_EQ(enumerate_maps(img(2), img(2), {}, none), 4);
  EXPECT_EQ(enumerate_maps(img(2), img(2), {true, false}, none), 2);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(enumerate_maps(img(n), img(k), {}, none),
                static_cast<std::int64_t>(std::pow(k, n)));
      EXPECT_EQ(enumerate_maps(img(n), img(k), {true, false}, none), surjections(n, k));
    }
  }
}

TEST(EnumerateMaps, ContinuousFilterIsExact) {
  const auto sq = testing::square4();
  std::int64_t all_cont = 0;
  enumerate_maps(sq, sq, {}, [&](const DigitalMap& m) {
    all_cont += is_continuous(m).holds;
    return true;
  });
  const auto n = enumerate_maps(sq, sq, {false, true}, [&](const DigitalMap& m) {
    EXPECT_TRUE(is_continuous(m).holds);
    return true;
  });
  EXPECT_EQ(n, all_cont);
}

TEST(EnumerateMaps, EarlyStopAndBudget) {
  const auto sq = testing::square4();
  int seen = 0;
  EXPECT_EQ(enumerate_maps(sq, sq, {}, [&](const DigitalMap&) { return ++seen < 3; }), 3);
  EXPECT_THROW(enumerate_maps(sq, sq, {}, [](const DigitalMap&) { return true; }, 10),
               ResourceError);
}

TEST(Properties, NamesRoundTrip) {
  for (Property p : all_properties()) EXPECT_EQ(parse_property(property_name(p)), p);
  EXPECT_FALSE(parse_property("nope").has_value());
}

TEST(Properties, EveryPropertyImpliesItsPruningFilter) {
  // Unpruned sweep over all maps between small images, connected or not.
  const auto imgs = enumerate_images(tiny(3, false)).images;
  for (const auto& x : imgs) {
    for (const auto& y : imgs) {
      enumerate_maps(x, y, {}, [&](const DigitalMap& m) {
        const bool cont = is_continuous(m).holds;
        const bool surj = is_surjective(m);
        for (const Reading& r : {Reading::onto_image(), Reading::onto_target()}) {
          for (Property p : all_properties()) {
            if (!evaluate(p, m, r).holds) continue;
            const MapFilter f = implied_filter(p);
            EXPECT_TRUE(!f.only_continuous || cont) << property_name(p);
            EXPECT_TRUE(!f.only_surjective || surj) << property_name(p);
          }
        }
        return true;
      });
    }
  }
}

TEST(SeparatingWitness, Examples) {
  const auto& fx = testing::fixtures();
  const Reading img = Reading::onto_image();
  const DigitalMap zplus = fx.map("zplus_sc8_l4");
  EXPECT_TRUE(is_pseudo_covering_v2(zplus, img).holds);
  EXPECT_FALSE(is_covering_r1(zplus).holds);
  const auto none = find_separating_witness(Property::kCover1, Property::kPseudoV2, tiny(4), img);
  EXPECT_FALSE(none.witness.has_value());
  EXPECT_GT(none.maps_checked, 0);
  const auto same = find_separating_witness(Property::kWL, Property::kWL, tiny(4), img);
  EXPECT_FALSE(same.witness.has_value());
}

TEST(SeparatingWitness, PLAndWLSeparateBothWaysAndReplay) {
  for (auto [p, q] : {std::pair{Property::kPL, Property::kWL}, std::pair{Property::kWL, Property::kPL}}) {
    const auto r = find_separating_witness(p, q, tiny(5), Reading{});
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(evaluate(p, *r.witness).holds);
    ASSERT_TRUE(r.q_verdict && r.q_verdict->witness);
    EXPECT_TRUE(replay(*r.witness, *r.q_verdict->witness));
    EXPECT_LE(r.witness->domain().size() + r.witness->codomain().size(), 3);
  }
}

TEST(SeparatingWitness, WorkerCountDoesNotChangeResult) {
  for (auto [p, q] : {std::pair{Property::kPseudoV2, Property::kCover1},
                      std::pair{Property::kContinuous, Property::kLIso},
                      std::pair{Property::kLIso, Property::kR2LIso}}) {
    const auto a = find_separating_witness(p, q, tiny(4), Reading{}, {}, {1});
    const auto b = find_separating_witness(p, q, tiny(4), Reading{}, {}, {3});
    EXPECT_EQ(separating_to_json(a), separating_to_json(b));
  }
}

TEST(SeparatingWitness, ExtraMapsAreSearchedAfterTheCorpus) {
  const auto& fx = testing::fixtures();
  std::vector<DigitalMap> extra{fx.map("z_sc8_l4")};
  const auto r = find_separating_witness(Property::kLIso, Property::kR2LIso, tiny(4), Reading{},
                                         extra);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->is_modular());
}

TEST(ImplicationMatrix, ExamplesAndTransitivity) {
  const auto& fx = testing::fixtures();
  std::vector<DigitalMap> extra;
  for (const auto& [n, m] : fx.maps) extra.push_back(m);
  const std::vector<Reading> readings{Reading::onto_image(), Reading::onto_target()};
  const auto mat = implication_matrix(tiny(4), all_properties(), readings, extra);
  const Reading r0 = readings[0];
  EXPECT_FALSE(mat.cell(Property::kLIso, Property::kContinuous, r0).counterexample);
  EXPECT_TRUE(mat.cell(Property::kLIso, Property::kR2LIso, r0).counterexample);
  EXPECT_TRUE(mat.cell(Property::kWL, Property::kPL, r0).counterexample);
  EXPECT_TRUE(mat.cell(Property::kPL, Property::kWL, r0).counterexample);
  for (const auto& r : readings) {
    for (Property p : all_properties()) {
      for (Property q : all_properties()) {
        for (Property s : all_properties()) {
          if (!mat.cell(p, q, r).counterexample && !mat.cell(q, s, r).counterexample) {
            EXPECT_FALSE(mat.cell(p, s, r).counterexample)
                << property_name(p) << " " << property_name(q) << " " << property_name(s);
          }
        }
      }
    }
  }
  for (const auto& c : mat.cells) {
    if (!c.counterexample) continue;
    EXPECT_TRUE(evaluate(c.p, *c.counterexample, c.reading).holds);
    EXPECT_TRUE(replay(*c.counterexample, *c.q_verdict->witness));
  }
}

TEST(ImplicationMatrix, WitnessesAgreeWithSeparatingSearch) {
  const std::vector<Property> props{Property::kContinuous, Property::kLIso, Property::kWL,
                                    Property::kPL, Property::kPseudoV2, Property::kCover1};
  const std::vector<Reading> readings{Reading{}};
  const auto mat = implication_matrix(tiny(4), props, readings);
  for (const auto& c : mat.cells) {
    const auto s = find_separating_witness(c.p, c.q, tiny(4), c.reading);
    ASSERT_EQ(c.counterexample.has_value(), s.witness.has_value());
    if (s.witness) {
      EXPECT_EQ(io::map_to_json(*c.counterexample), io::map_to_json(*s.witness));
    }
  }
}

TEST(ImplicationMatrix, WorkerCountDoesNotChangeResult) {
  const std::vector<Reading> readings{Reading::onto_image(), Reading::onto_target()};
  const auto a = implication_matrix(tiny(3), all_properties(), readings, {}, {1});
  const auto b = implication_matrix(tiny(3), all_properties(), readings, {}, {4});
  EXPECT_EQ(matrix_to_json(a), matrix_to_json(b));
}

TEST(Corpus, JsonRoundTripAndErrors) {
  CorpusSpec s = tiny(3, false);
  s.adjacencies = {Adjacency(2, 2)};
  const CorpusSpec back = corpus_from_json(corpus_to_json(s));
  EXPECT_EQ(corpus_to_json(back), corpus_to_json(s));
  EXPECT_THROW(corpus_from_json(nlohmann::json::parse(R"({"max_points":"x"})")), FormatError);
  EXPECT_THROW(corpus_from_json(nlohmann::json::parse(R"({"adjacencies":[[3,2]]})")), FormatError);
}

TEST(Claims, MissingFixtureIsAConfigError) {
  const auto dir = std::filesystem::temp_directory_path() / "dtk_empty_fixtures";
  std::filesystem::create_directories(dir);
  EXPECT_THROW(run_claims(dir), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST(Claims, RowsCoverBothReadingsAndReplay) {
  ClaimOptions opts;
  opts.corpus = tiny(4);
  const auto rows = run_claims(testing::fixture_dir(), opts);
  std::map<std::tuple<std::string, std::string, std::string>, std::set<std::string>> readings;
  for (const auto& r : rows) {
    readings[{r.claim, r.subject, r.property}].insert(r.reading.name());
    EXPECT_TRUE(replay_certificate(r.certificate)) << r.claim << " " << r.subject;
  }
  for (const auto& [key, rs] : readings) EXPECT_EQ(rs.size(), 2u);
  for (const char* id : {"ray-pseudo-v1", "pseudo-v1-covers", "pl-wl-independent", "ray-pseudo-v2", "curve-embedding", "radius2-local", "corner-map-wl"}) {
    EXPECT_TRUE(std::any_of(rows.begin(), rows.end(),
                            [&](const ClaimReport& r) { return r.claim == id; }))
        << id;
  }
}

TEST(Claims, ExpectedRowsAgreeOrDisagree) {
  ClaimOptions opts;
  opts.corpus = tiny(4);
  const auto rows = run_claims(testing::fixture_dir(), opts);
  for (const auto& r : rows) {
    if (r.claim == "radius2-local" || r.claim == "curve-embedding" || r.claim == "corner-map-wl" ||
        r.claim == "ray-pseudo-v1" || r.claim == "covering-unique-lifting" || r.claim == "homotopy-lifting") {
      EXPECT_TRUE(r.agree) << r.claim << " " << r.subject << " " << r.reading.name();
    }
    if (r.claim == "corner-map-slices") {
      EXPECT_FALSE(r.agree);
    }
    if (r.claim == "ray-pseudo-v2" && r.property == "pseudo-v2") {
      EXPECT_EQ(r.agree, r.reading == Reading::onto_image()) << r.subject;
    }
  }
}

TEST(Claims, DeterministicAcrossRunsAndWorkers) {
  ClaimOptions a;
  a.corpus = tiny(4);
  ClaimOptions b = a;
  b.sweep.workers = 3;
  const auto r1 = run_claims(testing::fixture_dir(), a);
  const auto r2 = run_claims(testing::fixture_dir(), a);
  const auto r3 = run_claims(testing::fixture_dir(), b);
  ASSERT_EQ(r1.size(), r2.size());
  ASSERT_EQ(r1.size(), r3.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    EXPECT_EQ(claim_to_json(r1[i]), claim_to_json(r2[i]));
    EXPECT_EQ(claim_to_json(r1[i]), claim_to_json(r3[i]));
  }
}

TEST(Claims, TamperedCertificatesAreRejected) {
  ClaimOptions opts;
  opts.corpus = tiny(3);
  const auto rows = run_claims(testing::fixture_dir(), opts);
  int tampered = 0;
  for (const auto& r : rows) {
    nlohmann::json c = r.certificate;
    const std::string type = c.at("type");
    if (type == "verdict") {
      c["verdict"]["holds"] = !c["verdict"]["holds"].get<bool>();
    } else if (type == "embedding") {
      if (c["map"].is_null()) continue;
      c["map"] = nullptr;
    } else if (type == "separation") {
      if (!c["map"].is_null()) continue;
      c["maps_checked"] = c["maps_checked"].get<std::int64_t>() + 1;
    } else {
      continue;
    }
    EXPECT_FALSE(replay_certificate(c)) << r.claim << " " << r.subject;
    ++tampered;
  }
  EXPECT_GT(tampered, 10);
  EXPECT_FALSE(replay_certificate(nlohmann::json{{"type", "unknown"}}));
}

}  // namespace
}  // namespace dtk
