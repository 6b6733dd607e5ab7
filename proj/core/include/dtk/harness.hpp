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

// Exhaustive enumeration of small digital images and maps, the implication
// matrix between predicates, separating-witness search, and adjudication of
// the published claims against the shipped fixtures.

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dtk/covering.hpp"
#include "dtk/lifting.hpp"

namespace dtk {

struct CorpusSpec {
  // Extent per axis; the dimension is box.size().
  std::vector<int> box{3, 3};
  int max_points = 5;
  std::vector<Adjacency> adjacencies{Adjacency(1, 2), Adjacency(2, 2)};
  bool connected_only = true;
  // Point subsets examined by enumerate_images.
  std::uint64_t budget = 10'000'000;
  // Maps visited by each map sweep.
  std::uint64_t map_budget = 500'000'000;
};

nlohmann::json corpus_to_json(const CorpusSpec& spec);
// Missing fields keep their defaults. Throws FormatError.
CorpusSpec corpus_from_json(const nlohmann::json& j);

struct ImageCorpus {
  // Ordered by (size, adjacency, points).
  std::vector<ImagePtr> images;
  // subsets_by_size[k]: point sets of size k in the box, before
  // translation deduplication.
  std::vector<std::int64_t> subsets_by_size;
};

// All point sets of 1..max_points points in the box, translated so that
// every axis starts at 0, deduplicated, paired with each adjacency and
// optionally filtered to connected images. Throws ResourceError past
// spec.budget subsets.
ImageCorpus enumerate_images(const CorpusSpec& spec);

struct MapFilter {
  bool only_surjective = false;
  bool only_continuous = false;
};

// Visits every total function X -> Y passing the filter, in lexicographic
// order of the index table; stops early when `visit` returns false. Returns
// the number of maps visited. Throws ResourceError past `budget` search nodes.
std::int64_t enumerate_maps(const ImagePtr& x, const ImagePtr& y, MapFilter filter,
                            const std::function<bool(const DigitalMap&)>& visit,
                            std::uint64_t budget = 500'000'000);

enum class Property {
  kContinuous,
  kIso,
  kLIso,
  kR2LIso,
  kWL,
  kPL,
  kCover1,
  kCoverEps,
  kCoverR2,
  kPseudoV1,
  kPseudoV2,
  kEmbed,
};

std::string_view property_name(Property p);
std::optional<Property> parse_property(std::string_view name);
std::span<const Property> all_properties();
bool reading_dependent(Property p);
// What every map satisfying p is known to satisfy; used to prune sweeps.
MapFilter implied_filter(Property p);

// eps_max <= 0 selects default_eps_max(m) for cover-eps.
Verdict evaluate(Property p, const DigitalMap& m, const Reading& r = {}, int eps_max = 0);

struct SweepOptions {
  int workers = 1;
};

struct SeparatingResult {
  Property p;
  Property q;
  Reading reading;
  CorpusSpec bounds;
  std::optional<DigitalMap> witness;
  // Q's failure on the witness map.
  std::optional<Verdict> q_verdict;
  // Maps examined, in canonical order, up to and including the witness.
  std::int64_t maps_checked = 0;
};

// Smallest corpus map (by |X|+|Y|, then image order, then table order;
// `extra` maps come after the corpus) with P and not Q, or an exhaustive
// statement that none exists within bounds.
SeparatingResult find_separating_witness(Property p, Property q, const CorpusSpec& spec,
                                         const Reading& reading,
                                         std::span<const DigitalMap> extra = {},
                                         const SweepOptions& opts = {});

struct ImplicationCell {
  Property p;
  Property q;
  Reading reading;
  std::optional<DigitalMap> counterexample;
  std::optional<Verdict> q_verdict;
};

struct ImplicationMatrix {
  CorpusSpec bounds;
  std::vector<Property> properties;
  std::vector<Reading> readings;
  std::int64_t maps_checked = 0;
  std::vector<ImplicationCell> cells;

  const ImplicationCell& cell(Property p, Property q, const Reading& r) const;
};

ImplicationMatrix implication_matrix(const CorpusSpec& spec, std::span<const Property> properties,
                                     std::span<const Reading> readings,
                                     std::span<const DigitalMap> extra = {},
                                     const SweepOptions& opts = {});

nlohmann::json separating_to_json(const SeparatingResult& r);
nlohmann::json matrix_to_json(const ImplicationMatrix& m);

// ---------------------------------------------------------------------------
// Claim adjudication.

struct ClaimReport {
  std::string claim;
  std::string subject;
  std::string property;
  Reading reading;
  nlohmann::json asserted;
  nlohmann::json computed;
  bool agree = false;
  // Self-contained and replayable; see replay_certificate.
  nlohmann::json certificate;
};

nlohmann::json claim_to_json(const ClaimReport& c);

struct ClaimOptions {
  SweepOptions sweep;
  // Overrides fixtures/corpus.json when set.
  std::optional<CorpusSpec> corpus;
};

// Fixture files every adjudication run needs, relative to the fixture
// directory.
std::span<const char* const> required_fixtures();

// One row per claim and subject per reading, sorted by (claim, subject,
// property, reading). Throws ConfigError when a fixture is missing. Claims:
//
//   radius2-local            Z -> SC is radius-2 L for l >= 6; only L for l = 4
//   covering-unique-lifting  Z -> SC lifts every short path uniquely
//   homotopy-lifting         downstairs homotopies of Z -> SC (l = 6) lift
//   ray-pseudo-v1            Z+ -> SC is not pseudo-v1
//   ray-pseudo-v2            Z+ -> SC is pseudo-v2 but not cover1
//   ray-no-unique-lifting    Z+ -> SC has a path without a unique lift
//   pseudo-v1-covers         pseudo-v1 implies cover1
//   pl-wl-independent        neither of PL and WL implies the other
//   curve-embedding          SC_l embeds into SC_l' exactly when l = l'
//   corner-map*              the square-to-corner map C -> D fails every
//                            local predicate but meets the slice conditions
std::vector<ClaimReport> run_claims(const std::filesystem::path& fixtures,
                                    const ClaimOptions& opts = {});

// Re-derives a certificate from its embedded data: witnesses are replayed
// against the raw definitions, verdicts and exhaustive statements are
// recomputed. True when the certificate stands.
bool replay_certificate(const nlohmann::json& certificate);

// The fixtures used by the adjudication run, loaded from a directory.
struct FixtureSet {
  std::vector<std::pair<std::string, ImagePtr>> curves;
  std::vector<std::pair<std::string, DigitalMap>> maps;

  const DigitalMap& map(std::string_view name) const;
};

FixtureSet load_fixtures(const std::filesystem::path& dir);

}  // namespace dtk
