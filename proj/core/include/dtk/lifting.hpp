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

// Path lifting through digital maps and digital homotopies.
//
// A homotopy between two k-paths f, g : [0,m] -> X is taken to be a grid of
// points whose rows are k-paths (row 0 = f, last row = g) and whose columns
// are k-paths; with fixed endpoints, columns 0 and m are constant. Every
// homotopy-dependent check in this module relies on that definition.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dtk/morphism.hpp"

namespace dtk {

// A finite point sequence in an image whose consecutive points are equal or
// adjacent.
class KPath {
 public:
  // Throws DomainError for an empty sequence, a point outside the image, or
  // a step between non-adjacent distinct points.
  KPath(ImagePtr image, std::vector<Point> points);

  const DigitalImage& image() const { return *image_; }
  const ImagePtr& image_ptr() const { return image_; }
  const std::vector<Point>& points() const { return points_; }
  // Number of steps m for a path on [0, m].
  int length() const { return static_cast<int>(points_.size()) - 1; }
  const Point& front() const { return points_.front(); }
  const Point& back() const { return points_.back(); }

  friend bool operator==(const KPath& a, const KPath& b) { return a.points_ == b.points_; }

 private:
  ImagePtr image_;
  std::vector<Point> points_;
};

// grid[i] is stage i; every stage has the same number of points.
struct KHomotopy {
  ImagePtr image;
  std::vector<std::vector<Point>> grid;
  bool fixed_endpoints = true;
};

// The path m o f.
KPath push_forward(const DigitalMap& m, const KPath& f);

inline constexpr std::uint64_t kDefaultLiftBudget = 1'000'000;

// Every lift g of f with m o g = f and g(0) = e0, in lexicographic order.
// Each step stays put or moves to an adjacent domain point. Throws
// DomainError when m(e0) != f(0) or f does not lie in the codomain, and
// ResourceError past `budget` lifts.
std::vector<KPath> lift_path(const DigitalMap& m, const KPath& f, const Point& e0,
                             std::uint64_t budget = kDefaultLiftBudget);

// Throws DomainError for a ragged grid or mismatched path lengths.
Verdict verify_homotopy(const KHomotopy& h, const KPath& f, const KPath& g);

// A (path, start) pair whose lift count is not exactly one.
struct LiftingDefect {
  std::vector<Point> path;
  Point start;
  std::int64_t lift_count = 0;
};

struct UniqueLiftingReport {
  int max_len = 0;
  // Defects whose every proper prefix lifts uniquely, in canonical order.
  std::vector<LiftingDefect> defects;
  // All defective (path, start) pairs, including extensions of the above.
  std::int64_t defect_count = 0;
  std::int64_t pairs_checked = 0;

  bool holds() const { return defect_count == 0; }
};

inline constexpr std::uint64_t kDefaultPathBudget = 100'000'000;

// Enumerates every codomain path with at most max_len steps and every start
// point over its first point (on truncated domains, only starts at least
// margin + max_len away from a cut). Throws ResourceError past `budget`
// (path, start) pairs.
UniqueLiftingReport check_unique_lifting(const DigitalMap& m, int max_len,
                                         std::uint64_t budget = kDefaultPathBudget);

enum class Outcome { kHolds, kFails, kInconclusive };

const char* outcome_name(Outcome o);

struct HomotopySearchLimits {
  int max_stages = 8;
  std::uint64_t max_states = 1'000'000;
};

struct HomotopyLiftingResult {
  Outcome outcome = Outcome::kInconclusive;
  // Present exactly when outcome == kHolds; verified before it is returned.
  std::optional<KHomotopy> certificate;
  std::optional<Witness> witness;
  std::uint64_t states_explored = 0;
};

// Given paths g0, g1 in the domain with a common start and a verified
// fixed-endpoint homotopy h_down from m o g0 to m o g1: holds when g0 and g1
// end at the same point and a fixed-endpoint homotopy from g0 to g1 exists
// in the domain (breadth-first over stages, bounded by `limits`). Throws
// DomainError when the preconditions fail.
HomotopyLiftingResult check_homotopy_lifting(const DigitalMap& m, const KPath& g0,
                                             const KPath& g1, const KHomotopy& h_down,
                                             const HomotopySearchLimits& limits = {});

}  // namespace dtk
