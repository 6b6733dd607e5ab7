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

// Fiber decompositions and the covering-type predicates:
//
//   cover1     radius-1 covering map: surjection; for every b,
//              (1) p^-1(N(b,1)) is the union of the slices N(e,1), e in p^-1(b),
//              (2) the slices are pairwise disjoint,
//              (3) p restricted to each slice is an isomorphism onto N(b,1).
//   cover-eps  continuous surjection where each b admits some radius
//              eps <= eps_max for which (1)-(3) hold with N(., eps).
//   cover-r2   the same with eps fixed to 2.
//   pseudo-v1  (1), (2) and a weakened (3): the slice restriction is only a
//              WL-isomorphism (see Reading).
//   pseudo-v2  pseudo-v1 with (1) weakened to: union of slices is contained
//              in p^-1(N(b,1)).
//
// Slices always use the domain's adjacency. For truncated carriers, (3) is
// checked at fiber points whose slice is not clipped, and the "union covers
// the preimage" half of (1) at preimage points with the same property.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtk/morphism.hpp"

namespace dtk {

// Resolution of condition (3) of the pseudo-covering definitions: the slice
// restriction must be an isomorphism onto N(b,1) (onto-target) or onto its
// own image (onto-image, the default).
struct Reading {
  bool restriction_onto_target = false;

  std::string name() const { return restriction_onto_target ? "onto-target" : "onto-image"; }
  static std::optional<Reading> parse(const std::string& s);
  static Reading onto_image() { return {false}; }
  static Reading onto_target() { return {true}; }

  friend bool operator==(const Reading&, const Reading&) = default;
};

struct FiberDecomposition {
  Point base;
  int eps = 1;
  std::vector<Point> fiber;
  // slices[i] = N(fiber[i], eps) in the domain.
  std::vector<std::vector<Point>> slices;
};

// Throws DomainError when b is not in the codomain or m is not surjective.
FiberDecomposition fiber_decomposition(const DigitalMap& m, const Point& b, int eps);

// Conditions (1), with equality, and (2) alone at every base point; no
// surjectivity or restriction requirement.
Verdict slice_conditions(const DigitalMap& m, int eps = 1);

Verdict is_covering_r1(const DigitalMap& m, const Reading& r = {});

struct CoveringEpsVerdict {
  Verdict verdict;
  int eps_max = 1;
  // Least admissible radius per checked base point.
  std::vector<std::pair<Point, int>> minimal_eps;
};

// Largest finite eccentricity of a codomain point (at least 1).
int default_eps_max(const DigitalMap& m);

CoveringEpsVerdict is_covering_eps(const DigitalMap& m, int eps_max, const Reading& r = {});
Verdict is_radius2_covering(const DigitalMap& m, const Reading& r = {});
Verdict is_pseudo_covering_v1(const DigitalMap& m, const Reading& r = {});
Verdict is_pseudo_covering_v2(const DigitalMap& m, const Reading& r = {});

}  // namespace dtk
