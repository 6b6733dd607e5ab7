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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtk/lattice.hpp"

namespace dtk {

// Why a predicate failed, in a form that can be replayed against the raw
// definition. `points` is interpreted per kind:
//
//   not-surjective           [b]
//   not-injective            [x, y]           m(x) = m(y)
//   discontinuous            [x, y]           y in N(x,1), m(y) not in N(m(x),1)
//   inverse-discontinuous    [b, c]           c in N(b,1), m^-1 breaks adjacency
//   restriction-collision    [x, a, a']       a, a' in N(x,r) collide
//   restriction-outside      [x, a]           m(a) not in N(m(x),r)
//   restriction-missing      [x, c]           c in N(m(x),r) not hit from N(x,r)
//   restriction-adjacency    [x, a, a']       adjacency not preserved/reflected
//   restriction-not-isomorphic [x]            m(N(x,1)) not isomorphic to N(m(x),1)
//   adjacency-mismatch       [x, y]           adj(x,y) differs from adj(m(x),m(y))
//   fiber-uncovered          [b, y]           m(y) in N(b,r), y in no slice
//   slice-outside-preimage   [b, e, y]        y in N(e,r), m(y) not in N(b,r)
//   slices-overlap           [b, e, e', y]    y in N(e,r) and N(e',r)
//   no-admissible-radius     [b]              `details` holds one witness per radius
//
// `onto` is "neighborhood" or "image" for restriction-* kinds.
struct Witness {
  std::string kind;
  std::vector<Point> points;
  int radius = 0;
  std::string onto;
  std::string reason;
  std::vector<Witness> details;
};

// Which object a verdict speaks about: a finite image pair, a truncated
// window, or (periodic windows) the infinite image it stands for.
enum class Scope { kExact, kWindow, kPeriodic };

const char* scope_name(Scope s);

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  // Quantifier instances examined; zero means the verdict is vacuous.
  std::int64_t checked_points = 0;
  Scope scope = Scope::kExact;

  static Verdict fail(Witness w, std::int64_t checked, Scope scope) {
    return {false, std::move(w), checked, scope};
  }
};

}  // namespace dtk
