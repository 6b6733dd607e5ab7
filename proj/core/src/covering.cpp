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

#include "dtk/covering.hpp"

#include <algorithm>

#include "dtk/errors.hpp"

namespace dtk {

std::optional<Reading> Reading::parse(const std::string& s) {
  if (s == "onto-image") return onto_image();
  if (s == "onto-target") return onto_target();
  return std::nullopt;
}

namespace {

enum class Union { kEquals, kContained };

std::vector<int> fiber_of(const DigitalMap& m, int b) {
  std::vector<int> out;
  for (int e = 0; e < m.domain().size(); ++e) {
    if (m(e) == b) out.push_back(e);
  }
  return out;
}

// Conditions (1)-(3) at one base point and radius.
std::optional<Witness> base_point_failure(const DigitalMap& m, int b, int eps, Union mode,
                                          bool onto_image, bool check_restriction = true) {
  const auto& dom = m.domain();
  const auto& cod = m.codomain();
  const std::vector<int> target = cod.ball_copy(b, eps);
  auto in_target = [&](int c) { return std::binary_search(target.begin(), target.end(), c); };
  const std::vector<int> fiber = fiber_of(m, b);
  const Point& bp = cod.point(b);

  // (1), slices inside the preimage.
  std::vector<int> owner(static_cast<std::size_t>(dom.size()), -1);
  for (int e : fiber) {
    for (int y : dom.ball_copy(e, eps)) {
      if (!in_target(m(y))) {
        return Witness{"slice-outside-preimage", {bp, dom.point(e), dom.point(y)}, eps, "",
                       "a slice point maps outside N(b,eps)", {}};
      }
    }
  }
  // (1), preimage covered by slices.
  for (int e : fiber) {
    for (int y : dom.ball_copy(e, eps)) {
      if (owner[static_cast<std::size_t>(y)] == -1) owner[static_cast<std::size_t>(y)] = e;
    }
  }
  if (mode == Union::kEquals) {
    for (int y = 0; y < dom.size(); ++y) {
      if (!dom.trusted(y, eps) || !in_target(m(y))) continue;
      if (owner[static_cast<std::size_t>(y)] == -1) {
        return Witness{"fiber-uncovered", {bp, dom.point(y)}, eps, "",
                       "a preimage point of N(b,eps) lies in no slice", {}};
      }
    }
  }
  // (2)
  std::fill(owner.begin(), owner.end(), -1);
  for (int e : fiber) {
    for (int y : dom.ball_copy(e, eps)) {
      int& o = owner[static_cast<std::size_t>(y)];
      if (o != -1) {
        return Witness{"slices-overlap", {bp, dom.point(o), dom.point(e), dom.point(y)}, eps, "",
                       "two slices share a point", {}};
      }
      o = e;
    }
  }
  if (!check_restriction) return std::nullopt;
  // (3)
  for (int e : fiber) {
    if (!dom.trusted(e, eps)) continue;
    if (auto w = detail::restriction_failure(m, e, eps, onto_image)) return w;
  }
  return std::nullopt;
}

Verdict per_base_point(const DigitalMap& m, int eps, Union mode, bool onto_image,
                       bool need_continuity) {
  const Scope scope = scope_of(m, eps);
  if (auto w = detail::surjectivity_failure(m)) return Verdict::fail(std::move(*w), 0, scope);
  if (need_continuity) {
    Verdict c = is_continuous(m);
    if (!c.holds) return c;
  }
  Verdict v;
  v.scope = scope;
  for (int b = 0; b < m.codomain().size(); ++b) {
    if (!m.codomain().trusted(b, eps)) continue;
    ++v.checked_points;
    if (auto w = base_point_failure(m, b, eps, mode, onto_image)) {
      return Verdict::fail(std::move(*w), v.checked_points, scope);
    }
  }
  return v;
}

}  // namespace

FiberDecomposition fiber_decomposition(const DigitalMap& m, const Point& b, int eps) {
  if (eps < 1) throw DomainError("fiber decomposition radius must be >= 1");
  const int bi = m.codomain().require_index(b, "base point");
  if (!is_surjective(m)) throw DomainError("fiber decomposition needs a surjective map");
  FiberDecomposition fd{b, eps, {}, {}};
  for (int e : fiber_of(m, bi)) {
    fd.fiber.push_back(m.domain().point(e));
    fd.slices.push_back(neighborhood(m.domain(), m.domain().point(e), eps));
  }
  return fd;
}

Verdict slice_conditions(const DigitalMap& m, int eps) {
  if (eps < 1) throw DomainError("slice condition radius must be >= 1");
  Verdict v;
  v.scope = scope_of(m, eps);
  for (int b = 0; b < m.codomain().size(); ++b) {
    if (!m.codomain().trusted(b, eps)) continue;
    ++v.checked_points;
    if (auto w = base_point_failure(m, b, eps, Union::kEquals, true, false)) {
      return Verdict::fail(std::move(*w), v.checked_points, v.scope);
    }
  }
  return v;
}

Verdict is_covering_r1(const DigitalMap& m, const Reading&) {
  return per_base_point(m, 1, Union::kEquals, false, false);
}

int default_eps_max(const DigitalMap& m) {
  int best = 1;
  for (int b = 0; b < m.codomain().size(); ++b) {
    for (int d : m.codomain().distances_from(b)) {
      if (d != kInfinite) best = std::max(best, d);
    }
  }
  return best;
}

CoveringEpsVerdict is_covering_eps(const DigitalMap& m, int eps_max, const Reading&) {
  if (eps_max < 1) throw DomainError("eps_max must be >= 1");
  CoveringEpsVerdict out;
  out.eps_max = eps_max;
  const Scope scope = scope_of(m, eps_max);
  if (auto w = detail::surjectivity_failure(m)) {
    out.verdict = Verdict::fail(std::move(*w), 0, scope);
    return out;
  }
  if (Verdict c = is_continuous(m); !c.holds) {
    out.verdict = c;
    return out;
  }
  out.verdict.scope = scope;
  for (int b = 0; b < m.codomain().size(); ++b) {
    if (!m.codomain().trusted(b, eps_max)) continue;
    ++out.verdict.checked_points;
    Witness none{"no-admissible-radius", {m.codomain().point(b)}, eps_max, "",
                 "no radius up to eps_max satisfies (1)-(3)", {}};
    bool found = false;
    for (int eps = 1; eps <= eps_max && !found; ++eps) {
      if (auto w = base_point_failure(m, b, eps, Union::kEquals, false)) {
        none.details.push_back(std::move(*w));
      } else {
        out.minimal_eps.emplace_back(m.codomain().point(b), eps);
        found = true;
      }
    }
    if (!found) {
      out.verdict = Verdict::fail(std::move(none), out.verdict.checked_points, scope);
      return out;
    }
  }
  return out;
}

Verdict is_radius2_covering(const DigitalMap& m, const Reading&) {
  return per_base_point(m, 2, Union::kEquals, false, true);
}

Verdict is_pseudo_covering_v1(const DigitalMap& m, const Reading& r) {
  return per_base_point(m, 1, Union::kEquals, !r.restriction_onto_target, false);
}

Verdict is_pseudo_covering_v2(const DigitalMap& m, const Reading& r) {
  return per_base_point(m, 1, Union::kContained, !r.restriction_onto_target, false);
}

}  // namespace dtk
