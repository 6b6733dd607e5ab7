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

#include "dtk/lifting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "dtk/errors.hpp"

namespace dtk {

KPath::KPath(ImagePtr image, std::vector<Point> points)
    : image_(std::move(image)), points_(std::move(points)) {
  if (points_.empty()) throw DomainError("a path needs at least one point");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    image_->require_index(points_[i], "path point");
    if (i > 0 && points_[i] != points_[i - 1] &&
        !adjacent(points_[i], points_[i - 1], image_->adjacency())) {
      throw DomainError("path step " + std::to_string(i) + " joins non-adjacent points " +
                        to_string(points_[i - 1]) + " and " + to_string(points_[i]));
    }
  }
}

KPath push_forward(const DigitalMap& m, const KPath& f) {
  std::vector<Point> pts;
  for (const Point& p : f.points()) pts.push_back(m(p));
  return KPath(m.codomain_ptr(), std::move(pts));
}

namespace {

std::vector<int> codomain_indices(const DigitalMap& m, const KPath& f) {
  std::vector<int> out;
  for (const Point& p : f.points()) out.push_back(m.codomain().require_index(p, "path point"));
  return out;
}

void lift_rec(const DigitalMap& m, const std::vector<int>& target, std::vector<int>& cur,
              std::vector<KPath>& out, std::uint64_t budget) {
  if (cur.size() == target.size()) {
    if (out.size() >= budget) {
      throw ResourceError("path lifting exceeded its budget of " + std::to_string(budget) +
                          " lifts");
    }
    std::vector<Point> pts;
    for (int i : cur) pts.push_back(m.domain().point(i));
    out.emplace_back(m.domain_ptr(), std::move(pts));
    return;
  }
  const int want = target[cur.size()];
  for (int y : m.domain().ball(cur.back(), 1)) {
    if (m(y) != want) continue;
    cur.push_back(y);
    lift_rec(m, target, cur, out, budget);
    cur.pop_back();
  }
}

}  // namespace

std::vector<KPath> lift_path(const DigitalMap& m, const KPath& f, const Point& e0,
                             std::uint64_t budget) {
  const auto target = codomain_indices(m, f);
  const int start = m.domain().require_index(e0, "lift start");
  if (m(start) != target.front()) {
    throw DomainError("lift start " + to_string(e0) + " does not lie over " + to_string(f.front()));
  }
  std::vector<KPath> out;
  std::vector<int> cur{start};
  lift_rec(m, target, cur, out, budget);
  return out;
}

Verdict verify_homotopy(const KHomotopy& h, const KPath& f, const KPath& g) {
  if (h.grid.empty()) throw DomainError("homotopy grid has no stages");
  const std::size_t width = h.grid.front().size();
  for (const auto& row : h.grid) {
    if (row.size() != width) throw DomainError("homotopy grid is ragged");
  }
  if (f.points().size() != width || g.points().size() != width) {
    throw DomainError("paths and homotopy rows have different lengths");
  }
  const auto& adj = h.image->adjacency();
  auto fail = [](const char* kind, std::vector<Point> pts, std::string reason) {
    return Verdict::fail(Witness{kind, std::move(pts), 0, "", std::move(reason), {}}, 0,
                         Scope::kExact);
  };
  auto step_ok = [&](const Point& a, const Point& b) { return a == b || adjacent(a, b, adj); };

  for (std::size_t i = 0; i < h.grid.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      if (!h.image->contains(h.grid[i][j])) {
        return fail("homotopy-outside", {h.grid[i][j]},
                    "stage " + std::to_string(i) + " column " + std::to_string(j) +
                        " leaves the image");
      }
    }
  }
  if (h.grid.front() != f.points()) return fail("homotopy-start-row", {}, "stage 0 differs from f");
  if (h.grid.back() != g.points()) return fail("homotopy-end-row", {}, "last stage differs from g");
  Verdict v;
  for (std::size_t i = 0; i < h.grid.size(); ++i) {
    ++v.checked_points;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (!step_ok(h.grid[i][j], h.grid[i][j + 1])) {
        return fail("homotopy-row-break", {h.grid[i][j], h.grid[i][j + 1]},
                    "stage " + std::to_string(i) + " breaks between columns " + std::to_string(j) +
                        " and " + std::to_string(j + 1));
      }
    }
  }
  for (std::size_t j = 0; j < width; ++j) {
    for (std::size_t i = 0; i + 1 < h.grid.size(); ++i) {
      if (!step_ok(h.grid[i][j], h.grid[i + 1][j])) {
        return fail("homotopy-column-break", {h.grid[i][j], h.grid[i + 1][j]},
                    "column " + std::to_string(j) + " breaks between stages " + std::to_string(i) +
                        " and " + std::to_string(i + 1));
      }
      const bool end_column = j == 0 || j + 1 == width;
      if (h.fixed_endpoints && end_column && h.grid[i][j] != h.grid[i + 1][j]) {
        return fail("homotopy-endpoint-moved", {h.grid[i][j], h.grid[i + 1][j]},
                    "endpoint column " + std::to_string(j) + " moves at stage " +
                        std::to_string(i + 1));
      }
    }
  }
  return v;
}

namespace {

class LiftCounter {
 public:
  LiftCounter(const DigitalMap& m, int max_len, std::uint64_t budget, UniqueLiftingReport& report)
      : m_(m), max_len_(max_len), budget_(budget), report_(report) {}

  void run() {
    const auto& dom = m_.domain();
    const auto& cod = m_.codomain();
    for (int b = 0; b < cod.size(); ++b) {
      if (!cod.interior(b)) continue;
      for (int e = 0; e < dom.size(); ++e) {
        if (m_(e) != b) continue;
        if (dom.cut_distance(e) != kInfinite &&
            dom.cut_distance(e) < dom.margin() + max_len_) {
          continue;
        }
        start_ = e;
        path_ = {b};
        visit({{e, 1}}, true);
      }
    }
  }

 private:
  using Counts = std::vector<std::pair<int, std::int64_t>>;

  void visit(const Counts& counts, bool prefix_unique) {
    if (++report_.pairs_checked > static_cast<std::int64_t>(budget_)) {
      throw ResourceError("unique-lifting check exceeded its budget of " +
                          std::to_string(budget_) + " (path, start) pairs");
    }
    std::int64_t total = 0;
    for (const auto& [y, c] : counts) total += c;
    if (total != 1) {
      ++report_.defect_count;
      if (prefix_unique) {
        LiftingDefect d;
        for (int i : path_) d.path.push_back(m_.codomain().point(i));
        d.start = m_.domain().point(start_);
        d.lift_count = total;
        report_.defects.push_back(std::move(d));
      }
    }
    if (static_cast<int>(path_.size()) - 1 == max_len_) return;
    for (int next : m_.codomain().ball(path_.back(), 1)) {
      std::map<int, std::int64_t> acc;
      for (const auto& [y, c] : counts) {
        for (int z : m_.domain().ball(y, 1)) {
          if (m_(z) == next) acc[z] += c;
        }
      }
      path_.push_back(next);
      visit(Counts(acc.begin(), acc.end()), prefix_unique && total == 1);
      path_.pop_back();
    }
  }

  const DigitalMap& m_;
  int max_len_;
  std::uint64_t budget_;
  UniqueLiftingReport& report_;
  int start_ = 0;
  std::vector<int> path_;
};

}  // namespace

UniqueLiftingReport check_unique_lifting(const DigitalMap& m, int max_len, std::uint64_t budget) {
  if (max_len < 0) throw DomainError("max_len must be non-negative");
  UniqueLiftingReport report;
  report.max_len = max_len;
  LiftCounter(m, max_len, budget, report).run();
  return report;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kHolds:
      return "holds";
    case Outcome::kFails:
      return "fails";
    case Outcome::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

// Rows reachable in one stage: same endpoints, each column stays or moves to
// an adjacent point, and the row is itself a path.
void next_rows(const DigitalImage& img, const std::vector<int>& row, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  const std::size_t j = cur.size();
  if (j == row.size()) {
    out.push_back(cur);
    return;
  }
  const bool end_column = j == 0 || j + 1 == row.size();
  auto try_point = [&](int z) {
    if (j > 0 && z != cur.back() && !img.adjacent(z, cur.back())) return;
    cur.push_back(z);
    next_rows(img, row, cur, out);
    cur.pop_back();
  };
  if (end_column) {
    try_point(row[j]);
  } else {
    for (int z : img.ball(row[j], 1)) try_point(z);
  }
}

}  // namespace

HomotopyLiftingResult check_homotopy_lifting(const DigitalMap& m, const KPath& g0,
                                             const KPath& g1, const KHomotopy& h_down,
                                             const HomotopySearchLimits& limits) {
  const auto& dom = m.domain();
  for (const KPath* g : {&g0, &g1}) {
    for (const Point& p : g->points()) dom.require_index(p, "upstairs path point");
  }
  if (g0.front() != g1.front()) throw DomainError("g0 and g1 must start at the same point");
  if (g0.points().size() != g1.points().size()) {
    throw DomainError("g0 and g1 must have the same length");
  }
  if (!h_down.fixed_endpoints) throw DomainError("the downstairs homotopy must fix endpoints");
  const KPath down0 = push_forward(m, g0);
  const KPath down1 = push_forward(m, g1);
  if (Verdict v = verify_homotopy(h_down, down0, down1); !v.holds) {
    throw DomainError("the downstairs homotopy does not verify: " + v.witness->reason);
  }

  HomotopyLiftingResult out;
  if (g0.back() != g1.back()) {
    out.outcome = Outcome::kFails;
    out.witness = Witness{"distinct-terminals", {g0.back(), g1.back()}, 0, "",
                          "lifts of homotopic paths end at different points", {}};
    return out;
  }

  auto to_idx = [&](const KPath& g) {
    std::vector<int> r;
    for (const Point& p : g.points()) r.push_back(*dom.index_of(p));
    return r;
  };
  const std::vector<int> from = to_idx(g0);
  const std::vector<int> goal = to_idx(g1);

  // parent links for certificate reconstruction
  std::map<std::vector<int>, std::vector<int>> parent;
  parent.emplace(from, std::vector<int>{});
  std::vector<std::vector<int>> frontier{from};
  bool found = from == goal;
  int stage = 0;
  while (!found && !frontier.empty() && stage < limits.max_stages) {
    ++stage;
    std::vector<std::vector<int>> next;
    for (const auto& row : frontier) {
      std::vector<std::vector<int>> succ;
      std::vector<int> cur;
      next_rows(dom, row, cur, succ);
      for (auto& s : succ) {
        if (parent.count(s)) continue;
        parent.emplace(s, row);
        if (++out.states_explored > limits.max_states) {
          out.outcome = Outcome::kInconclusive;
          return out;
        }
        if (s == goal) found = true;
        next.push_back(std::move(s));
      }
      if (found) break;
    }
    frontier = std::move(next);
  }

  if (!found) {
    if (frontier.empty()) {
      out.outcome = Outcome::kFails;
      out.witness = Witness{"no-domain-homotopy", {g0.back(), g1.back()}, 0, "",
                            "every fixed-endpoint deformation of g0 was explored; g1 is not "
                            "among them",
                            {}};
    } else {
      out.outcome = Outcome::kInconclusive;
    }
    return out;
  }

  std::vector<std::vector<Point>> rows;
  for (std::vector<int> r = goal; !r.empty(); r = parent.at(r)) {
    std::vector<Point> pts;
    for (int i : r) pts.push_back(dom.point(i));
    rows.push_back(std::move(pts));
  }
  std::reverse(rows.begin(), rows.end());
  KHomotopy cert{m.domain_ptr(), std::move(rows), true};
  if (!verify_homotopy(cert, g0, g1).holds) {
    throw std::logic_error("homotopy search produced an invalid certificate");
  }
  out.outcome = Outcome::kHolds;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace dtk
