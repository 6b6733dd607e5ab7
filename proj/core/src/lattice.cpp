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

#include "dtk/lattice.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "dtk/errors.hpp"

namespace dtk {

Point::Point(std::initializer_list<int> coords)
    : Point(std::span<const int>(coords.begin(), coords.size())) {}

Point::Point(std::span<const int> coords) {
  if (coords.empty() || coords.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw DomainError("point dimension must be in [1, " + std::to_string(kMaxDimension) +
                      "]");
  }
  dim_ = static_cast<int>(coords.size());
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Point Point::operator+(const Point& o) const {
  if (dim_ != o.dim_) throw DomainError("dimension mismatch in point addition");
  Point r = *this;
  for (int i = 0; i < dim_; ++i) r[i] += o[i];
  return r;
}

Point Point::operator-(const Point& o) const {
  if (dim_ != o.dim_) throw DomainError("dimension mismatch in point subtraction");
  Point r = *this;
  for (int i = 0; i < dim_; ++i) r[i] -= o[i];
  return r;
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

std::int64_t k_value(int t, int n) {
  if (n < 1 || n > kMaxDimension) {
    throw DomainError("k(t,n) requires 1 <= n <= " + std::to_string(kMaxDimension));
  }
  if (t < 1 || t > n) throw DomainError("k(t,n) requires 1 <= t <= n");
  std::int64_t k = 0;
  std::int64_t binom = 1;  // C(n, i)
  std::int64_t pow2 = 1;
  for (int i = 1; i <= t; ++i) {
    binom = binom * (n - i + 1) / i;
    pow2 *= 2;
    k += pow2 * binom;
  }
  return k;
}

Adjacency::Adjacency(int t, int n) : t_(t), n_(n), k_(k_value(t, n)) {}

bool adjacent(const Point& p, const Point& q, const Adjacency& adj) {
  if (p.dim() != adj.n() || q.dim() != adj.n()) {
    throw DomainError("point dimension does not match adjacency n=" + std::to_string(adj.n()));
  }
  int differing = 0;
  for (int i = 0; i < adj.n(); ++i) {
    const int d = p[i] - q[i];
    if (d == 0) continue;
    if (d != 1 && d != -1) return false;
    if (++differing > adj.t()) return false;
  }
  return differing >= 1;
}

namespace {

// All nonzero offsets in {-1,0,1}^n with at most t nonzero entries.
std::vector<Point> adjacency_offsets(const Adjacency& adj) {
  std::vector<Point> out;
  const int n = adj.n();
  std::vector<int> digits(static_cast<std::size_t>(n), -1);
  while (true) {
    int nonzero = 0;
    for (int d : digits) nonzero += d != 0;
    if (nonzero >= 1 && nonzero <= adj.t()) out.emplace_back(std::span<const int>(digits));
    int pos = 0;
    while (pos < n && digits[static_cast<std::size_t>(pos)] == 1) {
      digits[static_cast<std::size_t>(pos)] = -1;
      ++pos;
    }
    if (pos == n) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  return out;
}

void check_window(int lo, int hi, int margin, const std::optional<int>& period,
                  const Adjacency& adj, const char* kind) {
  if (adj.n() != 1) throw DomainError(std::string(kind) + " carriers are 1-dimensional");
  if (hi < lo) throw DomainError(std::string(kind) + " window is empty");
  if (margin < 0) throw DomainError("margin must be non-negative");
  if (period) {
    if (*period < 1) throw DomainError("period must be positive");
    if (static_cast<std::int64_t>(hi) - lo < 3LL * *period) {
      throw DomainError(std::string(kind) + " window must span at least three periods");
    }
  }
}

}  // namespace

DigitalImage::DigitalImage(std::string name, Carrier carrier, Adjacency adjacency)
    : name_(std::move(name)), carrier_(std::move(carrier)), adjacency_(adjacency) {
  if (const auto* fs = std::get_if<FiniteSet>(&carrier_)) {
    points_ = fs->points;
    for (const Point& p : points_) {
      if (p.dim() != adjacency_.n()) {
        throw DomainError("point " + to_string(p) + " has dimension " + std::to_string(p.dim()) +
                          ", image has n=" + std::to_string(adjacency_.n()));
      }
    }
    std::sort(points_.begin(), points_.end());
    if (auto dup = std::adjacent_find(points_.begin(), points_.end()); dup != points_.end()) {
      throw DomainError("duplicate point " + to_string(*dup) + " in image " + name_);
    }
    cut_distance_.assign(points_.size(), kInfinite);
  } else if (const auto* ray = std::get_if<TruncatedRay>(&carrier_)) {
    check_window(ray->start, ray->end, ray->margin, ray->period, adjacency_, "ray");
    for (int x = ray->start; x <= ray->end; ++x) {
      points_.push_back(Point{x});
      cut_distance_.push_back(ray->end - x);
    }
  } else {
    const auto& line = std::get<TruncatedLine>(carrier_);
    check_window(line.lo, line.hi, line.margin, line.period, adjacency_, "line");
    for (int x = line.lo; x <= line.hi; ++x) {
      points_.push_back(Point{x});
      cut_distance_.push_back(std::min(x - line.lo, line.hi - x));
    }
  }

  const auto offsets = adjacency_offsets(adjacency_);
  neighbors_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (const Point& off : offsets) {
      if (auto j = index_of(points_[i] + off)) neighbors_[i].push_back(*j);
    }
    std::sort(neighbors_[i].begin(), neighbors_[i].end());
  }
  ball1_.resize(points_.size());
  ball2_.resize(points_.size());
  for (int i = 0; i < size(); ++i) {
    ball1_[static_cast<std::size_t>(i)] = bfs_ball(i, 1);
    ball2_[static_cast<std::size_t>(i)] = bfs_ball(i, 2);
  }
}

std::optional<int> DigitalImage::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<int>(it - points_.begin());
}

int DigitalImage::require_index(const Point& p, const char* what) const {
  if (auto i = index_of(p)) return *i;
  throw DomainError(std::string(what) + " " + to_string(p) + " is not in image " + name_);
}

std::span<const int> DigitalImage::neighbors(int i) const {
  return neighbors_[static_cast<std::size_t>(i)];
}

bool DigitalImage::adjacent(int i, int j) const {
  const auto& nb = neighbors_[static_cast<std::size_t>(i)];
  return std::binary_search(nb.begin(), nb.end(), j);
}

std::span<const int> DigitalImage::ball(int i, int radius) const {
  if (radius == 1) return ball1_[static_cast<std::size_t>(i)];
  if (radius == 2) return ball2_[static_cast<std::size_t>(i)];
  throw DomainError("only radius 1 and 2 balls are cached");
}

std::vector<int> DigitalImage::ball_copy(int i, int radius) const {
  if (radius == 1 || radius == 2) {
    auto b = ball(i, radius);
    return {b.begin(), b.end()};
  }
  return bfs_ball(i, radius);
}

std::vector<int> DigitalImage::bfs_ball(int i, int radius) const {
  std::vector<int> dist(points_.size(), kInfinite);
  std::vector<int> out{i};
  std::deque<int> queue{i};
  dist[static_cast<std::size_t>(i)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (dist[static_cast<std::size_t>(u)] == radius) continue;
    for (int v : neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] != kInfinite) continue;
      dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
      out.push_back(v);
      queue.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> DigitalImage::distances_from(int i) const {
  std::vector<int> dist(points_.size(), kInfinite);
  std::deque<int> queue{i};
  dist[static_cast<std::size_t>(i)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] != kInfinite) continue;
      dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

int DigitalImage::margin() const {
  if (const auto* ray = std::get_if<TruncatedRay>(&carrier_)) return ray->margin;
  if (const auto* line = std::get_if<TruncatedLine>(&carrier_)) return line->margin;
  return 0;
}

std::optional<int> DigitalImage::period() const {
  if (const auto* ray = std::get_if<TruncatedRay>(&carrier_)) return ray->period;
  if (const auto* line = std::get_if<TruncatedLine>(&carrier_)) return line->period;
  return std::nullopt;
}

bool DigitalImage::trusted(int i, int radius) const {
  return cut_distance(i) >= std::max(margin(), radius);
}

ImagePtr with_doubled_window(const ImagePtr& img) {
  if (const auto* ray = std::get_if<TruncatedRay>(&img->carrier())) {
    TruncatedRay r = *ray;
    r.end = r.start + 2 * (ray->end - ray->start);
    return DigitalImage::make(img->name() + "-x2", r, img->adjacency());
  }
  if (const auto* line = std::get_if<TruncatedLine>(&img->carrier())) {
    TruncatedLine l = *line;
    const int len = line->hi - line->lo;
    l.lo = line->lo - len / 2;
    l.hi = l.lo + 2 * len;
    return DigitalImage::make(img->name() + "-x2", l, img->adjacency());
  }
  return img;
}

std::vector<Point> neighborhood(const DigitalImage& img, const Point& x, int eps) {
  if (eps < 1) throw DomainError("neighborhood radius must be >= 1");
  const int i = img.require_index(x);
  std::vector<Point> out;
  for (int j : img.ball_copy(i, eps)) out.push_back(img.point(j));
  return out;
}

int k_distance(const DigitalImage& img, const Point& x, const Point& y) {
  const int i = img.require_index(x);
  const int j = img.require_index(y);
  return img.distances_from(i)[static_cast<std::size_t>(j)];
}

Components components(const DigitalImage& img) {
  if (img.empty()) throw DomainError("connectivity of an empty image is undefined");
  Components out;
  std::vector<bool> seen(static_cast<std::size_t>(img.size()), false);
  for (int s = 0; s < img.size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Point> part;
    std::deque<int> queue{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      part.push_back(img.point(u));
      for (int v : img.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(part.begin(), part.end());
    out.parts.push_back(std::move(part));
  }
  out.connected = out.parts.size() == 1;
  return out;
}

bool is_connected(const DigitalImage& img) { return components(img).connected; }

SccReport validate_scc(const CurveSpec& curve) {
  const auto& seq = curve.sequence;
  const int l = static_cast<int>(seq.size());
  if (l < 4) return {false, std::nullopt, "a simple closed curve needs at least 4 points"};
  for (int i = 0; i < l; ++i) {
    if (seq[static_cast<std::size_t>(i)].dim() != curve.adjacency.n()) {
      return {false, std::pair{i, i}, "point dimension does not match the adjacency"};
    }
  }
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      const Point& p = seq[static_cast<std::size_t>(i)];
      const Point& q = seq[static_cast<std::size_t>(j)];
      if (p == q) return {false, std::pair{i, j}, "repeated point " + to_string(p)};
      const bool consecutive = j - i == 1 || (i == 0 && j == l - 1);
      const bool adj = adjacent(p, q, curve.adjacency);
      if (consecutive && !adj) {
        return {false, std::pair{i, j}, "consecutive points are not adjacent"};
      }
      if (!consecutive && adj) return {false, std::pair{i, j}, "chord between non-consecutive points"};
    }
  }
  return {true, std::nullopt, ""};
}

Box box_of_extent(std::span<const int> extent) {
  std::vector<int> lo(extent.size(), 0);
  std::vector<int> hi;
  for (int e : extent) {
    if (e < 1) throw DomainError("box extents must be positive");
    hi.push_back(e - 1);
  }
  return {Point(std::span<const int>(lo)), Point(std::span<const int>(hi))};
}

namespace {

std::vector<Point> box_points(const Box& box) {
  const int n = box.lo.dim();
  if (box.hi.dim() != n) throw DomainError("box corners have different dimensions");
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    if (box.hi[i] < box.lo[i]) return out;
  }
  Point p = box.lo;
  while (true) {
    out.push_back(p);
    int axis = n - 1;
    while (axis >= 0 && p[axis] == box.hi[axis]) {
      p[axis] = box.lo[axis];
      --axis;
    }
    if (axis < 0) break;
    ++p[axis];
  }
  std::sort(out.begin(), out.end());
  return out;
}

class CycleSearch {
 public:
  CycleSearch(const Adjacency& adj, std::vector<Point> pts, int length, std::uint64_t budget)
      : adj_(adj), pts_(std::move(pts)), length_(length), budget_(budget) {
    const int m = static_cast<int>(pts_.size());
    adjm_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    nbrs_.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j && adjacent(pts_[static_cast<std::size_t>(i)],
                               pts_[static_cast<std::size_t>(j)], adj_)) {
          adjm_[idx(i, j)] = 1;
          nbrs_[static_cast<std::size_t>(i)].push_back(j);
        }
      }
    }
  }

  std::vector<CurveSpec> run() {
    used_.assign(pts_.size(), false);
    for (int s = 0; s < static_cast<int>(pts_.size()); ++s) {
      path_ = {s};
      used_[static_cast<std::size_t>(s)] = true;
      extend();
      used_[static_cast<std::size_t>(s)] = false;
    }
    std::sort(found_.begin(), found_.end(),
              [](const CurveSpec& a, const CurveSpec& b) { return a.sequence < b.sequence; });
    return std::move(found_);
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * pts_.size() + static_cast<std::size_t>(j);
  }

  void spend() {
    if (++spent_ > budget_) {
      throw ResourceError("simple closed curve search exceeded its budget of " +
                          std::to_string(budget_) + " adjacency checks");
    }
  }

  void extend() {
    const int pos = static_cast<int>(path_.size());
    const int start = path_.front();
    const int last = path_.back();
    for (int q : nbrs_[static_cast<std::size_t>(last)]) {
      // The start is the least point of its curve.
      if (q <= start || used_[static_cast<std::size_t>(q)]) continue;
      bool ok = true;
      for (int j = 0; j + 1 < pos && ok; ++j) {
        spend();
        const bool adj = adjm_[idx(q, path_[static_cast<std::size_t>(j)])] != 0;
        const bool must = j == 0 && pos == length_ - 1;
        if (adj != must) ok = false;
      }
      if (!ok) continue;
      if (pos == length_ - 1) {
        if (path_[1] < q) record(q);
        continue;
      }
      path_.push_back(q);
      used_[static_cast<std::size_t>(q)] = true;
      extend();
      used_[static_cast<std::size_t>(q)] = false;
      path_.pop_back();
    }
  }

  void record(int last) {
    CurveSpec c{{}, adj_};
    for (int i : path_) c.sequence.push_back(pts_[static_cast<std::size_t>(i)]);
    c.sequence.push_back(pts_[static_cast<std::size_t>(last)]);
    found_.push_back(std::move(c));
  }

  Adjacency adj_;
  std::vector<Point> pts_;
  int length_;
  std::uint64_t budget_;
  std::uint64_t spent_ = 0;
  std::vector<char> adjm_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<int> path_;
  std::vector<bool> used_;
  std::vector<CurveSpec> found_;
};

}  // namespace

std::vector<CurveSpec> search_scc(const Adjacency& adj, const Box& window, int length,
                                  std::uint64_t budget) {
  if (length < 4) throw DomainError("simple closed curves have length >= 4");
  if (window.lo.dim() != adj.n()) throw DomainError("window dimension does not match adjacency");
  auto pts = box_points(window);
  const auto m = static_cast<std::uint64_t>(pts.size());
  if (m * m > budget) {
    throw ResourceError("window of " + std::to_string(m) + " points is too large for budget " +
                        std::to_string(budget));
  }
  return CycleSearch(adj, std::move(pts), length, budget).run();
}

ImagePtr curve_image(const CurveSpec& curve, std::string name) {
  return DigitalImage::make(std::move(name), FiniteSet{curve.sequence}, curve.adjacency);
}

std::optional<CurveSpec> curve_order(const DigitalImage& img) {
  if (img.truncated() || img.size() < 4) return std::nullopt;
  for (int i = 0; i < img.size(); ++i) {
    if (img.neighbors(i).size() != 2) return std::nullopt;
  }
  CurveSpec c{{}, img.adjacency()};
  int prev = 0;
  int cur = 0;
  for (int step = 0; step < img.size(); ++step) {
    c.sequence.push_back(img.point(cur));
    auto nb = img.neighbors(cur);
    const int next = step == 0 ? nb[0] : (nb[0] == prev ? nb[1] : nb[0]);
    prev = cur;
    cur = next;
  }
  if (cur != 0 || !validate_scc(c).valid) return std::nullopt;
  return c;
}

}  // namespace dtk
