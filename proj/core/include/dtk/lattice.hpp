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

// Lattice points of Z^n, the k(t,n)-adjacency relations, digital images
// (finite point sets and truncated windows of Z / Z^+), intrinsic
// neighborhoods and distances, connectivity and simple closed k-curves.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dtk {

inline constexpr int kMaxDimension = 8;

// Distance between points in different components.
inline constexpr int kInfinite = std::numeric_limits<int>::max();

class Point {
 public:
  Point() = default;
  Point(std::initializer_list<int> coords);
  explicit Point(std::span<const int> coords);

  int dim() const { return dim_; }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  std::span<const int> coords() const { return {c_.data(), static_cast<std::size_t>(dim_)}; }

  Point operator+(const Point& o) const;
  Point operator-(const Point& o) const;

  friend bool operator==(const Point& a, const Point& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }
  // Lexicographic on coordinates; this is the point order every search and
  // every "first witness" rule in the library refers to.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.c_ <=> b.c_;
  }

 private:
  std::array<int, kMaxDimension> c_{};
  int dim_ = 0;
};

std::string to_string(const Point& p);

// k(t,n)-adjacency on Z^n: distinct points are adjacent when at most t
// coordinates differ, each by exactly one, and the others coincide.
class Adjacency {
 public:
  Adjacency(int t, int n);

  int t() const { return t_; }
  int n() const { return n_; }
  std::int64_t k() const { return k_; }

  friend bool operator==(const Adjacency&, const Adjacency&) = default;
  friend auto operator<=>(const Adjacency&, const Adjacency&) = default;

 private:
  int t_;
  int n_;
  std::int64_t k_;
};

// sum_{i=1..t} 2^i C(n,i); throws DomainError unless 1 <= t <= n <= 8.
std::int64_t k_value(int t, int n);

// Throws DomainError on dimension mismatch.
bool adjacent(const Point& p, const Point& q, const Adjacency& adj);

// ---------------------------------------------------------------------------
// Carriers.

struct FiniteSet {
  std::vector<Point> points;
};

// [start, end] of Z^+ (shifted). `start` is the genuine endpoint of the ray,
// `end` is an artificial cut.
struct TruncatedRay {
  int start = 0;
  int end = 0;
  int margin = 2;
  std::optional<int> period;
};

// [lo, hi] of Z; both ends are artificial cuts.
struct TruncatedLine {
  int lo = 0;
  int hi = 0;
  int margin = 2;
  std::optional<int> period;
};

using Carrier = std::variant<FiniteSet, TruncatedRay, TruncatedLine>;

class DigitalImage;
using ImagePtr = std::shared_ptr<const DigitalImage>;

// A carrier with an adjacency. Points are materialized in increasing point
// order; all index-based accessors refer to that order. Immutable.
class DigitalImage {
 public:
  DigitalImage(std::string name, Carrier carrier, Adjacency adjacency);

  static ImagePtr make(std::string name, Carrier carrier, Adjacency adjacency) {
    return std::make_shared<const DigitalImage>(std::move(name), std::move(carrier),
                                                adjacency);
  }

  const std::string& name() const { return name_; }
  const Carrier& carrier() const { return carrier_; }
  const Adjacency& adjacency() const { return adjacency_; }

  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  std::span<const Point> points() const { return points_; }
  const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }

  std::optional<int> index_of(const Point& p) const;
  // Throws DomainError naming `what` when p is not in the image.
  int require_index(const Point& p, const char* what = "point") const;
  bool contains(const Point& p) const { return index_of(p).has_value(); }

  // Adjacent points, excluding i itself, increasing.
  std::span<const int> neighbors(int i) const;
  bool adjacent(int i, int j) const;

  // N(x, radius) as sorted indices (x included). Only radii 1 and 2 are
  // cached; use ball_copy for larger ones.
  std::span<const int> ball(int i, int radius) const;
  std::vector<int> ball_copy(int i, int radius) const;
  // Breadth-first distances from i; kInfinite for other components.
  std::vector<int> distances_from(int i) const;

  bool truncated() const { return !std::holds_alternative<FiniteSet>(carrier_); }
  int margin() const;
  std::optional<int> period() const;
  // l-distance to the nearest artificial cut, kInfinite when there is none.
  int cut_distance(int i) const { return cut_distance_[static_cast<std::size_t>(i)]; }
  // Universal quantifiers range over interior points only.
  bool interior(int i) const { return cut_distance(i) >= margin(); }
  // Interior, and N(i, radius) is not clipped by a cut.
  bool trusted(int i, int radius) const;

 private:
  std::vector<int> bfs_ball(int i, int radius) const;

  std::string name_;
  Carrier carrier_;
  Adjacency adjacency_;
  std::vector<Point> points_;
  std::vector<int> cut_distance_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> ball1_;
  std::vector<std::vector<int>> ball2_;
};

// A copy of a truncated image whose window is twice as long (same margin,
// same period); finite images are returned unchanged.
ImagePtr with_doubled_window(const ImagePtr& img);

// N(x, eps) in increasing point order. Throws DomainError when x is not in
// the image or eps < 1.
std::vector<Point> neighborhood(const DigitalImage& img, const Point& x, int eps);

// Length of a shortest simple k-path inside the image; kInfinite when the
// points lie in different components.
int k_distance(const DigitalImage& img, const Point& x, const Point& y);

struct Components {
  bool connected = true;
  // Each component sorted; components ordered by their least point.
  std::vector<std::vector<Point>> parts;
};

// Throws DomainError on an empty image.
Components components(const DigitalImage& img);
bool is_connected(const DigitalImage& img);

// ---------------------------------------------------------------------------
// Simple closed k-curves.

struct CurveSpec {
  std::vector<Point> sequence;
  Adjacency adjacency;
};

struct SccReport {
  bool valid = false;
  // First offending index pair (i < j), when the failure is about a pair.
  std::optional<std::pair<int, int>> violation;
  std::string reason;
};

SccReport validate_scc(const CurveSpec& curve);

// Inclusive axis-aligned box.
struct Box {
  Point lo;
  Point hi;
};

// Box [0, extent_i - 1] per axis.
Box box_of_extent(std::span<const int> extent);

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// Every simple closed k-curve of the given length inside the box, each
// reported once in canonical form: it starts at its least point and runs
// toward the smaller of that point's two curve neighbors. Throws
// ResourceError once more than `budget` adjacency checks would be needed.
std::vector<CurveSpec> search_scc(const Adjacency& adj, const Box& window, int length,
                                  std::uint64_t budget = kDefaultSearchBudget);

// The finite image carried by a curve.
ImagePtr curve_image(const CurveSpec& curve, std::string name);

// Cyclic order of a finite image that is a simple closed curve, in the
// canonical form above; nullopt when the image is not one.
std::optional<CurveSpec> curve_order(const DigitalImage& img);

}  // namespace dtk
