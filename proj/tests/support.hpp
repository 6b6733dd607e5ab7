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

#include <filesystem>
#include <string>
#include <vector>

#include "dtk/harness.hpp"
#include "dtk/io.hpp"

namespace dtk::testing {

inline std::filesystem::path fixture_dir() { return DTK_FIXTURE_DIR; }

inline ImagePtr finite(std::string name, std::vector<Point> pts, int t, int n = 2) {
  return DigitalImage::make(std::move(name), FiniteSet{std::move(pts)}, Adjacency(t, n));
}

inline ImagePtr square4() { return finite("square", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 1); }

inline ImagePtr diamond8() { return finite("diamond", {{0, 0}, {1, 1}, {0, 2}, {-1, 1}}, 2); }

inline ImagePtr ray(int start, int end, int margin = 2, std::optional<int> period = {}) {
  return DigitalImage::make("ray", TruncatedRay{start, end, margin, period}, Adjacency(1, 1));
}

inline ImagePtr line(int lo, int hi, int margin = 2, std::optional<int> period = {}) {
  return DigitalImage::make("line", TruncatedLine{lo, hi, margin, period}, Adjacency(1, 1));
}

inline CurveSpec curve_of(const ImagePtr& img) { return *curve_order(*img); }

inline const FixtureSet& fixtures() {
  static const FixtureSet fs = load_fixtures(fixture_dir());
  return fs;
}

inline ImagePtr fixture_curve(const std::string& name) {
  for (const auto& [n, img] : fixtures().curves) {
    if (n == name) return img;
  }
  throw ConfigError("no curve fixture " + name);
}

// t -> cycle[t mod l] on Z (window [-2l, 2l]) or Z^+ (window [0, 3l+2]).
inline DigitalMap modular_on_line(const ImagePtr& sc) {
  const CurveSpec c = curve_of(sc);
  const int l = static_cast<int>(c.sequence.size());
  return modular_map(line(-2 * l, 2 * l, 2, l), c, sc);
}

inline DigitalMap modular_on_ray(const ImagePtr& sc) {
  const CurveSpec c = curve_of(sc);
  const int l = static_cast<int>(c.sequence.size());
  return modular_map(ray(0, 3 * l + 2, 2, l), c, sc);
}

inline DigitalMap table_map(const ImagePtr& x, const ImagePtr& y,
                            std::vector<std::pair<Point, Point>> pairs) {
  return DigitalMap(x, y, TableRule{std::move(pairs)});
}

}  // namespace dtk::testing
