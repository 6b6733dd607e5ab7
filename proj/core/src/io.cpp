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

#include "dtk/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "dtk/errors.hpp"

namespace dtk::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

// Wraps construction errors from the library as format errors.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

ImagePtr image_ref(const json& j, const std::filesystem::path& base) {
  if (j.is_string()) return load_image(base / j.get<std::string>());
  return image_from_json(j, base);
}

std::vector<Point> points_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of points");
  std::vector<Point> out;
  for (const json& p : j) out.push_back(point_from_json(p));
  return out;
}

json points_to_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const Point& p : pts) out.push_back(point_to_json(p));
  return out;
}

}  // namespace

json point_to_json(const Point& p) {
  json out = json::array();
  for (int c : p.coords()) out.push_back(c);
  return out;
}

Point point_from_json(const json& j) {
  if (j.is_number_integer()) return Point{j.get<int>()};
  if (!j.is_array() || j.empty()) throw FormatError("a point is a nonempty array of integers");
  std::vector<int> c;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw FormatError("point coordinates must be integers");
    c.push_back(v.get<int>());
  }
  return guarded([&] { return Point(std::span<const int>(c)); });
}

Point parse_point(const std::string& text) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoi(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw FormatError("cannot parse point \"" + text + "\"");
    }
  }
  if (c.empty()) throw FormatError("cannot parse point \"" + text + "\"");
  return guarded([&] { return Point(std::span<const int>(c)); });
}

json image_to_json(const DigitalImage& img) {
  json carrier;
  auto period = [](const std::optional<int>& p) { return p ? json(*p) : json(nullptr); };
  if (const auto* fs = std::get_if<FiniteSet>(&img.carrier())) {
    carrier = {{"kind", "finite"}, {"points", points_to_json({img.points().begin(), img.points().end()})}};
    (void)fs;
  } else if (const auto* ray = std::get_if<TruncatedRay>(&img.carrier())) {
    carrier = {{"kind", "ray"},          {"start", ray->start},
               {"end", ray->end},        {"margin", ray->margin},
               {"period", period(ray->period)}};
  } else {
    const auto& line = std::get<TruncatedLine>(img.carrier());
    carrier = {{"kind", "line"},         {"start", line.lo},
               {"end", line.hi},         {"margin", line.margin},
               {"period", period(line.period)}};
  }
  return {{"name", img.name()},
          {"n", img.adjacency().n()},
          {"t", img.adjacency().t()},
          {"carrier", carrier}};
}

ImagePtr image_from_json(const json& j, const std::filesystem::path&) {
  return guarded([&]() -> ImagePtr {
    const std::string name = field(j, "name").get<std::string>();
    const Adjacency adj(int_field(j, "t"), int_field(j, "n"));
    const json& c = field(j, "carrier");
    const std::string kind = field(c, "kind").get<std::string>();
    if (kind == "finite") {
      auto pts = points_from_json(field(c, "points"));
      std::set<Point> seen;
      for (const Point& p : pts) {
        if (!seen.insert(p).second) throw FormatError("duplicate point " + to_string(p));
      }
      return DigitalImage::make(name, FiniteSet{std::move(pts)}, adj);
    }
    std::optional<int> period;
    if (c.contains("period") && !c.at("period").is_null()) period = int_field(c, "period");
    const int margin = c.contains("margin") ? int_field(c, "margin") : 2;
    if (kind == "ray") {
      return DigitalImage::make(name,
                                TruncatedRay{int_field(c, "start"), int_field(c, "end"), margin, period},
                                adj);
    }
    if (kind == "line") {
      return DigitalImage::make(name,
                                TruncatedLine{int_field(c, "start"), int_field(c, "end"), margin, period},
                                adj);
    }
    throw FormatError("unknown carrier kind \"" + kind + "\"");
  });
}

json curve_to_json(const CurveSpec& c) {
  return {{"n", c.adjacency.n()}, {"t", c.adjacency.t()}, {"sequence", points_to_json(c.sequence)}};
}

json map_to_json(const DigitalMap& m) {
  json rule;
  if (const auto& mod = m.modular()) {
    rule = {{"kind", "mod"}, {"l", mod->period()}, {"cycle", points_to_json(mod->cycle.sequence)}};
  } else {
    json pairs = json::array();
    for (int i = 0; i < m.domain().size(); ++i) {
      pairs.push_back({point_to_json(m.domain().point(i)), point_to_json(m.codomain().point(m(i)))});
    }
    rule = {{"kind", "table"}, {"pairs", pairs}};
  }
  return {{"domain", image_to_json(m.domain())},
          {"codomain", image_to_json(m.codomain())},
          {"rule", rule}};
}

DigitalMap map_from_json(const json& j, const std::filesystem::path& base) {
  const ImagePtr dom = image_ref(field(j, "domain"), base);
  const ImagePtr cod = image_ref(field(j, "codomain"), base);
  return guarded([&]() -> DigitalMap {
    const json& rule = field(j, "rule");
    const std::string kind = field(rule, "kind").get<std::string>();
    if (kind == "table") {
      TableRule t;
      const json& pairs = field(rule, "pairs");
      if (!pairs.is_array()) throw FormatError("\"pairs\" must be an array");
      for (const json& pr : pairs) {
        if (!pr.is_array() || pr.size() != 2) throw FormatError("each pair is [source, target]");
        t.pairs.emplace_back(point_from_json(pr[0]), point_from_json(pr[1]));
      }
      return DigitalMap(dom, cod, t);
    }
    if (kind == "mod") {
      const int l = int_field(rule, "l");
      std::optional<CurveSpec> cycle;
      if (rule.contains("cycle")) {
        cycle = CurveSpec{points_from_json(rule.at("cycle")), cod->adjacency()};
      } else {
        cycle = curve_order(*cod);
        if (!cycle) throw FormatError("codomain of a mod rule must be a simple closed curve");
      }
      if (static_cast<int>(cycle->sequence.size()) != l) {
        throw FormatError("mod rule l=" + std::to_string(l) + " does not match the cycle length");
      }
      if (static_cast<int>(cycle->sequence.size()) != cod->size()) {
        throw FormatError("mod rule cycle must enumerate the whole codomain");
      }
      return modular_map(dom, *cycle, cod);
    }
    throw FormatError("unknown rule kind \"" + kind + "\"");
  });
}

json path_to_json(const KPath& p) {
  return {{"image", image_to_json(p.image())}, {"points", points_to_json(p.points())}};
}

KPath path_from_json(const json& j, const std::filesystem::path& base) {
  const ImagePtr img = image_ref(field(j, "image"), base);
  return guarded([&] { return KPath(img, points_from_json(field(j, "points"))); });
}

json homotopy_to_json(const KHomotopy& h) {
  json grid = json::array();
  for (const auto& row : h.grid) grid.push_back(points_to_json(row));
  return {{"image", image_to_json(*h.image)}, {"grid", grid}, {"fixed_endpoints", h.fixed_endpoints}};
}

KHomotopy homotopy_from_json(const json& j, const std::filesystem::path& base) {
  KHomotopy h;
  h.image = image_ref(field(j, "image"), base);
  const json& grid = field(j, "grid");
  if (!grid.is_array()) throw FormatError("\"grid\" must be an array of rows");
  for (const json& row : grid) h.grid.push_back(points_from_json(row));
  h.fixed_endpoints = j.value("fixed_endpoints", true);
  return h;
}

json witness_to_json(const Witness& w) {
  json out = {{"kind", w.kind}, {"points", points_to_json(w.points)}, {"reason", w.reason}};
  if (w.radius) out["radius"] = w.radius;
  if (!w.onto.empty()) out["onto"] = w.onto;
  if (!w.details.empty()) {
    out["details"] = json::array();
    for (const Witness& d : w.details) out["details"].push_back(witness_to_json(d));
  }
  return out;
}

Witness witness_from_json(const json& j) {
  return guarded([&] {
    Witness w;
    w.kind = field(j, "kind").get<std::string>();
    w.points = points_from_json(field(j, "points"));
    w.radius = j.value("radius", 0);
    w.onto = j.value("onto", "");
    w.reason = j.value("reason", "");
    if (j.contains("details")) {
      for (const json& d : j.at("details")) w.details.push_back(witness_from_json(d));
    }
    return w;
  });
}

json verdict_to_json(const Verdict& v) {
  return {{"holds", v.holds},
          {"witness", v.witness ? witness_to_json(*v.witness) : json(nullptr)},
          {"checked_points", v.checked_points},
          {"scope", scope_name(v.scope)}};
}

json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw FormatError("cannot open " + file.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(file.string() + ": " + e.what());
  }
}

ImagePtr load_image(const std::filesystem::path& file) {
  return image_from_json(read_json_file(file), file.parent_path());
}

DigitalMap load_map(const std::filesystem::path& file) {
  return map_from_json(read_json_file(file), file.parent_path());
}

KPath load_path(const std::filesystem::path& file) {
  return path_from_json(read_json_file(file), file.parent_path());
}

}  // namespace dtk::io
