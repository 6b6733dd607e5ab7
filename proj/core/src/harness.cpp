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

#include "dtk/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "dtk/errors.hpp"
#include "dtk/io.hpp"

namespace dtk {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Corpus specification.

json corpus_to_json(const CorpusSpec& spec) {
  json adj = json::array();
  for (const auto& a : spec.adjacencies) adj.push_back({a.t(), a.n()});
  return {{"box", spec.box},
          {"max_points", spec.max_points},
          {"adjacencies", adj},
          {"connected_only", spec.connected_only},
          {"budget", spec.budget},
          {"map_budget", spec.map_budget}};
}

CorpusSpec corpus_from_json(const json& j) {
  try {
    if (!j.is_object()) throw FormatError("corpus spec must be an object");
    CorpusSpec s;
    if (j.contains("box")) s.box = j.at("box").get<std::vector<int>>();
    if (j.contains("max_points")) s.max_points = j.at("max_points").get<int>();
    if (j.contains("adjacencies")) {
      s.adjacencies.clear();
      for (const auto& a : j.at("adjacencies")) {
        s.adjacencies.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
      }
    }
    if (j.contains("connected_only")) s.connected_only = j.at("connected_only").get<bool>();
    if (j.contains("budget")) s.budget = j.at("budget").get<std::uint64_t>();
    if (j.contains("map_budget")) s.map_budget = j.at("map_budget").get<std::uint64_t>();
    return s;
  } catch (const json::exception& e) {
    throw FormatError(std::string("corpus spec: ") + e.what());
  } catch (const DomainError& e) {
    throw FormatError(std::string("corpus spec: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Images.

namespace {

std::string image_label(const Adjacency& adj, const std::vector<Point>& pts) {
  std::string s = "k" + std::to_string(adj.k()) + ":";
  for (const auto& p : pts) s += to_string(p);
  return s;
}

std::vector<Point> translate_to_origin(std::vector<Point> pts) {
  const int n = pts.front().dim();
  Point lo = pts.front();
  for (const auto& p : pts) {
    for (int i = 0; i < n; ++i) lo[i] = std::min(lo[i], p[i]);
  }
  for (auto& p : pts) p = p - lo;
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

ImageCorpus enumerate_images(const CorpusSpec& spec) {
  ImageCorpus out;
  const int n = static_cast<int>(spec.box.size());
  if (n > kMaxDimension) throw DomainError("corpus box has too many axes");
  for (const auto& a : spec.adjacencies) {
    if (a.n() != n) throw DomainError("corpus adjacency dimension differs from the box");
  }
  const bool empty_box =
      n == 0 || std::any_of(spec.box.begin(), spec.box.end(), [](int e) { return e <= 0; });
  if (empty_box || spec.max_points <= 0) return out;

  const Box box = box_of_extent(spec.box);
  std::vector<Point> cells;
  {
    Point p = box.lo;
    while (true) {
      cells.push_back(p);
      int axis = n - 1;
      while (axis >= 0 && p[axis] == box.hi[axis]) {
        p[axis] = box.lo[axis];
        --axis;
      }
      if (axis < 0) break;
      ++p[axis];
    }
  }
  const int total = static_cast<int>(cells.size());
  const int max_k = std::min(spec.max_points, total);
  out.subsets_by_size.assign(static_cast<std::size_t>(max_k) + 1, 0);

  std::vector<std::set<std::vector<Point>>> shapes(static_cast<std::size_t>(max_k) + 1);
  std::uint64_t examined = 0;
  for (int k = 1; k <= max_k; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      if (++examined > spec.budget) {
        throw ResourceError("image enumeration exceeded its budget of " +
                            std::to_string(spec.budget) + " subsets");
      }
      ++out.subsets_by_size[static_cast<std::size_t>(k)];
      std::vector<Point> pts;
      pts.reserve(idx.size());
      for (int i : idx) pts.push_back(cells[static_cast<std::size_t>(i)]);
      shapes[static_cast<std::size_t>(k)].insert(translate_to_origin(std::move(pts)));
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }

  std::vector<Adjacency> adjs = spec.adjacencies;
  std::sort(adjs.begin(), adjs.end());
  adjs.erase(std::unique(adjs.begin(), adjs.end()), adjs.end());
  for (int k = 1; k <= max_k; ++k) {
    for (const auto& adj : adjs) {
      for (const auto& pts : shapes[static_cast<std::size_t>(k)]) {
        auto img = DigitalImage::make(image_label(adj, pts), FiniteSet{pts}, adj);
        if (spec.connected_only && !is_connected(*img)) continue;
        out.images.push_back(std::move(img));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maps.

std::int64_t enumerate_maps(const ImagePtr& x, const ImagePtr& y, MapFilter filter,
                            const std::function<bool(const DigitalMap&)>& visit,
                            std::uint64_t budget) {
  if (x->truncated() || y->truncated()) throw DomainError("map enumeration needs finite images");
  const int nx = x->size();
  const int ny = y->size();
  if (nx == 0) return 0;
  if (ny == 0) return 0;
  if (filter.only_surjective && nx < ny) return 0;

  std::vector<int> table(static_cast<std::size_t>(nx), -1);
  std::vector<int> hits(static_cast<std::size_t>(ny), 0);
  int unhit = ny;
  std::int64_t count = 0;
  std::uint64_t nodes = 0;
  bool stop = false;

  std::function<void(int)> assign = [&](int i) {
    if (stop) return;
    if (++nodes > budget) {
      throw ResourceError("map enumeration exceeded its budget of " + std::to_string(budget) +
                          " nodes");
    }
    if (i == nx) {
      ++count;
      if (!visit(DigitalMap::from_indices(x, y, table))) stop = true;
      return;
    }
    for (int c = 0; c < ny && !stop; ++c) {
      if (filter.only_continuous) {
        bool ok = true;
        for (int u : x->neighbors(i)) {
          if (u >= i) break;
          const int cu = table[static_cast<std::size_t>(u)];
          if (cu != c && !y->adjacent(cu, c)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      int& h = hits[static_cast<std::size_t>(c)];
      const int new_unhit = unhit - (h == 0 ? 1 : 0);
      if (filter.only_surjective && new_unhit > nx - i - 1) continue;
      table[static_cast<std::size_t>(i)] = c;
      ++h;
      const int saved = unhit;
      unhit = new_unhit;
      assign(i + 1);
      unhit = saved;
      --h;
    }
    table[static_cast<std::size_t>(i)] = -1;
  };
  assign(0);
  return count;
}

// ---------------------------------------------------------------------------
// Properties.

namespace {

constexpr Property kAllProperties[] = {
    Property::kContinuous, Property::kIso,      Property::kLIso,     Property::kR2LIso,
    Property::kWL,         Property::kPL,       Property::kCover1,   Property::kCoverEps,
    Property::kCoverR2,    Property::kPseudoV1, Property::kPseudoV2, Property::kEmbed,
};

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::kContinuous: return "continuous";
    case Property::kIso: return "iso";
    case Property::kLIso: return "l-iso";
    case Property::kR2LIso: return "r2-l-iso";
    case Property::kWL: return "wl";
    case Property::kPL: return "pl";
    case Property::kCover1: return "cover1";
    case Property::kCoverEps: return "cover-eps";
    case Property::kCoverR2: return "cover-r2";
    case Property::kPseudoV1: return "pseudo-v1";
    case Property::kPseudoV2: return "pseudo-v2";
    case Property::kEmbed: return "embed";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  for (Property p : kAllProperties) {
    if (property_name(p) == name) return p;
  }
  return std::nullopt;
}

std::span<const Property> all_properties() { return kAllProperties; }

bool reading_dependent(Property p) {
  return p == Property::kPseudoV1 || p == Property::kPseudoV2;
}

MapFilter implied_filter(Property p) {
  MapFilter f;
  f.only_continuous = true;
  switch (p) {
    case Property::kIso:
    case Property::kCover1:
    case Property::kCoverEps:
    case Property::kCoverR2:
    case Property::kPseudoV1:
    case Property::kPseudoV2:
      f.only_surjective = true;
      break;
    default:
      break;
  }
  return f;
}

Verdict evaluate(Property p, const DigitalMap& m, const Reading& r, int eps_max) {
  switch (p) {
    case Property::kContinuous: return is_continuous(m);
    case Property::kIso: return is_isomorphism(m);
    case Property::kLIso: return is_L_isomorphism(m);
    case Property::kR2LIso: return is_radius2_L_isomorphism(m);
    case Property::kWL: return is_WL_isomorphism(m);
    case Property::kPL: return is_PL_isomorphism(m);
    case Property::kCover1: return is_covering_r1(m, r);
    case Property::kCoverEps:
      return is_covering_eps(m, eps_max > 0 ? eps_max : default_eps_max(m), r).verdict;
    case Property::kCoverR2: return is_radius2_covering(m, r);
    case Property::kPseudoV1: return is_pseudo_covering_v1(m, r);
    case Property::kPseudoV2: return is_pseudo_covering_v2(m, r);
    case Property::kEmbed: return is_DT_embedding(m);
  }
  throw DomainError("unknown property");
}

// ---------------------------------------------------------------------------
// Sweeps.
//
// A sweep walks "units" in canonical order: first every corpus image pair,
// ordered by (|X| + |Y|, X, Y), then each extra map on its own. Unit u goes
// to worker u mod W; results are merged by (unit, ordinal within unit), so
// the outcome does not depend on W.

namespace {

struct Unit {
  ImagePtr x;
  ImagePtr y;
  const DigitalMap* extra = nullptr;
};

std::vector<Unit> build_units(const CorpusSpec& spec, MapFilter filter,
                              std::span<const DigitalMap> extra) {
  const ImageCorpus corpus = enumerate_images(spec);
  const auto& imgs = corpus.images;
  std::vector<std::tuple<int, int, int>> order;
  for (int i = 0; i < static_cast<int>(imgs.size()); ++i) {
    for (int j = 0; j < static_cast<int>(imgs.size()); ++j) {
      const int sx = imgs[static_cast<std::size_t>(i)]->size();
      const int sy = imgs[static_cast<std::size_t>(j)]->size();
      if (filter.only_surjective && sx < sy) continue;
      order.emplace_back(sx + sy, i, j);
    }
  }
  std::sort(order.begin(), order.end());
  std::vector<Unit> units;
  units.reserve(order.size() + extra.size());
  for (const auto& [total, i, j] : order) {
    units.push_back({imgs[static_cast<std::size_t>(i)], imgs[static_cast<std::size_t>(j)]});
  }
  std::vector<const DigitalMap*> ex;
  for (const auto& m : extra) ex.push_back(&m);
  std::stable_sort(ex.begin(), ex.end(), [](const DigitalMap* a, const DigitalMap* b) {
    return a->domain().size() + a->codomain().size() < b->domain().size() + b->codomain().size();
  });
  for (const auto* m : ex) units.push_back({m->domain_ptr(), m->codomain_ptr(), m});
  return units;
}

// Visits the maps of one unit in order; returns the number visited.
std::int64_t run_unit(const Unit& u, MapFilter filter, std::uint64_t budget,
                      const std::function<bool(const DigitalMap&)>& visit) {
  if (u.extra != nullptr) {
    visit(*u.extra);
    return 1;
  }
  return enumerate_maps(u.x, u.y, filter, visit, budget);
}

void run_workers(int workers, const std::function<void(int)>& body) {
  workers = std::max(1, workers);
  if (workers == 1) {
    body(0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

MapFilter combine(std::span<const Property> props) {
  MapFilter f{true, true};
  for (Property p : props) {
    const MapFilter g = implied_filter(p);
    f.only_continuous = f.only_continuous && g.only_continuous;
    f.only_surjective = f.only_surjective && g.only_surjective;
  }
  return f;
}

struct Hit {
  std::size_t unit = std::numeric_limits<std::size_t>::max();
  std::int64_t ordinal = 0;
  std::optional<DigitalMap> map;
  std::optional<Verdict> q_verdict;

  bool before(const Hit& o) const {
    return std::tie(unit, ordinal) < std::tie(o.unit, o.ordinal);
  }
};

}  // namespace

SeparatingResult find_separating_witness(Property p, Property q, const CorpusSpec& spec,
                                         const Reading& reading,
                                         std::span<const DigitalMap> extra,
                                         const SweepOptions& opts) {
  SeparatingResult out{p, q, reading, spec, std::nullopt, std::nullopt, 0};
  if (p == q) return out;
  const MapFilter filter = implied_filter(p);
  const std::vector<Unit> units = build_units(spec, filter, extra);
  const int workers = std::max(1, opts.workers);

  std::vector<std::int64_t> counts(units.size(), 0);
  std::vector<Hit> hits(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

  run_workers(workers, [&](int w) {
    for (std::size_t u = static_cast<std::size_t>(w); u < units.size();
         u += static_cast<std::size_t>(workers)) {
      if (u > best.load()) return;
      std::int64_t ordinal = 0;
      bool found = false;
      counts[u] = run_unit(units[u], filter, spec.map_budget, [&](const DigitalMap& m) {
        const std::int64_t here = ordinal++;
        if (!evaluate(p, m, reading).holds) return true;
        Verdict qv = evaluate(q, m, reading);
        if (qv.holds) return true;
        hits[static_cast<std::size_t>(w)] = Hit{u, here, m, std::move(qv)};
        found = true;
        return false;
      });
      if (found) {
        std::size_t cur = best.load();
        while (u < cur && !best.compare_exchange_weak(cur, u)) {
        }
        return;
      }
    }
  });

  const Hit* winner = nullptr;
  for (const auto& h : hits) {
    if (h.map && (winner == nullptr || h.before(*winner))) winner = &h;
  }
  if (winner == nullptr) {
    for (auto c : counts) out.maps_checked += c;
    return out;
  }
  for (std::size_t u = 0; u < winner->unit; ++u) out.maps_checked += counts[u];
  out.maps_checked += winner->ordinal + 1;
  out.witness = winner->map;
  out.q_verdict = winner->q_verdict;
  return out;
}

const ImplicationCell& ImplicationMatrix::cell(Property p, Property q, const Reading& r) const {
  for (const auto& c : cells) {
    if (c.p == p && c.q == q && c.reading == r) return c;
  }
  throw DomainError("no such implication cell");
}

ImplicationMatrix implication_matrix(const CorpusSpec& spec, std::span<const Property> properties,
                                     std::span<const Reading> readings,
                                     std::span<const DigitalMap> extra,
                                     const SweepOptions& opts) {
  ImplicationMatrix out;
  out.bounds = spec;
  out.properties.assign(properties.begin(), properties.end());
  out.readings.assign(readings.begin(), readings.end());
  if (out.readings.empty()) out.readings.push_back(Reading{});
  const std::size_t np = out.properties.size();
  const std::size_t nr = out.readings.size();
  const std::size_t ncells = nr * np * np;
  auto cell_index = [&](std::size_t r, std::size_t i, std::size_t j) {
    return (r * np + i) * np + j;
  };

  const MapFilter filter = combine(out.properties);
  const std::vector<Unit> units = build_units(spec, filter, extra);
  const int workers = std::max(1, opts.workers);
  std::vector<std::vector<Hit>> best(static_cast<std::size_t>(workers), std::vector<Hit>(ncells));
  std::vector<std::int64_t> counts(units.size(), 0);

  run_workers(workers, [&](int w) {
    auto& mine = best[static_cast<std::size_t>(w)];
    std::vector<Verdict> verdicts(nr * np);
    for (std::size_t u = static_cast<std::size_t>(w); u < units.size();
         u += static_cast<std::size_t>(workers)) {
      std::int64_t ordinal = 0;
      counts[u] = run_unit(units[u], filter, spec.map_budget, [&](const DigitalMap& m) {
        const std::int64_t here = ordinal++;
        for (std::size_t i = 0; i < np; ++i) {
          const Property prop = out.properties[i];
          for (std::size_t r = 0; r < nr; ++r) {
            if (r > 0 && !reading_dependent(prop)) {
              verdicts[r * np + i] = verdicts[i];
            } else {
              verdicts[r * np + i] = evaluate(prop, m, out.readings[r]);
            }
          }
        }
        for (std::size_t r = 0; r < nr; ++r) {
          for (std::size_t i = 0; i < np; ++i) {
            if (!verdicts[r * np + i].holds) continue;
            for (std::size_t j = 0; j < np; ++j) {
              if (verdicts[r * np + j].holds) continue;
              Hit& h = mine[cell_index(r, i, j)];
              if (!h.map) h = Hit{u, here, m, verdicts[r * np + j]};
            }
          }
        }
        return true;
      });
    }
  });

  for (auto c : counts) out.maps_checked += c;
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = 0; j < np; ++j) {
        const Hit* winner = nullptr;
        for (const auto& per_worker : best) {
          const Hit& h = per_worker[cell_index(r, i, j)];
          if (h.map && (winner == nullptr || h.before(*winner))) winner = &h;
        }
        ImplicationCell c{out.properties[i], out.properties[j], out.readings[r], std::nullopt,
                          std::nullopt};
        if (winner != nullptr) {
          c.counterexample = winner->map;
          c.q_verdict = winner->q_verdict;
        }
        out.cells.push_back(std::move(c));
      }
    }
  }
  return out;
}

json separating_to_json(const SeparatingResult& r) {
  json j = {{"p", property_name(r.p)},
            {"q", property_name(r.q)},
            {"reading", r.reading.name()},
            {"bounds", corpus_to_json(r.bounds)},
            {"maps_checked", r.maps_checked}};
  if (r.witness) {
    j["found"] = true;
    j["map"] = io::map_to_json(*r.witness);
    j["q_verdict"] = io::verdict_to_json(*r.q_verdict);
  } else {
    j["found"] = false;
    j["map"] = nullptr;
  }
  return j;
}

json matrix_to_json(const ImplicationMatrix& m) {
  json props = json::array();
  for (Property p : m.properties) props.push_back(property_name(p));
  json readings = json::array();
  for (const auto& r : m.readings) readings.push_back(r.name());
  json cells = json::array();
  for (const auto& c : m.cells) {
    json cj = {{"p", property_name(c.p)},
               {"q", property_name(c.q)},
               {"reading", c.reading.name()},
               {"implies", !c.counterexample.has_value()}};
    if (c.counterexample) {
      cj["counterexample"] = io::map_to_json(*c.counterexample);
      cj["q_verdict"] = io::verdict_to_json(*c.q_verdict);
    }
    cells.push_back(std::move(cj));
  }
  return {{"bounds", corpus_to_json(m.bounds)},
          {"properties", props},
          {"readings", readings},
          {"maps_checked", m.maps_checked},
          {"cells", cells}};
}

// ---------------------------------------------------------------------------
// Fixtures.

namespace {

constexpr const char* kCurveFixtures[] = {
    "images/sc4_l4.json", "images/sc8_l4.json", "images/sc8_l6.json",
    "images/sc8_l7.json", "images/sc8_l8.json",
};

constexpr const char* kMapFixtures[] = {
    "maps/z_sc8_l4.json",     "maps/z_sc8_l6.json",     "maps/z_sc8_l7.json",
    "maps/z_sc8_l8.json",     "maps/zplus_sc8_l4.json", "maps/zplus_sc8_l6.json",
    "maps/zplus_sc8_l8.json", "maps/map_5_1.json",
};

constexpr const char* kRequired[] = {
    "corpus.json",
    "images/sc4_l4.json",     "images/sc8_l4.json",     "images/sc8_l6.json",
    "images/sc8_l7.json",     "images/sc8_l8.json",     "maps/z_sc8_l4.json",
    "maps/z_sc8_l6.json",     "maps/z_sc8_l7.json",     "maps/z_sc8_l8.json",
    "maps/zplus_sc8_l4.json", "maps/zplus_sc8_l6.json", "maps/zplus_sc8_l8.json",
    "maps/map_5_1.json",
};

std::string stem(const char* rel) { return std::filesystem::path(rel).stem().string(); }

}  // namespace

std::span<const char* const> required_fixtures() { return kRequired; }

const DigitalMap& FixtureSet::map(std::string_view name) const {
  for (const auto& [n, m] : maps) {
    if (n == name) return m;
  }
  throw ConfigError("no fixture map named " + std::string(name));
}

FixtureSet load_fixtures(const std::filesystem::path& dir) {
  for (const char* rel : kRequired) {
    if (!std::filesystem::exists(dir / rel)) {
      throw ConfigError("missing fixture " + (dir / rel).string());
    }
  }
  FixtureSet fs;
  for (const char* rel : kCurveFixtures) fs.curves.emplace_back(stem(rel), io::load_image(dir / rel));
  for (const char* rel : kMapFixtures) fs.maps.emplace_back(stem(rel), io::load_map(dir / rel));
  return fs;
}

// ---------------------------------------------------------------------------
// Claims.

json claim_to_json(const ClaimReport& c) {
  return {{"claim", c.claim},       {"subject", c.subject},   {"property", c.property},
          {"reading", c.reading.name()}, {"asserted", c.asserted}, {"computed", c.computed},
          {"agree", c.agree},       {"certificate", c.certificate}};
}

namespace {

constexpr int kLiftingMaxLen = 4;

const char* implication_word(bool separated) { return separated ? "separated" : "implies"; }

ClaimReport verdict_row(std::string claim, std::string subject, Property p, const DigitalMap& m,
                        const Reading& r, bool asserted) {
  const Verdict v = evaluate(p, m, r);
  ClaimReport c{std::move(claim), std::move(subject), std::string(property_name(p)), r,
                asserted, v.holds, v.holds == asserted, {}};
  c.certificate = {{"type", "verdict"},
                   {"property", property_name(p)},
                   {"reading", r.name()},
                   {"map", io::map_to_json(m)},
                   {"verdict", io::verdict_to_json(v)}};
  return c;
}

ClaimReport separation_row(std::string claim, std::string subject, Property p, Property q,
                           const CorpusSpec& corpus, const Reading& r,
                           std::span<const DigitalMap> extra, bool asserted_separated,
                           const SweepOptions& sweep) {
  const SeparatingResult s = find_separating_witness(p, q, corpus, r, extra, sweep);
  const bool separated = s.witness.has_value();
  ClaimReport c{std::move(claim),
                std::move(subject),
                std::string(property_name(p)) + "=>" + std::string(property_name(q)),
                r,
                implication_word(asserted_separated),
                implication_word(separated),
                separated == asserted_separated,
                separating_to_json(s)};
  c.certificate["type"] = "separation";
  json ex = json::array();
  for (const auto& m : extra) ex.push_back(io::map_to_json(m));
  c.certificate["extra"] = std::move(ex);
  return c;
}

ClaimReport embedding_row(const std::string& xname, const ImagePtr& x, const std::string& yname,
                          const ImagePtr& y, const Reading& r, bool asserted) {
  const std::optional<DigitalMap> e = exists_DT_embedding(x, y);
  ClaimReport c{"curve-embedding", xname + "->" + yname, "embed", r, asserted, e.has_value(),
                e.has_value() == asserted, {}};
  c.certificate = {{"type", "embedding"},
                   {"x", io::image_to_json(*x)},
                   {"y", io::image_to_json(*y)},
                   {"map", e ? io::map_to_json(*e) : json(nullptr)}};
  return c;
}

ClaimReport conditions_row(std::string claim, std::string subject, const DigitalMap& m,
                           const Reading& r, bool asserted) {
  const Verdict v = slice_conditions(m, 1);
  ClaimReport c{std::move(claim), std::move(subject), "slice-conditions", r, asserted, v.holds,
                v.holds == asserted, {}};
  c.certificate = {{"type", "slice-conditions"},
                   {"radius", 1},
                   {"map", io::map_to_json(m)},
                   {"verdict", io::verdict_to_json(v)}};
  return c;
}

json defect_to_json(const LiftingDefect& d) {
  json path = json::array();
  for (const auto& p : d.path) path.push_back(io::point_to_json(p));
  return {{"path", path}, {"start", io::point_to_json(d.start)}, {"lift_count", d.lift_count}};
}

ClaimReport lifting_row(std::string claim, std::string subject, const DigitalMap& m,
                        const Reading& r, bool asserted) {
  const UniqueLiftingReport rep = check_unique_lifting(m, kLiftingMaxLen);
  ClaimReport c{std::move(claim), std::move(subject), "unique-lifting", r, asserted,
                rep.holds(), rep.holds() == asserted, {}};
  json defects = json::array();
  for (const auto& d : rep.defects) defects.push_back(defect_to_json(d));
  c.certificate = {{"type", "unique-lifting"},
                   {"map", io::map_to_json(m)},
                   {"max_len", rep.max_len},
                   {"defect_count", rep.defect_count},
                   {"pairs_checked", rep.pairs_checked},
                   {"defects", defects}};
  return c;
}

// `stages` are domain paths whose images form the downstairs homotopy.
ClaimReport homotopy_row(std::string claim, std::string subject, const DigitalMap& m,
                         const std::vector<std::vector<int>>& stages, const Reading& r,
                         bool asserted) {
  auto line_path = [&](const std::vector<int>& ts) {
    std::vector<Point> pts;
    for (int t : ts) pts.push_back(Point{t});
    return KPath(m.domain_ptr(), std::move(pts));
  };
  const KPath g0 = line_path(stages.front());
  const KPath g1 = line_path(stages.back());
  KHomotopy down{m.codomain_ptr(), {}, true};
  for (const auto& st : stages) down.grid.push_back(push_forward(m, line_path(st)).points());

  const HomotopyLiftingResult res = check_homotopy_lifting(m, g0, g1, down);
  const bool conclusive = res.outcome != Outcome::kInconclusive;
  const bool holds = res.outcome == Outcome::kHolds;
  ClaimReport c{std::move(claim),
                std::move(subject),
                "homotopy-lifting",
                r,
                asserted,
                conclusive ? json(holds) : json(outcome_name(res.outcome)),
                conclusive && holds == asserted,
                {}};
  c.certificate = {{"type", "homotopy-lifting"},
                   {"map", io::map_to_json(m)},
                   {"g0", io::path_to_json(g0)},
                   {"g1", io::path_to_json(g1)},
                   {"h_down", io::homotopy_to_json(down)},
                   {"outcome", outcome_name(res.outcome)},
                   {"homotopy", res.certificate ? io::homotopy_to_json(*res.certificate)
                                                : json(nullptr)},
                   {"witness", res.witness ? io::witness_to_json(*res.witness) : json(nullptr)}};
  return c;
}

int curve_length(const ImagePtr& img) {
  auto order = curve_order(*img);
  if (!order) throw ConfigError("fixture " + img->name() + " is not a simple closed curve");
  return static_cast<int>(order->sequence.size());
}

}  // namespace

std::vector<ClaimReport> run_claims(const std::filesystem::path& fixtures,
                                    const ClaimOptions& opts) {
  const FixtureSet fx = load_fixtures(fixtures);
  const CorpusSpec corpus =
      opts.corpus ? *opts.corpus : corpus_from_json(io::read_json_file(fixtures / "corpus.json"));
  std::vector<DigitalMap> extras;
  for (const auto& [name, m] : fx.maps) extras.push_back(m);

  std::vector<ClaimReport> rows;
  for (const Reading& r : {Reading::onto_image(), Reading::onto_target()}) {
    for (const char* name : {"z_sc8_l6", "z_sc8_l7", "z_sc8_l8"}) {
      rows.push_back(verdict_row("radius2-local", name, Property::kR2LIso, fx.map(name), r, true));
    }
    rows.push_back(verdict_row("radius2-local", "z_sc8_l4", Property::kR2LIso, fx.map("z_sc8_l4"), r,
                               false));
    rows.push_back(verdict_row("radius2-local", "z_sc8_l4", Property::kLIso, fx.map("z_sc8_l4"), r, true));

    for (const char* name : {"zplus_sc8_l4", "zplus_sc8_l6", "zplus_sc8_l8"}) {
      rows.push_back(verdict_row("ray-pseudo-v1", name, Property::kPseudoV1, fx.map(name), r, false));
      rows.push_back(verdict_row("ray-pseudo-v2", name, Property::kPseudoV2, fx.map(name), r, true));
      rows.push_back(verdict_row("ray-pseudo-v2", name, Property::kCover1, fx.map(name), r, false));
      rows.push_back(lifting_row("ray-no-unique-lifting", name, fx.map(name), r, false));
    }

    rows.push_back(separation_row("pseudo-v1-covers", "corpus+fixtures", Property::kPseudoV1,
                                  Property::kCover1, corpus, r, extras, false, opts.sweep));
    rows.push_back(separation_row("ray-pseudo-v2", "corpus+fixtures", Property::kCover1,
                                  Property::kPseudoV2, corpus, r, extras, false, opts.sweep));
    rows.push_back(separation_row("ray-pseudo-v2", "corpus+fixtures", Property::kPseudoV2,
                                  Property::kCover1, corpus, r, extras, true, opts.sweep));
    rows.push_back(separation_row("pl-wl-independent", "corpus", Property::kPL, Property::kWL, corpus, r, {},
                                  true, opts.sweep));
    rows.push_back(separation_row("pl-wl-independent", "corpus", Property::kWL, Property::kPL, corpus, r, {},
                                  true, opts.sweep));

    for (const auto& [xn, x] : fx.curves) {
      for (const auto& [yn, y] : fx.curves) {
        rows.push_back(embedding_row(xn, x, yn, y, r, curve_length(x) == curve_length(y)));
      }
    }

    const DigitalMap& p51 = fx.map("map_5_1");
    rows.push_back(verdict_row("corner-map-wl", "map_5_1", Property::kWL, p51, r, false));
    rows.push_back(verdict_row("corner-map", "map_5_1", Property::kContinuous, p51, r, false));
    rows.push_back(verdict_row("corner-map", "map_5_1", Property::kPseudoV1, p51, r, false));
    rows.push_back(verdict_row("corner-map", "map_5_1", Property::kPseudoV2, p51, r, false));
    rows.push_back(conditions_row("corner-map-slices", "map_5_1", p51, r, true));

    for (const char* name : {"z_sc8_l4", "z_sc8_l6", "z_sc8_l7", "z_sc8_l8"}) {
      rows.push_back(lifting_row("covering-unique-lifting", name, fx.map(name), r, true));
    }
    const DigitalMap& z6 = fx.map("z_sc8_l6");
    rows.push_back(
        homotopy_row("homotopy-lifting", "z_sc8_l6:backtrack", z6, {{0, 1, 0}, {0, 0, 0}}, r, true));
    rows.push_back(homotopy_row("homotopy-lifting", "z_sc8_l6:excursion", z6,
                                {{0, 1, 2, 1, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 0, 0}}, r, true));
  }

  std::sort(rows.begin(), rows.end(), [](const ClaimReport& a, const ClaimReport& b) {
    return std::tie(a.claim, a.subject, a.property) < std::tie(b.claim, b.subject, b.property) ||
           (std::tie(a.claim, a.subject, a.property) == std::tie(b.claim, b.subject, b.property) &&
            a.reading.name() < b.reading.name());
  });
  return rows;
}

// ---------------------------------------------------------------------------
// Replay.

namespace {

bool replay_verdict(const json& c) {
  const auto p = parse_property(c.at("property").get<std::string>());
  const auto r = Reading::parse(c.at("reading").get<std::string>());
  if (!p || !r) return false;
  const DigitalMap m = io::map_from_json(c.at("map"));
  const int eps_max = c.contains("eps_max") ? c.at("eps_max").get<int>() : 0;
  const Verdict v = evaluate(*p, m, *r, eps_max);
  const json& recorded = c.at("verdict");
  if (v.holds != recorded.at("holds").get<bool>()) return false;
  if (v.holds) return true;
  if (recorded.at("witness").is_null()) return false;
  return replay(m, io::witness_from_json(recorded.at("witness")));
}

bool replay_separation(const json& c) {
  const auto p = parse_property(c.at("p").get<std::string>());
  const auto q = parse_property(c.at("q").get<std::string>());
  const auto r = Reading::parse(c.at("reading").get<std::string>());
  if (!p || !q || !r) return false;
  if (!c.at("map").is_null()) {
    const DigitalMap m = io::map_from_json(c.at("map"));
    if (!evaluate(*p, m, *r).holds) return false;
    if (evaluate(*q, m, *r).holds) return false;
    const json& qv = c.at("q_verdict");
    return !qv.at("witness").is_null() && replay(m, io::witness_from_json(qv.at("witness")));
  }
  std::vector<DigitalMap> extra;
  if (c.contains("extra")) {
    for (const auto& e : c.at("extra")) extra.push_back(io::map_from_json(e));
  }
  const SeparatingResult s =
      find_separating_witness(*p, *q, corpus_from_json(c.at("bounds")), *r, extra);
  return !s.witness && s.maps_checked == c.at("maps_checked").get<std::int64_t>();
}

bool replay_embedding(const json& c) {
  const ImagePtr x = io::image_from_json(c.at("x"));
  const ImagePtr y = io::image_from_json(c.at("y"));
  if (c.at("map").is_null()) return !exists_DT_embedding(x, y).has_value();
  const DigitalMap m = io::map_from_json(c.at("map"));
  if (m.domain().points().size() != x->points().size() ||
      !std::equal(m.domain().points().begin(), m.domain().points().end(), x->points().begin()) ||
      !std::equal(m.codomain().points().begin(), m.codomain().points().end(),
                  y->points().begin(), y->points().end())) {
    return false;
  }
  return is_DT_embedding(m).holds && is_isomorphism(corestrict_to_image(m)).holds;
}

bool replay_conditions(const json& c) {
  const DigitalMap m = io::map_from_json(c.at("map"));
  const Verdict v = slice_conditions(m, c.at("radius").get<int>());
  const json& recorded = c.at("verdict");
  if (v.holds != recorded.at("holds").get<bool>()) return false;
  if (v.holds) return true;
  return replay(m, io::witness_from_json(recorded.at("witness")));
}

bool replay_lifting(const json& c) {
  const DigitalMap m = io::map_from_json(c.at("map"));
  const int max_len = c.at("max_len").get<int>();
  const auto defect_count = c.at("defect_count").get<std::int64_t>();
  if (defect_count == 0) {
    const UniqueLiftingReport rep = check_unique_lifting(m, max_len);
    return rep.holds() && rep.pairs_checked == c.at("pairs_checked").get<std::int64_t>();
  }
  if (c.at("defects").empty()) return false;
  for (const auto& d : c.at("defects")) {
    std::vector<Point> pts;
    for (const auto& p : d.at("path")) pts.push_back(io::point_from_json(p));
    const KPath f(m.codomain_ptr(), pts);
    const Point start = io::point_from_json(d.at("start"));
    const auto count = static_cast<std::int64_t>(lift_path(m, f, start).size());
    if (count == 1 || count != d.at("lift_count").get<std::int64_t>()) return false;
  }
  return true;
}

bool replay_homotopy(const json& c) {
  const DigitalMap m = io::map_from_json(c.at("map"));
  const KPath g0 = io::path_from_json(c.at("g0"));
  const KPath g1 = io::path_from_json(c.at("g1"));
  const KHomotopy down = io::homotopy_from_json(c.at("h_down"));
  const std::string recorded = c.at("outcome").get<std::string>();
  const HomotopyLiftingResult res = check_homotopy_lifting(m, g0, g1, down);
  if (recorded != outcome_name(res.outcome)) return false;
  if (res.outcome != Outcome::kHolds) return true;
  if (c.at("homotopy").is_null()) return false;
  const KHomotopy h = io::homotopy_from_json(c.at("homotopy"));
  return verify_homotopy(h, g0, g1).holds;
}

}  // namespace

bool replay_certificate(const json& certificate) {
  try {
    const std::string type = certificate.at("type").get<std::string>();
    if (type == "verdict") return replay_verdict(certificate);
    if (type == "separation") return replay_separation(certificate);
    if (type == "embedding") return replay_embedding(certificate);
    if (type == "slice-conditions") return replay_conditions(certificate);
    if (type == "unique-lifting") return replay_lifting(certificate);
    if (type == "homotopy-lifting") return replay_homotopy(certificate);
    return false;
  } catch (const json::exception&) {
    return false;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace dtk
