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

// dtk: command line front end for the digital topology toolkit.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dtk/covering.hpp"
#include "dtk/errors.hpp"
#include "dtk/harness.hpp"
#include "dtk/io.hpp"
#include "dtk/lifting.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kMismatch = 3, kInconclusive = 4 };

bool g_human = false;

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::string describe(const dtk::Witness& w) {
  std::string s = w.kind;
  for (const auto& p : w.points) s += " " + dtk::to_string(p);
  if (w.radius > 0) s += " r=" + std::to_string(w.radius);
  if (!w.onto.empty()) s += " onto=" + w.onto;
  if (!w.reason.empty()) s += " (" + w.reason + ")";
  return s;
}

dtk::Reading reading_or_throw(const std::string& s) {
  auto r = dtk::Reading::parse(s);
  if (!r) throw dtk::FormatError("unknown reading " + s);
  return *r;
}

dtk::Property property_or_throw(const std::string& s) {
  auto p = dtk::parse_property(s);
  if (!p) throw dtk::FormatError("unknown property " + s);
  return *p;
}

std::vector<int> parse_box(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, 'x')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw dtk::FormatError("bad box " + s);
    } catch (const std::logic_error&) {
      throw dtk::FormatError("bad box " + s);
    }
  }
  if (out.empty()) throw dtk::FormatError("bad box " + s);
  return out;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string prop;
  std::string reading = "onto-image";
  int eps_max = 0;
  std::string map;
};

int run_check(const CheckArgs& a) {
  const dtk::Property p = property_or_throw(a.prop);
  const dtk::Reading r = reading_or_throw(a.reading);
  const dtk::DigitalMap m = dtk::io::load_map(a.map);
  json out;
  dtk::Verdict v;
  if (p == dtk::Property::kCoverEps) {
    const int eps_max = a.eps_max > 0 ? a.eps_max : dtk::default_eps_max(m);
    auto ce = dtk::is_covering_eps(m, eps_max, r);
    v = ce.verdict;
    out = dtk::io::verdict_to_json(v);
    json mins = json::array();
    for (const auto& [b, e] : ce.minimal_eps) mins.push_back({dtk::io::point_to_json(b), e});
    out["eps_max"] = eps_max;
    out["minimal_eps"] = mins;
  } else {
    v = dtk::evaluate(p, m, r, a.eps_max);
    out = dtk::io::verdict_to_json(v);
  }
  out["property"] = dtk::property_name(p);
  if (dtk::reading_dependent(p)) out["reading"] = r.name();
  if (p == dtk::Property::kEmbed && !v.holds && !m.domain().truncated() &&
      !m.codomain().truncated()) {
    auto alt = dtk::exists_DT_embedding(m.domain_ptr(), m.codomain_ptr());
    out["other_embedding"] = alt ? dtk::io::map_to_json(*alt) : json(nullptr);
  }
  if (g_human) {
    std::cout << dtk::property_name(p) << ": " << (v.holds ? "holds" : "fails") << "  ["
              << dtk::scope_name(v.scope) << ", " << v.checked_points << " checked]\n";
    if (v.witness) std::cout << "  witness: " << describe(*v.witness) << '\n';
    if (out.contains("other_embedding")) {
      std::cout << "  some embedding exists: "
                << (out["other_embedding"].is_null() ? "no" : "yes") << '\n';
    }
  } else {
    emit(out);
  }
  return v.holds ? kOk : kFails;
}

struct LiftArgs {
  std::string map;
  std::string path;
  std::string start;
};

int run_lift(const LiftArgs& a) {
  const dtk::DigitalMap m = dtk::io::load_map(a.map);
  const dtk::KPath f = dtk::io::load_path(a.path);
  const dtk::Point e0 = dtk::io::parse_point(a.start);
  const auto lifts = dtk::lift_path(m, f, e0);
  json arr = json::array();
  for (const auto& g : lifts) {
    json pts = json::array();
    for (const auto& p : g.points()) pts.push_back(dtk::io::point_to_json(p));
    arr.push_back(pts);
  }
  if (g_human) {
    std::cout << lifts.size() << " lift(s) from " << dtk::to_string(e0) << '\n';
    for (const auto& g : lifts) {
      std::cout << " ";
      for (const auto& p : g.points()) std::cout << ' ' << dtk::to_string(p);
      std::cout << '\n';
    }
  } else {
    emit({{"start", dtk::io::point_to_json(e0)}, {"count", lifts.size()}, {"lifts", arr}});
  }
  return lifts.empty() ? kFails : kOk;
}

struct UniqueArgs {
  std::string map;
  int max_len = 2;
};

int run_unique(const UniqueArgs& a) {
  const dtk::DigitalMap m = dtk::io::load_map(a.map);
  const auto rep = dtk::check_unique_lifting(m, a.max_len);
  json defects = json::array();
  for (const auto& d : rep.defects) {
    json path = json::array();
    for (const auto& p : d.path) path.push_back(dtk::io::point_to_json(p));
    defects.push_back(
        {{"path", path}, {"start", dtk::io::point_to_json(d.start)}, {"lift_count", d.lift_count}});
  }
  if (g_human) {
    std::cout << "unique lifting up to length " << rep.max_len << ": "
              << (rep.holds() ? "holds" : "fails") << "  (" << rep.pairs_checked
              << " path/start pairs, " << rep.defect_count << " defective)\n";
    for (const auto& d : rep.defects) {
      std::cout << "  start " << dtk::to_string(d.start) << " path";
      for (const auto& p : d.path) std::cout << ' ' << dtk::to_string(p);
      std::cout << " -> " << d.lift_count << " lift(s)\n";
    }
  } else {
    emit({{"holds", rep.holds()},
          {"max_len", rep.max_len},
          {"pairs_checked", rep.pairs_checked},
          {"defect_count", rep.defect_count},
          {"defects", defects}});
  }
  return rep.holds() ? kOk : kFails;
}

struct WitnessArgs {
  std::string sep;
  int max_points = 5;
  std::string box = "3x3";
  std::vector<int> ts{1, 2};
  bool general = false;
  std::string reading = "onto-image";
  int workers = 1;
};

int run_witness(const WitnessArgs& a) {
  const auto comma = a.sep.find(',');
  if (comma == std::string::npos) throw dtk::FormatError("--sep expects P,Q");
  const dtk::Property p = property_or_throw(a.sep.substr(0, comma));
  const dtk::Property q = property_or_throw(a.sep.substr(comma + 1));
  dtk::CorpusSpec spec;
  spec.box = parse_box(a.box);
  spec.max_points = a.max_points;
  spec.connected_only = !a.general;
  spec.adjacencies.clear();
  const int n = static_cast<int>(spec.box.size());
  for (int t : a.ts) spec.adjacencies.emplace_back(t, n);
  const auto res =
      dtk::find_separating_witness(p, q, spec, reading_or_throw(a.reading), {}, {a.workers});
  if (g_human) {
    std::cout << dtk::property_name(p) << " => " << dtk::property_name(q) << ": ";
    if (res.witness) {
      std::cout << "counterexample after " << res.maps_checked << " maps\n";
      std::cout << "  " << res.witness->domain().name() << " -> " << res.witness->codomain().name()
                << "  table";
      for (int c : res.witness->table()) std::cout << ' ' << c;
      std::cout << "\n  " << dtk::property_name(q) << " fails: " << describe(*res.q_verdict->witness)
                << '\n';
    } else {
      std::cout << "no counterexample within bounds (" << res.maps_checked << " maps)\n";
    }
  } else {
    emit(dtk::separating_to_json(res));
  }
  return res.witness ? kOk : kFails;
}

struct CorpusArgs {
  std::string dir;
  int workers = 1;
  std::optional<int> max_points;
};

dtk::CorpusSpec corpus_spec(const CorpusArgs& a) {
  dtk::CorpusSpec spec =
      dtk::corpus_from_json(dtk::io::read_json_file(std::filesystem::path(a.dir) / "corpus.json"));
  if (a.max_points) spec.max_points = *a.max_points;
  return spec;
}

int run_matrix(const CorpusArgs& a) {
  const dtk::CorpusSpec spec = corpus_spec(a);
  const dtk::FixtureSet fx = dtk::load_fixtures(a.dir);
  std::vector<dtk::DigitalMap> extra;
  for (const auto& [name, m] : fx.maps) extra.push_back(m);
  const std::vector<dtk::Reading> readings{dtk::Reading::onto_image(), dtk::Reading::onto_target()};
  const auto props = dtk::all_properties();
  const auto mat = dtk::implication_matrix(spec, props, readings, extra, {a.workers});
  if (g_human) {
    std::cout << "maps checked: " << mat.maps_checked
              << "   (row P, column Q; '.' = no counterexample to P => Q, 'x' = separated)\n";
    for (const auto& r : readings) {
      std::cout << "\nreading " << r.name() << '\n' << std::string(11, ' ');
      for (auto q : props) std::printf("%-4.4s", std::string(dtk::property_name(q)).c_str());
      std::cout << '\n';
      for (auto p : props) {
        std::printf("%-11s", std::string(dtk::property_name(p)).c_str());
        for (auto q : props) {
          std::cout << (mat.cell(p, q, r).counterexample ? "x   " : ".   ");
        }
        std::cout << '\n';
      }
    }
  } else {
    json j = dtk::matrix_to_json(mat);
    for (auto& c : j["cells"]) emit(c);
    j.erase("cells");
    emit(j);
  }
  return kOk;
}

int run_claims(const CorpusArgs& a) {
  dtk::ClaimOptions opts;
  opts.sweep.workers = a.workers;
  if (a.max_points) opts.corpus = corpus_spec(a);
  const auto rows = dtk::run_claims(a.dir, opts);
  int mismatches = 0;
  for (const auto& r : rows) {
    if (!r.agree) ++mismatches;
  }
  if (g_human) {
    std::printf("%-24s %-28s %-22s %-12s %-10s %-10s %s\n", "claim", "subject", "property",
                "reading", "asserted", "computed", "agree");
    for (const auto& r : rows) {
      std::printf("%-24s %-28s %-22s %-12s %-10s %-10s %s\n", r.claim.c_str(), r.subject.c_str(),
                  r.property.c_str(), r.reading.name().c_str(), r.asserted.dump().c_str(),
                  r.computed.dump().c_str(), r.agree ? "yes" : "NO");
    }
    std::cout << rows.size() << " rows, " << mismatches << " mismatch(es)\n";
  } else {
    for (const auto& r : rows) emit(dtk::claim_to_json(r));
  }
  return mismatches > 0 ? kMismatch : kOk;
}

struct SccArgs {
  int t = 2;
  std::string box = "5x5";
  int length = 6;
  bool first_only = false;
  std::uint64_t budget = dtk::kDefaultSearchBudget;
};

int run_scc(const SccArgs& a) {
  const std::vector<int> extent = parse_box(a.box);
  const dtk::Adjacency adj(a.t, static_cast<int>(extent.size()));
  const auto curves = dtk::search_scc(adj, dtk::box_of_extent(extent), a.length, a.budget);
  for (const auto& c : curves) {
    if (g_human) {
      for (const auto& p : c.sequence) std::cout << dtk::to_string(p) << ' ';
      std::cout << '\n';
    } else {
      emit(dtk::io::curve_to_json(c));
    }
    if (a.first_only) break;
  }
  if (g_human) std::cout << curves.size() << " curve(s)\n";
  return curves.empty() ? kFails : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digital images, maps, coverings and lifting"};
  app.require_subcommand(1);
  app.add_flag("--human", g_human, "Render tables instead of line-delimited JSON");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Evaluate one predicate on a map");
  c->add_option("--prop", check.prop, "Predicate name")->required();
  c->add_option("--reading", check.reading, "onto-image or onto-target");
  c->add_option("--eps-max", check.eps_max, "Largest radius tried by cover-eps");
  c->add_option("map", check.map, "Map document")->required();
  c->add_flag("--human", g_human);

  LiftArgs lift;
  auto* l = app.add_subcommand("lift", "Enumerate lifts of a codomain path");
  l->add_option("map", lift.map)->required();
  l->add_option("path", lift.path)->required();
  l->add_option("--start", lift.start, "Start point, e.g. \"3\" or \"1,2\"")->required();
  l->add_flag("--human", g_human);

  UniqueArgs uniq;
  auto* u = app.add_subcommand("unique-lifting", "Check unique path lifting up to a length");
  u->add_option("map", uniq.map)->required();
  u->add_option("--max-len", uniq.max_len)->check(CLI::Range(0, 64));
  u->add_flag("--human", g_human);

  WitnessArgs wit;
  auto* w = app.add_subcommand("witness", "Smallest corpus map with P and not Q");
  w->add_option("--sep", wit.sep, "P,Q")->required();
  w->add_option("--max-points", wit.max_points)->check(CLI::Range(1, 9));
  w->add_option("--box", wit.box, "Box extent, e.g. 3x3");
  w->add_option("--t", wit.ts, "Adjacency parameters t");
  w->add_flag("--general", wit.general, "Include disconnected images");
  w->add_option("--reading", wit.reading);
  w->add_option("--workers", wit.workers)->check(CLI::Range(1, 256));
  w->add_flag("--human", g_human);

  CorpusArgs mat;
  auto* m = app.add_subcommand("matrix", "Implication matrix over the corpus and fixtures");
  m->add_option("--corpus", mat.dir, "Fixture directory")->required();
  m->add_option("--workers", mat.workers)->check(CLI::Range(1, 256));
  m->add_option("--max-points", mat.max_points, "Override the corpus point bound");
  m->add_flag("--human", g_human);

  CorpusArgs claims;
  auto* cl = app.add_subcommand("claims", "Adjudicate the published claims");
  cl->add_option("--corpus", claims.dir, "Fixture directory")->required();
  cl->add_option("--workers", claims.workers)->check(CLI::Range(1, 256));
  cl->add_option("--max-points", claims.max_points, "Override the corpus point bound");
  cl->add_flag("--human", g_human);

  SccArgs scc;
  auto* s = app.add_subcommand("scc", "Search simple closed k-curves in a box");
  s->add_option("--t", scc.t);
  s->add_option("--box", scc.box);
  s->add_option("--length", scc.length)->required();
  s->add_flag("--first", scc.first_only);
  s->add_option("--budget", scc.budget, "Adjacency checks before giving up");
  s->add_flag("--human", g_human);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*c) return run_check(check);
    if (*l) return run_lift(lift);
    if (*u) return run_unique(uniq);
    if (*w) return run_witness(wit);
    if (*m) return run_matrix(mat);
    if (*cl) return run_claims(claims);
    if (*s) return run_scc(scc);
  } catch (const dtk::ResourceError& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
