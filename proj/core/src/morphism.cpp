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

#include "dtk/morphism.hpp"

#include <algorithm>
#include <numeric>

#include "dtk/errors.hpp"

namespace dtk {

const char* scope_name(Scope s) {
  switch (s) {
    case Scope::kExact:
      return "exact";
    case Scope::kWindow:
      return "window";
    case Scope::kPeriodic:
      return "periodic";
  }
  return "?";
}

DigitalMap::DigitalMap(ImagePtr domain, ImagePtr codomain, const MapRule& rule)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  const auto n = static_cast<std::size_t>(domain_->size());
  table_.assign(n, -1);
  if (const auto* t = std::get_if<TableRule>(&rule)) {
    for (const auto& [x, y] : t->pairs) {
      const int i = domain_->require_index(x, "table source");
      const int j = codomain_->require_index(y, "table target");
      auto& slot = table_[static_cast<std::size_t>(i)];
      if (slot != -1 && slot != j) throw DomainError("table assigns two values to " + to_string(x));
      slot = j;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table_[i] == -1) {
        throw DomainError("table is not total: no value for " +
                          to_string(domain_->point(static_cast<int>(i))));
      }
    }
  } else {
    const auto& mod = std::get<ModularRule>(rule);
    if (domain_->adjacency().n() != 1) throw DomainError("modular rules need a 1-dimensional domain");
    const int l = mod.period();
    if (l < 1) throw DomainError("modular rule needs a nonempty cycle");
    for (std::size_t i = 0; i < n; ++i) {
      const int x = domain_->point(static_cast<int>(i))[0];
      const int r = ((x % l) + l) % l;
      table_[i] = codomain_->require_index(mod.cycle.sequence[static_cast<std::size_t>(r)],
                                           "cycle point");
    }
    modular_ = mod;
  }
}

DigitalMap DigitalMap::from_indices(ImagePtr domain, ImagePtr codomain, std::vector<int> table) {
  if (table.size() != static_cast<std::size_t>(domain->size())) {
    throw DomainError("index table size does not match the domain");
  }
  for (int j : table) {
    if (j < 0 || j >= codomain->size()) throw DomainError("index table leaves the codomain");
  }
  DigitalMap m;
  m.domain_ = std::move(domain);
  m.codomain_ = std::move(codomain);
  m.table_ = std::move(table);
  return m;
}

const Point& DigitalMap::operator()(const Point& x) const {
  return codomain_->point((*this)(domain_->require_index(x)));
}

TableRule DigitalMap::as_table() const {
  TableRule t;
  for (int i = 0; i < domain_->size(); ++i) {
    t.pairs.emplace_back(domain_->point(i), codomain_->point((*this)(i)));
  }
  return t;
}

DigitalMap DigitalMap::rebind(ImagePtr domain, ImagePtr codomain) const {
  if (modular_) return DigitalMap(std::move(domain), std::move(codomain), *modular_);
  return DigitalMap(std::move(domain), std::move(codomain), as_table());
}

DigitalMap modular_map(ImagePtr domain, const CurveSpec& cycle, ImagePtr codomain) {
  return DigitalMap(std::move(domain), std::move(codomain), ModularRule{cycle});
}

DigitalMap identity_map(const ImagePtr& img) {
  std::vector<int> table(static_cast<std::size_t>(img->size()));
  std::iota(table.begin(), table.end(), 0);
  return DigitalMap::from_indices(img, img, std::move(table));
}

DigitalMap corestrict_to_image(const DigitalMap& m) {
  std::vector<Point> pts;
  for (int j : m.table()) pts.push_back(m.codomain().point(j));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto img = DigitalImage::make(m.codomain().name() + "|image", FiniteSet{pts},
                                m.codomain().adjacency());
  std::vector<int> table;
  for (int j : m.table()) table.push_back(*img->index_of(m.codomain().point(j)));
  return DigitalMap::from_indices(m.domain_ptr(), img, std::move(table));
}

Scope scope_of(const DigitalMap& m, int radius) {
  const DigitalImage* imgs[] = {&m.domain(), &m.codomain()};
  bool any = false;
  bool periodic = true;
  for (const DigitalImage* img : imgs) {
    if (!img->truncated()) continue;
    any = true;
    if (!img->period() || img->margin() < radius) periodic = false;
  }
  if (!any) return Scope::kExact;
  return periodic ? Scope::kPeriodic : Scope::kWindow;
}

namespace {

std::vector<int> preimage_counts(const DigitalMap& m) {
  std::vector<int> hits(static_cast<std::size_t>(m.codomain().size()), 0);
  for (int j : m.table()) ++hits[static_cast<std::size_t>(j)];
  return hits;
}

std::optional<Witness> injectivity_failure(const DigitalMap& m) {
  std::vector<int> first(static_cast<std::size_t>(m.codomain().size()), -1);
  for (int x = 0; x < m.domain().size(); ++x) {
    int& f = first[static_cast<std::size_t>(m(x))];
    if (f != -1) {
      return Witness{"not-injective", {m.domain().point(f), m.domain().point(x)}, 0, "",
                     "two points share an image", {}};
    }
    f = x;
  }
  return std::nullopt;
}

std::optional<Witness> continuity_failure_at(const DigitalMap& m, int x) {
  const auto& cod = m.codomain();
  for (int y : m.domain().ball(x, 1)) {
    if (m(y) != m(x) && !cod.adjacent(m(x), m(y))) {
      return Witness{"discontinuous", {m.domain().point(x), m.domain().point(y)}, 1, "",
                     "an adjacent point leaves N(m(x),1)", {}};
    }
  }
  return std::nullopt;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <typename Check>
Verdict for_trusted_points(const DigitalMap& m, int radius, bool codomain_trusted, Check check) {
  Verdict v;
  v.scope = scope_of(m, radius);
  for (int x = 0; x < m.domain().size(); ++x) {
    if (!m.domain().trusted(x, radius)) continue;
    if (codomain_trusted && !m.codomain().trusted(m(x), radius)) continue;
    ++v.checked_points;
    if (auto w = check(x)) return Verdict::fail(std::move(*w), v.checked_points, v.scope);
  }
  return v;
}

}  // namespace

bool is_surjective(const DigitalMap& m) { return !detail::surjectivity_failure(m).has_value(); }

Verdict is_continuous(const DigitalMap& m) {
  return for_trusted_points(m, 1, false, [&](int x) { return continuity_failure_at(m, x); });
}

Verdict is_isomorphism(const DigitalMap& m) {
  const Scope scope = scope_of(m, 1);
  if (auto w = injectivity_failure(m)) return Verdict::fail(std::move(*w), 0, scope);
  if (auto w = detail::surjectivity_failure(m)) return Verdict::fail(std::move(*w), 0, scope);
  Verdict v = is_continuous(m);
  if (!v.holds) return v;

  const auto& cod = m.codomain();
  std::vector<int> inverse(static_cast<std::size_t>(cod.size()), -1);
  for (int x = 0; x < m.domain().size(); ++x) inverse[static_cast<std::size_t>(m(x))] = x;
  for (int b = 0; b < cod.size(); ++b) {
    const int xb = inverse[static_cast<std::size_t>(b)];
    if (!cod.trusted(b, 1) || xb == -1) continue;
    ++v.checked_points;
    for (int c : cod.neighbors(b)) {
      const int xc = inverse[static_cast<std::size_t>(c)];
      if (xc == -1) continue;
      if (!m.domain().adjacent(xb, xc)) {
        return Verdict::fail(Witness{"inverse-discontinuous", {cod.point(b), cod.point(c)}, 1, "",
                                     "the inverse separates adjacent points", {}},
                             v.checked_points, scope);
      }
    }
  }
  return v;
}

namespace detail {

std::optional<Witness> surjectivity_failure(const DigitalMap& m) {
  const auto hits = preimage_counts(m);
  for (int b = 0; b < m.codomain().size(); ++b) {
    if (m.codomain().interior(b) && hits[static_cast<std::size_t>(b)] == 0) {
      return Witness{"not-surjective", {m.codomain().point(b)}, 0, "", "no domain point maps here", {}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> restriction_failure(const DigitalMap& m, int center, int radius,
                                           bool onto_image) {
  const auto& dom = m.domain();
  const auto& cod = m.codomain();
  const std::vector<int> src = dom.ball_copy(center, radius);
  const std::string onto = onto_image ? "image" : "neighborhood";
  auto make = [&](const char* kind, std::vector<Point> pts, const char* reason) {
    pts.insert(pts.begin(), dom.point(center));
    return Witness{kind, std::move(pts), radius, onto, reason, {}};
  };

  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = i + 1; j < src.size(); ++j) {
      if (m(src[i]) == m(src[j])) {
        return make("restriction-collision", {dom.point(src[i]), dom.point(src[j])},
                    "restriction is not injective");
      }
    }
  }
  if (!onto_image) {
    const std::vector<int> target = cod.ball_copy(m(center), radius);
    std::vector<int> hit;
    for (int a : src) {
      if (!std::binary_search(target.begin(), target.end(), m(a))) {
        return make("restriction-outside", {dom.point(a)}, "image point outside the target neighborhood");
      }
      hit.push_back(m(a));
    }
    hit = sorted_unique(std::move(hit));
    for (int c : target) {
      if (!std::binary_search(hit.begin(), hit.end(), c)) {
        return make("restriction-missing", {cod.point(c)}, "target neighborhood point not covered");
      }
    }
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = i + 1; j < src.size(); ++j) {
      if (dom.adjacent(src[i], src[j]) != cod.adjacent(m(src[i]), m(src[j]))) {
        return make("restriction-adjacency", {dom.point(src[i]), dom.point(src[j])},
                    "adjacency is not preserved and reflected");
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

Verdict is_L_isomorphism(const DigitalMap& m) {
  return for_trusted_points(
      m, 1, true, [&](int x) { return detail::restriction_failure(m, x, 1, false); });
}

Verdict is_radius2_L_isomorphism(const DigitalMap& m) {
  return for_trusted_points(
      m, 2, true, [&](int x) { return detail::restriction_failure(m, x, 2, false); });
}

Verdict is_WL_isomorphism(const DigitalMap& m) {
  return for_trusted_points(
      m, 1, false, [&](int x) { return detail::restriction_failure(m, x, 1, true); });
}

namespace {

class InducedIso {
 public:
  InducedIso(const DigitalImage& a, std::span<const int> ap, const DigitalImage& b,
             std::span<const int> bp)
      : a_(a), ap_(ap.begin(), ap.end()), b_(b), bp_(bp.begin(), bp.end()) {}

  bool run() {
    if (ap_.size() != bp_.size()) return false;
    const auto deg = [](const DigitalImage& img, const std::vector<int>& pts) {
      std::vector<int> d;
      for (int u : pts) {
        int c = 0;
        for (int v : pts) c += img.adjacent(u, v);
        d.push_back(c);
      }
      return d;
    };
    da_ = deg(a_, ap_);
    db_ = deg(b_, bp_);
    auto sa = da_, sb = db_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    assign_.assign(ap_.size(), -1);
    used_.assign(bp_.size(), false);
    return extend(0);
  }

 private:
  bool extend(std::size_t i) {
    if (i == ap_.size()) return true;
    for (std::size_t c = 0; c < bp_.size(); ++c) {
      if (used_[c] || da_[i] != db_[c]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = a_.adjacent(ap_[i], ap_[k]) ==
             b_.adjacent(bp_[c], bp_[static_cast<std::size_t>(assign_[k])]);
      }
      if (!ok) continue;
      assign_[i] = static_cast<int>(c);
      used_[c] = true;
      if (extend(i + 1)) return true;
      used_[c] = false;
    }
    return false;
  }

  const DigitalImage& a_;
  std::vector<int> ap_;
  const DigitalImage& b_;
  std::vector<int> bp_;
  std::vector<int> da_, db_, assign_;
  std::vector<bool> used_;
};

}  // namespace

bool induced_isomorphic(const DigitalImage& a, std::span<const int> a_points,
                        const DigitalImage& b, std::span<const int> b_points) {
  return InducedIso(a, a_points, b, b_points).run();
}

Verdict is_PL_isomorphism(const DigitalMap& m) {
  Verdict cont = is_continuous(m);
  if (!cont.holds) return cont;
  return for_trusted_points(m, 1, true, [&](int x) -> std::optional<Witness> {
    std::vector<int> img;
    for (int a : m.domain().ball(x, 1)) img.push_back(m(a));
    img = sorted_unique(std::move(img));
    auto target = m.codomain().ball(m(x), 1);
    if (induced_isomorphic(m.codomain(), img, m.codomain(), target)) return std::nullopt;
    return Witness{"restriction-not-isomorphic", {m.domain().point(x)}, 1, "neighborhood",
                   "m(N(x,1)) is not isomorphic to N(m(x),1)", {}};
  });
}

Verdict is_DT_embedding(const DigitalMap& m) {
  const Scope scope = scope_of(m, 1);
  if (auto w = injectivity_failure(m)) return Verdict::fail(std::move(*w), 0, scope);
  return for_trusted_points(m, 1, false, [&](int x) -> std::optional<Witness> {
    for (int y = 0; y < m.domain().size(); ++y) {
      if (y == x) continue;
      if (m.domain().adjacent(x, y) != m.codomain().adjacent(m(x), m(y))) {
        const auto [p, q] = std::minmax(x, y);
        return Witness{"adjacency-mismatch", {m.domain().point(p), m.domain().point(q)}, 1, "",
                       "adjacency differs from adjacency of the images", {}};
      }
    }
    return std::nullopt;
  });
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const DigitalImage& x, const DigitalImage& y, std::uint64_t budget)
      : x_(x), y_(y), budget_(budget) {}

  std::optional<std::vector<int>> run() {
    order_ = bfs_order();
    assign_.assign(static_cast<std::size_t>(x_.size()), -1);
    used_.assign(static_cast<std::size_t>(y_.size()), false);
    if (x_.size() > y_.size()) return std::nullopt;
    if (extend(0)) return assign_;
    return std::nullopt;
  }

 private:
  std::vector<int> bfs_order() const {
    std::vector<int> order;
    std::vector<bool> seen(static_cast<std::size_t>(x_.size()), false);
    for (int s = 0; s < x_.size(); ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      seen[static_cast<std::size_t>(s)] = true;
      std::size_t head = order.size();
      order.push_back(s);
      while (head < order.size()) {
        const int u = order[head++];
        for (int v : x_.neighbors(u)) {
          if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            order.push_back(v);
          }
        }
      }
    }
    return order;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > budget_) {
      throw ResourceError("embedding search exceeded its budget of " + std::to_string(budget_) +
                          " nodes");
    }
    const int v = order_[depth];
    // An already-placed neighbor narrows the candidates to its neighbors.
    int anchor = -1;
    for (int u : x_.neighbors(v)) {
      if (assign_[static_cast<std::size_t>(u)] != -1) {
        anchor = assign_[static_cast<std::size_t>(u)];
        break;
      }
    }
    std::vector<int> candidates;
    if (anchor != -1) {
      auto nb = y_.neighbors(anchor);
      candidates.assign(nb.begin(), nb.end());
    } else {
      candidates.resize(static_cast<std::size_t>(y_.size()));
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    for (int c : candidates) {
      if (used_[static_cast<std::size_t>(c)]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int w = order_[k];
        ok = x_.adjacent(v, w) == y_.adjacent(c, assign_[static_cast<std::size_t>(w)]);
      }
      if (!ok) continue;
      assign_[static_cast<std::size_t>(v)] = c;
      used_[static_cast<std::size_t>(c)] = true;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(c)] = false;
      assign_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const DigitalImage& x_;
  const DigitalImage& y_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> order_;
  std::vector<int> assign_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<DigitalMap> exists_DT_embedding(const ImagePtr& x, const ImagePtr& y,
                                              std::uint64_t budget) {
  if (x->truncated() || y->truncated()) {
    throw DomainError("embedding search needs finite images");
  }
  auto table = EmbeddingSearch(*x, *y, budget).run();
  if (!table) return std::nullopt;
  return DigitalMap::from_indices(x, y, std::move(*table));
}

// ---------------------------------------------------------------------------
// Replay. Balls here are grown by repeated expansion over all points with
// the lattice adjacency test, independent of the cached BFS balls.

namespace {

std::vector<Point> naive_ball(const DigitalImage& img, const Point& c, int radius) {
  std::vector<Point> ball{c};
  for (int step = 0; step < radius; ++step) {
    std::vector<Point> next = ball;
    for (const Point& p : img.points()) {
      if (std::find(next.begin(), next.end(), p) != next.end()) continue;
      for (const Point& q : ball) {
        if (adjacent(p, q, img.adjacency())) {
          next.push_back(p);
          break;
        }
      }
    }
    ball = std::move(next);
  }
  std::sort(ball.begin(), ball.end());
  return ball;
}

bool in(const std::vector<Point>& v, const Point& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

bool adj_or_eq(const Point& p, const Point& q, const Adjacency& a) {
  return p == q || adjacent(p, q, a);
}

// Brute force over permutations when small; otherwise the backtracking test.
bool naive_isomorphic(const DigitalImage& img, std::vector<Point> a, std::vector<Point> b) {
  if (a.size() != b.size()) return false;
  const auto& adj = img.adjacency();
  if (a.size() <= 8) {
    std::sort(b.begin(), b.end());
    do {
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < a.size() && ok; ++j) {
          ok = adjacent(a[i], a[j], adj) == adjacent(b[i], b[j], adj);
        }
      }
      if (ok) return true;
    } while (std::next_permutation(b.begin(), b.end()));
    return false;
  }
  std::vector<int> ai, bi;
  for (const Point& p : a) ai.push_back(img.require_index(p));
  for (const Point& p : b) bi.push_back(img.require_index(p));
  std::sort(ai.begin(), ai.end());
  std::sort(bi.begin(), bi.end());
  return induced_isomorphic(img, ai, img, bi);
}

bool replay_one(const DigitalMap& m, const Witness& w) {
  const auto& dom = m.domain();
  const auto& cod = m.codomain();
  const auto& P = w.points;
  auto need = [&](std::size_t k) { return P.size() == k; };
  auto img_of = [&](const Point& p) { return m(p); };
  const auto& dadj = dom.adjacency();
  const auto& cadj = cod.adjacency();

  if (w.kind == "not-surjective") {
    if (!need(1) || !cod.contains(P[0])) return false;
    for (const Point& x : dom.points()) {
      if (img_of(x) == P[0]) return false;
    }
    return true;
  }
  if (w.kind == "not-injective") {
    return need(2) && P[0] != P[1] && img_of(P[0]) == img_of(P[1]);
  }
  if (w.kind == "discontinuous") {
    if (!need(2) || !in(naive_ball(dom, P[0], 1), P[1])) return false;
    return !adj_or_eq(img_of(P[0]), img_of(P[1]), cadj);
  }
  if (w.kind == "inverse-discontinuous") {
    if (!need(2) || !adjacent(P[0], P[1], cadj)) return false;
    std::optional<Point> xb, xc;
    for (const Point& x : dom.points()) {
      if (!xb && img_of(x) == P[0]) xb = x;
      if (!xc && img_of(x) == P[1]) xc = x;
    }
    return xb && xc && !adj_or_eq(*xb, *xc, dadj);
  }
  if (w.kind == "adjacency-mismatch") {
    if (!need(2) || P[0] == P[1]) return false;
    const Point &a = img_of(P[0]), &b = img_of(P[1]);
    return a == b || adjacent(P[0], P[1], dadj) != adjacent(a, b, cadj);
  }
  if (w.kind.rfind("restriction-", 0) == 0) {
    if (P.empty() || w.radius < 1) return false;
    const auto src = naive_ball(dom, P[0], w.radius);
    const bool onto_nbhd = w.onto == "neighborhood";
    const auto target = naive_ball(cod, img_of(P[0]), w.radius);
    if (w.kind == "restriction-collision") {
      return need(3) && P[1] != P[2] && in(src, P[1]) && in(src, P[2]) &&
             img_of(P[1]) == img_of(P[2]);
    }
    if (w.kind == "restriction-outside") {
      return onto_nbhd && need(2) && in(src, P[1]) && !in(target, img_of(P[1]));
    }
    if (w.kind == "restriction-missing") {
      if (!onto_nbhd || !need(2) || !in(target, P[1])) return false;
      for (const Point& a : src) {
        if (img_of(a) == P[1]) return false;
      }
      return true;
    }
    if (w.kind == "restriction-adjacency") {
      if (!need(3) || !in(src, P[1]) || !in(src, P[2]) || P[1] == P[2]) return false;
      const Point &a = img_of(P[1]), &b = img_of(P[2]);
      return adjacent(P[1], P[2], dadj) != (a != b && adjacent(a, b, cadj));
    }
    if (w.kind == "restriction-not-isomorphic") {
      std::vector<Point> image;
      for (const Point& a : src) {
        if (!in(image, img_of(a))) image.push_back(img_of(a));
      }
      return need(1) && !naive_isomorphic(cod, image, target);
    }
    return false;
  }
  if (w.kind == "fiber-uncovered") {
    if (!need(2) || w.radius < 1) return false;
    if (!in(naive_ball(cod, P[0], w.radius), img_of(P[1]))) return false;
    for (const Point& e : dom.points()) {
      if (img_of(e) == P[0] && in(naive_ball(dom, e, w.radius), P[1])) return false;
    }
    return true;
  }
  if (w.kind == "slice-outside-preimage") {
    if (!need(3) || w.radius < 1 || img_of(P[1]) != P[0]) return false;
    return in(naive_ball(dom, P[1], w.radius), P[2]) &&
           !in(naive_ball(cod, P[0], w.radius), img_of(P[2]));
  }
  if (w.kind == "slices-overlap") {
    if (!need(4) || w.radius < 1 || P[1] == P[2]) return false;
    if (img_of(P[1]) != P[0] || img_of(P[2]) != P[0]) return false;
    return in(naive_ball(dom, P[1], w.radius), P[3]) && in(naive_ball(dom, P[2], w.radius), P[3]);
  }
  if (w.kind == "no-admissible-radius") {
    if (!need(1) || w.details.empty()) return false;
    for (std::size_t r = 0; r < w.details.size(); ++r) {
      if (w.details[r].radius != static_cast<int>(r) + 1) return false;
      if (!replay_one(m, w.details[r])) return false;
    }
    return true;
  }
  return false;
}

}  // namespace

bool replay(const DigitalMap& m, const Witness& w) {
  try {
    return replay_one(m, w);
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace dtk
