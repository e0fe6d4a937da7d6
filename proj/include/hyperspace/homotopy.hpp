// Copyright 2026 The hyperspace Authors
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
#include <utility>
#include <variant>
#include <vector>

#include "hyperspace/error.hpp"
#include "hyperspace/graph.hpp"
#include "hyperspace/metric.hpp"
#include "hyperspace/rational.hpp"
#include "hyperspace/subset.hpp"

namespace hyperspace {

/// One leg of a covering walk: move along `element` from `from` to `to`.
struct Traversal {
  std::size_t element;
  Rational from;
  Rational to;

  Rational length() const { return abs(to - from); }
};

/// Stage data. Each stage maps its local parameter u ∈ [0,1] to a set.
namespace stage {

/// Identity stage.
struct Constant {};

/// Tails [a_i, inf) grow down to their ray's vertex: [(1-u)·a_i, inf).
struct GrowTails {
  std::vector<std::pair<std::size_t, Rational>> tails;  // (ray element, a_i)
};

/// Bounded pieces [a, b] on rays outside Δ shrink and slide to the vertex:
/// [(1-u)·a, (1-u)·b]. `fixed` is everything else.
struct ShrinkBounded {
  PieceTable fixed;
  std::vector<std::pair<std::size_t, Interval>> pieces;
};

/// Adds the image of a covering walk of X_G traced up to arc length u·L.
struct CoverGraph {
  GraphPoint start;
  std::vector<Traversal> walk;
  Rational length;
};

/// Grows [0, u/(1-u)] on every ray outside Δ; the value at u = 1 is X.
struct GrowRays {
  DirectionSet delta;
  std::vector<std::size_t> rays;  // ray elements not in Δ
};

}  // namespace stage

enum class StageKind { kConstant, kGrowTails, kShrinkBounded, kCoverGraph, kGrowRays };

inline const char* stage_name(StageKind k) {
  switch (k) {
    case StageKind::kConstant: return "CONST";
    case StageKind::kGrowTails: return "F0";
    case StageKind::kShrinkBounded: return "F1";
    case StageKind::kCoverGraph: return "F2";
    case StageKind::kGrowRays: return "GAMMA";
  }
  return "?";
}

struct Stage {
  using Data = std::variant<stage::Constant, stage::GrowTails, stage::ShrinkBounded,
                            stage::CoverGraph, stage::GrowRays>;

  ClosedSubset base;  // value at u = 0 (before reversal)
  Data data;
  bool reversed = false;

  StageKind kind() const { return static_cast<StageKind>(data.index()); }
};

/// Evaluates one stage at local parameter u, ignoring `reversed`.
inline ClosedSubset eval_stage_forward(const RayGraph& g, const Stage& s, const Rational& u) {
  return std::visit(
      [&](const auto& d) -> ClosedSubset {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, stage::Constant>) {
          return s.base;
        } else if constexpr (std::is_same_v<T, stage::GrowTails>) {
          PieceTable raw = s.base.pieces();
          for (const auto& [e, a] : d.tails) raw[e].push_back(Interval::tail((1 - u) * a));
          return ClosedSubset::make(g, std::move(raw));
        } else if constexpr (std::is_same_v<T, stage::ShrinkBounded>) {
          PieceTable raw = d.fixed;
          Rational scale = 1 - u;
          for (const auto& [e, iv] : d.pieces) {
            raw[e].push_back(Interval::closed(scale * iv.lo, scale * *iv.hi));
          }
          return ClosedSubset::make(g, std::move(raw));
        } else if constexpr (std::is_same_v<T, stage::CoverGraph>) {
          PieceTable raw = s.base.pieces();
          raw[d.start.element].push_back(Interval::point(d.start.coord));
          Rational budget = u * d.length;
          for (const Traversal& step : d.walk) {
            if (budget.sign() <= 0) break;
            Rational len = step.length();
            Rational used = min(budget, len);
            Rational end = step.to >= step.from ? step.from + used : step.from - used;
            raw[step.element].push_back(Interval::closed(min(step.from, end), max(step.from, end)));
            budget -= used;
          }
          return ClosedSubset::make(g, std::move(raw));
        } else {
          if (u == Rational(1)) return ClosedSubset::whole(g);
          PieceTable raw = s.base.pieces();
          Rational reach = u / (1 - u);
          for (std::size_t e : d.rays) raw[e].push_back(Interval::closed(0, reach));
          return ClosedSubset::make(g, std::move(raw));
        }
      },
      s.data);
}

/// A path [0,1] → C_n(X) built from stages of equal parameter length.
class HyperPath {
 public:
  HyperPath(RayGraph graph, std::vector<Stage> stages)
      : graph_(std::move(graph)), stages_(std::move(stages)) {
    if (stages_.empty()) throw PreconditionError("path needs at least one stage");
  }

  const RayGraph& graph() const { return graph_; }
  const std::vector<Stage>& stages() const { return stages_; }
  std::size_t stage_count() const { return stages_.size(); }

  /// Stage `i` evaluated at its own parameter u ∈ [0,1].
  ClosedSubset eval_stage(std::size_t i, const Rational& u) const {
    if (u.sign() < 0 || u > Rational(1)) {
      throw PreconditionError("stage parameter " + u.str() + " outside [0,1]");
    }
    const Stage& s = stages_.at(i);
    return eval_stage_forward(graph_, s, s.reversed ? 1 - u : u);
  }

  /// Composite parameter t ∈ [0,1]; stage i covers [i/m, (i+1)/m].
  ClosedSubset eval(const Rational& t) const {
    if (t.sign() < 0 || t > Rational(1)) {
      throw PreconditionError("path parameter " + t.str() + " outside [0,1]");
    }
    auto [i, u] = locate(t);
    return eval_stage(i, u);
  }

  /// (stage index, local parameter) for composite t; boundaries map to the
  /// start of the later stage.
  std::pair<std::size_t, Rational> locate(const Rational& t) const {
    const std::int64_t m = static_cast<std::int64_t>(stages_.size());
    Rational scaled = t * Rational(m);
    std::int64_t i = scaled.num() / scaled.den();
    if (i >= m) i = m - 1;
    return {static_cast<std::size_t>(i), scaled - Rational(i)};
  }

  ClosedSubset start() const { return eval_stage(0, 0); }
  ClosedSubset end() const { return eval_stage(stages_.size() - 1, 1); }

  /// Composite parameter at which stage `i` begins.
  Rational stage_start(std::size_t i) const {
    return Rational(static_cast<std::int64_t>(i), static_cast<std::int64_t>(stages_.size()));
  }

  HyperPath reversed() const {
    std::vector<Stage> out(stages_.rbegin(), stages_.rend());
    for (Stage& s : out) s.reversed = !s.reversed;
    return HyperPath(graph_, std::move(out));
  }

  HyperPath then(const HyperPath& next) const {
    std::vector<Stage> out = stages_;
    out.insert(out.end(), next.stages_.begin(), next.stages_.end());
    return HyperPath(graph_, std::move(out));
  }

 private:
  RayGraph graph_;
  std::vector<Stage> stages_;
};

inline ClosedSubset eval_path(const HyperPath& p, const Rational& t) { return p.eval(t); }

/// Per-stage constant L with d_H(P(s), P(t)) ≤ L·|s - t| for local
/// parameters s, t of that stage. Ray growth is Hausdorff-discontinuous at
/// u = 1, hence infinite whenever some ray actually grows.
inline ExtendedDistance stage_lipschitz_bound(const Stage& s) {
  return std::visit(
      [](const auto& d) -> ExtendedDistance {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, stage::Constant>) {
          return Rational(0);
        } else if constexpr (std::is_same_v<T, stage::GrowTails>) {
          Rational l(0);
          for (const auto& [e, a] : d.tails) l = max(l, a);
          return l;
        } else if constexpr (std::is_same_v<T, stage::ShrinkBounded>) {
          Rational l(0);
          for (const auto& [e, iv] : d.pieces) l = max(l, *iv.hi);
          return l;
        } else if constexpr (std::is_same_v<T, stage::CoverGraph>) {
          return d.length;
        } else {
          if (d.rays.empty()) return Rational(0);
          return ExtendedDistance::infinity();
        }
      },
      s.data);
}

inline ExtendedDistance lipschitz_bound(const HyperPath& p) {
  ExtendedDistance best = Rational(0);
  for (const Stage& s : p.stages()) best = std::max(best, stage_lipschitz_bound(s));
  return best;
}

namespace detail {

inline bool point_less(const RayGraph& g, const GraphPoint& a, const GraphPoint& b) {
  if (a.element != b.element) return g.id_rank(a.element) < g.id_rank(b.element);
  return a.coord < b.coord;
}

/// Least point of A ∩ X_G under (element id, coord) after normalization.
inline std::optional<GraphPoint> least_graph_point(const RayGraph& g, const ClosedSubset& a) {
  std::optional<GraphPoint> best;
  auto consider = [&](GraphPoint p) {
    p = g.normalize(p);
    if (!best || point_less(g, p, *best)) best = p;
  };
  for (std::size_t e = 0; e < a.element_count(); ++e) {
    for (const Interval& iv : a.on(e)) {
      if (!g.element(e).is_ray() || iv.lo.sign() == 0) consider({e, iv.lo});
    }
  }
  return best;
}

/// Depth-first edge-doubling walk of X_G from `start`, visiting incident
/// edges in element-id order. Loops are traversed once around.
inline std::vector<Traversal> covering_walk(const RayGraph& g, const GraphPoint& start) {
  std::vector<Traversal> walk;
  std::vector<bool> visited(g.vertex_count(), false);
  std::vector<bool> used(g.element_count(), false);

  auto coord_of = [&](std::size_t e, std::size_t v) {
    const Element& el = g.element(e);
    return el.tail == v ? Rational(0) : el.length;
  };

  auto dfs = [&](auto&& self, std::size_t v) -> void {
    visited[v] = true;
    for (const Incidence& inc : g.incidences(v)) {
      const Element& el = g.element(inc.element);
      if (el.is_ray() || used[inc.element]) continue;
      used[inc.element] = true;
      if (el.is_loop()) {
        walk.push_back({inc.element, Rational(0), el.length});
        continue;
      }
      std::size_t other = el.tail == v ? el.head : el.tail;
      Rational here = coord_of(inc.element, v);
      Rational there = coord_of(inc.element, other);
      walk.push_back({inc.element, here, there});
      if (!visited[other]) self(self, other);
      walk.push_back({inc.element, there, here});
    }
  };

  std::size_t root;
  if (auto v = g.vertex_at(start)) {
    root = *v;
  } else {
    const Element& el = g.element(start.element);
    walk.push_back({start.element, start.coord, Rational(0)});
    root = el.tail;
  }
  dfs(dfs, root);
  return walk;
}

}  // namespace detail

/// Hausdorff path A → A_Δ (Δ = φ(A)) through C_n(X) in three stages:
/// grow tails to the vertex, shrink bounded pieces on rays outside Δ onto
/// their vertex, then sweep a covering walk over X_G.
inline HyperPath path_to_canonical(const RayGraph& g, const ClosedSubset& a, std::size_t n) {
  if (!in_Cn(g, a, n)) {
    throw PreconditionError("set has " + std::to_string(component_count(g, a)) +
                            " components, exceeding n = " + std::to_string(n));
  }
  const DirectionSet delta = direction_set(g, a);
  std::vector<Stage> stages;

  stage::GrowTails grow;
  for (std::size_t e : g.rays()) {
    if (a.has_tail(e) && a.on(e).back().lo.sign() > 0) grow.tails.emplace_back(e, a.on(e).back().lo);
  }
  stages.push_back({a, grow, false});
  ClosedSubset a1 = eval_stage_forward(g, stages.back(), 1);

  stage::ShrinkBounded shrink{a1.pieces(), {}};
  for (std::size_t e : g.rays()) {
    if (delta.contains(g.ray_number(e))) continue;
    for (const Interval& iv : a1.on(e)) shrink.pieces.emplace_back(e, iv);
    shrink.fixed[e].clear();
  }
  stages.push_back({a1, std::move(shrink), false});
  ClosedSubset a2 = eval_stage_forward(g, stages.back(), 1);

  GraphPoint start = *detail::least_graph_point(g, a2);
  stage::CoverGraph cover{start, detail::covering_walk(g, start), Rational(0)};
  for (const Traversal& t : cover.walk) cover.length += t.length();
  stages.push_back({a2, std::move(cover), false});

  return HyperPath(g, std::move(stages));
}

/// Vietoris path A → A_Δ → X: path_to_canonical followed by ray growth
/// γ(u) = A_Δ ∪ ⋃_{i∉Δ} [0, u/(1-u)] on R_i, with γ(1) = X.
inline HyperPath vietoris_path(const RayGraph& g, const ClosedSubset& a, std::size_t n) {
  HyperPath head = path_to_canonical(g, a, n);
  DirectionSet delta = direction_set(g, a);
  stage::GrowRays grow{delta, {}};
  for (std::size_t e : g.rays()) {
    if (!delta.contains(g.ray_number(e))) grow.rays.push_back(e);
  }
  std::vector<Stage> stages = head.stages();
  stages.push_back({canonical_element(g, delta), std::move(grow), false});
  return HyperPath(g, std::move(stages));
}

/// The ray growth stage alone, starting from A_Δ.
inline HyperPath ray_growth_path(const RayGraph& g, const DirectionSet& delta) {
  stage::GrowRays grow{delta, {}};
  for (std::size_t e : g.rays()) {
    if (!delta.contains(g.ray_number(e))) grow.rays.push_back(e);
  }
  return HyperPath(g, {Stage{canonical_element(g, delta), std::move(grow), false}});
}

inline HyperPath constant_path(const RayGraph& g, const ClosedSubset& a) {
  return HyperPath(g, {Stage{a, stage::Constant{}, false}});
}

struct ComponentVerdict {
  bool same = false;
  DirectionSet phi_a;
  DirectionSet phi_b;
  std::optional<std::size_t> witness_ray;  // set when `same` is false
  std::optional<HyperPath> path;           // set when `same` is true
};

/// Decides whether A and B lie in one path component of (C_n(X), τ_H).
/// They do iff φ(A) = φ(B); the connecting path runs A → A_Δ ← B.
inline ComponentVerdict same_component_hausdorff(const RayGraph& g, const ClosedSubset& a,
                                                 const ClosedSubset& b, std::size_t n) {
  for (const ClosedSubset* s : {&a, &b}) {
    if (!in_Cn(g, *s, n)) {
      throw PreconditionError("set exceeds the component bound n = " + std::to_string(n));
    }
  }
  ComponentVerdict v;
  v.phi_a = direction_set(g, a);
  v.phi_b = direction_set(g, b);
  if (v.phi_a != v.phi_b) {
    v.witness_ray = v.phi_a.first_difference(v.phi_b);
    return v;
  }
  v.same = true;
  if (a == b) {
    v.path = constant_path(g, a);
  } else {
    v.path = path_to_canonical(g, a, n).then(path_to_canonical(g, b, n).reversed());
  }
  return v;
}

/// Number of path components of (C_n(X), τ_H): 2^k for k rays, for every n.
inline std::uint64_t component_count_formula(const RayGraph& g, std::size_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  if (g.ray_count() >= 64) throw ResourceCapError("2^k does not fit in 64 bits");
  return std::uint64_t{1} << g.ray_count();
}

}  // namespace hyperspace
