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

// Brute-force ground truth for small graphs. oracle_hausdorff uses point
// distances only and never touches the envelope code in metric.hpp; the
// component census uses hausdorff() as its adjacency test.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperspace/error.hpp"
#include "hyperspace/graph.hpp"
#include "hyperspace/metric.hpp"
#include "hyperspace/subset.hpp"
#include "hyperspace/union_find.hpp"

namespace hyperspace {

struct GridParams {
  Rational step;        // h
  Rational truncation;  // T
  std::size_t n = 1;
  std::size_t max_pieces = 1;
  std::size_t cap = 20000;
};

namespace detail {

inline void validate_grid(const GridParams& p) {
  if (p.step.sign() <= 0) throw PreconditionError("grid step must be positive");
  if (p.truncation.sign() < 0) throw PreconditionError("truncation radius must be nonnegative");
  if (!(p.truncation / p.step).is_integer()) {
    throw PreconditionError("truncation radius must be a multiple of the grid step");
  }
  if (p.n == 0 || p.max_pieces == 0) throw PreconditionError("n and max_pieces must be positive");
}

/// Every list of at most `max_pieces` sorted, pairwise separated grid
/// intervals on one element (optionally ending in a tail on rays),
/// including the empty list.
inline std::vector<std::vector<Interval>> element_options(const std::vector<Rational>& grid,
                                                          bool ray, std::size_t max_pieces) {
  std::vector<std::vector<Interval>> out;
  std::vector<Interval> current;
  auto extend = [&](auto&& self, std::size_t first) -> void {
    out.push_back(current);
    if (current.size() == max_pieces) return;
    for (std::size_t i = first; i < grid.size(); ++i) {
      for (std::size_t j = i; j < grid.size(); ++j) {
        current.push_back(Interval::closed(grid[i], grid[j]));
        self(self, j + 1);
        current.pop_back();
      }
      if (ray) {
        current.push_back(Interval::tail(grid[i]));
        out.push_back(current);
        current.pop_back();
      }
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace detail

/// All canonical sets with grid endpoints in [0, T] per element and at most
/// `max_pieces` intervals per element, filtered to C_n(X). Sorted.
inline std::vector<ClosedSubset> enumerate_sets(const RayGraph& g, const GridParams& params) {
  detail::validate_grid(params);
  std::vector<std::vector<std::vector<Interval>>> options;
  std::size_t combos = 1;
  for (std::size_t e = 0; e < g.element_count(); ++e) {
    const Element& el = g.element(e);
    Rational top = el.is_ray() ? params.truncation : min(params.truncation, el.length);
    std::vector<Rational> grid;
    for (Rational x(0); x <= top; x += params.step) grid.push_back(x);
    options.push_back(detail::element_options(grid, el.is_ray(), params.max_pieces));
    combos *= options.back().size();
    if (combos > 50 * params.cap) {
      throw ResourceCapError("enumeration would visit more than " +
                             std::to_string(50 * params.cap) + " candidates");
    }
  }

  std::set<ClosedSubset> found;
  std::vector<std::size_t> choice(g.element_count(), 0);
  for (;;) {
    PieceTable raw(g.element_count());
    bool any = false;
    for (std::size_t e = 0; e < raw.size(); ++e) {
      raw[e] = options[e][choice[e]];
      any = any || !raw[e].empty();
    }
    if (any) {
      ClosedSubset s = ClosedSubset::make(g, std::move(raw));
      if (in_Cn(g, s, params.n)) {
        found.insert(std::move(s));
        if (found.size() > params.cap) {
          throw ResourceCapError("enumeration exceeded cap of " + std::to_string(params.cap) +
                                 " sets");
        }
      }
    }
    std::size_t e = 0;
    while (e < choice.size() && ++choice[e] == options[e].size()) choice[e++] = 0;
    if (e == choice.size()) break;
  }
  return {found.begin(), found.end()};
}

struct OracleComponents {
  std::size_t count = 0;
  std::vector<ClosedSubset> sets;
  std::vector<std::size_t> component_of;  // per set, 0-based component index
  std::vector<ClosedSubset> representatives;
  std::vector<DirectionSet> directions;   // per component
  /// Each component carries a single direction set and no two components
  /// share one.
  bool refines_by_direction = true;
  std::optional<std::string> warning;
};

/// Components of the graph on enumerated sets with an edge wherever
/// hausdorff ≤ δ.
inline OracleComponents oracle_components(const RayGraph& g, const GridParams& params,
                                          const Rational& delta) {
  OracleComponents r;
  if (delta < params.step + params.step / 5) {
    r.warning = "delta " + delta.str() + " is below h + h/5; grid neighbours may not connect";
  }
  r.sets = enumerate_sets(g, params);
  const std::size_t m = r.sets.size();
  std::vector<DirectionSet> phi;
  phi.reserve(m);
  for (const auto& s : r.sets) phi.push_back(direction_set(g, s));

  UnionFind uf(m);
  const ExtendedDistance limit = delta;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (uf.same(i, j)) continue;
      if (hausdorff(g, r.sets[i], r.sets[j]) <= limit) uf.unite(i, j);
    }
  }

  std::map<std::size_t, std::size_t> index;
  r.component_of.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto [it, fresh] = index.emplace(uf.find(i), index.size());
    r.component_of[i] = it->second;
    if (fresh) {
      r.representatives.push_back(r.sets[i]);
      r.directions.push_back(phi[i]);
    } else if (r.directions[it->second] != phi[i]) {
      r.refines_by_direction = false;
    }
  }
  r.count = index.size();
  std::set<DirectionSet> distinct(r.directions.begin(), r.directions.end());
  if (distinct.size() != r.directions.size()) r.refines_by_direction = false;
  return r;
}

namespace detail {

/// Grid samples of `a` with step h; tails are cut at `cut`. Interval
/// endpoints are always included.
inline std::vector<GraphPoint> grid_samples(const ClosedSubset& a, const Rational& h,
                                            const Rational& cut) {
  std::vector<GraphPoint> pts;
  for (std::size_t e = 0; e < a.element_count(); ++e) {
    for (const Interval& iv : a.on(e)) {
      Rational hi = iv.hi ? *iv.hi : max(cut, iv.lo);
      for (Rational x = iv.lo; x < hi; x += h) pts.push_back({e, x});
      pts.push_back({e, hi});
    }
  }
  return pts;
}

/// d(p, B) from point distances alone: the nearest point of a closed
/// interval is its clamp (same element) or one of its endpoints.
inline Rational point_set_distance_direct(const RayGraph& g, const GraphPoint& p,
                                          const ClosedSubset& b, const Rational& cut) {
  std::optional<Rational> best;
  auto consider = [&](const Rational& d) {
    if (!best || d < *best) best = d;
  };
  for (std::size_t e = 0; e < b.element_count(); ++e) {
    for (const Interval& iv : b.on(e)) {
      Rational hi = iv.hi ? *iv.hi : max(cut, iv.lo);
      if (e == p.element) {
        Rational clamped = max(iv.lo, min(p.coord, hi));
        consider(abs(p.coord - clamped));
      }
      consider(g.point_distance(p, {e, iv.lo}));
      consider(g.point_distance(p, {e, hi}));
    }
  }
  return *best;
}

}  // namespace detail

/// Grid approximation of d_H within h of the exact value when the direction
/// sets agree; infinite when they differ.
inline ExtendedDistance oracle_hausdorff(const RayGraph& g, const ClosedSubset& a,
                                         const ClosedSubset& b, const Rational& h,
                                         const Rational& truncation) {
  if (h.sign() <= 0) throw PreconditionError("grid step must be positive");
  Rational cut = truncation;
  for (std::size_t e : g.rays()) {
    if (a.has_tail(e) != b.has_tail(e)) return ExtendedDistance::infinity();
    if (a.has_tail(e)) cut = max(cut, max(a.on(e).back().lo, b.on(e).back().lo));
  }
  Rational best(0);
  for (auto [x, y] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
    for (const GraphPoint& p : detail::grid_samples(*x, h, cut)) {
      best = max(best, detail::point_set_distance_direct(g, p, *y, cut));
    }
  }
  return best;
}

}  // namespace hyperspace
