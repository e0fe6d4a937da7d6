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

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "hyperspace/graph.hpp"
#include "hyperspace/rational.hpp"
#include "hyperspace/subset.hpp"

namespace hyperspace {

/// Distance from vertex `v` to the nearest point of `b`.
inline Rational vertex_distance_to_set(const RayGraph& g, std::size_t v, const ClosedSubset& b) {
  std::optional<Rational> best;
  auto consider = [&](Rational d) {
    if (!best || d < *best) best = d;
  };
  for (std::size_t e = 0; e < b.element_count(); ++e) {
    const Element& el = g.element(e);
    for (const Interval& iv : b.on(e)) {
      consider(g.vertex_distance(v, el.tail) + iv.lo);
      if (!el.is_ray()) consider(g.vertex_distance(v, el.head) + (el.length - *iv.hi));
    }
  }
  return *best;
}

/// Exact piecewise-linear profile x ↦ d((e, x), B) along one element.
///
/// The profile is the lower envelope of "cones" offset + dist(x, [lo, hi]):
/// one per endpoint vertex (leaving the element there) and one per interval
/// of B on the element itself. Every breakpoint of the envelope is a cone
/// corner or a crossing of two cone lines, so the envelope is linear between
/// consecutive candidates. Slopes are -1, 0 or +1.
class DistanceProfile {
 public:
  struct Breakpoint {
    Rational x;
    Rational y;
  };

  static DistanceProfile build(const RayGraph& g, std::size_t element, const ClosedSubset& b) {
    const Element& el = g.element(element);
    DistanceProfile p;
    p.ray_ = el.is_ray();
    p.cones_.push_back({vertex_distance_to_set(g, el.tail, b), Interval::point(0)});
    if (!el.is_ray()) {
      p.cones_.push_back({vertex_distance_to_set(g, el.head, b), Interval::point(el.length)});
    }
    for (const Interval& iv : b.on(element)) p.cones_.push_back({Rational(0), iv});

    std::vector<Rational> xs{Rational(0)};
    if (!el.is_ray()) xs.push_back(el.length);
    for (const Cone& c : p.cones_) {
      xs.push_back(c.span.lo);
      if (c.span.hi) xs.push_back(*c.span.hi);
    }
    // Lines as (slope, intercept); a cone contributes up to three.
    std::vector<std::pair<int, Rational>> lines;
    for (const Cone& c : p.cones_) {
      lines.emplace_back(-1, c.offset + c.span.lo);
      lines.emplace_back(0, c.offset);
      if (c.span.hi) lines.emplace_back(1, c.offset - *c.span.hi);
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        auto [m1, b1] = lines[i];
        auto [m2, b2] = lines[j];
        if (m1 == m2) continue;
        xs.push_back((b2 - b1) / Rational(m1 - m2));
      }
    }
    std::optional<Rational> limit = g.coord_limit(element);
    std::erase_if(xs, [&](const Rational& x) { return x.sign() < 0 || (limit && x > *limit); });
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    for (const Rational& x : xs) {
      Rational y = p.at(x);
      // Drop the middle of three collinear points.
      while (p.points_.size() >= 2) {
        const Breakpoint& a = p.points_[p.points_.size() - 2];
        const Breakpoint& m = p.points_.back();
        if ((m.y - a.y) * (x - m.x) != (y - m.y) * (m.x - a.x)) break;
        p.points_.pop_back();
      }
      p.points_.push_back({x, y});
    }
    if (p.ray_) {
      const Breakpoint& last = p.points_.back();
      p.trailing_slope_ = p.at(last.x + 1) - last.y;
    }
    return p;
  }

  /// d((e, x), B), evaluated directly from the cones.
  Rational at(const Rational& x) const {
    std::optional<Rational> best;
    for (const Cone& c : cones_) {
      Rational d = c.offset;
      if (x < c.span.lo) {
        d += c.span.lo - x;
      } else if (c.span.hi && x > *c.span.hi) {
        d += x - *c.span.hi;
      }
      if (!best || d < *best) best = d;
    }
    return *best;
  }

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  bool on_ray() const { return ray_; }
  /// Slope beyond the last breakpoint (rays only): +1, or 0 when B has a tail.
  const Rational& trailing_slope() const { return trailing_slope_; }

  /// Supremum over a closed interval; a tail is admissible only where the
  /// profile is eventually flat.
  ExtendedDistance sup_on(const Interval& iv) const {
    Rational hi;
    if (iv.hi) {
      hi = *iv.hi;
    } else {
      if (trailing_slope_.sign() > 0) return ExtendedDistance::infinity();
      hi = max(iv.lo, points_.back().x);
    }
    Rational best = max(at(iv.lo), at(hi));
    for (const Breakpoint& bp : points_) {
      if (bp.x > iv.lo && bp.x < hi && bp.y > best) best = bp.y;
    }
    return best;
  }

 private:
  struct Cone {
    Rational offset;
    Interval span;
  };

  std::vector<Cone> cones_;
  std::vector<Breakpoint> points_;
  Rational trailing_slope_;
  bool ray_ = false;
};

inline Rational dist_point_to_set(const RayGraph& g, const GraphPoint& p, const ClosedSubset& b) {
  g.require_valid(p);
  return DistanceProfile::build(g, p.element, b).at(p.coord);
}

/// sup over a ∈ A of d(a, B).
inline ExtendedDistance directed_hausdorff(const RayGraph& g, const ClosedSubset& a,
                                           const ClosedSubset& b) {
  for (std::size_t e : g.rays()) {
    if (a.has_tail(e) && !b.has_tail(e)) return ExtendedDistance::infinity();
  }
  Rational best(0);
  for (std::size_t e = 0; e < a.element_count(); ++e) {
    if (a.on(e).empty()) continue;
    DistanceProfile profile = DistanceProfile::build(g, e, b);
    for (const Interval& iv : a.on(e)) {
      ExtendedDistance d = profile.sup_on(iv);
      if (d.is_infinite()) return d;
      best = max(best, d.value());
    }
  }
  return best;
}

inline ExtendedDistance hausdorff(const RayGraph& g, const ClosedSubset& a, const ClosedSubset& b) {
  ExtendedDistance ab = directed_hausdorff(g, a, b);
  if (ab.is_infinite()) return ab;
  return std::max(ab, directed_hausdorff(g, b, a));
}

}  // namespace hyperspace
