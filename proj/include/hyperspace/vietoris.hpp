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
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperspace/error.hpp"
#include "hyperspace/graph.hpp"
#include "hyperspace/graph_parse.hpp"
#include "hyperspace/homotopy.hpp"
#include "hyperspace/metric.hpp"
#include "hyperspace/subset.hpp"

namespace hyperspace {

/// Interval on one element with independently open or closed ends.
/// Closed ends only occur at the element's own boundary.
struct OpenInterval {
  Rational lo;
  bool lo_closed = false;
  std::optional<Rational> hi;  // nullopt: unbounded
  bool hi_closed = false;

  bool contains(const Rational& x) const {
    bool above = lo_closed ? lo <= x : lo < x;
    if (!hi) return above;
    return above && (hi_closed ? x <= *hi : x < *hi);
  }

  bool contains(const Interval& iv) const {
    bool lo_ok = lo < iv.lo || (lo == iv.lo && lo_closed);
    if (!lo_ok) return false;
    if (!hi) return true;
    if (!iv.hi) return false;
    return *iv.hi < *hi || (*iv.hi == *hi && hi_closed);
  }
};

struct Ball {
  GraphPoint center;
  Rational radius;
};

/// An open subset of X: a finite union of open metric balls, or all of X.
/// Carries its derived form, per element a union of maximal intervals.
class OpenRegion {
 public:
  static OpenRegion everything(const RayGraph& g) {
    OpenRegion r(g);
    r.all_ = true;
    for (std::size_t e = 0; e < g.element_count(); ++e) {
      const Element& el = g.element(e);
      r.derived_[e].push_back(
          {Rational(0), true, el.is_ray() ? std::nullopt : std::optional(el.length), true});
    }
    return r;
  }

  static OpenRegion ball(const RayGraph& g, const GraphPoint& center, const Rational& radius);

  static OpenRegion unite(const OpenRegion& a, const OpenRegion& b) {
    OpenRegion r(a.graph_);
    r.all_ = a.all_ || b.all_;
    r.balls_ = a.balls_;
    r.balls_.insert(r.balls_.end(), b.balls_.begin(), b.balls_.end());
    for (std::size_t e = 0; e < r.derived_.size(); ++e) {
      std::vector<OpenInterval> merged = a.derived_[e];
      merged.insert(merged.end(), b.derived_[e].begin(), b.derived_[e].end());
      r.derived_[e] = merge(std::move(merged));
    }
    return r;
  }

  bool is_all() const { return all_; }
  const std::vector<Ball>& balls() const { return balls_; }
  const std::vector<OpenInterval>& on(std::size_t e) const { return derived_[e]; }
  const RayGraph& graph() const { return graph_; }

  bool contains(const GraphPoint& p) const {
    const auto& list = derived_[p.element];
    return std::any_of(list.begin(), list.end(),
                       [&](const OpenInterval& iv) { return iv.contains(p.coord); });
  }

  std::string str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t e = 0; e < derived_.size(); ++e) {
      for (const OpenInterval& iv : derived_[e]) {
        if (!first) out << ' ';
        first = false;
        out << graph_.element(e).id << ':' << (iv.lo_closed ? '[' : '(') << iv.lo << ',';
        if (iv.hi) {
          out << *iv.hi << (iv.hi_closed ? ']' : ')');
        } else {
          out << "inf)";
        }
      }
    }
    return out.str();
  }

 private:
  explicit OpenRegion(const RayGraph& g) : graph_(g), derived_(g.element_count()) {}

  static std::vector<OpenInterval> merge(std::vector<OpenInterval> list) {
    std::sort(list.begin(), list.end(), [](const OpenInterval& a, const OpenInterval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.lo_closed && !b.lo_closed;
    });
    std::vector<OpenInterval> out;
    for (const OpenInterval& iv : list) {
      if (!out.empty()) {
        OpenInterval& last = out.back();
        bool joins = !last.hi || iv.lo < *last.hi ||
                     (iv.lo == *last.hi && (last.hi_closed || iv.lo_closed));
        if (joins) {
          if (!last.hi) continue;
          if (!iv.hi) {
            last.hi.reset();
            last.hi_closed = false;
          } else if (*iv.hi > *last.hi) {
            last.hi = iv.hi;
            last.hi_closed = iv.hi_closed;
          } else if (*iv.hi == *last.hi) {
            last.hi_closed = last.hi_closed || iv.hi_closed;
          }
          continue;
        }
      }
      out.push_back(iv);
    }
    return out;
  }

  RayGraph graph_;
  bool all_ = false;
  std::vector<Ball> balls_;
  std::vector<std::vector<OpenInterval>> derived_;
};

namespace detail {

/// { x ∈ element : profile(x) < r } as maximal intervals.
inline std::vector<OpenInterval> sublevel_set(const DistanceProfile& f,
                                              const std::optional<Rational>& limit,
                                              const Rational& r) {
  const auto& bps = f.breakpoints();
  std::vector<Rational> cuts;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    cuts.push_back(bps[i].x);
    if (i + 1 < bps.size()) {
      const auto& a = bps[i];
      const auto& b = bps[i + 1];
      if ((a.y < r && b.y > r) || (a.y > r && b.y < r)) {
        cuts.push_back(a.x + (r - a.y) * (b.x - a.x) / (b.y - a.y));
      }
    }
  }
  if (!limit && f.trailing_slope().sign() > 0 && bps.back().y < r) {
    cuts.push_back(bps.back().x + (r - bps.back().y) / f.trailing_slope());
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Walk alternating point / gap atoms; consecutive members form one interval.
  std::vector<OpenInterval> out;
  bool open = false;
  auto begin = [&](const Rational& x, bool closed) {
    out.push_back({x, closed, x, false});
    open = true;
  };
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    bool point_in = f.at(cuts[i]) < r;
    if (point_in && !open) begin(cuts[i], true);
    if (!point_in && open) {
      out.back().hi = cuts[i];
      out.back().hi_closed = false;
      open = false;
    }
    bool last = i + 1 == cuts.size();
    if (last && limit) {
      if (open) {
        out.back().hi = cuts[i];
        out.back().hi_closed = true;
      }
      break;
    }
    Rational probe = last ? cuts[i] + 1 : (cuts[i] + cuts[i + 1]) / 2;
    bool gap_in = f.at(probe) < r;
    if (gap_in && !open) begin(cuts[i], false);
    if (!gap_in && open) {
      out.back().hi = cuts[i];
      out.back().hi_closed = true;
      open = false;
    }
    if (last && open) out.back().hi.reset();
  }
  return out;
}

}  // namespace detail

inline OpenRegion OpenRegion::ball(const RayGraph& g, const GraphPoint& center,
                                   const Rational& radius) {
  g.require_valid(center);
  if (radius.sign() <= 0) throw PreconditionError("ball radius must be positive");
  OpenRegion r(g);
  r.balls_.push_back({center, radius});
  ClosedSubset c = ClosedSubset::point(g, center);
  for (std::size_t e = 0; e < g.element_count(); ++e) {
    r.derived_[e] = detail::sublevel_set(DistanceProfile::build(g, e, c), g.coord_limit(e), radius);
  }
  return r;
}

inline OpenRegion ball(const RayGraph& g, const GraphPoint& center, const Rational& radius) {
  return OpenRegion::ball(g, center, radius);
}

inline OpenRegion unite_regions(const std::vector<OpenRegion>& regions) {
  if (regions.empty()) throw PreconditionError("empty list of open regions");
  OpenRegion u = regions.front();
  for (std::size_t i = 1; i < regions.size(); ++i) u = OpenRegion::unite(u, regions[i]);
  return u;
}

/// A ∈ U⁺, i.e. A ⊂ U.
inline bool member_upper(const ClosedSubset& a, const OpenRegion& u) {
  if (u.is_all()) return true;
  for (std::size_t e = 0; e < a.element_count(); ++e) {
    for (const Interval& iv : a.on(e)) {
      const auto& list = u.on(e);
      if (std::none_of(list.begin(), list.end(),
                       [&](const OpenInterval& o) { return o.contains(iv); })) {
        return false;
      }
    }
  }
  return true;
}

/// A ∈ V⁻, i.e. A ∩ V ≠ ∅: some ball reaches within its radius of A.
inline bool member_lower(const ClosedSubset& a, const OpenRegion& v) {
  if (v.is_all()) return true;
  for (const Ball& b : v.balls()) {
    if (dist_point_to_set(v.graph(), b.center, a) < b.radius) return true;
  }
  return false;
}

/// A ∈ ⟨U_1, ..., U_n⟩.
inline bool member_basic(const ClosedSubset& a, const std::vector<OpenRegion>& us) {
  if (!member_upper(a, unite_regions(us))) return false;
  return std::all_of(us.begin(), us.end(), [&](const OpenRegion& u) { return member_lower(a, u); });
}

struct WitnessResult {
  std::optional<Rational> delta;  // set on success
  std::optional<Rational> failing_t;
  std::string failure;
};

/// Searches for δ such that every sampled t with |t - t0| ≤ δ (step
/// `resolution`) keeps P(t) inside ⟨Us⟩. Starts from the δ that covers the
/// whole domain and halves it until the sampled check passes.
inline WitnessResult continuity_witness(const HyperPath& p, const Rational& t0,
                                        const std::vector<OpenRegion>& us,
                                        const Rational& resolution) {
  if (resolution.sign() <= 0) throw PreconditionError("resolution must be positive");
  if (t0.sign() < 0 || t0 > Rational(1)) throw PreconditionError("t0 outside [0,1]");
  if (!member_basic(p.eval(t0), us)) {
    throw PreconditionError("P(t0) is not in the basic open set");
  }
  Rational delta = max(t0, 1 - t0);
  // Scan outward; the first failing offset bounds δ from above.
  std::optional<Rational> first_fail_offset;
  WitnessResult result;
  for (std::int64_t k = 1;; ++k) {
    Rational offset = resolution * Rational(k);
    if (offset > delta) break;
    for (Rational t : {t0 - offset, t0 + offset}) {
      if (t.sign() < 0 || t > Rational(1)) continue;
      if (!member_basic(p.eval(t), us)) {
        first_fail_offset = offset;
        result.failing_t = t;
        break;
      }
    }
    if (first_fail_offset) break;
  }
  if (first_fail_offset) {
    while (delta >= *first_fail_offset) delta /= 2;
  }
  if (delta < resolution) {
    result.failure = "delta underflowed resolution " + resolution.str();
    return result;
  }
  result.delta = delta;
  return result;
}

/// Parses an open-region literal: atoms `ball CENTER RADIUS` (CENTER is
/// `ELEM:coord` or a vertex id) and `all`, joined by union.
inline OpenRegion parse_open_region(std::string_view text, const RayGraph& g) {
  std::vector<detail::Token> tokens;
  for (auto& stmt : detail::split_statements(text)) {
    tokens.insert(tokens.end(), stmt.begin(), stmt.end());
  }
  if (tokens.empty()) throw ParseError("empty open-region literal");
  std::optional<OpenRegion> region;
  auto add = [&](OpenRegion r) { region = region ? OpenRegion::unite(*region, r) : r; };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    if (tok.text == "all") {
      add(OpenRegion::everything(g));
      continue;
    }
    if (tok.text != "ball" || i + 2 >= tokens.size()) {
      throw ParseError("expected 'ball CENTER RADIUS' or 'all'", tok.where());
    }
    const auto& center_tok = tokens[i + 1];
    const auto& radius_tok = tokens[i + 2];
    i += 2;
    GraphPoint center;
    auto colon = center_tok.text.find(':');
    if (colon == std::string::npos) {
      auto v = g.find_vertex(center_tok.text);
      if (!v) throw PreconditionError("unknown vertex '" + center_tok.text + "' at " + center_tok.where());
      const Incidence& inc = g.incidences(*v).front();
      center = {inc.element, inc.coord};
    } else {
      auto e = g.find_element(center_tok.text.substr(0, colon));
      auto c = Rational::parse(center_tok.text.substr(colon + 1));
      if (!e) throw PreconditionError("unknown element in '" + center_tok.text + "' at " + center_tok.where());
      if (!c) throw ParseError("malformed coordinate in '" + center_tok.text + "'", center_tok.where());
      center = {*e, *c};
    }
    auto r = Rational::parse(radius_tok.text);
    if (!r) throw ParseError("malformed radius '" + radius_tok.text + "'", radius_tok.where());
    add(OpenRegion::ball(g, center, *r));
  }
  return *region;
}

}  // namespace hyperspace
