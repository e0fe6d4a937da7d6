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
#include <cctype>
#include <compare>
#include <cstdint>
#include <iterator>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperspace/error.hpp"
#include "hyperspace/graph.hpp"
#include "hyperspace/rational.hpp"
#include "hyperspace/union_find.hpp"

namespace hyperspace {

/// Closed interval [lo, hi] on one element; `hi == nullopt` is the
/// unbounded tail [lo, inf) on a ray.
struct Interval {
  Rational lo;
  std::optional<Rational> hi;

  static Interval point(Rational x) { return {x, x}; }
  static Interval closed(Rational a, Rational b) { return {a, b}; }
  static Interval tail(Rational a) { return {a, std::nullopt}; }

  bool unbounded() const { return !hi.has_value(); }
  bool degenerate() const { return hi && *hi == lo; }
  bool contains(const Rational& x) const { return lo <= x && (!hi || x <= *hi); }
  bool contains(const Interval& o) const {
    if (o.lo < lo) return false;
    if (!hi) return true;
    return o.hi && *o.hi <= *hi;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
    if (auto c = a.lo <=> b.lo; c != 0) return c;
    if (a.hi == b.hi) return std::strong_ordering::equal;
    if (!a.hi) return std::strong_ordering::greater;
    if (!b.hi) return std::strong_ordering::less;
    return *a.hi <=> *b.hi;
  }
};

/// Per-element interval lists, indexed by element.
using PieceTable = std::vector<std::vector<Interval>>;

/// Unbounded direction set: the 1-based numbers of rays on which a set
/// carries an unbounded tail.
class DirectionSet {
 public:
  DirectionSet() = default;
  DirectionSet(std::initializer_list<std::size_t> rays) : rays_(rays) {}
  explicit DirectionSet(std::set<std::size_t> rays) : rays_(std::move(rays)) {}

  /// The subset of {1..k} encoded by the bits of `mask`.
  static DirectionSet from_mask(std::uint64_t mask, std::size_t k) {
    DirectionSet d;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) d.rays_.insert(i + 1);
    }
    return d;
  }

  bool contains(std::size_t ray) const { return rays_.count(ray) != 0; }
  bool empty() const { return rays_.empty(); }
  std::size_t size() const { return rays_.size(); }
  const std::set<std::size_t>& rays() const { return rays_; }
  void insert(std::size_t ray) { rays_.insert(ray); }

  DirectionSet unite(const DirectionSet& o) const {
    DirectionSet d = *this;
    d.rays_.insert(o.rays_.begin(), o.rays_.end());
    return d;
  }

  /// Smallest ray number in exactly one of the two sets.
  std::optional<std::size_t> first_difference(const DirectionSet& o) const {
    std::vector<std::size_t> diff;
    std::set_symmetric_difference(rays_.begin(), rays_.end(), o.rays_.begin(), o.rays_.end(),
                                  std::back_inserter(diff));
    if (diff.empty()) return std::nullopt;
    return diff.front();
  }

  std::string str() const {
    std::string s = "{";
    for (auto it = rays_.begin(); it != rays_.end(); ++it) {
      if (it != rays_.begin()) s += ",";
      s += std::to_string(*it);
    }
    return s + "}";
  }

  friend bool operator==(const DirectionSet&, const DirectionSet&) = default;
  friend auto operator<=>(const DirectionSet& a, const DirectionSet& b) {
    return a.rays_ <=> b.rays_;
  }

 private:
  std::set<std::size_t> rays_;
};

/// A nonempty closed subset of X that is a finite union of closed
/// intervals and ray tails, held in canonical form.
///
/// Canonical form: on each element, intervals are sorted, pairwise disjoint
/// and non-adjacent. A vertex that lies in the set only as an isolated
/// point is stored once, at its normalized representation; a vertex covered
/// by a nondegenerate interval on any incident element carries no separate
/// point. Two canonical sets are equal iff they are the same subset of X.
class ClosedSubset {
 public:
  /// Validates `raw` against `g` and canonicalizes it.
  static ClosedSubset make(const RayGraph& g, PieceTable raw);

  static ClosedSubset point(const RayGraph& g, const GraphPoint& p) {
    g.require_valid(p);
    PieceTable raw(g.element_count());
    raw[p.element].push_back(Interval::point(p.coord));
    return make(g, std::move(raw));
  }

  static ClosedSubset whole(const RayGraph& g) {
    PieceTable raw(g.element_count());
    for (std::size_t e = 0; e < g.element_count(); ++e) {
      const Element& el = g.element(e);
      raw[e].push_back(el.is_ray() ? Interval::tail(0) : Interval::closed(0, el.length));
    }
    return make(g, std::move(raw));
  }

  const PieceTable& pieces() const { return pieces_; }
  const std::vector<Interval>& on(std::size_t e) const { return pieces_[e]; }
  std::size_t element_count() const { return pieces_.size(); }

  std::size_t interval_count() const {
    std::size_t n = 0;
    for (const auto& list : pieces_) n += list.size();
    return n;
  }

  bool has_tail(std::size_t e) const {
    return !pieces_[e].empty() && pieces_[e].back().unbounded();
  }

  bool bounded() const {
    for (std::size_t e = 0; e < pieces_.size(); ++e) {
      if (has_tail(e)) return false;
    }
    return true;
  }

  friend bool operator==(const ClosedSubset&, const ClosedSubset&) = default;
  friend auto operator<=>(const ClosedSubset& a, const ClosedSubset& b) {
    return a.pieces_ <=> b.pieces_;
  }

 private:
  explicit ClosedSubset(PieceTable pieces) : pieces_(std::move(pieces)) {}
  PieceTable pieces_;
};

namespace detail {

/// Sorts and merges overlapping or touching intervals on one element.
inline std::vector<Interval> merge_intervals(std::vector<Interval> list) {
  std::sort(list.begin(), list.end());
  std::vector<Interval> out;
  for (Interval& iv : list) {
    if (!out.empty()) {
      Interval& last = out.back();
      if (!last.hi || iv.lo <= *last.hi) {
        if (last.hi && (!iv.hi || *iv.hi > *last.hi)) last.hi = iv.hi;
        continue;
      }
    }
    out.push_back(iv);
  }
  return out;
}

}  // namespace detail

inline ClosedSubset ClosedSubset::make(const RayGraph& g, PieceTable raw) {
  if (raw.size() != g.element_count()) {
    throw PreconditionError("piece table does not match the graph's element count");
  }
  bool any = false;
  for (std::size_t e = 0; e < raw.size(); ++e) {
    const Element& el = g.element(e);
    for (const Interval& iv : raw[e]) {
      if (iv.lo.sign() < 0) {
        throw PreconditionError("coordinate " + iv.lo.str() + " out of range on " + el.id);
      }
      if (iv.hi && *iv.hi < iv.lo) {
        throw PreconditionError("malformed interval [" + iv.lo.str() + "," + iv.hi->str() +
                                "] on " + el.id);
      }
      if (!el.is_ray()) {
        if (!iv.hi) throw PreconditionError("unbounded interval on edge " + el.id);
        if (*iv.hi > el.length) {
          throw PreconditionError("coordinate " + iv.hi->str() + " out of range on " + el.id);
        }
      }
      any = true;
    }
    raw[e] = detail::merge_intervals(std::move(raw[e]));
  }
  if (!any) throw PreconditionError("empty set");

  // Vertex points: drop every degenerate copy, then restore one at the
  // normalized position unless a nondegenerate interval already covers it.
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    bool present = false;
    bool covered = false;
    for (const Incidence& inc : g.incidences(v)) {
      for (const Interval& iv : raw[inc.element]) {
        if (!iv.contains(inc.coord)) continue;
        present = true;
        if (!iv.degenerate()) covered = true;
      }
    }
    if (!present) continue;
    for (const Incidence& inc : g.incidences(v)) {
      std::erase_if(raw[inc.element], [&](const Interval& iv) {
        return iv.degenerate() && iv.lo == inc.coord;
      });
    }
    if (!covered) {
      const Incidence& least = g.incidences(v).front();
      auto& list = raw[least.element];
      list.push_back(Interval::point(least.coord));
      std::sort(list.begin(), list.end());
    }
  }
  return ClosedSubset(std::move(raw));
}

/// Union of two sets on the same graph.
inline ClosedSubset unite(const RayGraph& g, const ClosedSubset& a, const ClosedSubset& b) {
  PieceTable raw = a.pieces();
  for (std::size_t e = 0; e < raw.size(); ++e) {
    raw[e].insert(raw[e].end(), b.on(e).begin(), b.on(e).end());
  }
  return ClosedSubset::make(g, std::move(raw));
}

inline bool contains_point(const RayGraph& g, const ClosedSubset& a, const GraphPoint& p) {
  if (auto v = g.vertex_at(p)) {
    for (const Incidence& inc : g.incidences(*v)) {
      for (const Interval& iv : a.on(inc.element)) {
        if (iv.contains(inc.coord)) return true;
      }
    }
    return false;
  }
  for (const Interval& iv : a.on(p.element)) {
    if (iv.contains(p.coord)) return true;
  }
  return false;
}

/// A ⊆ B.
inline bool is_subset(const RayGraph& g, const ClosedSubset& a, const ClosedSubset& b) {
  for (std::size_t e = 0; e < a.element_count(); ++e) {
    for (const Interval& iv : a.on(e)) {
      if (iv.degenerate()) {
        if (!contains_point(g, b, {e, iv.lo})) return false;
        continue;
      }
      bool inside = std::any_of(b.on(e).begin(), b.on(e).end(),
                                [&](const Interval& outer) { return outer.contains(iv); });
      if (!inside) return false;
    }
  }
  return true;
}

/// Number of connected components of `a` as a subspace of X.
inline std::size_t component_count(const RayGraph& g, const ClosedSubset& a) {
  std::vector<std::size_t> offset(a.element_count() + 1, 0);
  for (std::size_t e = 0; e < a.element_count(); ++e) offset[e + 1] = offset[e] + a.on(e).size();
  const std::size_t intervals = offset.back();
  UnionFind uf(intervals + g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const Incidence& inc : g.incidences(v)) {
      const auto& list = a.on(inc.element);
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i].contains(inc.coord)) uf.unite(offset[inc.element] + i, intervals + v);
      }
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < intervals; ++i) roots.insert(uf.find(i));
  return roots.size();
}

inline bool in_Cn(const RayGraph& g, const ClosedSubset& a, std::size_t n) {
  return component_count(g, a) <= n;
}

/// φ(A): rays on which A has an unbounded tail.
inline DirectionSet direction_set(const RayGraph& g, const ClosedSubset& a) {
  DirectionSet d;
  for (std::size_t e : g.rays()) {
    if (a.has_tail(e)) d.insert(g.ray_number(e));
  }
  return d;
}

/// A_Δ: every edge and vertex of X together with the rays listed in Δ.
inline ClosedSubset canonical_element(const RayGraph& g, const DirectionSet& delta) {
  for (std::size_t r : delta.rays()) {
    if (r == 0 || r > g.ray_count()) {
      throw PreconditionError("direction set names ray " + std::to_string(r) +
                              " but the graph has " + std::to_string(g.ray_count()));
    }
  }
  PieceTable raw(g.element_count());
  for (std::size_t e = 0; e < g.element_count(); ++e) {
    const Element& el = g.element(e);
    if (!el.is_ray()) {
      raw[e].push_back(Interval::closed(0, el.length));
    } else if (delta.contains(g.ray_number(e))) {
      raw[e].push_back(Interval::tail(0));
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Incidence& inc = g.incidences(v).front();
    raw[inc.element].push_back(Interval::point(inc.coord));
  }
  return ClosedSubset::make(g, std::move(raw));
}

/// Renders `a` as a set literal, elements in declaration order.
inline std::string format_set(const RayGraph& g, const ClosedSubset& a) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t e = 0; e < a.element_count(); ++e) {
    for (const Interval& iv : a.on(e)) {
      if (!first) out << ' ';
      first = false;
      out << g.element(e).id << ':';
      if (iv.degenerate()) {
        out << '{' << iv.lo << '}';
      } else if (iv.unbounded()) {
        out << '[' << iv.lo << ",inf)";
      } else {
        out << '[' << iv.lo << ',' << *iv.hi << ']';
      }
    }
  }
  return out.str();
}

/// Parses a set literal: whitespace-separated atoms `ELEM:[a,b]`,
/// `ELEM:[a,inf)`, `ELEM:{a}`, or a bare vertex id for that vertex point.
inline ClosedSubset parse_set(std::string_view text, const RayGraph& g) {
  PieceTable raw(g.element_count());
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg, std::size_t at) -> void {
    throw ParseError(msg, std::to_string(at + 1));
  };
  auto number = [&](std::string_view s, std::size_t at) {
    auto r = Rational::parse(s);
    if (!r) fail("malformed coordinate '" + std::string(s) + "'", at);
    return *r;
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view atom = text.substr(pos, end - pos);
    auto colon = atom.find(':');
    if (colon == std::string_view::npos) {
      auto v = g.find_vertex(std::string(atom));
      if (!v) fail("unknown vertex or malformed atom '" + std::string(atom) + "'", pos);
      const Incidence& inc = g.incidences(*v).front();
      raw[inc.element].push_back(Interval::point(inc.coord));
      pos = end;
      continue;
    }
    std::string id(atom.substr(0, colon));
    auto e = g.find_element(id);
    if (!e) throw PreconditionError("unknown element '" + id + "'");
    std::string_view body = atom.substr(colon + 1);
    std::size_t body_at = pos + colon + 1;
    if (body.size() >= 3 && body.front() == '{' && body.back() == '}') {
      raw[*e].push_back(Interval::point(number(body.substr(1, body.size() - 2), body_at)));
    } else if (body.size() >= 5 && body.front() == '[' &&
               (body.back() == ']' || body.back() == ')')) {
      std::string_view inner = body.substr(1, body.size() - 2);
      auto comma = inner.find(',');
      if (comma == std::string_view::npos) fail("interval needs two endpoints", body_at);
      Rational lo = number(inner.substr(0, comma), body_at);
      std::string_view rhs = inner.substr(comma + 1);
      if (rhs == "inf") {
        if (body.back() != ')') fail("unbounded interval must close with ')'", body_at);
        if (!g.element(*e).is_ray()) {
          throw PreconditionError("unbounded interval on edge " + id);
        }
        raw[*e].push_back(Interval::tail(lo));
      } else {
        if (body.back() != ']') fail("bounded interval must close with ']'", body_at);
        raw[*e].push_back(Interval::closed(lo, number(rhs, body_at)));
      }
    } else {
      fail("malformed atom '" + std::string(atom) + "'", pos);
    }
    pos = end;
  }
  return ClosedSubset::make(g, std::move(raw));
}

}  // namespace hyperspace
