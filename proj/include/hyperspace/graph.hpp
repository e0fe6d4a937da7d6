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
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperspace/error.hpp"
#include "hyperspace/rational.hpp"
#include "hyperspace/union_find.hpp"

namespace hyperspace {

enum class ElementKind { kEdge, kRay };

/// An edge [0, length] running from `tail` to `head`, or a ray [0, inf)
/// attached at `tail`. For rays `head == tail` and `length` is unused.
struct Element {
  std::string id;
  ElementKind kind = ElementKind::kEdge;
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational length = 1;

  bool is_ray() const { return kind == ElementKind::kRay; }
  bool is_loop() const { return kind == ElementKind::kEdge && tail == head; }
};

/// A location on an element, in arc-length coordinates from the element's
/// first endpoint (or from the attachment vertex for rays).
struct GraphPoint {
  std::size_t element = 0;
  Rational coord;

  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
  friend auto operator<=>(const GraphPoint&, const GraphPoint&) = default;
};

/// Position of a vertex on one incident element.
struct Incidence {
  std::size_t element;
  Rational coord;
};

struct EdgeSpec {
  std::string id;
  std::string from;
  std::string to;
  Rational length = 1;
};

struct RaySpec {
  std::string id;
  std::string at;
};

/// Element declaration in source order; `index` points into the edge or
/// ray list depending on `is_ray`.
struct ElementOrder {
  bool is_ray;
  std::size_t index;
};

/// A finite connected ray-graph metrized by arc length.
///
/// Immutable value type; copies share the underlying tables.
class RayGraph {
 public:
  /// Validates and builds a graph. Elements are indexed in `order` (or
  /// edges-then-rays when `order` is empty); rays are numbered 1..k in the
  /// same order.
  static RayGraph build(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
                        std::vector<RaySpec> rays, std::vector<ElementOrder> order = {});

  std::size_t vertex_count() const { return data_->vertices.size(); }
  std::size_t element_count() const { return data_->elements.size(); }
  const std::string& vertex_id(std::size_t v) const { return data_->vertices[v]; }
  const Element& element(std::size_t e) const { return data_->elements[e]; }
  const std::vector<Element>& elements() const { return data_->elements; }

  std::optional<std::size_t> find_vertex(const std::string& id) const {
    auto it = data_->vertex_index.find(id);
    if (it == data_->vertex_index.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_element(const std::string& id) const {
    auto it = data_->element_index.find(id);
    if (it == data_->element_index.end()) return std::nullopt;
    return it->second;
  }

  /// Element indices of the rays R_1..R_k.
  const std::vector<std::size_t>& rays() const { return data_->rays; }
  std::size_t ray_count() const { return data_->rays.size(); }
  /// 1-based ray number of element `e`, or 0 if `e` is an edge.
  std::size_t ray_number(std::size_t e) const { return data_->ray_number[e]; }

  /// Vertex positions on incident elements, sorted by (element id, coord).
  const std::vector<Incidence>& incidences(std::size_t v) const {
    return data_->incidences[v];
  }

  /// Rank of element `e` in lexicographic id order.
  std::size_t id_rank(std::size_t e) const { return data_->id_rank[e]; }

  const Rational& vertex_distance(std::size_t a, std::size_t b) const {
    return data_->distance[a * vertex_count() + b];
  }

  /// Largest valid coordinate on an edge; rays have none.
  std::optional<Rational> coord_limit(std::size_t e) const {
    const Element& el = element(e);
    if (el.is_ray()) return std::nullopt;
    return el.length;
  }

  bool valid(const GraphPoint& p) const {
    if (p.element >= element_count() || p.coord.sign() < 0) return false;
    auto limit = coord_limit(p.element);
    return !limit || p.coord <= *limit;
  }

  void require_valid(const GraphPoint& p) const {
    if (p.element >= element_count()) throw PreconditionError("invalid point: unknown element");
    if (!valid(p)) {
      throw PreconditionError("invalid point: coordinate " + p.coord.str() +
                              " out of range on " + element(p.element).id);
    }
  }

  /// The vertex sitting at `p`, if any.
  std::optional<std::size_t> vertex_at(const GraphPoint& p) const {
    const Element& el = element(p.element);
    if (p.coord.sign() == 0) return el.tail;
    if (!el.is_ray() && p.coord == el.length) return el.head;
    return std::nullopt;
  }

  /// Picks the lexicographically smallest (element id, coord) representation
  /// of a vertex point; other points are returned unchanged.
  GraphPoint normalize(const GraphPoint& p) const {
    auto v = vertex_at(p);
    if (!v) return p;
    const Incidence& least = incidences(*v).front();
    return {least.element, least.coord};
  }

  /// Point on element `e` at `coord` as seen from vertex `v`: shortest
  /// distance leaving through either endpoint.
  Rational distance_to_vertex(const GraphPoint& p, std::size_t v) const {
    const Element& el = element(p.element);
    Rational via_tail = p.coord + vertex_distance(el.tail, v);
    if (el.is_ray()) return via_tail;
    return min(via_tail, el.length - p.coord + vertex_distance(el.head, v));
  }

  Rational point_distance(const GraphPoint& p, const GraphPoint& q) const {
    require_valid(p);
    require_valid(q);
    const Element& ep = element(p.element);
    std::optional<Rational> best;
    if (p.element == q.element) best = abs(p.coord - q.coord);
    auto consider = [&](const Rational& to_endpoint, std::size_t endpoint) {
      Rational d = to_endpoint + distance_to_vertex(q, endpoint);
      if (!best || d < *best) best = d;
    };
    consider(p.coord, ep.tail);
    if (!ep.is_ray()) consider(ep.length - p.coord, ep.head);
    return *best;
  }

 private:
  struct Data {
    std::vector<std::string> vertices;
    std::vector<Element> elements;
    std::map<std::string, std::size_t> vertex_index;
    std::map<std::string, std::size_t> element_index;
    std::vector<std::size_t> rays;
    std::vector<std::size_t> ray_number;
    std::vector<std::size_t> id_rank;
    std::vector<std::vector<Incidence>> incidences;
    std::vector<Rational> distance;
  };

  explicit RayGraph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

inline RayGraph RayGraph::build(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
                                std::vector<RaySpec> rays, std::vector<ElementOrder> order) {
  auto data = std::make_shared<Data>();
  if (vertices.empty()) throw PreconditionError("graph has no vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!data->vertex_index.emplace(vertices[i], i).second) {
      throw PreconditionError("duplicate vertex id '" + vertices[i] + "'");
    }
  }
  data->vertices = std::move(vertices);

  auto lookup_vertex = [&](const std::string& id, const std::string& owner) {
    auto it = data->vertex_index.find(id);
    if (it == data->vertex_index.end()) {
      throw PreconditionError("element '" + owner + "' references unknown vertex '" + id + "'");
    }
    return it->second;
  };

  if (order.empty()) {
    for (std::size_t i = 0; i < edges.size(); ++i) order.push_back({false, i});
    for (std::size_t i = 0; i < rays.size(); ++i) order.push_back({true, i});
  }
  if (order.size() != edges.size() + rays.size()) {
    throw PreconditionError("element order does not cover every edge and ray");
  }
  for (const ElementOrder& o : order) {
    Element el;
    if (o.is_ray) {
      const RaySpec& r = rays.at(o.index);
      el.id = r.id;
      el.kind = ElementKind::kRay;
      el.tail = el.head = lookup_vertex(r.at, r.id);
      el.length = 0;
    } else {
      const EdgeSpec& e = edges.at(o.index);
      if (e.length.sign() <= 0) {
        throw PreconditionError("edge '" + e.id + "' has nonpositive length " + e.length.str());
      }
      el.id = e.id;
      el.tail = lookup_vertex(e.from, e.id);
      el.head = lookup_vertex(e.to, e.id);
      el.length = e.length;
    }
    if (!data->element_index.emplace(el.id, data->elements.size()).second) {
      throw PreconditionError("duplicate element id '" + el.id + "'");
    }
    data->elements.push_back(std::move(el));
  }

  const std::size_t nv = data->vertices.size();
  const std::size_t ne = data->elements.size();

  UnionFind uf(nv);
  for (const Element& el : data->elements) uf.unite(el.tail, el.head);
  if (uf.set_count() != 1) throw PreconditionError("graph is not connected");

  data->ray_number.assign(ne, 0);
  for (std::size_t e = 0; e < ne; ++e) {
    if (data->elements[e].is_ray()) {
      data->rays.push_back(e);
      data->ray_number[e] = data->rays.size();
    }
  }

  std::vector<std::size_t> by_id(ne);
  std::iota(by_id.begin(), by_id.end(), std::size_t{0});
  std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) {
    return data->elements[a].id < data->elements[b].id;
  });
  data->id_rank.assign(ne, 0);
  for (std::size_t r = 0; r < ne; ++r) data->id_rank[by_id[r]] = r;

  data->incidences.assign(nv, {});
  for (std::size_t e = 0; e < ne; ++e) {
    const Element& el = data->elements[e];
    data->incidences[el.tail].push_back({e, Rational(0)});
    if (!el.is_ray()) data->incidences[el.head].push_back({e, el.length});
  }
  for (auto& list : data->incidences) {
    std::sort(list.begin(), list.end(), [&](const Incidence& a, const Incidence& b) {
      if (a.element != b.element) return data->id_rank[a.element] < data->id_rank[b.element];
      return a.coord < b.coord;
    });
  }

  // Floyd-Warshall over edges; every pair is reachable after the
  // connectivity check.
  std::vector<std::optional<Rational>> dist(nv * nv);
  for (std::size_t v = 0; v < nv; ++v) dist[v * nv + v] = Rational(0);
  for (const Element& el : data->elements) {
    if (el.is_ray() || el.is_loop()) continue;
    for (auto [a, b] : {std::pair{el.tail, el.head}, std::pair{el.head, el.tail}}) {
      auto& slot = dist[a * nv + b];
      if (!slot || el.length < *slot) slot = el.length;
    }
  }
  for (std::size_t k = 0; k < nv; ++k) {
    for (std::size_t i = 0; i < nv; ++i) {
      if (!dist[i * nv + k]) continue;
      for (std::size_t j = 0; j < nv; ++j) {
        if (!dist[k * nv + j]) continue;
        Rational through = *dist[i * nv + k] + *dist[k * nv + j];
        auto& slot = dist[i * nv + j];
        if (!slot || through < *slot) slot = through;
      }
    }
  }
  data->distance.reserve(nv * nv);
  for (const auto& d : dist) data->distance.push_back(*d);

  return RayGraph(std::move(data));
}

/// Exact shortest-path distance in X between two points.
inline Rational point_distance(const RayGraph& g, const GraphPoint& p, const GraphPoint& q) {
  return g.point_distance(p, q);
}

/// Row-major all-pairs vertex distance table.
inline std::vector<std::vector<Rational>> vertex_distance_table(const RayGraph& g) {
  std::vector<std::vector<Rational>> table(g.vertex_count());
  for (std::size_t a = 0; a < g.vertex_count(); ++a) {
    for (std::size_t b = 0; b < g.vertex_count(); ++b) table[a].push_back(g.vertex_distance(a, b));
  }
  return table;
}

}  // namespace hyperspace
