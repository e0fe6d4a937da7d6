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

// Shared test graphs and random generators.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hyperspace/graph.hpp"
#include "hyperspace/graph_parse.hpp"
#include "hyperspace/subset.hpp"

namespace hyperspace::testing {

inline RayGraph interval_graph() { return parse_graph("u v; edge E1 u v"); }
inline RayGraph loop_graph() { return parse_graph("v; edge E1 v v"); }
inline RayGraph ray_graph() { return parse_graph("v; ray R1 at v"); }
inline RayGraph line_graph() { return parse_graph("v; ray R1 v; ray R2 v"); }
inline RayGraph triod_graph() {
  return parse_graph("v a b c; edge E1 v a; edge E2 v b; edge E3 v c");
}
inline RayGraph infinite_noose_graph() { return parse_graph("v; edge E1 v v; ray R1 v"); }
inline RayGraph star3_graph() { return parse_graph("v; ray R1 v; ray R2 v; ray R3 v"); }
inline RayGraph triangle_graph() {
  return parse_graph("a b c; edge E1 a b; edge E2 b c; edge E3 c a");
}
/// Two vertices, a loop of length 3/2, an edge of length 1/2, rays at both ends.
inline RayGraph mixed_graph() {
  return parse_graph(
      "vertex p q\n"
      "edge L p p length 3/2\n"
      "edge E p q length 1/2\n"
      "ray Rp p\n"
      "ray Rq q\n");
}

struct NamedGraph {
  std::string name;
  RayGraph graph;
};

inline std::vector<NamedGraph> all_graphs() {
  return {{"G_I", interval_graph()},         {"G_LOOP", loop_graph()},
          {"G_R", ray_graph()},              {"G_LINE", line_graph()},
          {"G_TRIOD", triod_graph()},        {"G_NOOSE_INF", infinite_noose_graph()},
          {"STAR3", star3_graph()},          {"TRIANGLE", triangle_graph()},
          {"MIXED", mixed_graph()}};
}

struct SetOptions {
  int max_intervals = 3;
  std::int64_t denominator = 8;
  Rational ray_extent = 3;  // bounded coordinates on rays stay below this
  bool allow_tails = true;
  double tail_probability = 0.3;
};

inline Rational random_coord(std::mt19937_64& rng, const Rational& top, std::int64_t den) {
  std::int64_t steps = (top * Rational(den)).num() / (top * Rational(den)).den();
  std::uniform_int_distribution<std::int64_t> pick(0, steps);
  return Rational(pick(rng), den);
}

inline GraphPoint random_point(const RayGraph& g, std::mt19937_64& rng,
                               const SetOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> elem(0, g.element_count() - 1);
  std::size_t e = elem(rng);
  const Element& el = g.element(e);
  return {e, random_coord(rng, el.is_ray() ? opt.ray_extent : el.length, opt.denominator)};
}

inline ClosedSubset random_set(const RayGraph& g, std::mt19937_64& rng, const SetOptions& opt = {}) {
  std::uniform_int_distribution<int> count(1, opt.max_intervals);
  std::uniform_int_distribution<std::size_t> elem(0, g.element_count() - 1);
  std::bernoulli_distribution tail(opt.tail_probability);
  PieceTable raw(g.element_count());
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    std::size_t e = elem(rng);
    const Element& el = g.element(e);
    Rational top = el.is_ray() ? opt.ray_extent : el.length;
    Rational a = random_coord(rng, top, opt.denominator);
    Rational b = random_coord(rng, top, opt.denominator);
    if (b < a) std::swap(a, b);
    if (el.is_ray() && opt.allow_tails && tail(rng)) {
      raw[e].push_back(Interval::tail(a));
    } else {
      raw[e].push_back(Interval::closed(a, b));
    }
  }
  return ClosedSubset::make(g, std::move(raw));
}

/// Rejection-samples a set with at most `n` components.
inline ClosedSubset random_set_in_cn(const RayGraph& g, std::mt19937_64& rng, std::size_t n,
                                     const SetOptions& opt = {}) {
  for (;;) {
    ClosedSubset s = random_set(g, rng, opt);
    if (component_count(g, s) <= n) return s;
  }
}

inline Rational random_unit(std::mt19937_64& rng, std::int64_t den = 1000) {
  std::uniform_int_distribution<std::int64_t> pick(0, den);
  return Rational(pick(rng), den);
}

}  // namespace hyperspace::testing
