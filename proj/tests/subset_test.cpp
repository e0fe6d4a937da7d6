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

#include "hyperspace/subset.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

namespace hyperspace {
namespace {

using testing::interval_graph;
using testing::line_graph;
using testing::loop_graph;
using testing::ray_graph;
using testing::triod_graph;

TEST(ParseSetTest, TailOnRay) {
  RayGraph g = ray_graph();
  ClosedSubset a = parse_set("R1:[1,inf)", g);
  ASSERT_EQ(a.on(0).size(), 1u);
  EXPECT_TRUE(a.has_tail(0));
  EXPECT_EQ(a.on(0)[0].lo, Rational(1));
}

TEST(ParseSetTest, AdjacentIntervalsMerge) {
  RayGraph g = interval_graph();
  EXPECT_EQ(format_set(g, parse_set("E1:[0,1/4] E1:[1/4,1/2]", g)), "E1:[0,1/2]");
}

TEST(ParseSetTest, Errors) {
  RayGraph g = interval_graph();
  EXPECT_THROW(parse_set("", g), PreconditionError);
  EXPECT_THROW(parse_set("   ", g), PreconditionError);
  EXPECT_THROW(parse_set("X9:[0,1]", g), PreconditionError);
  EXPECT_THROW(parse_set("E1:[0,2]", g), PreconditionError);
  EXPECT_THROW(parse_set("E1:[1/2,1/4]", g), PreconditionError);
  EXPECT_THROW(parse_set("E1:[0,inf)", g), PreconditionError);
  EXPECT_THROW(parse_set("E1:[0,1", g), ParseError);
  EXPECT_THROW(parse_set("E1:{x}", g), ParseError);
}

TEST(ParseSetTest, VertexAtomsAndPoints) {
  RayGraph g = triod_graph();
  ClosedSubset a = parse_set("a b c", g);
  EXPECT_EQ(a, parse_set("E1:{1} E2:{1} E3:{1}", g));
  EXPECT_EQ(parse_set("v", g), parse_set("E2:{0}", g));
}

TEST(ParseSetTest, FormatRoundTrips) {
  std::mt19937_64 rng(3);
  for (const auto& [name, g] : testing::all_graphs()) {
    for (int i = 0; i < 100; ++i) {
      ClosedSubset a = testing::random_set(g, rng);
      EXPECT_EQ(parse_set(format_set(g, a), g), a) << name << " " << format_set(g, a);
    }
  }
}

TEST(CanonicalFormTest, VertexPointCoveredByIntervalIsDropped) {
  RayGraph g = triod_graph();
  EXPECT_EQ(parse_set("E1:[0,1/2] E2:{0}", g), parse_set("E1:[0,1/2]", g));
  EXPECT_EQ(parse_set("E2:[0,1/2] E1:{0}", g).interval_count(), 1u);
}

TEST(UnionTest, Examples) {
  RayGraph g = interval_graph();
  EXPECT_EQ(unite(g, parse_set("E1:[0,1/4]", g), parse_set("E1:[1/8,1/2]", g)),
            parse_set("E1:[0,1/2]", g));
  RayGraph r = ray_graph();
  ClosedSubset u = unite(r, parse_set("R1:[0,1]", r), parse_set("R1:[2,inf)", r));
  EXPECT_EQ(u.on(0).size(), 2u);
  EXPECT_TRUE(u.has_tail(0));
}

TEST(ComponentCountTest, Examples) {
  RayGraph t = triod_graph();
  EXPECT_EQ(component_count(t, parse_set("a b c", t)), 3u);
  EXPECT_EQ(component_count(t, parse_set("E1:[0,1/2] E2:[0,1/2]", t)), 1u);
  EXPECT_EQ(component_count(loop_graph(), ClosedSubset::whole(loop_graph())), 1u);
  EXPECT_TRUE(in_Cn(t, parse_set("a b c", t), 3));
  EXPECT_FALSE(in_Cn(t, parse_set("a b c", t), 2));
}

TEST(ComponentCountTest, EdgeCoverJoinsBothEnds) {
  RayGraph g = testing::triangle_graph();
  // E1 covers a..b, E2 touches b, E3 touches a
  EXPECT_EQ(component_count(g, parse_set("E1:[0,1] E2:[0,1/4] E3:[3/4,1]", g)), 1u);
  EXPECT_EQ(component_count(g, parse_set("E1:[0,1/2] E2:[1/2,1]", g)), 2u);
  RayGraph l = loop_graph();
  EXPECT_EQ(component_count(l, parse_set("E1:[0,1/4] E1:[3/4,1]", l)), 1u);
  EXPECT_EQ(component_count(l, parse_set("E1:[1/8,1/4] E1:[3/4,7/8]", l)), 2u);
}

TEST(DirectionSetTest, Examples) {
  RayGraph g = line_graph();
  EXPECT_EQ(direction_set(g, parse_set("R1:[2,inf)", g)), (DirectionSet{1}));
  EXPECT_EQ(direction_set(g, ClosedSubset::whole(g)), (DirectionSet{1, 2}));
  EXPECT_TRUE(direction_set(g, parse_set("R1:[0,5] R2:[1,2]", g)).empty());
}

TEST(CanonicalElementTest, Examples) {
  RayGraph g = line_graph();
  EXPECT_EQ(canonical_element(g, DirectionSet{1, 2}), ClosedSubset::whole(g));
  EXPECT_EQ(canonical_element(g, DirectionSet{}), parse_set("v", g));
  RayGraph n = testing::infinite_noose_graph();
  EXPECT_EQ(canonical_element(n, DirectionSet{1}), ClosedSubset::whole(n));
  EXPECT_THROW(canonical_element(g, DirectionSet{3}), PreconditionError);
}

TEST(CanonicalElementProperty, ConnectedWithMatchingDirections) {
  for (const auto& [name, g] : testing::all_graphs()) {
    for (std::uint64_t mask = 0; mask < (1ULL << g.ray_count()); ++mask) {
      DirectionSet d = DirectionSet::from_mask(mask, g.ray_count());
      ClosedSubset a = canonical_element(g, d);
      EXPECT_EQ(direction_set(g, a), d) << name;
      EXPECT_EQ(component_count(g, a), 1u) << name;
      EXPECT_TRUE(in_Cn(g, a, 1));
    }
  }
}

TEST(SubsetProperty, UnionLaws) {
  std::mt19937_64 rng(17);
  for (const auto& [name, g] : testing::all_graphs()) {
    for (int i = 0; i < 150; ++i) {
      ClosedSubset a = testing::random_set(g, rng);
      ClosedSubset b = testing::random_set(g, rng);
      ClosedSubset c = testing::random_set(g, rng);
      ClosedSubset ab = unite(g, a, b);
      EXPECT_EQ(ab, unite(g, b, a)) << name;
      EXPECT_EQ(unite(g, a, a), a) << name;
      EXPECT_EQ(unite(g, ab, c), unite(g, a, unite(g, b, c))) << name;
      EXPECT_EQ(ClosedSubset::make(g, a.pieces()), a) << name;
      EXPECT_TRUE(is_subset(g, a, ab)) << name;
      EXPECT_TRUE(is_subset(g, b, ab)) << name;
      EXPECT_LE(component_count(g, ab), component_count(g, a) + component_count(g, b)) << name;
      EXPECT_EQ(direction_set(g, ab), direction_set(g, a).unite(direction_set(g, b))) << name;
      EXPECT_GE(component_count(g, a), 1u);
    }
  }
}

// Oracle: count components by flood fill over a fine grid of X restricted
// to the set (valid here because random sets use endpoints on 1/8 and the
// grid step is 1/16, so separated pieces leave a grid gap).
std::size_t grid_components(const RayGraph& g, const ClosedSubset& a) {
  const Rational h(1, 16);
  std::vector<GraphPoint> pts;
  for (std::size_t e = 0; e < g.element_count(); ++e) {
    const Element& el = g.element(e);
    Rational top = el.is_ray() ? Rational(4) : el.length;
    for (Rational x(0); x <= top; x += h) {
      GraphPoint p{e, x};
      if (contains_point(g, a, p)) pts.push_back(g.normalize(p));
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  UnionFind uf(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (point_distance(g, pts[i], pts[j]) <= h) uf.unite(i, j);
    }
  }
  return uf.set_count();
}

TEST(SubsetProperty, ComponentCountMatchesGridFloodFill) {
  std::mt19937_64 rng(23);
  testing::SetOptions opt;
  opt.ray_extent = 3;
  for (const auto& [name, g] : testing::all_graphs()) {
    for (int i = 0; i < 60; ++i) {
      ClosedSubset a = testing::random_set(g, rng, opt);
      EXPECT_EQ(component_count(g, a), grid_components(g, a)) << name << " " << format_set(g, a);
    }
  }
}

}  // namespace
}  // namespace hyperspace
