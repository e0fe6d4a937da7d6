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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hyperspace/homotopy.hpp"
#include "hyperspace/metric.hpp"
#include "hyperspace/oracle.hpp"
#include "hyperspace/vietoris.hpp"
#include "hyperspace/wedge.hpp"

namespace hs = hyperspace;
namespace ht = hyperspace::testing;
using hs::ClosedSubset;
using hs::ExtendedDistance;
using hs::Rational;
using hs::RayGraph;

namespace {

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what());
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks, " << failures_ << " failed";
    for (const auto& n : notes_) out << "\n    " << n;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

std::string str(const ExtendedDistance& d) { return d.str(); }

// 1. Grid census of path components equals 2^k and splits by direction set.
Check census() {
  Check c;
  struct Case {
    const char* name;
    RayGraph g;
    std::size_t expected;
  };
  std::vector<Case> cases{{"G_I", ht::interval_graph(), 1},
                          {"G_LOOP", ht::loop_graph(), 1},
                          {"G_R", ht::ray_graph(), 2},
                          {"G_NOOSE_INF", ht::infinite_noose_graph(), 2},
                          {"G_LINE", ht::line_graph(), 4},
                          {"STAR3", ht::star3_graph(), 8}};
  for (const auto& k : cases) {
    for (std::size_t n : {1, 2}) {
      hs::GridParams p;
      p.step = Rational(1, 2);
      p.truncation = 2;
      p.n = n;
      hs::OracleComponents r = hs::oracle_components(k.g, p, Rational(3, 5));
      std::printf("    census %s n=%zu: %zu sets, %zu components\n", k.name, n, r.sets.size(),
                  r.count);
      c.expect(r.count == k.expected, [&] {
        return std::string(k.name) + " n=" + std::to_string(n) + ": " + std::to_string(r.count) +
               " components";
      });
      c.expect(r.refines_by_direction, [&] { return std::string(k.name) + " mixes directions"; });
      c.expect(r.directions.size() == (std::size_t{1} << k.g.ray_count()),
               [&] { return std::string(k.name) + ": not every direction set is hit"; });
    }
  }
  return c;
}

// 2. Infinite distance exactly when direction sets differ.
Check lemma() {
  Check c;
  std::mt19937_64 rng(101);
  for (RayGraph g : {ht::line_graph(), ht::infinite_noose_graph()}) {
    for (int i = 0; i < 250; ++i) {
      ClosedSubset a = ht::random_set(g, rng);
      ClosedSubset b = ht::random_set(g, rng);
      bool inf = hs::hausdorff(g, a, b).is_infinite();
      bool differ = hs::direction_set(g, a) != hs::direction_set(g, b);
      c.expect(inf == differ, [&] {
        return hs::format_set(g, a) + " vs " + hs::format_set(g, b);
      });
    }
  }
  return c;
}

// 3. Symmetry, triangle inequality and identity of indiscernibles.
Check metric_axioms() {
  Check c;
  std::mt19937_64 rng(103);
  for (const auto& [name, g] : ht::all_graphs()) {
    for (int i = 0; i < 250; ++i) {
      ht::SetOptions opt;
      // every fifth triple reuses A for B to exercise the zero case
      ClosedSubset a = ht::random_set(g, rng, opt);
      ClosedSubset b = i % 5 == 0 ? a : ht::random_set(g, rng, opt);
      ClosedSubset x = ht::random_set(g, rng, opt);
      ExtendedDistance ab = hs::hausdorff(g, a, b);
      ExtendedDistance ba = hs::hausdorff(g, b, a);
      ExtendedDistance ax = hs::hausdorff(g, a, x);
      ExtendedDistance xb = hs::hausdorff(g, x, b);
      c.expect(ab == ba, [&] { return name + ": asymmetric " + str(ab) + " / " + str(ba); });
      c.expect(ab <= ax + xb, [&] { return name + ": triangle fails " + str(ab); });
      c.expect((ab == ExtendedDistance(Rational(0))) == (a == b),
               [&] { return name + ": zero distance mismatch"; });
    }
  }
  return c;
}

// 4. Hausdorff path to A_Δ.
Check path_suite() {
  Check c;
  std::mt19937_64 rng(107);
  const std::size_t n = 3;
  for (RayGraph g : {ht::line_graph(), ht::star3_graph()}) {
    for (int i = 0; i < 60; ++i) {
      ClosedSubset a = ht::random_set_in_cn(g, rng, n, {4, 8, 4, true, 0.3});
      hs::HyperPath p = hs::path_to_canonical(g, a, n);
      hs::DirectionSet phi = hs::direction_set(g, a);
      std::string tag = hs::format_set(g, a);
      c.expect(p.eval(0) == a, [&] { return tag + ": P(0) != A"; });
      c.expect(p.eval(1) == hs::canonical_element(g, phi), [&] { return tag + ": P(1) != A_Delta"; });
      for (int k = 0; k <= 100; ++k) {
        Rational t(k, 100);
        c.expect(hs::in_Cn(g, p.eval(t), n), [&] { return tag + ": leaves C_3 at " + t.str(); });
      }
      std::size_t previous = hs::component_count(g, a);
      for (std::size_t s = 0; s < p.stage_count(); ++s) {
        const hs::Stage& st = p.stages()[s];
        ExtendedDistance bound = hs::stage_lipschitz_bound(st);
        if (st.kind() == hs::StageKind::kGrowTails || st.kind() == hs::StageKind::kShrinkBounded) {
          for (int k = 0; k <= 50; ++k) {
            std::size_t count = hs::component_count(g, p.eval_stage(s, Rational(k, 50)));
            c.expect(count <= previous, [&] { return tag + ": component count grows"; });
            previous = count;
          }
        }
        for (int k = 0; k < 100; ++k) {
          Rational u = ht::random_unit(rng), v = ht::random_unit(rng);
          ExtendedDistance d = hs::hausdorff(g, p.eval_stage(s, u), p.eval_stage(s, v));
          c.expect(!bound.is_infinite() && d <= ExtendedDistance(bound.value() * abs(u - v)),
                   [&] { return tag + ": Lipschitz bound " + str(bound) + " broken by " + str(d); });
        }
      }
      c.expect(hs::component_count(g, p.eval(1)) == 1, [&] { return tag + ": end not connected"; });
    }
  }
  return c;
}

// A random basic open ⟨U1, ..., Um⟩ containing s: U1 covers s (a ball
// around a random point whose radius exceeds the farthest point of s, or all
// of X when s is unbounded); the rest are random balls that meet s.
std::vector<hs::OpenRegion> random_basic_open(const RayGraph& g, const ClosedSubset& s,
                                              std::mt19937_64& rng) {
  std::vector<hs::OpenRegion> us;
  Rational margin = Rational(1, 20) + ht::random_coord(rng, 1, 20);
  if (s.bounded()) {
    hs::GraphPoint center = ht::random_point(g, rng, {1, 8, 2});
    ExtendedDistance far = hs::directed_hausdorff(g, s, ClosedSubset::point(g, center));
    us.push_back(hs::ball(g, center, far.value() + margin));
  } else {
    us.push_back(hs::OpenRegion::everything(g));
  }
  std::uniform_int_distribution<int> extra(1, 3);
  for (int k = extra(rng); k > 0;) {
    hs::GraphPoint center = ht::random_point(g, rng, {1, 8, 5});
    hs::OpenRegion b = hs::ball(g, center, Rational(1, 8) + ht::random_coord(rng, 2, 8));
    if (hs::member_lower(s, b)) {
      us.push_back(b);
      --k;
    }
  }
  return us;
}

// 5. Vietoris growth path: monotone, ends at X, locally stays in basic opens.
Check vietoris_suite() {
  Check c;
  std::mt19937_64 rng(109);
  for (RayGraph g : {ht::line_graph(), ht::star3_graph(), ht::infinite_noose_graph()}) {
    for (int i = 0; i < 8; ++i) {
      ClosedSubset a = ht::random_set_in_cn(g, rng, 3);
      hs::HyperPath gamma = hs::ray_growth_path(g, hs::direction_set(g, a));
      std::string tag = hs::format_set(g, a);
      for (int k = 0; k < 100; ++k) {
        Rational s = ht::random_unit(rng), t = ht::random_unit(rng);
        if (t < s) std::swap(s, t);
        c.expect(hs::is_subset(g, gamma.eval(s), gamma.eval(t)),
                 [&] { return tag + ": not monotone at " + s.str() + " < " + t.str(); });
      }
      c.expect(gamma.eval(1) == ClosedSubset::whole(g), [&] { return tag + ": gamma(1) != X"; });
      hs::HyperPath full = hs::vietoris_path(g, a, 3);
      c.expect(full.eval(1) == ClosedSubset::whole(g), [&] { return tag + ": path end != X"; });
    }
  }
  for (RayGraph g : {ht::line_graph(), ht::star3_graph()}) {
    for (Rational t0 : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      for (int i = 0; i < 25; ++i) {
        ClosedSubset a = ht::random_set_in_cn(g, rng, 3);
        hs::HyperPath gamma = hs::ray_growth_path(g, hs::direction_set(g, a));
        std::vector<hs::OpenRegion> us = random_basic_open(g, gamma.eval(t0), rng);
        hs::WitnessResult w = hs::continuity_witness(gamma, t0, us, Rational(1, 1000));
        c.expect(w.delta && w.delta->sign() > 0,
                 [&] { return "no delta at t0=" + t0.str() + ": " + w.failure; });
      }
    }
  }
  return c;
}

// 6. The five worked wedge models.
Check wedge_models() {
  Check c;
  using hs::HModel;
  using Dims = std::multiset<int, std::greater<>>;
  hs::ModelStats two_od = hs::model_stats(hs::wedge(HModel::interval(), HModel::interval()));
  c.expect(two_od.components == 1 && two_od.max_dimension == 2, [] { return "2-od"; });
  hs::ModelStats noose = hs::model_stats(hs::wedge(HModel::circle(), HModel::interval()));
  c.expect(noose.dimensions == Dims{3, 2, 2}, [] { return "noose dims"; });
  hs::ModelStats triod = hs::model_stats(
      hs::wedge(hs::wedge(HModel::interval(), HModel::interval()), HModel::interval()));
  c.expect(triod.dimensions == Dims{3, 2, 2, 2}, [] { return "triod dims"; });
  c.expect(hs::model_components(hs::wedge(HModel::circle(), HModel::ray())) == 2,
           [] { return "infinite noose components"; });
  c.expect(hs::model_components(hs::wedge(HModel::ray(), HModel::ray())) == 4,
           [] { return "real line components"; });
  return c;
}

// 7. Grid Hausdorff within one step of the exact value.
Check cross_validation() {
  Check c;
  std::mt19937_64 rng(113);
  const Rational h(1, 100);
  ht::SetOptions opt;
  opt.allow_tails = false;
  for (const auto& [name, g] : ht::all_graphs()) {
    for (int i = 0; i < 200; ++i) {
      ClosedSubset a = ht::random_set(g, rng, opt);
      ClosedSubset b = ht::random_set(g, rng, opt);
      ExtendedDistance exact = hs::hausdorff(g, a, b);
      ExtendedDistance grid = hs::oracle_hausdorff(g, a, b, h, 4);
      c.expect(!exact.is_infinite() && !grid.is_infinite() &&
                   abs(exact.value() - grid.value()) <= h,
               [&] {
                 return name + ": " + str(exact) + " vs grid " + str(grid) + " for " +
                        hs::format_set(g, a) + " | " + hs::format_set(g, b);
               });
    }
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Check (*run)();
  };
  const Criterion criteria[] = {
      {1, "component census equals 2^k with direction-set partition", census},
      {2, "infinite distance iff direction sets differ", lemma},
      {3, "Hausdorff extended-metric axioms", metric_axioms},
      {4, "Hausdorff path suite on G_LINE and 3-ray star", path_suite},
      {5, "Vietoris growth path suite", vietoris_suite},
      {6, "wedge composer reproduces the five worked models", wedge_models},
      {7, "grid Hausdorff within h of exact", cross_validation},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check c;
    std::string error;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty() && c.ok();
    failed += !ok;
    std::printf("%s [%d] %s (%s%s, %.1fs)\n", ok ? "PASS" : "FAIL", cr.id, cr.title,
                error.empty() ? "" : "exception: ", error.empty() ? c.summary().c_str() : error.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
