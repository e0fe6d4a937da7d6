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

// Command-line front end. Subcommands print `key: value` lines on stdout;
// failures print one JSON error record on stderr and return the error
// class as exit code (1 usage, 2 parse, 3 precondition, 4 resource cap).

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperspace/graph.hpp"
#include "hyperspace/graph_parse.hpp"
#include "hyperspace/homotopy.hpp"
#include "hyperspace/metric.hpp"
#include "hyperspace/oracle.hpp"
#include "hyperspace/subset.hpp"
#include "hyperspace/vietoris.hpp"
#include "hyperspace/wedge.hpp"

namespace hyperspace::cli {

/// Builds a graph from the structured form
/// {"vertices": [...], "edges": [{"id","from","to","length"?}], "rays": [{"id","at"}]}.
/// Lengths are integers or "p/q" strings. Edges precede rays in element order.
inline RayGraph graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<EdgeSpec> edges;
    std::vector<RaySpec> rays;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      EdgeSpec spec{e.at("id"), e.at("from"), e.at("to"), Rational(1)};
      if (e.contains("length")) {
        const auto& len = e.at("length");
        auto parsed = len.is_string() ? Rational::parse(len.get<std::string>())
                                      : Rational::parse(std::to_string(len.get<std::int64_t>()));
        if (!parsed) throw ParseError("malformed length for edge " + spec.id);
        spec.length = *parsed;
      }
      edges.push_back(std::move(spec));
    }
    for (const auto& r : j.value("rays", nlohmann::json::array())) {
      rays.push_back({r.at("id"), r.at("at")});
    }
    return RayGraph::build(std::move(vertices), std::move(edges), std::move(rays));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("structured graph: ") + ex.what());
  }
}

inline RayGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kUsage, "cannot open graph file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
      throw ParseError(ex.what(), std::to_string(ex.byte));
    }
    return graph_from_json(j);
  }
  return parse_graph(text);
}

inline Rational parse_rational_arg(const std::string& text, const std::string& what) {
  auto r = Rational::parse(text);
  if (!r) throw ParseError("malformed " + what + " '" + text + "'");
  return *r;
}

/// Header line `t<TAB>set`, then M+1 records at t = k/M.
inline void write_path_dump(const HyperPath& p, std::int64_t samples, std::ostream& out) {
  if (samples <= 0) throw Error(ErrorKind::kUsage, "--samples must be positive");
  out << "t\tset\n";
  for (std::int64_t k = 0; k <= samples; ++k) {
    Rational t(k, samples);
    out << t << '\t' << format_set(p.graph(), p.eval(t)) << '\n';
  }
}

inline void emit_path(const HyperPath& p, const std::string& file, std::int64_t samples) {
  std::ofstream out(file);
  if (!out) throw Error(ErrorKind::kUsage, "cannot write '" + file + "'");
  write_path_dump(p, samples, out);
}

inline void describe_path(const HyperPath& p, std::ostream& out) {
  const RayGraph& g = p.graph();
  out << "stages: " << p.stage_count() << "\n";
  for (std::size_t i = 0; i < p.stage_count(); ++i) {
    const Stage& s = p.stages()[i];
    Rational begin = p.stage_start(i);
    Rational end = i + 1 == p.stage_count() ? Rational(1) : p.stage_start(i + 1);
    out << "stage " << i << ": " << stage_name(s.kind()) << (s.reversed ? " reversed" : "")
        << " t=[" << begin << "," << end << "] lipschitz " << stage_lipschitz_bound(s) << "\n";
  }
  out << "start: " << format_set(g, p.start()) << "\n";
  out << "end: " << format_set(g, p.end()) << "\n";
  out << "lipschitz: " << lipschitz_bound(p) << "\n";
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperspaces of finite ray-graphs", "hyperspace"};
  app.require_subcommand(1);

  std::string graph_file, a_lit, b_lit, emit_file, expr, t0_text, res_text = "1/1000";
  std::string step_text, trunc_text, delta_text;
  std::vector<std::string> open_specs;
  std::size_t n = 1, max_pieces = 1;
  std::int64_t samples = 10;
  bool directed = false, vietoris_flag = false;

  auto* dist = app.add_subcommand("dist", "Hausdorff distance between two sets");
  dist->add_option("--graph", graph_file)->required();
  dist->add_option("--a", a_lit)->required();
  dist->add_option("--b", b_lit)->required();
  dist->add_flag("--directed", directed, "sup over A of d(a, B) only");

  auto* classify = app.add_subcommand("classify", "Same path component of (C_n(X), tau_H)?");
  classify->add_option("--graph", graph_file)->required();
  classify->add_option("--a", a_lit)->required();
  classify->add_option("--b", b_lit)->required();
  classify->add_option("-n", n)->required();
  classify->add_option("--emit-path", emit_file);
  classify->add_option("--samples", samples);

  auto* path = app.add_subcommand("path", "Path from A to A_Delta (or to X with --vietoris)");
  path->add_option("--graph", graph_file)->required();
  path->add_option("--a", a_lit)->required();
  path->add_option("-n", n)->required();
  path->add_flag("--vietoris", vietoris_flag);
  path->add_option("--emit-path", emit_file);
  path->add_option("--samples", samples);

  auto* viet = app.add_subcommand("vietoris", "Vietoris open-set membership and witnesses");
  viet->add_option("--graph", graph_file)->required();
  viet->add_option("--a", a_lit)->required();
  viet->add_option("--open", open_specs)->required();
  viet->add_option("--witness", t0_text, "t0 on the Vietoris path of A");
  viet->add_option("--res", res_text);
  auto* viet_n = viet->add_option("-n", n);

  auto* wedge_cmd = app.add_subcommand("wedge", "Hyperspace model of a wedge expression");
  wedge_cmd->add_option("--expr", expr)->required();

  auto* oracle = app.add_subcommand("oracle", "Grid census of hyperspace components");
  oracle->add_option("--graph", graph_file)->required();
  oracle->add_option("--step", step_text)->required();
  oracle->add_option("--trunc", trunc_text)->required();
  oracle->add_option("--delta", delta_text)->required();
  oracle->add_option("-n", n)->required();
  oracle->add_option("--max-pieces", max_pieces);

  auto* validate = app.add_subcommand("validate", "Graph well-formedness report");
  validate->add_option("--graph", graph_file)->required();

  auto error_record = [&](const char* kind, const std::string& msg, int code) {
    err << nlohmann::json{{"error", kind}, {"message", msg}}.dump() << "\n";
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return error_record("usage", e.what(), 1);
  }

  try {
    if (*wedge_cmd) {
      out << format_model(parse_wedge_expression(expr));
      return 0;
    }
    RayGraph g = load_graph(graph_file);

    if (*validate) {
      std::size_t edges = g.element_count() - g.ray_count();
      out << "valid: true\n";
      out << "vertices: " << g.vertex_count() << "\n";
      out << "edges: " << edges << "\n";
      out << "rays: " << g.ray_count() << "\n";
      out << "components-formula: " << component_count_formula(g, 1) << "\n";
      for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        out << "distance " << g.vertex_id(a) << ":";
        for (std::size_t b = 0; b < g.vertex_count(); ++b) out << ' ' << g.vertex_distance(a, b);
        out << "\n";
      }
      return 0;
    }
    if (*oracle) {
      GridParams params{parse_rational_arg(step_text, "step"),
                        parse_rational_arg(trunc_text, "truncation"), n, max_pieces};
      OracleComponents r = oracle_components(g, params, parse_rational_arg(delta_text, "delta"));
      if (r.warning) out << "warning: " << *r.warning << "\n";
      out << "sets: " << r.sets.size() << "\n";
      out << "components: " << r.count << "\n";
      out << "expected: " << component_count_formula(g, n) << "\n";
      out << "refines-by-direction: " << (r.refines_by_direction ? "true" : "false") << "\n";
      for (std::size_t i = 0; i < r.count; ++i) {
        out << "component " << i << ": phi=" << r.directions[i].str() << " rep "
            << format_set(g, r.representatives[i]) << "\n";
      }
      return 0;
    }

    ClosedSubset a = parse_set(a_lit, g);
    if (*dist) {
      ClosedSubset b = parse_set(b_lit, g);
      out << (directed ? directed_hausdorff(g, a, b) : hausdorff(g, a, b)) << "\n";
      return 0;
    }
    if (*classify) {
      ClosedSubset b = parse_set(b_lit, g);
      ComponentVerdict v = same_component_hausdorff(g, a, b, n);
      out << "same-component: " << (v.same ? "true" : "false") << "\n";
      out << "phi-a: " << v.phi_a.str() << "\n";
      out << "phi-b: " << v.phi_b.str() << "\n";
      if (v.witness_ray) out << "witness-ray: " << *v.witness_ray << "\n";
      if (v.path) {
        describe_path(*v.path, out);
        if (!emit_file.empty()) emit_path(*v.path, emit_file, samples);
      }
      return 0;
    }
    if (*path) {
      HyperPath p = vietoris_flag ? vietoris_path(g, a, n) : path_to_canonical(g, a, n);
      out << "phi: " << direction_set(g, a).str() << "\n";
      describe_path(p, out);
      if (!emit_file.empty()) emit_path(p, emit_file, samples);
      return 0;
    }
    if (*viet) {
      std::vector<OpenRegion> regions;
      for (const auto& spec : open_specs) regions.push_back(parse_open_region(spec, g));
      for (std::size_t i = 0; i < regions.size(); ++i) {
        out << "open " << i << ": " << regions[i].str() << "\n";
        out << "upper " << i << ": " << (member_upper(a, regions[i]) ? "true" : "false") << "\n";
        out << "lower " << i << ": " << (member_lower(a, regions[i]) ? "true" : "false") << "\n";
      }
      out << "basic: " << (member_basic(a, regions) ? "true" : "false") << "\n";
      if (!t0_text.empty()) {
        std::size_t bound = viet_n->count() ? n : component_count(g, a);
        HyperPath p = vietoris_path(g, a, bound);
        WitnessResult w = continuity_witness(p, parse_rational_arg(t0_text, "t0"), regions,
                                             parse_rational_arg(res_text, "resolution"));
        if (w.delta) {
          out << "delta: " << *w.delta << "\n";
        } else {
          out << "witness: failure " << w.failure;
          if (w.failing_t) out << " at t=" << *w.failing_t;
          out << "\n";
        }
      }
      return 0;
    }
  } catch (const ParseError& e) {
    return error_record("parse", e.what(), 2);
  } catch (const ResourceCapError& e) {
    return error_record("resource", e.what(), 4);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kUsage: return error_record("usage", e.what(), 1);
      case ErrorKind::kParse: return error_record("parse", e.what(), 2);
      case ErrorKind::kResourceCap: return error_record("resource", e.what(), 4);
      case ErrorKind::kPrecondition: break;
    }
    return error_record("precondition", e.what(), 3);
  }
  return error_record("usage", "no subcommand", 1);
}

}  // namespace hyperspace::cli
