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

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperspace/error.hpp"
#include "hyperspace/graph.hpp"

namespace hyperspace {

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;

  std::string where() const { return std::to_string(line) + ":" + std::to_string(column); }
};

/// Splits `text` into statements on newlines and ';', dropping '#'
/// comments. Each statement is a list of whitespace-separated tokens.
inline std::vector<std::vector<Token>> split_statements(std::string_view text) {
  std::vector<std::vector<Token>> statements(1);
  std::size_t line = 1, column = 1;
  std::string current;
  std::size_t start_col = 0;
  bool in_comment = false;
  auto flush = [&] {
    if (!current.empty()) {
      statements.back().push_back({current, line, start_col});
      current.clear();
    }
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      in_comment = false;
      statements.emplace_back();
      ++line;
      column = 1;
      continue;
    }
    if (!in_comment) {
      if (c == '#') {
        flush();
        in_comment = true;
      } else if (c == ';') {
        flush();
        statements.emplace_back();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        if (current.empty()) start_col = column;
        current.push_back(c);
      }
    }
    ++column;
  }
  flush();
  std::erase_if(statements, [](const auto& s) { return s.empty(); });
  return statements;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.') {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Parses the line-oriented graph description:
///
///   vertex <id>...          (a statement of bare ids also declares vertices)
///   edge <id> <v1> <v2> [length <p>/<q>]
///   ray <id> [at] <v>
///
/// Statements end at a newline or ';'. '#' starts a comment.
inline RayGraph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<RaySpec> rays;
  std::vector<ElementOrder> order;

  auto expect_id = [](const detail::Token& t) {
    if (!detail::is_identifier(t.text)) {
      throw ParseError("expected identifier, got '" + t.text + "'", t.where());
    }
    return t.text;
  };

  for (const auto& stmt : detail::split_statements(text)) {
    const detail::Token& head = stmt.front();
    if (head.text == "vertex") {
      if (stmt.size() < 2) throw ParseError("vertex statement needs an id", head.where());
      for (std::size_t i = 1; i < stmt.size(); ++i) vertices.push_back(expect_id(stmt[i]));
    } else if (head.text == "edge") {
      if (stmt.size() != 4 && stmt.size() != 6) {
        throw ParseError("expected 'edge <id> <v1> <v2> [length <p>/<q>]'", head.where());
      }
      EdgeSpec e{expect_id(stmt[1]), expect_id(stmt[2]), expect_id(stmt[3]), Rational(1)};
      if (stmt.size() == 6) {
        if (stmt[4].text != "length") {
          throw ParseError("expected 'length', got '" + stmt[4].text + "'", stmt[4].where());
        }
        auto len = Rational::parse(stmt[5].text);
        if (!len) throw ParseError("malformed length '" + stmt[5].text + "'", stmt[5].where());
        e.length = *len;
      }
      order.push_back({false, edges.size()});
      edges.push_back(std::move(e));
    } else if (head.text == "ray") {
      bool with_at = stmt.size() == 4 && stmt[2].text == "at";
      if (stmt.size() != 3 && !with_at) {
        throw ParseError("expected 'ray <id> [at] <v>'", head.where());
      }
      order.push_back({true, rays.size()});
      rays.push_back({expect_id(stmt[1]), expect_id(stmt[with_at ? 3 : 2])});
    } else {
      for (const auto& t : stmt) vertices.push_back(expect_id(t));
    }
  }
  return RayGraph::build(std::move(vertices), std::move(edges), std::move(rays), std::move(order));
}

/// Inverse of parse_graph, one statement per line.
inline std::string format_graph(const RayGraph& g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "vertex " << g.vertex_id(v) << "\n";
  for (const Element& el : g.elements()) {
    if (el.is_ray()) {
      out << "ray " << el.id << " " << g.vertex_id(el.tail) << "\n";
    } else {
      out << "edge " << el.id << " " << g.vertex_id(el.tail) << " " << g.vertex_id(el.head);
      if (el.length != Rational(1)) out << " length " << el.length;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace hyperspace
