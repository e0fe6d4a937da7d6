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
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperspace/error.hpp"
#include "hyperspace/union_find.hpp"

namespace hyperspace {

/// Cells that hyperspace models are built from. The first five are whole
/// base pieces; the last three only occur as containment-locus faces.
enum class Cell {
  kTri,       // solid triangle {0 ≤ a ≤ b ≤ 1}: C of an arc
  kDisc,      // disc: C of a circle
  kTriInf,    // infinite triangle {0 ≤ a ≤ b}: bounded arcs of a ray
  kRay,       // [0, inf): tails of a ray
  kPoint,
  kSegment,   // compact 1-cell, e.g. the left edge of kTri
  kHalfLine,  // the left edge of kTriInf
  kSubDisc,   // the locus inside kDisc of arcs through p
};

inline int cell_dimension(Cell c) {
  switch (c) {
    case Cell::kTri:
    case Cell::kDisc:
    case Cell::kTriInf:
    case Cell::kSubDisc:
      return 2;
    case Cell::kRay:
    case Cell::kSegment:
    case Cell::kHalfLine:
      return 1;
    case Cell::kPoint:
      return 0;
  }
  return 0;
}

inline bool cell_compact(Cell c) {
  return c != Cell::kTriInf && c != Cell::kRay && c != Cell::kHalfLine;
}

inline const char* cell_name(Cell c) {
  switch (c) {
    case Cell::kTri: return "TRI";
    case Cell::kDisc: return "DISC";
    case Cell::kTriInf: return "TRI_INF";
    case Cell::kRay: return "RAY";
    case Cell::kPoint: return "PT";
    case Cell::kSegment: return "SEG";
    case Cell::kHalfLine: return "HALFLINE";
    case Cell::kSubDisc: return "SUBDISC";
  }
  return "?";
}

/// Formal product of cells.
using CellProduct = std::vector<Cell>;

inline int product_dimension(const CellProduct& p) {
  int d = 0;
  for (Cell c : p) d += cell_dimension(c);
  return d;
}

inline bool product_compact(const CellProduct& p) {
  return std::all_of(p.begin(), p.end(), cell_compact);
}

inline std::string product_name(const CellProduct& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += " x ";
    s += cell_name(p[i]);
  }
  return s;
}

struct Piece {
  std::size_t id;
  CellProduct cell;
  /// Set when the whole piece was identified with a face of a larger one.
  std::optional<std::size_t> absorbed_into;
};

/// One component of the containment locus C_p: a face of one piece.
struct LocusComponent {
  std::size_t piece;
  CellProduct face;
  bool full = false;    // face is the entire piece
  bool marker = false;  // contains the element {p}
};

/// Identification of `face` (a face of `from`) with a slice of `to`.
struct Gluing {
  std::size_t from;
  CellProduct face;
  std::size_t to;
};

/// Symbolic cell-complex model of C(X) with its containment locus C_p(X).
class HModel {
 public:
  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<LocusComponent>& locus() const { return locus_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }
  std::size_t ray_count() const { return rays_; }
  const std::string& name() const { return name_; }

  const LocusComponent& marker() const {
    auto it = std::find_if(locus_.begin(), locus_.end(),
                           [](const LocusComponent& c) { return c.marker; });
    if (it == locus_.end()) throw PreconditionError("model '" + name_ + "' has no {p} marker");
    return *it;
  }

  static HModel interval() {
    HModel m;
    m.name_ = "interval";
    m.pieces_.push_back({0, {Cell::kTri}, std::nullopt});
    m.locus_.push_back({0, {Cell::kSegment}, false, true});
    return m;
  }

  static HModel circle() {
    HModel m;
    m.name_ = "circle";
    m.pieces_.push_back({0, {Cell::kDisc}, std::nullopt});
    m.locus_.push_back({0, {Cell::kSubDisc}, false, true});
    return m;
  }

  /// Bounded arcs form TRI_INF and tails form RAY; C_p has two components,
  /// the left edge of TRI_INF (holding {p} at its bottom) and the tail [0,inf).
  static HModel ray() {
    HModel m;
    m.name_ = "ray";
    m.rays_ = 1;
    m.pieces_.push_back({0, {Cell::kTriInf}, std::nullopt});
    m.pieces_.push_back({1, {Cell::kRay}, std::nullopt});
    m.locus_.push_back({0, {Cell::kHalfLine}, false, true});
    m.locus_.push_back({1, {Cell::kPoint}, false, false});
    return m;
  }

  friend HModel wedge(const HModel& m1, const HModel& m2);

 private:
  std::string name_;
  std::vector<Piece> pieces_;
  std::vector<LocusComponent> locus_;
  std::vector<Gluing> gluings_;
  std::size_t rays_ = 0;
};

enum class BaseKind { kInterval, kCircle, kRay };

inline HModel base_model(BaseKind kind) {
  switch (kind) {
    case BaseKind::kInterval: return HModel::interval();
    case BaseKind::kCircle: return HModel::circle();
    case BaseKind::kRay: return HModel::ray();
  }
  throw PreconditionError("unknown base model");
}

inline HModel base_model(std::string_view kind) {
  if (kind == "interval") return HModel::interval();
  if (kind == "circle") return HModel::circle();
  if (kind == "ray") return HModel::ray();
  throw PreconditionError("unknown base model '" + std::string(kind) + "'");
}

/// C(X1 ∨_p X2) = C(X1) ⊔ C_p(X1) × C_p(X2) ⊔ C(X2), glued along
/// C_p(X1) ~ C_p(X1) × {p} and C_p(X2) ~ {p} × C_p(X2).
inline HModel wedge(const HModel& m1, const HModel& m2) {
  const LocusComponent& mark1 = m1.marker();
  const LocusComponent& mark2 = m2.marker();

  HModel out;
  out.name_ = "(" + m1.name_ + " v " + m2.name_ + ")";
  out.rays_ = m1.rays_ + m2.rays_;
  const std::size_t off2 = m1.pieces_.size();
  for (const Piece& p : m1.pieces_) out.pieces_.push_back(p);
  for (Piece p : m2.pieces_) {
    p.id += off2;
    if (p.absorbed_into) *p.absorbed_into += off2;
    out.pieces_.push_back(p);
  }
  out.gluings_ = m1.gluings_;
  for (Gluing g : m2.gluings_) {
    g.from += off2;
    g.to += off2;
    out.gluings_.push_back(g);
  }

  // product[i][j] = piece id of (locus i of m1) × (locus j of m2).
  std::vector<std::vector<std::size_t>> product(m1.locus_.size(),
                                                std::vector<std::size_t>(m2.locus_.size()));
  for (std::size_t i = 0; i < m1.locus_.size(); ++i) {
    for (std::size_t j = 0; j < m2.locus_.size(); ++j) {
      CellProduct cell = m1.locus_[i].face;
      cell.insert(cell.end(), m2.locus_[j].face.begin(), m2.locus_[j].face.end());
      product[i][j] = out.pieces_.size();
      out.pieces_.push_back({out.pieces_.size(), cell, std::nullopt});
      out.locus_.push_back({product[i][j], cell, true,
                            &m1.locus_[i] == &mark1 && &m2.locus_[j] == &mark2});
    }
  }

  const std::size_t marker2 = static_cast<std::size_t>(&mark2 - m2.locus_.data());
  const std::size_t marker1 = static_cast<std::size_t>(&mark1 - m1.locus_.data());
  auto attach = [&](const LocusComponent& c, std::size_t offset, std::size_t target) {
    std::size_t from = c.piece + offset;
    out.gluings_.push_back({from, c.face, target});
    if (c.full) out.pieces_[from].absorbed_into = target;
  };
  for (std::size_t i = 0; i < m1.locus_.size(); ++i) attach(m1.locus_[i], 0, product[i][marker2]);
  for (std::size_t j = 0; j < m2.locus_.size(); ++j) attach(m2.locus_[j], off2, product[marker1][j]);
  return out;
}

/// Number of connected components: pieces joined by gluings.
inline std::size_t model_components(const HModel& m) {
  UnionFind uf(m.pieces().size());
  for (const Gluing& g : m.gluings()) uf.unite(g.from, g.to);
  for (const Piece& p : m.pieces()) {
    if (p.absorbed_into) uf.unite(p.id, *p.absorbed_into);
  }
  return uf.set_count();
}

struct ModelStats {
  int max_dimension = 0;
  std::multiset<int, std::greater<>> dimensions;
  std::vector<bool> compact;  // per surviving piece, same order as `cells`
  std::vector<CellProduct> cells;
  std::size_t components = 0;
};

/// Statistics over the pieces that survive gluing (absorbed pieces are
/// faces of their hosts and are not counted separately).
inline ModelStats model_stats(const HModel& m) {
  ModelStats s;
  for (const Piece& p : m.pieces()) {
    if (p.absorbed_into) continue;
    int d = product_dimension(p.cell);
    s.dimensions.insert(d);
    s.max_dimension = std::max(s.max_dimension, d);
    s.compact.push_back(product_compact(p.cell));
    s.cells.push_back(p.cell);
  }
  s.components = model_components(m);
  return s;
}

/// Parses `term (∨ term)*` with `term = interval | circle | ray | (expr)`;
/// the wedge is left-associative. The operator may be written as "∨", "v",
/// "V" or "vee".
inline HModel parse_wedge_expression(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto word = [&]() -> std::string_view {
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg, std::to_string(pos + 1));
  };
  // Consumes a wedge operator if one is next.
  auto op = [&]() -> bool {
    skip();
    if (text.substr(pos, 3) == "∨") {
      pos += 3;
      return true;
    }
    std::size_t save = pos;
    std::string_view w = word();
    if (w == "v" || w == "V" || w == "vee") return true;
    pos = save;
    return false;
  };
  std::function<HModel()> expr;
  auto term = [&]() -> HModel {
    skip();
    if (pos >= text.size()) fail("unexpected end of wedge expression");
    if (text[pos] == '(') {
      ++pos;
      HModel inner = expr();
      skip();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    std::string_view w = word();
    if (w == "interval" || w == "circle" || w == "ray") return base_model(w);
    fail("expected 'interval', 'circle', 'ray' or '('");
    return HModel::interval();
  };
  expr = [&]() -> HModel {
    HModel m = term();
    while (op()) m = wedge(m, term());
    return m;
  };
  HModel m = expr();
  skip();
  if (pos != text.size()) fail("trailing characters after wedge expression");
  return m;
}

/// Text report: one line per surviving piece, then gluings and totals.
inline std::string format_model(const HModel& m) {
  ModelStats s = model_stats(m);
  std::ostringstream out;
  out << "model: " << m.name() << "\n";
  out << "rays: " << m.ray_count() << "\n";
  for (const Piece& p : m.pieces()) {
    out << "piece " << p.id << ": " << product_name(p.cell) << " dim "
        << product_dimension(p.cell) << (product_compact(p.cell) ? " compact" : " noncompact");
    if (p.absorbed_into) out << " absorbed-into " << *p.absorbed_into;
    out << "\n";
  }
  for (const Gluing& g : m.gluings()) {
    out << "glue: piece " << g.from << " face " << product_name(g.face) << " -> piece " << g.to
        << "\n";
  }
  for (const LocusComponent& c : m.locus()) {
    out << "locus C_p: piece " << c.piece << " face " << product_name(c.face)
        << (c.marker ? " marker" : "") << "\n";
  }
  out << "dims:";
  for (int d : s.dimensions) out << ' ' << d;
  out << "\nmax-dim: " << s.max_dimension << "\ncomponents: " << s.components << "\n";
  return out.str();
}

}  // namespace hyperspace
