#pragma once

// Finite quivers: construction, the text file format, degrees, connectivity
// and recognition of the oriented path A_m and the oriented cycle Ã_m.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qct/errors.hpp"

namespace qct {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
};

struct Degree {
  std::size_t incoming = 0;
  std::size_t outgoing = 0;

  friend auto operator<=>(const Degree&, const Degree&) = default;
};

/// Orders strings so that embedded digit runs compare numerically ("a2" < "a10").
inline bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      auto da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
      while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
      while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

class Quiver {
 public:
  Quiver() = default;

  /// Builds a quiver from vertex names and (id, source, target) triples.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (VertexId v = 0; v < vertices_.size(); ++v) {
      if (vertices_[v].empty()) throw InvalidQuiver("empty vertex name");
      if (!index_.emplace(vertices_[v], v).second)
        throw InvalidQuiver("duplicate vertex '" + vertices_[v] + "'");
    }
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    std::set<std::string> ids;
    for (ArrowId a = 0; a < arrows_.size(); ++a) {
      const auto& arr = arrows_[a];
      if (arr.source >= vertices_.size() || arr.target >= vertices_.size())
        throw InvalidQuiver("arrow '" + arr.name + "' references an undeclared vertex");
      if (!ids.insert(arr.name).second) throw InvalidQuiver("duplicate arrow id '" + arr.name + "'");
      out_[arr.source].push_back(a);
      in_[arr.target].push_back(a);
    }
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::string& name(VertexId v) const { return vertices_.at(v); }

  /// Arrows leaving / entering a vertex, in arrow order.
  const std::vector<ArrowId>& out_arrows(VertexId v) const { return out_.at(v); }
  const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_.at(v); }

  std::optional<VertexId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId vertex(std::string_view name) const {
    auto v = find(name);
    if (!v) throw UnknownVertex(std::string(name));
    return *v;
  }

  std::optional<ArrowId> find_arrow(std::string_view id) const {
    for (ArrowId a = 0; a < arrows_.size(); ++a)
      if (arrows_[a].name == id) return a;
    return std::nullopt;
  }

  Degree degree(VertexId v) const { return {in_.at(v).size(), out_.at(v).size()}; }

  /// The same vertices with every arrow reversed; arrow indices are kept.
  Quiver opposite() const {
    std::vector<Arrow> rev;
    rev.reserve(arrows_.size());
    for (const auto& a : arrows_) rev.push_back({a.name, a.target, a.source});
    return Quiver(vertices_, std::move(rev));
  }

  /// Arrow indices sorted by natural order of their ids.
  std::vector<ArrowId> arrows_by_id() const {
    std::vector<ArrowId> order(arrows_.size());
    std::iota(order.begin(), order.end(), ArrowId{0});
    std::sort(order.begin(), order.end(), [&](ArrowId x, ArrowId y) {
      return natural_less(arrows_[x].name, arrows_[y].name);
    });
    return order;
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
    for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
      const auto &x = a.arrows_[i], &y = b.arrows_[i];
      if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
};

/// Convenience builder used by tests and generators: arrows given as
/// (source name, target name), ids auto-assigned a0, a1, ...
inline Quiver make_quiver(const std::vector<std::pair<std::string, std::string>>& edges,
                          const std::vector<std::string>& extra_vertices = {}) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> idx;
  auto intern = [&](const std::string& n) {
    auto [it, fresh] = idx.emplace(n, names.size());
    if (fresh) names.push_back(n);
    return it->second;
  };
  for (const auto& v : extra_vertices) intern(v);
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    VertexId s = intern(edges[i].first);
    VertexId t = intern(edges[i].second);
    arrows.push_back({"a" + std::to_string(i), s, t});
  }
  return Quiver(std::move(names), std::move(arrows));
}

/// Oriented path 1 -> 2 -> ... -> m.
inline Quiver linear_quiver(std::size_t m) {
  std::vector<std::pair<std::string, std::string>> e;
  for (std::size_t i = 1; i < m; ++i) e.emplace_back(std::to_string(i), std::to_string(i + 1));
  return make_quiver(e, m >= 1 ? std::vector<std::string>{"1"} : std::vector<std::string>{});
}

/// Oriented cycle 1 -> 2 -> ... -> m -> 1.
inline Quiver cycle_quiver(std::size_t m) {
  std::vector<std::pair<std::string, std::string>> e;
  for (std::size_t i = 1; i <= m; ++i) e.emplace_back(std::to_string(i), std::to_string(i % m + 1));
  return make_quiver(e);
}

// ---------------------------------------------------------------------------
// File format

namespace detail {

inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct LineScanner {
  std::string_view text;
  std::size_t line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, pos + 1, what); }

  std::string name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    if (start == pos) fail("expected a name");
    return std::string(text.substr(start, pos - start));
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (text.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
};

}  // namespace detail

/// Parses the quiver text format:
///   # comment
///   vertex NAME
///   NAME -> NAME
///   ID: NAME -> NAME
inline Quiver parse_quiver(std::string_view text) {
  struct RawArrow {
    std::optional<std::string> id;
    std::string source, target;
    std::size_t line, column;
  };
  std::vector<std::string> order;
  std::set<std::string> seen;
  std::set<std::string> declared;
  bool has_declarations = false;
  std::vector<RawArrow> raw;

  auto note = [&](const std::string& n) {
    if (seen.insert(n).second) order.push_back(n);
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    detail::LineScanner sc{line, line_no};
    if (sc.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    if (line[sc.pos] == '#') {
      if (end == text.size()) break;
      continue;
    }

    std::size_t first_col = sc.pos + 1;
    std::string first = sc.name();
    if (first == "vertex" && !sc.at_end() && detail::is_name_char(line[sc.pos])) {
      std::size_t col = sc.pos + 1;
      std::string v = sc.name();
      if (!sc.at_end()) sc.fail("unexpected trailing characters");
      if (!declared.insert(v).second) throw ParseError(line_no, col, "duplicate vertex '" + v + "'");
      has_declarations = true;
      note(v);
    } else {
      RawArrow ra;
      ra.line = line_no;
      ra.column = first_col;
      if (sc.accept(":")) {
        ra.id = first;
        ra.source = sc.name();
      } else {
        ra.source = first;
      }
      sc.expect("->");
      ra.target = sc.name();
      if (!sc.at_end()) sc.fail("unexpected trailing characters");
      note(ra.source);
      note(ra.target);
      raw.push_back(std::move(ra));
    }
    if (end == text.size()) break;
  }

  if (has_declarations) {
    for (const auto& ra : raw) {
      for (const auto* n : {&ra.source, &ra.target})
        if (!declared.count(*n))
          throw ParseError(ra.line, ra.column, "arrow references undeclared vertex '" + *n + "'");
    }
  }

  std::set<std::string> explicit_ids;
  for (const auto& ra : raw) {
    if (!ra.id) continue;
    if (!explicit_ids.insert(*ra.id).second)
      throw ParseError(ra.line, ra.column, "duplicate arrow id '" + *ra.id + "'");
  }

  std::unordered_map<std::string, VertexId> idx;
  for (VertexId v = 0; v < order.size(); ++v) idx[order[v]] = v;
  std::vector<Arrow> arrows;
  std::set<std::string> used = explicit_ids;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::string id;
    if (raw[i].id) {
      id = *raw[i].id;
    } else {
      std::size_t k = i;
      while (used.count("a" + std::to_string(k))) ++k;
      id = "a" + std::to_string(k);
      used.insert(id);
    }
    arrows.push_back({id, idx.at(raw[i].source), idx.at(raw[i].target)});
  }
  return Quiver(std::move(order), std::move(arrows));
}

/// Emits degree-0 vertices as `vertex` lines, then every arrow as
/// `ID: SOURCE -> TARGET` in natural id order.
inline std::string serialize_quiver(const Quiver& q) {
  std::ostringstream out;
  // An isolated vertex needs a declaration, and once one is declared the
  // parser wants them all.
  bool isolated = false;
  for (VertexId v = 0; v < q.vertex_count(); ++v) isolated = isolated || q.degree(v) == Degree{0, 0};
  if (isolated)
    for (VertexId v = 0; v < q.vertex_count(); ++v) out << "vertex " << q.name(v) << '\n';
  for (ArrowId a : q.arrows_by_id()) {
    const auto& arr = q.arrow(a);
    out << arr.name << ": " << q.name(arr.source) << " -> " << q.name(arr.target) << '\n';
  }
  return out.str();
}

inline Degree degree(const Quiver& q, std::string_view v) { return q.degree(q.vertex(v)); }

/// Connected components of the underlying undirected graph, each a list of
/// vertices in increasing order. Components are ordered by smallest vertex.
inline std::vector<std::vector<VertexId>> connected_components(const Quiver& q) {
  std::vector<std::size_t> comp(q.vertex_count(), static_cast<std::size_t>(-1));
  std::vector<std::vector<VertexId>> result;
  for (VertexId s = 0; s < q.vertex_count(); ++s) {
    if (comp[s] != static_cast<std::size_t>(-1)) continue;
    std::vector<VertexId> stack{s}, members;
    comp[s] = result.size();
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      auto visit = [&](VertexId w) {
        if (comp[w] == static_cast<std::size_t>(-1)) {
          comp[w] = result.size();
          stack.push_back(w);
        }
      };
      for (ArrowId a : q.out_arrows(v)) visit(q.arrow(a).target);
      for (ArrowId a : q.in_arrows(v)) visit(q.arrow(a).source);
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  return result;
}

inline bool is_connected(const Quiver& q) { return connected_components(q).size() <= 1; }

/// Full subquivers on each connected component, preserving names and ids.
inline std::vector<Quiver> split_components(const Quiver& q) {
  std::vector<Quiver> parts;
  for (const auto& members : connected_components(q)) {
    std::vector<std::string> names;
    std::map<VertexId, VertexId> local;
    for (VertexId v : members) {
      local[v] = names.size();
      names.push_back(q.name(v));
    }
    std::vector<Arrow> arrows;
    for (const auto& a : q.arrows())
      if (local.count(a.source)) arrows.push_back({a.name, local[a.source], local[a.target]});
    parts.emplace_back(std::move(names), std::move(arrows));
  }
  return parts;
}

inline void require_connected(const Quiver& q) {
  if (!is_connected(q)) throw DisconnectedQuiver();
}

struct Shape {
  enum class Kind { LinearA, CycleATilde, Other };
  Kind kind = Kind::Other;
  std::size_t m = 0;

  bool is_linear() const { return kind == Kind::LinearA; }
  bool is_cycle() const { return kind == Kind::CycleATilde; }
  bool is_a1() const { return kind == Kind::LinearA && m == 1; }

  std::string to_string() const {
    switch (kind) {
      case Kind::LinearA: return "A" + std::to_string(m);
      case Kind::CycleATilde: return "~A" + std::to_string(m);
      default: return "other";
    }
  }

  friend bool operator==(const Shape&, const Shape&) = default;
};

inline Shape classify_shape(const Quiver& q) {
  require_connected(q);
  const std::size_t m = q.vertex_count();
  if (m == 0) throw InvalidQuiver("empty quiver");
  std::size_t sources = 0, sinks = 0, middle = 0;
  for (VertexId v = 0; v < m; ++v) {
    Degree d = q.degree(v);
    if (d == Degree{0, 1}) ++sources;
    else if (d == Degree{1, 0}) ++sinks;
    else if (d == Degree{1, 1}) ++middle;
  }
  if (m == 1 && q.arrow_count() == 0) return {Shape::Kind::LinearA, 1};
  if (middle == m) return {Shape::Kind::CycleATilde, m};
  if (sources == 1 && sinks == 1 && middle + 2 == m) return {Shape::Kind::LinearA, m};
  return {Shape::Kind::Other, 0};
}

}  // namespace qct
