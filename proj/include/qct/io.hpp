#pragma once

// JSON and DOT renderings of reports, modules, lattices and AR quivers.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qct/admissibility.hpp"
#include "qct/modules.hpp"
#include "qct/oracle.hpp"
#include "qct/subcategories.hpp"

namespace qct {

using Json = nlohmann::ordered_json;

inline Json to_json(const AdmissibilityReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"rule", x.rule}, {"where", x.where}});
  return {{"verdict", r.verdict}, {"violations", v}};
}

inline Json to_json(const Quiver& q, const StringModule& m) {
  auto names = [&](const std::vector<VertexId>& vs) {
    Json a = Json::array();
    for (VertexId v : vs) a.push_back(q.name(v));
    return a;
  };
  Json dim = Json::object();
  auto d = m.dimension_vector(q.vertex_count());
  for (VertexId v = 0; v < d.size(); ++v)
    if (d[v]) dim[q.name(v)] = d[v];
  Json j = {{"name", module_name(q, m)}, {"word", word_ids(q, m)}, {"top", names(m.top())}, {"socle", names(m.socle())}, {"dim", dim}};
  if (m.is_simple()) j["vertex"] = q.name(m.vertex());
  return j;
}

inline Json to_json(const Quiver& q, const ModuleList& l) {
  Json a = Json::array();
  for (const auto& m : l) a.push_back(to_json(q, m));
  return a;
}

inline Json optional_name(const Quiver& q, const std::optional<VertexId>& v) {
  return v ? Json(q.name(*v)) : Json(nullptr);
}

inline Json to_json(const Quiver& q, const FlowPath& fp) {
  QValues qv = q_values(fp, q);
  Json verts = Json::array(), arrows = Json::array();
  for (VertexId v : fp.vertices) verts.push_back(q.name(v));
  for (ArrowId a : fp.arrows) arrows.push_back(q.arrow(a).name);
  const auto& c = fp.context;
  return {{"vertices", verts},
          {"arrows", arrows},
          {"k", fp.length()},
          {"q1", qv.q1},
          {"qk", qv.qk},
          {"q", qv.q},
          {"k_plus_q", qv.k_plus_q},
          {"context",
           {{"v-1", optional_name(q, c.minus_1)},
            {"v-2", optional_name(q, c.minus_2)},
            {"v-3", optional_name(q, c.minus_3)},
            {"v+1", optional_name(q, c.plus_1)},
            {"v+2", optional_name(q, c.plus_2)},
            {"v+3", optional_name(q, c.plus_3)}}},
          {"P", to_json(q, flow_projective(q, fp))},
          {"I", to_json(q, flow_injective(q, fp))}};
}

inline Json to_json(const DivisorLattice& l) {
  Json covers = Json::array();
  for (auto [a, b] : l.covers) covers.push_back({a, b});
  return {{"N", l.N}, {"divisors", l.divisors}, {"covers", covers}};
}

inline std::string to_dot(const DivisorLattice& l) {
  std::ostringstream out;
  out << "digraph divisors {\n  rankdir=BT;\n";
  for (long d : l.divisors) out << "  \"" << d << "\";\n";
  for (auto [a, b] : l.covers) out << "  \"" << a << "\" -> \"" << b << "\";\n";
  out << "}\n";
  return out.str();
}

inline Json to_json(const Quiver& q, const CTLattice& l) {
  Json subs = Json::array();
  for (const auto& [n, gens] : l.subcategories)
    subs.push_back({{"n", n}, {"size", gens.size()}, {"generators", to_json(q, gens)}});
  Json covers = Json::array();
  for (auto [a, b] : l.covers) covers.push_back({{"larger", a}, {"smaller", b}});
  return {{"N", l.N}, {"subcategories", subs}, {"covers", covers}};
}

/// Hasse diagram with C_n drawn below C_n' when C_n is the smaller one.
inline std::string to_dot(const CTLattice& l) {
  std::ostringstream out;
  out << "digraph ct_lattice {\n  rankdir=BT;\n";
  for (const auto& [n, gens] : l.subcategories)
    out << "  \"C" << n << "\" [label=\"C" << n << " (" << gens.size() << ")\"];\n";
  for (auto [a, b] : l.covers) out << "  \"C" << b << "\" -> \"C" << a << "\";\n";
  out << "}\n";
  return out.str();
}

inline Json to_json(const VerifyReport& r) {
  Json c = Json::array();
  for (const auto& x : r.counterexamples)
    c.push_back({{"module", x.module}, {"i", x.i}, {"direction", x.direction}, {"kind", x.kind}});
  return {{"pass", r.pass}, {"counterexamples", c}, {"functorial_finiteness", "implied"}};
}

inline Json to_json(const Quiver& q, const ARQuiver& ar) {
  Json nodes = Json::array(), arrows = Json::array(), tau = Json::array();
  for (const auto& m : ar.nodes) nodes.push_back(module_name(q, m));
  for (const auto& [a, b, k] : ar.arrows)
    arrows.push_back({{"from", module_name(q, ar.nodes[a])}, {"to", module_name(q, ar.nodes[b])}, {"multiplicity", k}});
  for (auto [x, t] : ar.tau) tau.push_back({{"module", module_name(q, ar.nodes[x])}, {"tau", module_name(q, ar.nodes[t])}});
  return {{"nodes", nodes}, {"arrows", arrows}, {"tau", tau}};
}

inline std::string to_dot(const Quiver& q, const ARQuiver& ar) {
  std::ostringstream out;
  out << "digraph ar_quiver {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < ar.nodes.size(); ++i) out << "  n" << i << " [label=\"" << module_name(q, ar.nodes[i]) << "\"];\n";
  for (const auto& [a, b, k] : ar.arrows)
    for (std::size_t r = 0; r < k; ++r) out << "  n" << a << " -> n" << b << ";\n";
  for (auto [x, t] : ar.tau) out << "  n" << x << " -> n" << t << " [style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

/// Reads a module list: each entry is a "top/socle" string or an object with
/// "word" (arrow ids, "-" marking inverse letters) or "vertex".
inline ModuleList parse_module_list(const Quiver& q, const Json& j) {
  if (!j.is_array()) throw PreconditionError("module list must be a JSON array");
  ModuleList out;
  for (const auto& e : j) {
    if (e.is_string()) {
      auto m = find_module(q, e.get<std::string>());
      if (!m) throw PreconditionError("no indecomposable matches '" + e.get<std::string>() + "'");
      out.push_back(*m);
    } else if (e.is_object() && e.contains("word") && !e["word"].empty()) {
      std::vector<Letter> word;
      for (const auto& w : e["word"]) {
        std::string s = w.get<std::string>();
        bool inv = !s.empty() && s[0] == '-';
        if (inv) s = s.substr(1);
        auto a = q.find_arrow(s);
        if (!a) throw PreconditionError("unknown arrow '" + s + "'");
        word.push_back({*a, inv});
      }
      out.push_back(StringModule::from_word(q, word));
    } else if (e.is_object() && e.contains("vertex")) {
      out.push_back(StringModule::simple(q.vertex(e["vertex"].get<std::string>())));
    } else {
      throw PreconditionError("unrecognized module entry: " + e.dump());
    }
  }
  return out;
}

}  // namespace qct
