#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qct/qct.hpp"

#ifndef QCT_SOURCE_DIR
#define QCT_SOURCE_DIR "."
#endif

namespace qct::testing {

inline std::string read_text(const std::string& relative) {
  std::ifstream in(std::string(QCT_SOURCE_DIR) + "/" + relative, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Quiver load(const std::string& name) { return parse_quiver(read_text("quivers/" + name)); }

inline Quiver two_admissible() { return load("two_admissible.q"); }
inline Quiver three_admissible() { return load("three_admissible.q"); }
inline Quiver lattice23() { return load("lattice23.q"); }

inline StringModule mod(const Quiver& q, const std::string& text) {
  auto m = find_module(q, text);
  if (!m) throw PreconditionError("test fixture: no module '" + text + "'");
  return *m;
}

inline std::set<std::string> names_of(const Quiver& q, const ModuleList& l) {
  std::set<std::string> s;
  for (const auto& m : l) s.insert(module_name(q, m));
  return s;
}

inline std::set<std::string> name_set(const Quiver& q, const std::vector<std::string>& names) {
  std::set<std::string> s;
  for (const auto& x : names) s.insert(module_name(q, mod(q, x)));
  return s;
}

/// Flow paths straight from the definition: every path whose interior vertices
/// have degree (1,1) and whose endpoints do not, found by extending all paths
/// arrow by arrow up to length |Q_1|. Returned as vertex-name sequences.
inline std::set<std::vector<std::string>> brute_flow_paths(const Quiver& q) {
  std::set<std::vector<std::string>> out;
  const Degree mid{1, 1};
  std::vector<std::vector<ArrowId>> frontier;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) frontier.push_back({a});
  for (std::size_t len = 1; len <= q.arrow_count() && !frontier.empty(); ++len) {
    std::vector<std::vector<ArrowId>> next;
    for (const auto& p : frontier) {
      VertexId first = q.arrow(p.front()).source, last = q.arrow(p.back()).target;
      bool interior_ok = true;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) interior_ok = interior_ok && q.degree(q.arrow(p[i]).target) == mid;
      if (!interior_ok) continue;
      if (q.degree(first) != mid && q.degree(last) != mid) {
        std::vector<std::string> names{q.name(first)};
        for (ArrowId a : p) names.push_back(q.name(q.arrow(a).target));
        out.insert(names);
      }
      for (ArrowId b : q.out_arrows(last)) {
        auto e = p;
        e.push_back(b);
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// Number of strings of length at most 2 up to inversion, counted directly
/// from walks on the underlying graph.
inline std::size_t brute_indecomposable_count(const Quiver& q) {
  std::set<std::vector<std::pair<ArrowId, bool>>> words;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) words.insert({{a, false}});
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    for (ArrowId b = 0; b < q.arrow_count(); ++b) {
      if (a == b) continue;
      // a followed by b^{-1}: both arrows end at the same vertex.
      if (q.arrow(a).target == q.arrow(b).target) {
        std::vector<std::pair<ArrowId, bool>> w{{a, false}, {b, true}}, inv{{b, false}, {a, true}};
        words.insert(std::min(w, inv));
      }
      // a^{-1} followed by b: both arrows start at the same vertex.
      if (q.arrow(a).source == q.arrow(b).source) {
        std::vector<std::pair<ArrowId, bool>> w{{a, true}, {b, false}}, inv{{b, true}, {a, false}};
        words.insert(std::min(w, inv));
      }
    }
  return q.vertex_count() + words.size();
}

inline std::vector<long> brute_divisors(long n) {
  std::vector<long> d;
  for (long k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

/// Skeletons used for fuzzing the generator.
inline std::vector<Quiver> skeletons() {
  return {
      load("loop_tail.q"),
      linear_quiver(2),
      linear_quiver(4),
      make_quiver({{"1", "2"}, {"2", "3"}, {"2", "4"}}),
      make_quiver({{"1", "3"}, {"2", "3"}, {"3", "4"}}),
      make_quiver({{"1", "2"}, {"2", "3"}, {"3", "1"}, {"3", "4"}}),
      make_quiver({{"5", "1"}, {"1", "2"}, {"1", "3"}, {"3", "6"}, {"4", "6"}, {"6", "7"}}),
      make_quiver({{"1", "1"}, {"1", "2"}, {"2", "3"}, {"3", "3"}}),
  };
}

/// Twenty generated admissible quivers: seeds 0-19, n cycling through 2..5.
struct Generated {
  Quiver q;
  long n;
  std::uint64_t seed;
};

inline std::vector<Generated> generated_corpus() {
  std::vector<Generated> out;
  auto sk = skeletons();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    long n = 2 + static_cast<long>(seed % 4);
    const Quiver& s = sk[seed % sk.size()];
    out.push_back({generate_admissible(n, s, seed), n, seed});
  }
  return out;
}

}  // namespace qct::testing
