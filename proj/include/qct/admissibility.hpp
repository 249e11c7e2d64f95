#pragma once

// n-pre-admissibility, flow paths and their q-values, n-admissibility, the
// admissible degree, the nZ criterion, divisor lattices and a generator of
// admissible quivers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qct/errors.hpp"
#include "qct/quiver.hpp"

namespace qct {

struct Violation {
  std::string rule;                // "deg", "multi", "sum3" or "flow"
  std::vector<std::string> where;  // offending vertices or arrows, by name
};

struct AdmissibilityReport {
  bool verdict = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    violations.push_back(std::move(v));
    verdict = false;
  }
};

/// Neighbours of the endpoints. Fields follow the extended flow-path diagram:
/// minus_1 is the other successor of v_1, minus_2/minus_3 its predecessors;
/// plus_1 is the other predecessor of v_k, plus_2/plus_3 its successors.
struct EndpointContext {
  std::optional<VertexId> minus_1, minus_2, minus_3;
  std::optional<VertexId> plus_1, plus_2, plus_3;
};

struct FlowPath {
  std::vector<VertexId> vertices;  // v_1 ... v_k; closed paths repeat v_1 at the end
  std::vector<ArrowId> arrows;     // the k-1 arrows joining them
  EndpointContext context;

  std::size_t length() const { return vertices.size(); }
  VertexId first() const { return vertices.front(); }
  VertexId last() const { return vertices.back(); }
  /// v_s with 1-based s.
  VertexId at(std::size_t s) const { return vertices.at(s - 1); }

  friend bool operator==(const FlowPath& a, const FlowPath& b) { return a.arrows == b.arrows && a.vertices == b.vertices; }
};

struct QValues {
  int q1 = 0;
  int qk = 0;
  int q = -1;
  long k_plus_q = 0;

  bool divisible_by(long n) const { return n > 0 && k_plus_q % n == 0; }
  /// p = (k+q)/n; only meaningful when divisible_by(n).
  long p_for(long n) const { return k_plus_q / n; }
};

inline std::string path_to_string(const Quiver& q, const FlowPath& fp) {
  std::string s;
  for (std::size_t i = 0; i < fp.vertices.size(); ++i) {
    if (i) s += "->";
    s += q.name(fp.vertices[i]);
  }
  return s;
}

inline void require_n(long n, long min = 2) {
  if (n < min) throw PreconditionError("n must be at least " + std::to_string(min) + ", got " + std::to_string(n));
}

inline bool allowed_degree(Degree d, long n) {
  static const Degree base[] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}};
  for (Degree b : base)
    if (d == b) return true;
  return n == 2 && d == Degree{2, 2};
}

inline AdmissibilityReport is_n_pre_admissible(const Quiver& q, long n) {
  require_n(n);
  require_connected(q);
  AdmissibilityReport report;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    Degree d = q.degree(v);
    if (!allowed_degree(d, n))
      report.add({"deg", {q.name(v), "(" + std::to_string(d.incoming) + "," + std::to_string(d.outgoing) + ")"}});
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (ArrowId a : q.arrows_by_id()) {
    const auto& arr = q.arrow(a);
    if (!seen.insert({arr.source, arr.target}).second) {
      std::vector<std::string> where{q.name(arr.source), q.name(arr.target)};
      for (ArrowId b : q.out_arrows(arr.source))
        if (q.arrow(b).target == arr.target) where.push_back(q.arrow(b).name);
      bool already = std::any_of(report.violations.begin(), report.violations.end(), [&](const Violation& x) {
        return x.rule == "multi" && x.where[0] == where[0] && x.where[1] == where[1];
      });
      if (!already) report.add({"multi", std::move(where)});
    }
  }
  for (ArrowId a : q.arrows_by_id()) {
    const auto& arr = q.arrow(a);
    if (q.degree(arr.source).outgoing + q.degree(arr.target).incoming > 3)
      report.add({"sum3", {arr.name, q.name(arr.source), q.name(arr.target)}});
  }
  return report;
}

namespace detail {

inline EndpointContext endpoint_context(const Quiver& q, const FlowPath& fp) {
  EndpointContext c;
  ArrowId first_arrow = fp.arrows.front(), last_arrow = fp.arrows.back();
  for (ArrowId a : q.out_arrows(fp.first()))
    if (a != first_arrow) c.minus_1 = q.arrow(a).target;
  std::vector<VertexId> preds;
  for (ArrowId a : q.in_arrows(fp.first())) preds.push_back(q.arrow(a).source);
  if (!preds.empty()) c.minus_2 = preds[0];
  if (preds.size() > 1) c.minus_3 = preds[1];
  for (ArrowId a : q.in_arrows(fp.last()))
    if (a != last_arrow) c.plus_1 = q.arrow(a).source;
  std::vector<VertexId> succs;
  for (ArrowId a : q.out_arrows(fp.last())) succs.push_back(q.arrow(a).target);
  if (!succs.empty()) c.plus_2 = succs[0];
  if (succs.size() > 1) c.plus_3 = succs[1];
  return c;
}

inline std::vector<FlowPath> walk_flow_paths(const Quiver& q) {
  const Degree middle{1, 1};
  std::vector<FlowPath> paths;
  for (VertexId start = 0; start < q.vertex_count(); ++start) {
    if (q.degree(start) == middle) continue;
    for (ArrowId a : q.out_arrows(start)) {
      FlowPath fp;
      fp.vertices.push_back(start);
      ArrowId cur = a;
      for (std::size_t steps = 0;; ++steps) {
        if (steps > q.arrow_count()) throw PreconditionError("flow path does not terminate");
        fp.arrows.push_back(cur);
        VertexId next = q.arrow(cur).target;
        fp.vertices.push_back(next);
        if (q.degree(next) != middle) break;
        cur = q.out_arrows(next).front();
      }
      fp.context = endpoint_context(q, fp);
      paths.push_back(std::move(fp));
    }
  }
  std::sort(paths.begin(), paths.end(), [&](const FlowPath& x, const FlowPath& y) {
    if (x.first() != y.first()) return x.first() < y.first();
    return std::lexicographical_compare(x.arrows.begin(), x.arrows.end(), y.arrows.begin(), y.arrows.end(),
                                        [&](ArrowId s, ArrowId t) { return natural_less(q.arrow(s).name, q.arrow(t).name); });
  });
  return paths;
}

inline std::string describe(const Quiver& q, const AdmissibilityReport& r) {
  std::string s;
  for (const auto& v : r.violations) {
    s += (s.empty() ? "" : "; ") + v.rule + ":";
    for (const auto& w : v.where) s += " " + w;
  }
  (void)q;
  return s;
}

}  // namespace detail

/// All flow paths, sorted by first vertex and then by arrow ids.
inline std::vector<FlowPath> enumerate_flow_paths(const Quiver& q) {
  auto pre = is_n_pre_admissible(q, 2);
  if (!pre.verdict) throw PreconditionError("quiver is not 2-pre-admissible: " + detail::describe(q, pre));
  return detail::walk_flow_paths(q);
}

inline QValues q_values(const FlowPath& fp, const Quiver& q) {
  QValues v;
  v.q1 = q.degree(fp.first()) == Degree{2, 1} ? 1 : 0;
  v.qk = q.degree(fp.last()) == Degree{1, 2} ? 1 : 0;
  v.q = -1 + v.q1 + v.qk;
  v.k_plus_q = static_cast<long>(fp.length()) + v.q;
  return v;
}

inline AdmissibilityReport is_n_admissible(const Quiver& q, long n) {
  AdmissibilityReport report = is_n_pre_admissible(q, n);
  Shape shape = classify_shape(q);
  if (shape.is_cycle()) {
    if (static_cast<long>(shape.m) % n != 0) {
      Violation v{"flow", {}};
      for (const auto& name : q.vertices()) v.where.push_back(name);
      report.add(std::move(v));
    }
    return report;
  }
  if (!is_n_pre_admissible(q, 2).verdict) return report;
  for (const auto& fp : detail::walk_flow_paths(q)) {
    QValues qv = q_values(fp, q);
    if (!qv.divisible_by(n)) {
      Violation v{"flow", {}};
      for (VertexId x : fp.vertices) v.where.push_back(q.name(x));
      report.add(std::move(v));
    }
  }
  return report;
}

/// Largest n >= 2 for which q is n-admissible, or 1 when there is none.
inline long admissible_degree(const Quiver& q) {
  Shape shape = classify_shape(q);
  if (shape.is_a1()) return 1;
  if (shape.is_cycle()) return shape.m >= 2 ? static_cast<long>(shape.m) : 1;
  if (!is_n_pre_admissible(q, 2).verdict) return 1;
  long g = 0;
  for (const auto& fp : detail::walk_flow_paths(q)) g = std::gcd(g, q_values(fp, q).k_plus_q);
  bool has_22 = false;
  for (VertexId v = 0; v < q.vertex_count(); ++v) has_22 = has_22 || q.degree(v) == Degree{2, 2};
  if (has_22) return g % 2 == 0 ? 2 : 1;
  return g >= 2 ? g : 1;
}

inline bool admits_nZ(const Quiver& q, long n) {
  require_n(n);
  Shape shape = classify_shape(q);
  long m = static_cast<long>(shape.m);
  if (shape.is_linear()) return (m - 1) % n == 0;
  if (shape.is_cycle()) return m % n == 0;
  return false;
}

// ---------------------------------------------------------------------------

struct DivisorLattice {
  long N = 1;
  std::vector<long> divisors;
  std::vector<std::pair<long, long>> covers;  // (d, d') with d'/d prime

  static long meet(long a, long b) { return std::gcd(a, b); }
  static long join(long a, long b) { return std::lcm(a, b); }
};

inline DivisorLattice divisor_lattice(long N) {
  if (N < 1) throw PreconditionError("divisor lattice needs N >= 1");
  DivisorLattice lat;
  lat.N = N;
  for (long d = 1; d <= N; ++d)
    if (N % d == 0) lat.divisors.push_back(d);
  auto prime = [](long x) {
    if (x < 2) return false;
    for (long d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return true;
  };
  for (long a : lat.divisors)
    for (long b : lat.divisors)
      if (b % a == 0 && prime(b / a)) lat.covers.emplace_back(a, b);
  return lat;
}

// ---------------------------------------------------------------------------

class GeneratorError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Subdivides flow paths of an n-pre-admissible skeleton until every k+q is a
/// multiple of n. A nonzero seed may add one extra period of n per path.
inline Quiver generate_admissible(long n, const Quiver& skeleton, std::uint64_t seed) {
  require_n(n);
  if (classify_shape(skeleton).is_cycle())
    throw GeneratorError("skeleton is an oriented cycle; use a cycle of length divisible by n instead");
  auto pre = is_n_pre_admissible(skeleton, n);
  if (!pre.verdict)
    throw GeneratorError("skeleton is not " + std::to_string(n) + "-pre-admissible: " + detail::describe(skeleton, pre));

  std::mt19937_64 rng(seed);
  std::set<std::string> names(skeleton.vertices().begin(), skeleton.vertices().end());
  std::set<std::string> ids;
  for (const auto& a : skeleton.arrows()) ids.insert(a.name);
  std::size_t vcount = 0, acount = 0;
  auto fresh_vertex = [&] {
    std::string s;
    do s = "_pad" + std::to_string(vcount++);
    while (names.count(s));
    names.insert(s);
    return s;
  };
  auto fresh_arrow = [&] {
    std::string s;
    do s = "_e" + std::to_string(acount++);
    while (ids.count(s));
    ids.insert(s);
    return s;
  };

  std::vector<std::string> vertices = skeleton.vertices();
  std::vector<Arrow> arrows = skeleton.arrows();
  for (const auto& fp : detail::walk_flow_paths(skeleton)) {
    long kq = q_values(fp, skeleton).k_plus_q;
    long target = (kq + n - 1) / n * n;
    if (seed != 0 && (rng() & 1u)) target += n;
    long extra = target - kq;
    if (extra == 0) continue;
    ArrowId first = fp.arrows.front();
    VertexId end = arrows[first].target;
    VertexId prev = arrows[first].source;
    for (long i = 0; i < extra; ++i) {
      VertexId v = vertices.size();
      vertices.push_back(fresh_vertex());
      if (i == 0) {
        arrows[first].target = v;
      } else {
        arrows.push_back({fresh_arrow(), prev, v});
      }
      prev = v;
    }
    arrows.push_back({fresh_arrow(), prev, end});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

}  // namespace qct
