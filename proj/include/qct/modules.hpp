#pragma once

// Indecomposable modules over kQ/J^2 as strings of length at most two, and the
// closed formulas for syzygies, tau-inverse of simples, tau_n-inverse orbits
// along flow paths and the cluster tilting module M.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qct/admissibility.hpp"
#include "qct/errors.hpp"
#include "qct/quiver.hpp"

namespace qct {

struct Letter {
  ArrowId arrow;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// An indecomposable: the simple at `vertex` when `word` is empty, otherwise
/// the string module of `word`. Construct through the factory functions so
/// that words are always canonical.
class StringModule {
 public:
  StringModule() = default;

  static StringModule simple(VertexId v) {
    StringModule m;
    m.vertex_ = v;
    return m;
  }

  /// Builds the module of a walk, normalizing to canonical orientation.
  static StringModule from_word(const Quiver& q, std::vector<Letter> word) {
    if (word.empty()) throw PreconditionError("empty word needs a vertex; use StringModule::simple");
    if (word.size() > 2) throw PreconditionError("strings over kQ/J^2 have length at most 2");
    if (word.size() == 2) {
      if (word[0].inverse == word[1].inverse) throw PreconditionError("consecutive letters of equal direction vanish in J^2");
      if (word[0].arrow == word[1].arrow) throw PreconditionError("word is not reduced");
    }
    std::vector<Letter> inv;
    for (auto it = word.rbegin(); it != word.rend(); ++it) inv.push_back({it->arrow, !it->inverse});
    if (prefer(q, inv, word)) word = std::move(inv);
    StringModule m;
    m.word_ = std::move(word);
    m.walk_ = m.compute_walk(q);
    m.vertex_ = m.walk_.front();
    return m;
  }

  bool is_simple() const { return word_.empty(); }
  std::size_t length() const { return word_.size(); }
  const std::vector<Letter>& word() const { return word_; }

  /// Vertices visited by the walk; a simple visits its vertex once.
  std::vector<VertexId> walk() const { return is_simple() ? std::vector<VertexId>{vertex_} : walk_; }
  VertexId vertex() const { return vertex_; }

  std::vector<VertexId> top() const {
    if (is_simple()) return {vertex_};
    std::vector<VertexId> t;
    for (std::size_t i = 0; i < walk_.size(); ++i)
      if (!is_target(i)) t.push_back(walk_[i]);
    return t;
  }

  std::vector<VertexId> socle() const {
    if (is_simple()) return {vertex_};
    std::vector<VertexId> s;
    for (std::size_t i = 0; i < walk_.size(); ++i)
      if (!is_source(i)) s.push_back(walk_[i]);
    return s;
  }

  std::vector<std::size_t> dimension_vector(std::size_t vertex_count) const {
    std::vector<std::size_t> d(vertex_count, 0);
    for (VertexId v : walk()) ++d[v];
    return d;
  }

  std::size_t dimension() const { return length() + 1; }

  friend bool operator==(const StringModule& a, const StringModule& b) {
    return a.word_ == b.word_ && (a.word_.empty() ? a.vertex_ == b.vertex_ : true);
  }
  friend bool operator<(const StringModule& a, const StringModule& b) { return a.key() < b.key(); }

 private:
  std::tuple<std::size_t, VertexId, std::vector<Letter>> key() const {
    return {word_.size(), word_.empty() ? vertex_ : 0, word_};
  }

  static bool prefer(const Quiver& q, const std::vector<Letter>& a, const std::vector<Letter>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& x = q.arrow(a[i].arrow).name;
      const auto& y = q.arrow(b[i].arrow).name;
      if (x != y) return natural_less(x, y);
    }
    return !a.front().inverse && b.front().inverse;
  }

  std::vector<VertexId> compute_walk(const Quiver& q) const {
    const auto& first = q.arrow(word_[0].arrow);
    std::vector<VertexId> w{word_[0].inverse ? first.target : first.source};
    for (const auto& l : word_) {
      const auto& a = q.arrow(l.arrow);
      VertexId from = l.inverse ? a.target : a.source;
      if (from != w.back()) throw PreconditionError("word is not a walk in the quiver");
      w.push_back(l.inverse ? a.source : a.target);
    }
    return w;
  }

  // Walk position i receives an arrow from a neighbouring position.
  bool is_target(std::size_t i) const {
    return (i > 0 && !word_[i - 1].inverse) || (i < word_.size() && word_[i].inverse);
  }
  bool is_source(std::size_t i) const {
    return (i < word_.size() && !word_[i].inverse) || (i > 0 && word_[i - 1].inverse);
  }

  std::vector<Letter> word_;
  std::vector<VertexId> walk_;
  VertexId vertex_ = 0;
};

using SemisimpleModule = std::vector<VertexId>;  // sorted multiset of vertices

/// A finite direct sum of indecomposables.
class ModuleList {
 public:
  ModuleList() = default;
  explicit ModuleList(std::vector<StringModule> items) : items_(std::move(items)) {}

  void push_back(StringModule m) { items_.push_back(std::move(m)); }
  /// Appends unless an isomorphic summand is already present.
  bool add_unique(const StringModule& m) {
    if (contains(m)) return false;
    items_.push_back(m);
    return true;
  }

  bool contains(const StringModule& m) const { return std::find(items_.begin(), items_.end(), m) != items_.end(); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<StringModule>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const StringModule& operator[](std::size_t i) const { return items_[i]; }

  bool is_basic() const { return indecomposables().size() == items_.size(); }

  std::set<StringModule> indecomposables() const { return {items_.begin(), items_.end()}; }

  /// add(this) is contained in add(other).
  bool subset_of(const ModuleList& other) const {
    auto mine = indecomposables(), theirs = other.indecomposables();
    return std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end());
  }

  /// Equality of additive closures.
  friend bool operator==(const ModuleList& a, const ModuleList& b) { return a.indecomposables() == b.indecomposables(); }

 private:
  std::vector<StringModule> items_;
};

// ---------------------------------------------------------------------------
// Naming

inline std::string module_name(const Quiver& q, const StringModule& m) {
  if (m.is_simple()) return "S" + q.name(m.vertex());
  std::string s;
  auto join = [&](const std::vector<VertexId>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + q.name(vs[i]);
    return out;
  };
  return join(m.top()) + "/" + join(m.socle());
}

inline std::vector<std::string> word_ids(const Quiver& q, const StringModule& m) {
  std::vector<std::string> ids;
  for (const auto& l : m.word()) ids.push_back((l.inverse ? "-" : "") + q.arrow(l.arrow).name);
  return ids;
}

// ---------------------------------------------------------------------------
// Enumeration

inline void require_pre_admissible(const Quiver& q) {
  auto pre = is_n_pre_admissible(q, 2);
  if (!pre.verdict) throw PreconditionError("quiver is not 2-pre-admissible: " + detail::describe(q, pre));
}

inline StringModule simple(const Quiver& q, VertexId v) {
  if (v >= q.vertex_count()) throw UnknownVertex(std::to_string(v));
  return StringModule::simple(v);
}

inline StringModule projective(const Quiver& q, VertexId v) {
  const auto& out = q.out_arrows(v);
  if (out.empty()) return StringModule::simple(v);
  if (out.size() == 1) return StringModule::from_word(q, {{out[0], false}});
  if (out.size() == 2) return StringModule::from_word(q, {{out[0], true}, {out[1], false}});
  throw PreconditionError("P(" + q.name(v) + ") is not a string of length at most 2");
}

inline StringModule injective(const Quiver& q, VertexId v) {
  const auto& in = q.in_arrows(v);
  if (in.empty()) return StringModule::simple(v);
  if (in.size() == 1) return StringModule::from_word(q, {{in[0], false}});
  if (in.size() == 2) return StringModule::from_word(q, {{in[0], false}, {in[1], true}});
  throw PreconditionError("I(" + q.name(v) + ") is not a string of length at most 2");
}

inline bool is_projective(const Quiver& q, const StringModule& m) {
  auto t = m.top();
  return t.size() == 1 && projective(q, t[0]) == m;
}

inline bool is_injective(const Quiver& q, const StringModule& m) {
  auto s = m.socle();
  return s.size() == 1 && injective(q, s[0]) == m;
}

/// Simples, then arrows, then length-two strings, each group in canonical order.
inline std::vector<StringModule> enumerate_indecomposables(const Quiver& q) {
  require_pre_admissible(q);
  std::vector<StringModule> mods;
  for (VertexId v = 0; v < q.vertex_count(); ++v) mods.push_back(StringModule::simple(v));
  for (ArrowId a : q.arrows_by_id()) mods.push_back(StringModule::from_word(q, {{a, false}}));
  std::set<StringModule> longer;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (q.out_arrows(v).size() == 2) longer.insert(projective(q, v));
    if (q.in_arrows(v).size() == 2) longer.insert(injective(q, v));
  }
  std::vector<StringModule> rest(longer.begin(), longer.end());
  std::sort(rest.begin(), rest.end(), [&](const StringModule& x, const StringModule& y) {
    auto a = word_ids(q, x), b = word_ids(q, y);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const std::string& s, const std::string& t) { return natural_less(s, t); });
  });
  mods.insert(mods.end(), rest.begin(), rest.end());
  return mods;
}

/// Finds an indecomposable from its top and socle, written "T1 T2/S1 S2";
/// a bare vertex name or "S<v>" denotes the simple.
inline std::optional<StringModule> find_module(const Quiver& q, const std::string& text) {
  auto words = [](const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto w = words(text);
    if (w.size() != 1) return std::nullopt;
    std::string name = w[0];
    if (!q.find(name) && name.size() > 1 && name[0] == 'S') name = name.substr(1);
    auto v = q.find(name);
    if (!v) return std::nullopt;
    return StringModule::simple(*v);
  }
  auto to_ids = [&](const std::vector<std::string>& names) -> std::optional<std::vector<VertexId>> {
    std::vector<VertexId> ids;
    for (const auto& n : names) {
      auto v = q.find(n);
      if (!v) return std::nullopt;
      ids.push_back(*v);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  auto top = to_ids(words(text.substr(0, slash)));
  auto soc = to_ids(words(text.substr(slash + 1)));
  if (!top || !soc) return std::nullopt;
  for (const auto& m : enumerate_indecomposables(q)) {
    if (m.is_simple()) continue;
    auto t = m.top(), s = m.socle();
    std::sort(t.begin(), t.end());
    std::sort(s.begin(), s.end());
    if (t == *top && s == *soc) return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Closed formulas

/// Omega(m): the radical of the projective cover minus m, as a vertex multiset.
inline SemisimpleModule syzygy(const Quiver& q, const StringModule& m) {
  std::vector<long> d(q.vertex_count(), 0);
  for (VertexId t : m.top())
    for (VertexId v : projective(q, t).walk()) ++d[v];
  for (VertexId v : m.walk()) --d[v];
  SemisimpleModule out;
  for (VertexId v = 0; v < d.size(); ++v) {
    if (d[v] < 0) throw PreconditionError("inconsistent projective cover");
    out.insert(out.end(), static_cast<std::size_t>(d[v]), v);
  }
  return out;
}

/// Omega^-(S(v)): the predecessors of v.
inline SemisimpleModule cosyzygy_simple(const Quiver& q, VertexId v) {
  SemisimpleModule out;
  for (ArrowId a : q.in_arrows(v)) out.push_back(q.arrow(a).source);
  std::sort(out.begin(), out.end());
  return out;
}

inline ModuleList tau_inverse_simple(const Quiver& q, VertexId v) {
  const auto& in = q.in_arrows(v);
  if (in.empty()) return {};
  if (in.size() == 2) return ModuleList({injective(q, v)});
  if (in.size() > 2) throw PreconditionError("vertex " + q.name(v) + " has in-degree above 2");
  ArrowId through = in[0];
  VertexId w = q.arrow(through).source;
  std::vector<ArrowId> others;
  for (ArrowId a : q.out_arrows(w))
    if (a != through) others.push_back(a);
  if (others.empty()) return ModuleList({StringModule::simple(w)});
  if (others.size() == 1) return ModuleList({StringModule::from_word(q, {{others[0], false}})});
  throw PreconditionError("cokernel of S(" + q.name(v) + ") in P(" + q.name(w) + ") is decomposable");
}

inline StringModule flow_projective(const Quiver& q, const FlowPath& fp) {
  if (q.in_arrows(fp.last()).size() == 1) return projective(q, fp.last());
  return projective(q, fp.context.plus_1.value());
}

inline StringModule flow_injective(const Quiver& q, const FlowPath& fp) {
  if (q.out_arrows(fp.first()).size() == 1) return injective(q, fp.first());
  return injective(q, fp.context.minus_1.value());
}

/// tau_n^{-j}(P(v)) for j = 0..p along a flow path.
inline std::vector<StringModule> tau_n_orbit(const Quiver& q, const FlowPath& fp, long n) {
  require_n(n);
  QValues qv = q_values(fp, q);
  if (!qv.divisible_by(n))
    throw PreconditionError("flow path " + path_to_string(q, fp) + " has k+q = " + std::to_string(qv.k_plus_q) +
                            ", not divisible by " + std::to_string(n));
  long k = static_cast<long>(fp.length());
  long p = qv.p_for(n);
  std::vector<StringModule> orbit{flow_projective(q, fp)};
  for (long j = 1; j <= p - 1; ++j) orbit.push_back(StringModule::simple(fp.at(static_cast<std::size_t>(k - j * n + qv.qk))));
  orbit.push_back(flow_injective(q, fp));
  return orbit;
}

inline StringModule tau2_inverse_22(const Quiver& q, VertexId v) {
  if (q.degree(v) != Degree{2, 2}) throw PreconditionError("vertex " + q.name(v) + " does not have degree (2,2)");
  require_pre_admissible(q);
  return injective(q, v);
}

/// The basic n-cluster tilting module: projectives, orbit simples, injectives.
inline ModuleList build_M(const Quiver& q, long n) {
  require_n(n);
  if (classify_shape(q).is_cycle())
    throw PreconditionError("oriented cycles have several cluster tilting subcategories; use cycle_family");
  auto report = is_n_admissible(q, n);
  if (!report.verdict) throw PreconditionError("quiver is not " + std::to_string(n) + "-admissible: " + detail::describe(q, report));

  std::set<StringModule> members;
  std::vector<StringModule> orbit_simples;
  for (const auto& fp : enumerate_flow_paths(q)) {
    auto orbit = tau_n_orbit(q, fp, n);
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      members.insert(orbit[j]);
      if (j > 0 && j + 1 < orbit.size()) orbit_simples.push_back(orbit[j]);
    }
  }
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    auto p = projective(q, v);
    if (is_injective(q, p)) members.insert(p);
    if (q.degree(v) == Degree{2, 2}) {
      members.insert(p);
      members.insert(injective(q, v));
    }
  }

  ModuleList out;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (members.count(projective(q, v))) out.add_unique(projective(q, v));
  for (const auto& s : orbit_simples) out.add_unique(s);
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (members.count(injective(q, v))) out.add_unique(injective(q, v));
  if (out.size() != members.size()) throw PreconditionError("internal: M has summands outside the expected families");
  return out;
}

}  // namespace qct
