#pragma once

// Brute-force homological algebra over GF(p) for kQ/J^2: minimal projective
// resolutions, Ext, the Auslander-Reiten translates, decomposition into the
// indecomposable catalogue, cluster tilting verification and the AR quiver.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qct/errors.hpp"
#include "qct/linalg.hpp"
#include "qct/modules.hpp"
#include "qct/quiver.hpp"
#include "qct/representation.hpp"

namespace qct {

struct Resolution {
  std::vector<ProjectiveSum> terms;          // P_0, P_1, ...
  std::vector<ProjectiveMap> differentials;  // d_i : P_i -> P_{i-1} stored at i-1
  std::vector<Representation> syzygies;      // Omega^1, Omega^2, ... as computed
  bool minimal = true;
  bool complete = false;                     // reached a zero syzygy

  std::size_t length() const { return terms.size(); }
};

struct Counterexample {
  std::string module;
  long i = 0;
  std::string direction;  // "from": Ext^i(X, C); "to": Ext^i(C, X)
  std::string kind;       // rigidity, maximality, missing-projective, missing-injective, omega-closure
};

struct VerifyReport {
  bool pass = true;
  std::vector<Counterexample> counterexamples;
  bool functorial_finiteness_implied = true;
};

struct ARQuiver {
  std::vector<StringModule> nodes;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> arrows;  // from, to, multiplicity
  std::vector<std::pair<std::size_t, std::size_t>> tau;                   // (X, tau X)

  std::size_t arrow_count() const {
    std::size_t s = 0;
    for (const auto& a : arrows) s += std::get<2>(a);
    return s;
  }
};

namespace detail {

/// Top of a representation at v: the radical there and a complement.
inline std::pair<Matrix, Matrix> radical_and_top(const Quiver& q, const Representation& a, VertexId v) {
  std::vector<Matrix> images;
  for (ArrowId x : q.in_arrows(v)) images.push_back(a.maps[x]);
  Matrix rad = hstack(images, a.dims[v], a.field);
  Matrix basis = column_space(rad);
  if (rad.cols() == 0) basis = Matrix(a.dims[v], 0, a.field);
  return {basis, complement_basis(basis, a.dims[v], a.field)};
}

inline Matrix column_of(const std::vector<std::uint32_t>& v, FieldSpec f) {
  Matrix m(v.size(), 1, f);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

}  // namespace detail

/// Projective cover of `a` over `q`, returned as generators with their images.
struct Cover {
  ProjectiveSum sum;
  std::vector<Matrix> generator_images;  // column vectors in a at the generator's vertex
  Morphism projection;
};

inline Cover projective_cover(const Quiver& q, const Representation& a) {
  Cover c;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (a.dims[v] == 0) continue;
    auto [rad, top] = detail::radical_and_top(q, a, v);
    for (std::size_t j = 0; j < top.cols(); ++j) {
      c.sum.generators.push_back(v);
      c.generator_images.push_back(top.column(j));
    }
  }
  auto basis = c.sum.basis(q);
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    Matrix m(a.dims[v], basis[v].size(), a.field);
    for (std::size_t j = 0; j < basis[v].size(); ++j) {
      const auto& lab = basis[v][j];
      Matrix col = lab.arrow ? a.maps[*lab.arrow] * c.generator_images[lab.generator] : c.generator_images[lab.generator];
      m.set_block(0, j, col);
    }
    c.projection.at.push_back(std::move(m));
  }
  return c;
}

/// Minimal projective resolution with terms P_0..P_{length}.
inline Resolution resolve(const Quiver& q, const Representation& a, std::size_t length) {
  Resolution res;
  Representation current = a;
  std::optional<Morphism> inclusion;  // current -> realized P_{i-1}
  for (std::size_t i = 0; i <= length; ++i) {
    if (current.is_zero()) {
      res.complete = true;
      break;
    }
    Cover cov = projective_cover(q, current);
    if (i > 0) {
      const auto& prev = res.terms.back();
      auto labels = prev.basis(q);
      ProjectiveMap d{cov.sum, prev, {}};
      for (std::size_t g = 0; g < cov.sum.generators.size(); ++g) {
        VertexId v = cov.sum.generators[g];
        Matrix image = inclusion->at[v] * cov.generator_images[g];
        for (const auto& t : terms_of(labels[v], image, g)) {
          if (!t.arrow) res.minimal = false;
          d.terms.push_back(t);
        }
      }
      res.differentials.push_back(std::move(d));
    }
    Representation realized = cov.sum.realize(q, a.field);
    Subobject k = kernel(q, realized, cov.projection);
    res.terms.push_back(std::move(cov.sum));
    res.syzygies.push_back(k.object);
    current = std::move(k.object);
    inclusion = std::move(k.inclusion);
  }
  if (!res.complete && current.is_zero()) res.complete = true;
  return res;
}

/// Hom(P_j, b) <- Hom(P_{j-1}, b) induced by d_j.
inline Matrix hom_differential(const ProjectiveMap& d, const Representation& b) {
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (VertexId v : d.domain.generators) row_off.push_back(row_off.back() + b.dims[v]);
  for (VertexId v : d.codomain.generators) col_off.push_back(col_off.back() + b.dims[v]);
  Matrix m(row_off.back(), col_off.back(), b.field);
  for (const auto& t : d.terms) {
    std::size_t r0 = row_off[t.from], c0 = col_off[t.to];
    if (t.arrow) {
      m.add_block(r0, c0, b.maps[*t.arrow], t.coeff);
    } else {
      m.add_block(r0, c0, Matrix::identity(b.dims[d.codomain.generators[t.to]], b.field), t.coeff);
    }
  }
  return m;
}

inline std::size_t hom_from_projective_dim(const ProjectiveSum& p, const Representation& b) {
  std::size_t s = 0;
  for (VertexId v : p.generators) s += b.dims[v];
  return s;
}

/// dim Ext^i(a, b) from a resolution of a reaching at least P_{i+1} (or complete).
inline std::size_t ext_from_resolution(const Resolution& res, const Representation& b, std::size_t i) {
  if (i >= res.terms.size()) return 0;
  std::size_t hom_i = hom_from_projective_dim(res.terms[i], b);
  std::size_t r_in = i >= 1 ? rank(hom_differential(res.differentials[i - 1], b)) : 0;
  std::size_t r_out = 0;
  if (i + 1 < res.terms.size()) r_out = rank(hom_differential(res.differentials[i], b));
  else if (!res.complete) throw PreconditionError("resolution too short for Ext^" + std::to_string(i));
  return hom_i - r_in - r_out;
}

inline std::size_t ext_dim(const Quiver& q, const Representation& a, const Representation& b, std::size_t i) {
  return ext_from_resolution(resolve(q, a, i + 1), b, i);
}

inline Representation syzygy_rep(const Quiver& q, const Representation& a) {
  auto res = resolve(q, a, 0);
  if (res.syzygies.empty()) return Representation::zero(q, a.field);
  return res.syzygies.front();
}

/// Auslander-Bridger transpose: cokernel of the dual of a minimal presentation,
/// as a representation of the opposite quiver.
inline Representation transpose_rep(const Quiver& q, const Quiver& op, const Representation& a) {
  auto res = resolve(q, a, 1);
  if (res.terms.empty()) return Representation::zero(op, a.field);
  ProjectiveMap d = res.differentials.empty() ? ProjectiveMap{ProjectiveSum{}, res.terms[0], {}} : res.differentials[0];
  ProjectiveMap t = d.transpose();
  Representation p1 = t.codomain.realize(op, a.field);
  Quotient c = cokernel(op, p1, t.to_morphism(op, a.field));
  return c.object;
}

class ExtOracle {
 public:
  ExtOracle(const Quiver& q, FieldSpec f) : q_(q), op_(q.opposite()), field_(f) {
    catalogue_ = enumerate_indecomposables(q_);
    for (const auto& m : catalogue_) realized_.push_back(realize(q_, m, field_));
    const std::size_t c = catalogue_.size();
    hom_table_.assign(c, std::vector<std::size_t>(c, 0));
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < c; ++i) hom_table_[j][i] = hom_dim(q_, realized_[j], realized_[i]);
  }

  const Quiver& quiver() const { return q_; }
  const Quiver& opposite() const { return op_; }
  FieldSpec field() const { return field_; }
  const std::vector<StringModule>& catalogue() const { return catalogue_; }
  const Representation& realized(std::size_t i) const { return realized_.at(i); }
  std::size_t hom_table(std::size_t j, std::size_t i) const { return hom_table_[j][i]; }

  std::size_t index_of(const StringModule& m) const {
    for (std::size_t i = 0; i < catalogue_.size(); ++i)
      if (catalogue_[i] == m) return i;
    throw PreconditionError("module is not in the catalogue");
  }

  Representation realize_module(const StringModule& m) const { return realize(q_, m, field_); }

  Representation realize_list(const ModuleList& l) const {
    std::vector<Representation> parts;
    for (const auto& m : l) parts.push_back(realize_module(m));
    return direct_sum(q_, parts, field_);
  }

  /// Multiplicities of catalogue members in a; solves the Hom-dimension system
  /// whose matrix is invertible for a representation-finite algebra.
  std::vector<std::size_t> decompose(const Representation& a) const {
    const std::size_t c = catalogue_.size();
    const FieldSpec big(2147483647u);
    Matrix h(c, c, big), rhs(c, 1, big);
    std::vector<long long> target(c);
    for (std::size_t j = 0; j < c; ++j) {
      for (std::size_t i = 0; i < c; ++i) h(j, i) = static_cast<std::uint32_t>(hom_table_[j][i]);
      target[j] = static_cast<long long>(hom_dim(q_, realized_[j], a));
      rhs(j, 0) = static_cast<std::uint32_t>(target[j]);
    }
    auto sol = solve(h, rhs);
    if (!sol) throw PreconditionError("internal: Hom system has no solution");
    std::vector<std::size_t> mult(c);
    for (std::size_t i = 0; i < c; ++i) {
      std::uint32_t x = (*sol)(i, 0);
      if (x > big.p / 2) throw PreconditionError("internal: negative multiplicity in decomposition");
      mult[i] = x;
    }
    for (std::size_t j = 0; j < c; ++j) {
      long long s = 0;
      for (std::size_t i = 0; i < c; ++i) s += static_cast<long long>(hom_table_[j][i] * mult[i]);
      if (s != target[j]) throw PreconditionError("internal: decomposition fails integer check");
    }
    std::size_t dim = 0;
    for (std::size_t i = 0; i < c; ++i) dim += mult[i] * catalogue_[i].dimension();
    if (dim != a.total_dim()) throw PreconditionError("internal: decomposition has the wrong dimension");
    return mult;
  }

  ModuleList decompose_list(const Representation& a) const {
    auto mult = decompose(a);
    ModuleList out;
    for (std::size_t i = 0; i < mult.size(); ++i)
      for (std::size_t k = 0; k < mult[i]; ++k) out.push_back(catalogue_[i]);
    return out;
  }

  /// The unique indecomposable isomorphic to a, or nullopt when a is zero.
  std::optional<StringModule> identify(const Representation& a) const {
    auto l = decompose_list(a);
    if (l.empty()) return std::nullopt;
    if (l.size() != 1) throw PreconditionError("representation is decomposable");
    return l[0];
  }

  Resolution resolution(const Representation& a, std::size_t length) const { return resolve(q_, a, length); }

  Resolution cached_resolution(std::size_t idx, std::size_t length) const {
    auto it = res_cache_.find(idx);
    if (it != res_cache_.end() && (it->second.complete || it->second.length() > length)) return it->second;
    auto r = resolve(q_, realized_[idx], length);
    res_cache_[idx] = r;
    return r;
  }

  std::size_t ext_dim(const Representation& a, const Representation& b, std::size_t i) const {
    return qct::ext_dim(q_, a, b, i);
  }

  /// dim Ext^i between catalogue members, cached.
  std::size_t ext_index(std::size_t x, std::size_t y, std::size_t i) const {
    auto key = std::make_tuple(x, y, i);
    auto it = ext_cache_.find(key);
    if (it != ext_cache_.end()) return it->second;
    auto r = cached_resolution(x, i + 1);
    std::size_t d = ext_from_resolution(r, realized_[y], i);
    ext_cache_[key] = d;
    return d;
  }

  Representation syzygy(const Representation& a) const { return syzygy_rep(q_, a); }
  Representation cosyzygy(const Representation& a) const { return dual(syzygy_rep(op_, dual(a))); }
  Representation tau(const Representation& a) const { return dual(transpose_rep(q_, op_, a)); }
  Representation tau_inverse(const Representation& a) const { return transpose_rep(op_, q_, dual(a)); }

  Representation cosyzygy_power(Representation a, long k) const {
    for (long i = 0; i < k; ++i) a = cosyzygy(a);
    return a;
  }
  Representation syzygy_power(Representation a, long k) const {
    for (long i = 0; i < k; ++i) a = syzygy(a);
    return a;
  }
  /// tau^- Omega^{-(n-1)}.
  Representation tau_n_inverse(const Representation& a, long n) const { return tau_inverse(cosyzygy_power(a, n - 1)); }
  Representation tau_n(const Representation& a, long n) const { return tau(syzygy_power(a, n - 1)); }

  bool is_projective_index(std::size_t i) const { return is_projective(q_, catalogue_[i]); }
  bool is_injective_index(std::size_t i) const { return is_injective(q_, catalogue_[i]); }

  std::vector<std::size_t> indices_of(const ModuleList& gens) const {
    std::set<std::size_t> s;
    for (const auto& m : gens) s.insert(index_of(m));
    return {s.begin(), s.end()};
  }

  VerifyReport verify_n_cluster_tilting(long n, const ModuleList& gens) const { return verify_indices(n, indices_of(gens)); }

  VerifyReport verify_indices(long n, const std::vector<std::size_t>& gens) const {
    VerifyReport rep;
    std::set<std::size_t> in(gens.begin(), gens.end());
    for (std::size_t x = 0; x < catalogue_.size(); ++x) {
      if (in.count(x)) continue;
      if (is_projective_index(x)) rep.counterexamples.push_back({name(x), 0, "from", "missing-projective"});
      if (is_injective_index(x)) rep.counterexamples.push_back({name(x), 0, "to", "missing-injective"});
    }
    for (std::size_t x = 0; x < catalogue_.size(); ++x) {
      bool from_zero = true, to_zero = true;
      for (long i = 1; i < n; ++i) {
        bool from_i = false, to_i = false;
        for (std::size_t g : gens) {
          from_i = from_i || ext_index(x, g, static_cast<std::size_t>(i)) != 0;
          to_i = to_i || ext_index(g, x, static_cast<std::size_t>(i)) != 0;
        }
        if (in.count(x)) {
          if (from_i) rep.counterexamples.push_back({name(x), i, "from", "rigidity"});
          if (to_i) rep.counterexamples.push_back({name(x), i, "to", "rigidity"});
        }
        from_zero = from_zero && !from_i;
        to_zero = to_zero && !to_i;
      }
      if (!in.count(x)) {
        if (from_zero) rep.counterexamples.push_back({name(x), 0, "from", "maximality"});
        if (to_zero) rep.counterexamples.push_back({name(x), 0, "to", "maximality"});
      }
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
  }

  /// Omega^n(X) lies in add(gens) for every X in gens.
  VerifyReport verify_nZ(long n, const ModuleList& gens) const { return verify_nZ_indices(n, indices_of(gens)); }

  VerifyReport verify_nZ_indices(long n, const std::vector<std::size_t>& gens) const {
    VerifyReport rep;
    std::set<std::size_t> in(gens.begin(), gens.end());
    for (std::size_t x : gens) {
      auto mult = decompose(syzygy_power(realized_[x], n));
      for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] && !in.count(i) && !is_projective_index(i)) {
          rep.counterexamples.push_back({name(x), n, "from", "omega-closure"});
          break;
        }
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
  }

  /// Every n-cluster tilting subcategory, by exhaustive search over sets of
  /// non-projective non-injective indecomposables. Exponential; small inputs only.
  std::vector<std::vector<std::size_t>> search_cluster_tilting(long n, std::size_t max_free = 16) const {
    std::vector<std::size_t> fixed, free;
    for (std::size_t i = 0; i < catalogue_.size(); ++i)
      (is_projective_index(i) || is_injective_index(i) ? fixed : free).push_back(i);
    if (free.size() > max_free) throw PreconditionError("too many candidate modules for exhaustive search");
    std::vector<std::vector<std::size_t>> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      std::vector<std::size_t> gens = fixed;
      for (std::size_t b = 0; b < free.size(); ++b)
        if (mask >> b & 1u) gens.push_back(free[b]);
      std::sort(gens.begin(), gens.end());
      if (verify_indices(n, gens).pass) found.push_back(std::move(gens));
    }
    return found;
  }

  // -------------------------------------------------------------------------
  // AR quiver

  /// Basis of the radical morphisms X -> Y between catalogue members.
  std::vector<Morphism> radical_basis(std::size_t x, std::size_t y) const {
    auto basis = hom_basis(q_, realized_[x], realized_[y]);
    if (x != y) return basis;
    const auto& a = realized_[x];
    VertexId v = 0;
    Matrix rad, top;
    bool found = false;
    for (VertexId w = 0; w < q_.vertex_count() && !found; ++w) {
      if (a.dims[w] == 0) continue;
      auto [r, t] = detail::radical_and_top(q_, a, w);
      if (t.cols() == 1) {
        v = w;
        rad = r;
        top = t;
        found = true;
      }
    }
    if (!found) throw PreconditionError("internal: no one-dimensional top component");
    Matrix frame = hstack(std::vector<Matrix>{rad, top}, a.dims[v], field_);
    Morphism id = identity_morphism(a);
    // Each endomorphism is lambda * id plus a nilpotent part; lambda is read
    // off the one-dimensional top at v.
    std::vector<Morphism> nilpotent;
    std::vector<std::vector<std::uint32_t>> vecs;
    for (const auto& phi : basis) {
      auto coords = solve(frame, phi.at[v] * top);
      std::uint32_t lambda = (*coords)(frame.cols() - 1, 0);
      nilpotent.push_back(linear_combination({phi, id}, {1, field_.neg(lambda)}, a, a));
      vecs.push_back(nilpotent.back().flatten());
    }
    std::vector<Morphism> out;
    for (std::size_t i : independent(vecs)) out.push_back(nilpotent[i]);
    return out;
  }

  /// Irreducible maps as rad / rad^2, with tau-translates of non-projectives.
  ARQuiver ar_quiver() const {
    const std::size_t c = catalogue_.size();
    std::vector<std::vector<std::vector<Morphism>>> rad(c, std::vector<std::vector<Morphism>>(c));
    for (std::size_t x = 0; x < c; ++x)
      for (std::size_t y = 0; y < c; ++y) rad[x][y] = radical_basis(x, y);
    ARQuiver ar;
    ar.nodes = catalogue_;
    for (std::size_t x = 0; x < c; ++x)
      for (std::size_t y = 0; y < c; ++y) {
        if (rad[x][y].empty()) continue;
        std::vector<std::vector<std::uint32_t>> comps;
        for (std::size_t z = 0; z < c; ++z)
          for (const auto& f : rad[x][z])
            for (const auto& g : rad[z][y]) comps.push_back(compose(g, f).flatten());
        std::size_t r2 = independent(comps).size();
        std::size_t irr = rad[x][y].size() - r2;
        if (irr) ar.arrows.emplace_back(x, y, irr);
      }
    for (std::size_t x = 0; x < c; ++x) {
      if (is_projective_index(x)) continue;
      auto t = identify(tau(realized_[x]));
      if (t) ar.tau.emplace_back(x, index_of(*t));
    }
    return ar;
  }

  std::string name(std::size_t i) const { return module_name(q_, catalogue_[i]); }

 private:
  std::vector<std::size_t> independent(const std::vector<std::vector<std::uint32_t>>& vecs) const {
    if (vecs.empty()) return {};
    Matrix m(vecs.front().size(), vecs.size(), field_);
    for (std::size_t j = 0; j < vecs.size(); ++j)
      for (std::size_t i = 0; i < vecs[j].size(); ++i) m(i, j) = vecs[j][i];
    if (m.rows() == 0) return {};
    return rref(m).pivots;
  }

  Quiver q_;
  Quiver op_;
  FieldSpec field_;
  std::vector<StringModule> catalogue_;
  std::vector<Representation> realized_;
  std::vector<std::vector<std::size_t>> hom_table_;
  mutable std::map<std::size_t, Resolution> res_cache_;
  mutable std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> ext_cache_;
};

/// Mesh check: arrows into each non-projective X match arrows out of tau X.
inline bool mesh_property(const ARQuiver& ar) {
  for (const auto& [x, tx] : ar.tau) {
    std::map<std::size_t, std::size_t> into, out_of;
    for (const auto& [a, b, m] : ar.arrows) {
      if (b == x) into[a] += m;
      if (a == tx) out_of[b] += m;
    }
    if (into != out_of) return false;
  }
  return true;
}

}  // namespace qct
