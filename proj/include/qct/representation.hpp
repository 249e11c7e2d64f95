#pragma once

// Matrix representations of quivers bound by J^2: realization of string
// modules, Hom spaces, kernels, cokernels, duality and sums of indecomposable
// projectives with explicit path bases.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qct/errors.hpp"
#include "qct/linalg.hpp"
#include "qct/modules.hpp"
#include "qct/quiver.hpp"

namespace qct {

struct Representation {
  FieldSpec field;
  std::vector<std::size_t> dims;  // per vertex
  std::vector<Matrix> maps;       // per arrow, dims[target] x dims[source]

  std::size_t total_dim() const {
    std::size_t s = 0;
    for (auto d : dims) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }

  static Representation zero(const Quiver& q, FieldSpec f) {
    Representation r{f, std::vector<std::size_t>(q.vertex_count(), 0), {}};
    r.maps.assign(q.arrow_count(), Matrix(0, 0, f));
    return r;
  }
};

/// Every composite of two arrows acts as zero.
inline bool satisfies_relations(const Quiver& q, const Representation& r) {
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    for (ArrowId b : q.out_arrows(q.arrow(a).target))
      if (!(r.maps[b] * r.maps[a]).is_zero()) return false;
  return true;
}

inline void check_representation(const Quiver& q, const Representation& r) {
  if (r.dims.size() != q.vertex_count() || r.maps.size() != q.arrow_count())
    throw PreconditionError("representation does not match the quiver");
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (r.maps[a].rows() != r.dims[arr.target] || r.maps[a].cols() != r.dims[arr.source])
      throw PreconditionError("arrow matrix has the wrong shape");
  }
  if (!satisfies_relations(q, r)) throw PreconditionError("representation violates J^2 = 0");
}

/// A morphism of representations: one matrix per vertex.
struct Morphism {
  std::vector<Matrix> at;

  /// Concatenated entries, used to treat Hom spaces as vector spaces.
  std::vector<std::uint32_t> flatten() const {
    std::vector<std::uint32_t> v;
    for (const auto& m : at) v.insert(v.end(), m.data().begin(), m.data().end());
    return v;
  }
};

inline Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(g.at[v] * f.at[v]);
  return h;
}

inline Morphism identity_morphism(const Representation& a) {
  Morphism m;
  for (auto d : a.dims) m.at.push_back(Matrix::identity(d, a.field));
  return m;
}

inline Morphism linear_combination(const std::vector<Morphism>& basis, const std::vector<std::uint32_t>& coeffs,
                                   const Representation& from, const Representation& to) {
  Morphism m;
  for (std::size_t v = 0; v < from.dims.size(); ++v) m.at.emplace_back(to.dims[v], from.dims[v], from.field);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i])
      for (std::size_t v = 0; v < m.at.size(); ++v) m.at[v].add_block(0, 0, basis[i].at[v], coeffs[i]);
  return m;
}

/// Realizes a string module; basis vectors follow walk positions.
inline Representation realize(const Quiver& q, const StringModule& m, FieldSpec f) {
  auto walk = m.walk();
  Representation r{f, std::vector<std::size_t>(q.vertex_count(), 0), {}};
  std::vector<std::size_t> index;
  for (VertexId v : walk) index.push_back(r.dims[v]++);
  for (const auto& a : q.arrows()) r.maps.emplace_back(r.dims[a.target], r.dims[a.source], f);
  for (std::size_t i = 0; i < m.word().size(); ++i) {
    const auto& l = m.word()[i];
    if (!l.inverse) r.maps[l.arrow](index[i + 1], index[i]) = 1;
    else r.maps[l.arrow](index[i], index[i + 1]) = 1;
  }
  check_representation(q, r);
  return r;
}

inline Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts, FieldSpec f) {
  Representation r{f, std::vector<std::size_t>(q.vertex_count(), 0), {}};
  for (const auto& p : parts)
    for (std::size_t v = 0; v < r.dims.size(); ++v) r.dims[v] += p.dims[v];
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    Matrix m(r.dims[arr.target], r.dims[arr.source], f);
    std::size_t ro = 0, co = 0;
    for (const auto& p : parts) {
      m.set_block(ro, co, p.maps[a]);
      ro += p.dims[arr.target];
      co += p.dims[arr.source];
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

/// Vector-space dual, a representation of the opposite quiver.
inline Representation dual(const Representation& a) {
  Representation d{a.field, a.dims, {}};
  for (const auto& m : a.maps) d.maps.push_back(m.transpose());
  return d;
}

/// Basis of Hom(a, b): solutions of phi_t a(alpha) = b(alpha) phi_s.
inline std::vector<Morphism> hom_basis(const Quiver& q, const Representation& a, const Representation& b) {
  const FieldSpec f = a.field;
  std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
  for (VertexId v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + a.dims[v] * b.dims[v];
  const std::size_t unknowns = offset.back();
  auto var = [&](VertexId v, std::size_t r, std::size_t c) { return offset[v] + r * a.dims[v] + c; };

  std::size_t equations = 0;
  for (const auto& arr : q.arrows()) equations += b.dims[arr.target] * a.dims[arr.source];
  Matrix sys(equations, unknowns, f);
  std::size_t row = 0;
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const auto& arr = q.arrow(x);
    VertexId s = arr.source, t = arr.target;
    const Matrix& am = a.maps[x];
    const Matrix& bm = b.maps[x];
    for (std::size_t r = 0; r < b.dims[t]; ++r)
      for (std::size_t c = 0; c < a.dims[s]; ++c, ++row) {
        for (std::size_t k = 0; k < a.dims[t]; ++k)
          if (am(k, c)) sys(row, var(t, r, k)) = f.add(sys(row, var(t, r, k)), am(k, c));
        for (std::size_t k = 0; k < b.dims[s]; ++k)
          if (bm(r, k)) sys(row, var(s, k, c)) = f.sub(sys(row, var(s, k, c)), bm(r, k));
      }
  }
  Matrix ns = nullspace(sys);
  std::vector<Morphism> basis;
  for (std::size_t j = 0; j < ns.cols(); ++j) {
    Morphism m;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
      Matrix block(b.dims[v], a.dims[v], f);
      for (std::size_t r = 0; r < b.dims[v]; ++r)
        for (std::size_t c = 0; c < a.dims[v]; ++c) block(r, c) = ns(var(v, r, c), j);
      m.at.push_back(std::move(block));
    }
    basis.push_back(std::move(m));
  }
  return basis;
}

inline std::size_t hom_dim(const Quiver& q, const Representation& a, const Representation& b) {
  return hom_basis(q, a, b).size();
}

struct Subobject {
  Representation object;
  Morphism inclusion;
};

struct Quotient {
  Representation object;
  Morphism projection;
};

inline Subobject kernel(const Quiver& q, const Representation& a, const Morphism& f) {
  Subobject k{{a.field, std::vector<std::size_t>(q.vertex_count(), 0), {}}, {}};
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    Matrix basis = f.at[v].rows() == 0 ? Matrix::identity(a.dims[v], a.field) : nullspace(f.at[v]);
    k.object.dims[v] = basis.cols();
    k.inclusion.at.push_back(std::move(basis));
  }
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const auto& arr = q.arrow(x);
    const Matrix& ks = k.inclusion.at[arr.source];
    const Matrix& kt = k.inclusion.at[arr.target];
    auto m = solve(kt, a.maps[x] * ks);
    if (!m) throw PreconditionError("internal: kernel is not a subrepresentation");
    k.object.maps.push_back(std::move(*m));
  }
  return k;
}

inline Quotient cokernel(const Quiver& q, const Representation& b, const Morphism& f) {
  Quotient c{{b.field, std::vector<std::size_t>(q.vertex_count(), 0), {}}, {}};
  std::vector<Matrix> lifts;  // complement basis, a section of the projection
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    Matrix image = column_space(f.at[v]);
    if (f.at[v].cols() == 0) image = Matrix(b.dims[v], 0, b.field);
    Matrix comp = complement_basis(image, b.dims[v], b.field);
    Matrix full = hstack(std::vector<Matrix>{image, comp}, b.dims[v], b.field);
    auto inv = solve(full, Matrix::identity(b.dims[v], b.field));
    if (!inv) throw PreconditionError("internal: complement is not a basis");
    c.object.dims[v] = comp.cols();
    c.projection.at.push_back(inv->rows_range(image.cols(), b.dims[v]));
    lifts.push_back(std::move(comp));
  }
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const auto& arr = q.arrow(x);
    c.object.maps.push_back(c.projection.at[arr.target] * b.maps[x] * lifts[arr.source]);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Sums of indecomposable projectives with path bases

/// A basis element of P(v_g): the trivial path at v_g, or an arrow out of v_g.
struct PathLabel {
  std::size_t generator;
  std::optional<ArrowId> arrow;
};

struct ProjectiveSum {
  std::vector<VertexId> generators;

  /// Basis labels at each vertex: generators first, then arrow elements, both
  /// in generator order.
  std::vector<std::vector<PathLabel>> basis(const Quiver& q) const {
    std::vector<std::vector<PathLabel>> b(q.vertex_count());
    for (std::size_t g = 0; g < generators.size(); ++g) b[generators[g]].push_back({g, std::nullopt});
    for (std::size_t g = 0; g < generators.size(); ++g)
      for (ArrowId a : q.out_arrows(generators[g])) b[q.arrow(a).target].push_back({g, a});
    return b;
  }

  std::size_t multiplicity(VertexId v) const {
    std::size_t c = 0;
    for (VertexId g : generators) c += (g == v);
    return c;
  }

  Representation realize(const Quiver& q, FieldSpec f) const {
    auto b = basis(q);
    Representation r{f, std::vector<std::size_t>(q.vertex_count(), 0), {}};
    for (VertexId v = 0; v < q.vertex_count(); ++v) r.dims[v] = b[v].size();
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      const auto& arr = q.arrow(a);
      Matrix m(r.dims[arr.target], r.dims[arr.source], f);
      for (std::size_t i = 0; i < b[arr.source].size(); ++i) {
        const auto& lab = b[arr.source][i];
        if (lab.arrow) continue;
        for (std::size_t j = 0; j < b[arr.target].size(); ++j) {
          const auto& tl = b[arr.target][j];
          if (tl.generator == lab.generator && tl.arrow == a) m(j, i) = 1;
        }
      }
      r.maps.push_back(std::move(m));
    }
    return r;
  }
};

/// Generator `from` of the domain maps to coeff times the element
/// (to, arrow) of the codomain.
struct PathTerm {
  std::size_t from;
  std::size_t to;
  std::optional<ArrowId> arrow;
  std::uint32_t coeff;
};

struct ProjectiveMap {
  ProjectiveSum domain;
  ProjectiveSum codomain;
  std::vector<PathTerm> terms;

  /// Hom(-, Lambda) applied to the map; lives over the opposite quiver, where
  /// each arrow keeps its index with source and target exchanged.
  ProjectiveMap transpose() const {
    ProjectiveMap t{codomain, domain, {}};
    for (const auto& x : terms) t.terms.push_back({x.to, x.from, x.arrow, x.coeff});
    return t;
  }

  Morphism to_morphism(const Quiver& q, FieldSpec f) const {
    auto db = domain.basis(q), cb = codomain.basis(q);
    auto find = [&](VertexId v, std::size_t g, std::optional<ArrowId> a) -> std::size_t {
      for (std::size_t j = 0; j < cb[v].size(); ++j)
        if (cb[v][j].generator == g && cb[v][j].arrow == a) return j;
      throw PreconditionError("internal: path element missing from projective basis");
    };
    Morphism m;
    for (VertexId v = 0; v < q.vertex_count(); ++v) m.at.emplace_back(cb[v].size(), db[v].size(), f);
    for (const auto& t : terms) {
      VertexId v = domain.generators[t.from];
      // Generator itself.
      {
        VertexId at = t.arrow ? q.arrow(*t.arrow).target : codomain.generators[t.to];
        if (at != v) throw PreconditionError("internal: path term does not end at the generator's vertex");
        std::size_t col = 0;
        while (!(db[v][col].generator == t.from && !db[v][col].arrow)) ++col;
        auto& e = m.at[v](find(v, t.to, t.arrow), col);
        e = f.add(e, t.coeff);
      }
      // Arrow multiples of the generator: only trivial terms survive J^2.
      if (t.arrow) continue;
      for (ArrowId a : q.out_arrows(v)) {
        VertexId w = q.arrow(a).target;
        std::size_t col = 0;
        while (!(db[w][col].generator == t.from && db[w][col].arrow == a)) ++col;
        auto& e = m.at[w](find(w, t.to, a), col);
        e = f.add(e, t.coeff);
      }
    }
    return m;
  }
};

/// Expresses a vector of the projective sum at vertex v through path terms.
inline std::vector<PathTerm> terms_of(const std::vector<PathLabel>& labels, const Matrix& column, std::size_t from) {
  std::vector<PathTerm> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (column(i, 0)) out.push_back({from, labels[i].generator, labels[i].arrow, column(i, 0)});
  return out;
}

}  // namespace qct
