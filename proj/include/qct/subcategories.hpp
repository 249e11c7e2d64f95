#pragma once

// n-cluster tilting subcategories of mod kQ/J^2 and their inclusion lattice.

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "qct/admissibility.hpp"
#include "qct/modules.hpp"
#include "qct/oracle.hpp"

namespace qct {

inline ModuleList projective_generators(const Quiver& q) {
  ModuleList l;
  for (VertexId v = 0; v < q.vertex_count(); ++v) l.add_unique(projective(q, v));
  return l;
}

/// For an oriented m-cycle and n | m: add(Lambda + sum_j tau_n^{-j} S) for each
/// simple S, with the orbit computed by the oracle. Duplicates removed.
inline std::vector<ModuleList> cycle_family(const Quiver& q, long n, FieldSpec f = FieldSpec{}) {
  require_n(n);
  Shape shape = classify_shape(q);
  if (!shape.is_cycle()) throw PreconditionError("cycle_family needs an oriented cycle");
  long m = static_cast<long>(shape.m);
  if (m % n != 0) throw PreconditionError("cycle length " + std::to_string(m) + " is not divisible by " + std::to_string(n));
  ExtOracle oracle(q, f);
  std::vector<ModuleList> family;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    ModuleList gens = projective_generators(q);
    Representation cur = oracle.realize_module(StringModule::simple(v));
    for (long j = 0; j < m / n; ++j) {
      if (j > 0) cur = oracle.tau_n_inverse(cur, n);
      auto s = oracle.identify(cur);
      if (!s) throw PreconditionError("internal: tau_n orbit of a simple vanished on a cycle");
      gens.add_unique(*s);
    }
    bool seen = false;
    for (const auto& g : family) seen = seen || g == gens;
    if (!seen) family.push_back(std::move(gens));
  }
  return family;
}

inline std::vector<ModuleList> cluster_tilting_subcategories(const Quiver& q, long n, FieldSpec f = FieldSpec{}) {
  require_n(n, 1);
  require_connected(q);
  if (n == 1) return {ModuleList(enumerate_indecomposables(q))};
  if (!is_n_admissible(q, n).verdict) return {};
  if (classify_shape(q).is_cycle()) return cycle_family(q, n, f);
  return {build_M(q, n)};
}

struct CTLattice {
  long N = 1;
  std::map<long, ModuleList> subcategories;       // n -> generators of C_n
  std::vector<std::pair<long, long>> covers;      // (n, n'): C_n' covered by C_n, n'/n prime

  static long meet(long a, long b) { return std::lcm(a, b); }
  static long join(long a, long b) { return std::gcd(a, b); }

  bool includes(long n, long n_prime) const {
    return subcategories.at(n).subset_of(subcategories.at(n_prime));
  }
};

inline CTLattice lattice_of_ct(const Quiver& q) {
  require_connected(q);
  if (classify_shape(q).is_cycle()) throw PreconditionError("the lattice statement excludes oriented cycles");
  CTLattice lat;
  lat.N = admissible_degree(q);
  auto div = divisor_lattice(lat.N);
  for (long d : div.divisors) lat.subcategories[d] = d == 1 ? ModuleList(enumerate_indecomposables(q)) : build_M(q, d);
  lat.covers = div.covers;
  return lat;
}

}  // namespace qct
