#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace qct;
using namespace qct::testing;

namespace {

std::vector<Quiver> small_zoo() {
  std::vector<Quiver> qs{two_admissible(), three_admissible(), load("loop_tail.q"), load("a3.q"), load("cycle4.q"),
                         linear_quiver(1), linear_quiver(5), cycle_quiver(1), cycle_quiver(3)};
  for (const auto& s : skeletons()) qs.push_back(s);
  return qs;
}

/// Conjugates every vector space of `a` by a random invertible matrix.
Representation scramble(const Quiver& q, const Representation& a, std::mt19937_64& rng) {
  const FieldSpec f = a.field;
  std::vector<Matrix> g, g_inv;
  for (std::size_t d : a.dims) {
    for (;;) {
      Matrix m(d, d, f);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r, c) = static_cast<std::uint32_t>(rng() % f.p);
      if (rank(m) != d) continue;
      g.push_back(m);
      g_inv.push_back(solve(m, Matrix::identity(d, f)).value());
      break;
    }
  }
  Representation out = a;
  for (ArrowId x = 0; x < q.arrow_count(); ++x)
    out.maps[x] = g[q.arrow(x).target] * a.maps[x] * g_inv[q.arrow(x).source];
  return out;
}

}  // namespace

TEST(Realize, Examples) {
  Quiver a3 = load("a3.q");
  FieldSpec f;
  auto s = realize(a3, StringModule::simple(1), f);
  EXPECT_EQ(s.dims, (std::vector<std::size_t>{0, 1, 0}));
  for (const auto& m : s.maps) EXPECT_TRUE(m.is_zero());
  auto p1 = realize(a3, projective(a3, 0), f);
  EXPECT_EQ(p1.dims, (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(p1.maps[0](0, 0), 1u);
  Quiver d = three_admissible();
  auto i4 = realize(d, injective(d, d.vertex("4")), f);
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    bool in = d.name(v) == "3" || d.name(v) == "12" || d.name(v) == "4";
    EXPECT_EQ(i4.dims[v], in ? 1u : 0u);
  }
  std::size_t nonzero = 0;
  for (const auto& m : i4.maps) nonzero += !m.is_zero();
  EXPECT_EQ(nonzero, 2u);
}

TEST(Realize, RelationsHoldEverywhere) {
  for (const auto& q : small_zoo())
    for (std::uint32_t p : {2u, 3u, 5u})
      for (const auto& m : enumerate_indecomposables(q)) EXPECT_TRUE(satisfies_relations(q, realize(q, m, FieldSpec(p))));
}

TEST(Hom, Simples) {
  Quiver a3 = load("a3.q");
  FieldSpec f;
  auto s = [&](VertexId v) { return realize(a3, StringModule::simple(v), f); };
  EXPECT_EQ(hom_dim(a3, s(0), s(0)), 1u);
  EXPECT_EQ(hom_dim(a3, s(0), s(1)), 0u);
  EXPECT_EQ(hom_dim(a3, realize(a3, projective(a3, 0), f), s(0)), 1u);
}

TEST(Hom, FromProjectiveIsStalkDimension) {
  for (const auto& q : small_zoo()) {
    ExtOracle o(q, FieldSpec{});
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
      auto p = o.index_of(projective(q, v));
      for (std::size_t x = 0; x < o.catalogue().size(); ++x) EXPECT_EQ(o.hom_table(p, x), o.realized(x).dims[v]);
    }
  }
}

TEST(Cover, ProjectiveAndSimple) {
  Quiver q = two_admissible();
  FieldSpec f;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    auto p = realize(q, projective(q, v), f);
    EXPECT_TRUE(syzygy_rep(q, p).is_zero());
    auto k = syzygy_rep(q, realize(q, StringModule::simple(v), f));
    EXPECT_EQ(k.total_dim(), q.out_arrows(v).size());
  }
}

// Syzygies of non-projective indecomposables are semisimple and agree with the
// dimension-vector formula.
TEST(Cover, SyzygyIsSemisimple) {
  for (const auto& q : small_zoo()) {
    ExtOracle o(q, FieldSpec{});
    for (std::size_t x = 0; x < o.catalogue().size(); ++x) {
      if (o.is_projective_index(x)) continue;
      auto k = o.syzygy(o.realized(x));
      for (const auto& m : k.maps) EXPECT_TRUE(m.is_zero());
      std::vector<std::size_t> expected(q.vertex_count(), 0);
      for (VertexId v : syzygy(q, o.catalogue()[x])) ++expected[v];
      EXPECT_EQ(k.dims, expected) << o.name(x);
    }
  }
}

TEST(Ext, Examples) {
  Quiver a3 = load("a3.q");
  ExtOracle o(a3, FieldSpec{});
  auto s = [&](VertexId v) { return o.realized(o.index_of(StringModule::simple(v))); };
  EXPECT_EQ(o.ext_dim(s(0), s(2), 2), 1u);
  EXPECT_EQ(o.ext_dim(s(0), s(1), 1), 1u);
  EXPECT_EQ(o.ext_dim(s(0), s(2), 1), 0u);
  for (std::size_t x = 0; x < o.catalogue().size(); ++x)
    for (std::size_t i = 1; i <= 3; ++i)
      for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(o.ext_dim(o.realized(o.index_of(projective(a3, v))), o.realized(x), i), 0u);
}

TEST(Ext, RigidityOfTwoClusterTiltingModule) {
  Quiver q = two_admissible();
  ExtOracle o(q, FieldSpec{});
  auto m = o.realize_list(build_M(q, 2));
  EXPECT_EQ(o.ext_dim(m, m, 1), 0u);
}

// Ext^i(X, S(v)) counts P(v) in the i-th term of the minimal resolution.
TEST(Ext, AgreesWithResolutionMultiplicities) {
  for (const auto& q : small_zoo()) {
    ExtOracle o(q, FieldSpec{});
    for (std::size_t x = 0; x < o.catalogue().size(); ++x) {
      auto res = o.resolution(o.realized(x), 4);
      EXPECT_TRUE(res.minimal);
      for (std::size_t i = 1; i <= 3; ++i)
        for (VertexId v = 0; v < q.vertex_count(); ++v) {
          std::size_t mult = i < res.terms.size() ? res.terms[i].multiplicity(v) : 0;
          EXPECT_EQ(ext_from_resolution(res, realize(q, StringModule::simple(v), FieldSpec{}), i), mult);
        }
    }
  }
}

TEST(Ext, DifferentialsComposeToZeroAndLandInRadical) {
  Quiver q = two_admissible();
  FieldSpec f;
  ExtOracle o(q, f);
  for (std::size_t x = 0; x < o.catalogue().size(); ++x) {
    auto res = o.resolution(o.realized(x), 4);
    for (std::size_t i = 0; i + 1 < res.differentials.size(); ++i) {
      auto a = res.differentials[i].to_morphism(q, f);
      auto b = res.differentials[i + 1].to_morphism(q, f);
      for (const auto& m : compose(a, b).at) EXPECT_TRUE(m.is_zero());
    }
    for (const auto& d : res.differentials)
      for (const auto& t : d.terms) EXPECT_TRUE(t.arrow.has_value());
  }
}

TEST(Ext, FieldIndependence) {
  for (const auto& q : small_zoo()) {
    ExtOracle o2(q, FieldSpec(2)), o3(q, FieldSpec(3));
    const std::size_t c = o2.catalogue().size();
    for (std::size_t x = 0; x < c; ++x)
      for (std::size_t y = 0; y < c; ++y) {
        EXPECT_EQ(o2.hom_table(x, y), o3.hom_table(x, y));
        for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(o2.ext_index(x, y, i), o3.ext_index(x, y, i));
      }
  }
}

TEST(Translate, AREquivalences) {
  Quiver a3 = load("a3.q");
  ExtOracle o(a3, FieldSpec{});
  auto s = [&](VertexId v) { return o.realized(o.index_of(StringModule::simple(v))); };
  auto name = [&](const Representation& r) { return module_name(a3, o.identify(r).value()); };
  EXPECT_EQ(name(o.tau_inverse(s(2))), "S2");
  EXPECT_EQ(name(o.tau_inverse(s(1))), "S1");
  EXPECT_EQ(name(o.tau(s(0))), "S2");
  EXPECT_EQ(name(o.tau(s(1))), "S3");
  EXPECT_TRUE(o.tau(o.realized(o.index_of(projective(a3, 0)))).is_zero());
  EXPECT_TRUE(o.tau_inverse(o.realized(o.index_of(injective(a3, 2)))).is_zero());
}

TEST(Translate, MatchesSimpleFormula) {
  for (const auto& q : small_zoo()) {
    ExtOracle o(q, FieldSpec{});
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
      auto got = o.decompose_list(o.tau_inverse(o.realize_module(StringModule::simple(v))));
      EXPECT_EQ(got, tau_inverse_simple(q, v));
      std::vector<std::size_t> expected(q.vertex_count(), 0);
      for (VertexId w : cosyzygy_simple(q, v)) ++expected[w];
      EXPECT_EQ(o.cosyzygy(o.realize_module(StringModule::simple(v))).dims, expected);
    }
  }
}

TEST(Translate, InverseUndoesForward) {
  for (const auto& q : small_zoo()) {
    ExtOracle o(q, FieldSpec(3));
    for (std::size_t x = 0; x < o.catalogue().size(); ++x) {
      if (o.is_projective_index(x) || o.is_injective_index(x)) continue;
      EXPECT_EQ(o.identify(o.tau_inverse(o.tau(o.realized(x)))).value(), o.catalogue()[x]);
      EXPECT_EQ(o.identify(o.tau(o.tau_inverse(o.realized(x)))).value(), o.catalogue()[x]);
    }
  }
}

TEST(Translate, TwoTwoVertexAgrees) {
  for (const auto& q : std::vector<Quiver>{two_admissible(), skeletons()[7]}) {
    ExtOracle o(q, FieldSpec{});
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
      if (q.degree(v) != Degree{2, 2}) continue;
      auto r = o.tau_n_inverse(o.realize_module(projective(q, v)), 2);
      EXPECT_EQ(o.identify(r).value(), tau2_inverse_22(q, v));
    }
  }
}

TEST(Decompose, ScrambledDirectSums) {
  std::mt19937_64 rng(7);
  for (const auto& q : {two_admissible(), three_admissible()}) {
    ExtOracle o(q, FieldSpec(3));
    const std::size_t c = o.catalogue().size();
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::size_t> mult(c, 0);
      std::vector<Representation> parts;
      for (int k = 0; k < 4; ++k) {
        std::size_t i = rng() % c;
        ++mult[i];
        parts.push_back(o.realized(i));
      }
      auto sum = scramble(q, direct_sum(q, parts, FieldSpec(3)), rng);
      EXPECT_TRUE(satisfies_relations(q, sum));
      EXPECT_EQ(o.decompose(sum), mult);
    }
    EXPECT_THROW(o.identify(direct_sum(q, {o.realized(0), o.realized(1)}, FieldSpec(3))), PreconditionError);
    EXPECT_FALSE(o.identify(Representation::zero(q, FieldSpec(3))).has_value());
  }
}

// Ext^x(tau_x^- N, N) is nonzero whenever the translate is.
TEST(Translate, HigherTranslateGivesNonzeroExt) {
  for (const auto& q : small_zoo()) {
    ExtOracle o(q, FieldSpec{});
    for (std::size_t x = 0; x < o.catalogue().size(); ++x)
      for (long k = 1; k <= 4; ++k) {
        auto m = o.tau_n_inverse(o.realized(x), k);
        EXPECT_TRUE(satisfies_relations(q, m));
        if (m.is_zero()) continue;
        EXPECT_GE(o.ext_dim(m, o.realized(x), static_cast<std::size_t>(k)), 1u) << o.name(x) << " x=" << k;
      }
  }
}

TEST(Verify, ThreeAdmissible) {
  Quiver q = three_admissible();
  ExtOracle o(q, FieldSpec{});
  auto m = build_M(q, 3);
  auto pass = o.verify_n_cluster_tilting(3, m);
  EXPECT_TRUE(pass.pass);
  EXPECT_TRUE(pass.counterexamples.empty());
  auto fail = o.verify_n_cluster_tilting(2, m);
  EXPECT_FALSE(fail.pass);
  EXPECT_FALSE(fail.counterexamples.empty());
  EXPECT_TRUE(o.verify_n_cluster_tilting(1, ModuleList(enumerate_indecomposables(q))).pass);
}

TEST(Verify, MissingSummandsAreReported) {
  Quiver q = load("a3.q");
  ExtOracle o(q, FieldSpec{});
  auto r = o.verify_n_cluster_tilting(2, ModuleList({projective(q, 0)}));
  EXPECT_FALSE(r.pass);
  std::set<std::string> kinds;
  for (const auto& c : r.counterexamples) kinds.insert(c.kind);
  EXPECT_TRUE(kinds.count("missing-projective"));
  EXPECT_TRUE(kinds.count("missing-injective"));
}

TEST(Verify, BuildMPassesOnGeneratedQuivers) {
  for (const auto& g : generated_corpus()) {
    ExtOracle o(g.q, FieldSpec{});
    EXPECT_TRUE(o.verify_n_cluster_tilting(g.n, build_M(g.q, g.n)).pass) << serialize_quiver(g.q);
  }
}

TEST(Verify, SearchFindsExactlyBuildM) {
  for (const auto& [q, n] : std::vector<std::pair<Quiver, long>>{{linear_quiver(5), 2}, {linear_quiver(7), 3}, {two_admissible(), 2}}) {
    ExtOracle o(q, FieldSpec{});
    auto found = o.search_cluster_tilting(n);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0], o.indices_of(build_M(q, n)));
  }
  ExtOracle o(three_admissible(), FieldSpec{});
  EXPECT_TRUE(o.search_cluster_tilting(2).empty());
}

TEST(NZ, Examples) {
  ExtOracle a5(linear_quiver(5), FieldSpec{});
  EXPECT_TRUE(a5.verify_nZ(2, build_M(linear_quiver(5), 2)).pass);
  Quiver d = three_admissible();
  ExtOracle od(d, FieldSpec{});
  auto r = od.verify_nZ(3, build_M(d, 3));
  EXPECT_FALSE(r.pass);
  for (const auto& c : r.counterexamples) EXPECT_EQ(c.i, 3);
  Quiver c4 = cycle_quiver(4);
  ExtOracle oc(c4, FieldSpec{});
  for (const auto& gens : cycle_family(c4, 2)) EXPECT_TRUE(oc.verify_nZ(2, gens).pass);
}

TEST(ARQuiverTest, LinearTwo) {
  ExtOracle o(linear_quiver(2), FieldSpec{});
  auto ar = o.ar_quiver();
  EXPECT_EQ(ar.nodes.size(), 3u);
  EXPECT_EQ(ar.arrow_count(), 2u);
  EXPECT_EQ(ar.tau.size(), 1u);
  EXPECT_TRUE(mesh_property(ar));
}

TEST(ARQuiverTest, MeshHoldsOnSmallQuivers) {
  for (const auto& q : small_zoo()) {
    ExtOracle o(q, FieldSpec{});
    auto ar = o.ar_quiver();
    EXPECT_TRUE(mesh_property(ar)) << serialize_quiver(q);
    std::size_t non_projective = 0;
    for (std::size_t x = 0; x < o.catalogue().size(); ++x) non_projective += !o.is_projective_index(x);
    EXPECT_EQ(ar.tau.size(), non_projective);
  }
}

TEST(ARQuiverTest, MeshDetectsBrokenQuiver) {
  ExtOracle o(load("a3.q"), FieldSpec{});
  auto ar = o.ar_quiver();
  ar.arrows.pop_back();
  EXPECT_FALSE(mesh_property(ar));
}
