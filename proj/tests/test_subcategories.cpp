#include <gtest/gtest.h>

#include "support.hpp"

using namespace qct;
using namespace qct::testing;

namespace {

std::set<std::string> extras(const Quiver& q, const ModuleList& l) {
  std::set<std::string> s;
  for (const auto& m : l)
    if (!is_projective(q, m)) s.insert(module_name(q, m));
  return s;
}

std::set<std::string> lattice_list(long n) {
  Quiver q = lattice23();
  std::map<long, std::vector<std::string>> paper{
      {2, {"S11", "S9", "S7", "S5", "S3", "1/14", "S23", "S21", "S19", "S17", "S15", "1/2"}},
      {3, {"S10", "S7", "S4", "1/14", "S22", "S19", "S16", "1/2"}},
      {4, {"S9", "S5", "1/14", "S21", "S17", "1/2"}},
      {6, {"S7", "1/14", "S19", "1/2"}},
      {12, {"1/14", "1/2"}},
  };
  return name_set(q, paper.at(n));
}

}  // namespace

TEST(CycleFamily, SizesOfMembers) {
  for (std::size_t m : {2u, 4u, 6u})
    for (long n = 2; n <= static_cast<long>(m); ++n) {
      if (m % n) continue;
      Quiver q = cycle_quiver(m);
      auto fam = cycle_family(q, n);
      ASSERT_FALSE(fam.empty());
      for (const auto& g : fam) {
        EXPECT_EQ(g.size(), m + m / n);
        EXPECT_TRUE(projective_generators(q).subset_of(g));
        for (const auto& x : extras(q, g)) EXPECT_EQ(x[0], 'S');
      }
    }
  EXPECT_THROW(cycle_family(cycle_quiver(4), 3), PreconditionError);
}

TEST(CycleFamily, MatchesExhaustiveSearch) {
  for (auto [m, n] : std::vector<std::pair<std::size_t, long>>{{2, 2}, {3, 3}, {4, 2}, {4, 4}, {6, 3}, {6, 2}}) {
    Quiver q = cycle_quiver(m);
    ExtOracle o(q, FieldSpec{});
    std::set<std::vector<std::size_t>> fam;
    for (const auto& g : cycle_family(q, n)) fam.insert(o.indices_of(g));
    auto found = o.search_cluster_tilting(n);
    EXPECT_EQ(fam, std::set<std::vector<std::size_t>>(found.begin(), found.end())) << m << " " << n;
    for (const auto& g : cycle_family(q, n)) EXPECT_TRUE(o.verify_n_cluster_tilting(n, g).pass);
  }
}

TEST(Subcategories, Dispatch) {
  EXPECT_EQ(cluster_tilting_subcategories(three_admissible(), 2).size(), 0u);
  auto a1 = cluster_tilting_subcategories(linear_quiver(1), 5);
  ASSERT_EQ(a1.size(), 1u);
  EXPECT_EQ(a1[0].size(), 1u);
  auto one = cluster_tilting_subcategories(two_admissible(), 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].size(), 22u);
  EXPECT_EQ(cluster_tilting_subcategories(cycle_quiver(4), 2).size(), cycle_family(cycle_quiver(4), 2).size());
  auto l12 = cluster_tilting_subcategories(lattice23(), 12);
  ASSERT_EQ(l12.size(), 1u);
  EXPECT_EQ(extras(lattice23(), l12[0]), lattice_list(12));
  EXPECT_THROW(cluster_tilting_subcategories(load("two_loops.q"), 2), DisconnectedQuiver);
}

TEST(Lattice, GeneratorsMatchList) {
  Quiver q = lattice23();
  auto lat = lattice_of_ct(q);
  EXPECT_EQ(lat.N, 12);
  std::vector<long> keys;
  for (const auto& [n, g] : lat.subcategories) keys.push_back(n);
  EXPECT_EQ(keys, (std::vector<long>{1, 2, 3, 4, 6, 12}));
  for (long n : {2, 3, 4, 6, 12}) EXPECT_EQ(extras(q, lat.subcategories.at(n)), lattice_list(n)) << n;
  std::map<long, std::size_t> sizes{{12, 25}, {6, 27}, {4, 29}, {3, 31}, {2, 35}, {1, 47}};
  for (auto [n, s] : sizes) EXPECT_EQ(lat.subcategories.at(n).indecomposables().size(), s);
}

TEST(Lattice, InclusionIsReverseDivisibility) {
  auto lat = lattice_of_ct(lattice23());
  for (const auto& [n, a] : lat.subcategories)
    for (const auto& [m, b] : lat.subcategories) EXPECT_EQ(lat.includes(n, m), n % m == 0) << n << " " << m;
  EXPECT_EQ(lat.covers.size(), 7u);
  for (auto [n, m] : lat.covers) {
    EXPECT_EQ(m % n, 0);
    EXPECT_TRUE(lat.includes(m, n));
  }
  EXPECT_EQ(CTLattice::meet(4, 6), 12);
  EXPECT_EQ(CTLattice::join(4, 6), 2);
}

TEST(Lattice, InclusionOnGeneratedQuivers) {
  for (const auto& g : generated_corpus()) {
    auto lat = lattice_of_ct(g.q);
    for (const auto& [n, a] : lat.subcategories)
      for (const auto& [m, b] : lat.subcategories) EXPECT_EQ(lat.includes(n, m), n % m == 0);
  }
}

TEST(Lattice, SmallCases) {
  auto lat = lattice_of_ct(linear_quiver(2));
  EXPECT_EQ(lat.N, 1);
  EXPECT_EQ(lat.subcategories.size(), 1u);
  EXPECT_TRUE(lat.covers.empty());
  EXPECT_THROW(lattice_of_ct(cycle_quiver(4)), PreconditionError);
}
