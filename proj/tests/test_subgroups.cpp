#include <gtest/gtest.h>

#include "hgr/factory.hpp"
#include "hgr/subgroups.hpp"
#include "oracles.hpp"

using namespace hgr;

namespace {

PermGroup s3_on_three() {
  return closure({Permutation::from_cycles(3, {{0, 1, 2}}), Permutation::from_cycles(3, {{0, 1}})});
}

PermGroup a5_on_five() {
  return closure({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{0, 1, 2}})});
}

std::vector<std::vector<Elem>> lattice_members(const PermGroup& g) {
  std::vector<std::vector<Elem>> out;
  for (const auto& s : subgroup_lattice(g)) out.push_back(s.members);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Subgroups, TrivialGroup) {
  const auto subs = all_subgroups(PermGroup{});
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_EQ(subs[0].order(), 1u);
}

TEST(Subgroups, CyclicSix) {
  const auto subs = all_subgroups(build(cyclic(6)));
  ASSERT_EQ(subs.size(), 4u);
  std::vector<std::size_t> orders;
  for (const auto& s : subs) orders.push_back(s.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 3, 6}));
}

TEST(Subgroups, SymmetricThree) {
  const auto subs = all_subgroups(s3_on_three());
  std::map<std::size_t, int> by_order;
  for (const auto& s : subs) ++by_order[s.order()];
  EXPECT_EQ(by_order, (std::map<std::size_t, int>{{1, 1}, {2, 3}, {3, 1}, {6, 1}}));
}

TEST(Subgroups, LatticeMatchesBruteForceOnSmallCatalog) {
  for (std::uint64_t order : {4u, 6u, 10u, 12u}) {
    for (const auto& e : catalog(order)) {
      const auto expected = oracle::subgroups(oracle::table_of(e.group));
      EXPECT_EQ(lattice_members(e.group), expected) << to_string(e.spec);
    }
  }
}

TEST(Subgroups, LatticeIsSortedByOrderThenMembers) {
  const auto lattice = subgroup_lattice(build(dihedral(30)));
  for (std::size_t i = 1; i < lattice.size(); ++i) {
    const auto& a = lattice[i - 1].members;
    const auto& b = lattice[i].members;
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
}

TEST(Subgroups, LatticeBound) {
  SearchConfig cfg;
  cfg.subgroup_bound = 10;
  EXPECT_THROW(subgroup_lattice(build(cyclic(12)), cfg), BoundExceeded);
}

TEST(Regularity, Examples) {
  EXPECT_TRUE(is_regular(build(cyclic(6))));
  const auto s3 = s3_on_three();
  const auto rotations = closure({Permutation::from_cycles(3, {{0, 1, 2}})});
  EXPECT_TRUE(is_regular(rotations));
  EXPECT_FALSE(is_regular(s3));
  const auto hol = holomorph(build(cyclic(6)));
  // x -> -x fixes the identity of Z_6.
  const Elem inversion = hol.automorphism[1];
  const auto inv_group = hol.group.subgroup(closure_indices(hol.group, {inversion}));
  EXPECT_FALSE(is_regular(inv_group));
  std::vector<Elem> translations(hol.translation.begin(), hol.translation.end());
  std::sort(translations.begin(), translations.end());
  EXPECT_TRUE(is_regular(hol.group.subgroup(translations)));
}

TEST(Solvable, Examples) {
  EXPECT_TRUE(is_solvable(build(cyclic(15))));
  EXPECT_TRUE(is_solvable(build(direct_product({cyclic(2), cyclic(6)}))));
  EXPECT_TRUE(is_solvable(build(dihedral(30))));
  EXPECT_TRUE(is_solvable(build(alternating4())));
  EXPECT_FALSE(is_solvable(a5_on_five()));
}

TEST(Sylow, Examples) {
  const auto z6 = build(cyclic(6));
  EXPECT_EQ(sylow_subgroup(z6, 3).order(), 3u);
  const auto d30 = build(dihedral(30));
  const auto p5 = sylow_subgroup(d30, 5);
  EXPECT_EQ(p5.order(), 5u);
  EXPECT_TRUE(is_cyclic(p5));
  const auto p2 = sylow_subgroup(build(dihedral(12)), 2);
  EXPECT_EQ(p2.order(), 4u);
  EXPECT_FALSE(is_cyclic(p2));
  EXPECT_THROW(sylow_subgroup(z6, 5), PreconditionError);
}

TEST(CGroup, Examples) {
  EXPECT_TRUE(is_c_group(build(cyclic(15))));
  EXPECT_TRUE(is_c_group(build(dihedral(6))));
  EXPECT_FALSE(is_c_group(build(direct_product({cyclic(3), cyclic(3)}))));
  EXPECT_FALSE(is_c_group(build(dihedral(12))));
}

TEST(AlmostSylowCyclic, Examples) {
  for (const auto& e : catalog(30)) EXPECT_TRUE(is_almost_sylow_cyclic(e.group));
  EXPECT_TRUE(is_almost_sylow_cyclic(build(dihedral(12))));
  EXPECT_FALSE(is_almost_sylow_cyclic(build(direct_product({cyclic(2), cyclic(2), cyclic(2)}))));
  EXPECT_FALSE(is_almost_sylow_cyclic(build(direct_product({cyclic(3), cyclic(3)}))));
}

TEST(UniqueOddPart, Examples) {
  const auto d6 = build(dihedral(6));
  const auto k = unique_odd_part(d6);
  EXPECT_EQ(k.order(), 3u);
  EXPECT_TRUE(is_cyclic(k));
  const auto z6 = build(cyclic(6));
  EXPECT_EQ(unique_odd_part(z6).order(), 3u);
  const auto d30 = build(dihedral(30));
  const auto r = unique_odd_part(d30);
  EXPECT_EQ(r.order(), 15u);
  EXPECT_TRUE(is_cyclic(r));
  EXPECT_THROW(unique_odd_part(build(cyclic(4))), PreconditionError);
}

TEST(UniqueOddPart, IsTheOnlySubgroupOfOrderN) {
  for (std::uint64_t order : {6u, 10u, 14u, 22u, 30u}) {
    for (const auto& e : catalog(order)) {
      const auto k = unique_odd_part(e.group);
      std::size_t count = 0;
      for (const auto& s : all_subgroups(e.group)) {
        if (s.order() == order / 2) {
          ++count;
          EXPECT_EQ(s, k);
        }
      }
      EXPECT_EQ(count, 1u) << to_string(e.spec);
    }
  }
}

TEST(Characteristic, CyclicSixAllSubgroups) {
  const auto z6 = build(cyclic(6));
  EXPECT_EQ(characteristic_subgroups(z6, automorphism_group(z6)).size(), 4u);
}

TEST(Characteristic, TrivialAndFullAlwaysPresent) {
  for (std::uint64_t order : {6u, 10u, 12u, 30u}) {
    for (const auto& e : catalog(order)) {
      const auto ch = characteristic_subgroups(e.group, automorphism_group(e.group));
      ASSERT_GE(ch.size(), 1u);
      EXPECT_EQ(ch.front().order(), 1u);
      EXPECT_EQ(ch.back().order(), e.group.order());
    }
  }
}

TEST(Characteristic, DihedralSix) {
  // 1, <r>, D_6; the three reflections are swapped by inner automorphisms.
  const auto d6 = build(dihedral(6));
  std::vector<std::size_t> orders;
  for (const auto& s : characteristic_subgroups(d6, automorphism_group(d6))) orders.push_back(s.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 3, 6}));
}
