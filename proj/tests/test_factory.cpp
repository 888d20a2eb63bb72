#include <gtest/gtest.h>

#include "hgr/factory.hpp"

using namespace hgr;

namespace {

std::vector<std::string> catalog_texts(std::uint64_t order) {
  std::vector<std::string> out;
  for (const auto& e : catalog(order)) out.push_back(to_string(e.spec));
  return out;
}

}  // namespace

TEST(Build, Cyclic) {
  const auto g = build(cyclic(6));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.generators().size(), 1u);
  EXPECT_TRUE(is_cyclic(g));
  EXPECT_EQ(g.label(), "C6");
}

TEST(Build, NonabelianTwentyOne) {
  const auto g = build(semidirect_cc(7, 3, 2));
  EXPECT_EQ(g.order(), 21u);
  EXPECT_FALSE(g.is_abelian());
}

TEST(Build, TwistFifteenFour) {
  const auto g = build(semidirect_z2(15, 4));
  EXPECT_EQ(g.order(), 30u);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_FALSE(are_isomorphic(g, build(cyclic(30))).has_value());
  EXPECT_FALSE(are_isomorphic(g, build(dihedral(30))).has_value());
}

TEST(Build, DihedralAndProducts) {
  EXPECT_EQ(build(dihedral(2)).order(), 2u);
  EXPECT_EQ(build(dihedral(4)).order(), 4u);
  EXPECT_TRUE(are_isomorphic(build(dihedral(4)), build(direct_product({cyclic(2), cyclic(2)}))).has_value());
  const auto p = build(direct_product({cyclic(2), cyclic(3)}));
  EXPECT_EQ(p.order(), 6u);
  EXPECT_TRUE(are_isomorphic(p, build(cyclic(6))).has_value());
  EXPECT_EQ(build(alternating4()).order(), 12u);
  EXPECT_EQ(build(cyclic(1)).order(), 1u);
}

TEST(Build, HolomorphSpec) {
  const auto h = build(holomorph_of(cyclic(6)));
  EXPECT_EQ(h.order(), 12u);
  EXPECT_TRUE(are_isomorphic(h, build(dihedral(12))).has_value());
}

TEST(Holomorph, Orders) {
  EXPECT_EQ(holomorph(build(cyclic(3))).group.order(), 6u);
  EXPECT_EQ(holomorph(build(cyclic(3))).group.degree(), 3u);
  EXPECT_EQ(holomorph(build(dihedral(30))).group.order(), 3600u);
}

TEST(Holomorph, EmbeddingsAndTags) {
  const auto n = build(dihedral(10));
  const auto hol = holomorph(n);
  ASSERT_EQ(hol.group.order(), n.order() * hol.automorphisms.order());
  for (Elem x = 0; x < n.order(); ++x) {
    const auto& t = hol.group.element(hol.translation[x]);
    for (Elem y = 0; y < n.order(); ++y) EXPECT_EQ(t(y), n.mul(x, y));
  }
  for (Elem h = 0; h < hol.group.order(); ++h) {
    const auto [x, a] = hol.tag[h];
    EXPECT_EQ(hol.element(x, a), h);
    const auto& p = hol.group.element(h);
    for (Elem y = 0; y < n.order(); ++y) EXPECT_EQ(p(y), n.mul(x, hol.automorphisms.element(a)(y)));
  }
}

TEST(Catalog, Sizes) {
  EXPECT_EQ(catalog_texts(1), (std::vector<std::string>{"C1"}));
  EXPECT_EQ(catalog_texts(4), (std::vector<std::string>{"C4", "C2xC2"}));
  EXPECT_EQ(catalog_texts(6), (std::vector<std::string>{"C6", "D6"}));
  EXPECT_EQ(catalog_texts(30), (std::vector<std::string>{"C30", "D30", "SDZ2(15;4)", "SDZ2(15;11)"}));
  EXPECT_EQ(catalog_texts(12), (std::vector<std::string>{"C12", "C2xC6", "D12", "SD(3,4;2)", "A4"}));
  EXPECT_EQ(catalog(21).size(), 2u);
  EXPECT_EQ(catalog(42).size(), 6u);
  EXPECT_EQ(catalog(7).size(), 1u);
  EXPECT_THROW(catalog(8), PreconditionError);
  EXPECT_THROW(catalog(20), PreconditionError);
}

TEST(Catalog, EntriesArePairwiseNonIsomorphic) {
  for (std::uint64_t order : {6u, 12u, 30u, 42u}) {
    const auto cat = catalog(order);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      EXPECT_EQ(cat[i].group.order(), order);
      for (std::size_t j = i + 1; j < cat.size(); ++j) {
        EXPECT_FALSE(are_isomorphic(cat[i].group, cat[j].group).has_value());
      }
    }
  }
}

TEST(Catalog, IndexOfBuiltGroups) {
  EXPECT_EQ(catalog_index(build(semidirect_z2(15, 14))), std::optional<std::size_t>(1));
  EXPECT_EQ(catalog_index(build(semidirect_cc(3, 2, 2))), std::optional<std::size_t>(1));
  EXPECT_EQ(catalog_index(build(dihedral(8))), std::nullopt);
}

TEST(Twists, SquareRootsOfOne) {
  EXPECT_EQ(z2_twists(15), (std::vector<std::uint64_t>{1, 4, 11, 14}));
  EXPECT_EQ(z2_twists(3), (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(z2_twists(9), (std::vector<std::uint64_t>{1, 8}));
}

TEST(Burnside, Decompositions) {
  const auto c15 = decompose_burnside(build(cyclic(15)));
  ASSERT_TRUE(c15.has_value());
  EXPECT_EQ(c15->k, 15u);
  EXPECT_EQ(c15->l, 1u);
  const auto m21 = decompose_burnside(build(semidirect_cc(7, 3, 4)));
  ASSERT_TRUE(m21.has_value());
  EXPECT_EQ(m21->k, 7u);
  EXPECT_EQ(m21->l, 3u);
  EXPECT_TRUE(m21->t == 2 || m21->t == 4);
  EXPECT_FALSE(decompose_burnside(build(direct_product({cyclic(3), cyclic(3)}))).has_value());
  EXPECT_FALSE(decompose_burnside(build(alternating4())).has_value());
}

TEST(Burnside, RebuildIsIsomorphic) {
  for (std::uint64_t order : {6u, 10u, 30u, 42u}) {
    for (const auto& e : catalog(order)) {
      const auto p = decompose_burnside(e.group);
      ASSERT_TRUE(p.has_value()) << to_string(e.spec);
      EXPECT_EQ(p->k * p->l, order);
      EXPECT_TRUE(are_isomorphic(build(semidirect_cc(p->k, p->l, p->t)), e.group).has_value());
    }
  }
}

TEST(Shape, ExamplesAtThirty) {
  const auto d = shape_check_semidirect_z2(build(dihedral(30)));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->params.k * d->params.l, 15u);
  const auto c = shape_check_semidirect_z2(build(cyclic(30)));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->params.k, 15u);
  EXPECT_EQ(c->params.l, 1u);
  for (const auto& e : catalog(30)) EXPECT_TRUE(shape_check_semidirect_z2(e.group).has_value()) << to_string(e.spec);
}

TEST(Shape, FamilyMembership) {
  EXPECT_EQ(z2_family_twist(build(dihedral(30)), 15), std::optional<std::uint64_t>(14));
  EXPECT_EQ(z2_family_twist(build(cyclic(30)), 15), std::optional<std::uint64_t>(1));
  EXPECT_EQ(z2_family_twist(build(semidirect_z2(15, 11)), 15), std::optional<std::uint64_t>(11));
  // A non-cyclic order-21 subgroup rules out Z_21 x| Z_2.
  for (const auto& e : catalog(42)) {
    if (!is_cyclic(unique_odd_part(e.group))) {
      EXPECT_FALSE(z2_family_twist(e.group, 21).has_value());
    }
  }
}
