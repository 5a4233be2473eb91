#include <gtest/gtest.h>

#include <random>

#include "coxkit/error.hpp"
#include "coxkit/isomorph.hpp"

using namespace coxkit;

namespace {

ComponentMultiset labels(std::initializer_list<TypeLabel> ts) {
  ComponentMultiset m;
  for (TypeLabel t : ts) m.finite_part.push_back(canonical(t));
  std::sort(m.finite_part.begin(), m.finite_part.end());
  return m;
}

CoxeterGraph disjoint(const std::vector<TypeLabel>& ts) { return product_graph(ts); }

}  // namespace

TEST(Refinement, Examples) {
  EXPECT_EQ(admissible_refinement(labels({type_B(3)})).finite_part,
            (std::vector<TypeLabel>{type_A(1), type_A(3)}));
  EXPECT_EQ(admissible_refinement(labels({type_E(7)})).finite_part,
            (std::vector<TypeLabel>{type_A(1), TypeLabel{Family::E7plus, 7}}));
  EXPECT_EQ(admissible_refinement(labels({type_A(5)})).finite_part, (std::vector<TypeLabel>{type_A(5)}));
  EXPECT_EQ(admissible_refinement(labels({type_I2(10)})).finite_part,
            (std::vector<TypeLabel>{type_A(1), type_I2(5)}));
  EXPECT_EQ(admissible_refinement(labels({type_B(5)})).finite_part,
            (std::vector<TypeLabel>{type_A(1), type_D(5)}));
}

TEST(Refinement, GroupedCountsAgreeWithRefinement) {
  std::vector<TypeLabel> pool{type_A(1), type_A(2), type_A(3), type_A(4), type_B(2), type_B(3),
                              type_B(4), type_B(5), type_D(4), type_D(5), type_D(6), type_E(6),
                              type_E(7), type_E(8), type_F4(), type_H(3), type_H(4), type_I2(5),
                              type_I2(6), type_I2(8), type_I2(10), type_I2(12), type_I2(7)};
  // Exchanges that keep the group up to isomorphism.
  const std::vector<std::pair<std::vector<TypeLabel>, std::vector<TypeLabel>>> swaps{
      {{type_B(3)}, {type_A(1), type_A(3)}},
      {{type_B(5)}, {type_A(1), type_D(5)}},
      {{type_I2(6)}, {type_A(1), type_A(2)}},
      {{type_I2(10)}, {type_A(1), type_I2(5)}},
      {{type_E(7)}, {type_E(7)}}};
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_swap(0, swaps.size() - 1);
  std::uniform_int_distribution<int> size(0, 4);
  int equal = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    ComponentMultiset a, b;
    for (int i = size(rng); i > 0; --i) {
      const auto& [left, right] = swaps[pick_swap(rng)];
      a.finite_part.insert(a.finite_part.end(), left.begin(), left.end());
      b.finite_part.insert(b.finite_part.end(), right.begin(), right.end());
    }
    for (int i = size(rng); i > 0; --i) {
      TypeLabel t = pool[pick(rng)];
      a.finite_part.push_back(t);
      if (trial % 2 == 0) b.finite_part.push_back(t);
    }
    if (trial % 2 == 1)
      for (int i = size(rng); i > 0; --i) b.finite_part.push_back(pool[pick(rng)]);
    std::sort(a.finite_part.begin(), a.finite_part.end());
    std::sort(b.finite_part.begin(), b.finite_part.end());
    const bool counts = condition_two_counts(a.finite_part) == condition_two_counts(b.finite_part);
    const bool refined = admissible_refinement(a).finite_part == admissible_refinement(b).finite_part;
    ASSERT_EQ(counts, refined) << a.str() << " vs " << b.str();
    equal += counts;
  }
  EXPECT_GT(equal, 1000);
}

TEST(Decider, Examples) {
  EXPECT_EQ(coxeter_isomorphic(build_named(type_B(3)), disjoint({type_A(1), type_A(3)})), Verdict::Yes);
  EXPECT_EQ(coxeter_isomorphic(build_named(type_I2(6)), disjoint({type_A(1), type_A(2)})), Verdict::Yes);
  EXPECT_EQ(coxeter_isomorphic(build_named(type_B(2)), disjoint({type_A(1), type_A(1)})), Verdict::No);
  EXPECT_EQ(coxeter_isomorphic(build_named(type_E(7)), build_named(type_E(7))), Verdict::Yes);
  EXPECT_EQ(coxeter_isomorphic(labels({type_B(5), type_A(1)}), labels({type_D(5), type_B(3)})),
            Verdict::No);
  EXPECT_EQ(coxeter_isomorphic(labels({type_B(5), type_B(3)}), labels({type_D(5), type_A(1), type_A(1), type_A(3)})),
            Verdict::Yes);
}

TEST(Decider, InfiniteComponents) {
  auto tri = parse_graph("vertices: a b c\nedge a b 3\nedge b c 3\nedge c a 3\n");
  auto square = parse_graph("vertices: a b c d\nedge a b 3\nedge b c 3\nedge c d 3\nedge d a 3\n");
  auto tri2 = parse_graph("vertices: x y z\nedge y z 3\nedge x y 3\nedge z x 3\n");
  EXPECT_EQ(coxeter_isomorphic(tri, tri2), Verdict::Yes);
  EXPECT_EQ(coxeter_isomorphic(tri, square), Verdict::Unknown);
  EXPECT_EQ(coxeter_isomorphic(parse_component_list("Ainf,A1"), parse_component_list("A1, Ainf")),
            Verdict::Yes);
  EXPECT_EQ(coxeter_isomorphic(parse_component_list("Ainf"), parse_component_list("Binf")), Verdict::No);
  EXPECT_EQ(coxeter_isomorphic(parse_component_list("Ainf,B3"), parse_component_list("Ainf,A1,A3")),
            Verdict::Yes);
  EXPECT_EQ(parse_component_list("B3,Ainf").str(), "{B3,Ainf}");
}

TEST(Decider, SoundOnSmallProducts) {
  auto sets = catalog_multisets(48);
  std::vector<ProductGroup> groups;
  for (const auto& s : sets) groups.emplace_back(s);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i; j < sets.size(); ++j) {
      ComponentMultiset a, b;
      a.finite_part = sets[i];
      b.finite_part = sets[j];
      Verdict v = coxeter_isomorphic(a, b);
      ASSERT_NE(v, Verdict::Unknown);
      bool iso = groups[i].group().order() == groups[j].group().order() &&
                 find_isomorphism(groups[i].group(), groups[j].group()).has_value();
      EXPECT_EQ(v == Verdict::Yes, iso) << a.str() << " vs " << b.str();
    }
}

TEST(FactorIso, IdentitySwapAndFlat) {
  ProductGroup g({type_A(1), type_A(2)});
  ElementMap id(g.group().order());
  for (ElementId w = 0; w < id.size(); ++w) id[w] = w;
  auto d = factor_isomorphism(id, g, g);
  EXPECT_EQ(d.phi, (std::vector<int>{0, 1}));
  for (ElementId w = 0; w < id.size(); ++w) EXPECT_EQ(d.g_z[w], g.keep_factor(0, w));

  ProductGroup gg({type_A(2), type_A(2)});
  ElementMap swap(gg.group().order());
  for (ElementId w = 0; w < swap.size(); ++w)
    swap[w] = gg.group().multiply(gg.embed(0, gg.project(1, w)), gg.embed(1, gg.project(0, w)));
  auto s = factor_isomorphism(swap, gg, gg);
  EXPECT_EQ(s.phi, (std::vector<int>{1, 0}));
  for (ElementId z : s.g_z) EXPECT_EQ(z, 0u);

  // f = h-flat with h the sign of the A2 factor landing in the A1 factor.
  HomMonoid m(g.group());
  CentralHom h = m.trivial();
  for (const CentralHom& c : m.all()) {
    bool ok = c(g.embed(0, 1)) == 0;
    bool nontrivial = false;
    for (ElementId w = 0; w < id.size(); ++w) nontrivial = nontrivial || c(w) != 0;
    if (ok && nontrivial) h = c;
  }
  ElementMap f = m.flat(h);
  auto r = factor_isomorphism(f, g, g);
  EXPECT_EQ(r.phi, (std::vector<int>{0, 1}));
  for (ElementId x = 0; x < 6; ++x) EXPECT_EQ(r.g_z[g.embed(1, x)], h(g.embed(1, x)));
  EXPECT_EQ(r.g_z[g.embed(0, 1)], g.embed(0, 1));
}

TEST(FactorIso, AllAutomorphismsReconstruct) {
  for (const auto& factors : std::vector<std::vector<TypeLabel>>{
           {type_A(1), type_A(1), type_A(2)}, {type_A(2), type_A(2)}, {type_A(1), type_B(2)},
           {type_A(1), type_A(3)}}) {
    ProductGroup g(factors);
    for (const ElementMap& f : automorphisms(g.group())) EXPECT_NO_THROW(factor_isomorphism(f, g, g));
  }
  ProductGroup g({type_A(2)});
  ElementMap bad(g.group().order(), 0);
  EXPECT_THROW(factor_isomorphism(bad, g, g), Error);
}

TEST(Aut, DecompositionMatchesBruteForce) {
  struct Case {
    std::vector<TypeLabel> factors;
    int h1, h2, h3, h4, total;
  };
  for (const Case& c : std::vector<Case>{{{type_A(1), type_A(2)}, 2, 6, 1, 1, 12},
                                         {{type_A(2), type_A(2)}, 1, 36, 2, 1, 72},
                                         {{type_A(1)}, 1, 1, 1, 1, 1}}) {
    ProductGroup g(c.factors);
    AutBudget b = aut_decomposition(g);
    EXPECT_EQ(b.h1, c.h1);
    EXPECT_EQ(b.h2, c.h2);
    EXPECT_EQ(b.h3, c.h3);
    EXPECT_EQ(b.h4, c.h4);
    EXPECT_EQ(b.total(), c.total);
    EXPECT_EQ(b.total(), automorphisms(g.group()).size());
  }
  for (const auto& factors : std::vector<std::vector<TypeLabel>>{
           {type_A(1), type_A(1)}, {type_B(2)}, {type_A(1), type_B(2)}, {type_A(3)}, {type_A(1), TypeLabel{Family::H3plus, 3}}}) {
    ProductGroup g(factors);
    EXPECT_EQ(aut_decomposition(g).total(), automorphisms(g.group()).size());
  }
  EXPECT_THROW(aut_decomposition(ProductGroup({type_B(3)})), Error);
}

TEST(Aut, SymmetricProductFormula) {
  EXPECT_EQ(aut_order_symproduct({0, 0, 2}), 72);
  EXPECT_EQ(aut_order_symproduct({0, 1, 1}), 12);
  EXPECT_EQ(aut_order_symproduct({5}), 1);
  EXPECT_EQ(aut_order_symproduct({0, 0, 0, 1}), 24);
  EXPECT_EQ(aut_order_symproduct({0, 2}), 6);
  EXPECT_EQ(aut_order_symproduct({0, 0, 0, 0, 0, 1}), 1440);
  for (const std::vector<int>& m : std::vector<std::vector<int>>{
           {0, 1, 1}, {0, 0, 2}, {0, 0, 0, 1}, {0, 2}, {1, 1, 1}, {0, 3}, {0, 1, 0, 1}}) {
    std::vector<TypeLabel> factors;
    for (std::size_t n = 2; n <= m.size(); ++n)
      for (int k = 0; k < m[n - 1]; ++k) factors.push_back(type_A(static_cast<int>(n) - 1));
    ProductGroup g(factors);
    EXPECT_EQ(aut_order_symproduct(m), automorphisms(g.group()).size());
  }
}

TEST(Catalog, Multisets) {
  auto labels = catalog_labels_up_to(24);
  EXPECT_EQ(labels.size(), 12u);  // A1 A2 A3 B2 I2(5..12)
  for (const auto& s : catalog_multisets(240)) {
    BigInt order = 1;
    for (TypeLabel t : s) order *= *group_order(t).value;
    EXPECT_LE(order, 240);
  }
}
