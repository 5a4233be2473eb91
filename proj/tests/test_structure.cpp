#include <gtest/gtest.h>

#include <random>

#include "coxkit/classify.hpp"
#include "coxkit/error.hpp"
#include "coxkit/structure.hpp"

using namespace coxkit;

namespace {

VertexSet set1(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= singleton(v - 1);
  return s;
}

EnumeratedGroup group_of(TypeLabel t) { return EnumeratedGroup(build_named(t)); }

SubgroupHandle intersect(const SubgroupHandle& a, const SubgroupHandle& b) {
  std::vector<ElementId> out;
  for (ElementId x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return SubgroupHandle(a.elements().empty() ? 0 : std::max(a.elements().back(), b.elements().back()) + 1,
                        out);
}

SubgroupHandle normalizer_of_parabolic(const EnumeratedGroup& g, VertexSet subset) {
  return normalizer(g, parabolic_subgroup(g, subset));
}

// Elements mapping the simple roots of I onto themselves.
SubgroupHandle stabilizer_of_simple_roots(const EnumeratedGroup& g, VertexSet subset) {
  std::vector<ElementId> out;
  for (ElementId w = 0; w < g.order(); ++w) {
    bool ok = true;
    for (int s : members(subset)) {
      RootId r = g.act(w, s);
      ok = ok && r < g.rank() && contains(subset, r);
    }
    if (ok) out.push_back(w);
  }
  return SubgroupHandle(g.order(), out);
}

std::vector<ElementId> involutions(const EnumeratedGroup& g) {
  std::vector<ElementId> out;
  for (ElementId w = 1; w < g.order(); ++w)
    if (g.multiply(w, w) == 0) out.push_back(w);
  return out;
}

std::vector<ElementId> class_representatives(const EnumeratedGroup& g,
                                             const std::vector<ElementId>& xs) {
  auto ids = conjugacy_class_ids(g);
  std::vector<ElementId> out;
  std::vector<int> seen;
  for (ElementId x : xs)
    if (std::find(seen.begin(), seen.end(), ids[x]) == seen.end()) {
      seen.push_back(ids[x]);
      out.push_back(x);
    }
  return out;
}

bool central_longest(const EnumeratedGroup& g, VertexSet subset) {
  auto l = longest_element(g, subset);
  for (int s : members(subset))
    if (l.sigma[s] != s) return false;
  return true;
}

std::vector<TypeLabel> core_catalog() {
  std::vector<TypeLabel> out;
  for (int n = 1; n <= 5; ++n) out.push_back(type_A(n));
  for (int n = 2; n <= 4; ++n) out.push_back(type_B(n));
  out.push_back(type_D(4));
  out.push_back(type_F4());
  out.push_back(type_H(3));
  for (int m = 5; m <= 12; ++m) out.push_back(type_I2(m));
  return out;
}

}  // namespace

TEST(Characters, CountAndMultiplicativity) {
  for (TypeLabel t : {type_B(3), type_F4(), type_I2(6), type_A(4), type_D(4)}) {
    EnumeratedGroup g = group_of(t);
    auto homs = homs_to_pm1(g.graph());
    EXPECT_EQ(homs.size(), std::size_t{1} << components(g.graph(), true).size()) << t.str();
    for (const Character& chi : homs) {
      auto values = character_values(g, chi);
      for (ElementId a = 0; a < g.order(); a += 7)
        for (ElementId b = 0; b < g.order(); b += 5)
          ASSERT_EQ(values[g.multiply(a, b)], values[a] * values[b]);
    }
  }
}

TEST(Characters, CountMatchesIndexTwoSubgroups) {
  for (TypeLabel t : core_catalog()) {
    EnumeratedGroup g = group_of(t);
    EXPECT_EQ(index_two_subgroups(g).size() + 1, homs_to_pm1(g.graph()).size()) << t.str();
  }
}

TEST(CenterFactor, ClosedFormMatchesSearch) {
  auto types = core_catalog();
  types.push_back(type_B(5));
  types.push_back(type_D(5));
  types.push_back(type_H(4));
  for (int m = 13; m <= 30; ++m) types.push_back(type_I2(m));
  for (TypeLabel t : types) {
    EnumeratedGroup g(build_named(t), 20000);
    auto closed = center_direct_factor(t);
    auto brute = center_factor_brute(g);
    EXPECT_EQ(closed.verdict, brute.verdict) << t.str();
    EXPECT_EQ(center_closed_form(g), center(g)) << t.str();
    if (closed.verdict == CenterVerdict::Yes && closed.complement->is_finite() &&
        closed.complement->family != Family::H3plus && g.order() <= 2 * kDefaultIsoCap) {
      FiniteGroup whole = to_finite_group(g);
      FiniteGroup k = subgroup_as_group(whole, *brute.complement);
      FiniteGroup expected = to_finite_group(EnumeratedGroup(build_named(*closed.complement)));
      EXPECT_TRUE(find_isomorphism(k, expected).has_value()) << t.str();
    }
  }
}

TEST(CenterFactor, Labels) {
  EXPECT_EQ(center_direct_factor(type_B(3)).complement, type_A(3));
  EXPECT_EQ(center_direct_factor(type_B(5)).complement, type_D(5));
  EXPECT_EQ(center_direct_factor(type_I2(6)).complement, type_A(2));
  EXPECT_EQ(center_direct_factor(type_I2(10)).complement, type_I2(5));
  EXPECT_EQ(center_direct_factor(type_E(7)).complement->family, Family::E7plus);
  EXPECT_EQ(center_direct_factor(type_H(3)).complement->family, Family::H3plus);
  EXPECT_EQ(center_direct_factor(type_A(1)).verdict, CenterVerdict::No);
  EXPECT_EQ(center_direct_factor(type_B(4)).verdict, CenterVerdict::No);
  EXPECT_EQ(center_direct_factor(type_E(8)).verdict, CenterVerdict::No);
  EXPECT_EQ(center_direct_factor(type_I2(8)).verdict, CenterVerdict::No);
  EXPECT_EQ(center_direct_factor(type_E(6)).verdict, CenterVerdict::CenterTrivial);
  EXPECT_EQ(center_direct_factor(type_D(5)).verdict, CenterVerdict::CenterTrivial);
  EXPECT_EQ(center_direct_factor(type_I2(9)).verdict, CenterVerdict::CenterTrivial);
  EXPECT_EQ(center_direct_factor(type_A(7)).verdict, CenterVerdict::CenterTrivial);
}

TEST(CenterFactor, Indecomposability) {
  for (int k = 1; k <= 5; ++k) {
    EXPECT_FALSE(is_directly_indecomposable(type_B(2 * k + 1)));
    EXPECT_TRUE(is_directly_indecomposable(type_B(2 * k)));
    EXPECT_FALSE(is_directly_indecomposable(type_I2(4 * k + 2)));
    EXPECT_TRUE(is_directly_indecomposable(type_I2(4 * k)));
  }
  EXPECT_FALSE(is_directly_indecomposable(type_E(7)));
  EXPECT_FALSE(is_directly_indecomposable(type_H(3)));
  EXPECT_TRUE(is_directly_indecomposable(type_H(4)));
  EXPECT_TRUE(is_directly_indecomposable(type_E(8)));
  EXPECT_TRUE(is_directly_indecomposable(type_D(6)));
  EXPECT_TRUE(is_directly_indecomposable(TypeLabel{Family::Ainf, 3}));
  std::string note;
  EXPECT_TRUE(is_directly_indecomposable(TypeLabel{Family::Unknown, 0}, &note));
  EXPECT_FALSE(note.empty());
}

TEST(EvenSubgroupH3, Properties) {
  EnumeratedGroup g = group_of(type_H(3));
  auto sign = character_values(g, sign_character(g.graph()));
  std::vector<ElementId> even;
  for (ElementId w = 0; w < g.order(); ++w)
    if (sign[w] == 1) even.push_back(w);
  FiniteGroup whole = to_finite_group(g);
  FiniteGroup plus = subgroup_as_group(whole, SubgroupHandle(g.order(), even));
  EXPECT_EQ(plus.order(), 60u);
  EXPECT_EQ(center(plus).size(), 1u);
  std::vector<ElementId> invs;
  for (ElementId x = 1; x < plus.order(); ++x)
    if (plus.multiply(x, x) == 0) invs.push_back(x);
  EXPECT_EQ(subgroup_closure(plus, invs).size(), 60u);
  for (const auto& ts : std::vector<std::vector<TypeLabel>>{
           {type_A(4)}, {type_I2(30)}, {type_A(2), type_I2(5)}, {type_A(1), type_I2(15)},
           {type_A(1), type_A(2), type_I2(5)}}) {
    CoxeterGraph product(std::vector<std::string>{});
    FiniteGroup p = cyclic_group(1);
    for (TypeLabel t : ts) p = direct_product(p, to_finite_group(group_of(t)));
    if (p.order() != 60) continue;
    EXPECT_FALSE(find_isomorphism(plus, p).has_value());
  }
}

TEST(CoreOfNormalizer, ClosedFormMatchesBruteForce) {
  for (TypeLabel t : core_catalog()) {
    EnumeratedGroup g = group_of(t);
    for (VertexSet subset = 0; subset <= g.graph().vertices(); ++subset)
      EXPECT_NO_THROW(core_of_normalizer(g, subset, true)) << t.str() << " " << subset;
  }
}

TEST(CoreOfNormalizer, D5AndA3AsD3) {
  EnumeratedGroup d5 = group_of(type_D(5));
  for (VertexSet subset = 0; subset <= d5.graph().vertices(); ++subset)
    EXPECT_NO_THROW(core_of_normalizer(d5, subset, true)) << subset;
  // A3 drawn as D3: the two leaves form S(D2).
  EnumeratedGroup a3 = group_of(type_A(3));
  auto d = core_of_normalizer(a3, set1({1, 3}), true);
  EXPECT_EQ(d.kind, SubgroupDescription::Kind::SpecialD);
  EXPECT_EQ(resolve(d, a3).size(), 4u);
}

TEST(CoreOfNormalizer, CaseLabels) {
  CoxeterGraph b3 = build_named(type_B(3));
  EXPECT_EQ(core_of_normalizer(b3, set1({1})).case_label, "(i)");
  EXPECT_EQ(core_of_normalizer(b3, set1({1, 2})).case_label, "(i)");
  EXPECT_EQ(core_of_normalizer(b3, set1({2})).case_label, "(iii)");
  EXPECT_EQ(core_of_normalizer(b3, 0).kind, SubgroupDescription::Kind::Whole);
  CoxeterGraph a2 = build_named(type_A(2));
  auto d = core_of_normalizer(a2, set1({1}));
  EXPECT_EQ(d.case_label, "(iii)");
  EXPECT_EQ(d.str(a2), "Z(W)");
  CoxeterGraph affine = parse_graph("vertices: a b c\nedge a b 3\nedge b c 3\nedge c a 3\n");
  EXPECT_THROW(core_of_normalizer(affine, set1({1})), InfiniteType);
}

TEST(Centralizer, ClosedFormMatchesBruteForce) {
  for (TypeLabel t : {type_A(3), type_A(4), type_B(2), type_B(3), type_B(4), type_D(4), type_F4(),
                      type_H(3), type_I2(6), type_I2(8)}) {
    EnumeratedGroup g = group_of(t);
    auto reps = class_representatives(g, involutions(g));
    for (ElementId x : reps) EXPECT_NO_THROW(centralizer_of_normal_closure(g, {x}, true)) << t.str();
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        EXPECT_NO_THROW(centralizer_of_normal_closure(g, {reps[i], reps[j]}, true)) << t.str();
  }
}

TEST(Centralizer, RejectsNonInvolutions) {
  EnumeratedGroup g = group_of(type_A(2));
  EXPECT_THROW(centralizer_of_normal_closure(g, {g.multiply(g.generator(0), g.generator(1))}, false),
               Error);
}

TEST(Centralizer, LongestElementOfParabolic) {
  for (TypeLabel t : {type_B(3), type_D(4), type_H(3), type_A(4), type_F4()}) {
    EnumeratedGroup g = group_of(t);
    for (VertexSet subset = 1; subset <= g.graph().vertices(); ++subset) {
      if (!central_longest(g, subset)) continue;
      auto l = longest_element(g, subset);
      EXPECT_EQ(centralizer(g, {l.element}), normalizer_of_parabolic(g, subset)) << t.str();
    }
  }
}

TEST(Centralizer, NormalSubgroupFromLongestElements) {
  for (TypeLabel t : {type_B(3), type_D(4), type_A(3), type_H(3), type_B(4)}) {
    EnumeratedGroup g = group_of(t);
    for (ElementId x : class_representatives(g, involutions(g))) {
      SubgroupHandle h = subgroup_closure(g, {x}, true);
      auto xs = x_h(g, h);
      std::vector<ElementId> gens;
      SubgroupHandle meet = whole_group(g);
      for (const LongestPair& p : xs) {
        gens.push_back(p.element);
        meet = intersect(meet, core_of_normalizer_brute(g, p.subset));
      }
      EXPECT_EQ(subgroup_closure(g, gens, true), h) << t.str();
      EXPECT_EQ(meet, centralizer(g, h.elements())) << t.str();
    }
  }
}

TEST(CoreProperties, MonotoneIntersectionAndTrivialMeet) {
  EnumeratedGroup g = group_of(type_B(3));
  std::mt19937 rng(11);
  std::uniform_int_distribution<ElementId> pick(0, g.order() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    SubgroupHandle h1 = subgroup_closure(g, {pick(rng)});
    SubgroupHandle h2 = subgroup_closure(g, {h1.elements().back(), pick(rng)});
    SubgroupHandle c1 = core(g, h1), c2 = core(g, h2);
    EXPECT_TRUE(c1.subset_of(c2));
    SubgroupHandle k = subgroup_closure(g, {pick(rng), pick(rng)});
    EXPECT_EQ(core(g, intersect(h2, k)), intersect(c2, core(g, k)));
    if (c2.subset_of(k)) EXPECT_TRUE(c2.subset_of(core(g, k)));
    for (ElementId w = 0; w < g.order(); ++w) {
      std::vector<ElementId> conj;
      for (ElementId x : h1.elements()) conj.push_back(g.conjugate(w, x));
      if (intersect(SubgroupHandle(g.order(), conj), h2).size() == 1) {
        EXPECT_EQ(intersect(h1, c2).size(), 1u);
        break;
      }
    }
  }
}

TEST(CoreProperties, CentralizerOfNormalClosure) {
  EnumeratedGroup g = group_of(type_D(4));
  std::mt19937 rng(5);
  std::uniform_int_distribution<ElementId> pick(0, g.order() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ElementId> xs{pick(rng), pick(rng)};
    SubgroupHandle lhs = centralizer(g, subgroup_closure(g, xs, true).elements());
    EXPECT_EQ(lhs, core(g, centralizer(g, xs)));
    EXPECT_EQ(lhs, intersect(core(g, centralizer(g, {xs[0]})), core(g, centralizer(g, {xs[1]}))));
  }
}

TEST(Normalizers, BrinkHowlettSplitting) {
  for (TypeLabel t : {type_B(3), type_D(4), type_A(4), type_H(3)}) {
    EnumeratedGroup g = group_of(t);
    for (VertexSet subset = 1; subset < g.graph().vertices(); ++subset) {
      SubgroupHandle w_i = parabolic_subgroup(g, subset);
      SubgroupHandle n_i = stabilizer_of_simple_roots(g, subset);
      SubgroupHandle n = normalizer(g, w_i);
      EXPECT_EQ(intersect(w_i, n_i).size(), 1u);
      EXPECT_EQ(w_i.size() * n_i.size(), n.size());
      for (ElementId x : n_i.elements()) EXPECT_TRUE(n.contains(x));
    }
  }
}

TEST(Normalizers, IntersectionAndSeparatedSubsets) {
  for (TypeLabel t : {type_B(3), type_D(4), type_A(4)}) {
    EnumeratedGroup g = group_of(t);
    const VertexSet all = g.graph().vertices();
    std::vector<SubgroupHandle> n, c;
    for (VertexSet s = 0; s <= all; ++s) {
      n.push_back(normalizer_of_parabolic(g, s));
      c.push_back(core(g, n.back()));
    }
    for (VertexSet i = 0; i <= all; ++i)
      for (VertexSet j = 0; j <= all; ++j) {
        EXPECT_TRUE(intersect(n[i], n[j]).subset_of(n[i & j]));
        if ((i & j) == i && ((j & ~i) & ~perp(g.graph(), i)) == 0) {
          EXPECT_TRUE(intersect(n[j], n[i]).subset_of(n[j & ~i]));
          EXPECT_TRUE(intersect(c[j], c[i]).subset_of(c[j & ~i]));
        }
      }
  }
}

TEST(Normalizers, ExpandingCuttingShifting) {
  for (TypeLabel t : {type_B(4), type_D(4), type_A(4), type_F4(), type_H(3)}) {
    EnumeratedGroup g = group_of(t);
    const CoxeterGraph& gr = g.graph();
    const int n = gr.size();
    std::vector<SubgroupHandle> c;
    for (VertexSet s = 0; s <= gr.vertices(); ++s) c.push_back(core_of_normalizer_brute(g, s));
    // Graph distances.
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, 1000));
    for (int a = 0; a < n; ++a) {
      dist[a][a] = 0;
      for (int b = 0; b < n; ++b)
        if (gr.adjacent(a, b)) dist[a][b] = 1;
    }
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) dist[a][b] = std::min(dist[a][b], dist[a][k] + dist[k][b]);
    for (VertexSet i = 0; i <= gr.vertices(); ++i)
      for (int s = 0; s < n; ++s) {
        if (contains(i, s)) continue;
        if (!contains(perp(gr, i), s)) EXPECT_TRUE(c[i].subset_of(c[i | singleton(s)])) << t.str();
        if (i == 0) continue;
        int d = 1000;
        for (int v : members(i)) d = std::min(d, dist[s][v]);
        for (int k = d + 1; k < n; ++k) {
          VertexSet j = 0;
          for (int v : members(i))
            if (dist[s][v] >= k) j |= singleton(v);
          EXPECT_TRUE(c[i].subset_of(c[j])) << t.str();
        }
      }
    for (VertexSet comp : components(gr, true))
      for (int a : members(comp))
        for (int b : members(comp)) EXPECT_EQ(c[singleton(a)], c[singleton(b)]) << t.str();
    for (VertexSet i = 1; i < gr.vertices(); ++i)
      EXPECT_EQ(core(g, parabolic_subgroup(g, i)).size(), 1u) << t.str();
  }
}

TEST(Normalizers, MaximalParabolic) {
  for (TypeLabel t : {type_B(3), type_B(4), type_D(4), type_H(3), type_F4(), type_A(3)}) {
    EnumeratedGroup g = group_of(t);
    auto w0 = longest_element(g, g.graph().vertices()).element;
    for (int s = 0; s < g.rank(); ++s) {
      VertexSet i = g.graph().vertices() & ~singleton(s);
      SubgroupHandle n = normalizer_of_parabolic(g, i);
      if (!n.contains(w0)) continue;
      SubgroupHandle w_i = parabolic_subgroup(g, i);
      if (w_i.contains(w0)) {
        EXPECT_EQ(n, w_i);
      } else {
        std::vector<ElementId> gens = w_i.elements();
        gens.push_back(w0);
        EXPECT_EQ(n, subgroup_closure(g, gens)) << t.str();
        EXPECT_EQ(n.size(), 2 * w_i.size());
      }
    }
  }
}

TEST(Richardson, EveryInvolutionHasAForm) {
  for (TypeLabel t : {type_B(3), type_D(4), type_A(4), type_H(3), type_F4(), type_I2(8)}) {
    EnumeratedGroup g = group_of(t);
    auto candidates = richardson_candidates(g);
    for (ElementId w : involutions(g)) {
      RichardsonForm f = richardson_form(g, w, candidates);
      EXPECT_TRUE(central_longest(g, f.subset));
      EXPECT_EQ(g.conjugate(f.conjugator, w), f.longest) << t.str();
      EXPECT_EQ(longest_element(g, f.subset).element, f.longest);
    }
  }
}

TEST(Richardson, PicksSmallestSubset) {
  EnumeratedGroup g = group_of(type_A(3));
  RichardsonForm f = richardson_form(g, g.generator(2));
  EXPECT_EQ(f.subset, set1({1}));
  EXPECT_THROW(richardson_form(g, 0), Error);
}
