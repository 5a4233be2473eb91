#include "coxkit/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "coxkit/classify.hpp"
#include "coxkit/deodhar.hpp"
#include "coxkit/error.hpp"
#include "coxkit/hommonoid.hpp"
#include "coxkit/isomorph.hpp"
#include "coxkit/structure.hpp"

namespace coxkit {

namespace {

// Counts checks and keeps the first few failure messages.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  void fail(const std::string& what) { expect(false, what); }

  SuiteResult result(std::string name) const {
    SuiteResult r;
    r.name = std::move(name);
    r.checks = checks_;
    r.failures = failures_;
    r.passed = failures_ == 0 && checks_ > 0;
    r.detail = detail_.empty() ? std::to_string(checks_) + " checks" : detail_;
    return r;
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string detail_;
};

SubgroupHandle intersect(const SubgroupHandle& a, const SubgroupHandle& b, std::size_t order) {
  std::vector<ElementId> out;
  for (ElementId x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return SubgroupHandle(order, std::move(out));
}

std::vector<TypeLabel> order_catalog() {
  std::vector<TypeLabel> out;
  for (int n = 1; n <= 6; ++n) out.push_back(type_A(n));
  for (int n = 2; n <= 5; ++n) out.push_back(type_B(n));
  for (int n = 4; n <= 5; ++n) out.push_back(type_D(n));
  out.push_back(type_F4());
  out.push_back(type_H(3));
  out.push_back(type_H(4));
  for (int m = 3; m <= 14; ++m) out.push_back(canonical(type_I2(m)));
  return out;
}

// Irreducible catalog types with |W| <= max_order (I2(m) from m = 5).
std::vector<TypeLabel> irreducible_up_to(std::size_t max_order) {
  return catalog_labels_up_to(max_order);
}

std::vector<ElementId> involutions(const EnumeratedGroup& g) {
  std::vector<ElementId> out;
  for (ElementId w = 1; w < g.order(); ++w)
    if (g.multiply(w, w) == g.identity()) out.push_back(w);
  return out;
}

std::vector<ElementId> involution_class_reps(const EnumeratedGroup& g) {
  auto ids = conjugacy_class_ids(g);
  std::set<int> seen;
  std::vector<ElementId> out;
  for (ElementId x : involutions(g))
    if (seen.insert(ids[x]).second) out.push_back(x);
  return out;
}

bool central_in_parabolic(const EnumeratedGroup& g, VertexSet subset, ElementId x) {
  for (int s : members(subset))
    if (g.multiply(x, g.generator(s)) != g.multiply(g.generator(s), x)) return false;
  return true;
}

// ---- criterion 1
void orders_suite(Checker& c) {
  for (TypeLabel t : order_catalog()) {
    EnumeratedGroup g(build_named(t), 20000);
    c.expect(BigInt(g.order()) == *group_order(t).value, t.str() + " order");
  }
}

// ---- criterion 2
void deodhar_suite(Checker& c) {
  for (TypeLabel t : order_catalog()) {
    EnumeratedGroup g(build_named(t), 20000);
    const VertexSet all = g.graph().vertices();
    ElementId w0 = longest_element(g, all).element;
    auto d = deodhar_decompose(g, all);
    c.expect(reflection_product(g, d) == w0, t.str() + " product");
    c.expect(d.roots.size() % 2 == static_cast<std::size_t>(g.length(w0)) % 2, t.str() + " parity");
    std::vector<ElementId> refl;
    for (RootId r : d.roots) refl.push_back(g.id_of(reflection_of_root(r, g.roots())));
    for (std::size_t i = 0; i < refl.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        c.expect(g.multiply(refl[i], refl[j]) == g.multiply(refl[j], refl[i]), t.str() + " commute");
        double ip = pairing(g.roots().form(), g.roots().root(d.roots[i]), g.roots().root(d.roots[j]));
        c.expect(std::abs(ip) < 1e-9, t.str() + " orthogonal");
      }
  }
  EnumeratedGroup h3(build_named(type_H(3)));
  auto d = deodhar_decompose(h3, h3.graph().vertices());
  c.expect(d.sequence == std::vector<VertexSet>{0b101, 0b001, 0}, "H3 generator sequence");
  for (int n = 2; n <= 5; ++n) {
    EnumeratedGroup w(build_named(type_B(n)));
    auto db = deodhar_decompose(w, w.graph().vertices());
    bool ok = db.roots.size() == static_cast<std::size_t>(n) && db.roots.back() == 0;
    for (int i = n; ok && i >= 2; --i) {
      RootVector<double> expect = RootVector<double>::Zero(n);
      expect.head(i) = highest_roots(type_B(i)).front().coefficients;
      ok = db.roots[n - i] == w.roots().lookup(expect) && db.sequence[n - i] == prefix_set(i - 1);
    }
    c.expect(ok, "B" + std::to_string(n) + " chain");
  }
}

// ---- criterion 3
void core_suite(Checker& c) {
  for (TypeLabel t : irreducible_up_to(1152)) {
    EnumeratedGroup g(build_named(t));
    for (VertexSet i = 1; i < g.graph().vertices(); ++i) {
      auto d = core_of_normalizer(g.graph(), i);
      c.expect(resolve(d, g) == core_of_normalizer_brute(g, i),
               t.str() + " I=" + format_subset(g.graph(), i));
    }
  }
}

// ---- criterion 4
void centralizer_suite(Checker& c) {
  std::vector<TypeLabel> types{type_A(3), type_B(2), type_B(3), type_D(4), type_D(3),
                               type_H(3), type_F4()};
  for (int m = 5; m <= 10; ++m) types.push_back(type_I2(m));
  for (TypeLabel t : types) {
    EnumeratedGroup g(build_named(t));
    auto reps = involution_class_reps(g);
    std::set<std::vector<ElementId>> seen;
    for (std::size_t mask = 1; mask < (std::size_t{1} << reps.size()); ++mask) {
      std::vector<ElementId> xs;
      for (std::size_t k = 0; k < reps.size(); ++k)
        if ((mask >> k) & 1) xs.push_back(reps[k]);
      SubgroupHandle h = subgroup_closure(g, xs, true);
      if (!seen.insert(h.elements()).second) continue;
      auto d = centralizer_of_normal_closure(g, xs, false);
      c.expect(resolve(d, g) == centralizer(g, generating_set(g, h)),
               t.str() + " case " + d.case_label + " |H|=" + std::to_string(h.size()));
    }
  }
}

// ---- criterion 5
void center_factor_suite(Checker& c) {
  for (TypeLabel t : {type_B(3), type_B(4), type_D(4), type_F4(), type_H(3), type_I2(6), type_I2(8),
                      type_I2(10), type_I2(12)}) {
    EnumeratedGroup g(build_named(t));
    auto closed = center_direct_factor(t);
    auto brute = center_factor_brute(g);
    c.expect(closed.verdict == brute.verdict, t.str() + " verdict");
    if (brute.verdict != CenterVerdict::Yes || !brute.complement) continue;
    FiniteGroup whole = to_finite_group(g);
    FiniteGroup split = direct_product(cyclic_group(2), subgroup_as_group(whole, *brute.complement));
    c.expect(find_isomorphism(whole, split).has_value(), t.str() + " W = Z x complement");
  }
}

// ---- criterion 6
void properties_for(Checker& c, TypeLabel t) {
  EnumeratedGroup g(build_named(t));
  const CoxeterGraph& gr = g.graph();
  const std::size_t order = g.order();
  const VertexSet all = gr.vertices();
  const int n = gr.size();
  const std::string name = t.str();
  std::vector<SubgroupHandle> par, nor, cor;
  for (VertexSet i = 0; i <= all; ++i) {
    par.push_back(parabolic_subgroup(g, i));
    nor.push_back(normalizer(g, par.back()));
    cor.push_back(core(g, nor.back()));
  }
  for (VertexSet i = 0; i <= all; ++i) {
    auto l = longest_element(g, i);
    if (i != 0 && central_in_parabolic(g, i, l.element))
      c.expect(centralizer(g, {l.element}) == nor[i], name + " Z(w0(I)) = N(W_I)");
    // Normalizer splits as W_I . N_I.
    std::vector<ElementId> stab;
    for (ElementId w = 0; w < order; ++w) {
      bool ok = true;
      for (int s : members(i)) {
        RootId r = g.act(w, s);
        ok = ok && r < n && contains(i, r);
      }
      if (ok) stab.push_back(w);
    }
    SubgroupHandle n_i(order, stab);
    c.expect(intersect(par[i], n_i, order).size() == 1 && par[i].size() * n_i.size() == nor[i].size() &&
                 n_i.subset_of(nor[i]),
             name + " Brink-Howlett");
    if (i != 0 && i != all) c.expect(core(g, par[i]).size() == 1, name + " Core(W_I) = 1");
  }
  for (VertexSet i = 0; i <= all; ++i)
    for (VertexSet j = 0; j <= all; ++j) {
      c.expect(intersect(nor[i], nor[j], order).subset_of(nor[i & j]), name + " normalizers of intersections");
      if ((i & j) == i && ((j & ~i) & ~perp(gr, i)) == 0) {
        c.expect(intersect(nor[j], nor[i], order).subset_of(nor[j & ~i]), name + " separated N");
        c.expect(intersect(cor[j], cor[i], order).subset_of(cor[j & ~i]), name + " separated core");
      }
    }
  // Expanding, cutting, shifting.
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, 1 << 20));
  for (int a = 0; a < n; ++a) {
    dist[a][a] = 0;
    for (int b = 0; b < n; ++b)
      if (gr.adjacent(a, b)) dist[a][b] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) dist[a][b] = std::min(dist[a][b], dist[a][k] + dist[k][b]);
  for (VertexSet i = 0; i <= all; ++i)
    for (int s = 0; s < n; ++s) {
      if (contains(i, s)) continue;
      if (!contains(perp(gr, i), s)) c.expect(cor[i].subset_of(cor[i | singleton(s)]), name + " expanding");
      if (i == 0) continue;
      int d = 1 << 20;
      for (int v : members(i)) d = std::min(d, dist[s][v]);
      for (int k = d + 1; k < n; ++k) {
        VertexSet j = 0;
        for (int v : members(i))
          if (dist[s][v] >= k) j |= singleton(v);
        c.expect(cor[i].subset_of(cor[j]), name + " cutting");
      }
    }
  for (VertexSet comp : components(gr, true))
    for (int a : members(comp))
      for (int b : members(comp)) c.expect(cor[singleton(a)] == cor[singleton(b)], name + " shifting");
  // Maximal parabolics normalized by w0(S).
  ElementId w0 = longest_element(g, all).element;
  for (int s = 0; s < n; ++s) {
    VertexSet i = all & ~singleton(s);
    if (!nor[i].contains(w0) || par[i].contains(w0)) continue;
    std::vector<ElementId> gens = par[i].elements();
    gens.push_back(w0);
    c.expect(nor[i] == subgroup_closure(g, gens) && nor[i].size() == 2 * par[i].size(),
             name + " N(W_I) = W_I x <w0>");
  }
  // Core properties over the parabolics and their normalizers.
  std::vector<SubgroupHandle> family = par;
  family.insert(family.end(), nor.begin(), nor.end());
  std::vector<SubgroupHandle> cores;
  for (const auto& h : family) cores.push_back(core(g, h));
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = 0; b < family.size(); ++b) {
      const auto &h1 = family[a], &h2 = family[b];
      if (h1.subset_of(h2)) {
        c.expect(cores[a].subset_of(cores[b]), name + " monotone in the subgroup");
        bool disjoint_conjugate = false;
        for (ElementId w = 0; w < order && !disjoint_conjugate; ++w) {
          std::size_t meet = 0;
          for (ElementId x : h1.elements()) meet += h2.contains(g.conjugate(w, x));
          disjoint_conjugate = meet == 1;
        }
        if (disjoint_conjugate) c.expect(intersect(h1, cores[b], order).size() == 1, name + " trivial for disjoint conjugates");
      }
      if (cores[a].subset_of(h2)) c.expect(cores[a].subset_of(cores[b]), name + " contains normal subgroups inside");
      c.expect(core(g, intersect(h1, h2, order)) == intersect(cores[a], cores[b], order), name + " commutes with intersection");
    }
  // Centralizer of a normal closure is a core.
  std::vector<std::vector<ElementId>> sets;
  for (VertexSet i = 1; i <= all; ++i) sets.push_back({longest_element(g, i).element});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) sets.push_back({g.generator(a), g.generator(b)});
  for (const auto& xs : sets) {
    SubgroupHandle lhs = centralizer(g, generating_set(g, subgroup_closure(g, xs, true)));
    SubgroupHandle meet = whole_group(g);
    for (ElementId x : xs) meet = intersect(meet, core(g, centralizer(g, {x})), order);
    c.expect(lhs == core(g, centralizer(g, xs)) && lhs == meet, name + " centralizer/core");
  }
}

void special_battery(Checker& c) {
  auto meet_of_normalizers = [](const EnumeratedGroup& w, int from, int to) {
    SubgroupHandle meet = whole_group(w);
    for (int i = from; i < to; ++i)
      meet = intersect(meet, normalizer(w, parabolic_subgroup(w, prefix_set(i))), w.order());
    return meet;
  };
  for (int n = 2; n <= 4; ++n) {
    EnumeratedGroup w(build_named(type_B(n)));
    c.expect(meet_of_normalizers(w, 1, n) == special_subgroup(w, SpecialFamily::B, n),
             "B" + std::to_string(n) + " meet of normalizers");
    auto w0 = [&](int i) { return i == 0 ? w.identity() : longest_element(w, prefix_set(i)).element; };
    auto s = [&](int i) { return w.generator(i - 1); };
    for (int i = 2; i + 1 <= n; ++i)
      c.expect(w.conjugate(s(i + 1), w0(i)) == w.multiply(w.multiply(w0(i - 1), w0(i)), w0(i + 1)),
               "B relation");
    c.expect(w.conjugate(s(2), s(1)) == w.multiply(s(1), w0(2)), "B relation s2 s1 s2");
  }
  for (int n = 3; n <= 4; ++n) {
    EnumeratedGroup w(build_named(type_D(n)));
    GraphIso tau(n);
    for (int i = 0; i < n; ++i) tau[i] = i;
    auto gens = special_generators(w, SpecialFamily::D, tau);
    gens.push_back(w.generator(0));
    c.expect(meet_of_normalizers(w, 2, n) == subgroup_closure(w, gens),
             "D" + std::to_string(n) + " meet of normalizers");
    auto w0 = [&](int i) { return longest_element(w, prefix_set(i)).element; };
    auto s = [&](int i) { return w.generator(i - 1); };
    c.expect(w.conjugate(s(3), w0(2)) == w.multiply(w0(2), w0(3)), "D relation s3");
    for (int i = 3; i + 1 <= n; ++i)
      c.expect(w.conjugate(s(i + 1), w0(i)) == w.multiply(w.multiply(w0(i - 1), w0(i)), w0(i + 1)),
               "D relation");
    for (int i = 2; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        c.expect(w.multiply(w0(i), w0(j)) == w.multiply(w0(j), w0(i)), "D commuting");
    for (int k = 1; 2 * k + 1 <= n; ++k) {
      ElementId odd = w0(2 * k + 1);
      c.expect(w.conjugate(s(1), odd) == w.multiply(w0(2), odd) &&
                   w.conjugate(s(2), odd) == w.multiply(w0(2), odd),
               "D odd relation");
    }
  }
}

void properties_suite(Checker& c) {
  for (TypeLabel t : irreducible_up_to(400)) properties_for(c, t);
  special_battery(c);
}

// ---- criterion 7
void isomorphism_suite(Checker& c, std::mt19937_64& rng) {
  auto sets = catalog_multisets(240);
  std::vector<ProductGroup> groups;
  for (const auto& s : sets) groups.emplace_back(s);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i; j < sets.size(); ++j) {
      ComponentMultiset a, b;
      a.finite_part = sets[i];
      b.finite_part = sets[j];
      Verdict v = coxeter_isomorphic(a, b);
      bool iso = false;
      if (groups[i].group().order() == groups[j].group().order())
        iso = find_isomorphism(groups[i].group(), groups[j].group(), 240).has_value();
      c.expect(v == (iso ? Verdict::Yes : Verdict::No), a.str() + " vs " + b.str());
    }
  std::vector<TypeLabel> pool{type_A(1), type_A(2), type_A(3), type_A(4), type_A(5), type_B(2),
                              type_B(3), type_B(4), type_B(5), type_B(7), type_D(4), type_D(5),
                              type_D(7), type_E(6), type_E(7), type_E(8), type_F4(), type_H(3),
                              type_H(4), type_I2(5), type_I2(6), type_I2(7), type_I2(8),
                              type_I2(10), type_I2(12), type_I2(14)};
  const std::vector<std::pair<std::vector<TypeLabel>, std::vector<TypeLabel>>> swaps{
      {{type_B(3)}, {type_A(1), type_A(3)}}, {{type_B(5)}, {type_A(1), type_D(5)}},
      {{type_B(7)}, {type_A(1), type_D(7)}}, {{type_I2(6)}, {type_A(1), type_A(2)}},
      {{type_I2(10)}, {type_A(1), type_I2(5)}}, {{type_I2(14)}, {type_A(1), type_I2(7)}}};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), pick_swap(0, swaps.size() - 1);
  std::uniform_int_distribution<int> size(0, 4);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<TypeLabel> a, b;
    for (int k = size(rng); k > 0; --k) {
      const auto& [left, right] = swaps[pick_swap(rng)];
      a.insert(a.end(), left.begin(), left.end());
      b.insert(b.end(), right.begin(), right.end());
    }
    for (int k = size(rng); k > 0; --k) {
      TypeLabel t = pool[pick(rng)];
      a.push_back(t);
      if (trial % 2 == 0) b.push_back(t);
    }
    if (trial % 2 == 1)
      for (int k = size(rng); k > 0; --k) b.push_back(pool[pick(rng)]);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ComponentMultiset ma{a, {}, {}}, mb{b, {}, {}};
    c.expect((condition_two_counts(a) == condition_two_counts(b)) ==
                 (admissible_refinement(ma).finite_part == admissible_refinement(mb).finite_part),
             ma.str() + " vs " + mb.str() + " counts");
  }
}

// ---- criterion 8
void aut_suite(Checker& c) {
  struct Case {
    std::vector<int> m;
    std::size_t expected;
  };
  for (const Case& k : std::vector<Case>{{{0, 1, 1}, 12}, {{0, 0, 2}, 72}, {{0, 0, 0, 1}, 24}, {{0, 2}, 6}}) {
    std::vector<TypeLabel> factors;
    for (std::size_t n = 2; n <= k.m.size(); ++n)
      for (int i = 0; i < k.m[n - 1]; ++i) factors.push_back(type_A(static_cast<int>(n) - 1));
    ProductGroup g(factors);
    std::size_t brute = automorphisms(g.group()).size();
    c.expect(aut_order_symproduct(k.m) == brute && brute == k.expected,
             "Aut of Sym product " + std::to_string(k.expected));
  }
  for (const auto& factors :
       std::vector<std::vector<TypeLabel>>{{type_A(1), type_A(2)}, {type_A(2), type_A(2)}}) {
    ProductGroup g(factors);
    AutBudget b = aut_decomposition(g);
    c.expect(b.total() == automorphisms(g.group()).size() && b.h1 * b.h2 * b.h3 % b.h4 == 0,
             "aut decomposition identity");
  }
}

// ---- criterion 9
void hommonoid_suite(Checker& c, std::mt19937_64& rng) {
  for (const auto& factors : catalog_multisets(24)) {
    ProductGroup pg(factors);
    const FiniteGroup& g = pg.group();
    HomMonoid m(g);
    auto homs = m.all();
    std::string name = ComponentMultiset{factors, {}, {}}.str();
    std::set<ElementMap> flats;
    for (const CentralHom& f : homs) {
      flats.insert(m.flat(f));
      c.expect(m.star(m.trivial(), f) == f && m.star(f, m.trivial()) == f, name + " unit");
    }
    c.expect(flats.size() == homs.size(), name + " flat injective");
    auto triple = [&](const CentralHom& f, const CentralHom& h, const CentralHom& k) {
      c.expect(m.star(m.star(f, h), k) == m.star(f, m.star(h, k)), name + " associativity");
    };
    if (homs.size() <= 64) {
      for (const auto& f : homs)
        for (const auto& h : homs) {
          c.expect(m.flat(m.star(f, h)) == compose(m.flat(f), m.flat(h)), name + " flat is a monoid map");
          for (const auto& k : homs) triple(f, h, k);
        }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
      for (int i = 0; i < 2000; ++i) {
        const auto &f = homs[pick(rng)], &h = homs[pick(rng)];
        c.expect(m.flat(m.star(f, h)) == compose(m.flat(f), m.flat(h)), name + " flat is a monoid map");
        triple(f, h, homs[pick(rng)]);
      }
    }
    // Three equivalent forms of invertibility.
    for (const CentralHom& f : homs) {
      ElementMap fl = m.flat(f);
      bool aut = is_bijective(fl);
      c.expect(m.is_invertible(f) == aut, name + " invertible iff flat is an automorphism");
      if (homs.size() <= 4096) {
        bool has_inverse = false;
        for (const CentralHom& h : homs)
          has_inverse = has_inverse || (m.star(f, h) == m.trivial() && m.star(h, f) == m.trivial());
        c.expect(has_inverse == aut, name + " unit iff flat is an automorphism");
      } else if (aut) {
        CentralHom inv = m.invert(f);
        c.expect(m.star(f, inv) == m.trivial() && m.star(inv, f) == m.trivial(), name + " inverse");
      }
    }
    // Equivariance under Aut(G).
    if (homs.size() <= 512) {
      auto auts = automorphisms(g, 2000);
      for (const ElementMap& h : auts)
        for (const CentralHom& f : homs) {
          CentralHom hf{conjugate_map(h, f.values)};
          c.expect(m.is_central_hom(hf.values) && m.flat(hf) == conjugate_map(h, m.flat(f)),
                   name + " equivariance");
        }
    }
    // Double flat on abelian groups.
    if (m.center().size() == g.order()) {
      std::set<ElementMap> images;
      std::size_t units = 0, auts = 0;
      for (const ElementMap& e : endomorphisms(g)) {
        ElementMap fl = m.flat(m.make(e));
        c.expect(m.flat(m.make(fl)) == e, name + " double flat");
        images.insert(fl);
        units += m.is_invertible(CentralHom{e});
        auts += is_bijective(e);
      }
      c.expect(images.size() == homs.size() && units == auts, name + " flat bijective on End");
    }
    // Semidirect structure for G = G1 x G2 with Z(G2) = 1.
    for (std::size_t j = 0; j < pg.factor_count(); ++j) {
      if (pg.factor_center(j).size() != 1) continue;
      std::vector<CentralHom> units, h1, h2;
      for (const CentralHom& f : homs) {
        if (!m.is_invertible(f)) continue;
        units.push_back(f);
        bool kills_g1 = true, kills_g2 = true;
        for (ElementId w = 0; w < g.order(); ++w) {
          if (pg.project(j, w) == 0 && f(w) != 0) kills_g1 = false;
          if (pg.keep_factor(j, w) == w && f(w) != 0) kills_g2 = false;
        }
        if (kills_g1) h1.push_back(f);
        if (kills_g2) h2.push_back(f);
      }
      std::set<CentralHom> products;
      for (const auto& a : h1)
        for (const auto& b : h2) products.insert(m.star(a, b));
      c.expect(units.size() == h1.size() * h2.size() &&
                   products == std::set<CentralHom>(units.begin(), units.end()),
               name + " units = H1 x| H2");
      for (const auto& f : h2)
        for (const auto& x : h1) {
          ElementMap fl = m.flat(f);
          c.expect(m.star(m.star(f, x), m.invert(f)).values == compose(fl, compose(x.values, inverse_map(fl))),
                   name + " conjugation rule");
        }
      break;
    }
  }
}

// ---- criterion 10
void richardson_suite(Checker& c) {
  for (const auto& factors : catalog_multisets(400)) {
    EnumeratedGroup g(product_graph(factors));
    auto candidates = richardson_candidates(g);
    std::string name = ComponentMultiset{factors, {}, {}}.str();
    for (ElementId w : involutions(g)) {
      RichardsonForm f = richardson_form(g, w, candidates);
      c.expect(g.conjugate(f.conjugator, w) == f.longest &&
                   f.longest == longest_element(g, f.subset).element &&
                   central_in_parabolic(g, f.subset, f.longest),
               name + " involution " + std::to_string(w));
    }
  }
}

struct SuiteSpec {
  std::string name;
  double time_limit;
  std::function<void(Checker&, std::mt19937_64&)> body;
};

const std::vector<SuiteSpec>& suites() {
  static const std::vector<SuiteSpec> all{
      {"orders", 60, [](Checker& c, auto&) { orders_suite(c); }},
      {"deodhar", 60, [](Checker& c, auto&) { deodhar_suite(c); }},
      {"core", 600, [](Checker& c, auto&) { core_suite(c); }},
      {"centralizer", 600, [](Checker& c, auto&) { centralizer_suite(c); }},
      {"center-factor", 0, [](Checker& c, auto&) { center_factor_suite(c); }},
      {"properties", 0, [](Checker& c, auto&) { properties_suite(c); }},
      {"isomorphism", 0, [](Checker& c, auto& rng) { isomorphism_suite(c, rng); }},
      {"aut", 0, [](Checker& c, auto&) { aut_suite(c); }},
      {"hommonoid", 0, [](Checker& c, auto& rng) { hommonoid_suite(c, rng); }},
      {"richardson", 0, [](Checker& c, auto&) { richardson_suite(c); }},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  for (const auto& s : suites()) {
    if (s.name != name) continue;
    Checker c;
    std::mt19937_64 rng(options.seed);
    auto start = std::chrono::steady_clock::now();
    try {
      s.body(c, rng);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    SuiteResult r = c.result(name);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.time_limit = s.time_limit;
    if (s.time_limit > 0 && r.seconds > s.time_limit) {
      r.passed = false;
      r.detail += "; time limit exceeded";
    }
    return r;
  }
  throw Error("unknown suite: " + name);
}

}  // namespace coxkit
