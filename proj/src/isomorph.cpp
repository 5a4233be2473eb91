#include "coxkit/isomorph.hpp"

#include <algorithm>
#include <sstream>

#include "coxkit/error.hpp"
#include "coxkit/structure.hpp"

namespace coxkit {

namespace {

bool symbolic_infinite(Family f) {
  return f == Family::Ainf || f == Family::Binf || f == Family::Dinf || f == Family::AinfInf;
}

std::size_t finite_order(TypeLabel t) {
  Cardinal c = group_order(t);
  if (c.is_infinite() || *c.value > BigInt(1) << 62) return ~std::size_t{0};
  return static_cast<std::size_t>(*c.value);
}

}  // namespace

std::string ComponentMultiset::str() const {
  std::string out;
  auto add = [&](const std::string& s) { out += (out.empty() ? "" : ",") + s; };
  for (TypeLabel t : finite_part) add(t.str());
  for (TypeLabel t : infinite_part) add(t.str());
  for (std::size_t i = 0; i < unknown_graphs.size(); ++i) add("Unknown");
  return out.empty() ? "{}" : "{" + out + "}";
}

ComponentMultiset component_multiset(const CoxeterGraph& g) {
  ComponentMultiset m;
  for (VertexSet comp : components(g)) {
    CoxeterGraph sub = g.induced(comp);
    TypeLabel t = classify_irreducible(sub);
    if (t.family == Family::Unknown)
      m.unknown_graphs.push_back(std::move(sub));
    else
      m.finite_part.push_back(t);
  }
  std::sort(m.finite_part.begin(), m.finite_part.end());
  return m;
}

ComponentMultiset parse_component_list(std::string_view text) {
  ComponentMultiset m;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    TypeLabel t = parse_type_label(item);
    if (symbolic_infinite(t.family))
      m.infinite_part.push_back(t);
    else if (t.family == Family::Unknown)
      throw Error("Unknown components must be given as graphs");
    else
      m.finite_part.push_back(canonical(t));
  }
  std::sort(m.finite_part.begin(), m.finite_part.end());
  std::sort(m.infinite_part.begin(), m.infinite_part.end());
  return m;
}

ComponentMultiset admissible_refinement(const ComponentMultiset& m) {
  ComponentMultiset out = m;
  out.finite_part.clear();
  for (TypeLabel t : m.finite_part) {
    auto d = center_direct_factor(t);
    if (d.verdict == CenterVerdict::Yes) {
      out.finite_part.push_back(type_A(1));
      out.finite_part.push_back(*d.complement);
    } else {
      out.finite_part.push_back(t);
    }
  }
  std::sort(out.finite_part.begin(), out.finite_part.end());
  return out;
}

std::map<std::string, int> condition_two_counts(const std::vector<TypeLabel>& finite_part) {
  std::map<std::string, int> counts;
  for (TypeLabel raw : finite_part) {
    TypeLabel t = canonical(raw);
    const int n = t.param;
    const bool odd_b = t.family == Family::B && n % 2 == 1;
    const bool i2_4k2 = t.family == Family::I2 && n % 4 == 2;
    if (t == type_A(1) || odd_b || t == type_E(7) || t == type_H(3) || i2_4k2) ++counts["A1*"];
    if (t == type_B(3) || t == type_A(3)) ++counts["B3|A3"];
    if ((t.family == Family::B || t.family == Family::D) && n % 2 == 1 && n >= 5)
      ++counts["B" + std::to_string(n) + "|D" + std::to_string(n)];
    if (t == type_I2(6) || t == type_A(2)) ++counts["I2(6)|A2"];
    if (t.family == Family::I2 && n >= 5) {
      if (n % 4 == 2 && n >= 10) ++counts["I2(" + std::to_string(n) + ")|I2(" + std::to_string(n / 2) + ")"];
      if (n % 2 == 1) ++counts["I2(" + std::to_string(2 * n) + ")|I2(" + std::to_string(n) + ")"];
      if (n % 4 == 0) ++counts[t.str()];
    }
    const bool single = (t.family == Family::A && n >= 4) ||
                        (t.family == Family::B && n % 2 == 0) ||
                        (t.family == Family::D && n % 2 == 0) || t.family == Family::E ||
                        t.family == Family::F || t.family == Family::H;
    if (single) ++counts[t.str()];
  }
  return counts;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "";
}

Verdict coxeter_isomorphic(const ComponentMultiset& a, const ComponentMultiset& b) {
  const bool by_counts = condition_two_counts(a.finite_part) == condition_two_counts(b.finite_part);
  const bool by_refinement =
      admissible_refinement(a).finite_part == admissible_refinement(b).finite_part;
  if (by_counts != by_refinement)
    throw VerificationFailure("grouped counts and admissible refinement disagree for " + a.str() +
                              " vs " + b.str());
  if (!by_counts || a.infinite_part != b.infinite_part) return Verdict::No;
  if (a.unknown_graphs.size() != b.unknown_graphs.size()) return Verdict::Unknown;
  std::vector<char> used(b.unknown_graphs.size());
  for (const CoxeterGraph& x : a.unknown_graphs) {
    bool matched = false;
    for (std::size_t j = 0; j < b.unknown_graphs.size() && !matched; ++j)
      if (!used[j] && find_graph_isomorphism(x, b.unknown_graphs[j])) {
        used[j] = 1;
        matched = true;
      }
    if (!matched) return Verdict::Unknown;
  }
  return Verdict::Yes;
}

Verdict coxeter_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b) {
  return coxeter_isomorphic(component_multiset(a), component_multiset(b));
}

FiniteGroup admissible_group(TypeLabel t, std::size_t cap) {
  if (t.family == Family::E7plus || t.family == Family::H3plus) {
    EnumeratedGroup w(build_named(t.family == Family::E7plus ? type_E(7) : type_H(3)), 2 * cap);
    auto sign = character_values(w, sign_character(w.graph()));
    std::vector<ElementId> even;
    for (ElementId x = 0; x < w.order(); ++x)
      if (sign[x] == 1) even.push_back(x);
    return subgroup_as_group(to_finite_group(w), SubgroupHandle(w.order(), even));
  }
  return to_finite_group(EnumeratedGroup(build_named(t), cap));
}

ProductGroup::ProductGroup(std::vector<TypeLabel> factors, std::size_t cap)
    : factors_(std::move(factors)), group_(cyclic_group(1)) {
  std::size_t total = 1;
  for (TypeLabel t : factors_) {
    factor_groups_.push_back(admissible_group(t, cap));
    factor_centers_.push_back(center(factor_groups_.back()));
    total *= factor_groups_.back().order();
    if (total > cap) throw CapExceeded("product order exceeds cap " + std::to_string(cap));
  }
  radix_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 1;)
    radix_[i - 1] = radix_[i] * factor_groups_[i].order();
  for (const FiniteGroup& f : factor_groups_) group_ = direct_product(group_, f);
}

ElementId ProductGroup::project(std::size_t i, ElementId w) const {
  return static_cast<ElementId>((w / radix_[i]) % factor_groups_[i].order());
}

ElementId ProductGroup::embed(std::size_t i, ElementId x) const {
  return static_cast<ElementId>(x * radix_[i]);
}

SubgroupHandle ProductGroup::factor_subgroup(std::size_t i) const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < factor_groups_[i].order(); ++x) out.push_back(embed(i, x));
  return SubgroupHandle(group_.order(), out);
}

bool ProductGroup::is_central_factor(std::size_t i) const {
  return factor_centers_[i].size() == factor_groups_[i].order();
}

FactorIsomorphism factor_isomorphism(const ElementMap& f, const ProductGroup& g,
                                     const ProductGroup& g2) {
  const FiniteGroup& a = g.group();
  const FiniteGroup& b = g2.group();
  if (f.size() != a.order() || a.order() != b.order() || !is_bijective(f) ||
      !is_homomorphism(a, b, f))
    throw Error("map is not an isomorphism");
  const std::size_t n = g.factor_count(), n2 = g2.factor_count();
  FactorIsomorphism out;
  out.phi.assign(n, -1);
  out.g_lambda.resize(n);
  std::vector<char> taken(n2);
  for (std::size_t l = 0; l < n; ++l) {
    if (g.is_central_factor(l)) continue;
    std::vector<int> hits;
    for (std::size_t l2 = 0; l2 < n2; ++l2)
      for (ElementId x = 0; x < g.factor_group(l).order(); ++x)
        if (!g2.factor_center(l2).contains(g2.project(l2, f[g.embed(l, x)]))) {
          hits.push_back(static_cast<int>(l2));
          break;
        }
    if (hits.size() != 1 || taken[hits[0]])
      throw VerificationFailure("factor images do not single out one target factor");
    out.phi[l] = hits[0];
    taken[hits[0]] = 1;
    ElementMap local(g.factor_group(l).order());
    for (ElementId x = 0; x < local.size(); ++x) local[x] = g2.project(hits[0], f[g.embed(l, x)]);
    if (!is_bijective(local) || !is_homomorphism(g.factor_group(l), g2.factor_group(hits[0]), local))
      throw VerificationFailure("projected factor map is not an isomorphism");
    out.g_lambda[l] = std::move(local);
  }
  // Central factors pair up with the remaining central factors in order.
  for (std::size_t l = 0; l < n; ++l) {
    if (!g.is_central_factor(l)) continue;
    for (std::size_t l2 = 0; l2 < n2 && out.phi[l] < 0; ++l2)
      if (!taken[l2] && g2.is_central_factor(l2) &&
          g.factor_group(l).order() == g2.factor_group(l2).order()) {
        out.phi[l] = static_cast<int>(l2);
        taken[l2] = 1;
      }
    if (out.phi[l] < 0) throw VerificationFailure("central factors do not match up");
  }
  // g_Z on each factor, then multiplied out over the digits.
  auto g_z_local = [&](std::size_t l, ElementId x) {
    ElementId y = f[g.embed(l, x)];
    if (g.is_central_factor(l)) return y;
    std::size_t target = out.phi[l];
    return b.multiply(y, b.inverse(g2.keep_factor(target, y)));
  };
  out.g_z.assign(a.order(), b.identity());
  for (ElementId w = 0; w < a.order(); ++w)
    for (std::size_t l = 0; l < n; ++l) out.g_z[w] = b.multiply(out.g_z[w], g_z_local(l, g.project(l, w)));
  HomMonoid target_monoid(b);
  for (ElementId y : out.g_z)
    if (!target_monoid.center().contains(y)) throw VerificationFailure("g_Z leaves the center");
  if (!is_homomorphism(a, b, out.g_z)) throw VerificationFailure("g_Z is not a homomorphism");
  for (std::size_t l = 0; l < n; ++l)
    for (ElementId x = 0; x < g.factor_group(l).order(); ++x) {
      ElementId w = g.embed(l, x);
      ElementId rebuilt = out.g_z[w];
      if (!g.is_central_factor(l)) {
        if (g2.project(out.phi[l], out.g_z[w]) != 0)
          throw VerificationFailure("g_Z touches the matched factor");
        rebuilt = b.multiply(g2.embed(out.phi[l], out.g_lambda[l][x]), rebuilt);
      }
      if (rebuilt != f[w]) throw VerificationFailure("reconstruction of f failed");
    }
  return out;
}

AutBudget aut_decomposition(const ProductGroup& g) {
  for (TypeLabel t : g.factors())
    if (!is_directly_indecomposable(t)) throw Error(t.str() + " is not an admissible factor");
  HomMonoid monoid(g.group());
  auto homs = monoid.all();
  AutBudget budget{0, 1, 1, 0};
  for (const CentralHom& f : homs) {
    if (monoid.is_invertible(f)) ++budget.h1;
    bool in_o = true;
    for (std::size_t l = 0; l < g.factor_count() && in_o; ++l)
      for (ElementId x = 0; x < g.factor_group(l).order() && in_o; ++x) {
        ElementId y = f(g.embed(l, x));
        if (g.is_central_factor(l))
          in_o = y == 0;
        else
          in_o = g.factor_subgroup(l).contains(y) && g.factor_center(l).contains(g.project(l, y));
      }
    if (in_o) ++budget.h4;
  }
  std::map<TypeLabel, int> classes;
  for (std::size_t l = 0; l < g.factor_count(); ++l) {
    if (g.is_central_factor(l)) continue;
    budget.h2 *= automorphisms(g.factor_group(l)).size();
    ++classes[g.factors()[l]];
  }
  for (auto [label, count] : classes)
    for (int i = 2; i <= count; ++i) budget.h3 *= i;
  return budget;
}

BigInt aut_order_symproduct(const std::vector<int>& m) {
  auto at = [&](int n) { return n >= 1 && n <= static_cast<int>(m.size()) ? m[n - 1] : 0; };
  long long total = 0;
  for (int v : m) {
    if (v < 0) throw Error("negative multiplicity");
    total += v;
  }
  const long long m1 = at(1), m2 = at(2);
  const long long exponent = m2 * (total - m1 - m2) + m2 * (m2 - 1) / 2 + at(6);
  BigInt out = BigInt(1) << exponent;
  for (long long i = 1; i <= m2; ++i) out *= (BigInt(1) << i) - 1;
  for (int n = 3; n <= static_cast<int>(m.size()); ++n) {
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int k = 0; k < at(n); ++k) out *= fact;
    for (int i = 2; i <= at(n); ++i) out *= i;
  }
  return out;
}

CoxeterGraph product_graph(const std::vector<TypeLabel>& factors) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (TypeLabel t : factors) {
    CoxeterGraph c = build_named(t);
    const int offset = static_cast<int>(names.size());
    for (int v = 0; v < c.size(); ++v) names.push_back("s" + std::to_string(offset + v + 1));
    for (const Edge& e : c.edges()) edges.push_back({e.a + offset, e.b + offset, e.label});
  }
  CoxeterGraph g(names);
  for (const Edge& e : edges) g.add_edge(e.a, e.b, e.label);
  return g;
}

std::vector<TypeLabel> catalog_labels_up_to(std::size_t max_order) {
  std::vector<TypeLabel> out;
  for (int n = 1;; ++n) {
    bool any = false;
    for (TypeLabel t : catalog_types_of_rank(n))
      if (finite_order(t) <= max_order) {
        out.push_back(t);
        any = true;
      }
    if (!any && n > 8) break;
  }
  for (int m = 5; 2 * static_cast<std::size_t>(m) <= max_order; ++m) out.push_back(type_I2(m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<TypeLabel>> catalog_multisets(std::size_t max_order) {
  auto labels = catalog_labels_up_to(max_order);
  std::vector<std::vector<TypeLabel>> out;
  std::vector<TypeLabel> current;
  auto grow = [&](auto&& self, std::size_t start, std::size_t order) -> void {
    for (std::size_t i = start; i < labels.size(); ++i) {
      std::size_t next = order * finite_order(labels[i]);
      if (next > max_order) continue;
      current.push_back(labels[i]);
      out.push_back(current);
      self(self, i, next);
      current.pop_back();
    }
  };
  grow(grow, 0, 1);
  return out;
}

}  // namespace coxkit
