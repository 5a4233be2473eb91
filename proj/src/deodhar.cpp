#include "coxkit/deodhar.hpp"

#include <bit>
#include <cmath>

#include "coxkit/classify.hpp"
#include "coxkit/error.hpp"

namespace coxkit {

LongestElement longest_element(const EnumeratedGroup& group, VertexSet subset) {
  const auto& roots = group.roots();
  ElementId w = group.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int s : members(subset))
      if (roots.is_positive(group.act(w, s))) {
        w = group.times_generator(w, s);
        grew = true;
        break;
      }
  }
  GraphIso sigma(group.rank());
  for (int s = 0; s < group.rank(); ++s) sigma[s] = s;
  for (int s : members(subset)) {
    RootId t = roots.negate(group.act(w, s));
    if (t >= group.rank() || !contains(subset, t))
      throw Error("longest element does not map the simple roots of I to -Pi_I");
    sigma[s] = t;
  }
  return {w, sigma};
}

std::vector<HighestRootEntry> highest_roots(TypeLabel t) {
  t = canonical(t);
  const int n = t.family == Family::I2 ? 2 : t.param;
  const double r2 = std::sqrt(2.0);
  const double pi = std::acos(-1.0);
  const double c = 2.0 * std::cos(pi / 5.0);
  auto entry = [&](int variant, std::vector<double> coeffs, std::vector<int> contact) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) v(static_cast<Eigen::Index>(i)) = coeffs[i];
    return HighestRootEntry{t, variant, v, std::move(contact)};
  };
  switch (t.family) {
    case Family::A: {
      std::vector<int> contact{0};
      if (n >= 2) contact.push_back(n - 1);
      return {entry(1, std::vector<double>(n, 1.0), contact)};
    }
    case Family::B: {
      std::vector<double> first(n, r2), second(n, 2.0);
      first[0] = 1.0;
      second[0] = r2;
      second[n - 1] = 1.0;
      return {entry(1, first, {n - 1}), entry(2, second, {n - 2})};
    }
    case Family::D: {
      std::vector<double> v(n, 2.0);
      v[0] = v[1] = v[n - 1] = 1.0;
      return {entry(1, v, {n - 2})};
    }
    case Family::E:
      if (n == 6) return {entry(1, {1, 2, 2, 3, 2, 1}, {1})};
      if (n == 7) return {entry(1, {2, 2, 3, 4, 3, 2, 1}, {0})};
      return {entry(1, {2, 3, 4, 6, 5, 4, 3, 2}, {7})};
    case Family::F:
      return {entry(1, {2, 3, 2 * r2, r2}, {0}), entry(2, {r2, 2 * r2, 3, 2}, {3})};
    case Family::H:
      if (n == 3) return {entry(1, {c + 1, 2 * c, c}, {1})};
      return {entry(1, {3 * c + 2, 4 * c + 2, 3 * c + 1, 2 * c}, {3})};
    case Family::I2: {
      const int m = t.param;
      if (m % 2 == 1) {
        double a = 1.0 / (2.0 * std::sin(pi / (2.0 * m)));
        return {entry(1, {a, a}, {0, 1})};
      }
      double cot = std::cos(pi / m) / std::sin(pi / m), csc = 1.0 / std::sin(pi / m);
      return {entry(1, {cot, csc}, {1}), entry(2, {csc, cot}, {0})};
    }
    default:
      throw Error("no highest root for " + t.str());
  }
}

std::vector<VertexSet> components_within(const CoxeterGraph& g, VertexSet subset) {
  auto verts = members(subset);
  std::vector<VertexSet> out;
  for (VertexSet local : components(g.induced(subset))) {
    VertexSet c = 0;
    for (int i : members(local)) c |= singleton(verts[i]);
    out.push_back(c);
  }
  return out;
}

GraphIso catalog_embedding(const CoxeterGraph& g, VertexSet component, TypeLabel* type) {
  CoxeterGraph sub = g.induced(component);
  TypeLabel t = classify_irreducible(sub);
  if (!t.is_finite()) throw InfiniteType("component " + format_subset(g, component) + " is infinite");
  auto isos = graph_isomorphisms(build_named(t), sub);
  if (isos.empty()) throw Error("catalog graph does not embed");
  auto verts = members(component);
  GraphIso out;
  for (int i : isos.front()) out.push_back(verts[i]);
  if (type) *type = t;
  return out;
}

ReflectionDecomposition deodhar_decompose(const CoxeterGraph& g, const RootTable& table,
                                          VertexSet subset, DeodharOptions options) {
  ReflectionDecomposition d;
  d.subset = subset;
  VertexSet rest = subset;
  while (rest) {
    int pick = options.choice == ComponentChoice::LargestVertex ? 63 - std::countl_zero(rest)
                                                                : std::countr_zero(rest);
    VertexSet comp = 0;
    for (VertexSet c : components_within(g, rest))
      if (contains(c, pick)) comp = c;
    TypeLabel t;
    GraphIso emb = catalog_embedding(g, comp, &t);
    auto entries = highest_roots(t);
    const auto& e = entries.size() > 1 && options.variant == 2 ? entries[1] : entries[0];
    RootVector<double> v = RootVector<double>::Zero(g.size());
    for (std::size_t k = 0; k < emb.size(); ++k) v(emb[k]) = e.coefficients(static_cast<Eigen::Index>(k));
    d.roots.push_back(table.lookup(v));
    for (int k : e.contact) rest &= ~singleton(emb[k]);
    d.sequence.push_back(rest);
  }
  return d;
}

ReflectionDecomposition deodhar_decompose(const EnumeratedGroup& group, VertexSet subset,
                                          DeodharOptions options) {
  return deodhar_decompose(group.graph(), group.roots(), subset, options);
}

ElementId reflection_product(const EnumeratedGroup& group, const ReflectionDecomposition& d) {
  ElementId w = group.identity();
  for (RootId r : d.roots) w = group.multiply(w, group.id_of(reflection_of_root(r, group.roots())));
  return w;
}

std::vector<ElementId> special_generators(const EnumeratedGroup& group, SpecialFamily family,
                                          const GraphIso& tau) {
  const int n = static_cast<int>(tau.size());
  std::vector<ElementId> gens;
  for (int i = family == SpecialFamily::B ? 1 : 2; i <= n; ++i) {
    VertexSet prefix = 0;
    for (int k = 0; k < i; ++k) prefix |= singleton(tau[k]);
    gens.push_back(longest_element(group, prefix).element);
  }
  return gens;
}

SubgroupHandle special_subgroup(const EnumeratedGroup& group, SpecialFamily family,
                                const GraphIso& tau) {
  return subgroup_closure(group, special_generators(group, family, tau));
}

SubgroupHandle special_subgroup(const EnumeratedGroup& group, SpecialFamily family, int n) {
  if (n < (family == SpecialFamily::B ? 1 : 2)) throw Error("rank out of range");
  TypeLabel t = family == SpecialFamily::B ? type_B(n) : type_D(n);
  if (!(group.graph() == build_named(t)))
    throw Error("group is not built on the catalog graph of " + t.str());
  GraphIso tau(n);
  for (int i = 0; i < n; ++i) tau[i] = i;
  return special_subgroup(group, family, tau);
}

}  // namespace coxkit
