#include "coxkit/classify.hpp"

#include <algorithm>

#include "coxkit/error.hpp"

namespace coxkit {

std::vector<TypeLabel> catalog_types_of_rank(int n) {
  std::vector<TypeLabel> out{type_A(n)};
  if (n >= 2) out.push_back(type_B(n));
  if (n >= 4) out.push_back(type_D(n));
  if (n >= 6 && n <= 8) out.push_back(type_E(n));
  if (n == 4) out.push_back(type_F4());
  if (n == 3 || n == 4) out.push_back(type_H(n));
  return out;
}

namespace {

std::vector<int> label_multiset(const CoxeterGraph& g) {
  std::vector<int> out;
  for (const Edge& e : g.edges()) out.push_back(e.label);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TypeLabel classify_irreducible(const CoxeterGraph& g) {
  if (g.size() == 0) throw Error("classify_irreducible: empty graph");
  if (components(g).size() != 1) throw Error("classify_irreducible: graph is disconnected");
  const int n = g.size();
  if (n == 1) return type_A(1);
  // A finite connected Coxeter graph is a tree.
  if (static_cast<int>(g.edges().size()) != n - 1) return {Family::Unknown, 0};
  auto labels = label_multiset(g);
  if (labels.front() == kInfinity) return {Family::Unknown, 0};
  if (n == 2) return canonical(type_I2(labels.front()));
  for (TypeLabel t : catalog_types_of_rank(n)) {
    CoxeterGraph c = build_named(t);
    if (label_multiset(c) != labels) continue;
    if (find_graph_isomorphism(c, g)) return t;
  }
  return {Family::Unknown, 0};
}

std::vector<TypeLabel> classify_components(const CoxeterGraph& g) {
  std::vector<TypeLabel> out;
  for (VertexSet c : components(g)) out.push_back(classify_irreducible(g.induced(c)));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Cardinal group_order(TypeLabel t) {
  if (!t.is_finite()) return {};
  auto parts = canonical_components(t);
  if (parts.size() > 1) return group_order(parts);
  t = parts.front();
  const int n = t.param;
  switch (t.family) {
    case Family::A: return {factorial(n + 1)};
    case Family::B: return {(BigInt(1) << n) * factorial(n)};
    case Family::D: return {(BigInt(1) << (n - 1)) * factorial(n)};
    case Family::E:
      if (n == 6) return {BigInt(51840)};
      if (n == 7) return {BigInt(2903040)};
      return {BigInt(696729600)};
    case Family::F: return {BigInt(1152)};
    case Family::H: return {BigInt(n == 3 ? 120 : 14400)};
    case Family::I2: return {BigInt(2 * n)};
    case Family::E7plus: return {BigInt(1451520)};
    case Family::H3plus: return {BigInt(60)};
    default: return {};
  }
}

Cardinal group_order(const std::vector<TypeLabel>& comps) {
  BigInt total = 1;
  for (TypeLabel t : comps) {
    Cardinal c = group_order(t);
    if (c.is_infinite()) return {};
    total *= *c.value;
  }
  return {total};
}

long long positive_root_count(TypeLabel t) {
  auto parts = canonical_components(t);
  if (parts.size() > 1) return static_cast<long long>(parts.size());
  t = parts.front();
  const long long n = t.param;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::H: return n == 3 ? 15 : 60;
    case Family::I2: return n;
    default: throw InfiniteType("no finite root system for " + t.str());
  }
}

}  // namespace coxkit
