#pragma once

#include <vector>

#include "coxkit/engine.hpp"
#include "coxkit/graph.hpp"
#include "coxkit/rootspace.hpp"
#include "coxkit/type_label.hpp"

namespace coxkit {

struct LongestElement {
  ElementId element;
  // sigma[s] = t where w0(I) . alpha_s = -alpha_t; identity outside I.
  GraphIso sigma;
};

LongestElement longest_element(const EnumeratedGroup& group, VertexSet subset);

// Highest root of a catalog type in catalog coordinates. `contact` holds the
// zero-based catalog indices of the simple roots not orthogonal to it (one
// index, or two for A_n with n >= 2 and I2(odd)).
struct HighestRootEntry {
  TypeLabel type;
  int variant;
  Eigen::VectorXd coefficients;
  std::vector<int> contact;
};

// One entry, or two (variants 1 and 2) for B_n, F4 and I2(even).
std::vector<HighestRootEntry> highest_roots(TypeLabel t);

// Lexicographically smallest label-preserving map from the catalog graph of
// the component's type onto `component` (result indexed by catalog vertex).
GraphIso catalog_embedding(const CoxeterGraph& g, VertexSet component, TypeLabel* type = nullptr);

// Irreducible components of the full subgraph on `subset`, in g's indices.
std::vector<VertexSet> components_within(const CoxeterGraph& g, VertexSet subset);

enum class ComponentChoice { LargestVertex, SmallestVertex };

struct DeodharOptions {
  ComponentChoice choice = ComponentChoice::LargestVertex;
  int variant = 1;
};

struct ReflectionDecomposition {
  VertexSet subset = 0;
  std::vector<RootId> roots;
  // K_1, ..., K_r = {} (the subsets left after each step).
  std::vector<VertexSet> sequence;
};

ReflectionDecomposition deodhar_decompose(const CoxeterGraph& g, const RootTable& table,
                                          VertexSet subset, DeodharOptions options = {});
ReflectionDecomposition deodhar_decompose(const EnumeratedGroup& group, VertexSet subset,
                                          DeodharOptions options = {});

// Ordered product of the reflections of a decomposition.
ElementId reflection_product(const EnumeratedGroup& group, const ReflectionDecomposition& d);

enum class SpecialFamily { B, D };

// Subgroup generated by w0(tau(S(B_i))), 1 <= i <= n, or by
// w0(tau(S(D_i))), 2 <= i <= n, where tau maps catalog index to vertex.
SubgroupHandle special_subgroup(const EnumeratedGroup& group, SpecialFamily family,
                                const GraphIso& tau);
// Same for a group built on the catalog graph itself (vertices s1..sn).
SubgroupHandle special_subgroup(const EnumeratedGroup& group, SpecialFamily family, int n);

std::vector<ElementId> special_generators(const EnumeratedGroup& group, SpecialFamily family,
                                          const GraphIso& tau);

}  // namespace coxkit
