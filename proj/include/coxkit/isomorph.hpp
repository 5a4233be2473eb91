#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxkit/classify.hpp"
#include "coxkit/engine.hpp"
#include "coxkit/graph.hpp"
#include "coxkit/hommonoid.hpp"
#include "coxkit/type_label.hpp"

namespace coxkit {

// Irreducible components of a Coxeter system, up to isomorphism.
struct ComponentMultiset {
  std::vector<TypeLabel> finite_part;     // sorted
  std::vector<TypeLabel> infinite_part;   // Ainf, Binf, Dinf, AinfInf; sorted
  std::vector<CoxeterGraph> unknown_graphs;

  std::string str() const;
};

ComponentMultiset component_multiset(const CoxeterGraph& g);
// Comma-separated labels, e.g. "A1,B3,Ainf".
ComponentMultiset parse_component_list(std::string_view text);

// Splits every decomposable finite component into its admissible factors.
ComponentMultiset admissible_refinement(const ComponentMultiset& m);

// Cardinalities of the grouped label classes that decide isomorphism of the
// finite parts; zero entries are omitted.
std::map<std::string, int> condition_two_counts(const std::vector<TypeLabel>& finite_part);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

Verdict coxeter_isomorphic(const ComponentMultiset& a, const ComponentMultiset& b);
Verdict coxeter_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b);

// Direct product of admissible groups; element ids are mixed-radix digits,
// the first factor most significant.
class ProductGroup {
 public:
  ProductGroup(std::vector<TypeLabel> factors, std::size_t cap = 20000);

  const FiniteGroup& group() const { return group_; }
  const std::vector<TypeLabel>& factors() const { return factors_; }
  const FiniteGroup& factor_group(std::size_t i) const { return factor_groups_[i]; }
  std::size_t factor_count() const { return factors_.size(); }

  ElementId project(std::size_t i, ElementId w) const;  // factor-local id
  ElementId embed(std::size_t i, ElementId x) const;
  ElementId keep_factor(std::size_t i, ElementId w) const { return embed(i, project(i, w)); }
  SubgroupHandle factor_subgroup(std::size_t i) const;
  // Factors with Z(G_i) = G_i.
  bool is_central_factor(std::size_t i) const;
  const SubgroupHandle& factor_center(std::size_t i) const { return factor_centers_[i]; }

 private:
  std::vector<TypeLabel> factors_;
  std::vector<FiniteGroup> factor_groups_;
  std::vector<SubgroupHandle> factor_centers_;
  std::vector<std::size_t> radix_;  // product of the orders of later factors
  FiniteGroup group_;
};

// The group of an admissible label (E7+ exceeds the default cap).
FiniteGroup admissible_group(TypeLabel t, std::size_t cap = 20000);

struct FactorIsomorphism {
  std::vector<int> phi;                 // factor of G -> factor of G2
  std::vector<ElementMap> g_lambda;     // local ids; empty for central factors
  ElementMap g_z;                       // G -> Z(G2)
};

FactorIsomorphism factor_isomorphism(const ElementMap& f, const ProductGroup& g,
                                     const ProductGroup& g2);

struct AutBudget {
  BigInt h1, h2, h3, h4;
  BigInt total() const { return h1 * h2 * h3 / h4; }
};

AutBudget aut_decomposition(const ProductGroup& g);

// |Aut| of the product of Sym_n^{m_n}; m[0] is m_1.
BigInt aut_order_symproduct(const std::vector<int>& m);

// Disjoint union of catalog graphs, vertices renamed s1..sN in order.
CoxeterGraph product_graph(const std::vector<TypeLabel>& factors);

// Irreducible finite catalog labels with |W| <= max_order.
std::vector<TypeLabel> catalog_labels_up_to(std::size_t max_order);
// All nonempty multisets of those labels with product order <= max_order.
std::vector<std::vector<TypeLabel>> catalog_multisets(std::size_t max_order);

}  // namespace coxkit
