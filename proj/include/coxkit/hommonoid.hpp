#pragma once

#include <compare>
#include <vector>

#include "coxkit/engine.hpp"

namespace coxkit {

// Element map of a finite group, indexed by element id.
using ElementMap = std::vector<ElementId>;

// A homomorphism G -> Z(G), stored densely.
struct CentralHom {
  ElementMap values;

  ElementId operator()(ElementId w) const { return values[w]; }
  auto operator<=>(const CentralHom&) const = default;
};

// The monoid Hom(G, Z(G)) under (f*g)(w) = f(w) g(w) f(g(w))^-1.
class HomMonoid {
 public:
  explicit HomMonoid(FiniteGroup group);

  const FiniteGroup& group() const { return group_; }
  const SubgroupHandle& center() const { return center_; }

  bool is_central_hom(const ElementMap& f) const;
  CentralHom make(ElementMap values) const;  // throws unless a central hom
  CentralHom trivial() const;

  CentralHom star(const CentralHom& f, const CentralHom& g) const;
  ElementMap flat(const CentralHom& f) const;
  bool is_invertible(const CentralHom& f) const;
  CentralHom invert(const CentralHom& f) const;

  // Every central hom, from all assignments of generators into Z(G).
  std::vector<CentralHom> all(std::size_t max_assignments = std::size_t{1} << 22) const;

 private:
  FiniteGroup group_;
  SubgroupHandle center_;
};

ElementMap compose(const ElementMap& f, const ElementMap& g);  // f after g
ElementMap inverse_map(const ElementMap& f);                   // throws unless bijective
bool is_bijective(const ElementMap& f);
// h . f = h o f o h^-1.
ElementMap conjugate_map(const ElementMap& h, const ElementMap& f);

// End(G) from all generator images (at most max_assignments tried).
std::vector<ElementMap> endomorphisms(const FiniteGroup& group,
                                      std::size_t max_assignments = std::size_t{1} << 22);

}  // namespace coxkit
