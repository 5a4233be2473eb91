#include "coxkit/hommonoid.hpp"

#include "coxkit/error.hpp"

namespace coxkit {

namespace {

// Calls visit(images) for every assignment of the generators into `pool`.
template <typename Visit>
void for_each_assignment(std::size_t generators, const std::vector<ElementId>& pool,
                         std::size_t max_assignments, Visit visit) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < generators; ++i) {
    total *= pool.size();
    if (total > max_assignments) throw CapExceeded("too many generator assignments");
  }
  std::vector<std::size_t> digits(generators, 0);
  std::vector<ElementId> images(generators);
  for (std::size_t n = 0; n < total; ++n) {
    std::size_t rest = n;
    for (std::size_t i = 0; i < generators; ++i) {
      images[i] = pool[rest % pool.size()];
      rest /= pool.size();
    }
    visit(images);
  }
}

}  // namespace

HomMonoid::HomMonoid(FiniteGroup group) : group_(std::move(group)), center_(coxkit::center(group_)) {}

bool HomMonoid::is_central_hom(const ElementMap& f) const {
  if (f.size() != group_.order()) return false;
  for (ElementId y : f)
    if (!center_.contains(y)) return false;
  return is_homomorphism(group_, group_, f);
}

CentralHom HomMonoid::make(ElementMap values) const {
  if (!is_central_hom(values)) throw Error("map is not a homomorphism into the center");
  return CentralHom{std::move(values)};
}

CentralHom HomMonoid::trivial() const {
  return CentralHom{ElementMap(group_.order(), group_.identity())};
}

CentralHom HomMonoid::star(const CentralHom& f, const CentralHom& g) const {
  CentralHom out{ElementMap(group_.order())};
  for (ElementId w = 0; w < group_.order(); ++w)
    out.values[w] = group_.multiply(group_.multiply(f(w), g(w)), group_.inverse(f(g(w))));
  return out;
}

ElementMap HomMonoid::flat(const CentralHom& f) const {
  ElementMap out(group_.order());
  for (ElementId w = 0; w < group_.order(); ++w) out[w] = group_.multiply(w, group_.inverse(f(w)));
  return out;
}

bool HomMonoid::is_invertible(const CentralHom& f) const {
  ElementMap fl = flat(f);
  std::vector<char> hit(group_.order());
  for (ElementId z : center_.elements()) {
    if (hit[fl[z]]) return false;
    hit[fl[z]] = 1;
  }
  return true;
}

CentralHom HomMonoid::invert(const CentralHom& f) const {
  if (!is_invertible(f)) throw Error("central hom is not invertible");
  ElementMap fl = flat(f);
  ElementMap back(group_.order(), group_.identity());
  for (ElementId z : center_.elements()) back[fl[z]] = z;
  CentralHom out{ElementMap(group_.order())};
  for (ElementId w = 0; w < group_.order(); ++w) out.values[w] = group_.inverse(back[f(w)]);
  return out;
}

std::vector<CentralHom> HomMonoid::all(std::size_t max_assignments) const {
  std::vector<CentralHom> out;
  for_each_assignment(group_.generators().size(), center_.elements(), max_assignments,
                      [&](const std::vector<ElementId>& images) {
                        if (auto map = extend_homomorphism(group_, group_, images))
                          out.push_back(CentralHom{std::move(*map)});
                      });
  return out;
}

ElementMap compose(const ElementMap& f, const ElementMap& g) {
  ElementMap out(g.size());
  for (std::size_t w = 0; w < g.size(); ++w) out[w] = f[g[w]];
  return out;
}

bool is_bijective(const ElementMap& f) {
  std::vector<char> hit(f.size());
  for (ElementId y : f) {
    if (y >= f.size() || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

ElementMap inverse_map(const ElementMap& f) {
  if (!is_bijective(f)) throw Error("map is not bijective");
  ElementMap out(f.size());
  for (std::size_t w = 0; w < f.size(); ++w) out[f[w]] = static_cast<ElementId>(w);
  return out;
}

ElementMap conjugate_map(const ElementMap& h, const ElementMap& f) {
  return compose(h, compose(f, inverse_map(h)));
}

std::vector<ElementMap> endomorphisms(const FiniteGroup& group, std::size_t max_assignments) {
  std::vector<ElementId> pool(group.order());
  for (ElementId x = 0; x < group.order(); ++x) pool[x] = x;
  std::vector<ElementMap> out;
  for_each_assignment(group.generators().size(), pool, max_assignments,
                      [&](const std::vector<ElementId>& images) {
                        if (auto map = extend_homomorphism(group, group, images))
                          out.push_back(std::move(*map));
                      });
  return out;
}

}  // namespace coxkit
