#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coxkit/error.hpp"
#include "coxkit/graph.hpp"
#include "coxkit/rootspace.hpp"

namespace coxkit {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultGroupCap = 10000;
inline constexpr std::size_t kDefaultIsoCap = 1200;

// Elements of a finite Coxeter group, encoded by the images of the simple
// roots. Ids follow BFS order over right multiplication by generators in
// vertex order; the identity is 0.
class EnumeratedGroup {
 public:
  explicit EnumeratedGroup(const CoxeterGraph& g, std::size_t cap = kDefaultGroupCap);

  const CoxeterGraph& graph() const { return graph_; }
  const RootTable& roots() const { return roots_; }
  std::size_t order() const { return length_.size(); }
  int rank() const { return rank_; }

  ElementId identity() const { return 0; }
  ElementId generator(int s) const { return right_[s]; }
  const std::vector<ElementId>& generators() const { return generators_; }

  std::span<const RootId> images(ElementId w) const {
    return {images_.data() + static_cast<std::size_t>(w) * rank_, static_cast<std::size_t>(rank_)};
  }
  GroupElement element(ElementId w) const {
    auto im = images(w);
    return GroupElement(im.begin(), im.end());
  }
  // Full permutation of the root ids induced by w.
  std::span<const RootId> permutation(ElementId w) const {
    const std::size_t r = roots_.size();
    return {perms_.data() + static_cast<std::size_t>(w) * r, r};
  }
  RootId act(ElementId w, RootId r) const { return permutation(w)[r]; }

  std::optional<ElementId> find(std::span<const RootId> images) const;
  ElementId id_of(const GroupElement& images) const;

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId times_generator(ElementId w, int s) const {
    return right_[static_cast<std::size_t>(w) * rank_ + s];
  }
  ElementId conjugate(ElementId g, ElementId x) const {
    return multiply(multiply(g, x), inverse(g));
  }

  // Word length from the enumeration (BFS depth).
  int length(ElementId w) const { return length_[w]; }
  // BFS tree: w = parent(w) * last_generator(w) for w != identity.
  ElementId parent(ElementId w) const { return parent_[w]; }
  int last_generator(ElementId w) const { return parent_gen_[w]; }
  // A reduced word for w (vertex indices).
  std::vector<int> word(ElementId w) const;
  ElementId from_word(const std::vector<int>& word) const;

 private:
  std::size_t slot(std::span<const RootId> images) const;

  CoxeterGraph graph_;
  RootTable roots_;
  int rank_;
  std::vector<RootId> images_;
  std::vector<RootId> perms_;
  std::vector<ElementId> right_;
  std::vector<ElementId> inverse_;
  std::vector<int> length_;
  std::vector<ElementId> parent_;
  std::vector<int> parent_gen_;
  std::vector<ElementId> generators_;
  std::vector<ElementId> hash_;
};

// A finite group given by its multiplication table; identity is 0.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::vector<ElementId> table,
              std::vector<ElementId> generators);

  std::size_t order() const { return inverse_.size(); }
  ElementId identity() const { return 0; }
  ElementId multiply(ElementId a, ElementId b) const {
    return table_[static_cast<std::size_t>(a) * order() + b];
  }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  const std::vector<ElementId>& generators() const { return generators_; }

 private:
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> generators_;
};

template <typename G>
concept GroupLike = requires(const G& g, ElementId a) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.identity() } -> std::same_as<ElementId>;
  { g.multiply(a, a) } -> std::same_as<ElementId>;
  { g.inverse(a) } -> std::same_as<ElementId>;
  { g.generators() } -> std::convertible_to<const std::vector<ElementId>&>;
};

// Sorted set of element ids of some group.
class SubgroupHandle {
 public:
  SubgroupHandle() = default;
  SubgroupHandle(std::size_t group_order, std::vector<ElementId> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<ElementId>& elements() const { return elements_; }
  bool contains(ElementId x) const { return x < mask_.size() && mask_[x]; }
  bool subset_of(const SubgroupHandle& other) const;
  bool operator==(const SubgroupHandle& other) const { return elements_ == other.elements_; }

 private:
  std::vector<ElementId> elements_;
  std::vector<char> mask_;
};

template <GroupLike G>
ElementId conjugate_by(const G& group, ElementId g, ElementId x) {
  return group.multiply(group.multiply(g, x), group.inverse(g));
}

template <GroupLike G>
int element_order(const G& group, ElementId x) {
  int k = 1;
  for (ElementId y = x; y != group.identity(); y = group.multiply(y, x)) ++k;
  return k;
}

template <GroupLike G>
SubgroupHandle whole_group(const G& group) {
  std::vector<ElementId> all(group.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ElementId>(i);
  return SubgroupHandle(group.order(), std::move(all));
}

template <GroupLike G>
SubgroupHandle trivial_subgroup(const G& group) {
  return SubgroupHandle(group.order(), {group.identity()});
}

// Conjugacy class of x under the whole group.
template <GroupLike G>
std::vector<ElementId> conjugacy_class(const G& group, ElementId x) {
  std::vector<char> seen(group.order());
  std::vector<ElementId> cls{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (ElementId s : group.generators()) {
      ElementId y = conjugate_by(group, s, cls[i]);
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
  std::sort(cls.begin(), cls.end());
  return cls;
}

// Class index of every element; classes numbered by smallest member.
template <GroupLike G>
std::vector<int> conjugacy_class_ids(const G& group) {
  std::vector<int> ids(group.order(), -1);
  int next = 0;
  for (ElementId x = 0; x < group.order(); ++x) {
    if (ids[x] >= 0) continue;
    for (ElementId y : conjugacy_class(group, x)) ids[y] = next;
    ++next;
  }
  return ids;
}

template <GroupLike G>
SubgroupHandle subgroup_closure(const G& group, const std::vector<ElementId>& gens,
                                bool normal = false) {
  std::vector<ElementId> seeds;
  std::vector<char> seeded(group.order());
  for (ElementId g : gens) {
    if (normal) {
      for (ElementId c : conjugacy_class(group, g))
        if (!seeded[c]) {
          seeded[c] = 1;
          seeds.push_back(c);
        }
    } else if (!seeded[g]) {
      seeded[g] = 1;
      seeds.push_back(g);
    }
  }
  std::vector<char> in(group.order());
  std::vector<ElementId> elems{group.identity()};
  in[group.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (ElementId s : seeds) {
      ElementId y = group.multiply(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  return SubgroupHandle(group.order(), std::move(elems));
}

// Greedy generating set: elements not yet in the span of the previous ones.
template <GroupLike G>
std::vector<ElementId> generating_set(const G& group, const SubgroupHandle& h) {
  std::vector<ElementId> gens;
  SubgroupHandle span = trivial_subgroup(group);
  for (ElementId x : h.elements()) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = subgroup_closure(group, gens);
  }
  return gens;
}

// Throws unless `elements` is closed under products and inverses.
template <GroupLike G>
SubgroupHandle make_subgroup(const G& group, std::vector<ElementId> elements) {
  SubgroupHandle h(group.order(), std::move(elements));
  if (!h.contains(group.identity())) throw Error("subgroup lacks the identity");
  SubgroupHandle span = subgroup_closure(group, h.elements());
  if (!(span == h)) throw Error("element set is not closed under multiplication");
  return h;
}

template <GroupLike G>
SubgroupHandle centralizer(const G& group, const std::vector<ElementId>& xs) {
  std::vector<ElementId> out;
  for (ElementId g = 0; g < group.order(); ++g) {
    bool ok = true;
    for (ElementId x : xs)
      if (group.multiply(g, x) != group.multiply(x, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return SubgroupHandle(group.order(), std::move(out));
}

template <GroupLike G>
SubgroupHandle center(const G& group) {
  return centralizer(group, group.generators());
}

template <GroupLike G>
SubgroupHandle normalizer(const G& group, const SubgroupHandle& h) {
  auto gens = generating_set(group, h);
  std::vector<ElementId> out;
  for (ElementId g = 0; g < group.order(); ++g) {
    bool ok = true;
    for (ElementId x : gens)
      if (!h.contains(conjugate_by(group, g, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return SubgroupHandle(group.order(), std::move(out));
}

// Largest normal subgroup inside h: elements whose whole class lies in h,
// found by pruning under conjugation by the group generators.
template <GroupLike G>
SubgroupHandle core(const G& group, const SubgroupHandle& h) {
  std::vector<char> alive(group.order());
  for (ElementId x : h.elements()) alive[x] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId x : h.elements()) {
      if (!alive[x]) continue;
      for (ElementId s : group.generators())
        if (!alive[conjugate_by(group, s, x)]) {
          alive[x] = 0;
          changed = true;
          break;
        }
    }
  }
  std::vector<ElementId> out;
  for (ElementId x : h.elements())
    if (alive[x]) out.push_back(x);
  return SubgroupHandle(group.order(), std::move(out));
}

template <GroupLike G>
bool is_normal(const G& group, const SubgroupHandle& h) {
  return core(group, h).size() == h.size();
}

// Extends generator images to a homomorphism source -> target, or nullopt
// when the assignment is inconsistent. images[i] is the image of
// source.generators()[i].
template <GroupLike G1, GroupLike G2>
std::optional<std::vector<ElementId>> extend_homomorphism(
    const G1& source, const G2& target, const std::vector<ElementId>& images) {
  constexpr ElementId kUnset = ~ElementId{0};
  const auto& gens = source.generators();
  std::vector<ElementId> map(source.order(), kUnset);
  map[source.identity()] = target.identity();
  std::vector<ElementId> queue{source.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    ElementId w = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      ElementId x = source.multiply(w, gens[k]);
      ElementId fx = target.multiply(map[w], images[k]);
      if (map[x] == kUnset) {
        map[x] = fx;
        queue.push_back(x);
      } else if (map[x] != fx) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != source.order()) throw Error("generators do not generate the group");
  return map;
}

template <GroupLike G1, GroupLike G2>
bool is_homomorphism(const G1& source, const G2& target, const std::vector<ElementId>& f) {
  for (ElementId a = 0; a < source.order(); ++a)
    for (ElementId b = 0; b < source.order(); ++b)
      if (f[source.multiply(a, b)] != target.multiply(f[a], f[b])) return false;
  return true;
}

// Per-element invariants used to prune generator-image searches.
struct ElementProfile {
  std::vector<int> order;
  std::vector<int> class_size;
  std::vector<int> class_id;
};

template <GroupLike G>
ElementProfile element_profile(const G& group) {
  ElementProfile p;
  p.class_id = conjugacy_class_ids(group);
  std::vector<int> counts;
  for (int c : p.class_id) {
    if (c >= static_cast<int>(counts.size())) counts.resize(c + 1);
    ++counts[c];
  }
  for (ElementId x = 0; x < group.order(); ++x) {
    p.order.push_back(element_order(group, x));
    p.class_size.push_back(counts[p.class_id[x]]);
  }
  return p;
}

namespace detail {

template <GroupLike G1, GroupLike G2>
struct ImageSearch {
  const G1& source;
  const G2& target;
  const ElementProfile& sp;
  const ElementProfile& tp;
  bool first_class_reps;
  std::size_t limit;
  std::vector<std::size_t> sequence;               // generator indices, least central first
  std::vector<std::vector<ElementId>> candidates;  // indexed by generator
  std::vector<ElementId> images;                   // indexed by generator
  std::vector<std::vector<ElementId>> found;
  std::vector<ElementId> map, queue;
  std::vector<char> hit;

  // The first k generators of the sequence extend to an injective
  // homomorphism on the subgroup they span.
  bool prefix_extends(std::size_t k) {
    constexpr ElementId kUnset = ~ElementId{0};
    const auto& gens = source.generators();
    map.assign(source.order(), kUnset);
    hit.assign(target.order(), 0);
    map[source.identity()] = target.identity();
    hit[target.identity()] = 1;
    queue.assign(1, source.identity());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      ElementId w = queue[i];
      for (std::size_t d = 0; d < k; ++d) {
        ElementId x = source.multiply(w, gens[sequence[d]]);
        ElementId fx = target.multiply(map[w], images[sequence[d]]);
        if (map[x] == kUnset) {
          if (hit[fx]) return false;
          hit[fx] = 1;
          map[x] = fx;
          queue.push_back(x);
        } else if (map[x] != fx) {
          return false;
        }
      }
    }
    return true;
  }

  void run(std::size_t depth) {
    if (found.size() >= limit) return;
    const auto& gens = source.generators();
    if (depth == gens.size()) {
      auto full = extend_homomorphism(source, target, images);
      if (!full) return;
      std::vector<char> seen(target.order());
      for (ElementId y : *full) {
        if (seen[y]) return;
        seen[y] = 1;
      }
      found.push_back(std::move(*full));
      return;
    }
    const std::size_t g = sequence[depth];
    std::vector<char> used_class;
    for (ElementId c : candidates[g]) {
      if (depth == 0 && first_class_reps) {
        int cls = tp.class_id[c];
        if (cls >= static_cast<int>(used_class.size())) used_class.resize(cls + 1);
        if (used_class[cls]) continue;
        used_class[cls] = 1;
      }
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        ElementId sprod = source.multiply(gens[sequence[d]], gens[g]);
        ElementId tprod = target.multiply(images[sequence[d]], c);
        ok = sp.order[sprod] == tp.order[tprod] && sp.class_size[sprod] == tp.class_size[tprod];
      }
      if (!ok) continue;
      images[g] = c;
      if (depth + 1 < gens.size() && !prefix_extends(depth + 1)) continue;
      run(depth + 1);
      if (found.size() >= limit) return;
    }
  }
};

template <GroupLike G1, GroupLike G2>
std::vector<std::vector<ElementId>> search_isomorphisms(const G1& a, const G2& b,
                                                        bool class_reps,
                                                        std::size_t limit) {
  if (a.order() != b.order()) return {};
  ElementProfile pa = element_profile(a), pb = element_profile(b);
  auto stats = [](const ElementProfile& p) {
    std::vector<std::pair<int, int>> v;
    for (std::size_t i = 0; i < p.order.size(); ++i) v.emplace_back(p.order[i], p.class_size[i]);
    std::sort(v.begin(), v.end());
    return v;
  };
  if (stats(pa) != stats(pb)) return {};
  ImageSearch<G1, G2> search{a, b, pa, pb, class_reps, limit, {}, {}, {}, {}, {}, {}, {}};
  const auto& gens = a.generators();
  search.images.resize(gens.size());
  for (ElementId g : gens) {
    std::vector<ElementId> cands;
    for (ElementId y = 0; y < b.order(); ++y)
      if (pb.order[y] == pa.order[g] && pb.class_size[y] == pa.class_size[g]) cands.push_back(y);
    search.candidates.push_back(std::move(cands));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) search.sequence.push_back(i);
  std::stable_sort(search.sequence.begin(), search.sequence.end(), [&](std::size_t x, std::size_t y) {
    const int cx = pa.class_size[gens[x]], cy = pa.class_size[gens[y]];
    if (cx != cy) return cx > cy;
    return search.candidates[x].size() < search.candidates[y].size();
  });
  search.run(0);
  return search.found;
}

}  // namespace detail

// An isomorphism a -> b as an element map, or nullopt.
template <GroupLike G1, GroupLike G2>
std::optional<std::vector<ElementId>> find_isomorphism(const G1& a, const G2& b,
                                                       std::size_t cap = kDefaultIsoCap) {
  if (a.order() > cap || b.order() > cap)
    throw CapExceeded("isomorphism search cap " + std::to_string(cap) + " exceeded");
  auto found = detail::search_isomorphisms(a, b, true, 1);
  if (found.empty()) return std::nullopt;
  if (!is_homomorphism(a, b, found.front()))
    throw VerificationFailure("isomorphism search returned a non-homomorphism");
  return found.front();
}

// All automorphisms as element maps (at most `limit`).
template <GroupLike G>
std::vector<std::vector<ElementId>> automorphisms(const G& group,
                                                  std::size_t limit = 1000000) {
  return detail::search_isomorphisms(group, group, false, limit);
}

FiniteGroup to_finite_group(const EnumeratedGroup& group);
FiniteGroup subgroup_as_group(const FiniteGroup& group, const SubgroupHandle& h,
                              std::vector<ElementId>* embedding = nullptr);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup cyclic_group(std::size_t n);

}  // namespace coxkit
