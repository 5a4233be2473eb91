#include "coxkit/engine.hpp"

#include <array>

#include "coxkit/classify.hpp"

namespace coxkit {

namespace {

std::size_t hash_images(std::span<const RootId> images) {
  std::uint64_t h = 1469598103934665603ull;
  for (RootId r : images) {
    h ^= static_cast<std::uint64_t>(r) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

constexpr ElementId kEmpty = ~ElementId{0};

}  // namespace

EnumeratedGroup::EnumeratedGroup(const CoxeterGraph& g, std::size_t cap)
    : graph_(g), roots_(g), rank_(g.size()) {
  Cardinal expected = group_order(classify_components(g));
  if (expected.is_infinite()) throw InfiniteType("group is infinite");
  if (*expected.value > cap)
    throw CapExceeded("group order " + expected.str() + " exceeds cap " + std::to_string(cap));
  const std::size_t n = static_cast<std::size_t>(expected.value->convert_to<unsigned long long>());
  const std::size_t r = roots_.size();

  std::size_t buckets = 16;
  while (buckets < 2 * n) buckets <<= 1;
  hash_.assign(buckets, kEmpty);
  images_.reserve(n * rank_);
  perms_.reserve(n * r);

  for (int s = 0; s < rank_; ++s) images_.push_back(s);
  for (std::size_t i = 0; i < r; ++i) perms_.push_back(static_cast<RootId>(i));
  hash_[slot(images(0))] = 0;
  length_.push_back(0);
  parent_.push_back(0);
  parent_gen_.push_back(-1);

  std::array<RootId, kMaxVertices> buf{};
  for (std::size_t w = 0; w < length_.size(); ++w) {
    for (int s = 0; s < rank_; ++s) {
      const RootId* pw = perms_.data() + w * r;
      for (int t = 0; t < rank_; ++t) buf[t] = pw[roots_.reflect(s, t)];
      std::span<const RootId> key(buf.data(), rank_);
      std::size_t at = slot(key);
      if (hash_[at] == kEmpty) {
        if (length_.size() >= n) throw Error("enumeration exceeded the expected order");
        ElementId id = static_cast<ElementId>(length_.size());
        images_.insert(images_.end(), key.begin(), key.end());
        std::size_t base = perms_.size();
        perms_.resize(base + r);
        pw = perms_.data() + w * r;
        for (std::size_t q = 0; q < r; ++q) perms_[base + q] = pw[roots_.reflect(s, static_cast<RootId>(q))];
        hash_[at] = id;
        length_.push_back(length_[w] + 1);
        parent_.push_back(static_cast<ElementId>(w));
        parent_gen_.push_back(s);
      }
      right_.push_back(hash_[at]);
    }
  }
  if (length_.size() != n) throw Error("enumeration found fewer elements than expected");
  for (int s = 0; s < rank_; ++s) generators_.push_back(right_[s]);

  inverse_.resize(n);
  std::vector<RootId> inv(r);
  for (std::size_t w = 0; w < n; ++w) {
    auto p = permutation(static_cast<ElementId>(w));
    for (std::size_t q = 0; q < r; ++q) inv[p[q]] = static_cast<RootId>(q);
    inverse_[w] = id_of(GroupElement(inv.begin(), inv.begin() + rank_));
  }
}

std::size_t EnumeratedGroup::slot(std::span<const RootId> key) const {
  const std::size_t mask = hash_.size() - 1;
  std::size_t at = hash_images(key) & mask;
  while (hash_[at] != kEmpty) {
    auto im = images(hash_[at]);
    if (std::equal(im.begin(), im.end(), key.begin())) return at;
    at = (at + 1) & mask;
  }
  return at;
}

std::optional<ElementId> EnumeratedGroup::find(std::span<const RootId> key) const {
  if (static_cast<int>(key.size()) != rank_) return std::nullopt;
  ElementId id = hash_[slot(key)];
  if (id == kEmpty) return std::nullopt;
  return id;
}

ElementId EnumeratedGroup::id_of(const GroupElement& key) const {
  auto id = find(key);
  if (!id) throw Error("image tuple is not an element of the group");
  return *id;
}

ElementId EnumeratedGroup::multiply(ElementId a, ElementId b) const {
  std::array<RootId, kMaxVertices> buf{};
  auto pa = permutation(a);
  auto ib = images(b);
  for (int t = 0; t < rank_; ++t) buf[t] = pa[ib[t]];
  return hash_[slot(std::span<const RootId>(buf.data(), rank_))];
}

std::vector<int> EnumeratedGroup::word(ElementId w) const {
  std::vector<int> out;
  for (; w != 0; w = parent_[w]) out.push_back(parent_gen_[w]);
  std::reverse(out.begin(), out.end());
  return out;
}

ElementId EnumeratedGroup::from_word(const std::vector<int>& word) const {
  ElementId w = identity();
  for (int s : word) w = times_generator(w, s);
  return w;
}

SubgroupHandle::SubgroupHandle(std::size_t group_order, std::vector<ElementId> elements)
    : elements_(std::move(elements)), mask_(group_order) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (ElementId x : elements_) {
    if (x >= group_order) throw Error("subgroup element id out of range");
    mask_[x] = 1;
  }
}

bool SubgroupHandle::subset_of(const SubgroupHandle& other) const {
  for (ElementId x : elements_)
    if (!other.contains(x)) return false;
  return true;
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<ElementId> table,
                         std::vector<ElementId> generators)
    : table_(std::move(table)), inverse_(order), generators_(std::move(generators)) {
  if (table_.size() != order * order) throw Error("multiplication table has wrong size");
  for (ElementId a = 0; a < order; ++a) {
    if (multiply(0, a) != a || multiply(a, 0) != a) throw Error("element 0 is not the identity");
    bool found = false;
    for (ElementId b = 0; b < order && !found; ++b)
      if (multiply(a, b) == 0) {
        inverse_[a] = b;
        found = true;
      }
    if (!found) throw Error("element without inverse");
  }
}

FiniteGroup to_finite_group(const EnumeratedGroup& group) {
  const std::size_t n = group.order();
  std::vector<ElementId> table(n * n);
  // b = parent(b) * s with parent(b) < b in BFS order.
  for (ElementId a = 0; a < n; ++a) {
    table[a * n] = a;
    for (ElementId b = 1; b < n; ++b) {
      table[a * n + b] =
          group.times_generator(table[a * n + group.parent(b)], group.last_generator(b));
    }
  }
  return FiniteGroup(n, std::move(table), group.generators());
}

FiniteGroup subgroup_as_group(const FiniteGroup& group, const SubgroupHandle& h,
                              std::vector<ElementId>* embedding) {
  const auto& elems = h.elements();
  const std::size_t n = elems.size();
  std::vector<ElementId> local(group.order(), kEmpty);
  for (std::size_t i = 0; i < n; ++i) local[elems[i]] = static_cast<ElementId>(i);
  if (n == 0 || elems.front() != group.identity()) throw Error("subgroup lacks the identity");
  std::vector<ElementId> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ElementId p = local[group.multiply(elems[i], elems[j])];
      if (p == kEmpty) throw Error("element set is not a subgroup");
      table[i * n + j] = p;
    }
  std::vector<ElementId> gens;
  for (ElementId g : generating_set(group, h)) gens.push_back(local[g]);
  if (embedding) *embedding = elems;
  return FiniteGroup(n, std::move(table), std::move(gens));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<ElementId> table(n * n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      table[x * n + y] = static_cast<ElementId>(a.multiply(x / nb, y / nb) * nb +
                                                b.multiply(x % nb, y % nb));
  std::vector<ElementId> gens;
  for (ElementId g : a.generators()) gens.push_back(static_cast<ElementId>(g * nb));
  for (ElementId g : b.generators()) gens.push_back(g);
  return FiniteGroup(n, std::move(table), std::move(gens));
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<ElementId> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<ElementId>((x + y) % n);
  std::vector<ElementId> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup(n, std::move(table), std::move(gens));
}

}  // namespace coxkit
