#include "coxkit/structure.hpp"

#include <algorithm>

#include "coxkit/classify.hpp"
#include "coxkit/error.hpp"

namespace coxkit {

int Character::on_generator(int s) const {
  for (std::size_t i = 0; i < odd_components.size(); ++i)
    if (contains(odd_components[i], s)) return values[i];
  throw Error("vertex outside the graph");
}

std::vector<Character> homs_to_pm1(const CoxeterGraph& g) {
  auto odd = components(g, true);
  if (odd.size() > 30) throw CapExceeded("too many odd components");
  std::vector<Character> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << odd.size()); ++mask) {
    Character chi{odd, {}};
    for (std::size_t i = 0; i < odd.size(); ++i) chi.values.push_back((mask >> i) & 1 ? -1 : 1);
    out.push_back(std::move(chi));
  }
  return out;
}

Character sign_character(const CoxeterGraph& g) {
  auto odd = components(g, true);
  return {odd, std::vector<int>(odd.size(), -1)};
}

std::vector<int> character_values(const EnumeratedGroup& group, const Character& chi) {
  std::vector<int> out(group.order(), 1);
  for (ElementId w = 1; w < group.order(); ++w)
    out[w] = out[group.parent(w)] * chi.on_generator(group.last_generator(w));
  return out;
}

bool has_nontrivial_center(TypeLabel t) {
  t = canonical(t);
  switch (t.family) {
    case Family::A: return t.param == 1;
    case Family::B: return true;
    case Family::D: return t.param % 2 == 0;
    case Family::E: return t.param != 6;
    case Family::F: return true;
    case Family::H: return true;
    case Family::I2: return t.param % 2 == 0;
    default: return false;
  }
}

CenterFactorDecision center_direct_factor(TypeLabel t) {
  if (!t.is_finite() || t.family == Family::E7plus || t.family == Family::H3plus)
    return {CenterVerdict::CenterTrivial, std::nullopt};
  t = canonical(t);
  if (!has_nontrivial_center(t)) return {CenterVerdict::CenterTrivial, std::nullopt};
  const int n = t.param;
  if (t.family == Family::B && n % 2 == 1) return {CenterVerdict::Yes, canonical(type_D(n))};
  if (t.family == Family::I2 && n % 4 == 2) return {CenterVerdict::Yes, canonical(type_I2(n / 2))};
  if (t.family == Family::E && n == 7) return {CenterVerdict::Yes, TypeLabel{Family::E7plus, 7}};
  if (t.family == Family::H && n == 3) return {CenterVerdict::Yes, TypeLabel{Family::H3plus, 3}};
  return {CenterVerdict::No, std::nullopt};
}

bool is_directly_indecomposable(TypeLabel t, std::string* note) {
  if (t.family == Family::Unknown) {
    if (note) *note = "assumed irreducible infinite";
    return true;
  }
  if (!t.is_finite() || t.family == Family::E7plus || t.family == Family::H3plus) return true;
  return center_direct_factor(t).verdict != CenterVerdict::Yes;
}

std::string SubgroupDescription::str(const CoxeterGraph& g) const {
  auto tau_text = [&] {
    std::string s;
    for (int v : tau) s += (s.empty() ? "" : " ") + g.name(v);
    return s;
  };
  switch (kind) {
    case Kind::Trivial: return "1";
    case Kind::Center: return "Z(W)";
    case Kind::Whole: return "W";
    case Kind::SpecialB: return "tau(G_B" + std::to_string(tau.size()) + "), tau = (" + tau_text() + ")";
    case Kind::SpecialD: return "tau(G_D" + std::to_string(tau.size()) + "), tau = (" + tau_text() + ")";
    case Kind::Explicit: return "explicit subgroup";
  }
  return "";
}

SubgroupHandle center_closed_form(const EnumeratedGroup& group) {
  auto w0 = longest_element(group, group.graph().vertices());
  for (int s = 0; s < group.rank(); ++s)
    if (w0.sigma[s] != s) return trivial_subgroup(group);
  return SubgroupHandle(group.order(), {group.identity(), w0.element});
}

SubgroupHandle resolve(const SubgroupDescription& d, const EnumeratedGroup& group) {
  using Kind = SubgroupDescription::Kind;
  switch (d.kind) {
    case Kind::Trivial: return trivial_subgroup(group);
    case Kind::Center: return center_closed_form(group);
    case Kind::Whole: return whole_group(group);
    case Kind::SpecialB: return special_subgroup(group, SpecialFamily::B, d.tau);
    case Kind::SpecialD: return special_subgroup(group, SpecialFamily::D, d.tau);
    case Kind::Explicit: return d.elements;
  }
  return trivial_subgroup(group);
}

SubgroupHandle parabolic_subgroup(const EnumeratedGroup& group, VertexSet subset) {
  std::vector<ElementId> gens;
  for (int s : members(subset)) gens.push_back(group.generator(s));
  return subgroup_closure(group, gens);
}

namespace {

void require_irreducible_finite(const CoxeterGraph& g) {
  if (g.size() == 0 || components(g).size() != 1) throw Error("graph must be connected and nonempty");
  if (!classify_irreducible(g).is_finite()) throw InfiniteType("group is infinite");
}

// Isomorphisms from the catalog B_n / D_n graph onto g, if g has that type.
std::vector<GraphIso> special_embeddings(const CoxeterGraph& g, SpecialFamily family) {
  const int n = g.size();
  TypeLabel t = classify_irreducible(g);
  if (family == SpecialFamily::B) {
    if (n < 2 || t != type_B(n)) return {};
    return graph_isomorphisms(build_named(type_B(n)), g);
  }
  if (n < 3 || t != canonical(type_D(n))) return {};
  return graph_isomorphisms(build_named(type_D(n)), g);
}

VertexSet image_of_prefix(const GraphIso& tau, int k) {
  VertexSet s = 0;
  for (int i = 0; i < k; ++i) s |= singleton(tau[i]);
  return s;
}

}  // namespace

SubgroupDescription core_of_normalizer(const CoxeterGraph& g, VertexSet subset) {
  using Kind = SubgroupDescription::Kind;
  require_irreducible_finite(g);
  if ((subset & ~g.vertices()) != 0) throw Error("subset outside the vertex set");
  if (subset == 0 || subset == g.vertices()) return {Kind::Whole, "I empty or S", {}, {}};
  const int n = g.size();
  for (const GraphIso& tau : special_embeddings(g, SpecialFamily::B))
    for (int k = 1; k < n; ++k)
      if (subset == image_of_prefix(tau, k)) return {Kind::SpecialB, "(i)", tau, {}};
  for (const GraphIso& tau : special_embeddings(g, SpecialFamily::D))
    for (int k = 2; k < n; ++k)
      if (subset == image_of_prefix(tau, k)) return {Kind::SpecialD, "(ii)", tau, {}};
  return {Kind::Center, "(iii)", {}, {}};
}

SubgroupHandle core_of_normalizer_brute(const EnumeratedGroup& group, VertexSet subset) {
  return core(group, normalizer(group, parabolic_subgroup(group, subset)));
}

SubgroupDescription core_of_normalizer(const EnumeratedGroup& group, VertexSet subset,
                                       bool verify) {
  SubgroupDescription d = core_of_normalizer(group.graph(), subset);
  if (verify && !(resolve(d, group) == core_of_normalizer_brute(group, subset)))
    throw VerificationFailure("core of normalizer: closed form " + d.str(group.graph()) +
                              " disagrees with brute force for I = " +
                              format_subset(group.graph(), subset));
  return d;
}

std::vector<LongestPair> x_h(const EnumeratedGroup& group, const SubgroupHandle& h) {
  if (group.rank() > 20) throw CapExceeded("rank too large for subset enumeration");
  std::vector<LongestPair> out;
  for (VertexSet subset = 1; subset < (VertexSet{1} << group.rank()); ++subset) {
    auto l = longest_element(group, subset);
    bool central = true;
    for (int s : members(subset)) central = central && l.sigma[s] == s;
    if (central && l.element != group.identity() && h.contains(l.element))
      out.push_back({subset, l.element});
  }
  return out;
}

SubgroupDescription centralizer_of_normal_closure(const EnumeratedGroup& group,
                                                  const std::vector<ElementId>& involutions,
                                                  bool verify) {
  using Kind = SubgroupDescription::Kind;
  const CoxeterGraph& g = group.graph();
  require_irreducible_finite(g);
  for (ElementId x : involutions)
    if (x == group.identity() || group.multiply(x, x) != group.identity())
      throw Error("element " + std::to_string(x) + " is not an involution");
  SubgroupHandle h = subgroup_closure(group, involutions, true);
  SubgroupHandle z = center_closed_form(group);
  SubgroupDescription d{Kind::Center, "(iv)", {}, {}};
  if (h.subset_of(z)) {
    d = {Kind::Whole, "(i)", {}, {}};
  } else {
    bool done = false;
    for (const GraphIso& tau : special_embeddings(g, SpecialFamily::B))
      if (!done && h.subset_of(special_subgroup(group, SpecialFamily::B, tau))) {
        d = {Kind::SpecialB, "(ii)", tau, {}};
        done = true;
      }
    for (const GraphIso& tau : special_embeddings(g, SpecialFamily::D))
      if (!done && h.subset_of(special_subgroup(group, SpecialFamily::D, tau))) {
        d = {Kind::SpecialD, "(iii)", tau, {}};
        done = true;
      }
  }
  if (verify && !(resolve(d, group) == centralizer(group, generating_set(group, h))))
    throw VerificationFailure("centralizer of normal closure: closed form " + d.str(g) +
                              " disagrees with brute force");
  return d;
}

std::vector<LongestPair> richardson_candidates(const EnumeratedGroup& group) {
  if (group.rank() > 20) throw CapExceeded("rank too large for subset enumeration");
  std::vector<std::pair<std::vector<int>, LongestPair>> keyed;
  for (VertexSet subset = 1; subset < (VertexSet{1} << group.rank()); ++subset) {
    auto l = longest_element(group, subset);
    bool central = true;
    for (int s : members(subset)) central = central && l.sigma[s] == s;
    if (central) keyed.push_back({members(subset), {subset, l.element}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<LongestPair> out;
  for (auto& [key, pair] : keyed) out.push_back(pair);
  return out;
}

RichardsonForm richardson_form(const EnumeratedGroup& group, ElementId w) {
  return richardson_form(group, w, richardson_candidates(group));
}

RichardsonForm richardson_form(const EnumeratedGroup& group, ElementId w,
                               const std::vector<LongestPair>& candidates) {
  if (w == group.identity() || group.multiply(w, w) != group.identity())
    throw Error("richardson_form needs an involution");
  // Conjugacy class of w with a conjugator u (u w u^-1 = y) for each member.
  constexpr ElementId kUnset = ~ElementId{0};
  std::vector<ElementId> via(group.order(), kUnset);
  via[w] = group.identity();
  std::vector<ElementId> queue{w};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (ElementId s : group.generators()) {
      ElementId y = group.conjugate(s, queue[i]);
      if (via[y] == kUnset) {
        via[y] = group.multiply(s, via[queue[i]]);
        queue.push_back(y);
      }
    }
  for (const LongestPair& c : candidates)
    if (via[c.element] != kUnset) return {via[c.element], c.subset, c.element};
  throw VerificationFailure("no conjugate of the form w0(I) found");
}

std::vector<SubgroupHandle> index_two_subgroups(const EnumeratedGroup& group) {
  FiniteGroup c2 = cyclic_group(2);
  const std::size_t k = group.generators().size();
  std::vector<SubgroupHandle> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<ElementId> images;
    for (std::size_t i = 0; i < k; ++i) images.push_back((mask >> i) & 1);
    auto hom = extend_homomorphism(group, c2, images);
    if (!hom) continue;
    std::vector<ElementId> kernel;
    for (ElementId x = 0; x < group.order(); ++x)
      if ((*hom)[x] == 0) kernel.push_back(x);
    out.emplace_back(group.order(), std::move(kernel));
  }
  return out;
}

CenterFactorSearch center_factor_brute(const EnumeratedGroup& group) {
  SubgroupHandle z = center(group);
  if (z.size() == 1) return {CenterVerdict::CenterTrivial, std::nullopt};
  if (z.size() == group.order()) return {CenterVerdict::No, std::nullopt};
  // Complements to a central subgroup of order 2 are exactly the index-2
  // subgroups missing its generator.
  if (z.size() != 2) throw Error("center of order other than 2 is not handled");
  for (const SubgroupHandle& k : index_two_subgroups(group))
    if (!k.contains(z.elements()[1])) return {CenterVerdict::Yes, k};
  return {CenterVerdict::No, std::nullopt};
}

}  // namespace coxkit
