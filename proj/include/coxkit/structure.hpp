#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxkit/deodhar.hpp"
#include "coxkit/engine.hpp"
#include "coxkit/graph.hpp"
#include "coxkit/type_label.hpp"

namespace coxkit {

// Homomorphism W -> {+1,-1}, constant on each odd component.
struct Character {
  std::vector<VertexSet> odd_components;
  std::vector<int> values;

  int on_generator(int s) const;
};

std::vector<Character> homs_to_pm1(const CoxeterGraph& g);
Character sign_character(const CoxeterGraph& g);
// Value of the character on every element (indexed by element id).
std::vector<int> character_values(const EnumeratedGroup& group, const Character& chi);

enum class CenterVerdict { CenterTrivial, No, Yes };

struct CenterFactorDecision {
  CenterVerdict verdict;
  // Isomorphism type of the normal complement when verdict is Yes
  // (E7+ / H3+ for the even subgroups).
  std::optional<TypeLabel> complement;
};

bool has_nontrivial_center(TypeLabel t);
CenterFactorDecision center_direct_factor(TypeLabel t);

// `note` receives a remark for labels decided without further data.
bool is_directly_indecomposable(TypeLabel t, std::string* note = nullptr);

struct SubgroupDescription {
  enum class Kind { Trivial, Center, Whole, SpecialB, SpecialD, Explicit };

  Kind kind = Kind::Trivial;
  std::string case_label;
  GraphIso tau;
  SubgroupHandle elements;

  std::string str(const CoxeterGraph& g) const;
};

SubgroupHandle resolve(const SubgroupDescription& d, const EnumeratedGroup& group);

// Z(W) for irreducible finite W: {1, w0(S)} when w0(S) is central.
SubgroupHandle center_closed_form(const EnumeratedGroup& group);

SubgroupHandle parabolic_subgroup(const EnumeratedGroup& group, VertexSet subset);

// Core of the normalizer of W_I by pattern matching on the graph.
SubgroupDescription core_of_normalizer(const CoxeterGraph& g, VertexSet subset);
// Same; with verify, also computes it by brute force and throws on mismatch.
SubgroupDescription core_of_normalizer(const EnumeratedGroup& group, VertexSet subset,
                                       bool verify);
SubgroupHandle core_of_normalizer_brute(const EnumeratedGroup& group, VertexSet subset);

struct LongestPair {
  VertexSet subset;
  ElementId element;
};

// All (I, w0(I)) with 1 != w0(I) central in W_I and w0(I) in h.
std::vector<LongestPair> x_h(const EnumeratedGroup& group, const SubgroupHandle& h);

// Centralizer of the normal closure of a set of involutions, closed form.
SubgroupDescription centralizer_of_normal_closure(const EnumeratedGroup& group,
                                                  const std::vector<ElementId>& involutions,
                                                  bool verify);

struct RichardsonForm {
  ElementId conjugator;
  VertexSet subset;
  ElementId longest;
};

// Candidates (I, w0(I)) with w0(I) central in W_I, ordered by |I| then
// lexicographically.
std::vector<LongestPair> richardson_candidates(const EnumeratedGroup& group);
RichardsonForm richardson_form(const EnumeratedGroup& group, ElementId involution);
RichardsonForm richardson_form(const EnumeratedGroup& group, ElementId involution,
                               const std::vector<LongestPair>& candidates);

// Brute force: all subgroups of index 2 (kernels of surjections onto C2).
std::vector<SubgroupHandle> index_two_subgroups(const EnumeratedGroup& group);

struct CenterFactorSearch {
  CenterVerdict verdict;
  std::optional<SubgroupHandle> complement;
};

// Normal complement to Z(W) by exhaustive search over index-2 subgroups.
CenterFactorSearch center_factor_brute(const EnumeratedGroup& group);

}  // namespace coxkit
