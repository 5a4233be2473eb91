#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxkit/graph.hpp"
#include "coxkit/type_label.hpp"

namespace coxkit {

using BigInt = boost::multiprecision::cpp_int;

// Group order, or nullopt for an infinite group.
struct Cardinal {
  std::optional<BigInt> value;

  bool is_infinite() const { return !value.has_value(); }
  std::string str() const { return value ? value->str() : "INFINITE"; }
  bool operator==(const Cardinal&) const = default;
};

TypeLabel classify_irreducible(const CoxeterGraph& g);

// One canonical label per connected component, sorted.
std::vector<TypeLabel> classify_components(const CoxeterGraph& g);

Cardinal group_order(TypeLabel t);
Cardinal group_order(const std::vector<TypeLabel>& components);

// Number of positive roots (= length of the longest element); finite types only.
long long positive_root_count(TypeLabel t);

// Finite catalog graphs of the given rank (canonical labels, I2(m) excluded).
std::vector<TypeLabel> catalog_types_of_rank(int n);

}  // namespace coxkit
