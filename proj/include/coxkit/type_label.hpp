#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace coxkit {

enum class Family {
  A, B, D, E, F, H, I2,
  Ainf, Binf, Dinf, AinfInf,
  E7plus, H3plus,
  Unknown
};

// Name of an irreducible (or admissible) type. `param` is the rank for
// A/B/D/E/F/H and the edge label m for I2; unused otherwise.
struct TypeLabel {
  Family family = Family::Unknown;
  int param = 0;

  auto operator<=>(const TypeLabel&) const = default;

  bool is_infinite_family() const;
  // True for labels naming a finite group (catalog or admissible even part).
  bool is_finite() const;
  std::string str() const;
};

TypeLabel parse_type_label(std::string_view text);

// Canonical components of a (possibly non-canonical) catalog label:
// B1, D1 -> A1; D2, I2(2) -> A1 + A1; D3 -> A3; I2(3) -> A2; I2(4) -> B2.
std::vector<TypeLabel> canonical_components(TypeLabel t);

// Same, for labels known to stay irreducible. Throws for D2 / I2(2).
TypeLabel canonical(TypeLabel t);

inline TypeLabel type_A(int n) { return {Family::A, n}; }
inline TypeLabel type_B(int n) { return {Family::B, n}; }
inline TypeLabel type_D(int n) { return {Family::D, n}; }
inline TypeLabel type_E(int n) { return {Family::E, n}; }
inline TypeLabel type_F4() { return {Family::F, 4}; }
inline TypeLabel type_H(int n) { return {Family::H, n}; }
inline TypeLabel type_I2(int m) { return {Family::I2, m}; }

}  // namespace coxkit
