#include "coxkit/type_label.hpp"

#include <charconv>

#include "coxkit/error.hpp"

namespace coxkit {

bool TypeLabel::is_infinite_family() const {
  return family == Family::Ainf || family == Family::Binf ||
         family == Family::Dinf || family == Family::AinfInf;
}

bool TypeLabel::is_finite() const {
  return !is_infinite_family() && family != Family::Unknown;
}

std::string TypeLabel::str() const {
  const std::string p = std::to_string(param);
  switch (family) {
    case Family::A: return "A" + p;
    case Family::B: return "B" + p;
    case Family::D: return "D" + p;
    case Family::E: return "E" + p;
    case Family::F: return "F" + p;
    case Family::H: return "H" + p;
    case Family::I2: return "I2(" + p + ")";
    case Family::Ainf: return "Ainf";
    case Family::Binf: return "Binf";
    case Family::Dinf: return "Dinf";
    case Family::AinfInf: return "AinfInf";
    case Family::E7plus: return "E7+";
    case Family::H3plus: return "H3+";
    case Family::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error("bad type label '" + std::string(whole) + "'");
  return value;
}

void check_range(const TypeLabel& t) {
  bool ok = true;
  switch (t.family) {
    case Family::A: case Family::B: case Family::D: ok = t.param >= 1; break;
    case Family::E: ok = t.param >= 6 && t.param <= 8; break;
    case Family::F: ok = t.param == 4; break;
    case Family::H: ok = t.param == 3 || t.param == 4; break;
    case Family::I2: ok = t.param >= 2; break;
    default: break;
  }
  if (!ok) throw Error("parameter out of range in type label " + t.str());
}

}  // namespace

TypeLabel parse_type_label(std::string_view text) {
  if (text == "Ainf") return {Family::Ainf, 0};
  if (text == "Binf") return {Family::Binf, 0};
  if (text == "Dinf") return {Family::Dinf, 0};
  if (text == "AinfInf") return {Family::AinfInf, 0};
  if (text == "E7+") return {Family::E7plus, 7};
  if (text == "H3+") return {Family::H3plus, 3};
  if (text == "Unknown") return {Family::Unknown, 0};
  if (text.size() >= 2 && text.substr(0, 2) == "I2") {
    auto rest = text.substr(2);
    if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')')
      throw Error("bad type label '" + std::string(text) + "'");
    TypeLabel t{Family::I2, parse_int(rest.substr(1, rest.size() - 2), text)};
    check_range(t);
    return t;
  }
  if (text.empty()) throw Error("empty type label");
  TypeLabel t;
  switch (text.front()) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'H': t.family = Family::H; break;
    default: throw Error("bad type label '" + std::string(text) + "'");
  }
  t.param = parse_int(text.substr(1), text);
  check_range(t);
  return t;
}

std::vector<TypeLabel> canonical_components(TypeLabel t) {
  switch (t.family) {
    case Family::B:
      if (t.param == 1) return {type_A(1)};
      break;
    case Family::D:
      if (t.param == 1) return {type_A(1)};
      if (t.param == 2) return {type_A(1), type_A(1)};
      if (t.param == 3) return {type_A(3)};
      break;
    case Family::I2:
      if (t.param == 2) return {type_A(1), type_A(1)};
      if (t.param == 3) return {type_A(2)};
      if (t.param == 4) return {type_B(2)};
      break;
    default:
      break;
  }
  return {t};
}

TypeLabel canonical(TypeLabel t) {
  auto parts = canonical_components(t);
  if (parts.size() != 1) throw Error(t.str() + " is reducible");
  return parts.front();
}

}  // namespace coxkit
