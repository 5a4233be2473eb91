#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "coxkit/classify.hpp"
#include "coxkit/error.hpp"

using namespace coxkit;

TEST(TypeLabel, Serialization) {
  for (const char* s : {"A3", "B4", "I2(7)", "E7+", "H3+", "Ainf", "Binf", "Dinf", "AinfInf", "Unknown", "F4", "H4", "E8", "D5"})
    EXPECT_EQ(parse_type_label(s).str(), s);
  EXPECT_THROW(parse_type_label("E5"), Error);
  EXPECT_THROW(parse_type_label("I2(x)"), Error);
}

TEST(TypeLabel, Coincidences) {
  EXPECT_EQ(canonical(type_B(1)), type_A(1));
  EXPECT_EQ(canonical(type_D(1)), type_A(1));
  EXPECT_EQ(canonical(type_D(3)), type_A(3));
  EXPECT_EQ(canonical(type_I2(3)), type_A(2));
  EXPECT_EQ(canonical(type_I2(4)), type_B(2));
  EXPECT_EQ(canonical_components(type_D(2)), (std::vector<TypeLabel>{type_A(1), type_A(1)}));
  EXPECT_THROW(canonical(type_D(2)), Error);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_irreducible(parse_graph("vertices: a b c\nedge a b 4\nedge b c 3")), type_B(3));
  EXPECT_EQ(classify_irreducible(parse_graph("vertices: a b c\nedge a b 3\nedge b c 3")), type_A(3));
  EXPECT_EQ(classify_irreducible(parse_graph("vertices: a b\nedge a b inf")).family, Family::Unknown);
  EXPECT_EQ(classify_irreducible(parse_graph("vertices: a b c\nedge a b 3\nedge b c 3\nedge a c 3")).family,
            Family::Unknown);
  EXPECT_THROW(classify_irreducible(parse_graph("vertices: a b")), Error);
}

TEST(Classify, Components) {
  EXPECT_EQ(classify_components(parse_graph("vertices: x a b c\nedge a b 3\nedge b c 3")),
            (std::vector<TypeLabel>{type_A(1), type_A(3)}));
  EXPECT_EQ(classify_components(build_named(type_D(2))),
            (std::vector<TypeLabel>{type_A(1), type_A(1)}));
  auto g = parse_graph("vertices: a b c d e f\nedge a b 4\nedge b c 3\nedge c d 3\nedge e f inf");
  EXPECT_EQ(classify_components(g), (std::vector<TypeLabel>{type_B(4), {Family::Unknown, 0}}));
  EXPECT_TRUE(classify_components(CoxeterGraph{}).empty());
}

TEST(Classify, RoundTripAndRelabelling) {
  std::vector<TypeLabel> types;
  for (int n = 1; n <= 9; ++n) types.push_back(type_A(n));
  for (int n = 1; n <= 9; ++n) types.push_back(type_B(n));
  for (int n = 1; n <= 9; ++n) types.push_back(type_D(n));
  for (int n = 6; n <= 8; ++n) types.push_back(type_E(n));
  types.push_back(type_F4());
  types.push_back(type_H(3));
  types.push_back(type_H(4));
  for (int m = 3; m <= 20; ++m) types.push_back(type_I2(m));
  std::mt19937 rng(7);
  for (TypeLabel t : types) {
    if (t.family == Family::D && t.param == 2) continue;
    auto g = build_named(t);
    EXPECT_EQ(classify_irreducible(g), canonical(t)) << t.str();
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> names(g.size());
    for (int v = 0; v < g.size(); ++v) names[perm[v]] = "v" + std::to_string(v);
    CoxeterGraph h(names);
    for (const Edge& e : g.edges()) h.add_edge(perm[e.a], perm[e.b], e.label);
    EXPECT_EQ(classify_irreducible(h), canonical(t)) << t.str();
  }
}

TEST(Order, Formulas) {
  EXPECT_EQ(group_order(type_A(2)).str(), "6");
  EXPECT_EQ(group_order(type_H(3)).str(), "120");
  EXPECT_TRUE(group_order(TypeLabel{Family::Binf, 0}).is_infinite());
  EXPECT_EQ(group_order(TypeLabel{Family::Binf, 0}).str(), "INFINITE");
  EXPECT_EQ(group_order(type_B(5)).str(), "3840");
  EXPECT_EQ(group_order(type_D(5)).str(), "1920");
  EXPECT_EQ(group_order(type_E(8)).str(), "696729600");
  EXPECT_EQ(group_order(type_I2(7)).str(), "14");
  EXPECT_EQ(group_order(type_B(40)).str(), "897108341211212142020325469195355364998152634499072000000000");
  EXPECT_EQ(group_order(std::vector<TypeLabel>{type_A(1), type_A(3)}).str(), "48");
}
