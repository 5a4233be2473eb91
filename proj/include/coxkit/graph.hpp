#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxkit/type_label.hpp"

namespace coxkit {

// Edge label standing for m(s,t) = infinity.
inline constexpr int kInfinity = -1;
inline constexpr int kMaxVertices = 64;

// Subsets of the vertex set, bit i <-> vertex i in canonical order.
using VertexSet = std::uint64_t;

inline bool contains(VertexSet set, int v) { return (set >> v) & 1u; }
inline VertexSet singleton(int v) { return VertexSet{1} << v; }
inline int cardinality(VertexSet set) { return std::popcount(set); }
inline VertexSet prefix_set(int k) {
  return k >= 64 ? ~VertexSet{0} : (VertexSet{1} << k) - 1;
}
std::vector<int> members(VertexSet set);
VertexSet make_set(const std::vector<int>& vertices);

struct Edge {
  int a;
  int b;
  int label;
};

// Edge-labelled simple graph encoding m(s,t). Absent pairs mean m = 2.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  explicit CoxeterGraph(std::vector<std::string> names);

  // Labels must be >= 3 or kInfinity.
  void add_edge(int a, int b, int label);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;
  int index(std::string_view name) const;

  // m(s,t): 1 on the diagonal, 2 for non-edges.
  int label(int a, int b) const;
  bool adjacent(int a, int b) const { return a != b && label(a, b) != 2; }
  int degree(int v) const;
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet vertices() const { return prefix_set(size()); }

  // Full subgraph on `subset`, vertices kept in canonical order.
  CoxeterGraph induced(VertexSet subset) const;

  bool operator==(const CoxeterGraph& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> labels_;
  std::vector<Edge> edges_;
};

CoxeterGraph parse_graph(std::string_view text);
CoxeterGraph load_graph(const std::string& path);
std::string render(const CoxeterGraph& g);

// Standard catalog graph on s1..sn. Accepts the truncations B1, D1, D2, D3,
// I2(2), I2(3), I2(4) used by prefix constructions.
CoxeterGraph build_named(TypeLabel t);

// Connected components of the graph, or of its odd subgraph (edges with
// even or infinite labels removed). Ordered by smallest vertex.
std::vector<VertexSet> components(const CoxeterGraph& g, bool odd_only = false);

// I-perp: vertices outside I commuting with every vertex of I.
VertexSet perp(const CoxeterGraph& g, VertexSet subset);

// Vertex i of the first graph maps to iso[i] of the second.
using GraphIso = std::vector<int>;

std::optional<GraphIso> find_graph_isomorphism(const CoxeterGraph& g1,
                                               const CoxeterGraph& g2);
std::vector<GraphIso> graph_isomorphisms(const CoxeterGraph& g1,
                                         const CoxeterGraph& g2,
                                         std::size_t limit = 100000);
bool is_label_preserving(const CoxeterGraph& g1, const CoxeterGraph& g2,
                         const GraphIso& f);

VertexSet parse_subset(const CoxeterGraph& g, std::string_view text);
std::string format_subset(const CoxeterGraph& g, VertexSet subset);

}  // namespace coxkit
