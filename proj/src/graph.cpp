#include "coxkit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "coxkit/error.hpp"

namespace coxkit {

std::vector<int> members(VertexSet set) {
  std::vector<int> out;
  while (set) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

VertexSet make_set(const std::vector<int>& vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= singleton(v);
  return s;
}

CoxeterGraph::CoxeterGraph(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVertices))
    throw CapExceeded("graph has more than 64 vertices");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j])
        throw Error("duplicate vertex '" + names_[i] + "'");
  labels_.assign(names_.size() * names_.size(), 2);
  for (std::size_t i = 0; i < names_.size(); ++i)
    labels_[i * names_.size() + i] = 1;
}

void CoxeterGraph::add_edge(int a, int b, int label) {
  const int n = size();
  if (a < 0 || b < 0 || a >= n || b >= n) throw Error("edge vertex out of range");
  if (a == b) throw Error("self loop on '" + names_[a] + "'");
  if (label != kInfinity && label < 3) throw Error("edge label must be >= 3 or inf");
  if (labels_[a * n + b] != 2)
    throw Error("duplicate edge " + names_[a] + " " + names_[b]);
  labels_[a * n + b] = labels_[b * n + a] = label;
  edges_.push_back({a, b, label});
}

std::optional<int> CoxeterGraph::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int CoxeterGraph::index(std::string_view name) const {
  auto v = find(name);
  if (!v) throw Error("unknown vertex '" + std::string(name) + "'");
  return *v;
}

int CoxeterGraph::label(int a, int b) const { return labels_[a * size() + b]; }

int CoxeterGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < size(); ++u) d += adjacent(u, v);
  return d;
}

CoxeterGraph CoxeterGraph::induced(VertexSet subset) const {
  auto vs = members(subset);
  std::vector<std::string> names;
  for (int v : vs) names.push_back(names_[v]);
  CoxeterGraph out(std::move(names));
  std::vector<int> pos(size(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  for (const Edge& e : edges_)
    if (contains(subset, e.a) && contains(subset, e.b))
      out.add_edge(pos[e.a], pos[e.b], e.label);
  return out;
}

bool CoxeterGraph::operator==(const CoxeterGraph& other) const {
  return names_ == other.names_ && labels_ == other.labels_;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

CoxeterGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::optional<CoxeterGraph> g;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto toks = split_ws(line);
    if (!g) {
      if (toks.front() != "vertices:")
        throw ParseError(lineno, "expected 'vertices:' line");
      std::vector<std::string> names(toks.begin() + 1, toks.end());
      for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (names[i] == names[j])
            throw ParseError(lineno, "duplicate vertex '" + names[i] + "'");
      if (names.size() > static_cast<std::size_t>(kMaxVertices))
        throw ParseError(lineno, "more than 64 vertices");
      g.emplace(std::move(names));
      continue;
    }
    if (toks.front() == "vertices:")
      throw ParseError(lineno, "second 'vertices:' line");
    if (toks.front() != "edge" || toks.size() != 4)
      throw ParseError(lineno, "malformed line, expected 'edge A B label'");
    auto a = g->find(toks[1]);
    auto b = g->find(toks[2]);
    if (!a) throw ParseError(lineno, "unknown vertex '" + toks[1] + "'");
    if (!b) throw ParseError(lineno, "unknown vertex '" + toks[2] + "'");
    if (*a == *b) throw ParseError(lineno, "self loop on '" + toks[1] + "'");
    int label = 0;
    if (toks[3] == "inf") {
      label = kInfinity;
    } else {
      std::size_t used = 0;
      try {
        label = std::stoi(toks[3], &used);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad label '" + toks[3] + "'");
      }
      if (used != toks[3].size()) throw ParseError(lineno, "bad label '" + toks[3] + "'");
      if (label < 3) throw ParseError(lineno, "label must be >= 3 or inf (got " + toks[3] + ")");
    }
    if (g->label(*a, *b) != 2)
      throw ParseError(lineno, "duplicate edge " + toks[1] + " " + toks[2]);
    g->add_edge(*a, *b, label);
  }
  if (!g) throw ParseError(lineno, "missing 'vertices:' line");
  return *g;
}

CoxeterGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

std::string render(const CoxeterGraph& g) {
  std::string out = "vertices:";
  for (const auto& n : g.names()) out += " " + n;
  out += "\n";
  for (const Edge& e : g.edges()) {
    out += "edge " + g.name(e.a) + " " + g.name(e.b) + " ";
    out += e.label == kInfinity ? std::string("inf") : std::to_string(e.label);
    out += "\n";
  }
  return out;
}

CoxeterGraph build_named(TypeLabel t) {
  if (!t.is_finite() || t.family == Family::E7plus || t.family == Family::H3plus)
    throw Error("no catalog graph for " + t.str());
  int n = t.param;
  if (t.family == Family::I2) {
    if (n < 2) throw Error("I2 label must be >= 2");
    n = 2;
  }
  if (n < 1) throw Error("rank must be positive");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  CoxeterGraph g(std::move(names));
  auto path = [&](int from, int to) {
    for (int i = from; i + 1 <= to; ++i) g.add_edge(i, i + 1, 3);
  };
  switch (t.family) {
    case Family::A:
      path(0, n - 1);
      break;
    case Family::B:
      if (n >= 2) g.add_edge(0, 1, 4);
      path(1, n - 1);
      break;
    case Family::D:
      if (n >= 3) {
        g.add_edge(0, 2, 3);
        g.add_edge(1, 2, 3);
      }
      path(2, n - 1);
      break;
    case Family::E:
      g.add_edge(0, 2, 3);
      g.add_edge(1, 3, 3);
      path(2, n - 1);
      break;
    case Family::F:
      g.add_edge(0, 1, 3);
      g.add_edge(1, 2, 4);
      g.add_edge(2, 3, 3);
      break;
    case Family::H:
      g.add_edge(0, 1, 5);
      path(1, n - 1);
      break;
    case Family::I2:
      if (t.param >= 3) g.add_edge(0, 1, t.param);
      break;
    default:
      break;
  }
  return g;
}

std::vector<VertexSet> components(const CoxeterGraph& g, bool odd_only) {
  const int n = g.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) {
    if (odd_only && (e.label == kInfinity || e.label % 2 == 0)) continue;
    int a = root(e.a), b = root(e.b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<VertexSet> out;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = root(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.push_back(0);
    }
    out[slot[r]] |= singleton(v);
  }
  return out;
}

VertexSet perp(const CoxeterGraph& g, VertexSet subset) {
  VertexSet out = 0;
  for (int s = 0; s < g.size(); ++s) {
    if (contains(subset, s)) continue;
    bool commutes = true;
    for (int t : members(subset)) commutes = commutes && !g.adjacent(s, t);
    if (commutes) out |= singleton(s);
  }
  return out;
}

namespace {

std::vector<int> vertex_signature(const CoxeterGraph& g, int v) {
  std::vector<int> sig;
  for (int u = 0; u < g.size(); ++u)
    if (g.adjacent(u, v)) sig.push_back(g.label(u, v));
  std::sort(sig.begin(), sig.end());
  return sig;
}

struct IsoSearch {
  const CoxeterGraph& g1;
  const CoxeterGraph& g2;
  std::size_t limit;
  std::vector<std::vector<int>> candidates;
  std::vector<int> order;
  GraphIso map;
  std::vector<bool> used;
  std::vector<GraphIso> found;

  void run(std::size_t depth) {
    if (found.size() >= limit) return;
    if (depth == order.size()) {
      found.push_back(map);
      return;
    }
    int v = order[depth];
    for (int c : candidates[v]) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        int u = order[k];
        ok = g1.label(u, v) == g2.label(map[u], c);
      }
      if (!ok) continue;
      map[v] = c;
      used[c] = true;
      run(depth + 1);
      used[c] = false;
      map[v] = -1;
    }
  }
};

}  // namespace

std::vector<GraphIso> graph_isomorphisms(const CoxeterGraph& g1,
                                         const CoxeterGraph& g2,
                                         std::size_t limit) {
  const int n = g1.size();
  if (n > kMaxVertices || g2.size() > kMaxVertices)
    throw CapExceeded("graph isomorphism size cap (64 vertices) exceeded");
  if (n != g2.size() || g1.edges().size() != g2.edges().size()) return {};
  IsoSearch search{g1, g2, limit, {}, {}, GraphIso(n, -1), std::vector<bool>(n), {}};
  std::vector<std::vector<int>> sig2(n);
  for (int v = 0; v < n; ++v) sig2[v] = vertex_signature(g2, v);
  search.candidates.resize(n);
  for (int v = 0; v < n; ++v) {
    auto sig = vertex_signature(g1, v);
    for (int c = 0; c < n; ++c)
      if (sig2[c] == sig) search.candidates[v].push_back(c);
    if (search.candidates[v].empty()) return {};
  }
  // Visit vertices in BFS order so each new vertex has a mapped neighbour.
  std::vector<bool> seen(n);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> queue{start};
    seen[start] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      search.order.push_back(v);
      for (int u = 0; u < n; ++u)
        if (!seen[u] && g1.adjacent(u, v)) {
          seen[u] = true;
          queue.push_back(u);
        }
    }
  }
  search.run(0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

std::optional<GraphIso> find_graph_isomorphism(const CoxeterGraph& g1,
                                               const CoxeterGraph& g2) {
  auto all = graph_isomorphisms(g1, g2, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool is_label_preserving(const CoxeterGraph& g1, const CoxeterGraph& g2,
                         const GraphIso& f) {
  const int n = g1.size();
  if (g2.size() != n || static_cast<int>(f.size()) != n) return false;
  std::vector<bool> hit(n);
  for (int v : f) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g1.label(a, b) != g2.label(f[a], f[b])) return false;
  return true;
}

VertexSet parse_subset(const CoxeterGraph& g, std::string_view text) {
  VertexSet out = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) out |= singleton(g.index(tok));
    pos = comma + 1;
  }
  return out;
}

std::string format_subset(const CoxeterGraph& g, VertexSet subset) {
  std::string out = "{";
  bool first = true;
  for (int v : members(subset)) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

}  // namespace coxkit
