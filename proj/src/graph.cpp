#include "khroma/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace khroma {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw parse_error("vertex count must be >= 0");
  for (const Edge& e : edges_)
    if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
      throw parse_error("endpoint out of range");
}

const Edge& Graph::edge(int e) const {
  check_edge_index(e);
  return edges_[e];
}

void Graph::check_edge_index(int e) const {
  if (e < 0 || e >= m()) throw parse_error("invalid edge index");
}

bool Graph::has_loop() const {
  for (const Edge& e : edges_)
    if (e.u == e.v) return true;
  return false;
}

Graph Graph::delete_edge(int e) const {
  check_edge_index(e);
  std::vector<Edge> es = edges_;
  es.erase(es.begin() + e);
  return Graph(n_, std::move(es));
}

Graph Graph::contract_edge(int e) const {
  check_edge_index(e);
  const Edge ed = edges_[e];
  if (ed.u == ed.v) return delete_edge(e);
  const int lo = std::min(ed.u, ed.v), hi = std::max(ed.u, ed.v);
  auto remap = [lo, hi](int v) {
    if (v == hi) return lo;
    return v > hi ? v - 1 : v;
  };
  std::vector<Edge> es;
  es.reserve(edges_.size() - 1);
  for (int i = 0; i < m(); ++i) {
    if (i == e) continue;
    es.push_back({remap(edges_[i].u), remap(edges_[i].v)});
  }
  return Graph(n_ - 1, std::move(es));
}

Graph Graph::relabel_vertices(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw parse_error("permutation size mismatch");
  std::vector<bool> seen(n_, false);
  for (int p : perm) {
    if (p < 1 || p > n_ || seen[p - 1]) throw parse_error("not a permutation");
    seen[p - 1] = true;
  }
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const Edge& e : edges_) es.push_back({perm[e.u - 1], perm[e.v - 1]});
  return Graph(n_, std::move(es));
}

Graph Graph::reorder_edges(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != m())
    throw parse_error("edge order size mismatch");
  std::vector<bool> seen(m(), false);
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (int i : order) {
    if (i < 0 || i >= m() || seen[i]) throw parse_error("not an edge permutation");
    seen[i] = true;
    es.push_back(edges_[i]);
  }
  return Graph(n_, std::move(es));
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges_;
  for (const Edge& e : b.edges_) es.push_back({e.u + a.n_, e.v + a.n_});
  return Graph(a.n_ + b.n_, std::move(es));
}

std::string Graph::serialize() const {
  std::ostringstream os;
  os << "v " << n_ << "\n";
  for (const Edge& e : edges_) os << "e " << e.u << " " << e.v << "\n";
  return os.str();
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

}  // namespace

State state_components(const Graph& g, uint64_t s) {
  State st;
  st.members = s;
  UnionFind uf(g.n());
  for (int e = 0; e < g.m(); ++e) {
    if (!(s >> e & 1)) continue;
    ++st.size;
    uf.unite(g.edge(e).u - 1, g.edge(e).v - 1);
  }
  st.component.assign(g.n(), -1);
  std::vector<int> id_of_root(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    int r = uf.find(v);
    if (id_of_root[r] < 0) id_of_root[r] = st.k++;
    st.component[v] = id_of_root[r];
  }
  return st;
}

LinearForm edge_form(const Graph& g, int e) {
  const Edge& ed = g.edge(e);
  LinearForm f;
  if (ed.u == ed.v) return f;
  f.plus = std::min(ed.u, ed.v);
  f.minus = std::max(ed.u, ed.v);
  f.zero = false;
  return f;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    auto fail = [lineno](const std::string& msg) -> parse_error {
      return parse_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (tag == "v") {
      if (n >= 0) throw fail("duplicate `v` header");
      if (!(ls >> n) || n < 0) throw fail("malformed `v` line");
    } else if (tag == "e") {
      if (n < 0) throw fail("`e` before `v` header");
      int u, v;
      if (!(ls >> u >> v)) throw fail("malformed `e` line");
      if (u < 1 || u > n || v < 1 || v > n) throw fail("endpoint out of range");
      edges.push_back({u, v});
    } else {
      throw fail("unknown line tag `" + tag + "`");
    }
    std::string rest;
    if (ls >> rest) throw fail("trailing tokens");
  }
  if (n < 0) throw parse_error("missing `v` header");
  if (edges.size() > 62) throw parse_error("too many edges (limit 62)");
  return Graph(n, std::move(edges));
}

}  // namespace khroma
