// graph.hpp
// ---------
// Ordered multigraphs with loops, spanning-subgraph states, and the
// deletion/contraction operations. Edge order is part of the data: it
// fixes the sign conventions of the complexes built downstream.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace khroma {

// Input/format problem: malformed file, bad index. CLI exit code 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Computation would exceed a documented size budget. CLI exit code 3.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u, v;  // 1-based endpoints; u == v for a loop
  bool operator==(const Edge&) const = default;
};

// The linear form x_plus - x_minus attached to an edge; zero for loops.
struct LinearForm {
  int plus = 0;
  int minus = 0;
  bool zero = true;
};

class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const;
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_loop() const;

  // Same vertices, edge e removed, remaining edges keep relative order.
  Graph delete_edge(int e) const;
  // Endpoints of e merged into min(u,v); labels above max(u,v) shift down.
  // Contracting a loop deletes it.
  Graph contract_edge(int e) const;

  // perm[old-1] = new label (a permutation of 1..n).
  Graph relabel_vertices(const std::vector<int>& perm) const;
  // order[i] = index of the edge placed at position i.
  Graph reorder_edges(const std::vector<int>& order) const;

  static Graph disjoint_union(const Graph& a, const Graph& b);

  // `v <n>` then one `e <i> <j>` per edge, in stored order.
  std::string serialize() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_edge_index(int e) const;
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Connected-component data of the spanning subgraph [G:s].
struct State {
  uint64_t members = 0;        // bitmask over edge positions
  int size = 0;                // |s|
  int k = 0;                   // number of components of [G:s]
  std::vector<int> component;  // component[v-1] = component id, ids assigned
                               // in order of first occurrence over v = 1..n
};

// Union-find over the edges of s; loops never change the partition.
State state_components(const Graph& g, uint64_t s);

// Canonical orientation: plus = min endpoint, minus = max; loops give the
// zero form.
LinearForm edge_form(const Graph& g, int e);

// Text format: `# comment` lines, one `v <n>` header, then `e <i> <j>`
// lines. Rejects graphs with more than 62 edges (bitmask state encoding).
Graph parse_graph(const std::string& text);

}  // namespace khroma
