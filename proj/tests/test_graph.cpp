#include "khroma/graph.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace khroma;
using khroma_test::load;

TEST_CASE("parse_graph on well-formed input") {
  Graph g = parse_graph("v 2\ne 1 2\n");
  CHECK(g.n() == 2);
  CHECK(g.m() == 1);
  CHECK(g.edge(0) == Edge{1, 2});

  Graph loop = parse_graph("v 1\ne 1 1\n");
  CHECK(loop.n() == 1);
  CHECK(loop.edge(0) == Edge{1, 1});

  Graph empty = parse_graph("# nothing here\nv 0\n");
  CHECK(empty.n() == 0);
  CHECK(empty.m() == 0);
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph("v 2\ne 1 3\n"),
                       "line 2: endpoint out of range", parse_error);
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("v 2\ne 1\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("v 2\nv 2\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("v 2\nx 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_graph(""), parse_error);
}

TEST_CASE("serializer round-trips edge order bit-exactly") {
  const std::string text = "v 3\ne 2 3\ne 1 2\ne 2 3\n";
  CHECK(parse_graph(text).serialize() == text);
}

TEST_CASE("delete_edge") {
  Graph p2 = load("p2.g");
  Graph d = p2.delete_edge(0);
  CHECK(d.n() == 2);
  CHECK(d.m() == 0);

  Graph c3 = load("c3.g");
  Graph path = c3.delete_edge(2);
  CHECK(path.n() == 3);
  CHECK(path.m() == 2);

  Graph loop = load("loop.g");
  CHECK(loop.delete_edge(0) == Graph(1, {}));

  CHECK_THROWS_AS(p2.delete_edge(5), parse_error);
}

TEST_CASE("contract_edge") {
  Graph p2 = load("p2.g");
  CHECK(p2.contract_edge(0) == Graph(1, {}));

  Graph c3 = load("c3.g");
  Graph two = c3.contract_edge(0);
  CHECK(two.n() == 2);
  CHECK(two.m() == 2);
  CHECK(two.edge(0).u != two.edge(0).v);  // double edge, not loops

  Graph dbl = load("doubleedge.g");
  Graph lp = dbl.contract_edge(0);
  CHECK(lp == Graph(1, {{1, 1}}));

  // Contraction of a loop is deletion.
  Graph loop = load("loop.g");
  CHECK(loop.contract_edge(0) == Graph(1, {}));
}

TEST_CASE("state_components") {
  Graph p2 = load("p2.g");
  CHECK(state_components(p2, 0).k == 2);
  CHECK(state_components(p2, 1).k == 1);

  Graph c3 = load("c3.g");
  State st = state_components(c3, 0b011);
  CHECK(st.k == 1);
  CHECK(st.size == 2);

  // Loops never change the partition.
  Graph loop = load("loop.g");
  CHECK(state_components(loop, 1).k == 1);

  // Empty graph.
  CHECK(state_components(Graph(0, {}), 0).k == 0);
}

TEST_CASE("edge_form canonical orientation") {
  Graph g(3, {{2, 1}, {1, 3}, {2, 2}});
  LinearForm f0 = edge_form(g, 0);
  CHECK(f0.plus == 1);
  CHECK(f0.minus == 2);
  CHECK_FALSE(f0.zero);
  LinearForm f1 = edge_form(g, 1);
  CHECK(f1.plus == 1);
  CHECK(f1.minus == 3);
  CHECK(edge_form(g, 2).zero);
}

TEST_CASE("k(s) drops by 0 or 1 per added edge; k(empty) = n") {
  for (const char* name : {"p4.g", "c4.g", "k4.g", "doubleedge.g", "tripend.g"}) {
    Graph g = load(name);
    CHECK(state_components(g, 0).k == g.n());
    for (uint64_t s = 0; s < (uint64_t(1) << g.m()); ++s) {
      int k = state_components(g, s).k;
      for (int e = 0; e < g.m(); ++e) {
        if (s >> e & 1) continue;
        int k2 = state_components(g, s | (uint64_t(1) << e)).k;
        CHECK((k2 == k || k2 == k - 1));
      }
    }
  }
}

TEST_CASE("component partition is independent of edge insertion order") {
  Graph g = load("k4me.g");
  std::mt19937 rng(7);
  for (uint64_t s = 0; s < (uint64_t(1) << g.m()); ++s) {
    State base = state_components(g, s);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> order(g.m());
      for (int i = 0; i < g.m(); ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      uint64_t s2 = 0;
      for (int i = 0; i < g.m(); ++i)
        if (s >> order[i] & 1) s2 |= uint64_t(1) << i;
      State perm = state_components(g.reorder_edges(order), s2);
      CHECK(perm.k == base.k);
      CHECK(perm.component == base.component);
    }
  }
}

TEST_CASE("contract-then-delete commutes with edge reorder up to isomorphism") {
  Graph c3 = load("c3.g");
  Graph a = c3.contract_edge(0).delete_edge(0);
  Graph b = c3.reorder_edges({1, 0, 2}).contract_edge(1).delete_edge(0);
  CHECK(khroma_test::edge_multiset_key(a) == khroma_test::edge_multiset_key(b));
}

TEST_CASE("parse rejects more than 62 edges") {
  std::string text = "v 2\n";
  for (int i = 0; i < 63; ++i) text += "e 1 2\n";
  CHECK_THROWS_AS(parse_graph(text), parse_error);
}
