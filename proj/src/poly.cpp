#include "khroma/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace khroma {

namespace {

// Cache key: vertex count plus the sorted multiset of normalized edges
// after relabeling vertices by (degree, original label) order. Cheap and
// collision-free; correctness does not depend on hit rate.
std::string memo_key(const Graph& g) {
  std::vector<std::pair<int, int>> deg(g.n());
  for (int v = 0; v < g.n(); ++v) deg[v] = {0, v};
  for (const Edge& e : g.edges()) {
    ++deg[e.u - 1].first;
    ++deg[e.v - 1].first;
  }
  std::vector<int> order(g.n());
  for (int v = 0; v < g.n(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&deg](int a, int b) { return deg[a] < deg[b]; });
  std::vector<int> newlabel(g.n());
  for (int i = 0; i < g.n(); ++i) newlabel[order[i]] = i + 1;
  std::vector<std::pair<int, int>> es;
  es.reserve(g.m());
  for (const Edge& e : g.edges()) {
    int a = newlabel[e.u - 1], b = newlabel[e.v - 1];
    es.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(es.begin(), es.end());
  std::ostringstream os;
  os << g.n();
  for (const auto& [a, b] : es) os << ";" << a << "," << b;
  return os.str();
}

int last_nonloop_edge(const Graph& g) {
  for (int e = g.m() - 1; e >= 0; --e)
    if (g.edge(e).u != g.edge(e).v) return e;
  return -1;
}

UniPoly chromatic_rec(const Graph& g, std::map<std::string, UniPoly>& memo) {
  if (g.has_loop()) return UniPoly::zero();
  int e = last_nonloop_edge(g);
  if (e < 0) return UniPoly::monomial(g.n());
  std::string key = memo_key(g);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  UniPoly r = chromatic_rec(g.delete_edge(e), memo) -
              chromatic_rec(g.contract_edge(e), memo);
  memo.emplace(std::move(key), r);
  return r;
}

BiPoly dichromatic_rec(const Graph& g, std::map<std::string, BiPoly>& memo) {
  int e = g.m() - 1;
  if (e < 0) return BiPoly::term(1, 0, g.n());
  std::string key = memo_key(g);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  // (D1); for a loop G-e = G/e, giving the factor (1 - q).
  BiPoly r = dichromatic_rec(g.delete_edge(e), memo) -
             BiPoly::term(1, 1, 0) * dichromatic_rec(g.contract_edge(e), memo);
  memo.emplace(std::move(key), r);
  return r;
}

}  // namespace

UniPoly chromatic_classical(const Graph& g) {
  std::map<std::string, UniPoly> memo;
  return chromatic_rec(g, memo);
}

Int count_colorings(const Graph& g, int lambda) {
  if (lambda < 0) throw parse_error("color count must be >= 0");
  if (g.has_loop()) return 0;
  double budget = 1;
  for (int v = 0; v < g.n(); ++v) budget *= lambda;
  if (budget > 2e7) throw budget_error("coloring enumeration budget exceeded");
  if (g.n() == 0) return 1;
  if (lambda == 0) return 0;
  std::vector<int> color(g.n(), 0);
  Int count = 0;
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges())
      if (color[e.u - 1] == color[e.v - 1]) {
        proper = false;
        break;
      }
    if (proper) ++count;
    int v = 0;
    while (v < g.n() && ++color[v] == lambda) color[v++] = 0;
    if (v == g.n()) break;
  }
  return count;
}

namespace {

// Expansion of p at λ = 1/(1-q), truncated at D.
BigradedSeries expand_at_geom(const UniPoly& p, int D) {
  BigradedSeries acc = BigradedSeries::zero(D);
  BigradedSeries x = BigradedSeries::geom_pow(1, D);
  BigradedSeries xp = BigradedSeries::one(D);
  for (int i = 0; i <= p.degree(); ++i) {
    acc = acc + xp.scale(p.coeff(i));
    xp = xp * x;
  }
  return acc;
}

}  // namespace

BigradedSeries chromatic_series(const Graph& g, int D) {
  if (g.m() > 62) throw budget_error("state enumeration limited to 62 edges");
  BigradedSeries sum = BigradedSeries::zero(D);
  const uint64_t nstates = uint64_t(1) << g.m();
  for (uint64_t s = 0; s < nstates; ++s) {
    State st = state_components(g, s);
    BigradedSeries term = BigradedSeries::geom_pow(st.k, D);
    sum = (st.size % 2 == 0) ? sum + term : sum - term;
  }
  BigradedSeries direct = expand_at_geom(chromatic_classical(g), D);
  if (!(sum == direct))
    throw std::logic_error("chromatic series: state sum disagrees with (C1)/(C2) expansion");
  return sum;
}

BiPoly dichromatic_poly(const Graph& g) {
  if (g.m() > 62) throw budget_error("state enumeration limited to 62 edges");
  BiPoly sum;
  const uint64_t nstates = uint64_t(1) << g.m();
  for (uint64_t s = 0; s < nstates; ++s) {
    State st = state_components(g, s);
    Int c = (st.size % 2 == 0) ? 1 : -1;
    sum = sum + BiPoly::term(c, st.size, st.k);
  }
  std::map<std::string, BiPoly> memo;
  if (!(sum == dichromatic_rec(g, memo)))
    throw std::logic_error("dichromatic polynomial: state sum disagrees with (D1)/(D2) recursion");
  return sum;
}

BigradedSeries dichromatic_D_series(const Graph& g, int D) {
  BiPoly p = dichromatic_poly(g);
  BigradedSeries vsub =
      BigradedSeries::tq_binom_pow(1, D) * BigradedSeries::geom_pow(1, D);
  BigradedSeries q = BigradedSeries(D);
  q.set_coeff(0, 1, 1);
  BigradedSeries acc = BigradedSeries::zero(D);
  for (const auto& [k, c] : p.terms())
    acc = acc + (q.pow(k.first) * vsub.pow(k.second)).scale(c);
  return BigradedSeries::tq_binom_pow(g.m(), D) * acc;
}

}  // namespace khroma
