// poly.hpp
// --------
// Classical polynomial layer: chromatic polynomial χ_G(λ) by
// deletion-contraction, dichromatic polynomial P_G(q,v) by state sum,
// the series expansions P_G(q) = χ_G(1/(1-q)) and D_G(t,q), and a
// brute-force coloring oracle. Every series result is computed along two
// independent routes and cross-checked before it is returned.

#pragma once

#include "khroma/graph.hpp"
#include "khroma/series.hpp"

namespace khroma {

// χ_G(λ) via (C1)/(C2) with memoization; a loop edge forces zero.
UniPoly chromatic_classical(const Graph& g);

// Number of proper colorings with colors {1..lambda}, by enumeration.
// Throws budget_error when lambda^n exceeds the enumeration budget.
Int count_colorings(const Graph& g, int lambda);

// State-sum expansion of χ_G(1/(1-q)) truncated at D. Internally also
// expands chromatic_classical at 1/(1-q) and throws std::logic_error on
// any mismatch between the two routes.
BigradedSeries chromatic_series(const Graph& g, int D);

// P_G(q,v) by state sum, cross-checked against the (D1)/(D2) recursion.
BiPoly dichromatic_poly(const Graph& g);

// D_G(t,q) = (1+t^{-1}q)^m P_G(q, (1+t^{-1}q)/(1-q)), truncated at D.
BigradedSeries dichromatic_D_series(const Graph& g, int D);

}  // namespace khroma
