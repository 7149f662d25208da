// chromatic.hpp
// -------------
// Cube-of-resolutions chain complex whose vertices carry the quotient
// rings R_s = R/I_s, its homology per q-degree, the Euler-characteristic
// check against the chromatic series, and an independent Koszul-complex
// construction of the same homology.

#pragma once

#include "khroma/graph.hpp"
#include "khroma/linalg.hpp"
#include "khroma/table.hpp"

#include <vector>

namespace khroma {

struct CubeComplex {
  Graph g;
  int D = 0;
  // level_states[i]: state bitmasks with |s| = i, increasing mask order;
  // summands of C^i appear in this order.
  std::vector<std::vector<uint64_t>> level_states;
  // chain_dims[d][i] = dim of C^i in q-degree d.
  std::vector<std::vector<long>> chain_dims;
  // diffs[d][i]: matrix of d^i in q-degree d, C^i_d -> C^{i+1}_d.
  std::vector<std::vector<RatMatrix>> diffs;
};

// Assembles the cube with the sign rule (-1)^{#edges of s before e} and
// verifies d^2 = 0 exactly. Budget: m <= 20.
CubeComplex build_cube(const Graph& g, int D);

// Homology dimensions of the cube complex; entries keyed (i, 0, d).
HomologyTable chromatic_homology(const Graph& g, int D);
HomologyTable cube_homology(const CubeComplex& cube);

// Per degree d: alternating sums of chain and homology dimensions, both
// against the q^d coefficient of the chromatic series.
EulerReport chromatic_euler_check(const Graph& g, int D);

// The same homology through per-state Koszul complexes (rightmost
// cohomology, induced maps). Budget: m <= 10.
HomologyTable koszul_chromatic(const Graph& g, int D);

}  // namespace khroma
