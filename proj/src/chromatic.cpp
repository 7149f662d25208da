#include "khroma/chromatic.hpp"

#include "khroma/poly.hpp"
#include "khroma/util.hpp"

#include <bit>
#include <map>

namespace khroma {

namespace {

std::vector<std::vector<uint64_t>> states_by_level(int m) {
  std::vector<std::vector<uint64_t>> levels(m + 1);
  for (uint64_t s = 0; s < (uint64_t(1) << m); ++s)
    levels[std::popcount(s)].push_back(s);
  return levels;
}

// (-1)^{#edges of s ordered before e}
int cube_sign(uint64_t s, int e) {
  return std::popcount(s & ((uint64_t(1) << e) - 1)) % 2 == 0 ? 1 : -1;
}

}  // namespace

CubeComplex build_cube(const Graph& g, int D) {
  if (g.m() > 20) throw budget_error("cube construction limited to m <= 20");
  CubeComplex cube;
  cube.g = g;
  cube.D = D;
  cube.level_states = states_by_level(g.m());
  const int m = g.m();

  std::map<uint64_t, State> states;
  std::map<uint64_t, int> pos_in_level;
  for (const auto& level : cube.level_states)
    for (int p = 0; p < static_cast<int>(level.size()); ++p) {
      states[level[p]] = state_components(g, level[p]);
      pos_in_level[level[p]] = p;
    }

  cube.chain_dims.assign(D + 1, std::vector<long>(m + 1, 0));
  cube.diffs.assign(D + 1, {});
  for (int d = 0; d <= D; ++d) {
    // Summand offsets per level.
    std::vector<std::vector<long>> offsets(m + 1);
    for (int i = 0; i <= m; ++i) {
      long off = 0;
      for (uint64_t s : cube.level_states[i]) {
        offsets[i].push_back(off);
        off += quotient_slice(g, states[s], d).dim();
      }
      cube.chain_dims[d][i] = off;
    }
    for (int i = 0; i < m; ++i) {
      RatMatrix diff(cube.chain_dims[d][i + 1], cube.chain_dims[d][i]);
      for (int p = 0; p < static_cast<int>(cube.level_states[i].size()); ++p) {
        const uint64_t s = cube.level_states[i][p];
        for (int e = 0; e < m; ++e) {
          if (s >> e & 1) continue;
          const uint64_t s2 = s | (uint64_t(1) << e);
          RatMatrix block = reduce_map(g, states[s], states[s2], d);
          const int sign = cube_sign(s, e);
          const long r0 = offsets[i + 1][pos_in_level[s2]];
          const long c0 = offsets[i][p];
          for (int r = 0; r < block.rows(); ++r)
            for (const auto& [c, v] : block.row(r))
              diff.add_at(static_cast<int>(r0) + r, static_cast<int>(c0) + c,
                          sign > 0 ? v : -v);
        }
      }
      cube.diffs[d].push_back(std::move(diff));
    }
    for (int i = 0; i + 1 < m; ++i)
      if (!(cube.diffs[d][i + 1] * cube.diffs[d][i]).is_zero())
        throw std::logic_error("cube differential does not square to zero");
  }
  return cube;
}

HomologyTable cube_homology(const CubeComplex& cube) {
  HomologyTable t;
  t.construction = "cube";
  t.D = cube.D;
  const int m = cube.g.m();
  for (int d = 0; d <= cube.D; ++d) {
    std::vector<int> ranks(m, 0);
    for (int i = 0; i < m; ++i) ranks[i] = cube.diffs[d][i].rank();
    for (int i = 0; i <= m; ++i) {
      long h = cube.chain_dims[d][i];
      if (i < m) h -= ranks[i];
      if (i > 0) h -= ranks[i - 1];
      t.set(i, 0, d, h);
    }
  }
  return t;
}

HomologyTable chromatic_homology(const Graph& g, int D) {
  return cube_homology(build_cube(g, D));
}

EulerReport chromatic_euler_check(const Graph& g, int D) {
  CubeComplex cube = build_cube(g, D);
  HomologyTable h = cube_homology(cube);
  BigradedSeries expected = chromatic_series(g, D);
  EulerReport rep;
  for (int d = 0; d <= D; ++d) {
    EulerRow row;
    row.a = 0;
    row.d = d;
    for (int i = 0; i <= g.m(); ++i) {
      Int sign = (i % 2 == 0) ? 1 : -1;
      row.chain_sum += sign * cube.chain_dims[d][i];
      row.homology_sum += sign * h.dim(i, 0, d);
    }
    row.expected = expected.coeff(0, d);
    row.pass = row.chain_sum == row.expected && row.homology_sum == row.expected;
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

HomologyTable koszul_chromatic(const Graph& g, int D) {
  if (g.m() > 10)
    throw budget_error("Koszul chromatic construction limited to m <= 10");
  const int m = g.m(), n = g.n();
  const uint64_t nstates = uint64_t(1) << m;

  std::vector<LinearForm> forms(m);
  for (int e = 0; e < m; ++e) forms[e] = edge_form(g, e);

  // Rightmost cohomology of C_s per degree: coker of the stacked
  // multiplication maps of the edges present in s.
  std::vector<std::vector<Subquotient>> sub(nstates);
  parallel_for(static_cast<int>(nstates), [&](int si) {
    const uint64_t s = static_cast<uint64_t>(si);
    sub[si].reserve(D + 1);
    for (int d = 0; d <= D; ++d) {
      MonomialBasis amb = MonomialBasis::of(n, d);
      MonomialBasis dom = MonomialBasis::of(n, d - 1);
      RatMatrix a_in(amb.size(), m * dom.size());
      for (int e = 0; e < m; ++e) {
        if (!(s >> e & 1)) continue;
        RatMatrix block = mult_matrix(forms[e], n, d);
        for (int r = 0; r < block.rows(); ++r)
          for (const auto& [c, v] : block.row(r))
            a_in.add_at(r, e * dom.size() + c, v);
      }
      sub[si].push_back(subquotient(a_in, RatMatrix::zero(0, amb.size())));
    }
  });

  auto levels = states_by_level(m);
  std::map<uint64_t, int> pos_in_level;
  for (const auto& level : levels)
    for (int p = 0; p < static_cast<int>(level.size()); ++p)
      pos_in_level[level[p]] = p;

  HomologyTable t;
  t.construction = "koszul";
  t.D = D;
  for (int d = 0; d <= D; ++d) {
    const RatMatrix ambient_id = RatMatrix::identity(MonomialBasis::of(n, d).size());
    std::vector<std::vector<long>> offsets(m + 1);
    std::vector<long> level_dim(m + 1, 0);
    for (int i = 0; i <= m; ++i) {
      for (uint64_t s : levels[i]) {
        offsets[i].push_back(level_dim[i]);
        level_dim[i] += sub[s][d].dim();
      }
    }
    std::vector<RatMatrix> diffs;
    for (int i = 0; i < m; ++i) {
      RatMatrix diff(static_cast<int>(level_dim[i + 1]),
                     static_cast<int>(level_dim[i]));
      for (int p = 0; p < static_cast<int>(levels[i].size()); ++p) {
        const uint64_t s = levels[i][p];
        for (int e = 0; e < m; ++e) {
          if (s >> e & 1) continue;
          const uint64_t s2 = s | (uint64_t(1) << e);
          RatMatrix block = induced_map(sub[s][d], sub[s2][d], ambient_id);
          const int sign = cube_sign(s, e);
          const long r0 = offsets[i + 1][pos_in_level[s2]];
          const long c0 = offsets[i][p];
          for (int r = 0; r < block.rows(); ++r)
            for (const auto& [c, v] : block.row(r))
              diff.add_at(static_cast<int>(r0) + r, static_cast<int>(c0) + c,
                          sign > 0 ? v : -v);
        }
      }
      diffs.push_back(std::move(diff));
    }
    for (int i = 0; i + 1 < m; ++i)
      if (!(diffs[i + 1] * diffs[i]).is_zero())
        throw std::logic_error("Koszul cube differential does not square to zero");
    std::vector<int> ranks(m, 0);
    for (int i = 0; i < m; ++i) ranks[i] = diffs[i].rank();
    for (int i = 0; i <= m; ++i) {
      long h = level_dim[i];
      if (i < m) h -= ranks[i];
      if (i > 0) h -= ranks[i - 1];
      t.set(i, 0, d, h);
    }
  }
  return t;
}

}  // namespace khroma
