#include "khroma/linalg.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace khroma;
using khroma_test::load;

TEST_CASE("monomial basis: size, order, lookup") {
  MonomialBasis b = MonomialBasis::of(3, 2);
  CHECK(b.size() == 6);  // C(2+2, 2)
  // Graded-lex with x1 > x2 > x3: x1² first, x3² last.
  CHECK(b.mon(0) == std::vector<int>{2, 0, 0});
  CHECK(b.mon(1) == std::vector<int>{1, 1, 0});
  CHECK(b.mon(5) == std::vector<int>{0, 0, 2});
  CHECK(b.index_of({1, 0, 1}) == 2);

  CHECK(MonomialBasis::of(0, 0).size() == 1);
  CHECK(MonomialBasis::of(0, 3).size() == 0);
  CHECK(MonomialBasis::of(4, 0).size() == 1);
}

TEST_CASE("quotient_slice") {
  Graph p2 = load("p2.g");
  QuotientSlice full = quotient_slice(p2, state_components(p2, 0), 1);
  CHECK(full.reps == std::vector<int>{1, 2});
  CHECK(full.dim() == 2);

  QuotientSlice merged = quotient_slice(p2, state_components(p2, 1), 2);
  CHECK(merged.reps == std::vector<int>{1});
  CHECK(merged.dim() == 1);

  QuotientSlice consts = quotient_slice(p2, state_components(p2, 1), 0);
  CHECK(consts.dim() == 1);
}

TEST_CASE("Proposition 1 dimension formula across the corpus") {
  for (const char* name : {"p3.g", "c3.g", "c4.g", "k4.g", "doubleedge.g",
                           "loop.g", "tripend.g", "p2n1.g"}) {
    Graph g = load(name);
    for (uint64_t s = 0; s < (uint64_t(1) << g.m()); ++s) {
      State st = state_components(g, s);
      for (int d = 0; d <= 6; ++d)
        CHECK(quotient_slice(g, st, d).dim() == binomial(d + st.k - 1, st.k - 1));
    }
  }
}

TEST_CASE("reduce_map") {
  Graph p2 = load("p2.g");
  State none = state_components(p2, 0), both = state_components(p2, 1);

  RatMatrix r1 = reduce_map(p2, none, both, 1);
  CHECK(r1.rows() == 1);
  CHECK(r1.cols() == 2);
  CHECK(r1.at(0, 0) == 1);
  CHECK(r1.at(0, 1) == 1);

  RatMatrix r0 = reduce_map(p2, none, both, 0);
  CHECK(r0 == RatMatrix::identity(1));

  CHECK(reduce_map(p2, both, both, 3) == RatMatrix::identity(1));
  CHECK_THROWS_AS(reduce_map(p2, both, none, 1), std::invalid_argument);
}

TEST_CASE("reduce_map is functorial on nested states") {
  Graph g = load("tripend.g");
  for (uint64_t s = 0; s < (uint64_t(1) << g.m()); ++s)
    for (uint64_t s1 = s; s1 < (uint64_t(1) << g.m()); ++s1) {
      if ((s & ~s1) != 0) continue;
      for (uint64_t s2 = s1; s2 < (uint64_t(1) << g.m()); ++s2) {
        if ((s1 & ~s2) != 0) continue;
        State a = state_components(g, s), b = state_components(g, s1),
              c = state_components(g, s2);
        for (int d : {1, 3})
          CHECK(reduce_map(g, b, c, d) * reduce_map(g, a, b, d) ==
                reduce_map(g, a, c, d));
      }
    }
}

TEST_CASE("mult_matrix") {
  LinearForm f{1, 2, false};
  RatMatrix m1 = mult_matrix(f, 2, 1);
  CHECK(m1.rows() == 2);
  CHECK(m1.cols() == 1);
  CHECK(m1.at(0, 0) == 1);
  CHECK(m1.at(1, 0) == -1);

  CHECK(mult_matrix(LinearForm{}, 2, 1).is_zero());

  RatMatrix m2 = mult_matrix(f, 2, 2);
  // x1 -> x1² − x1x2, x2 -> x1x2 − x2²; basis {x1², x1x2, x2²}.
  CHECK(m2.at(0, 0) == 1);
  CHECK(m2.at(1, 0) == -1);
  CHECK(m2.at(1, 1) == 1);
  CHECK(m2.at(2, 1) == -1);
}

TEST_CASE("rank, kernel, image") {
  RatMatrix a(1, 2);
  a.add_at(0, 0, 1);
  a.add_at(0, 1, 1);
  CHECK(a.rank() == 1);
  RatMatrix k = a.kernel_basis();
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());
  CHECK(k.at(0, 0) * k.at(1, 0) == -1);  // span{(1,-1)} up to sign

  RatMatrix z(2, 2);
  CHECK(z.rank() == 0);
  CHECK(z.kernel_basis().cols() == 2);
  CHECK(z.image_basis().cols() == 0);

  // Multiplication by a nonzero linear form is injective.
  RatMatrix m = mult_matrix(LinearForm{1, 2, false}, 2, 2);
  CHECK(m.rank() == 2);
  CHECK(m.kernel_basis().cols() == 0);
}

TEST_CASE("rank-nullity for assorted produced matrices") {
  Graph g = load("c3.g");
  for (uint64_t s = 0; s < 8; ++s)
    for (int e = 0; e < 3; ++e) {
      if (s >> e & 1) continue;
      State from = state_components(g, s);
      State to = state_components(g, s | (uint64_t(1) << e));
      for (int d = 0; d <= 3; ++d) {
        RatMatrix r = reduce_map(g, from, to, d);
        CHECK(r.rank() + r.kernel_basis().cols() == r.cols());
      }
    }
}

TEST_CASE("multiplication by a form of I_s dies under reduction") {
  Graph g = load("c3.g");
  for (uint64_t s = 1; s < 8; ++s) {
    State none = state_components(g, 0), st = state_components(g, s);
    for (int e = 0; e < 3; ++e) {
      if (!(s >> e & 1)) continue;
      for (int d = 1; d <= 4; ++d)
        CHECK((reduce_map(g, none, st, d) * mult_matrix(edge_form(g, e), 3, d))
                  .is_zero());
    }
  }
}

TEST_CASE("subquotient") {
  Subquotient all = subquotient(RatMatrix::zero(3, 0), RatMatrix::zero(0, 3));
  CHECK(all.dim() == 3);
  CHECK(all.proj == RatMatrix::identity(3));

  RatMatrix out(1, 2);
  out.add_at(0, 0, 1);
  out.add_at(0, 1, 1);
  Subquotient ker = subquotient(RatMatrix::zero(2, 0), out);
  CHECK(ker.dim() == 1);
  CHECK(ker.reps.at(0, 0) * ker.reps.at(1, 0) == -1);

  Subquotient none = subquotient(RatMatrix::identity(2), RatMatrix::zero(0, 2));
  CHECK(none.dim() == 0);

  // d² != 0 must be rejected.
  CHECK_THROWS_AS(subquotient(RatMatrix::identity(2), RatMatrix::identity(2)),
                  std::logic_error);
}

TEST_CASE("subquotient projection kills boundaries and fixes representatives") {
  Graph g = load("c3.g");
  // Cokernel of multiplication by x1 - x2 in degree 2 over 3 variables.
  RatMatrix a_in = mult_matrix(edge_form(g, 0), 3, 2);
  Subquotient sq = subquotient(a_in, RatMatrix::zero(0, 6));
  CHECK(sq.dim() == 6 - a_in.rank());
  CHECK((sq.proj * sq.boundaries).is_zero());
  CHECK(sq.proj * sq.reps == RatMatrix::identity(sq.dim()));
}

TEST_CASE("induced_map") {
  Subquotient a = subquotient(RatMatrix::zero(2, 0), RatMatrix::zero(0, 2));
  CHECK(induced_map(a, a, RatMatrix::identity(2)) == RatMatrix::identity(2));
  CHECK(induced_map(a, a, RatMatrix::zero(2, 2)).is_zero());

  // The chromatic square on P2 in degree 1: the map induced on cokernels
  // by the identity equals the quotient map R -> R/(x1 - x2).
  Graph p2 = load("p2.g");
  Subquotient from = subquotient(RatMatrix::zero(2, 0), RatMatrix::zero(0, 2));
  Subquotient to =
      subquotient(mult_matrix(edge_form(p2, 0), 2, 1), RatMatrix::zero(0, 2));
  RatMatrix ind = induced_map(from, to, RatMatrix::identity(2));
  CHECK(ind ==
        reduce_map(p2, state_components(p2, 0), state_components(p2, 1), 1));

  // A map that does not preserve boundaries is rejected: send the
  // boundary (1,-1) to a non-boundary direction.
  RatMatrix bad(2, 2);
  bad.add_at(0, 0, 1);  // x1 -> x1, x2 -> 0: (1,-1) -> (1,0), not boundary
  CHECK_THROWS_AS(induced_map(to, to, bad), std::logic_error);
}
