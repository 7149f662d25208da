#include "khroma/series.hpp"

#include <doctest.h>

using namespace khroma;

namespace {

BigradedSeries one_minus_q(int D) {
  BigradedSeries s = BigradedSeries::one(D);
  s.add_coeff(0, 1, -1);
  return s;
}

}  // namespace

TEST_CASE("geom_pow") {
  BigradedSeries g1 = BigradedSeries::geom_pow(1, 3);
  for (int d = 0; d <= 3; ++d) CHECK(g1.coeff(0, d) == 1);

  BigradedSeries g2 = BigradedSeries::geom_pow(2, 3);
  CHECK(g2.coeff(0, 0) == 1);
  CHECK(g2.coeff(0, 1) == 2);
  CHECK(g2.coeff(0, 2) == 3);
  CHECK(g2.coeff(0, 3) == 4);
  CHECK(g2 == g1 * g1);

  CHECK(BigradedSeries::geom_pow(0, 3) == BigradedSeries::one(3));
  CHECK_THROWS_AS(BigradedSeries::geom_pow(-1, 3), std::invalid_argument);
}

TEST_CASE("tq_binom_pow") {
  BigradedSeries b2 = BigradedSeries::tq_binom_pow(2, 3);
  CHECK(b2.coeff(0, 0) == 1);
  CHECK(b2.coeff(1, 1) == 2);
  CHECK(b2.coeff(2, 2) == 1);
  CHECK(b2.coeff(1, 0) == 0);

  CHECK(BigradedSeries::tq_binom_pow(0, 3) == BigradedSeries::one(3));

  // q-truncation at D = 0 drops the t^{-1}q term.
  BigradedSeries b1 = BigradedSeries::tq_binom_pow(1, 0);
  CHECK(b1 == BigradedSeries::one(0));

  BigradedSeries gen = BigradedSeries::tq_binom_pow(1, 3);
  CHECK(gen * gen == b2);
}

TEST_CASE("series arithmetic") {
  // geom_pow(1,D) * (1-q) telescopes to 1.
  CHECK(BigradedSeries::geom_pow(1, 5) * one_minus_q(5) == BigradedSeries::one(5));

  CHECK_THROWS_AS(BigradedSeries::one(3) * BigradedSeries::one(4),
                  std::invalid_argument);

  // A of a product adds.
  BigradedSeries b = BigradedSeries::tq_binom_pow(3, 6);
  CHECK(b.max_a() == 3);
  CHECK((b * b).max_a() == 6);
}

TEST_CASE("exponent additivity of the generator series") {
  for (int j = 0; j <= 6; ++j)
    for (int k = 0; j + k <= 6; ++k) {
      CHECK(BigradedSeries::geom_pow(j + k, 6) ==
            BigradedSeries::geom_pow(j, 6) * BigradedSeries::geom_pow(k, 6));
      CHECK(BigradedSeries::tq_binom_pow(j + k, 6) ==
            BigradedSeries::tq_binom_pow(j, 6) *
                BigradedSeries::tq_binom_pow(k, 6));
    }
}

TEST_CASE("series multiplication is associative and commutative") {
  std::vector<BigradedSeries> ops;
  ops.push_back(BigradedSeries::geom_pow(2, 4));
  ops.push_back(BigradedSeries::tq_binom_pow(3, 4));
  BigradedSeries mixed(4);
  mixed.set_coeff(0, 0, 2);
  mixed.set_coeff(1, 2, -5);
  mixed.set_coeff(3, 1, 7);
  ops.push_back(mixed);
  for (const auto& a : ops)
    for (const auto& b : ops) {
      CHECK(a * b == b * a);
      for (const auto& c : ops) CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("unipoly eval and interpolation") {
  UniPoly p = UniPoly({0, -1, 1});  // λ² − λ
  CHECK(unipoly_eval(p, 3) == 6);
  CHECK(unipoly_eval(UniPoly::zero(), 5) == 0);

  UniPoly q = UniPoly::from_points({{0, 0}, {1, 0}, {2, 2}, {3, 6}});
  CHECK(q == p);

  CHECK_THROWS_AS(UniPoly::from_points({{0, 0}, {2, 1}, {4, 0}}),
                  std::domain_error);
  CHECK_THROWS_AS(UniPoly::from_points({{1, 0}, {1, 2}}), std::domain_error);
}

TEST_CASE("rationals stay reduced with arbitrary precision") {
  Rat a(Int("123456789012345678901234567890"), Int(6));
  a.canonicalize();
  Rat b = a * a - a;
  b.canonicalize();
  CHECK(gcd(Int(b.get_num()), Int(b.get_den())) == 1);
  CHECK(b.get_den() > 0);
}

TEST_CASE("series JSON encoding is sorted by (a, d)") {
  BigradedSeries s(6);
  s.set_coeff(1, 2, 3);
  s.set_coeff(0, 1, 1);
  CHECK(s.json() ==
        "{\"D\":6,\"terms\":[{\"a\":0,\"d\":1,\"c\":1},{\"a\":1,\"d\":2,\"c\":3}]}");
}
