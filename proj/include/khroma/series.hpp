// series.hpp
// ----------
// Exact arithmetic layer: arbitrary-precision integers/rationals (GMP),
// integer polynomials in one and two variables, and truncated bigraded
// series in t^{-1} and q.
//
// A BigradedSeries stores coefficients c[a][d] of t^{-a} q^d with the
// q-direction truncated at a bound D; the a-support is exact.

#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace khroma {

using Int = mpz_class;
using Rat = mpq_class;

// C(n, k) as an exact integer; zero for k < 0 or k > n.
Int binomial(long n, long k);

// Dense univariate polynomial with integer coefficients (variable "λ").
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Int> coeffs);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(Int c);
  // λ^k
  static UniPoly monomial(int k);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Int& coeff(int i) const;

  Int eval(const Int& x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  // Unique interpolant through the given points; throws std::domain_error
  // if it has a non-integer coefficient or abscissae repeat.
  static UniPoly from_points(const std::vector<std::pair<Int, Int>>& pts);

  std::string str(const std::string& var = "λ") const;
  std::string json() const;  // coefficient array, constant term first

 private:
  void trim();
  std::vector<Int> coeffs_;  // coeffs_[i] multiplies λ^i
};

// Sparse polynomial in q and v with integer coefficients.
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly zero() { return BiPoly(); }
  // c · q^qe · v^ve
  static BiPoly term(Int c, int qe, int ve);

  bool is_zero() const { return terms_.empty(); }
  Int coeff(int qe, int ve) const;
  const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

  std::string str() const;
  std::string json() const;  // term list sorted by (q-exp, v-exp)

 private:
  std::map<std::pair<int, int>, Int> terms_;  // (q-exp, v-exp) -> coeff, no zeros
};

// Truncated series in t^{-1} and q: coefficient of t^{-a} q^d at (a, d),
// 0 <= d <= D. All arithmetic is exact and drops q-degrees above D.
class BigradedSeries {
 public:
  explicit BigradedSeries(int D);

  static BigradedSeries zero(int D) { return BigradedSeries(D); }
  static BigradedSeries one(int D);
  // Truncation of (1-q)^{-k}: c[0][d] = C(d+k-1, k-1).
  static BigradedSeries geom_pow(int k, int D);
  // (1+t^{-1}q)^k: c[a][a] = C(k, a) for a <= min(k, D).
  static BigradedSeries tq_binom_pow(int k, int D);
  // Series with a = 0 and the given q-coefficients c[0][0..].
  static BigradedSeries from_q_coeffs(const std::vector<Int>& c, int D);

  int truncation() const { return trunc_; }
  Int coeff(int a, int d) const;
  void set_coeff(int a, int d, Int c);
  void add_coeff(int a, int d, const Int& c);
  bool is_zero() const { return c_.empty(); }
  // Largest a with a nonzero coefficient; -1 if zero.
  int max_a() const;

  BigradedSeries operator+(const BigradedSeries& o) const;
  BigradedSeries operator-(const BigradedSeries& o) const;
  BigradedSeries operator*(const BigradedSeries& o) const;
  BigradedSeries scale(const Int& c) const;
  BigradedSeries pow(int k) const;
  bool operator==(const BigradedSeries& o) const;

  const std::map<std::pair<int, int>, Int>& terms() const { return c_; }

  std::string str() const;
  std::string json() const;  // {"D":..,"terms":[{"a":..,"d":..,"c":..},...]}

 private:
  int trunc_;
  std::map<std::pair<int, int>, Int> c_;  // (a, d) -> coeff, no zeros, d <= trunc_
};

// Exact evaluation of p at x.
Int unipoly_eval(const UniPoly& p, const Int& x);

}  // namespace khroma
