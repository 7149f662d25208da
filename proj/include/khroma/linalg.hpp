// linalg.hpp
// ----------
// Degreewise exact linear algebra over ℚ: monomial bases of graded
// polynomial-ring slices, quotient-by-linear-forms bases, sparse exact
// matrices with rank/kernel/image via Gaussian elimination, and
// subquotients (cohomology groups) with explicit representatives and a
// projection usable for computing induced maps.

#pragma once

#include "khroma/graph.hpp"
#include "khroma/series.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace khroma {

// Monomials of one fixed total degree in nvars variables, graded-lex with
// x_1 > x_2 > ... (exponent tuples in descending lex order).
class MonomialBasis {
 public:
  MonomialBasis() = default;
  static MonomialBasis of(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(mons_.size()); }
  const std::vector<int>& mon(int i) const { return mons_[i]; }
  int index_of(const std::vector<int>& exps) const;

 private:
  int nvars_ = 0, degree_ = 0;
  std::vector<std::vector<int>> mons_;
  std::map<std::vector<int>, int> index_;
};

// Sparse exact rational matrix; rows stored as sorted (col, value) lists.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}
  static RatMatrix identity(int n);
  static RatMatrix zero(int rows, int cols) { return RatMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Accumulating insert; erases the entry when the sum is zero.
  void add_at(int r, int c, const Rat& v);
  Rat at(int r, int c) const;
  const std::vector<std::pair<int, Rat>>& row(int r) const { return data_[r]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  bool is_zero() const;
  bool operator==(const RatMatrix& o) const;

  RatMatrix transpose() const;
  static RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
  // Columns of this matrix at the given indices.
  RatMatrix select_columns(const std::vector<int>& idx) const;

  int rank() const;
  // Columns form a basis of the kernel, normalized to primitive integer
  // vectors with positive leading entry.
  RatMatrix kernel_basis() const;
  // The original columns at the pivot positions of the row echelon form.
  RatMatrix image_basis() const;
  std::vector<int> pivot_columns() const;

  // Reduced row echelon form; when transform is non-null it receives T
  // with T * this = rref (rows ordered by pivot column, then the zero rows).
  RatMatrix rref(RatMatrix* transform = nullptr) const;

  std::string json(const std::string& row_tag = "",
                   const std::string& col_tag = "") const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::pair<int, Rat>>> data_;
};

// Basis of one degree slice of R_s = R/I_s: monomials of degree d in one
// representative variable per component of [G:s].
struct QuotientSlice {
  State state;
  int degree = 0;
  std::vector<int> reps;  // minimum vertex (1-based) per component, ascending
  MonomialBasis basis;    // on k(s) variables
  int dim() const { return basis.size(); }
};

QuotientSlice quotient_slice(const Graph& g, const State& s, int d);

// Matrix of the canonical quotient (R_s)_d -> (R_{s'})_d for s ⊆ s', in
// the representative bases. Throws std::invalid_argument when s ⊄ s'.
RatMatrix reduce_map(const Graph& g, const State& s, const State& s_prime, int d);

// Matrix of multiplication by the form between full monomial bases of
// degrees d-1 and d; the zero form gives the zero matrix.
RatMatrix mult_matrix(const LinearForm& form, int nvars, int d);

// Cohomology at the middle slot of  · --a_in--> ambient --a_out--> ·
// with explicit representatives and a projection onto them.
struct Subquotient {
  int ambient = 0;
  RatMatrix cycles;      // ambient × (dim cycles)
  RatMatrix boundaries;  // ambient × (dim boundaries)
  RatMatrix reps;        // ambient × dim
  RatMatrix proj;        // dim × ambient; valid on the cycle space
  RatMatrix out_map;     // a_out, kept for chain-map checks
  int dim() const { return reps.cols(); }
};

// Throws std::logic_error when a_out * a_in != 0.
Subquotient subquotient(const RatMatrix& a_in, const RatMatrix& a_out);

// Matrix of the map induced by C on representative bases. Checks exactly
// that C carries cycles to cycles and boundaries to boundaries; throws
// std::logic_error otherwise.
RatMatrix induced_map(const Subquotient& from, const Subquotient& to,
                      const RatMatrix& c);

}  // namespace khroma
