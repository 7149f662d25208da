#include "khroma/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace khroma {

// ---------------------------------------------------------- MonomialBasis

namespace {

void gen_monomials(int nvars, int degree, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == nvars - 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    gen_monomials(nvars, degree - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MonomialBasis MonomialBasis::of(int nvars, int degree) {
  MonomialBasis b;
  b.nvars_ = nvars;
  b.degree_ = degree;
  if (degree < 0) return b;
  if (nvars == 0) {
    if (degree == 0) b.mons_.push_back({});
  } else {
    std::vector<int> cur;
    gen_monomials(nvars, degree, cur, b.mons_);
  }
  for (int i = 0; i < static_cast<int>(b.mons_.size()); ++i)
    b.index_[b.mons_[i]] = i;
  return b;
}

int MonomialBasis::index_of(const std::vector<int>& exps) const {
  auto it = index_.find(exps);
  if (it == index_.end())
    throw std::invalid_argument("monomial not in basis");
  return it->second;
}

// -------------------------------------------------------------- RatMatrix

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rat(1));
  return m;
}

void RatMatrix::add_at(int r, int c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index");
  if (v == 0) return;
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

Rat RatMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rat(0);
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix r(rows_, o.cols_);
  std::vector<Rat> acc(o.cols_, Rat(0));
  std::vector<int> touched;
  for (int i = 0; i < rows_; ++i) {
    touched.clear();
    for (const auto& [k, v] : data_[i])
      for (const auto& [j, w] : o.data_[k]) {
        if (acc[j] == 0) touched.push_back(j);
        acc[j] += v * w;
      }
    std::sort(touched.begin(), touched.end());
    for (int j : touched) {
      if (acc[j] != 0) r.data_[i].emplace_back(j, acc[j]);
      acc[j] = 0;
    }
  }
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  RatMatrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : o.data_[i]) r.add_at(i, j, -v);
  return r;
}

bool RatMatrix::is_zero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
  return t;
}

RatMatrix RatMatrix::hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  RatMatrix r(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    r.data_[i] = a.data_[i];
    for (const auto& [j, v] : b.data_[i]) r.data_[i].emplace_back(j + a.cols_, v);
  }
  return r;
}

RatMatrix RatMatrix::select_columns(const std::vector<int>& idx) const {
  RatMatrix r(rows_, static_cast<int>(idx.size()));
  std::vector<int> newcol(cols_, -1);
  for (int j = 0; j < static_cast<int>(idx.size()); ++j) newcol[idx[j]] = j;
  for (int i = 0; i < rows_; ++i) {
    std::vector<std::pair<int, Rat>> row;
    for (const auto& [j, v] : data_[i])
      if (newcol[j] >= 0) row.emplace_back(newcol[j], v);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    r.data_[i] = std::move(row);
  }
  return r;
}

namespace {

using SparseRow = std::vector<std::pair<int, Rat>>;

// target -= f * src, merging sorted rows.
void axpy(SparseRow& target, const Rat& f, const SparseRow& src) {
  SparseRow out;
  out.reserve(target.size() + src.size());
  size_t a = 0, b = 0;
  while (a < target.size() || b < src.size()) {
    if (b == src.size() ||
        (a < target.size() && target[a].first < src[b].first)) {
      out.push_back(std::move(target[a++]));
    } else if (a == target.size() || src[b].first < target[a].first) {
      out.emplace_back(src[b].first, -f * src[b].second);
      ++b;
    } else {
      Rat v = target[a].second - f * src[b].second;
      if (v != 0) out.emplace_back(target[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

// Forward Gaussian elimination over the first main_cols columns (entries
// at column >= main_cols ride along as an augmentation). Deterministic
// pivoting: columns in ascending order; within a column, the row with the
// fewest main-part entries, ties by original row index.
struct Elimination {
  std::vector<SparseRow> rows;
  std::vector<std::pair<int, int>> pivots;  // (row index, pivot column), by column
  std::vector<int> zero_rows;               // main part fully eliminated
  int main_cols = 0;

  static int lead(const SparseRow& r, int main_cols) {
    if (r.empty() || r.front().first >= main_cols) return -1;
    return r.front().first;
  }

  int main_nnz(const SparseRow& r) const {
    return static_cast<int>(std::lower_bound(r.begin(), r.end(), main_cols,
                                             [](const auto& p, int col) {
                                               return p.first < col;
                                             }) -
                            r.begin());
  }

  void run(std::vector<SparseRow> input, int mc) {
    main_cols = mc;
    rows = std::move(input);
    std::vector<std::vector<int>> bucket(main_cols);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      int l = lead(rows[i], main_cols);
      if (l >= 0)
        bucket[l].push_back(i);
      else
        zero_rows.push_back(i);
    }
    for (int c = 0; c < main_cols; ++c) {
      auto& cand = bucket[c];
      if (cand.empty()) continue;
      int piv = cand[0];
      int piv_nnz = main_nnz(rows[piv]);
      for (size_t t = 1; t < cand.size(); ++t) {
        int nnz = main_nnz(rows[cand[t]]);
        if (nnz < piv_nnz || (nnz == piv_nnz && cand[t] < piv)) {
          piv = cand[t];
          piv_nnz = nnz;
        }
      }
      const Rat& pv = rows[piv].front().second;
      for (int r : cand) {
        if (r == piv) continue;
        axpy(rows[r], rows[r].front().second / pv, rows[piv]);
        int l = lead(rows[r], main_cols);
        if (l >= 0)
          bucket[l].push_back(r);
        else
          zero_rows.push_back(r);
      }
      cand.clear();
      pivots.emplace_back(piv, c);
    }
    std::sort(zero_rows.begin(), zero_rows.end());
  }

  // Normalize pivots to 1 and eliminate above them (full RREF).
  void back_substitute() {
    for (auto& [r, c] : pivots) {
      Rat pv = rows[r].front().second;
      if (pv != 1)
        for (auto& [col, v] : rows[r]) v /= pv;
    }
    for (size_t i = 0; i < pivots.size(); ++i) {
      const auto& [pr, pc] = pivots[i];
      for (size_t j = 0; j < i; ++j) {
        auto& row = rows[pivots[j].first];
        auto it = std::lower_bound(row.begin(), row.end(), pc,
                                   [](const auto& p, int col) {
                                     return p.first < col;
                                   });
        if (it != row.end() && it->first == pc) axpy(row, it->second, rows[pr]);
      }
    }
  }
};

}  // namespace

int RatMatrix::rank() const {
  Elimination e;
  e.run(data_, cols_);
  return static_cast<int>(e.pivots.size());
}

std::vector<int> RatMatrix::pivot_columns() const {
  Elimination e;
  e.run(data_, cols_);
  std::vector<int> cols;
  cols.reserve(e.pivots.size());
  for (const auto& [r, c] : e.pivots) cols.push_back(c);
  return cols;
}

RatMatrix RatMatrix::image_basis() const { return select_columns(pivot_columns()); }

RatMatrix RatMatrix::rref(RatMatrix* transform) const {
  std::vector<SparseRow> input = data_;
  if (transform)
    for (int i = 0; i < rows_; ++i) input[i].emplace_back(cols_ + i, Rat(1));
  Elimination e;
  e.run(std::move(input), cols_);
  e.back_substitute();
  RatMatrix r(rows_, cols_);
  if (transform) *transform = RatMatrix(rows_, rows_);
  int out = 0;
  auto emit = [&](int src) {
    for (const auto& [c, v] : e.rows[src]) {
      if (c < cols_)
        r.data_[out].emplace_back(c, v);
      else if (transform)
        transform->data_[out].emplace_back(c - cols_, v);
    }
    ++out;
  };
  for (const auto& [pr, pc] : e.pivots) emit(pr);
  for (int z : e.zero_rows) emit(z);
  return r;
}

RatMatrix RatMatrix::kernel_basis() const {
  Elimination e;
  e.run(data_, cols_);
  e.back_substitute();
  std::vector<int> pivot_of_col(cols_, -1);
  for (const auto& [r, c] : e.pivots) pivot_of_col[c] = r;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (pivot_of_col[c] < 0) free_cols.push_back(c);
  RatMatrix k(cols_, static_cast<int>(free_cols.size()));
  for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
    const int f = free_cols[j];
    std::map<int, Rat> v;
    v[f] = 1;
    for (const auto& [pr, pc] : e.pivots) {
      const auto& row = e.rows[pr];
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& p, int col) {
                                   return p.first < col;
                                 });
      if (it != row.end() && it->first == f) v[pc] = -it->second;
    }
    // Normalize to a primitive integer vector with positive leading entry.
    Int l = 1, g = 0;
    for (const auto& [i, val] : v) {
      l = lcm(l, Int(val.get_den()));
      g = gcd(g, Int(val.get_num()));
    }
    Rat scale = Rat(l) / Rat(g == 0 ? 1 : g);
    if (v.begin()->second * scale < 0) scale = -scale;
    for (const auto& [i, val] : v) {
      Rat w = val * scale;
      if (w != 0) k.data_[i].emplace_back(j, w);
    }
  }
  return k;
}

std::string RatMatrix::json(const std::string& row_tag,
                            const std::string& col_tag) const {
  std::ostringstream os;
  os << "{\"rows\":" << rows_ << ",\"cols\":" << cols_;
  if (!row_tag.empty()) os << ",\"row_basis\":\"" << row_tag << "\"";
  if (!col_tag.empty()) os << ",\"col_basis\":\"" << col_tag << "\"";
  os << ",\"entries\":[";
  bool first = true;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) {
      if (!first) os << ",";
      first = false;
      os << "{\"r\":" << i << ",\"c\":" << j << ",\"v\":\""
         << v.get_num().get_str() << "/" << v.get_den().get_str() << "\"}";
    }
  os << "]}";
  return os.str();
}

// ---------------------------------------------------- quotient machinery

QuotientSlice quotient_slice(const Graph& g, const State& s, int d) {
  QuotientSlice q;
  q.state = s;
  q.degree = d;
  q.reps.assign(s.k, 0);
  for (int v = g.n(); v >= 1; --v) q.reps[s.component[v - 1]] = v;
  q.basis = MonomialBasis::of(s.k, d);
  return q;
}

RatMatrix reduce_map(const Graph& g, const State& s, const State& s_prime, int d) {
  if (s.members & ~s_prime.members)
    throw std::invalid_argument("reduce_map: s is not a subset of s'");
  QuotientSlice from = quotient_slice(g, s, d);
  QuotientSlice to = quotient_slice(g, s_prime, d);
  RatMatrix m(to.dim(), from.dim());
  for (int j = 0; j < from.dim(); ++j) {
    const std::vector<int>& exps = from.basis.mon(j);
    std::vector<int> target(s_prime.k, 0);
    for (int i = 0; i < s.k; ++i)
      target[s_prime.component[from.reps[i] - 1]] += exps[i];
    m.add_at(to.basis.index_of(target), j, Rat(1));
  }
  return m;
}

RatMatrix mult_matrix(const LinearForm& form, int nvars, int d) {
  MonomialBasis from = MonomialBasis::of(nvars, d - 1);
  MonomialBasis to = MonomialBasis::of(nvars, d);
  RatMatrix m(to.size(), from.size());
  if (form.zero) return m;
  for (int j = 0; j < from.size(); ++j) {
    std::vector<int> exps = from.mon(j);
    ++exps[form.plus - 1];
    m.add_at(to.index_of(exps), j, Rat(1));
    --exps[form.plus - 1];
    ++exps[form.minus - 1];
    m.add_at(to.index_of(exps), j, Rat(-1));
  }
  return m;
}

// ------------------------------------------------------------ Subquotient

Subquotient subquotient(const RatMatrix& a_in, const RatMatrix& a_out) {
  if (a_in.rows() != a_out.cols())
    throw std::invalid_argument("subquotient: ambient dimension mismatch");
  if (!(a_out * a_in).is_zero())
    throw std::logic_error("subquotient: composition is nonzero (d^2 != 0)");
  Subquotient s;
  s.ambient = a_in.rows();
  s.cycles = a_out.kernel_basis();
  s.boundaries = a_in.image_basis();
  s.out_map = a_out;
  const int nb = s.boundaries.cols();
  RatMatrix bk = RatMatrix::hstack(s.boundaries, s.cycles);
  std::vector<int> rep_cols;
  for (int c : bk.pivot_columns())
    if (c >= nb) rep_cols.push_back(c - nb);
  s.reps = s.cycles.select_columns(rep_cols);
  RatMatrix m = RatMatrix::hstack(s.boundaries, s.reps);
  RatMatrix t;
  m.rref(&t);
  // m has full column rank, so row i of the transform extracts coordinate i.
  s.proj = RatMatrix(s.reps.cols(), s.ambient);
  for (int i = 0; i < s.reps.cols(); ++i)
    for (const auto& [j, v] : t.row(nb + i)) s.proj.add_at(i, j, v);
  return s;
}

RatMatrix induced_map(const Subquotient& from, const Subquotient& to,
                      const RatMatrix& c) {
  if (c.cols() != from.ambient || c.rows() != to.ambient)
    throw std::invalid_argument("induced_map: shape mismatch");
  RatMatrix ck = c * from.cycles;
  if (!(to.out_map * ck).is_zero())
    throw std::logic_error("induced_map: cycles not carried to cycles");
  RatMatrix cb = c * from.boundaries;
  if (!(to.out_map * cb).is_zero() || !(to.proj * cb).is_zero())
    throw std::logic_error("induced_map: boundaries not carried to boundaries");
  return to.proj * (c * from.reps);
}

}  // namespace khroma
