#include "khroma/series.hpp"

#include <sstream>
#include <stdexcept>

namespace khroma {

Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(Int c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::monomial(int k) {
  std::vector<Int> c(k + 1, 0);
  c[k] = 1;
  return UniPoly(std::move(c));
}

const Int& UniPoly::coeff(int i) const {
  static const Int kZero = 0;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

Int UniPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return UniPoly();
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::from_points(const std::vector<std::pair<Int, Int>>& pts) {
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i].first == pts[j].first)
        throw std::domain_error("interpolation: repeated abscissa");
  // Lagrange over the rationals, then demand integrality.
  std::vector<Rat> acc(n, 0);
  for (int i = 0; i < n; ++i) {
    // Build numerator polynomial prod_{j != i} (x - x_j) and the scalar weight.
    std::vector<Rat> num(1, Rat(1));
    Rat denom = 1;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      denom *= Rat(pts[i].first - pts[j].first);
      std::vector<Rat> next(num.size() + 1, 0);
      for (size_t k = 0; k < num.size(); ++k) {
        next[k + 1] += num[k];
        next[k] -= num[k] * Rat(pts[j].first);
      }
      num = std::move(next);
    }
    Rat w = Rat(pts[i].second) / denom;
    for (size_t k = 0; k < num.size(); ++k) acc[k] += num[k] * w;
  }
  std::vector<Int> coeffs;
  coeffs.reserve(n);
  for (Rat& c : acc) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::domain_error("interpolation: non-integer coefficient");
    coeffs.push_back(c.get_num());
  }
  return UniPoly(std::move(coeffs));
}

std::string UniPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "·";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string UniPoly::json() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i].get_str();
  }
  os << "]";
  return os.str();
}

// ----------------------------------------------------------------- BiPoly

BiPoly BiPoly::term(Int c, int qe, int ve) {
  BiPoly p;
  if (c != 0) p.terms_[{qe, ve}] = std::move(c);
  return p;
}

Int BiPoly::coeff(int qe, int ve) const {
  auto it = terms_.find({qe, ve});
  return it == terms_.end() ? Int(0) : it->second;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, c] : o.terms_) {
    Int& v = r.terms_[k];
    v += c;
    if (v == 0) r.terms_.erase(k);
  }
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, c] : o.terms_) {
    Int& v = r.terms_[k];
    v -= c;
    if (v == 0) r.terms_.erase(k);
  }
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
      Int& v = r.terms_[k];
      v += ca * cb;
      if (v == 0) r.terms_.erase(k);
    }
  return r;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  // Print by descending v-exponent, then ascending q-exponent.
  std::vector<std::pair<std::pair<int, int>, Int>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first < b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : ts) {
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> parts;
    if (a != 1 || (k.first == 0 && k.second == 0)) parts.push_back(a.get_str());
    auto powstr = [](const char* v, int e) {
      std::string s = v;
      if (e > 1) s += "^" + std::to_string(e);
      return s;
    };
    if (k.first > 0) parts.push_back(powstr("q", k.first));
    if (k.second > 0) parts.push_back(powstr("v", k.second));
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) os << "·";
      os << parts[i];
    }
  }
  return os.str();
}

std::string BiPoly::json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"q\":" << k.first << ",\"v\":" << k.second << ",\"c\":" << c.get_str() << "}";
  }
  os << "]";
  return os.str();
}

// --------------------------------------------------------- BigradedSeries

BigradedSeries::BigradedSeries(int D) : trunc_(D) {
  if (D < 0) throw std::invalid_argument("truncation bound must be >= 0");
}

BigradedSeries BigradedSeries::one(int D) {
  BigradedSeries s(D);
  s.c_[{0, 0}] = 1;
  return s;
}

BigradedSeries BigradedSeries::geom_pow(int k, int D) {
  if (k < 0) throw std::invalid_argument("geom_pow: negative exponent");
  BigradedSeries s(D);
  if (k == 0) {
    s.c_[{0, 0}] = 1;
    return s;
  }
  for (int d = 0; d <= D; ++d) s.c_[{0, d}] = binomial(d + k - 1, k - 1);
  return s;
}

BigradedSeries BigradedSeries::tq_binom_pow(int k, int D) {
  if (k < 0) throw std::invalid_argument("tq_binom_pow: negative exponent");
  BigradedSeries s(D);
  for (int a = 0; a <= std::min(k, D); ++a) s.c_[{a, a}] = binomial(k, a);
  return s;
}

BigradedSeries BigradedSeries::from_q_coeffs(const std::vector<Int>& c, int D) {
  BigradedSeries s(D);
  for (int d = 0; d < static_cast<int>(c.size()) && d <= D; ++d)
    if (c[d] != 0) s.c_[{0, d}] = c[d];
  return s;
}

Int BigradedSeries::coeff(int a, int d) const {
  auto it = c_.find({a, d});
  return it == c_.end() ? Int(0) : it->second;
}

void BigradedSeries::set_coeff(int a, int d, Int c) {
  if (d > trunc_) return;
  if (c == 0)
    c_.erase({a, d});
  else
    c_[{a, d}] = std::move(c);
}

void BigradedSeries::add_coeff(int a, int d, const Int& c) {
  if (d > trunc_ || c == 0) return;
  Int& v = c_[{a, d}];
  v += c;
  if (v == 0) c_.erase({a, d});
}

int BigradedSeries::max_a() const {
  int m = -1;
  for (const auto& [k, v] : c_) m = std::max(m, k.first);
  return m;
}

static void check_same_trunc(const BigradedSeries& a, const BigradedSeries& b) {
  if (a.truncation() != b.truncation())
    throw std::invalid_argument("series operands have different truncation bounds");
}

BigradedSeries BigradedSeries::operator+(const BigradedSeries& o) const {
  check_same_trunc(*this, o);
  BigradedSeries r = *this;
  for (const auto& [k, v] : o.c_) r.add_coeff(k.first, k.second, v);
  return r;
}

BigradedSeries BigradedSeries::operator-(const BigradedSeries& o) const {
  check_same_trunc(*this, o);
  BigradedSeries r = *this;
  for (const auto& [k, v] : o.c_) r.add_coeff(k.first, k.second, -v);
  return r;
}

BigradedSeries BigradedSeries::operator*(const BigradedSeries& o) const {
  check_same_trunc(*this, o);
  BigradedSeries r(trunc_);
  for (const auto& [ka, va] : c_)
    for (const auto& [kb, vb] : o.c_) {
      int d = ka.second + kb.second;
      if (d > trunc_) continue;
      r.add_coeff(ka.first + kb.first, d, va * vb);
    }
  return r;
}

BigradedSeries BigradedSeries::scale(const Int& c) const {
  BigradedSeries r(trunc_);
  if (c == 0) return r;
  for (const auto& [k, v] : c_) r.c_[k] = v * c;
  return r;
}

BigradedSeries BigradedSeries::pow(int k) const {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  BigradedSeries r = one(trunc_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool BigradedSeries::operator==(const BigradedSeries& o) const {
  return trunc_ == o.trunc_ && c_ == o.c_;
}

std::string BigradedSeries::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c_) {
    Int a = abs(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    bool need_coeff = (a != 1) || (k.first == 0 && k.second == 0);
    if (need_coeff) os << a.get_str();
    if (k.first > 0) {
      if (need_coeff) os << "·";
      os << "t^-" << k.first;
      need_coeff = true;
    }
    if (k.second > 0) {
      if (need_coeff) os << "·";
      os << "q";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  os << " + O(q^" << trunc_ + 1 << ")";
  return os.str();
}

std::string BigradedSeries::json() const {
  std::ostringstream os;
  os << "{\"D\":" << trunc_ << ",\"terms\":[";
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) os << ",";
    first = false;
    os << "{\"a\":" << k.first << ",\"d\":" << k.second << ",\"c\":" << v.get_str() << "}";
  }
  os << "]}";
  return os.str();
}

Int unipoly_eval(const UniPoly& p, const Int& x) { return p.eval(x); }

}  // namespace khroma
