#include "rootsmith/exactlin.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rs {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<long> entries)
    : rows_(rows), cols_(cols), data_() {
  assert(entries.size() == rows * cols);
  data_.reserve(entries.size());
  for (long e : entries) data_.emplace_back(e);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  assert(cols_ == o.rows_);
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  assert(v.size() == cols_);
  IntVec r(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool IntMatrix::is_zero() const {
  for (const Int& e : data_)
    if (e != 0) return false;
  return true;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

IntVec SmithDecomposition::invariant_factors() const {
  IntVec f;
  std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (diagonal(i, i) != 0) f.push_back(diagonal(i, i));
  return f;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < rows; ++k) std::swap(left(i, k), left(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < cols; ++k) std::swap(right(k, i), right(k, j));
  };
  // row_i -= q * row_j
  auto row_op = [&](std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < cols; ++k) a(i, k) -= q * a(j, k);
    for (std::size_t k = 0; k < rows; ++k) left(i, k) -= q * left(j, k);
  };
  auto col_op = [&](std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < rows; ++k) a(k, i) -= q * a(k, j);
    for (std::size_t k = 0; k < cols; ++k) right(k, i) -= q * right(k, j);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t k = 0; k < cols; ++k) a(i, k) = -a(i, k);
    for (std::size_t k = 0; k < rows; ++k) left(i, k) = -left(i, k);
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: entry of least absolute value in the remaining block
    std::size_t pi = t, pj = t;
    Int best(0);
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        Int v = abs(a(i, j));
        if (best == 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;  // remaining block is zero
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Int q = a(i, t) / a(t, t);  // truncated division keeps remainders small
      row_op(i, t, q);
      if (a(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Int q = a(t, j) / a(t, t);
      col_op(j, t, q);
      if (a(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; pick pivot again

    // divisibility: a(t,t) must divide everything below-right
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols && divides; ++j)
        if (a(i, j) % a(t, t) != 0) {
          // fold row i into row t and restart this step
          row_op(t, i, Int(-1));
          divides = false;
        }
    if (!divides) continue;
    if (a(t, t) < 0) negate_row(t);
    ++t;
  }
  return SmithDecomposition{a, left, right};
}

// exact determinant of the (rows x cols) submatrix
static Int minor_det(const IntMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  std::size_t k = rows.size();
  RatMatrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = Rat(m(rows[i], cols[j]));
  Rat d = det(sub);
  assert(d.get_den() == 1);
  return d.get_num();
}

namespace {

// all k-subsets of {0..n-1}, lexicographic
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    bool advanced = false;
    std::size_t i = k;
    while (i-- > 0) {
      if (cur[i] < n - k + i) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

}  // namespace

IntVec invariant_factors_by_minors(const IntMatrix& m) {
  std::size_t n = std::min(m.rows(), m.cols());
  IntVec d(n + 1, Int(0));
  d[0] = 1;
  IntVec out;
  for (std::size_t k = 1; k <= n; ++k) {
    Int g(0);
    for (auto& rows : subsets(m.rows(), k))
      for (auto& cols : subsets(m.cols(), k)) g = gcd(g, minor_det(m, rows, cols));
    if (g == 0) break;
    d[k] = g;
    out.push_back(d[k] / d[k - 1]);
  }
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // L m R = D  =>  m R = L^-1 D; columns of R at zero diagonal span ker
  SmithDecomposition s = smith_normal_form(m);
  std::size_t n = m.cols();
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = 0; j < n; ++j) {
    bool zero = j >= m.rows() || s.diagonal(j, j) == 0;
    if (zero) zero_cols.push_back(j);
  }
  IntMatrix k(n, zero_cols.size());
  for (std::size_t t = 0; t < zero_cols.size(); ++t)
    for (std::size_t i = 0; i < n; ++i) k(i, t) = s.right(i, zero_cols[t]);
  return k;
}

Int det(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  Rat d = det(RatMatrix::from_int(m));
  assert(d.get_den() == 1);
  return d.get_num();
}

std::size_t rank(const IntMatrix& m) { return rank(RatMatrix::from_int(m)); }

bool lattice_contains(const IntMatrix& lattice, const IntVec& v) {
  // v in column span over Z  <=>  SNF coordinates divisible by the diagonal
  SmithDecomposition s = smith_normal_form(lattice);
  IntVec w = s.left.apply(v);  // coordinates in the SNF row basis
  std::size_t n = std::min(lattice.rows(), lattice.cols());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Int d = (i < n) ? s.diagonal(i, i) : Int(0);
    if (d == 0) {
      if (w[i] != 0) return false;
    } else if (w[i] % d != 0) {
      return false;
    }
  }
  return true;
}

bool LatticeQuotient::finite() const {
  for (const Int& f : invariant_factors)
    if (f == 0) return false;
  return true;
}

Int LatticeQuotient::index() const {
  Int p(1);
  for (const Int& f : invariant_factors) p *= f;
  return p;
}

IntVec LatticeQuotient::reduce(const IntVec& v) const {
  IntVec w = to_snf.apply(v);
  IntVec out;
  // to_snf rows are aligned with the full SNF diagonal (1s included)
  std::size_t gi = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Int d = (i < diag_full.size()) ? diag_full[i] : Int(0);
    if (d == 1) continue;
    (void)gi;
    if (d == 0) {
      out.push_back(w[i]);
    } else {
      Int r = w[i] % d;
      if (r < 0) r += d;
      out.push_back(r);
    }
  }
  return out;
}

LatticeQuotient lattice_quotient(std::size_t ambient_rank,
                                 const IntMatrix& generators) {
  assert(generators.rows() == ambient_rank);
  SmithDecomposition s = smith_normal_form(generators);
  LatticeQuotient q;
  q.ambient_rank = ambient_rank;
  q.generators = generators;
  q.to_snf = s.left;
  q.diag_full.assign(ambient_rank, Int(0));
  std::size_t n = std::min(generators.rows(), generators.cols());
  for (std::size_t i = 0; i < n; ++i) q.diag_full[i] = s.diagonal(i, i);
  for (std::size_t i = 0; i < ambient_rank; ++i)
    if (q.diag_full[i] != 1) q.invariant_factors.push_back(q.diag_full[i]);
  return q;
}

// --- Fourier-Motzkin ------------------------------------------------------

namespace {

struct Constraint {
  IntVec c;     // primitive integer normal vector; meaning c.x (>|>=) 0
  bool strict;  // > vs >=
};

IntVec normalize_primitive(const IntVec& v) {
  Int g(0);
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

// Deduplicate, keeping the stronger (strict) version of equal normals.
void dedupe(std::vector<Constraint>& cs) {
  std::map<IntVec, bool> seen;  // normal -> strict
  for (auto& c : cs) {
    auto [it, fresh] = seen.emplace(c.c, c.strict);
    if (!fresh) it->second = it->second || c.strict;
  }
  cs.clear();
  for (auto& [v, s] : seen) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    if (zero && !s) continue;  // 0 >= 0: vacuous
    cs.push_back(Constraint{v, s});
  }
}

}  // namespace

std::optional<RatVec> rational_cone_feasible(const IntMatrix& strict_rows,
                                             const IntMatrix& weak_rows) {
  std::size_t n = std::max(strict_rows.cols(), weak_rows.cols());
  if (strict_rows.rows() && weak_rows.rows())
    assert(strict_rows.cols() == weak_rows.cols());
  if (n == 0) {
    if (strict_rows.rows() > 0) return std::nullopt;  // 0 > 0
    return RatVec{};
  }

  std::vector<Constraint> cs;
  for (std::size_t i = 0; i < strict_rows.rows(); ++i) {
    IntVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = strict_rows(i, j);
    cs.push_back({normalize_primitive(v), true});
  }
  for (std::size_t i = 0; i < weak_rows.rows(); ++i) {
    IntVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = weak_rows(i, j);
    cs.push_back({normalize_primitive(v), false});
  }

  // stages[k]: system in variables x_0..x_k
  std::vector<std::vector<Constraint>> stages(n);
  dedupe(cs);
  for (const auto& c : cs) {
    bool zero = std::all_of(c.c.begin(), c.c.end(),
                            [](const Int& x) { return x == 0; });
    if (zero && c.strict) return std::nullopt;  // 0 > 0 handed in directly
  }
  stages[n - 1] = cs;
  for (std::size_t k = n - 1; k > 0; --k) {
    const auto& cur = stages[k];
    std::vector<Constraint> next;
    std::vector<const Constraint*> lower, upper;
    for (const auto& c : cur) {
      if (c.c[k] > 0)
        lower.push_back(&c);
      else if (c.c[k] < 0)
        upper.push_back(&c);
      else
        next.push_back(c);
    }
    for (const auto* lo : lower)
      for (const auto* up : upper) {
        // eliminate x_k: up.c[k] * lo + (-lo.c[k]) * up has zero k-coefficient
        IntVec v(n, Int(0));
        for (std::size_t j = 0; j < k; ++j)
          v[j] = lo->c[j] * (-up->c[k]) + up->c[j] * lo->c[k];
        Constraint combined{normalize_primitive(v), lo->strict || up->strict};
        bool zero = std::all_of(combined.c.begin(), combined.c.end(),
                                [](const Int& x) { return x == 0; });
        if (zero) {
          if (combined.strict) return std::nullopt;  // 0 > 0
          continue;
        }
        next.push_back(std::move(combined));
      }
    dedupe(next);
    stages[k - 1] = std::move(next);
  }

  // feasibility and back-substitution, variables in increasing order
  RatVec x(n, Rat(0));
  for (std::size_t k = 0; k < n; ++k) {
    bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
    Rat lo, up;
    for (const auto& c : stages[k]) {
      if (c.c[k] == 0) continue;  // satisfied by earlier choices, per FM
      Rat rest(0);
      for (std::size_t j = 0; j < k; ++j) rest += Rat(c.c[j]) * x[j];
      Rat bound = -rest / Rat(c.c[k]);
      if (c.c[k] > 0) {  // x_k (>|>=) bound
        if (!has_lo || bound > lo) {
          has_lo = true;
          lo = bound;
          lo_strict = c.strict;
        } else if (bound == lo) {
          lo_strict = lo_strict || c.strict;
        }
      } else {  // x_k (<|<=) bound
        if (!has_up || bound < up) {
          has_up = true;
          up = bound;
          up_strict = c.strict;
        } else if (bound == up) {
          up_strict = up_strict || c.strict;
        }
      }
    }
    if (!has_lo && !has_up) {
      x[k] = 0;
    } else if (has_lo && !has_up) {
      x[k] = lo_strict ? lo + 1 : lo;
    } else if (!has_lo && has_up) {
      x[k] = up_strict ? up - 1 : up;
    } else {
      if (lo > up) return std::nullopt;
      if (lo == up) {
        if (lo_strict || up_strict) return std::nullopt;
        x[k] = lo;
      } else {
        x[k] = (lo + up) / 2;
      }
    }
  }
  return x;
}

// --- RatMatrix -------------------------------------------------------------

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  assert(cols_ == o.rows_);
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  assert(v.size() == cols_);
  RatVec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

std::optional<IntMatrix> RatMatrix::to_int() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& q = (*this)(i, j);
      if (q.get_den() != 1) return std::nullopt;
      m(i, j) = q.get_num();
    }
  return m;
}

namespace {

// Gauss-Jordan; returns pivot columns.  Operates on an augmented matrix.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  assert(m.rows() == m.cols());
  std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rat det(const RatMatrix& m) {
  assert(m.rows() == m.cols());
  RatMatrix a = m;
  std::size_t n = a.rows();
  Rat d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    Rat inv = 1 / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
  assert(b.size() == m.rows());
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVec x(m.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

IntVec scale_to_primitive_int(const RatVec& v) {
  Int l(1);
  for (const Rat& q : v) l = lcm(l, q.get_den());
  IntVec w(v.size());
  Int g(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l);
    assert(s.get_den() == 1);
    w[i] = s.get_num();
    g = gcd(g, w[i]);
  }
  if (g > 1)
    for (auto& x : w) x /= g;
  return w;
}

std::string str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

}  // namespace rs
