#include "rootsmith/gf.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rs {

namespace {

// (p, m) -> defining polynomial coefficients c0..c_{m-1}
const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>&
conway_table() {
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>
      table = {
          {{2, 1}, {1}},
          {{2, 2}, {1, 1}},
          {{2, 3}, {1, 1, 0}},
          {{2, 4}, {1, 1, 0, 0}},
          {{3, 1}, {1}},
          {{3, 2}, {2, 2}},
          {{3, 3}, {1, 2, 0}},
          {{5, 1}, {3}},
          {{5, 2}, {2, 4}},
          {{7, 1}, {4}},
          {{7, 2}, {3, 6}},
      };
  return table;
}

// polynomial arithmetic over F_p on raw coefficient vectors
using Raw = std::vector<unsigned>;

Raw raw_trim(Raw a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Raw raw_mulmod_p(const Raw& a, const Raw& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Raw r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return raw_trim(std::move(r));
}

// remainder of a by monic divisor d
Raw raw_rem(Raw a, const Raw& d, unsigned p) {
  a = raw_trim(std::move(a));
  std::size_t dd = d.size() - 1;  // degree of d (monic, trimmed)
  while (a.size() > dd) {
    unsigned lead = a.back();
    std::size_t shift = a.size() - 1 - dd;
    if (lead != 0)
      for (std::size_t i = 0; i < d.size(); ++i) {
        std::size_t k = shift + i;
        a[k] = (a[k] + p - (lead * d[i]) % p) % p;
      }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

bool raw_is_irreducible(const Raw& monic, unsigned p) {
  // trial division by every monic polynomial of degree 1..deg/2
  std::size_t deg = monic.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Raw div(d + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      div[d] = 1;
      if (raw_rem(monic, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

GFField make_field(unsigned p, unsigned m) {
  assert(m >= 1);
  auto data = std::make_shared<GFFieldData>();
  data->p = p;
  data->m = m;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  data->q = q;
  assert(q <= (1ull << 24) && "field too large for dense enumeration");

  auto it = conway_table().find({p, m});
  if (it != conway_table().end()) {
    data->defining = it->second;
  } else {
    // least monic irreducible in base-p coefficient order
    bool found = false;
    std::uint64_t count = q;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      Raw c(m + 1, 0);
      std::uint64_t t = idx;
      for (unsigned i = 0; i < m; ++i) {
        c[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      c[m] = 1;
      if (raw_is_irreducible(c, p)) {
        data->defining.assign(c.begin(), c.end() - 1);
        found = true;
      }
    }
    assert(found);
  }
  {
    Raw full = data->defining;
    full.push_back(1);
    assert(raw_is_irreducible(full, p));
  }
  return data;
}

GFElement::GFElement(GFField f, std::vector<unsigned> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
  c_.resize(f_->m, 0);
  for (auto& x : c_) x %= f_->p;
}

GFElement GFElement::zero(const GFField& f) {
  return GFElement(f, std::vector<unsigned>(f->m, 0));
}

GFElement GFElement::one(const GFField& f) { return from_int(f, 1); }

GFElement GFElement::from_int(const GFField& f, long n) {
  long r = n % static_cast<long>(f->p);
  if (r < 0) r += f->p;
  std::vector<unsigned> c(f->m, 0);
  c[0] = static_cast<unsigned>(r);
  return GFElement(f, std::move(c));
}

GFElement GFElement::from_index(const GFField& f, std::uint64_t i) {
  std::vector<unsigned> c(f->m, 0);
  for (unsigned k = 0; k < f->m; ++k) {
    c[k] = static_cast<unsigned>(i % f->p);
    i /= f->p;
  }
  return GFElement(f, std::move(c));
}

std::uint64_t GFElement::index() const {
  std::uint64_t i = 0;
  for (unsigned k = f_->m; k-- > 0;) i = i * f_->p + c_[k];
  return i;
}

bool GFElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](unsigned x) { return x == 0; });
}

bool GFElement::operator==(const GFElement& o) const {
  assert(f_.get() == o.f_.get());
  return c_ == o.c_;
}

GFElement GFElement::operator+(const GFElement& o) const {
  assert(f_.get() == o.f_.get());
  std::vector<unsigned> r(f_->m);
  for (unsigned i = 0; i < f_->m; ++i) r[i] = (c_[i] + o.c_[i]) % f_->p;
  return GFElement(f_, std::move(r));
}

GFElement GFElement::operator-(const GFElement& o) const {
  assert(f_.get() == o.f_.get());
  std::vector<unsigned> r(f_->m);
  for (unsigned i = 0; i < f_->m; ++i)
    r[i] = (c_[i] + f_->p - o.c_[i]) % f_->p;
  return GFElement(f_, std::move(r));
}

GFElement GFElement::operator-() const {
  std::vector<unsigned> r(f_->m);
  for (unsigned i = 0; i < f_->m; ++i) r[i] = (f_->p - c_[i]) % f_->p;
  return GFElement(f_, std::move(r));
}

GFElement GFElement::operator*(const GFElement& o) const {
  assert(f_.get() == o.f_.get());
  Raw prod = raw_mulmod_p(raw_trim(c_), raw_trim(o.c_), f_->p);
  Raw d = f_->defining;
  d.push_back(1);
  Raw rem = raw_rem(std::move(prod), d, f_->p);
  rem.resize(f_->m, 0);
  return GFElement(f_, std::move(rem));
}

GFElement GFElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GFElement base = *this, acc = one(f_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

GFElement GFElement::inverse() const {
  assert(!is_zero());
  // x^(q-2)
  std::uint64_t e = f_->q - 2;
  GFElement base = *this, acc = one(f_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

GFElement GFElement::frobenius() const { return pow(static_cast<long>(f_->p)); }

std::string GFElement::str() const {
  if (f_->m == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << "[";
  for (unsigned i = 0; i < f_->m; ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

std::optional<GFElement> gf_sqrt(const GFElement& x) {
  const GFField& f = x.field();
  if (x.is_zero()) return x;
  if (f->p == 2) {
    // squaring is bijective; the root is x^(q/2)
    GFElement y = x;
    for (unsigned i = 1; i < f->m; ++i) y = y * y;
    return y;
  }
  GFElement ls = x.pow(static_cast<long>((f->q - 1) / 2));
  if (!(ls == GFElement::one(f))) return std::nullopt;
  for (std::uint64_t i = 0; i < f->q; ++i) {
    GFElement y = GFElement::from_index(f, i);
    if (y * y == x) return y;
  }
  return std::nullopt;  // unreachable
}

GFElement gf_pth_root(const GFElement& x) {
  const GFField& f = x.field();
  GFElement y = x;
  // x^{p^{m-1}}
  for (unsigned i = 1; i < f->m; ++i) y = y.pow(static_cast<long>(f->p));
  return y;
}

// --- GFPoly -----------------------------------------------------------------

GFPoly GFPoly::zero(const GFField& f) { return GFPoly{f, {}}; }

GFPoly GFPoly::from_coeffs(const GFField& f, std::vector<GFElement> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return GFPoly{f, std::move(coeffs)};
}

GFPoly GFPoly::x_minus(const GFElement& r) {
  return from_coeffs(r.field(), {-r, GFElement::one(r.field())});
}

GFElement GFPoly::eval(const GFElement& x) const {
  GFElement acc = GFElement::zero(f);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

GFPoly GFPoly::operator+(const GFPoly& o) const {
  std::vector<GFElement> r(std::max(c.size(), o.c.size()),
                           GFElement::zero(f));
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = r[i] + c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r[i] = r[i] + o.c[i];
  return from_coeffs(f, std::move(r));
}

GFPoly GFPoly::operator*(const GFPoly& o) const {
  if (is_zero() || o.is_zero()) return zero(f);
  std::vector<GFElement> r(c.size() + o.c.size() - 1, GFElement::zero(f));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < o.c.size(); ++j)
      r[i + j] = r[i + j] + c[i] * o.c[j];
  return from_coeffs(f, std::move(r));
}

bool GFPoly::operator==(const GFPoly& o) const {
  if (c.size() != o.c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!(c[i] == o.c[i])) return false;
  return true;
}

std::pair<GFPoly, GFPoly> GFPoly::divmod(const GFPoly& d) const {
  assert(!d.is_zero());
  GFPoly rem = *this;
  if (degree() < d.degree()) return {zero(f), rem};
  std::vector<GFElement> q(degree() - d.degree() + 1, GFElement::zero(f));
  GFElement lead_inv = d.c.back().inverse();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    long k = rem.degree() - d.degree();
    GFElement coef = rem.c.back() * lead_inv;
    q[k] = coef;
    std::vector<GFElement> sub(k, GFElement::zero(f));
    sub.insert(sub.end(), d.c.begin(), d.c.end());
    for (auto& s : sub) s = s * coef;
    std::vector<GFElement> r2(rem.c.size(), GFElement::zero(f));
    for (std::size_t i = 0; i < rem.c.size(); ++i) {
      r2[i] = rem.c[i];
      if (i < sub.size()) r2[i] = r2[i] - sub[i];
    }
    rem = from_coeffs(f, std::move(r2));
  }
  return {from_coeffs(f, std::move(q)), rem};
}

std::string GFPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !(c[i] == GFElement::one(f))) os << c[i].str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::vector<GFElement> poly_roots(const GFPoly& f) {
  std::vector<GFElement> roots;
  GFPoly cur = f;
  if (cur.is_zero()) return roots;
  for (std::uint64_t i = 0; i < f.f->q && cur.degree() > 0; ++i) {
    GFElement x = GFElement::from_index(f.f, i);
    while (cur.degree() > 0 && cur.eval(x).is_zero()) {
      roots.push_back(x);
      cur = cur.divmod(GFPoly::x_minus(x)).first;
    }
  }
  return roots;
}

bool poly_splits(const GFPoly& f) {
  if (f.is_zero()) return true;
  return static_cast<long>(poly_roots(f).size()) == f.degree();
}

// --- GFMatrix ----------------------------------------------------------------

GFMatrix::GFMatrix(GFField f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, GFElement::zero(f_)) {}

GFMatrix GFMatrix::identity(const GFField& f, std::size_t n) {
  GFMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GFElement::one(f);
  return m;
}

GFMatrix GFMatrix::from_int(const GFField& f, std::size_t rows,
                            std::size_t cols, const std::vector<long>& e) {
  assert(e.size() == rows * cols);
  GFMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i)
    m.data_[i] = GFElement::from_int(f, e[i]);
  return m;
}

bool GFMatrix::operator==(const GFMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == o.data_[i])) return false;
  return true;
}

GFMatrix GFMatrix::operator+(const GFMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  GFMatrix r(f_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] + o.data_[i];
  return r;
}

GFMatrix GFMatrix::operator-(const GFMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  GFMatrix r(f_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] - o.data_[i];
  return r;
}

GFMatrix GFMatrix::operator*(const GFMatrix& o) const {
  assert(cols_ == o.rows_);
  GFMatrix r(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const GFElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r(i, j) = r(i, j) + a * o(k, j);
    }
  return r;
}

GFMatrix GFMatrix::operator*(const GFElement& s) const {
  GFMatrix r(f_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

GFMatrix GFMatrix::transpose() const {
  GFMatrix t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

GFMatrix GFMatrix::pow(long e) const {
  assert(rows_ == cols_);
  assert(e >= 0);
  GFMatrix base = *this, acc = identity(f_, rows_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool GFMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const GFElement& x) { return x.is_zero(); });
}

bool GFMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(f_, rows_);
}

std::vector<GFElement> GFMatrix::apply(const std::vector<GFElement>& v) const {
  assert(v.size() == cols_);
  std::vector<GFElement> r(rows_, GFElement::zero(f_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
  return r;
}

std::string GFMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

namespace {

// Gauss-Jordan with leftmost-pivot rule; returns pivot columns.
std::vector<std::size_t> gf_rref(GFMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    GFElement inv = m(r, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      GFElement f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const GFMatrix& m) {
  GFMatrix a = m;
  return gf_rref(a).size();
}

std::optional<GFMatrix> inverse(const GFMatrix& m) {
  assert(m.rows() == m.cols());
  std::size_t n = m.rows();
  GFMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = GFElement::one(m.field());
  }
  auto pivots = gf_rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  GFMatrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

GFMatrix kernel(const GFMatrix& m) {
  GFMatrix a = m;
  auto pivots = gf_rref(a);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
      free_cols.push_back(c);
  GFMatrix k(m.field(), m.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t fc = free_cols[t];
    k(fc, t) = GFElement::one(m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k(pivots[r], t) = -a(r, fc);
  }
  return k;
}

std::optional<std::vector<GFElement>> solve(const GFMatrix& m,
                                            const std::vector<GFElement>& b) {
  assert(b.size() == m.rows());
  GFMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = gf_rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<GFElement> x(m.cols(), GFElement::zero(m.field()));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

GFElement det(const GFMatrix& m) {
  assert(m.rows() == m.cols());
  GFMatrix a = m;
  std::size_t n = a.rows();
  GFElement d = GFElement::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return GFElement::zero(m.field());
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d = d * a(c, c);
    GFElement inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      GFElement f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
    }
  }
  return d;
}

GFPoly char_poly(const GFMatrix& m) {
  assert(m.rows() == m.cols());
  const GFField& f = m.field();
  std::size_t n = m.rows();
  if (n == 0) return GFPoly::from_coeffs(f, {GFElement::one(f)});

  // similarity reduction to upper Hessenberg form
  GFMatrix h = m;
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    // pivot in column c below row c
    std::size_t p = c + 1;
    while (p < n && h(p, c).is_zero()) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, c + 1));
    }
    GFElement inv = h(c + 1, c).inverse();
    for (std::size_t i = c + 2; i < n; ++i) {
      if (h(i, c).is_zero()) continue;
      GFElement t = h(i, c) * inv;
      // row_i -= t * row_{c+1};  col_{c+1} += t * col_i   (similarity)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = h(i, j) - t * h(c + 1, j);
      for (std::size_t j = 0; j < n; ++j)
        h(j, c + 1) = h(j, c + 1) + t * h(j, i);
    }
  }

  // p_k = charpoly of leading k x k block of the Hessenberg matrix
  std::vector<GFPoly> p(n + 1, GFPoly::zero(f));
  p[0] = GFPoly::from_coeffs(f, {GFElement::one(f)});
  GFPoly x = GFPoly::from_coeffs(f, {GFElement::zero(f), GFElement::one(f)});
  for (std::size_t k = 1; k <= n; ++k) {
    GFPoly term = (x + GFPoly::from_coeffs(f, {-h(k - 1, k - 1)})) * p[k - 1];
    GFElement prod = GFElement::one(f);
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = prod * h(i + 1, i);  // subdiagonal entries
      GFPoly sub = GFPoly::from_coeffs(f, {-(h(i, k - 1) * prod)}) * p[i];
      term = term + sub;
    }
    p[k] = term;
  }
  return p[n];
}

std::optional<long> matrix_order(const GFMatrix& m, long bound) {
  GFMatrix acc = m;
  for (long k = 1; k <= bound; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * m;
  }
  return std::nullopt;
}

GFMatrix column_space(const GFMatrix& m) {
  GFMatrix a = m.transpose();
  auto pivots = gf_rref(a);
  GFMatrix r(m.field(), m.rows(), pivots.size());
  for (std::size_t t = 0; t < pivots.size(); ++t)
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, t) = a(t, i);
  return r;
}

std::vector<std::size_t> quotient_basis_columns(const GFMatrix& sub,
                                                const GFMatrix& vectors) {
  assert(sub.rows() == vectors.rows() || sub.cols() == 0);
  std::size_t n = vectors.rows();
  GFMatrix work(vectors.field(), n, sub.cols() + vectors.cols());
  for (std::size_t j = 0; j < sub.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) work(i, j) = sub(i, j);
  std::vector<std::size_t> chosen;
  std::size_t r0 = rank(work);
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i)
      work(i, sub.cols() + chosen.size()) = vectors(i, j);
    GFMatrix probe = work;  // only first sub.cols()+chosen.size()+1 cols matter
    // zero out the unused tail columns
    for (std::size_t jj = sub.cols() + chosen.size() + 1; jj < work.cols(); ++jj)
      for (std::size_t i = 0; i < n; ++i)
        probe(i, jj) = GFElement::zero(vectors.field());
    std::size_t r1 = rank(probe);
    if (r1 > r0 + chosen.size()) {
      chosen.push_back(j);
    }
  }
  return chosen;
}

}  // namespace rs
