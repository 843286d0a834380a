#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

// Exact arithmetic in F_{p^m}: scalars, polynomials, and matrices, with
// square roots, inverse Frobenius (p-th roots), and characteristic
// polynomials.

namespace rs {

struct GFFieldData {
  unsigned p;
  unsigned m;
  // monic defining polynomial x^m + c[m-1] x^{m-1} + ... + c[0]
  std::vector<unsigned> defining;
  std::uint64_t q;  // p^m
};

using GFField = std::shared_ptr<const GFFieldData>;

// Conway polynomial when tabulated, else the least monic irreducible in the
// base-p ordering of coefficient tuples (c0, c1, ...).
GFField make_field(unsigned p, unsigned m);

class GFElement {
 public:
  GFElement() = default;
  GFElement(GFField f, std::vector<unsigned> coeffs);

  static GFElement zero(const GFField& f);
  static GFElement one(const GFField& f);
  // image of n under Z -> F_p -> F_{p^m}
  static GFElement from_int(const GFField& f, long n);
  // element with enumeration index i = sum c_k p^k, 0 <= i < q
  static GFElement from_index(const GFField& f, std::uint64_t i);

  const GFField& field() const { return f_; }
  std::uint64_t index() const;
  bool is_zero() const;
  bool operator==(const GFElement& o) const;
  bool operator!=(const GFElement& o) const { return !(*this == o); }
  bool operator<(const GFElement& o) const { return index() < o.index(); }

  GFElement operator+(const GFElement& o) const;
  GFElement operator-(const GFElement& o) const;
  GFElement operator-() const;
  GFElement operator*(const GFElement& o) const;
  GFElement inverse() const;
  GFElement pow(long e) const;

  GFElement frobenius() const;  // x -> x^p
  std::string str() const;

  const std::vector<unsigned>& coeffs() const { return c_; }

 private:
  GFField f_;
  std::vector<unsigned> c_;  // length m, entries mod p
};

// Deterministic square root: the candidate of least enumeration index, empty
// when x is not a square.
std::optional<GFElement> gf_sqrt(const GFElement& x);

// The unique y with y^p = x, namely x^{p^{m-1}}.
GFElement gf_pth_root(const GFElement& x);

// --- polynomials ----------------------------------------------------------

struct GFPoly {
  GFField f;
  std::vector<GFElement> c;  // c[i] coefficient of x^i; normalized, no top 0s

  static GFPoly zero(const GFField& f);
  static GFPoly from_coeffs(const GFField& f, std::vector<GFElement> coeffs);
  static GFPoly x_minus(const GFElement& r);

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  GFElement eval(const GFElement& x) const;
  GFPoly operator+(const GFPoly& o) const;
  GFPoly operator*(const GFPoly& o) const;
  bool operator==(const GFPoly& o) const;
  // division with remainder; divisor must be nonzero
  std::pair<GFPoly, GFPoly> divmod(const GFPoly& d) const;
  std::string str() const;
};

// All roots in the coefficient field, with multiplicity, ascending by index.
std::vector<GFElement> poly_roots(const GFPoly& f);

// Does f split into linear factors over its field?
bool poly_splits(const GFPoly& f);

// --- matrices ---------------------------------------------------------------

class GFMatrix {
 public:
  GFMatrix() : rows_(0), cols_(0) {}
  GFMatrix(GFField f, std::size_t rows, std::size_t cols);
  static GFMatrix identity(const GFField& f, std::size_t n);
  // entries reduced mod p
  static GFMatrix from_int(const GFField& f, std::size_t rows, std::size_t cols,
                           const std::vector<long>& entries);

  const GFField& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GFElement& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const GFElement& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  bool operator==(const GFMatrix& o) const;

  GFMatrix operator+(const GFMatrix& o) const;
  GFMatrix operator-(const GFMatrix& o) const;
  GFMatrix operator*(const GFMatrix& o) const;
  GFMatrix operator*(const GFElement& s) const;
  GFMatrix transpose() const;
  GFMatrix pow(long e) const;
  bool is_zero() const;
  bool is_identity() const;

  std::vector<GFElement> apply(const std::vector<GFElement>& v) const;
  std::string str() const;

 private:
  GFField f_;
  std::size_t rows_, cols_;
  std::vector<GFElement> data_;
};

std::size_t rank(const GFMatrix& m);
std::optional<GFMatrix> inverse(const GFMatrix& m);
// columns span the kernel
GFMatrix kernel(const GFMatrix& m);
// x with m x = b, empty if none (free variables set to 0)
std::optional<std::vector<GFElement>> solve(const GFMatrix& m,
                                            const std::vector<GFElement>& b);
// exact characteristic polynomial det(xI - m), via Hessenberg reduction
GFPoly char_poly(const GFMatrix& m);
GFElement det(const GFMatrix& m);

// order of m in GL (m must be invertible); searches up to `bound`
std::optional<long> matrix_order(const GFMatrix& m, long bound);

// Column-reduced basis of the column span.
GFMatrix column_space(const GFMatrix& m);

// dim(span(sub + vectors)) - dim(span(sub)): used to pick quotient bases.
// Returns the indices of the columns of `vectors` that enlarge span(sub),
// scanning left to right (the documented pivot rule).
std::vector<std::size_t> quotient_basis_columns(const GFMatrix& sub,
                                                const GFMatrix& vectors);

}  // namespace rs
