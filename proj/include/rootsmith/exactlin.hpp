#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

// Exact integer and rational linear algebra: Smith normal form, kernels,
// lattice quotients, and rational cone feasibility.  Everything here is
// arbitrary-precision; no floating point.

namespace rs {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// canonicalized fraction (mpq_class's two-argument constructor does not reduce)
inline Rat rat_frac(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<long> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntVec apply(const IntVec& v) const;  // matrix * column vector

  bool is_zero() const;
  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

struct SmithDecomposition {
  IntMatrix diagonal;  // left * m * right
  IntMatrix left;      // unimodular
  IntMatrix right;     // unimodular
  IntVec invariant_factors() const;  // nonzero diagonal entries, in order
};

// left * m * right = diagonal, with d_1 | d_2 | ... and both transforms
// unimodular.
SmithDecomposition smith_normal_form(const IntMatrix& m);

// Independent oracle: invariant factors via gcds of k x k minors.  Exponential
// in the matrix size; intended for tests on small matrices.
IntVec invariant_factors_by_minors(const IntMatrix& m);

// Columns form a basis of the saturated kernel lattice {v : m v = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Exact determinant (fraction-free Gauss / via SNF for our small sizes).
Int det(const IntMatrix& m);

// Rank over Q.
std::size_t rank(const IntMatrix& m);

// Does the column span of `lattice` contain v?
bool lattice_contains(const IntMatrix& lattice, const IntVec& v);

// Quotient of Z^ambient_rank by the column span of `generators`.
struct LatticeQuotient {
  std::size_t ambient_rank = 0;
  IntMatrix generators;
  IntVec invariant_factors;  // of the quotient: entries != 1, including 0s
  bool finite() const;
  Int index() const;  // product of invariant factors; only when finite

  // Coordinates of v in the quotient: one residue per invariant factor
  // (reduced mod d_i; factor 0 means a free Z coordinate).
  IntVec reduce(const IntVec& v) const;

  // Internal: row transform from SNF, mapping ambient coords to SNF coords,
  // and the full diagonal (1s included) aligned with those coords.
  IntMatrix to_snf;
  IntVec diag_full;
};

LatticeQuotient lattice_quotient(std::size_t ambient_rank,
                                 const IntMatrix& generators);

// First vector v (in a deterministic Fourier-Motzkin elimination order) with
// strictRows * v > 0 and weakRows * v >= 0 entrywise; empty if infeasible.
std::optional<RatVec> rational_cone_feasible(const IntMatrix& strict_rows,
                                             const IntMatrix& weak_rows);

// --- rational matrices --------------------------------------------------

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_int(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  bool operator==(const RatMatrix& o) const = default;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatVec apply(const RatVec& v) const;

  // Integral entries?  If so, the integer matrix.
  std::optional<IntMatrix> to_int() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

std::optional<RatMatrix> inverse(const RatMatrix& m);
Rat det(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Solve m x = b exactly; empty if inconsistent.  When the solution is not
// unique the pivot-free variables are set to 0.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

IntVec scale_to_primitive_int(const RatVec& v);

std::string str(const IntVec& v);
std::string str(const RatVec& v);

}  // namespace rs
