#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rootsmith/gf.hpp"
#include "rootsmith/tate.hpp"

// sigma-equivariant simplicial complexes over F_p, their homology, and the
// two spectral sequences of the Smith double complex
//   ... <- C_*  <-N-  C_*  <-(1-sigma)-  C_*  <-N- ...
// computed exactly via the column and row filtrations of the total complex.

namespace rs {

// dense matrix over the prime field F_p, p < 256
class FpMat {
 public:
  FpMat() : p_(2), rows_(0), cols_(0) {}
  FpMat(unsigned p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), d_(rows * cols, 0) {}
  static FpMat identity(unsigned p, std::size_t n);

  unsigned p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t& operator()(std::size_t i, std::size_t j) {
    return d_[i * cols_ + j];
  }
  std::uint8_t operator()(std::size_t i, std::size_t j) const {
    return d_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, long v);
  bool operator==(const FpMat& o) const = default;

  FpMat operator*(const FpMat& o) const;
  FpMat operator+(const FpMat& o) const;
  FpMat operator-(const FpMat& o) const;
  bool is_zero() const;

 private:
  unsigned p_;
  std::size_t rows_, cols_;
  std::vector<std::uint8_t> d_;
};

std::size_t rank(const FpMat& m);
FpMat kernel(const FpMat& m);        // columns span the kernel
FpMat column_space(const FpMat& m);  // reduced basis of the column span
// horizontal concatenation
FpMat hcat(const FpMat& a, const FpMat& b);
// span(a) + span(b), intersection, and preimage m^{-1}(span(w))
FpMat span_sum(const FpMat& a, const FpMat& b);
FpMat span_intersect(const FpMat& a, const FpMat& b);
FpMat preimage(const FpMat& m, const FpMat& w);
// dim (span(a) + span(b)) / span(b)
std::size_t quotient_dim(const FpMat& a, const FpMat& b);

// --- complexes ----------------------------------------------------------------

using Simplex = std::vector<int>;  // sorted vertex ids

struct SigmaComplex {
  unsigned p = 2;                        // order of sigma
  std::size_t num_vertices = 0;
  std::vector<std::size_t> sigma;        // vertex permutation
  std::vector<std::vector<Simplex>> cells;  // by dimension, sorted

  std::size_t top_dim() const { return cells.empty() ? 0 : cells.size() - 1; }
  std::size_t size() const;  // total number of simplices
  // every setwise-fixed simplex is fixed vertexwise
  bool is_regular() const;
  // the subcomplex of pointwise-fixed simplices
  SigmaComplex fixed_subcomplex() const;
};

// closes the given simplices under faces and validates sigma
SigmaComplex make_complex(unsigned p, std::size_t num_vertices,
                          const std::vector<Simplex>& simplices,
                          const std::vector<std::size_t>& sigma);

SigmaComplex barycentric_subdivision(const SigmaComplex& c);
// subdivides until regular (at most max_rounds times)
SigmaComplex subdivide_until_regular(const SigmaComplex& c, int max_rounds = 3);

// "p <prime>" / "vertices <n>" / "simplex v0 v1 .." / "sigma (cycles)"
SigmaComplex parse_complex(std::istream& in);

struct ChainData {
  unsigned p = 2;
  std::vector<std::size_t> dims;     // dim C_k
  std::vector<FpMat> boundary;       // boundary[k]: C_k -> C_{k-1} (k >= 1)
  std::vector<FpMat> sigma_chain;    // sigma on C_k, with orientation signs
};

ChainData chain_data(const SigmaComplex& c);

// mod-p Betti numbers (validates dd = 0) with representative cycles
struct HomologyResult {
  std::vector<std::size_t> betti;
  std::vector<FpMat> cycle_reps;  // columns: representative cycles per degree
};
HomologyResult homology_fp(const ChainData& cd);

// --- the Smith double complex ---------------------------------------------------

struct PageEntry {
  long s = 0;  // filtration index
  long n = 0;  // total degree
  std::size_t dim = 0;
};

struct SmithReport {
  bool regular = false;
  std::vector<std::size_t> h_total;     // dim H_n(Tot), n over one period (2)
  std::vector<std::size_t> h_fixed;     // dim H_j(X^sigma)
  std::vector<std::size_t> h_space;     // dim H_j(X)
  // per degree j: (dim T^0 H_j, dim T^1 H_j) computed by the tate module
  std::vector<std::pair<std::size_t, std::size_t>> tate_h;

  bool hv_e1_is_fixed_chains = false;   // hvE^1 = C_*(X^sigma) dimensionwise
  bool hv_e2_is_fixed_homology = false;
  bool hv_degenerates_at_e2 = false;    // E^2 = E^inf positionwise
  bool vh_e2_is_tate = false;           // vhE^2_{ij} = T^i H_j
  bool totals_agree = false;            // both E^inf sums equal dim H(Tot)
  // nonzero vh-differentials d^r, r >= 2: (r, s, n, rank)
  std::vector<std::array<long, 4>> vh_higher_differentials;
  std::string detail;
};

SmithReport smith_double_complex(const SigmaComplex& c);

struct InequalityReport {
  bool holds = false;
  std::size_t sum_fixed = 0;  // sum of dim H_*(X^sigma)
  // sum over j of dim T^{i} H_j(X), parity of i aligned with one total
  // degree of the double complex (the smaller of the two parities)
  std::size_t sum_tate = 0;
  std::size_t sum_tate_both = 0;  // all of T^0 and T^1 together
  std::size_t sum_h_space = 0;    // sum of dim H_*(X)
  bool e2_matches_fixed = false;
};

InequalityReport smith_inequality_check(const SigmaComplex& c);

// --- fixtures -------------------------------------------------------------------

SigmaComplex point_complex(unsigned p);
SigmaComplex circle_complex(unsigned p, std::size_t vertices);  // trivial sigma
// free rotation on a (3p)-gon (p-fold cover of the circle)
SigmaComplex free_circle_cover(unsigned p);
// octahedral 2-sphere, rotation by pi around an axis: two fixed points (p=2)
SigmaComplex sphere_half_turn();
// boundary of the 3-simplex with a 3-cycle on three vertices (irregular)
SigmaComplex sphere_rotation_p3();
// a filled triangle rotated (irregular until subdivided), p = 3
SigmaComplex filled_triangle_rotation();
// a single edge swapped (irregular until subdivided), p = 2
SigmaComplex edge_swap();
// seeded random regular sigma-complex with at most max_simplices simplices
SigmaComplex random_regular_complex(unsigned p, std::uint64_t seed,
                                    std::size_t max_simplices = 200);

}  // namespace rs
