#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootsmith/gf.hpp"

// Tate cohomology T^0 = ker(1-sigma)/im(N), T^1 = ker(N)/im(1-sigma) for an
// order-p operator sigma with norm N = 1 + sigma + ... + sigma^{p-1}, on
// modules and on finite commutative rings, plus the unique character
// extension through the norm quotient.

namespace rs {

struct SigmaModule {
  GFField k;
  GFMatrix sigma;  // square, sigma^p = identity

  std::size_t dim() const { return sigma.rows(); }
  GFMatrix one_minus_sigma() const;
  GFMatrix norm() const;  // 1 + sigma + ... + sigma^{p-1}
  bool validate(std::string* why = nullptr) const;
};

SigmaModule make_sigma_module(const GFField& k, GFMatrix sigma);

// permutation module on a sigma-set: sigma given as a permutation of points
SigmaModule permutation_module(const GFField& k,
                               const std::vector<std::size_t>& perm);

// block form of M (x) k[Z/p] with sigma acting diagonally (induced module)
SigmaModule induced_module(const SigmaModule& m);

// One Tate group as a subquotient Z/B of the module, with chosen coset
// representatives (first columns of Z that enlarge B, scanning left to
// right).
struct TateGroup {
  GFMatrix z;     // columns: basis of the cycle space
  GFMatrix b;     // columns: basis of the boundary space, b <= z
  GFMatrix reps;  // columns: coset representatives; dim = reps.cols()
  std::size_t dim() const { return reps.cols(); }
  // coordinates of v (must lie in span z) modulo span b
  std::vector<GFElement> reduce(const std::vector<GFElement>& v) const;
};

struct TateCohomology {
  TateGroup t0;  // ker(1-sigma)/im(N)
  TateGroup t1;  // ker(N)/im(1-sigma)
};

TateCohomology tate_cohomology(const SigmaModule& m);

// --- commutative sigma-rings -------------------------------------------------

struct SigmaRing {
  GFField k;
  std::size_t dim = 0;
  std::vector<GFMatrix> mult;       // mult[i]: multiplication by basis e_i
  std::vector<GFElement> unit;      // coordinates of 1
  GFMatrix sigma;                   // ring automorphism, sigma^p = 1

  std::vector<GFElement> multiply(const std::vector<GFElement>& u,
                                  const std::vector<GFElement>& v) const;
  bool validate(std::string* why = nullptr) const;
  SigmaModule as_module() const { return SigmaModule{k, sigma}; }
};

// functions on a finite sigma-set (pointwise product, permutation action).
// The free cycle perm = (0 1 ... p-1) is the sigma-ring incarnation of
// k[Z/p] with translation.
SigmaRing function_ring(const GFField& k, const std::vector<std::size_t>& perm);
SigmaRing free_cycle_ring(const GFField& k);  // functions on one free p-cycle

// \bar A = A^sigma / N A with its induced product; checks that N A is an
// ideal of A^sigma.  Also returns the projection data used to map elements
// of A^sigma to \bar A coordinates.
struct TateRing {
  SigmaRing ring;        // \bar A, with trivial sigma
  GFMatrix asigma_basis; // columns: basis of A^sigma inside A
  GFMatrix na_basis;     // columns: basis of N A
  GFMatrix reps;         // representatives completing na_basis to A^sigma
  // coordinates in \bar A of an element of A^sigma
  std::vector<GFElement> project(const std::vector<GFElement>& v) const;
};

TateRing tate_ring(const SigmaRing& a);

// A character of a finite-dimensional commutative algebra, as its values on
// the basis.
using Character = std::vector<GFElement>;

// all k-valued characters (unital algebra homomorphisms to k); requires every
// multiplication operator's characteristic polynomial to split over k, else
// returns nullopt (enlarge the field and retry)
std::optional<std::vector<Character>> characters_of(const SigmaRing& a);

// chi~(a) = psi(a a^sigma ... a^{sigma^{p-1}})^{1/p}: the unique sigma-fixed
// character of A restricting to psi on \bar A
Character extend_character(const SigmaRing& a, const TateRing& bar,
                           const Character& psi);

bool is_character(const SigmaRing& a, const Character& chi);
bool is_sigma_fixed_character(const SigmaRing& a, const Character& chi);

}  // namespace rs
