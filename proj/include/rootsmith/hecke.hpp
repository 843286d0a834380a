#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootsmith/gf.hpp"
#include "rootsmith/tate.hpp"

// Finite-model Hecke algebras Fun_G(G/K x G/K), the Brauer homomorphism and
// its normalized (k-linear, Frobenius-descended) variant, sigma-plainness,
// and the eigenvalue-transfer check on k[G/K].

namespace rs {

using Perm = std::vector<std::uint16_t>;

Perm perm_identity(std::size_t degree);
Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);
// "(0 1 2)(3 4)" style cycles; whitespace tolerant; fixed points implied
Perm parse_cycles(const std::string& text, std::size_t degree);
std::string cycles_str(const Perm& a);

// A finite permutation group with all elements enumerated.
class PermGroup {
 public:
  static PermGroup generate(std::size_t degree, const std::vector<Perm>& gens,
                            std::size_t max_order = 200000);
  // subgroup of an existing enumeration
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elems_.size(); }
  const Perm& element(std::size_t i) const { return elems_[i]; }
  std::size_t index_of(const Perm& p) const;  // throws if absent
  std::optional<std::size_t> find(const Perm& p) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t identity() const { return id_; }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> elems_;
  std::map<Perm, std::size_t> index_;
  std::size_t id_ = 0;
};

// G with subgroup K and an automorphism sigma of order dividing p fixing K.
// sigma may be specified by a conjugating permutation F of the points
// (sigma(g) = F g F^{-1}) or by generator images (extended multiplicatively
// and then verified to be an automorphism).
struct FiniteGroupAction {
  PermGroup g;
  unsigned p = 0;
  std::vector<std::size_t> k_elems;            // element ids of K, sorted
  std::vector<std::size_t> sigma_elem;         // element id -> element id

  // coset space S = G/K
  std::size_t num_cosets = 0;
  std::vector<std::size_t> coset_of;   // element id -> coset id
  std::vector<std::size_t> coset_rep;  // coset id -> element id
  std::vector<std::size_t> sigma_coset;

  // double cosets K\G/K as K-orbits on S
  std::size_t num_dcosets = 0;
  std::vector<std::size_t> dc_of_coset;  // coset id -> double coset id
  std::vector<std::size_t> dc_rep;       // double coset id -> coset id
  std::vector<std::size_t> sigma_dc;
  std::vector<std::vector<std::size_t>> dc_cosets;  // cosets in each dcoset

  // fixed-point data
  std::vector<std::size_t> g_fixed;  // element ids fixed by sigma (subgroup)
  std::vector<std::size_t> k_fixed;

  bool sigma_is_automorphism(std::string* why = nullptr) const;
};

FiniteGroupAction make_action_conj(std::size_t degree,
                                   const std::vector<Perm>& g_gens,
                                   const std::vector<Perm>& k_gens,
                                   const Perm& conjugator, unsigned p);
FiniteGroupAction make_action_genimages(std::size_t degree,
                                        const std::vector<Perm>& g_gens,
                                        const std::vector<Perm>& k_gens,
                                        const std::vector<Perm>& gen_images,
                                        unsigned p);

// the action (G^sigma, K^sigma, trivial sigma)
FiniteGroupAction fixed_point_action(const FiniteGroupAction& a);

struct PlainnessReport {
  bool bijective = false;          // G^sigma/K^sigma -> (G/K)^sigma onto
  bool k_prime_to_p = false;       // gcd(|K|, p) = 1
  bool plain() const { return bijective && k_prime_to_p; }
  // sigma-fixed cosets with no sigma-fixed representative
  std::vector<std::size_t> bad_cosets;
  std::size_t num_fixed_cosets = 0;
  std::size_t num_fixed_quotient = 0;  // |G^sigma / K^sigma|
};

PlainnessReport plainness_check(const FiniteGroupAction& a);

// The Hecke algebra of (G, K): basis indexed by double cosets, integer
// structure constants (counts), specialized over a field on demand.
struct HeckeAlgebra {
  const FiniteGroupAction* act = nullptr;
  std::size_t dim = 0;
  std::size_t unit = 0;  // index of the double coset K
  // sc[a][b][c]: coefficient of basis c in (ind_a * ind_b), as a count
  std::vector<std::vector<std::vector<long>>> sc;
  bool commutative = false;

  std::vector<GFElement> convolve(const std::vector<GFElement>& h1,
                                  const std::vector<GFElement>& h2) const;
  // right-action matrices of each basis element on k[G/K] (eq. of the
  // double-coset sum acting by xK -> sum over gK in D of xgK)
  std::vector<GFMatrix> coset_action(const GFField& f) const;
  // the algebra as an abstract commutative ring with the sigma permutation
  SigmaRing as_sigma_ring(const GFField& f) const;
};

HeckeAlgebra hecke_algebra(const FiniteGroupAction& a);

// Brauer homomorphism: restriction of a sigma-invariant element to the fixed
// double cosets.  `fixed` must be hecke_algebra(fixed_point_action(a)).
std::vector<GFElement> brauer(const FiniteGroupAction& a, const HeckeAlgebra& ha,
                              const FiniteGroupAction& af, const HeckeAlgebra& hf,
                              const std::vector<GFElement>& h);

// normalized Brauer homomorphism br on a basis element:
// br(ind_D)(K^s, gK^s) = ((ind_D)^{* p} (K, gK))^{1/p}
std::vector<GFElement> normalized_brauer_basis(const FiniteGroupAction& a,
                                               const HeckeAlgebra& ha,
                                               const FiniteGroupAction& af,
                                               const HeckeAlgebra& hf,
                                               const GFField& f, std::size_t d);
std::vector<GFElement> normalized_brauer(const FiniteGroupAction& a,
                                         const HeckeAlgebra& ha,
                                         const FiniteGroupAction& af,
                                         const HeckeAlgebra& hf,
                                         const std::vector<GFElement>& h);

// Simultaneous eigencharacters of the commuting action of a Hecke algebra on
// k[G/K]; each is the vector of eigenvalues per basis element.
struct EigencharacterReport {
  GFField field;  // splitting field used
  std::vector<std::vector<GFElement>> characters;
};
std::optional<EigencharacterReport> eigencharacters(const FiniteGroupAction& a,
                                                    const HeckeAlgebra& ha,
                                                    unsigned max_degree = 12);

struct TransferReport {
  bool ok = false;
  std::string detail;
  std::size_t num_characters = 0;
  std::size_t matched = 0;
  unsigned field_degree = 0;
};

// Theorem-level check: every eigencharacter chi of H(G^s,K^s) on k[G^s/K^s]
// has chi o br appearing as an eigencharacter of H(G,K) on k[G/K].
TransferReport eigenvalue_transfer_check(const FiniteGroupAction& a);

struct BrauerCompatReport {
  bool ok = false;
  std::string detail;
};

// Diagram check: T^*(Pi^K) -> T^*(Pi)^{K^sigma} intertwines T^*(h) with
// Br(h) for all sigma-invariant orbit sums h; Pi = a sigma-stable G-stable
// subspace of k[G/K] (columns of `submodule`), or all of k[G/K] when empty.
BrauerCompatReport brauercompat_check(const FiniteGroupAction& a,
                                      const GFField& f,
                                      const GFMatrix& submodule);

// --- ready-made models -------------------------------------------------------

// GL_2(F_8) as permutations of the 63 nonzero vectors; sigma = entrywise
// Frobenius (order 3); K = diagonal torus (order 49) or Borel (order 392)
FiniteGroupAction gl2_f8_action(bool borel_level);
// (S_3)^p with the cyclic shift, K = <(0 1)>^p
FiniteGroupAction s3_wreath_action(unsigned p);
// S_3, K = <(0 1)>, trivial sigma, p = 3
FiniteGroupAction s3_trivial_action();
// the non-plain example: G = (Z/p)^2 regular, K = second factor, sigma = shear
FiniteGroupAction shear_action(unsigned p);

}  // namespace rs
