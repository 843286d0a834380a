#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootsmith/gf.hpp"
#include "rootsmith/rootdata.hpp"

// Borel-de Siebenthal and endoscopic subgroups, the classification of prime
// order automorphisms with semisimple fixed points, restricted-root
// invariants of pinned automorphisms with the isogeny criterion, dual norm
// maps, the twisted Weyl action, and pseudoroots.

namespace rs {

// --- full-rank subgroups from the extended diagram ----------------------------

// Delta(H) = {-alpha_0} u {alpha_j}_{j != node}; requires the highest-root
// coefficient at `node` to equal p.  Also verifies [Q(G):Q(H)] = p.
Subsystem borel_de_siebenthal(const RootDatumPtr& rd, std::size_t node,
                              unsigned p);

// The dual-side construction from the highest short root; the returned
// subsystem lives in the dual root datum.  Checks quasi-closedness by the
// rank-2 subsystem scan (long/short/full intersections).
struct EndoscopicResult {
  RootDatumPtr dual;     // the dual root datum
  Subsystem subsystem;   // inside `dual`
  bool quasi_closed = false;
};
EndoscopicResult endoscopic_subgroup(const RootDatumPtr& rd, std::size_t node,
                                     unsigned p);

// the dual root datum (transposed Cartan matrix, same Bourbaki numbering)
RootDatumPtr dual_datum(const RootDatumPtr& rd);

struct ClassifiedCase {
  std::size_t node = 0;  // extended-diagram node removed (1-based simple index)
  unsigned p = 0;
  CartanType fixed_type;
  bool outer = false;
};

// Inner rows: extended-diagram nodes with prime mark, up to extended-diagram
// symmetry.  With include_outer, adds the pinned (diagram-automorphism)
// rows computed by folding.
std::vector<ClassifiedCase> classify_prime_order(const RootDatumPtr& rd,
                                                 bool include_outer);

// --- pinned automorphisms ------------------------------------------------------

struct PinnedOrbitInvariants {
  Coeffs representative;      // a root in the sigma-equivalence class
  std::size_t orbit_size = 0; // o_alpha
  bool type_a2 = false;       // class of type A2 (else A1^r)
  Rat e, f, cos_sq;           // e_alpha, f_alpha, cos^2(theta_alpha)
  Rat criterion;              // p * e * f * cos^2(theta)
  bool criterion_is_p_power = false;
};

struct PinnedInvariantsResult {
  std::vector<PinnedOrbitInvariants> classes;  // one per sigma-equivalence class
  CartanType fixed_type;                       // Cartan type of H = G^sigma
  bool comps_table_ok = false;   // values match the tabulated formula
  bool criterion_ok = false;     // p e f cos^2 is a p-power in every class
};

PinnedInvariantsResult pinned_invariants(const RootDatumPtr& rd,
                                         const DiagramAutomorphism& aut,
                                         unsigned p);

struct IsogenyCheckResult {
  bool ok = false;
  // per class: multiplier q with (pullback of the G^sigma-dual root) =
  // q * (coroot of the H-root); must be a power of p
  std::vector<Rat> multipliers;
  bool constant_on_lengths = false;
  std::string detail;
};

IsogenyCheckResult pinned_isogeny_check(const RootDatumPtr& rd,
                                        const DiagramAutomorphism& aut,
                                        unsigned p);

// --- torus points and the twisted action ---------------------------------------

// A point of the dual torus T^(k) = X^*(T) (x) k^*, stored as one k^* value
// per basis vector of the (simply connected) weight lattice; for our
// computations the coordinates are indexed by fundamental weights, so a
// cocharacter given in simple-root coordinates acts through the Cartan
// matrix.
struct TorusPoint {
  GFField k;
  std::vector<GFElement> w;  // coordinate per fundamental weight, nonzero

  bool operator==(const TorusPoint& o) const;
  TorusPoint operator*(const TorusPoint& o) const;
  TorusPoint inverse() const;
};

// the point lambda (x) t for a lattice vector lambda in simple-root coords
TorusPoint torus_point(const RootDatumPtr& rd, const GFField& k,
                       const Coeffs& lambda_simple_root_coords,
                       const GFElement& t);
TorusPoint torus_identity(const RootDatumPtr& rd, const GFField& k);

// evaluation of a character of the dual torus (= coroot-lattice vector of
// the source datum, in simple-coroot coordinates) at a point
GFElement evaluate(const RootDatumPtr& rd, const TorusPoint& t,
                   const Coeffs& coroot_coords);

// w(t): Weyl action on torus points
TorusPoint weyl_act(const RootDatumPtr& rd, const WeylElement& w,
                    const TorusPoint& t);

// w * a = w(a) . ((Sigma* - w Sigma*)/2)(q): the twisted Weyl action
TorusPoint twisted_weyl_action(const RootDatumPtr& rd, const WeylElement& w,
                               const TorusPoint& a, const GFElement& q);

// conditions (a) and (b) for a pseudoroot: square = Sigma*(q) and twisted
// invariance under all simple reflections
struct PseudorootCheck {
  bool square_ok = false;
  bool invariant_ok = false;
  bool ok() const { return square_ok && invariant_ok; }
};
PseudorootCheck pseudoroot_verify(const RootDatumPtr& rd,
                                  const TorusPoint& candidate,
                                  const GFElement& q);

// the canonical candidate (Sigma*/2)(q); requires Sigma even
std::optional<TorusPoint> canonical_pseudoroot(const RootDatumPtr& rd,
                                               const GFField& k,
                                               const GFElement& q);

// --- canonical pseudoroots for pairs -------------------------------------------

struct CanonicalPseudorootResult {
  bool exists = false;
  Coeffs sigma_h;        // sum of positive roots of H in G's coordinates
  bool even = false;     // divisible by 2 in the weight lattice of G
  std::string detail;
};

// p = 2 always passes; otherwise checks 2-divisibility of Sigma_H
CanonicalPseudorootResult canonical_pseudoroot_exists(const RootDatumPtr& rd,
                                                      const Subsystem& h,
                                                      unsigned p);

// --- dual norm -------------------------------------------------------------------

// Lattice model of the dual norm for an inner sigma: N* = p * psi_1 where
// psi_1 is the change of basis between the two Borels' coordinates; and for
// the cyclic base-change model H^p: the diagonal embedding.
IntMatrix dual_norm_inner(std::size_t rank, unsigned p);
IntMatrix dual_norm_base_change(std::size_t rank_h, unsigned p);

// Dual norm of a pinned automorphism at the lattice level:
// X^*(T_H) = X^*(T)_sigma (coinvariants mod torsion) -> X^*(T_G), sending a
// class to the sum over the sigma-orbit of any lift.
struct PinnedDualNorm {
  IntMatrix coinv_basis;   // columns: lattice lifts of a coinvariant basis
  IntMatrix matrix;        // rank x rank_H: the norm of each basis lift
};
PinnedDualNorm pinned_dual_norm(const RootDatumPtr& rd,
                                const DiagramAutomorphism& aut, unsigned p);

}  // namespace rs
