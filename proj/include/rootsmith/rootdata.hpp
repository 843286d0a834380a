#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rootsmith/exactlin.hpp"

// Root systems, based root data, Weyl group elements as exact lattice
// automorphisms, subsystems, extended Dynkin diagrams, and diagram
// automorphisms.  Roots live in the simple-root basis with integer
// coordinates; an optional rational ambient embedding is carried for inner
// products and for ingesting matrices given in orthogonal coordinates.

namespace rs {

using Coeffs = std::vector<long>;  // coordinates in the simple-root basis

struct CartanType {
  // sorted multiset of irreducible factors
  std::vector<std::pair<char, std::size_t>> factors;
  std::string str() const;
  static CartanType parse(const std::string& label);  // e.g. "A4xA4", "E8"
  bool operator==(const CartanType& o) const = default;
  bool operator<(const CartanType& o) const { return factors < o.factors; }
};

class RootDatum;
using RootDatumPtr = std::shared_ptr<const RootDatum>;

class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(IntMatrix m) : m_(std::move(m)) {}
  static WeylElement identity(std::size_t rank);

  const IntMatrix& matrix() const { return m_; }
  Coeffs apply(const Coeffs& v) const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return m_ == o.m_; }
  bool is_identity() const;
  long order(long bound = 1000) const;

 private:
  IntMatrix m_;
};

struct DiagramAutomorphism {
  std::vector<std::size_t> perm;  // image of each simple-root index
  WeylElement lattice_action(std::size_t rank) const;
  std::size_t order() const;
};

class RootDatum : public std::enable_shared_from_this<RootDatum> {
 public:
  // Recognized labels: letters A..G with rank, joined by 'x' (e.g. "A2xE6").
  // Throws std::invalid_argument on unknown labels.
  static RootDatumPtr build(const std::string& cartan_label);
  // from an explicit generalized Cartan matrix of finite type (node order
  // preserved; no ambient embedding)
  static RootDatumPtr build_from_cartan(const IntMatrix& cartan);

  std::size_t rank() const { return rank_; }
  const CartanType& type() const { return type_; }
  // cartan(i, j) = <alpha_j, alpha_i^vee>
  long cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  IntMatrix cartan_matrix() const;

  const std::vector<Coeffs>& roots() const { return roots_; }
  const std::vector<Coeffs>& positive_roots() const { return positive_; }
  bool is_root(const Coeffs& v) const;
  bool is_positive_root(const Coeffs& v) const;
  Coeffs simple_root(std::size_t i) const;

  // unique root of maximal height (irreducible systems only)
  Coeffs highest_root() const;

  // symmetrized invariant inner product, short roots normalized to norm 2
  Rat inner(const Coeffs& a, const Coeffs& b) const;
  Rat norm2(const Coeffs& a) const;
  // <beta, gamma^vee> for roots beta, gamma
  long pairing(const Coeffs& beta, const Coeffs& gamma) const;
  // gamma^vee in the simple-coroot basis
  Coeffs coroot(const Coeffs& gamma) const;
  // <v, alpha_i^vee> of an arbitrary lattice vector v
  long simple_pairing(const Coeffs& v, std::size_t i) const;

  // sum of positive roots (in simple-root coordinates); the half sum is
  // integral only in the weight lattice
  Coeffs sum_positive_roots() const;

  WeylElement reflection(const Coeffs& root) const;
  WeylElement simple_reflection(std::size_t i) const;
  // w as a product of the reflections in `roots`, left to right
  WeylElement product_of_reflections(const std::vector<Coeffs>& roots) const;

  // does w permute the root set and preserve the pairing?
  bool is_weyl_endomorphism(const WeylElement& w) const;

  // all positive roots r with w r = -r, ordered height-then-lex with respect
  // to the given simple system (defaults to the standard one)
  std::vector<Coeffs> minus_one_eigenroots(
      const WeylElement& w,
      const std::optional<std::vector<Coeffs>>& simples = std::nullopt) const;

  bool is_strongly_orthogonal(const std::vector<Coeffs>& roots) const;

  // optional ambient embedding: columns are the simple roots
  const std::optional<RatMatrix>& ambient() const { return ambient_; }
  RatVec to_ambient(const Coeffs& v) const;
  std::optional<Coeffs> from_ambient(const RatVec& v) const;

  // Weyl element from a matrix in ambient coordinates; verifies orthogonality
  // and lattice preservation.  Error string on failure.
  std::optional<WeylElement> weyl_from_ambient(const RatMatrix& q,
                                               std::string* error = nullptr) const;

  // all graph automorphisms of the Dynkin diagram
  std::vector<DiagramAutomorphism> diagram_automorphisms() const;

  std::string to_json() const;

 private:
  std::size_t rank_ = 0;
  CartanType type_;
  std::vector<std::vector<long>> cartan_;
  std::vector<Rat> dvec_;  // (alpha_i, alpha_i)/2, min 1 per system
  std::vector<Coeffs> roots_;
  std::vector<Coeffs> positive_;
  std::map<Coeffs, std::size_t> index_;
  std::optional<RatMatrix> ambient_;
};

// --- positive systems -------------------------------------------------------

// A positive system given by an arbitrary simple system (roots in the ambient
// datum's simple-root coordinates).
struct SimpleSystem {
  RootDatumPtr rd;
  std::vector<Coeffs> simples;

  // is every simple root a root, pairwise pairings <= 0, full rank, and the
  // generated type equal to the ambient type?
  bool is_simple_system_of_ambient(std::string* why = nullptr) const;
  bool is_positive(const Coeffs& root) const;  // nonneg coords in this basis
  std::vector<Coeffs> positive_roots() const;
  Coeffs sum_positive_roots() const;
  // <rho, beta^vee> where rho is the half sum of this system's positives
  Rat rho_pairing(const Coeffs& beta) const;
  // coordinates of a lattice vector in this basis (rational in general)
  RatVec coordinates(const Coeffs& v) const;
};

// --- subsystems ---------------------------------------------------------------

struct Subsystem {
  RootDatumPtr ambient;
  std::vector<Coeffs> simples;  // in ambient simple-root coordinates

  IntMatrix cartan() const;  // pairing matrix of the simples
  CartanType type() const;
  std::vector<Coeffs> roots() const;  // reflection closure inside ambient
  std::vector<Coeffs> positive_roots() const;
  Coeffs sum_positive_roots() const;
  bool contains_root(const Coeffs& r) const;
  // rational coordinates of an ambient vector in the simples (if in span)
  std::optional<RatVec> coordinates(const Coeffs& v) const;
};

// Cartan type of an abstract generalized Cartan matrix (entries of a valid
// finite type); throws on unrecognized input.  The two-node double-edge
// diagram reports as B2.
CartanType classify_cartan(const IntMatrix& cartan);

// nu_w in W_H and \bar w = nu_w^{-1} w for the subsystem H:
// nu_w is the unique element of W_H with nu_w(Phi+(H)) = w Phi+(G) ^ Phi(H).
struct WeylRestriction {
  WeylElement nu;
  WeylElement bar;
};
WeylRestriction weyl_restriction(const WeylElement& w, const Subsystem& h);

// --- extended diagram ---------------------------------------------------------

struct ExtendedDynkin {
  RootDatumPtr rd;
  Coeffs lowest_root;        // -alpha_0
  std::vector<long> marks;   // coefficient of alpha_i in alpha_0
  // Cartan pairing matrix on nodes {0 = lowest, 1..n = simples}
  IntMatrix cartan() const;
  // node permutations preserving the extended Cartan matrix
  std::vector<std::vector<std::size_t>> automorphisms() const;
};

// requires irreducible rd
ExtendedDynkin extended_dynkin(const RootDatumPtr& rd);

// half sum of the positive roots of the given simple system, ambient coords
RatVec half_sum_positive(const SimpleSystem& sys);

std::string weyl_to_json(const WeylElement& w);

}  // namespace rs
