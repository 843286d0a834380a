#include "rootsmith/hecke.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace rs {

Perm perm_identity(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Perm parse_cycles(const std::string& text, std::size_t degree) {
  Perm p = perm_identity(degree);
  std::size_t i = 0;
  while (i < text.size()) {
    if (isspace(text[i])) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycles");
    ++i;
    std::vector<std::size_t> cyc;
    while (i < text.size() && text[i] != ')') {
      if (isspace(text[i]) || text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && isdigit(text[j])) ++j;
      if (j == i) throw std::invalid_argument("expected point index in cycles");
      std::size_t v = std::stoul(text.substr(i, j - i));
      if (v >= degree) throw std::invalid_argument("point index out of range");
      cyc.push_back(v);
      i = j;
    }
    if (i == text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    for (std::size_t t = 0; t < cyc.size(); ++t)
      p[cyc[t]] = static_cast<std::uint16_t>(cyc[(t + 1) % cyc.size()]);
  }
  return p;
}

std::string cycles_str(const Perm& a) {
  std::ostringstream os;
  std::vector<bool> seen(a.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == i) continue;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j;
      first = false;
      j = a[j];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

PermGroup PermGroup::generate(std::size_t degree, const std::vector<Perm>& gens,
                              std::size_t max_order) {
  PermGroup g;
  g.degree_ = degree;
  Perm id = perm_identity(degree);
  g.elems_.push_back(id);
  g.index_[id] = 0;
  g.id_ = 0;
  std::queue<std::size_t> work;
  work.push(0);
  while (!work.empty()) {
    std::size_t cur = work.front();
    work.pop();
    for (const Perm& s : gens) {
      Perm nxt = perm_mul(g.elems_[cur], s);
      auto [it, fresh] = g.index_.emplace(nxt, g.elems_.size());
      if (fresh) {
        g.elems_.push_back(nxt);
        if (g.elems_.size() > max_order)
          throw std::runtime_error("group order exceeds the configured bound");
        work.push(it->second);
      }
    }
  }
  return g;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  PermGroup g;
  g.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  g.elems_ = std::move(elements);
  for (std::size_t i = 0; i < g.elems_.size(); ++i) g.index_[g.elems_[i]] = i;
  g.id_ = g.index_.at(perm_identity(degree));
  return g;
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::out_of_range("permutation not in group");
  return it->second;
}

std::optional<std::size_t> PermGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::mul(std::size_t a, std::size_t b) const {
  return index_of(perm_mul(elems_[a], elems_[b]));
}

std::size_t PermGroup::inverse(std::size_t a) const {
  return index_of(perm_inverse(elems_[a]));
}

namespace {

void finish_action(FiniteGroupAction& a) {
  const PermGroup& g = a.g;
  std::size_t n = g.order();

  // left cosets gK: canonical representative = minimal element id in gK
  a.coset_of.assign(n, SIZE_MAX);
  for (std::size_t e = 0; e < n; ++e) {
    if (a.coset_of[e] != SIZE_MAX) continue;
    std::size_t cid = a.coset_rep.size();
    std::size_t mn = e;
    std::vector<std::size_t> members;
    for (std::size_t k : a.k_elems) {
      std::size_t m = g.mul(e, k);
      members.push_back(m);
      mn = std::min(mn, m);
    }
    for (std::size_t m : members) a.coset_of[m] = cid;
    a.coset_rep.push_back(mn);
  }
  a.num_cosets = a.coset_rep.size();

  // sigma on cosets
  a.sigma_coset.assign(a.num_cosets, 0);
  for (std::size_t c = 0; c < a.num_cosets; ++c)
    a.sigma_coset[c] = a.coset_of[a.sigma_elem[a.coset_rep[c]]];

  // double cosets: K-orbits on S by left multiplication
  a.dc_of_coset.assign(a.num_cosets, SIZE_MAX);
  for (std::size_t c = 0; c < a.num_cosets; ++c) {
    if (a.dc_of_coset[c] != SIZE_MAX) continue;
    std::size_t did = a.dc_rep.size();
    std::vector<std::size_t> orbit;
    std::queue<std::size_t> work;
    a.dc_of_coset[c] = did;
    work.push(c);
    orbit.push_back(c);
    while (!work.empty()) {
      std::size_t cur = work.front();
      work.pop();
      for (std::size_t k : a.k_elems) {
        std::size_t img = a.coset_of[g.mul(k, a.coset_rep[cur])];
        if (a.dc_of_coset[img] == SIZE_MAX) {
          a.dc_of_coset[img] = did;
          orbit.push_back(img);
          work.push(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    a.dc_rep.push_back(orbit.front());
    a.dc_cosets.push_back(std::move(orbit));
  }
  a.num_dcosets = a.dc_rep.size();

  a.sigma_dc.assign(a.num_dcosets, 0);
  for (std::size_t d = 0; d < a.num_dcosets; ++d)
    a.sigma_dc[d] = a.dc_of_coset[a.sigma_coset[a.dc_rep[d]]];

  for (std::size_t e = 0; e < n; ++e)
    if (a.sigma_elem[e] == e) a.g_fixed.push_back(e);
  for (std::size_t k : a.k_elems)
    if (a.sigma_elem[k] == k) a.k_fixed.push_back(k);
}

std::vector<std::size_t> subgroup_elements(const PermGroup& g,
                                           const std::vector<Perm>& k_gens) {
  // BFS inside g
  std::vector<Perm> gens = k_gens;
  PermGroup k = PermGroup::generate(g.degree(), gens);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k.order(); ++i) out.push_back(g.index_of(k.element(i)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool FiniteGroupAction::sigma_is_automorphism(std::string* why) const {
  std::size_t n = g.order();
  std::vector<bool> hit(n, false);
  for (std::size_t e = 0; e < n; ++e) {
    if (sigma_elem[e] >= n) {
      if (why) *why = "image out of range";
      return false;
    }
    hit[sigma_elem[e]] = true;
  }
  for (bool b : hit)
    if (!b) {
      if (why) *why = "not bijective";
      return false;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y : {std::size_t(0), x / 2, n - 1}) {
      if (sigma_elem[g.mul(x, y)] != g.mul(sigma_elem[x], sigma_elem[y])) {
        if (why) *why = "not multiplicative";
        return false;
      }
    }
  // order divides p
  for (std::size_t e = 0; e < n; ++e) {
    std::size_t cur = e;
    for (unsigned t = 0; t < p; ++t) cur = sigma_elem[cur];
    if (cur != e) {
      if (why) *why = "sigma^p != id";
      return false;
    }
  }
  // K stable
  for (std::size_t k : k_elems)
    if (!std::binary_search(k_elems.begin(), k_elems.end(), sigma_elem[k])) {
      if (why) *why = "K not sigma-stable";
      return false;
    }
  return true;
}

FiniteGroupAction make_action_conj(std::size_t degree,
                                   const std::vector<Perm>& g_gens,
                                   const std::vector<Perm>& k_gens,
                                   const Perm& conjugator, unsigned p) {
  FiniteGroupAction a;
  a.g = PermGroup::generate(degree, g_gens);
  a.p = p;
  a.k_elems = subgroup_elements(a.g, k_gens);
  Perm finv = perm_inverse(conjugator);
  a.sigma_elem.assign(a.g.order(), 0);
  for (std::size_t e = 0; e < a.g.order(); ++e) {
    Perm img = perm_mul(conjugator, perm_mul(a.g.element(e), finv));
    a.sigma_elem[e] = a.g.index_of(img);  // throws if sigma leaves G
  }
  std::string why;
  if (!a.sigma_is_automorphism(&why))
    throw std::invalid_argument("sigma: " + why);
  finish_action(a);
  return a;
}

FiniteGroupAction make_action_genimages(std::size_t degree,
                                        const std::vector<Perm>& g_gens,
                                        const std::vector<Perm>& k_gens,
                                        const std::vector<Perm>& gen_images,
                                        unsigned p) {
  assert(gen_images.size() == g_gens.size());
  FiniteGroupAction a;
  a.g = PermGroup::generate(degree, g_gens);
  a.p = p;
  a.k_elems = subgroup_elements(a.g, k_gens);

  // extend multiplicatively along a BFS; verified as an automorphism after
  std::size_t n = a.g.order();
  a.sigma_elem.assign(n, SIZE_MAX);
  a.sigma_elem[a.g.identity()] = a.g.identity();
  std::vector<std::size_t> gen_ids, img_ids;
  for (std::size_t i = 0; i < g_gens.size(); ++i) {
    gen_ids.push_back(a.g.index_of(g_gens[i]));
    img_ids.push_back(a.g.index_of(gen_images[i]));
  }
  std::queue<std::size_t> work;
  work.push(a.g.identity());
  while (!work.empty()) {
    std::size_t cur = work.front();
    work.pop();
    for (std::size_t i = 0; i < gen_ids.size(); ++i) {
      std::size_t nxt = a.g.mul(cur, gen_ids[i]);
      if (a.sigma_elem[nxt] != SIZE_MAX) continue;
      a.sigma_elem[nxt] = a.g.mul(a.sigma_elem[cur], img_ids[i]);
      work.push(nxt);
    }
  }
  std::string why;
  if (!a.sigma_is_automorphism(&why))
    throw std::invalid_argument("sigma (from generator images): " + why);
  finish_action(a);
  return a;
}

FiniteGroupAction fixed_point_action(const FiniteGroupAction& a) {
  std::vector<Perm> fixed_elems;
  for (std::size_t e : a.g_fixed) fixed_elems.push_back(a.g.element(e));
  FiniteGroupAction f;
  f.g = PermGroup::from_elements(a.g.degree(), std::move(fixed_elems));
  f.p = a.p;
  for (std::size_t e : a.k_fixed) f.k_elems.push_back(f.g.index_of(a.g.element(e)));
  std::sort(f.k_elems.begin(), f.k_elems.end());
  f.sigma_elem.assign(f.g.order(), 0);
  std::iota(f.sigma_elem.begin(), f.sigma_elem.end(), 0);
  finish_action(f);
  return f;
}

PlainnessReport plainness_check(const FiniteGroupAction& a) {
  PlainnessReport r;
  // gcd(|K|, p) = 1
  r.k_prime_to_p = (a.k_elems.size() % a.p) != 0;
  {
    std::size_t n = a.k_elems.size();
    r.k_prime_to_p = std::gcd(n, static_cast<std::size_t>(a.p)) == 1;
  }
  // every sigma-fixed coset needs a sigma-fixed representative
  for (std::size_t c = 0; c < a.num_cosets; ++c) {
    if (a.sigma_coset[c] != c) continue;
    ++r.num_fixed_cosets;
    bool has = false;
    std::size_t rep = a.coset_rep[c];
    for (std::size_t k : a.k_elems) {
      std::size_t e = a.g.mul(rep, k);
      if (a.sigma_elem[e] == e) {
        has = true;
        break;
      }
    }
    if (!has) r.bad_cosets.push_back(c);
  }
  r.bijective = r.bad_cosets.empty();
  // |G^sigma / K^sigma|
  if (!a.k_fixed.empty() || !a.g_fixed.empty()) {
    std::size_t kf = std::max<std::size_t>(1, a.k_fixed.size());
    r.num_fixed_quotient = a.g_fixed.size() / kf;
  }
  return r;
}

HeckeAlgebra hecke_algebra(const FiniteGroupAction& a) {
  HeckeAlgebra h;
  h.act = &a;
  h.dim = a.num_dcosets;
  h.unit = a.dc_of_coset[a.coset_of[a.g.identity()]];

  // coset representatives once
  std::vector<std::size_t> rep = a.coset_rep;
  std::vector<std::size_t> rep_inv(rep.size());
  for (std::size_t c = 0; c < rep.size(); ++c) rep_inv[c] = a.g.inverse(rep[c]);

  // (ind_a * ind_b)(K, zK) = #{yK : y in D_a, y^{-1} z in D_b}
  h.sc.assign(h.dim, std::vector<std::vector<long>>(
                         h.dim, std::vector<long>(h.dim, 0)));
  for (std::size_t da = 0; da < h.dim; ++da) {
    for (std::size_t dc = 0; dc < h.dim; ++dc) {
      std::size_t z = rep[a.dc_rep[dc]];
      for (std::size_t yc : a.dc_cosets[da]) {
        std::size_t y_inv_z = a.g.mul(rep_inv[yc], z);
        std::size_t db = a.dc_of_coset[a.coset_of[y_inv_z]];
        ++h.sc[da][db][dc];
      }
    }
  }
  h.commutative = true;
  for (std::size_t x = 0; x < h.dim && h.commutative; ++x)
    for (std::size_t y = 0; y < h.dim && h.commutative; ++y)
      for (std::size_t z = 0; z < h.dim; ++z)
        if (h.sc[x][y][z] != h.sc[y][x][z]) {
          h.commutative = false;
          break;
        }
  return h;
}

std::vector<GFElement> HeckeAlgebra::convolve(
    const std::vector<GFElement>& h1, const std::vector<GFElement>& h2) const {
  const GFField& f = h1[0].field();
  std::vector<GFElement> out(dim, GFElement::zero(f));
  for (std::size_t x = 0; x < dim; ++x) {
    if (h1[x].is_zero()) continue;
    for (std::size_t y = 0; y < dim; ++y) {
      if (h2[y].is_zero()) continue;
      GFElement c = h1[x] * h2[y];
      for (std::size_t z = 0; z < dim; ++z) {
        long n = sc[x][y][z];
        if (n)
          out[z] = out[z] + c * GFElement::from_int(f, n);
      }
    }
  }
  return out;
}

std::vector<GFMatrix> HeckeAlgebra::coset_action(const GFField& f) const {
  const FiniteGroupAction& a = *act;
  std::vector<GFMatrix> ms;
  // xK * ind_D = sum over gK in D of (x g) K
  for (std::size_t d = 0; d < dim; ++d) {
    GFMatrix m(f, a.num_cosets, a.num_cosets);
    for (std::size_t x = 0; x < a.num_cosets; ++x) {
      std::size_t xe = a.coset_rep[x];
      for (std::size_t gc : a.dc_cosets[d]) {
        std::size_t tgt = a.coset_of[a.g.mul(xe, a.coset_rep[gc])];
        m(tgt, x) = m(tgt, x) + GFElement::one(f);
      }
    }
    ms.push_back(std::move(m));
  }
  return ms;
}

SigmaRing HeckeAlgebra::as_sigma_ring(const GFField& f) const {
  SigmaRing r;
  r.k = f;
  r.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    GFMatrix m(f, dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t z = 0; z < dim; ++z)
        m(z, j) = GFElement::from_int(f, sc[i][j][z]);
    r.mult.push_back(std::move(m));
  }
  r.unit.assign(dim, GFElement::zero(f));
  r.unit[unit] = GFElement::one(f);
  GFMatrix s(f, dim, dim);
  for (std::size_t dcs = 0; dcs < dim; ++dcs)
    s(act->sigma_dc[dcs], dcs) = GFElement::one(f);
  r.sigma = s;
  return r;
}

namespace {

// double coset of the fixed action af containing the G^sigma element e
// (given as an element id in a.g); maps into a's coset structures for lookups
std::size_t g_dc_of_fixed_coset(const FiniteGroupAction& a,
                                const FiniteGroupAction& af, std::size_t cf) {
  std::size_t e = af.g.index_of(af.g.element(af.coset_rep[cf]));
  // element of G^sigma as element of G
  std::size_t eg = a.g.index_of(af.g.element(af.coset_rep[cf]));
  (void)e;
  return a.dc_of_coset[a.coset_of[eg]];
}

}  // namespace

std::vector<GFElement> brauer(const FiniteGroupAction& a, const HeckeAlgebra& ha,
                              const FiniteGroupAction& af, const HeckeAlgebra& hf,
                              const std::vector<GFElement>& h) {
  // sigma-invariance of h
  for (std::size_t d = 0; d < ha.dim; ++d)
    if (!(h[d] == h[a.sigma_dc[d]]))
      throw std::invalid_argument("brauer: element is not sigma-invariant");
  const GFField& f = h[0].field();
  std::vector<GFElement> out(hf.dim, GFElement::zero(f));
  for (std::size_t df = 0; df < hf.dim; ++df)
    out[df] = h[g_dc_of_fixed_coset(a, af, af.dc_rep[df])];
  return out;
}

std::vector<GFElement> normalized_brauer_basis(const FiniteGroupAction& a,
                                               const HeckeAlgebra& ha,
                                               const FiniteGroupAction& af,
                                               const HeckeAlgebra& hf,
                                               const GFField& f, std::size_t d) {
  std::vector<GFElement> h(ha.dim, GFElement::zero(f));
  h[d] = GFElement::one(f);
  std::vector<GFElement> pw = h;
  for (unsigned t = 1; t < a.p; ++t) pw = ha.convolve(pw, h);
  std::vector<GFElement> out(hf.dim, GFElement::zero(f));
  for (std::size_t df = 0; df < hf.dim; ++df)
    out[df] = gf_pth_root(pw[g_dc_of_fixed_coset(a, af, af.dc_rep[df])]);
  return out;
}

std::vector<GFElement> normalized_brauer(const FiniteGroupAction& a,
                                         const HeckeAlgebra& ha,
                                         const FiniteGroupAction& af,
                                         const HeckeAlgebra& hf,
                                         const std::vector<GFElement>& h) {
  if (!ha.commutative || !hf.commutative)
    throw std::invalid_argument(
        "normalized Brauer homomorphism requires commutative Hecke algebras");
  const GFField& f = h[0].field();
  std::vector<GFElement> out(hf.dim, GFElement::zero(f));
  for (std::size_t d = 0; d < ha.dim; ++d) {
    if (h[d].is_zero()) continue;
    auto basis_img = normalized_brauer_basis(a, ha, af, hf, f, d);
    for (std::size_t j = 0; j < hf.dim; ++j)
      out[j] = out[j] + h[d] * basis_img[j];
  }
  return out;
}

namespace {

// minimal extension degree m <= max_degree such that all the given F_p
// integer matrices have split characteristic polynomials over F_{p^m}
std::optional<unsigned> splitting_degree(unsigned p,
                                         const std::vector<std::vector<long>>& mats,
                                         std::size_t n, unsigned max_degree) {
  for (unsigned m = 1; m <= max_degree; ++m) {
    GFField f = make_field(p, m);
    if (f->q > (1u << 22)) return std::nullopt;
    bool all = true;
    for (const auto& e : mats) {
      GFMatrix g = GFMatrix::from_int(f, n, n, e);
      if (!poly_splits(char_poly(g))) {
        all = false;
        break;
      }
    }
    if (all) return m;
  }
  return std::nullopt;
}

std::vector<std::vector<long>> action_matrices_int(const FiniteGroupAction& a,
                                                   const HeckeAlgebra& ha) {
  std::vector<std::vector<long>> out;
  for (std::size_t d = 0; d < ha.dim; ++d) {
    std::vector<long> m(a.num_cosets * a.num_cosets, 0);
    for (std::size_t x = 0; x < a.num_cosets; ++x) {
      std::size_t xe = a.coset_rep[x];
      for (std::size_t gc : a.dc_cosets[d])
        ++m[a.coset_of[a.g.mul(xe, a.coset_rep[gc])] * a.num_cosets + x];
    }
    out.push_back(std::move(m));
  }
  return out;
}

struct JointEigen {
  std::vector<std::vector<GFElement>> characters;
  bool ok = true;
};

// honest simultaneous eigenspaces of the commuting family on k^n
JointEigen joint_eigencharacters(const GFField& f,
                                 const std::vector<GFMatrix>& ops) {
  JointEigen out;
  std::size_t n = ops.empty() ? 0 : ops[0].rows();
  struct Leaf {
    GFMatrix basis;
    std::vector<GFElement> values;
  };
  std::vector<Leaf> leaves{{GFMatrix::identity(f, n), {}}};
  for (const auto& op : ops) {
    std::vector<Leaf> next;
    for (auto& leaf : leaves) {
      std::size_t d = leaf.basis.cols();
      GFMatrix mb = op * leaf.basis;
      GFMatrix r(f, d, d);
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<GFElement> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = mb(i, j);
        auto x = solve(leaf.basis, c);
        if (!x) {
          out.ok = false;
          return out;
        }
        for (std::size_t i = 0; i < d; ++i) r(i, j) = (*x)[i];
      }
      GFPoly cp = char_poly(r);
      auto roots = poly_roots(cp);
      std::vector<GFElement> distinct;
      for (auto& rt : roots) {
        bool seen = false;
        for (auto& o : distinct) seen = seen || o == rt;
        if (!seen) distinct.push_back(rt);
      }
      for (auto& lambda : distinct) {
        GFMatrix eig = kernel(r - GFMatrix::identity(f, d) * lambda);
        if (eig.cols() == 0) continue;
        Leaf nl;
        nl.basis = leaf.basis * eig;
        nl.values = leaf.values;
        nl.values.push_back(lambda);
        next.push_back(std::move(nl));
      }
    }
    leaves = std::move(next);
  }
  for (auto& leaf : leaves) out.characters.push_back(leaf.values);
  return out;
}

}  // namespace

std::optional<EigencharacterReport> eigencharacters(const FiniteGroupAction& a,
                                                    const HeckeAlgebra& ha,
                                                    unsigned max_degree) {
  auto mats = action_matrices_int(a, ha);
  auto m = splitting_degree(a.p, mats, a.num_cosets, max_degree);
  if (!m) return std::nullopt;
  GFField f = make_field(a.p, *m);
  std::vector<GFMatrix> ops;
  for (auto& e : mats)
    ops.push_back(GFMatrix::from_int(f, a.num_cosets, a.num_cosets, e));
  auto je = joint_eigencharacters(f, ops);
  if (!je.ok) return std::nullopt;
  EigencharacterReport r;
  r.field = f;
  r.characters = je.characters;
  return r;
}

TransferReport eigenvalue_transfer_check(const FiniteGroupAction& a) {
  TransferReport rep;
  auto pl = plainness_check(a);
  if (!pl.plain()) {
    rep.detail = "not sigma-plain";
    return rep;
  }
  HeckeAlgebra ha = hecke_algebra(a);
  FiniteGroupAction af = fixed_point_action(a);
  HeckeAlgebra hf = hecke_algebra(af);
  if (!ha.commutative || !hf.commutative) {
    rep.detail = "Hecke algebras not commutative";
    return rep;
  }

  // one field that splits everything on both sides
  auto mats_g = action_matrices_int(a, ha);
  auto mats_h = action_matrices_int(af, hf);
  unsigned m = 1;
  {
    auto mg = splitting_degree(a.p, mats_g, a.num_cosets, 12);
    auto mh = splitting_degree(a.p, mats_h, af.num_cosets, 12);
    if (!mg || !mh) {
      rep.detail = "no splitting field of degree <= 12";
      return rep;
    }
    m = std::lcm(*mg, *mh);
  }
  GFField f = make_field(a.p, m);
  rep.field_degree = m;

  std::vector<GFMatrix> ops_h;
  for (auto& e : mats_h)
    ops_h.push_back(GFMatrix::from_int(f, af.num_cosets, af.num_cosets, e));
  auto je = joint_eigencharacters(f, ops_h);
  if (!je.ok) {
    rep.detail = "eigen decomposition failed";
    return rep;
  }
  rep.num_characters = je.characters.size();

  std::vector<GFMatrix> ops_g;
  for (auto& e : mats_g)
    ops_g.push_back(GFMatrix::from_int(f, a.num_cosets, a.num_cosets, e));
  // br on each G-basis element
  std::vector<std::vector<GFElement>> br_basis;
  for (std::size_t d = 0; d < ha.dim; ++d)
    br_basis.push_back(normalized_brauer_basis(a, ha, af, hf, f, d));

  std::ostringstream detail;
  rep.ok = true;
  for (auto& chi : je.characters) {
    // chi o br on each basis element of H(G,K)
    std::vector<GFElement> target(ha.dim, GFElement::zero(f));
    for (std::size_t d = 0; d < ha.dim; ++d) {
      GFElement v = GFElement::zero(f);
      for (std::size_t j = 0; j < hf.dim; ++j)
        v = v + br_basis[d][j] * chi[j];
      target[d] = v;
    }
    // joint eigenspace of ops_g with those eigenvalues
    GFMatrix basis = GFMatrix::identity(f, a.num_cosets);
    for (std::size_t d = 0; d < ha.dim && basis.cols() > 0; ++d) {
      GFMatrix shifted = ops_g[d] * basis - basis * target[d];
      GFMatrix kk = kernel(shifted);
      basis = basis * kk;
    }
    if (basis.cols() > 0) {
      ++rep.matched;
    } else {
      rep.ok = false;
      detail << "unmatched eigencharacter;";
    }
  }
  if (rep.ok)
    detail << "all " << rep.num_characters << " eigencharacters matched";
  rep.detail = detail.str();
  return rep;
}

BrauerCompatReport brauercompat_check(const FiniteGroupAction& a,
                                      const GFField& f,
                                      const GFMatrix& submodule) {
  BrauerCompatReport rep;
  auto pl = plainness_check(a);
  if (!pl.plain()) {
    rep.detail = "not sigma-plain";
    return rep;
  }
  HeckeAlgebra ha = hecke_algebra(a);
  FiniteGroupAction af = fixed_point_action(a);
  HeckeAlgebra hf = hecke_algebra(af);
  std::size_t n = a.num_cosets;

  // left action of a group element on k[S]
  auto left_action = [&](std::size_t e) {
    GFMatrix m(f, n, n);
    for (std::size_t c = 0; c < n; ++c)
      m(a.coset_of[a.g.mul(e, a.coset_rep[c])], c) = GFElement::one(f);
    return m;
  };
  GFMatrix sig(f, n, n);
  for (std::size_t c = 0; c < n; ++c)
    sig(a.sigma_coset[c], c) = GFElement::one(f);

  // Pi = span(submodule) inside k[S]; empty means all of k[S]
  GFMatrix w = submodule.cols() ? submodule : GFMatrix::identity(f, n);
  std::size_t dpi = w.cols();

  // restrict an n x n operator to Pi coordinates; nullopt if Pi not stable
  auto restrict_to_pi = [&](const GFMatrix& m) -> std::optional<GFMatrix> {
    GFMatrix mw = m * w;
    GFMatrix r(f, dpi, dpi);
    for (std::size_t j = 0; j < dpi; ++j) {
      std::vector<GFElement> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = mw(i, j);
      auto x = solve(w, c);
      if (!x) return std::nullopt;
      for (std::size_t i = 0; i < dpi; ++i) r(i, j) = (*x)[i];
    }
    return r;
  };

  auto sig_pi = restrict_to_pi(sig);
  if (!sig_pi) {
    rep.detail = "Pi not sigma-stable";
    return rep;
  }
  SigmaModule mpi{f, *sig_pi};
  auto tpi = tate_cohomology(mpi);

  // Pi^K: K-invariant vectors of Pi, in Pi coordinates
  GFMatrix stack(f, dpi * a.k_elems.size(), dpi);
  for (std::size_t t = 0; t < a.k_elems.size(); ++t) {
    auto lk = restrict_to_pi(left_action(a.k_elems[t]));
    if (!lk) {
      rep.detail = "Pi not G-stable";
      return rep;
    }
    GFMatrix diff = *lk - GFMatrix::identity(f, dpi);
    for (std::size_t i = 0; i < dpi; ++i)
      for (std::size_t j = 0; j < dpi; ++j) stack(t * dpi + i, j) = diff(i, j);
  }
  GFMatrix pik = kernel(stack);  // columns: Pi^K in Pi coordinates
  std::size_t dk = pik.cols();

  // sigma on Pi^K
  GFMatrix sp = (*sig_pi) * pik;
  GFMatrix sig_pik(f, dk, dk);
  for (std::size_t j = 0; j < dk; ++j) {
    std::vector<GFElement> c(dpi);
    for (std::size_t i = 0; i < dpi; ++i) c[i] = sp(i, j);
    auto x = solve(pik, c);
    if (!x) {
      rep.detail = "Pi^K not sigma-stable";
      return rep;
    }
    for (std::size_t i = 0; i < dk; ++i) sig_pik(i, j) = (*x)[i];
  }
  SigmaModule mk{f, sig_pik};
  auto tk = tate_cohomology(mk);

  // v * h = sum over gK in D of g.v, in Pi coordinates
  auto hecke_op_pi = [&](const std::vector<std::size_t>& dcs) {
    GFMatrix m(f, n, n);
    for (std::size_t d : dcs)
      for (std::size_t gc : a.dc_cosets[d])
        m = m + left_action(a.coset_rep[gc]);
    return restrict_to_pi(m);
  };
  // v * Br(h): coefficients over fixed double cosets, acting through G^sigma
  auto brauer_op_pi = [&](const std::vector<GFElement>& brh)
      -> std::optional<GFMatrix> {
    GFMatrix m(f, n, n);
    for (std::size_t df = 0; df < hf.dim; ++df) {
      if (brh[df].is_zero()) continue;
      GFMatrix part(f, n, n);
      for (std::size_t gcf : af.dc_cosets[df]) {
        std::size_t e = a.g.index_of(af.g.element(af.coset_rep[gcf]));
        part = part + left_action(e);
      }
      m = m + part * brh[df];
    }
    return restrict_to_pi(m);
  };

  std::vector<bool> seen_dc(ha.dim, false);
  for (std::size_t d0 = 0; d0 < ha.dim; ++d0) {
    if (seen_dc[d0]) continue;
    std::vector<std::size_t> orbit;
    std::size_t cur = d0;
    do {
      orbit.push_back(cur);
      seen_dc[cur] = true;
      cur = a.sigma_dc[cur];
    } while (cur != d0);

    std::vector<GFElement> hvec(ha.dim, GFElement::zero(f));
    for (std::size_t d : orbit) hvec[d] = GFElement::one(f);
    auto brh = brauer(a, ha, af, hf, hvec);

    auto lhs_op = hecke_op_pi(orbit);
    auto rhs_op = brauer_op_pi(brh);
    if (!lhs_op || !rhs_op) {
      rep.detail = "Pi not stable under the Hecke action";
      return rep;
    }

    for (int deg = 0; deg < 2; ++deg) {
      const TateGroup& tg = deg == 0 ? tk.t0 : tk.t1;
      const TateGroup& tp = deg == 0 ? tpi.t0 : tpi.t1;
      for (std::size_t j = 0; j < tg.dim(); ++j) {
        // representative of the T(Pi^K) class, in Pi coordinates
        std::vector<GFElement> vk(dk);
        for (std::size_t i = 0; i < dk; ++i) vk[i] = tg.reps(i, j);
        auto v = pik.apply(vk);
        auto lhs = tp.reduce(lhs_op->apply(v));
        auto rhs = tp.reduce(rhs_op->apply(v));
        for (std::size_t i = 0; i < tp.dim(); ++i)
          if (!(lhs[i] == rhs[i])) {
            rep.detail = "diagram does not commute";
            return rep;
          }
      }
    }
  }
  rep.ok = true;
  rep.detail = "diagram commutes on all sigma-invariant basis sums";
  return rep;
}


// --- ready-made models -------------------------------------------------------

FiniteGroupAction gl2_f8_action(bool borel_level) {
  GFField f8 = make_field(2, 3);
  // points: nonzero column vectors over F_8, id = 8 a + b - 1
  auto pt = [&](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint16_t>(8 * a + b - 1);
  };
  auto mat_perm = [&](std::uint64_t p00, std::uint64_t p01, std::uint64_t p10,
                      std::uint64_t p11) {
    Perm perm(63);
    GFElement m00 = GFElement::from_index(f8, p00),
              m01 = GFElement::from_index(f8, p01),
              m10 = GFElement::from_index(f8, p10),
              m11 = GFElement::from_index(f8, p11);
    for (std::uint64_t a = 0; a < 8; ++a)
      for (std::uint64_t b = 0; b < 8; ++b) {
        if (a == 0 && b == 0) continue;
        GFElement va = GFElement::from_index(f8, a),
                  vb = GFElement::from_index(f8, b);
        GFElement wa = m00 * va + m01 * vb, wb = m10 * va + m11 * vb;
        perm[pt(a, b)] = pt(wa.index(), wb.index());
      }
    return perm;
  };
  std::uint64_t gamma = 2;  // the class of x generates F_8^* (order 7)
  std::vector<Perm> gens{mat_perm(gamma, 0, 0, 1), mat_perm(1, 1, 0, 1),
                         mat_perm(0, 1, 1, 0)};
  std::vector<Perm> kgens{mat_perm(gamma, 0, 0, 1), mat_perm(1, 0, 0, gamma)};
  if (borel_level) kgens.push_back(mat_perm(1, 1, 0, 1));
  // entrywise Frobenius = conjugation by the squaring permutation of points
  Perm frob(63);
  for (std::uint64_t a = 0; a < 8; ++a)
    for (std::uint64_t b = 0; b < 8; ++b) {
      if (a == 0 && b == 0) continue;
      GFElement va = GFElement::from_index(f8, a),
                vb = GFElement::from_index(f8, b);
      frob[pt(a, b)] = pt((va * va).index(), (vb * vb).index());
    }
  return make_action_conj(63, gens, kgens, frob, 3);
}

FiniteGroupAction s3_wreath_action(unsigned p) {
  std::size_t deg = 3 * p;
  std::vector<Perm> gens, kgens;
  for (unsigned b = 0; b < p; ++b) {
    Perm t = perm_identity(deg);
    t[3 * b] = static_cast<std::uint16_t>(3 * b + 1);
    t[3 * b + 1] = static_cast<std::uint16_t>(3 * b);
    gens.push_back(t);
    kgens.push_back(t);
    Perm c = perm_identity(deg);
    c[3 * b] = static_cast<std::uint16_t>(3 * b + 1);
    c[3 * b + 1] = static_cast<std::uint16_t>(3 * b + 2);
    c[3 * b + 2] = static_cast<std::uint16_t>(3 * b);
    gens.push_back(c);
  }
  Perm shift(deg);
  for (std::size_t i = 0; i < deg; ++i)
    shift[i] = static_cast<std::uint16_t>((i + 3) % deg);
  return make_action_conj(deg, gens, kgens, shift, p);
}

FiniteGroupAction s3_trivial_action() {
  Perm t = parse_cycles("(0 1)", 3);
  Perm c = parse_cycles("(0 1 2)", 3);
  return make_action_conj(3, {t, c}, {t}, perm_identity(3), 3);
}

FiniteGroupAction shear_action(unsigned p) {
  std::size_t deg = static_cast<std::size_t>(p) * p;
  auto pt = [&](unsigned x, unsigned y) {
    return static_cast<std::uint16_t>(x * p + y);
  };
  Perm tx(deg), ty(deg), shear(deg);
  for (unsigned x = 0; x < p; ++x)
    for (unsigned y = 0; y < p; ++y) {
      tx[pt(x, y)] = pt((x + 1) % p, y);
      ty[pt(x, y)] = pt(x, (y + 1) % p);
      shear[pt(x, y)] = pt(x, (x + y) % p);
    }
  return make_action_conj(deg, {tx, ty}, {ty}, shear, p);
}

}  // namespace rs
