#include "rootsmith/tate.hpp"

#include <cassert>

namespace rs {

GFMatrix SigmaModule::one_minus_sigma() const {
  return GFMatrix::identity(k, dim()) - sigma;
}

GFMatrix SigmaModule::norm() const {
  GFMatrix n = GFMatrix::identity(k, dim());
  GFMatrix pw = sigma;
  for (unsigned i = 1; i < k->p; ++i) {
    n = n + pw;
    pw = pw * sigma;
  }
  return n;
}

bool SigmaModule::validate(std::string* why) const {
  if (sigma.rows() != sigma.cols()) {
    if (why) *why = "sigma not square";
    return false;
  }
  if (!sigma.pow(k->p).is_identity()) {
    if (why) *why = "sigma^p != 1";
    return false;
  }
  return true;
}

SigmaModule make_sigma_module(const GFField& k, GFMatrix sigma) {
  SigmaModule m{k, std::move(sigma)};
  std::string why;
  if (!m.validate(&why)) throw std::invalid_argument("sigma module: " + why);
  return m;
}

SigmaModule permutation_module(const GFField& k,
                               const std::vector<std::size_t>& perm) {
  std::size_t n = perm.size();
  GFMatrix s(k, n, n);
  for (std::size_t j = 0; j < n; ++j) s(perm[j], j) = GFElement::one(k);
  return make_sigma_module(k, s);
}

SigmaModule induced_module(const SigmaModule& m) {
  unsigned p = m.k->p;
  std::size_t n = m.dim();
  GFMatrix s(m.k, n * p, n * p);
  // sigma(v (x) e_i) = sigma(v) (x) e_{i+1}
  for (unsigned blk = 0; blk < p; ++blk) {
    unsigned dst = (blk + 1) % p;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s(dst * n + i, blk * n + j) = m.sigma(i, j);
  }
  return make_sigma_module(m.k, s);
}

std::vector<GFElement> TateGroup::reduce(const std::vector<GFElement>& v) const {
  // solve [b | reps] x = v, return the reps block of x
  const GFField& k = reps.field();
  std::size_t n = v.size();
  GFMatrix m(k, n, b.cols() + reps.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = b(i, j);
  for (std::size_t j = 0; j < reps.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, b.cols() + j) = reps(i, j);
  auto x = solve(m, v);
  assert(x && "element not in the cycle space");
  return std::vector<GFElement>(x->begin() + b.cols(), x->end());
}

namespace {

TateGroup make_tate_group(const GFMatrix& num, const GFMatrix& den) {
  // num: map whose kernel is the cycle space; den: map whose image bounds
  TateGroup t;
  t.z = kernel(num);
  t.b = column_space(den);
  auto chosen = quotient_basis_columns(t.b, t.z);
  TateGroup out;
  out.z = t.z;
  out.b = t.b;
  out.reps = GFMatrix(num.field(), t.z.rows(), chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c)
    for (std::size_t i = 0; i < t.z.rows(); ++i)
      out.reps(i, c) = t.z(i, chosen[c]);
  return out;
}

}  // namespace

TateCohomology tate_cohomology(const SigmaModule& m) {
  std::string why;
  if (!m.validate(&why)) throw std::invalid_argument("tate_cohomology: " + why);
  GFMatrix oms = m.one_minus_sigma();
  GFMatrix nrm = m.norm();
  TateCohomology t;
  t.t0 = make_tate_group(oms, nrm);
  t.t1 = make_tate_group(nrm, oms);
  return t;
}

// --- rings -----------------------------------------------------------------

std::vector<GFElement> SigmaRing::multiply(const std::vector<GFElement>& u,
                                           const std::vector<GFElement>& v) const {
  std::vector<GFElement> out(dim, GFElement::zero(k));
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i].is_zero()) continue;
    auto mv = mult[i].apply(v);
    for (std::size_t j = 0; j < dim; ++j) out[j] = out[j] + u[i] * mv[j];
  }
  return out;
}

bool SigmaRing::validate(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  auto basis = [&](std::size_t i) {
    std::vector<GFElement> e(dim, GFElement::zero(k));
    e[i] = GFElement::one(k);
    return e;
  };
  auto eq = [&](const std::vector<GFElement>& a, const std::vector<GFElement>& b) {
    for (std::size_t i = 0; i < dim; ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  };
  for (std::size_t i = 0; i < dim; ++i) {
    if (!eq(multiply(unit, basis(i)), basis(i))) return fail("unit fails");
    for (std::size_t j = 0; j < dim; ++j) {
      if (!eq(multiply(basis(i), basis(j)), multiply(basis(j), basis(i))))
        return fail("not commutative");
      for (std::size_t l = 0; l < dim; ++l) {
        auto ab_c = multiply(multiply(basis(i), basis(j)), basis(l));
        auto a_bc = multiply(basis(i), multiply(basis(j), basis(l)));
        if (!eq(ab_c, a_bc)) return fail("not associative");
      }
      // sigma(e_i e_j) = sigma(e_i) sigma(e_j)
      auto lhs = sigma.apply(multiply(basis(i), basis(j)));
      auto rhs = multiply(sigma.apply(basis(i)), sigma.apply(basis(j)));
      if (!eq(lhs, rhs)) return fail("sigma not a ring map");
    }
  }
  if (!sigma.pow(k->p).is_identity()) return fail("sigma^p != 1");
  return true;
}

SigmaRing function_ring(const GFField& k, const std::vector<std::size_t>& perm) {
  std::size_t n = perm.size();
  SigmaRing r;
  r.k = k;
  r.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    GFMatrix m(k, n, n);
    m(i, i) = GFElement::one(k);  // delta_i * delta_j = [i==j] delta_i
    r.mult.push_back(m);
  }
  r.unit.assign(n, GFElement::one(k));
  // sigma on functions: (sigma f)(x) = f(sigma^{-1} x); on delta functions
  // delta_i -> delta_{perm(i)}
  GFMatrix s(k, n, n);
  for (std::size_t j = 0; j < n; ++j) s(perm[j], j) = GFElement::one(k);
  r.sigma = s;
  return r;
}

SigmaRing free_cycle_ring(const GFField& k) {
  std::vector<std::size_t> cyc(k->p);
  for (unsigned i = 0; i < k->p; ++i) cyc[i] = (i + 1) % k->p;
  return function_ring(k, cyc);
}

std::vector<GFElement> TateRing::project(const std::vector<GFElement>& v) const {
  const GFField& k = reps.field();
  std::size_t n = v.size();
  GFMatrix m(k, n, na_basis.cols() + reps.cols());
  for (std::size_t j = 0; j < na_basis.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = na_basis(i, j);
  for (std::size_t j = 0; j < reps.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, na_basis.cols() + j) = reps(i, j);
  auto x = solve(m, v);
  assert(x && "element not in A^sigma");
  return std::vector<GFElement>(x->begin() + na_basis.cols(), x->end());
}

TateRing tate_ring(const SigmaRing& a) {
  SigmaModule mod = a.as_module();
  GFMatrix asig = kernel(mod.one_minus_sigma());
  GFMatrix na = column_space(mod.norm());

  // N A is an ideal of A^sigma: u * v in span(na) for u in A^sigma, v in N A
  auto contains = [&](const GFMatrix& space, const std::vector<GFElement>& v) {
    GFMatrix m(a.k, v.size(), space.cols());
    for (std::size_t j = 0; j < space.cols(); ++j)
      for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = space(i, j);
    return solve(m, v).has_value();
  };
  for (std::size_t ju = 0; ju < asig.cols(); ++ju)
    for (std::size_t jv = 0; jv < na.cols(); ++jv) {
      std::vector<GFElement> u(a.dim, GFElement::zero(a.k)),
          v(a.dim, GFElement::zero(a.k));
      for (std::size_t i = 0; i < a.dim; ++i) {
        u[i] = asig(i, ju);
        v[i] = na(i, jv);
      }
      if (!contains(na, a.multiply(u, v)))
        throw std::logic_error("norm image is not an ideal of the invariants");
    }

  auto chosen = quotient_basis_columns(na, asig);
  TateRing t;
  t.asigma_basis = asig;
  t.na_basis = na;
  t.reps = GFMatrix(a.k, a.dim, chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c)
    for (std::size_t i = 0; i < a.dim; ++i)
      t.reps(i, c) = asig(i, chosen[c]);

  std::size_t q = chosen.size();
  t.ring.k = a.k;
  t.ring.dim = q;
  t.ring.sigma = GFMatrix::identity(a.k, q);
  // induced multiplication on representatives
  std::vector<std::vector<std::vector<GFElement>>> prod(q);
  for (std::size_t i = 0; i < q; ++i) {
    prod[i].resize(q);
    std::vector<GFElement> u(a.dim, GFElement::zero(a.k));
    for (std::size_t r = 0; r < a.dim; ++r) u[r] = t.reps(r, i);
    for (std::size_t j = 0; j < q; ++j) {
      std::vector<GFElement> v(a.dim, GFElement::zero(a.k));
      for (std::size_t r = 0; r < a.dim; ++r) v[r] = t.reps(r, j);
      prod[i][j] = t.project(a.multiply(u, v));
    }
  }
  for (std::size_t i = 0; i < q; ++i) {
    GFMatrix m(a.k, q, q);
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t r = 0; r < q; ++r) m(r, j) = prod[i][j][r];
    t.ring.mult.push_back(m);
  }
  if (q > 0) {
    t.ring.unit = t.project(a.unit);
  }
  return t;
}

std::optional<std::vector<Character>> characters_of(const SigmaRing& a) {
  const GFField& k = a.k;
  std::size_t n = a.dim;
  std::vector<Character> out;
  if (n == 0) return out;

  struct Leaf {
    GFMatrix basis;  // columns: basis of the joint eigenspace so far
    Character values;
  };
  std::vector<Leaf> leaves{{GFMatrix::identity(k, n), {}}};
  for (std::size_t op = 0; op < n; ++op) {
    std::vector<Leaf> next;
    for (auto& leaf : leaves) {
      std::size_t d = leaf.basis.cols();
      if (d == 0) continue;
      // restriction R of mult[op] to span(basis): mult*basis = basis*R
      GFMatrix mb = a.mult[op] * leaf.basis;
      GFMatrix r(k, d, d);
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<GFElement> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = mb(i, j);
        auto x = solve(leaf.basis, col);
        if (!x) return std::nullopt;  // subspace not invariant: bad field split earlier
        for (std::size_t i = 0; i < d; ++i) r(i, j) = (*x)[i];
      }
      GFPoly cp = char_poly(r);
      if (!poly_splits(cp)) return std::nullopt;
      auto roots = poly_roots(cp);
      std::vector<GFElement> distinct;
      for (auto& rt : roots) {
        bool seen = false;
        for (auto& d2 : distinct) seen = seen || d2 == rt;
        if (!seen) distinct.push_back(rt);
      }
      for (auto& lambda : distinct) {
        // generalized eigenspace of R at lambda
        GFMatrix shifted = r - GFMatrix::identity(k, d) * lambda;
        GFMatrix gen = kernel(shifted.pow(static_cast<long>(d)));
        if (gen.cols() == 0) continue;
        Leaf nl;
        nl.basis = leaf.basis * gen;
        nl.values = leaf.values;
        nl.values.push_back(lambda);
        next.push_back(std::move(nl));
      }
    }
    leaves = std::move(next);
  }
  for (auto& leaf : leaves) {
    if (is_character(a, leaf.values)) out.push_back(leaf.values);
  }
  return out;
}

bool is_character(const SigmaRing& a, const Character& chi) {
  if (chi.size() != a.dim) return false;
  const GFField& k = a.k;
  // unital
  GFElement u = GFElement::zero(k);
  for (std::size_t i = 0; i < a.dim; ++i) u = u + a.unit[i] * chi[i];
  if (!(u == GFElement::one(k))) return false;
  // multiplicative on basis pairs
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      std::vector<GFElement> ei(a.dim, GFElement::zero(k)),
          ej(a.dim, GFElement::zero(k));
      ei[i] = GFElement::one(k);
      ej[j] = GFElement::one(k);
      auto p = a.multiply(ei, ej);
      GFElement val = GFElement::zero(k);
      for (std::size_t l = 0; l < a.dim; ++l) val = val + p[l] * chi[l];
      if (!(val == chi[i] * chi[j])) return false;
    }
  return true;
}

bool is_sigma_fixed_character(const SigmaRing& a, const Character& chi) {
  // chi o sigma = chi
  for (std::size_t j = 0; j < a.dim; ++j) {
    std::vector<GFElement> ej(a.dim, GFElement::zero(a.k));
    ej[j] = GFElement::one(a.k);
    auto sj = a.sigma.apply(ej);
    GFElement val = GFElement::zero(a.k);
    for (std::size_t l = 0; l < a.dim; ++l) val = val + sj[l] * chi[l];
    if (!(val == chi[j])) return false;
  }
  return true;
}

Character extend_character(const SigmaRing& a, const TateRing& bar,
                           const Character& psi) {
  assert(psi.size() == bar.ring.dim);
  Character chi(a.dim, GFElement::zero(a.k));
  for (std::size_t j = 0; j < a.dim; ++j) {
    std::vector<GFElement> ej(a.dim, GFElement::zero(a.k));
    ej[j] = GFElement::one(a.k);
    // b = e_j e_j^sigma ... e_j^{sigma^{p-1}}
    std::vector<GFElement> b = ej, cur = ej;
    for (unsigned t = 1; t < a.k->p; ++t) {
      cur = a.sigma.apply(cur);
      b = a.multiply(b, cur);
    }
    auto coords = bar.project(b);
    GFElement val = GFElement::zero(a.k);
    for (std::size_t l = 0; l < coords.size(); ++l)
      val = val + coords[l] * psi[l];
    chi[j] = gf_pth_root(val);
  }
  return chi;
}

}  // namespace rs
