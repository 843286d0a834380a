#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rootsmith/tate.hpp"

using namespace rs;

namespace {

std::vector<GFElement> col(const GFMatrix& m, std::size_t j) {
  std::vector<GFElement> v(m.rows(), GFElement::zero(m.field()));
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

// random sigma of order dividing p: conjugated block sum of cycles and fixed
// points
SigmaModule random_sigma_module(const GFField& k, std::size_t dim,
                                std::mt19937_64& rng) {
  unsigned p = k->p;
  GFMatrix s0(k, dim, dim);
  std::size_t i = 0;
  std::uniform_int_distribution<int> coin(0, 1);
  while (i < dim) {
    if (i + p <= dim && coin(rng)) {
      for (unsigned t = 0; t < p; ++t)
        s0(i + (t + 1) % p, i + t) = GFElement::one(k);
      i += p;
    } else {
      s0(i, i) = GFElement::one(k);
      ++i;
    }
  }
  // random conjugation
  std::uniform_int_distribution<std::uint64_t> dist(0, k->q - 1);
  while (true) {
    GFMatrix q(k, dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        q(a, b) = GFElement::from_index(k, dist(rng));
    auto qi = inverse(q);
    if (!qi) continue;
    return make_sigma_module(k, q * s0 * (*qi));
  }
}

struct SES {
  SigmaModule sub, mid, quot;
  GFMatrix incl;  // mid_dim x sub_dim
  GFMatrix proj;  // quot_dim x mid_dim
};

// random sigma-stable subspace: span of sigma-orbits of random vectors
SES random_ses(const SigmaModule& mid, std::mt19937_64& rng) {
  const GFField& k = mid.k;
  std::size_t n = mid.dim();
  std::uniform_int_distribution<std::uint64_t> dist(0, k->q - 1);
  std::uniform_int_distribution<std::size_t> nv(1, std::max<std::size_t>(1, n / 2));
  std::size_t seeds = nv(rng);
  GFMatrix cand(k, n, seeds * k->p);
  for (std::size_t s = 0; s < seeds; ++s) {
    std::vector<GFElement> v(n, GFElement::zero(k));
    for (std::size_t i = 0; i < n; ++i) v[i] = GFElement::from_index(k, dist(rng));
    for (unsigned t = 0; t < k->p; ++t) {
      for (std::size_t i = 0; i < n; ++i) cand(i, s * k->p + t) = v[i];
      v = mid.sigma.apply(v);
    }
  }
  GFMatrix w = column_space(cand);

  SES out;
  out.mid = mid;
  out.incl = w;
  // sub sigma: sigma . w = w . s_sub
  GFMatrix sw = mid.sigma * w;
  GFMatrix ssub(k, w.cols(), w.cols());
  for (std::size_t j = 0; j < w.cols(); ++j) {
    auto x = solve(w, col(sw, j));
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < w.cols(); ++i) ssub(i, j) = (*x)[i];
  }
  out.sub = make_sigma_module(k, ssub);

  // quotient: representatives completing w to the full space
  auto chosen = quotient_basis_columns(w, GFMatrix::identity(k, n));
  GFMatrix reps(k, n, chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c)
    reps(chosen[c], c) = GFElement::one(k);
  // projection: x -> reps-coordinates of x modulo span(w)
  std::size_t q = chosen.size();
  GFMatrix pr(k, q, n);
  GFMatrix glue(k, n, w.cols() + q);
  for (std::size_t j = 0; j < w.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) glue(i, j) = w(i, j);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t i = 0; i < n; ++i) glue(i, w.cols() + j) = reps(i, j);
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<GFElement> b(n, GFElement::zero(k));
    b[e] = GFElement::one(k);
    auto x = solve(glue, b);
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < q; ++i) pr(i, e) = (*x)[w.cols() + i];
  }
  out.proj = pr;
  GFMatrix squot = pr * mid.sigma * reps;
  out.quot = make_sigma_module(k, squot);
  return out;
}

GFMatrix induced_map(const TateGroup& src, const TateGroup& dst,
                     const GFMatrix& m) {
  GFMatrix out(m.field(), dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    auto v = m.apply(col(src.reps, j));
    auto r = dst.reduce(v);
    for (std::size_t i = 0; i < dst.dim(); ++i) out(i, j) = r[i];
  }
  return out;
}

}  // namespace

TEST_CASE("trivial sigma on k in char p: T0 = T1 = k") {
  for (unsigned p : {2u, 3u, 5u}) {
    GFField k = make_field(p, 1);
    auto m = make_sigma_module(k, GFMatrix::identity(k, 1));
    auto t = tate_cohomology(m);
    CHECK(t.t0.dim() == 1);
    CHECK(t.t1.dim() == 1);
  }
}

TEST_CASE("regular representation k[Z/p] is Tate-acyclic") {
  for (unsigned p : {2u, 3u, 5u}) {
    GFField k = make_field(p, 1);
    std::vector<std::size_t> cyc(p);
    for (unsigned i = 0; i < p; ++i) cyc[i] = (i + 1) % p;
    auto m = permutation_module(k, cyc);
    auto t = tate_cohomology(m);
    CHECK(t.t0.dim() == 0);
    CHECK(t.t1.dim() == 0);
  }
}

TEST_CASE("permutation module: T^i = k[fixed points], by brute force") {
  std::mt19937_64 rng(41);
  for (unsigned p : {2u, 3u}) {
    GFField k = make_field(p, 1);
    for (int trial = 0; trial < 20; ++trial) {
      // random sigma-set: f fixed points and c free p-cycles
      std::uniform_int_distribution<std::size_t> df(0, 4), dc(0, 3);
      std::size_t f = df(rng), c = dc(rng);
      std::vector<std::size_t> perm(f + c * p);
      for (std::size_t i = 0; i < f; ++i) perm[i] = i;
      for (std::size_t j = 0; j < c; ++j)
        for (unsigned t = 0; t < p; ++t)
          perm[f + j * p + t] = f + j * p + (t + 1) % p;
      auto m = permutation_module(k, perm);
      auto t = tate_cohomology(m);
      CHECK(t.t0.dim() == f);
      CHECK(t.t1.dim() == f);
      // the fixed-point basis vectors represent a basis of both quotients
      if (f > 0) {
        GFMatrix imgs0(k, f, f), imgs1(k, f, f);
        for (std::size_t s = 0; s < f; ++s) {
          std::vector<GFElement> e(perm.size(), GFElement::zero(k));
          e[s] = GFElement::one(k);
          auto r0 = t.t0.reduce(e);
          auto r1 = t.t1.reduce(e);
          for (std::size_t i = 0; i < f; ++i) {
            imgs0(i, s) = r0[i];
            imgs1(i, s) = r1[i];
          }
        }
        CHECK(rank(imgs0) == f);
        CHECK(rank(imgs1) == f);
      }
    }
  }
}

TEST_CASE("induced modules are Tate-acyclic") {
  std::mt19937_64 rng(43);
  for (unsigned p : {2u, 3u}) {
    GFField k = make_field(p, 2);
    for (int trial = 0; trial < 5; ++trial) {
      auto m = random_sigma_module(k, 4, rng);
      auto ind = induced_module(m);
      auto t = tate_cohomology(ind);
      CHECK(t.t0.dim() == 0);
      CHECK(t.t1.dim() == 0);
    }
  }
}

TEST_CASE("six-term sequence is exact on random short exact sequences") {
  std::mt19937_64 rng(47);
  for (unsigned p : {2u, 3u}) {
    GFField k = make_field(p, 1);
    for (int trial = 0; trial < 25; ++trial) {
      auto mid = random_sigma_module(k, 6, rng);
      auto ses = random_ses(mid, rng);
      auto ts = tate_cohomology(ses.sub);
      auto tm = tate_cohomology(ses.mid);
      auto tq = tate_cohomology(ses.quot);

      // connecting maps via lift + horizontal differential
      auto connecting = [&](const TateGroup& src, const TateGroup& dst,
                            const GFMatrix& diff) {
        // src on quot, dst on sub: lift rep through proj, apply diff, express
        // through incl
        GFMatrix out(k, dst.dim(), src.dim());
        for (std::size_t j = 0; j < src.dim(); ++j) {
          auto v = col(src.reps, j);
          auto lift = solve(ses.proj, v);
          REQUIRE(lift.has_value());
          auto w = diff.apply(*lift);
          auto back = solve(ses.incl, w);
          REQUIRE(back.has_value());
          auto r = dst.reduce(*back);
          for (std::size_t i = 0; i < dst.dim(); ++i) out(i, j) = r[i];
        }
        return out;
      };

      GFMatrix f1 = induced_map(ts.t0, tm.t0, ses.incl);
      GFMatrix f2 = induced_map(tm.t0, tq.t0, ses.proj);
      GFMatrix f3 = connecting(tq.t0, ts.t1, ses.mid.one_minus_sigma());
      GFMatrix f4 = induced_map(ts.t1, tm.t1, ses.incl);
      GFMatrix f5 = induced_map(tm.t1, tq.t1, ses.proj);
      GFMatrix f6 = connecting(tq.t1, ts.t0, ses.mid.norm());

      auto exact_at = [&](const GFMatrix& in, const GFMatrix& out_) {
        CHECK((out_ * in).is_zero());
        CHECK(rank(in) + rank(out_) == in.rows());
      };
      exact_at(f6, f1);  // at T0(sub)
      exact_at(f1, f2);  // at T0(mid)
      exact_at(f2, f3);  // at T0(quot)
      exact_at(f3, f4);  // at T1(sub)
      exact_at(f4, f5);  // at T1(mid)
      exact_at(f5, f6);  // at T1(quot)
    }
  }
}

TEST_CASE("tate_ring: k trivial, group algebra, and function rings") {
  GFField k = make_field(3, 1);

  // A = k with trivial sigma
  std::vector<std::size_t> one_pt{0};
  auto a1 = function_ring(k, one_pt);
  auto t1 = tate_ring(a1);
  CHECK(t1.ring.dim == 1);

  // functions on one free 3-cycle (k[Z/3] with translation): N A = A^sigma
  auto a2 = free_cycle_ring(k);
  REQUIRE(a2.validate());
  auto t2 = tate_ring(a2);
  CHECK(t2.ring.dim == 0);

  // functions on a sigma-set: \bar A = functions on fixed points
  std::vector<std::size_t> perm{0, 1, 3, 4, 2};  // two fixed, one 3-cycle
  auto a3 = function_ring(k, perm);
  REQUIRE(a3.validate());
  auto t3 = tate_ring(a3);
  CHECK(t3.ring.dim == 2);
  auto chars = characters_of(t3.ring);
  REQUIRE(chars.has_value());
  CHECK(chars->size() == 2);
}

TEST_CASE("character restriction is a bijection, with the p-th root formula") {
  GFField k = make_field(3, 1);
  std::vector<std::size_t> perm{0, 2, 3, 1, 4, 6, 5};  // hmm validated below
  // fixed: 0, 4; 3-cycle (1 2 3); transposition would break sigma^3 = 1, so
  // use a clean set: fixed {0,4}, cycle (1 2 3), cycle (5 6) is invalid for
  // p = 3; rebuild:
  perm = {0, 2, 3, 1, 4};
  auto a = function_ring(k, perm);
  REQUIRE(a.validate());
  auto bar = tate_ring(a);
  CHECK(bar.ring.dim == 2);

  auto chars_a = characters_of(a);
  auto chars_bar = characters_of(bar.ring);
  REQUIRE(chars_a.has_value());
  REQUIRE(chars_bar.has_value());
  CHECK(chars_a->size() == 5);   // evaluations at the 5 points
  CHECK(chars_bar->size() == 2);  // evaluations at the 2 fixed points

  // sigma-fixed characters of A = characters of \bar A via restriction
  std::vector<Character> fixed;
  for (auto& chi : *chars_a)
    if (is_sigma_fixed_character(a, chi)) fixed.push_back(chi);
  CHECK(fixed.size() == chars_bar->size());

  // extension: each character of \bar A extends sigma-fixed, and restricting
  // the extension gives back psi
  for (auto& psi : *chars_bar) {
    Character ext = extend_character(a, bar, psi);
    CHECK(is_character(a, ext));
    CHECK(is_sigma_fixed_character(a, ext));
    // restriction: value on A^sigma reps projected
    for (std::size_t j = 0; j < bar.ring.dim; ++j) {
      std::vector<GFElement> rep(a.dim, GFElement::zero(k));
      for (std::size_t i = 0; i < a.dim; ++i) rep[i] = bar.reps(i, j);
      GFElement viaext = GFElement::zero(k);
      for (std::size_t i = 0; i < a.dim; ++i)
        viaext = viaext + rep[i] * ext[i];
      CHECK(viaext == psi[j]);
    }
    // uniqueness among the enumerated sigma-fixed characters
    int matches = 0;
    for (auto& chi : fixed) {
      bool same_restriction = true;
      for (std::size_t j = 0; j < bar.ring.dim; ++j) {
        std::vector<GFElement> rep(a.dim, GFElement::zero(k));
        for (std::size_t i = 0; i < a.dim; ++i) rep[i] = bar.reps(i, j);
        GFElement v = GFElement::zero(k);
        for (std::size_t i = 0; i < a.dim; ++i) v = v + rep[i] * chi[i];
        if (!(v == psi[j])) same_restriction = false;
      }
      if (same_restriction) ++matches;
    }
    CHECK(matches == 1);
  }
}

TEST_CASE("evaluation at a fixed point extends to evaluation at that point") {
  GFField k = make_field(3, 1);
  std::vector<std::size_t> perm{0, 2, 3, 1};
  auto a = function_ring(k, perm);
  auto bar = tate_ring(a);
  REQUIRE(bar.ring.dim == 1);
  // psi = the unique character of \bar A; its extension is evaluation at the
  // fixed point 0
  auto chars_bar = characters_of(bar.ring);
  REQUIRE(chars_bar.has_value());
  REQUIRE(chars_bar->size() == 1);
  Character ext = extend_character(a, bar, (*chars_bar)[0]);
  CHECK(ext[0] == GFElement::one(k));
  for (std::size_t i = 1; i < 4; ++i) CHECK(ext[i].is_zero());
}
