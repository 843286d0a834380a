#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rootsmith/hecke.hpp"

using namespace rs;

TEST_CASE("cycle notation round trip") {
  Perm p = parse_cycles("(0 1 2)(4 5)", 6);
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 0);
  CHECK(p[3] == 3);
  CHECK(p[4] == 5);
  CHECK(parse_cycles(cycles_str(p), 6) == p);
  CHECK(perm_mul(p, perm_inverse(p)) == perm_identity(6));
}

TEST_CASE("S3 with K = <(0 1)>: Hecke algebra of dimension 2") {
  auto act = s3_trivial_action();
  CHECK(act.g.order() == 6);
  CHECK(act.k_elems.size() == 2);
  CHECK(act.num_cosets == 3);
  CHECK(act.num_dcosets == 2);

  auto h = hecke_algebra(act);
  CHECK(h.commutative);

  // independent oracle: convolution as functions on S x S,
  // (h1 * h2)(x, z) = sum_y h1(x, y) h2(y, z), h_D(x, y) = [x^{-1} y in D]
  auto dc_of_pair = [&](std::size_t x, std::size_t z) {
    std::size_t xi = act.g.inverse(act.coset_rep[x]);
    return act.dc_of_coset[act.coset_of[act.g.mul(xi, act.coset_rep[z])]];
  };
  for (std::size_t a = 0; a < h.dim; ++a)
    for (std::size_t b = 0; b < h.dim; ++b)
      for (std::size_t c = 0; c < h.dim; ++c) {
        // pick z with (K, zK) in double coset c; count y
        std::size_t z = act.dc_rep[c];
        long count = 0;
        std::size_t e_coset = act.coset_of[act.g.identity()];
        for (std::size_t y = 0; y < act.num_cosets; ++y)
          if (dc_of_pair(e_coset, y) == a && dc_of_pair(y, z) == b) ++count;
        CHECK(h.sc[a][b][c] == count);
      }

  // structure constants independent of the representative of the target
  for (std::size_t a = 0; a < h.dim; ++a)
    for (std::size_t b = 0; b < h.dim; ++b)
      for (std::size_t c = 0; c < h.dim; ++c)
        for (std::size_t z : act.dc_cosets[c]) {
          long count = 0;
          std::size_t e_coset = act.coset_of[act.g.identity()];
          for (std::size_t y = 0; y < act.num_cosets; ++y)
            if (dc_of_pair(e_coset, y) == a && dc_of_pair(y, z) == b) ++count;
          CHECK(h.sc[a][b][c] == count);
        }
}

TEST_CASE("unit law and associativity, exhaustive on small algebras") {
  for (auto act : {s3_trivial_action(), s3_wreath_action(3)}) {
    auto h = hecke_algebra(act);
    GFField f = make_field(act.p, 1);
    auto basis = [&](std::size_t d) {
      std::vector<GFElement> v(h.dim, GFElement::zero(f));
      v[d] = GFElement::one(f);
      return v;
    };
    for (std::size_t d = 0; d < h.dim; ++d) {
      CHECK(h.convolve(basis(h.unit), basis(d)) == basis(d));
      CHECK(h.convolve(basis(d), basis(h.unit)) == basis(d));
    }
    for (std::size_t a = 0; a < h.dim; ++a)
      for (std::size_t b = 0; b < h.dim; ++b)
        for (std::size_t c = 0; c < h.dim; ++c) {
          auto lhs = h.convolve(h.convolve(basis(a), basis(b)), basis(c));
          auto rhs = h.convolve(basis(a), h.convolve(basis(b), basis(c)));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("module property of the coset action") {
  // pin down the composition convention on a noncommutative example:
  // G = S3, K = {e}: H = k[S3]
  Perm t = parse_cycles("(0 1)", 3);
  Perm c = parse_cycles("(0 1 2)", 3);
  auto act = make_action_conj(3, {t, c}, {}, perm_identity(3), 3);
  auto h = hecke_algebra(act);
  CHECK(!h.commutative);
  GFField f = make_field(3, 1);
  auto ms = h.coset_action(f);
  auto basis = [&](std::size_t d) {
    std::vector<GFElement> v(h.dim, GFElement::zero(f));
    v[d] = GFElement::one(f);
    return v;
  };
  for (std::size_t a = 0; a < h.dim; ++a)
    for (std::size_t b = 0; b < h.dim; ++b) {
      auto prod = h.convolve(basis(a), basis(b));
      GFMatrix expect(f, act.num_cosets, act.num_cosets);
      for (std::size_t d = 0; d < h.dim; ++d)
        if (!prod[d].is_zero()) expect = expect + ms[d] * prod[d];
      // right module: x * (a * b) = (x * a) * b, i.e. M_{ab} = M_b M_a
      CHECK(expect == ms[b] * ms[a]);
    }
}

TEST_CASE("plainness: trivial sigma, cyclic group, and the shear example") {
  {
    auto act = s3_trivial_action();
    auto r = plainness_check(act);
    CHECK(r.plain());
  }
  {
    // G = Z/3 regular, K = {e}, sigma = identity
    Perm c = parse_cycles("(0 1 2)", 3);
    auto act = make_action_conj(3, {c}, {}, perm_identity(3), 3);
    auto r = plainness_check(act);
    CHECK(r.plain());
    CHECK(r.num_fixed_cosets == 3);
  }
  {
    auto act = shear_action(3);
    auto r = plainness_check(act);
    CHECK(!r.plain());
    CHECK(!r.bijective);         // fixed cosets without fixed representatives
    CHECK(!r.k_prime_to_p);      // |K| = 3
    CHECK(r.num_fixed_cosets == 3);
    CHECK(r.num_fixed_quotient == 1);
  }
}

TEST_CASE("GL2(F8) with the diagonal torus: plain, order checks") {
  auto act = gl2_f8_action(false);
  CHECK(act.g.order() == 3528);
  CHECK(act.k_elems.size() == 49);
  CHECK(act.num_cosets == 72);
  auto r = plainness_check(act);
  CHECK(r.plain());
  CHECK(r.num_fixed_cosets == r.num_fixed_quotient);
  // G^sigma = GL2(F2), |G^sigma| = 6
  CHECK(act.g_fixed.size() == 6);
  CHECK(act.k_fixed.size() == 1);
}

TEST_CASE("Brauer homomorphism: unit, trivial sigma, multiplicativity") {
  // trivial sigma: Br is the identity map
  {
    auto act = s3_trivial_action();
    auto ha = hecke_algebra(act);
    auto af = fixed_point_action(act);
    auto hf = hecke_algebra(af);
    CHECK(hf.dim == ha.dim);
    GFField f = make_field(3, 1);
    for (std::size_t d = 0; d < ha.dim; ++d) {
      std::vector<GFElement> h(ha.dim, GFElement::zero(f));
      h[d] = GFElement::one(f);
      auto img = brauer(act, ha, af, hf, h);
      int nz = 0;
      for (std::size_t j = 0; j < hf.dim; ++j)
        if (!img[j].is_zero()) ++nz;
      CHECK(nz == 1);
    }
  }
  // GL2(F8)/torus: Br is multiplicative on all sigma-invariant basis sums
  {
    auto act = gl2_f8_action(false);
    auto ha = hecke_algebra(act);
    auto af = fixed_point_action(act);
    auto hf = hecke_algebra(af);
    GFField f = make_field(3, 1);
    // sigma-orbit sums
    std::vector<std::vector<GFElement>> sums;
    std::vector<bool> seen(ha.dim, false);
    for (std::size_t d = 0; d < ha.dim; ++d) {
      if (seen[d]) continue;
      std::vector<GFElement> h(ha.dim, GFElement::zero(f));
      std::size_t cur = d;
      do {
        seen[cur] = true;
        h[cur] = GFElement::one(f);
        cur = act.sigma_dc[cur];
      } while (cur != d);
      sums.push_back(h);
    }
    // Br(unit) = unit
    {
      std::vector<GFElement> u(ha.dim, GFElement::zero(f));
      u[ha.unit] = GFElement::one(f);
      auto img = brauer(act, ha, af, hf, u);
      for (std::size_t j = 0; j < hf.dim; ++j)
        CHECK(img[j] == (j == hf.unit ? GFElement::one(f) : GFElement::zero(f)));
    }
    for (auto& h1 : sums)
      for (auto& h2 : sums) {
        auto lhs = brauer(act, ha, af, hf, ha.convolve(h1, h2));
        auto rhs = hf.convolve(brauer(act, ha, af, hf, h1),
                               brauer(act, ha, af, hf, h2));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("non-plain shear example: Brauer restriction fails to be multiplicative") {
  auto act = shear_action(3);
  auto ha = hecke_algebra(act);
  auto af = fixed_point_action(act);
  auto hf = hecke_algebra(af);
  GFField f = make_field(3, 1);
  // all double cosets are sigma-fixed here; the naive restriction map is
  // defined but fails multiplicativity on some pair
  bool failed_somewhere = false;
  for (std::size_t d1 = 0; d1 < ha.dim && !failed_somewhere; ++d1)
    for (std::size_t d2 = 0; d2 < ha.dim && !failed_somewhere; ++d2) {
      std::vector<GFElement> h1(ha.dim, GFElement::zero(f)),
          h2(ha.dim, GFElement::zero(f));
      h1[d1] = GFElement::one(f);
      h2[d2] = GFElement::one(f);
      auto lhs = brauer(act, ha, af, hf, ha.convolve(h1, h2));
      auto rhs = hf.convolve(brauer(act, ha, af, hf, h1),
                             brauer(act, ha, af, hf, h2));
      if (!(lhs == rhs)) failed_somewhere = true;
    }
  CHECK(failed_somewhere);
}

TEST_CASE("normalized Brauer: unit, linearity, agreement with Br on invariants") {
  auto act = s3_wreath_action(3);
  auto ha = hecke_algebra(act);
  auto af = fixed_point_action(act);
  auto hf = hecke_algebra(af);
  REQUIRE(ha.commutative);
  REQUIRE(hf.commutative);
  GFField f = make_field(3, 2);

  // br(unit) = unit
  {
    std::vector<GFElement> u(ha.dim, GFElement::zero(f));
    u[ha.unit] = GFElement::one(f);
    auto img = normalized_brauer(act, ha, af, hf, u);
    for (std::size_t j = 0; j < hf.dim; ++j)
      CHECK(img[j] == (j == hf.unit ? GFElement::one(f) : GFElement::zero(f)));
  }
  // k-linearity on scalar multiples
  {
    GFElement lam = GFElement::from_index(f, 5);
    std::vector<GFElement> h(ha.dim, GFElement::zero(f));
    h[1 % ha.dim] = GFElement::one(f);
    auto a1 = normalized_brauer(act, ha, af, hf, h);
    for (auto& x : h) x = x * lam;
    auto a2 = normalized_brauer(act, ha, af, hf, h);
    for (std::size_t j = 0; j < hf.dim; ++j) CHECK(a2[j] == a1[j] * lam);
  }
  // on sigma-invariant F_p-valued elements, br(h) equals the p-th
  // convolution power of Br(h) (the Frobenius on the F_p-form)
  {
    std::vector<bool> seen(ha.dim, false);
    for (std::size_t d = 0; d < ha.dim; ++d) {
      if (seen[d]) continue;
      std::vector<GFElement> h(ha.dim, GFElement::zero(f));
      std::size_t cur = d;
      do {
        seen[cur] = true;
        h[cur] = GFElement::one(f);
        cur = act.sigma_dc[cur];
      } while (cur != d);
      auto br_h = brauer(act, ha, af, hf, h);
      auto frob_br = br_h;
      for (unsigned t = 1; t < act.p; ++t) frob_br = hf.convolve(frob_br, br_h);
      auto via_nbr = normalized_brauer(act, ha, af, hf, h);
      CHECK(frob_br == via_nbr);
    }
  }
  // multiplicative on all basis pairs
  for (std::size_t d1 = 0; d1 < ha.dim; ++d1)
    for (std::size_t d2 = 0; d2 < ha.dim; ++d2) {
      std::vector<GFElement> h1(ha.dim, GFElement::zero(f)),
          h2(ha.dim, GFElement::zero(f));
      h1[d1] = GFElement::one(f);
      h2[d2] = GFElement::one(f);
      auto lhs = normalized_brauer(act, ha, af, hf, ha.convolve(h1, h2));
      auto rhs = hf.convolve(normalized_brauer(act, ha, af, hf, h1),
                             normalized_brauer(act, ha, af, hf, h2));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("eigenvalue transfer: trivial sigma is tautological") {
  auto rep = eigenvalue_transfer_check(s3_trivial_action());
  CHECK(rep.ok);
  CHECK(rep.num_characters == rep.matched);
  CHECK(rep.num_characters >= 1);
}

TEST_CASE("eigenvalue transfer: S3 x S3 x S3 with the shift") {
  auto rep = eigenvalue_transfer_check(s3_wreath_action(3));
  CHECK(rep.ok);
  CHECK(rep.num_characters == rep.matched);
}

TEST_CASE("brauercompat: canonical module and trivial sigma") {
  {
    auto act = s3_trivial_action();
    GFField f = make_field(3, 1);
    auto rep = brauercompat_check(act, f, GFMatrix());
    CHECK(rep.ok);
  }
  {
    auto act = s3_wreath_action(3);
    GFField f = make_field(3, 1);
    auto rep = brauercompat_check(act, f, GFMatrix());
    CHECK(rep.ok);
  }
}

TEST_CASE("brauercompat: sigma-stable submodules of k[G/K]") {
  auto act = s3_wreath_action(3);
  GFField f = make_field(3, 1);
  std::size_t n = act.num_cosets;
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 3; ++trial) {
    // span of the G-orbit of a random sigma-fixed vector
    std::vector<GFElement> v(n, GFElement::zero(f));
    for (std::size_t c = 0; c < n; ++c) v[c] = GFElement::from_int(f, coin(rng));
    // symmetrize over sigma
    std::vector<GFElement> vs(n, GFElement::zero(f));
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t cur = c;
      for (unsigned t = 0; t < act.p; ++t) {
        vs[c] = vs[c] + v[cur];
        cur = act.sigma_coset[cur];
      }
    }
    GFMatrix orbit(f, n, act.g.order());
    for (std::size_t e = 0; e < act.g.order(); ++e)
      for (std::size_t c = 0; c < n; ++c)
        orbit(act.coset_of[act.g.mul(e, act.coset_rep[c])], e) =
            orbit(act.coset_of[act.g.mul(e, act.coset_rep[c])], e) + vs[c];
    GFMatrix w = column_space(orbit);
    if (w.cols() == 0) continue;
    auto rep = brauercompat_check(act, f, w);
    CHECK(rep.ok);
  }
}
