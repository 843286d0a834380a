#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "rootsmith/gf.hpp"

using namespace rs;

TEST_CASE("field axioms on random samples, fields up to 5^4") {
  std::mt19937_64 rng(5);
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {2, 4}, {3, 2}, {5, 1}, {5, 2}, {5, 4}, {7, 2}}) {
    GFField f = make_field(p, m);
    std::uniform_int_distribution<std::uint64_t> dist(0, f->q - 1);
    for (int t = 0; t < 50; ++t) {
      GFElement a = GFElement::from_index(f, dist(rng));
      GFElement b = GFElement::from_index(f, dist(rng));
      GFElement c = GFElement::from_index(f, dist(rng));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK(a * a.inverse() == GFElement::one(f));
    }
    // a * a^{-1} = 1 exhaustively
    for (std::uint64_t i = 1; i < f->q; ++i) {
      GFElement a = GFElement::from_index(f, i);
      CHECK(a * a.inverse() == GFElement::one(f));
    }
  }
}

TEST_CASE("sqrt: 1, nonsquares mod 5, and F_25") {
  GFField f5 = make_field(5, 1);
  CHECK(gf_sqrt(GFElement::one(f5)) == GFElement::one(f5));
  // squares mod 5 are {0, 1, 4}
  CHECK(!gf_sqrt(GFElement::from_int(f5, 2)).has_value());
  CHECK(!gf_sqrt(GFElement::from_int(f5, 3)).has_value());
  CHECK(gf_sqrt(GFElement::from_int(f5, 4)).has_value());

  GFField f25 = make_field(5, 2);
  auto r = gf_sqrt(GFElement::from_int(f25, 2));
  REQUIRE(r.has_value());
  CHECK((*r) * (*r) == GFElement::from_int(f25, 2));
}

TEST_CASE("square counts: exactly (q+1)/2 squares in odd characteristic") {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{
           {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
    GFField f = make_field(p, m);
    std::set<std::uint64_t> squares;
    for (std::uint64_t i = 0; i < f->q; ++i) {
      GFElement x = GFElement::from_index(f, i);
      squares.insert((x * x).index());
    }
    CHECK(squares.size() == (f->q + 1) / 2);
    for (std::uint64_t i = 0; i < f->q; ++i) {
      GFElement x = GFElement::from_index(f, i);
      auto s = gf_sqrt(x);
      CHECK(s.has_value() == (squares.count(i) > 0));
      if (s) CHECK((*s) * (*s) == x);
    }
  }
}

TEST_CASE("p-th root: inverse Frobenius") {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 3}, {3, 2}, {5, 2}}) {
    GFField f = make_field(p, m);
    CHECK(gf_pth_root(GFElement::zero(f)).is_zero());
    for (std::uint64_t i = 0; i < f->q; ++i) {
      GFElement x = GFElement::from_index(f, i);
      CHECK(gf_pth_root(x).pow(p) == x);
    }
  }
  // in F_p the p-th root is the identity
  GFField f7 = make_field(7, 1);
  for (std::uint64_t i = 0; i < 7; ++i) {
    GFElement x = GFElement::from_index(f7, i);
    CHECK(gf_pth_root(x) == x);
  }
}

TEST_CASE("char poly: small explicit cases") {
  GFField f25 = make_field(5, 2);
  GFMatrix id2 = GFMatrix::identity(f25, 2);
  GFPoly p = char_poly(id2);
  // (x-1)^2 = x^2 - 2x + 1
  GFPoly expect = GFPoly::from_coeffs(
      f25, {GFElement::one(f25), GFElement::from_int(f25, -2),
            GFElement::one(f25)});
  CHECK(p == expect);

  GFMatrix j = GFMatrix::from_int(f25, 2, 2, {0, 1, -1, 0});
  GFPoly pj = char_poly(j);
  GFPoly x2p1 = GFPoly::from_coeffs(
      f25, {GFElement::one(f25), GFElement::zero(f25), GFElement::one(f25)});
  CHECK(pj == x2p1);
}

TEST_CASE("char poly: multiplicative on blocks, invariant under conjugation") {
  std::mt19937_64 rng(17);
  GFField f = make_field(3, 2);
  std::uniform_int_distribution<std::uint64_t> dist(0, f->q - 1);
  auto random_matrix = [&](std::size_t n) {
    GFMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = GFElement::from_index(f, dist(rng));
    return m;
  };
  for (int t = 0; t < 20; ++t) {
    GFMatrix a = random_matrix(3), b = random_matrix(2);
    GFMatrix block(f, 5, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) block(i, j) = a(i, j);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) block(3 + i, 3 + j) = b(i, j);
    CHECK(char_poly(block) == char_poly(a) * char_poly(b));

    GFMatrix g = random_matrix(3);
    auto gi = inverse(g);
    if (!gi) continue;
    CHECK(char_poly((*gi) * a * g) == char_poly(a));
  }
}

TEST_CASE("char poly has degree n and det/trace coefficients") {
  std::mt19937_64 rng(29);
  GFField f = make_field(5, 1);
  std::uniform_int_distribution<std::uint64_t> dist(0, 4);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 4;
    GFMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = GFElement::from_index(f, dist(rng));
    GFPoly p = char_poly(m);
    REQUIRE(p.degree() == static_cast<long>(n));
    CHECK(p.c.back() == GFElement::one(f));
    // constant coefficient is (-1)^n det
    GFElement d = det(m);
    CHECK(p.c[0] == (n % 2 ? -d : d));
    // evaluation at eigen-free points: p(x) = det(xI - m)
    for (std::uint64_t xi = 0; xi < 5; ++xi) {
      GFElement x = GFElement::from_index(f, xi);
      GFMatrix xm = GFMatrix::identity(f, n) * x - m;
      CHECK(p.eval(x) == det(xm));
    }
  }
}

TEST_CASE("kernel and solve") {
  GFField f = make_field(2, 1);
  GFMatrix m = GFMatrix::from_int(f, 2, 3, {1, 1, 0, 0, 1, 1});
  GFMatrix k = kernel(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(rank(m) == 2);
}

TEST_CASE("poly roots with multiplicity") {
  GFField f = make_field(5, 1);
  // (x-1)^2 (x-3)
  GFPoly p = GFPoly::x_minus(GFElement::one(f)) *
             GFPoly::x_minus(GFElement::one(f)) *
             GFPoly::x_minus(GFElement::from_int(f, 3));
  auto roots = poly_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(poly_splits(p));
  // x^2 + 2 has no roots mod 5
  GFPoly q = GFPoly::from_coeffs(
      f, {GFElement::from_int(f, 2), GFElement::zero(f), GFElement::one(f)});
  CHECK(poly_roots(q).empty());
  CHECK(!poly_splits(q));
}

TEST_CASE("matrix order") {
  GFField f = make_field(5, 2);
  GFMatrix j = GFMatrix::from_int(f, 2, 2, {0, 1, -1, 0});
  auto o = matrix_order(j, 16);
  REQUIRE(o.has_value());
  CHECK(*o == 4);
}
