#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rootsmith/exactlin.hpp"

using namespace rs;

TEST_CASE("smith normal form: identity") {
  IntMatrix m = IntMatrix::identity(3);
  auto s = smith_normal_form(m);
  CHECK(s.diagonal == m);
  CHECK(s.left * m * s.right == s.diagonal);
}

TEST_CASE("smith normal form: diag(2,3) has invariant factors (1,6)") {
  IntMatrix m(2, 2, {2, 0, 0, 3});
  auto s = smith_normal_form(m);
  // frozen from the minor-gcd oracle: d1 = gcd of entries = 1, d1 d2 = det = 6
  CHECK(s.invariant_factors() == IntVec{Int(1), Int(6)});
  CHECK(invariant_factors_by_minors(m) == IntVec{Int(1), Int(6)});
  CHECK(s.left * m * s.right == s.diagonal);
}

TEST_CASE("smith normal form agrees with the minor-gcd oracle on random input") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-6, 6);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    auto s = smith_normal_form(m);
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(abs(det(s.left)) == 1);
    CHECK(abs(det(s.right)) == 1);
    auto f = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
    CHECK(f == invariant_factors_by_minors(m));
  }
}

TEST_CASE("integer kernel: zero map and a rank-one map") {
  IntMatrix z(2, 2);
  CHECK(integer_kernel(z).cols() == 2);

  IntMatrix m(1, 2, {1, 1});
  IntMatrix k = integer_kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(abs(k(0, 0)) == 1);
  CHECK(k(0, 0) == -k(1, 0));
}

TEST_CASE("integer kernel is saturated") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int t = 0; t < 100; ++t) {
    IntMatrix m(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = dist(rng);
    IntMatrix k = integer_kernel(m);
    CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());
    auto f = smith_normal_form(k).invariant_factors();
    for (const auto& x : f) CHECK(x == 1);
  }
}

TEST_CASE("lattice quotient") {
  // Z^2 / <(2,0),(0,3)> has invariant factors 2, 3 -> order 6
  IntMatrix g(2, 2, {2, 0, 0, 3});
  auto q = lattice_quotient(2, g);
  CHECK(q.finite());
  CHECK(q.index() == 6);

  // Z^2 / <(1,0)> = Z
  IntMatrix h(2, 1, {1, 0});
  auto q2 = lattice_quotient(2, h);
  CHECK(!q2.finite());
  CHECK(q2.invariant_factors == IntVec{Int(0)});
}

TEST_CASE("lattice membership") {
  IntMatrix g(2, 2, {2, 0, 0, 3});
  CHECK(lattice_contains(g, {Int(2), Int(3)}));
  CHECK(lattice_contains(g, {Int(4), Int(0)}));
  CHECK(!lattice_contains(g, {Int(1), Int(0)}));
}

TEST_CASE("cone feasibility: trivial cases") {
  IntMatrix s1(1, 1, {1});
  IntMatrix w0(0, 1);
  auto v = rational_cone_feasible(s1, w0);
  REQUIRE(v.has_value());
  CHECK((*v)[0] > 0);

  IntMatrix s2(2, 1, {1, -1});
  CHECK(!rational_cone_feasible(s2, w0).has_value());
}

TEST_CASE("cone feasibility returns exact witnesses") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> dist(-4, 4);
  int feasible_count = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 3, ns = 3, nw = 3;
    IntMatrix s(ns, n), w(nw, n);
    for (std::size_t i = 0; i < ns; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = dist(rng);
    for (std::size_t i = 0; i < nw; ++i)
      for (std::size_t j = 0; j < n; ++j) w(i, j) = dist(rng);
    auto v = rational_cone_feasible(s, w);
    if (!v) continue;
    ++feasible_count;
    for (std::size_t i = 0; i < ns; ++i) {
      Rat acc(0);
      for (std::size_t j = 0; j < n; ++j) acc += Rat(s(i, j)) * (*v)[j];
      CHECK(acc > 0);
    }
    for (std::size_t i = 0; i < nw; ++i) {
      Rat acc(0);
      for (std::size_t j = 0; j < n; ++j) acc += Rat(w(i, j)) * (*v)[j];
      CHECK(acc >= 0);
    }
  }
  CHECK(feasible_count > 50);  // sanity: the solver finds plenty of witnesses
}

TEST_CASE("cone feasibility is complete on verifiable instances") {
  // instances built to be feasible: v fixed, constraints chosen around it
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 4;
    std::vector<long> target(n);
    for (auto& x : target) x = dist(rng);
    IntMatrix s(4, n), w(4, n);
    auto fill = [&](IntMatrix& m, bool strict) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        while (true) {
          long acc = 0;
          std::vector<long> row(n);
          for (std::size_t j = 0; j < n; ++j) {
            row[j] = dist(rng);
            acc += row[j] * target[j];
          }
          if ((strict && acc > 0) || (!strict && acc >= 0)) {
            for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
            break;
          }
        }
      }
    };
    fill(s, true);
    fill(w, false);
    CHECK(rational_cone_feasible(s, w).has_value());
  }
}

TEST_CASE("rational solve and inverse") {
  RatMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv) * m == RatMatrix::identity(2));
  CHECK(det(m) == Rat(-2));

  auto x = solve(m, {Rat(5), Rat(11)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(2));
}

TEST_CASE("scale_to_primitive_int") {
  RatVec v{Rat(1, 2), Rat(3, 4), Rat(-1)};
  CHECK(scale_to_primitive_int(v) == IntVec{Int(2), Int(3), Int(-4)});
}
