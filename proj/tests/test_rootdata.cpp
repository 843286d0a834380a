#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rootsmith/rootdata.hpp"

using namespace rs;

namespace {

std::size_t classical_root_count(char letter, std::size_t n) {
  switch (letter) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

}  // namespace

TEST_CASE("A1: two roots and rho") {
  auto rd = RootDatum::build("A1");
  CHECK(rd->roots().size() == 2);
  SimpleSystem sys{rd, {rd->simple_root(0)}};
  RatVec rho = half_sum_positive(sys);
  CHECK(rho == RatVec{Rat(1, 2)});
  CHECK(sys.rho_pairing(rd->simple_root(0)) == Rat(1));
}

TEST_CASE("root counts match the classical formulas") {
  for (auto [label, letter, n] :
       std::vector<std::tuple<std::string, char, std::size_t>>{
           {"A4", 'A', 4}, {"B3", 'B', 3}, {"C4", 'C', 4}, {"D5", 'D', 5},
           {"E6", 'E', 6}, {"E7", 'E', 7}, {"E8", 'E', 8}, {"F4", 'F', 4},
           {"G2", 'G', 2}}) {
    auto rd = RootDatum::build(label);
    CHECK(rd->roots().size() == classical_root_count(letter, n));
    CHECK(rd->positive_roots().size() * 2 == rd->roots().size());
  }
}

TEST_CASE("E8 highest root and extended diagram marks") {
  auto rd = RootDatum::build("E8");
  CHECK(rd->highest_root() == Coeffs{2, 3, 4, 6, 5, 4, 3, 2});
  auto ext = extended_dynkin(rd);
  CHECK(ext.marks == std::vector<long>{2, 3, 4, 6, 5, 4, 3, 2});
  int fives = 0, threes = 0;
  for (long m : ext.marks) {
    if (m == 5) ++fives;
    if (m == 3) ++threes;
  }
  CHECK(fives == 1);
  CHECK(threes == 2);
}

TEST_CASE("A1 extended diagram has one extra node with mark 1") {
  auto rd = RootDatum::build("A1");
  auto ext = extended_dynkin(rd);
  CHECK(ext.marks == std::vector<long>{1});
  CHECK(ext.lowest_root == Coeffs{-1});
}

TEST_CASE("reflections permute the roots and preserve the pairing") {
  for (const std::string& label : {"G2", "F4", "B3", "D4"}) {
    auto rd = RootDatum::build(label);
    for (std::size_t i = 0; i < rd->rank(); ++i)
      CHECK(rd->is_weyl_endomorphism(rd->simple_reflection(i)));
    // reflection in a non-simple root as well
    CHECK(rd->is_weyl_endomorphism(rd->reflection(rd->highest_root())));
  }
}

TEST_CASE("rho pairs to 1 with every simple coroot") {
  for (const std::string& label : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    auto rd = RootDatum::build(label);
    std::vector<Coeffs> simples;
    for (std::size_t i = 0; i < rd->rank(); ++i)
      simples.push_back(rd->simple_root(i));
    SimpleSystem sys{rd, simples};
    for (std::size_t i = 0; i < rd->rank(); ++i)
      CHECK(sys.rho_pairing(rd->simple_root(i)) == Rat(1));
  }
}

TEST_CASE("E8 ambient embedding is consistent with the Cartan matrix") {
  auto rd = RootDatum::build("E8");
  REQUIRE(rd->ambient().has_value());
  const RatMatrix& s = *rd->ambient();
  // Gram matrix of the columns equals the symmetrized Cartan matrix
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Rat dot(0);
      for (std::size_t k = 0; k < 8; ++k) dot += s(k, i) * s(k, j);
      CHECK(dot == rd->inner(rd->simple_root(i), rd->simple_root(j)));
    }
  // every root has ambient norm 2
  for (const auto& r : rd->roots()) {
    RatVec a = rd->to_ambient(r);
    Rat n2(0);
    for (const auto& x : a) n2 += x * x;
    CHECK(n2 == Rat(2));
  }
}

TEST_CASE("weyl_from_ambient: identity accepted, non-lattice rotation rejected") {
  auto rd = RootDatum::build("E8");
  auto id = rd->weyl_from_ambient(RatMatrix::identity(8));
  REQUIRE(id.has_value());
  CHECK(id->is_identity());

  // a permutation-like orthogonal matrix that does not preserve the lattice:
  // swap of the first two coordinates composed with a sign; ambient vector
  // (1,-1,0,...) maps to roots but half-integer vectors break
  RatMatrix q = RatMatrix::identity(8);
  q(0, 0) = 0;
  q(0, 1) = 1;
  q(1, 0) = 1;
  q(1, 1) = 0;
  q(7, 7) = -1;
  std::string why;
  auto w = rd->weyl_from_ambient(q, &why);
  CHECK(!w.has_value());
}

TEST_CASE("minus-one eigenroots: identity and a G2 reflection") {
  auto g2 = RootDatum::build("G2");
  CHECK(g2->minus_one_eigenroots(WeylElement::identity(2)).empty());
  Coeffs r{1, 1};  // alpha_1 + alpha_2 is a root
  REQUIRE(g2->is_root(r));
  auto eig = g2->minus_one_eigenroots(g2->reflection(r));
  REQUIRE(eig.size() == 1);
  CHECK(eig[0] == r);
}

TEST_CASE("strong orthogonality") {
  auto a2 = RootDatum::build("A2");
  CHECK(a2->is_strongly_orthogonal({a2->simple_root(0)}));
  CHECK(!a2->is_strongly_orthogonal({a2->simple_root(0), a2->simple_root(1)}));

  auto d4 = RootDatum::build("D4");
  // e1-e2 and e3-e4 in D4 coordinates: alpha_1 and alpha_3 are orthogonal
  // but their sum is not a root only if strongly orthogonal
  Coeffs a = d4->simple_root(0);
  Coeffs b = d4->simple_root(2);
  bool claim = d4->is_strongly_orthogonal({a, b});
  Coeffs sum(4), dif(4);
  for (int i = 0; i < 4; ++i) {
    sum[i] = a[i] + b[i];
    dif[i] = a[i] - b[i];
  }
  CHECK(claim == (!d4->is_root(sum) && !d4->is_root(dif)));
}

TEST_CASE("weyl restriction: identity, W_H elements, and equivariance") {
  auto e6 = RootDatum::build("E6");
  // subsystem A5 spanned by the chain 1-3-4-5-6
  Subsystem h{e6, {e6->simple_root(0), e6->simple_root(2), e6->simple_root(3),
                   e6->simple_root(4), e6->simple_root(5)}};
  CHECK(h.type() == CartanType::parse("A5"));

  auto r1 = weyl_restriction(WeylElement::identity(6), h);
  CHECK(r1.nu.is_identity());
  CHECK(r1.bar.is_identity());

  // w in W_H: nu_w = w, bar = identity
  WeylElement w = e6->reflection(e6->simple_root(0)) *
                  e6->reflection(e6->simple_root(3));
  auto r2 = weyl_restriction(w, h);
  CHECK(r2.nu == w);
  CHECK(r2.bar.is_identity());

  // left W_H-equivariance: nu_{vw} = v nu_w for v in W_H
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, 5);
  for (int t = 0; t < 10; ++t) {
    WeylElement any = WeylElement::identity(6);
    for (int s = 0; s < 5; ++s) any = any * e6->simple_reflection(pick(rng));
    WeylElement v = e6->reflection(h.simples[pick(rng) % h.simples.size()]);
    auto ra = weyl_restriction(any, h);
    auto rb = weyl_restriction(v * any, h);
    CHECK(rb.nu == v * ra.nu);
    CHECK(rb.bar == ra.bar);
  }
}

TEST_CASE("cartan classification: canonical small cases") {
  CHECK(RootDatum::build("A2xA2")->type().str() == "A2xA2");
  auto d4 = RootDatum::build("D4");
  // the full diagram classifies back to itself
  CHECK(classify_cartan(d4->cartan_matrix()) == CartanType::parse("D4"));
  auto f4 = RootDatum::build("F4");
  CHECK(classify_cartan(f4->cartan_matrix()) == CartanType::parse("F4"));
  auto b4 = RootDatum::build("B4");
  CHECK(classify_cartan(b4->cartan_matrix()) == CartanType::parse("B4"));
  auto c4 = RootDatum::build("C4");
  CHECK(classify_cartan(c4->cartan_matrix()) == CartanType::parse("C4"));
}

TEST_CASE("diagram automorphisms") {
  CHECK(RootDatum::build("A1")->diagram_automorphisms().size() == 1);
  CHECK(RootDatum::build("A3")->diagram_automorphisms().size() == 2);
  CHECK(RootDatum::build("D4")->diagram_automorphisms().size() == 6);
  CHECK(RootDatum::build("E6")->diagram_automorphisms().size() == 2);
  CHECK(RootDatum::build("E8")->diagram_automorphisms().size() == 1);
}

TEST_CASE("coroots and pairings") {
  auto g2 = RootDatum::build("G2");
  Coeffs high = g2->highest_root();
  CHECK(high == Coeffs{3, 2});
  // highest root is long; its coroot has coefficients (1, ...) in coroot basis
  Coeffs hv = g2->coroot(high);
  // <alpha_0, alpha_0^vee> = 2 always
  CHECK(g2->pairing(high, high) == 2);
  CHECK(g2->norm2(high) == Rat(6));
  (void)hv;
}
