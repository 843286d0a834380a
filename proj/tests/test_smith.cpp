#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "rootsmith/smith.hpp"

using namespace rs;

TEST_CASE("FpMat basics") {
  FpMat m(3, 2, 3);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(0, 2, -1);
  m.set(1, 0, 2);
  m.set(1, 1, 4);
  m.set(1, 2, 2);
  CHECK(rank(m) == 2);
  FpMat k = kernel(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(column_space(m).cols() == 2);

  FpMat a(3, 3, 1), b(3, 3, 1);
  a.set(0, 0, 1);
  b.set(1, 0, 1);
  CHECK(span_sum(a, b).cols() == 2);
  CHECK(span_intersect(a, b).cols() == 0);
  CHECK(quotient_dim(a, b) == 1);
}

TEST_CASE("homology: point, circle, sphere") {
  {
    auto c = point_complex(2);
    auto h = homology_fp(chain_data(c));
    CHECK(h.betti == std::vector<std::size_t>{1});
  }
  {
    auto c = circle_complex(2, 5);
    auto h = homology_fp(chain_data(c));
    CHECK(h.betti == std::vector<std::size_t>{1, 1});
  }
  {
    auto c = sphere_half_turn();  // octahedral 2-sphere, p = 2
    auto h = homology_fp(chain_data(c));
    CHECK(h.betti == std::vector<std::size_t>{1, 0, 1});
  }
  {
    auto c = sphere_rotation_p3();
    auto h = homology_fp(chain_data(subdivide_until_regular(c)));
    CHECK(h.betti == std::vector<std::size_t>{1, 0, 1});
  }
}

TEST_CASE("regularity and subdivision") {
  CHECK(!filled_triangle_rotation().is_regular());
  auto c = subdivide_until_regular(filled_triangle_rotation());
  CHECK(c.is_regular());
  // one subdivision suffices for the rotated triangle
  CHECK(barycentric_subdivision(filled_triangle_rotation()).is_regular());

  CHECK(!edge_swap().is_regular());
  CHECK(barycentric_subdivision(edge_swap()).is_regular());

  // already-regular complexes pass through unchanged
  auto reg = sphere_half_turn();
  CHECK(reg.is_regular());
  CHECK(subdivide_until_regular(reg).size() == reg.size());

  // the rotated boundary of the 3-simplex needs at most 2 rounds
  CHECK(!sphere_rotation_p3().is_regular());
  auto s = subdivide_until_regular(sphere_rotation_p3(), 2);
  CHECK(s.is_regular());

  // subdivision preserves homology
  auto before = homology_fp(chain_data(sphere_half_turn()));
  auto after = homology_fp(chain_data(barycentric_subdivision(sphere_half_turn())));
  CHECK(before.betti == after.betti);
}

TEST_CASE("smith double complex: trivial sigma") {
  // any complex with trivial sigma: hvE2 = H_*(X) in every column and the
  // total homology in degree n is the sum of all Betti numbers
  auto c = circle_complex(3, 4);
  auto rep = smith_double_complex(c);
  CHECK(rep.regular);
  CHECK(rep.hv_e1_is_fixed_chains);
  CHECK(rep.hv_e2_is_fixed_homology);
  CHECK(rep.hv_degenerates_at_e2);
  CHECK(rep.vh_e2_is_tate);
  CHECK(rep.totals_agree);
  CHECK(rep.h_fixed == rep.h_space);
  CHECK(rep.h_total == std::vector<std::size_t>{2, 2});
  for (auto& [t0, t1] : rep.tate_h) CHECK(t0 == t1);
}

TEST_CASE("smith double complex: free action has vanishing total homology") {
  for (unsigned p : {2u, 3u}) {
    auto c = free_circle_cover(p);
    REQUIRE(c.is_regular());
    auto rep = smith_double_complex(c);
    CHECK(rep.h_total == std::vector<std::size_t>{0, 0});
    CHECK(rep.h_fixed.empty());
    CHECK(rep.hv_e2_is_fixed_homology);
    CHECK(rep.hv_degenerates_at_e2);
    CHECK(rep.vh_e2_is_tate);
    CHECK(rep.totals_agree);
  }
}

TEST_CASE("smith double complex: half turn of the 2-sphere, two fixed points") {
  auto c = sphere_half_turn();
  auto rep = smith_double_complex(c);
  CHECK(rep.regular);
  CHECK(rep.h_fixed == std::vector<std::size_t>{2});
  CHECK(rep.hv_e1_is_fixed_chains);
  CHECK(rep.hv_e2_is_fixed_homology);
  CHECK(rep.hv_degenerates_at_e2);
  CHECK(rep.vh_e2_is_tate);
  CHECK(rep.totals_agree);
  // sum H_*(X^sigma) = 2 = sum T^* H_*(X)
  auto ineq = smith_inequality_check(c);
  CHECK(ineq.holds);
  CHECK(ineq.sum_fixed == 2);
  CHECK(ineq.sum_tate == 2);
}

TEST_CASE("smith double complex: rotated 3-simplex boundary (p=3)") {
  auto c = subdivide_until_regular(sphere_rotation_p3());
  auto rep = smith_double_complex(c);
  CHECK(rep.regular);
  CHECK(rep.hv_e2_is_fixed_homology);
  CHECK(rep.hv_degenerates_at_e2);
  CHECK(rep.vh_e2_is_tate);
  CHECK(rep.totals_agree);
  // fixed set: the rotation axis meets the sphere in a circle's worth? no:
  // the fixed subcomplex of the subdivided action is the arc of barycenters
  // fixed by the rotation; its homology enters through hv_e2 which we have
  // already checked; the inequality must hold
  auto ineq = smith_inequality_check(c);
  CHECK(ineq.holds);
}

TEST_CASE("random regular complexes: all invariants hold") {
  for (unsigned p : {2u, 3u}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto c = random_regular_complex(p, seed * 7 + p);
      REQUIRE(c.is_regular());
      REQUIRE(c.size() <= 200);
      auto rep = smith_double_complex(c);
      CHECK(rep.hv_e1_is_fixed_chains);
      CHECK(rep.hv_e2_is_fixed_homology);
      CHECK(rep.hv_degenerates_at_e2);
      CHECK(rep.vh_e2_is_tate);
      CHECK(rep.totals_agree);
      auto ineq = smith_inequality_check(c);
      CHECK(ineq.holds);
    }
  }
}

TEST_CASE("complex text input") {
  std::istringstream in(
      "# a triangle rotated\n"
      "p 3\n"
      "vertices 3\n"
      "simplex 0 1 2\n"
      "sigma (0 1 2)\n");
  auto c = parse_complex(in);
  CHECK(c.p == 3);
  CHECK(c.size() == 7);  // 3 vertices + 3 edges + 1 triangle
  CHECK(!c.is_regular());
}
