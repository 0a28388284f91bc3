#include <doctest.h>

#include "combtop/catalog.hpp"
#include "combtop/structure.hpp"
#include "combtop/suites.hpp"
#include "helpers.hpp"

using namespace combtop;
using testutil::facets;

TEST_CASE("pseudomanifold predicates") {
  CHECK(is_weak_pseudomanifold(catalog::complex("Upsilon1")));
  CHECK_FALSE(is_pseudomanifold(catalog::complex("Upsilon1")));
  CHECK(is_pseudomanifold(catalog::complex("RP2_6")));
  CHECK_FALSE(is_weak_pseudomanifold(catalog::complex("R")));
  CHECK_FALSE(is_weak_pseudomanifold(catalog::complex("DunceHat8")));
  CHECK(is_weak_pm_with_boundary(standard_ball(2)));
  CHECK_FALSE(is_weak_pm_with_boundary(standard_sphere(2)));
  // Three triangles on one edge: neither.
  const auto fan = facets({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
  CHECK_FALSE(is_weak_pseudomanifold(fan));
  CHECK_FALSE(is_weak_pm_with_boundary(fan));
  CHECK_FALSE(is_weak_pseudomanifold(facets({{1, 2, 3}, {3, 4}})));
  CHECK(is_weak_pseudomanifold(standard_sphere(0)));
}

TEST_CASE("ridge degrees of a tetrahedron boundary") {
  const auto rd = ridge_degrees(standard_sphere(2));
  CHECK(rd.size() == 6);
  for (const auto& [f, n] : rd) CHECK(n == 2);
}

TEST_CASE("boundary complex") {
  CHECK(boundary_complex(standard_ball(2, Face{1, 2, 3})) == cycle(3, 1));
  const auto disk = facets({{1, 2, 3}, {1, 3, 4}});
  CHECK(boundary_complex(disk) == cycle(std::vector<int>{1, 2, 3, 4}));
  CHECK_THROWS_AS(boundary_complex(standard_sphere(2)), Error);
}

TEST_CASE("neighbourhood, complement, induced") {
  const auto& oct = catalog::complex("octahedron");
  const auto ball = induced(oct, Face{1, 3, 5});
  CHECK(ball == standard_ball(2, Face{1, 3, 5}));
  CHECK(is_induced(ball, oct));
  CHECK_FALSE(is_induced(facets({{1, 3}, {3, 5}}), oct));
  const auto l = simplicial_complement(ball, oct);
  CHECK(l == standard_ball(2, Face{2, 4, 6}));
  const auto n = simplicial_neighbourhood(l, oct);
  CHECK(n.num_facets() == 7);
}

TEST_CASE("decomposition along an induced ball") {
  const auto& s = catalog::complex("Sigma2");
  const auto& y1f = s.facets().front();
  const auto y1 = induced(s, y1f);
  const auto dec = decompose(s, y1);
  CHECK(dec.y1 == y1);
  CHECK(dec.l == simplicial_complement(y1, s));
  CHECK(dec.y2 == simplicial_neighbourhood(dec.l, s));
  CHECK(dec.shared_boundary == boundary_complex(y1));
  CHECK(dec.y1.num_facets() + dec.y2.num_facets() == s.num_facets());
  // Not induced: rejected as a precondition.
  CHECK_THROWS_AS(decompose(catalog::complex("octahedron"), facets({{1, 3, 5}, {1, 3, 6}, {2, 3, 5}})), Error);
}

TEST_CASE("decomposition conclusions on random pairs") {
  const auto r = suites::decomposition_suite(30, 99);
  CHECK(r.checked >= 25);
  for (const auto& f : r.failures) FAIL_CHECK(f);
}

TEST_CASE("complement of an induced ball in a sphere is acyclic") {
  const auto r = suites::ball_complement_suite(20, 5);
  CHECK(r.passed());
  for (const auto& f : r.failures) FAIL_CHECK(f);
}
