#include <doctest.h>

#include <random>

#include "combtop/catalog.hpp"
#include "combtop/collapse.hpp"
#include "combtop/homology.hpp"
#include "combtop/suites.hpp"
#include "helpers.hpp"

using namespace combtop;
using testutil::facets;

TEST_CASE("free faces") {
  const auto k = facets({{1, 2, 3}, {3, 4}});
  const auto ff = free_faces(k);
  // edges 12, 13, 23 of the triangle, and vertex 4 of the dangling edge
  REQUIRE(ff.size() == 4);
  CHECK(ff[0].free_face == Face{1, 2});
  CHECK(ff[0].coface == Face{1, 2, 3});
  CHECK(free_faces(catalog::complex("DunceHat8")).empty());
  CHECK(free_faces(standard_sphere(2)).empty());
  CHECK(elementary_collapse(k, {Face{4}, Face{3, 4}}) == facets({{1, 2, 3}}));
  CHECK_THROWS_AS(elementary_collapse(k, {Face{3}, Face{3, 4}}), Error);
}

TEST_CASE("simplices and cones collapse with valid certificates") {
  for (int d = 0; d <= 4; ++d) {
    const auto v = is_collapsible(standard_ball(d));
    REQUIRE(v.status == CollapseStatus::collapsible);
    REQUIRE(v.certificate);
    CHECK(verify_certificate(standard_ball(d), *v.certificate));
    CHECK(v.certificate->terminal.num_vertices() == 1);
  }
  const auto c = cone(catalog::complex("RP2_6"), 9);
  const auto v = is_collapsible(c);
  REQUIRE(v.status == CollapseStatus::collapsible);
  CHECK(verify_certificate(c, *v.certificate));
}

TEST_CASE("dunce hat is acyclic but exhaustively not collapsible") {
  const auto& dh = catalog::complex("DunceHat8");
  CHECK(dh.num_vertices() == 8);
  CHECK(dh.euler_characteristic() == 1);
  const auto v = is_collapsible(dh);
  CHECK(v.status == CollapseStatus::not_collapsible_exhausted);
  CHECK_FALSE(v.certificate);
}

TEST_CASE("tampered certificates are rejected") {
  const auto k = standard_ball(2);
  auto cert = *is_collapsible(k).certificate;
  CHECK(verify_certificate(k, cert));
  auto reordered = cert;
  std::swap(reordered.steps.front(), reordered.steps.back());
  CHECK_FALSE(verify_certificate(k, reordered));
  auto truncated = cert;
  truncated.steps.pop_back();
  CHECK_FALSE(verify_certificate(k, truncated));
  auto wrong_end = cert;
  wrong_end.terminal = facets({{7}});
  CHECK_FALSE(verify_certificate(k, wrong_end));
}

TEST_CASE("collapse onto a subcomplex") {
  const auto disk = facets({{1, 2, 3}, {1, 3, 4}});
  const auto edge = facets({{1, 3}});
  const auto v = collapses_to(disk, edge);
  REQUIRE(v.status == CollapseStatus::collapsible);
  CHECK(v.certificate->terminal == edge);
  CHECK(verify_certificate(disk, *v.certificate));
  // A disk does not collapse onto its boundary circle.
  CHECK(collapses_to(disk, facets({{1, 2}, {2, 3}, {3, 4}, {1, 4}})).status ==
        CollapseStatus::not_collapsible_exhausted);
  CHECK_THROWS(collapses_to(disk, facets({{5}})));
}

TEST_CASE("a tiny budget is inconclusive, never negative") {
  const auto mob = facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}});
  CHECK(is_collapsible(mob, 1).status == CollapseStatus::inconclusive_budget);
  CHECK(is_collapsible(mob).status == CollapseStatus::not_collapsible_exhausted);
}

TEST_CASE("collapsible complexes are acyclic and collapses preserve homology") {
  std::mt19937_64 rng(13);
  int collapsible = 0;
  for (int t = 0; t < 300; ++t) {
    const auto k = testutil::random_pure(6, 2, 0.15 + 0.05 * (t % 6), rng);
    const auto v = is_collapsible(k);
    REQUIRE(v.status != CollapseStatus::inconclusive_budget);
    if (v.status != CollapseStatus::collapsible) continue;
    ++collapsible;
    CHECK(is_z2_acyclic(k));
    CHECK(verify_certificate(k, *v.certificate));
    const auto r = suites::collapse_homology_suite(k, *v.certificate);
    CHECK_MESSAGE(r.passed(), k.canonical_encoding());
  }
  CHECK(collapsible > 20);
}

TEST_CASE("verdict does not depend on vertex labels") {
  std::mt19937_64 rng(17);
  for (const char* name : {"DunceHat8", "D3_4", "S2_4", "Sigma3"}) {
    const auto& k = catalog::complex(name);
    const auto base = is_collapsible(k).status;
    for (int t = 0; t < 3; ++t) CHECK(is_collapsible(relabel(k, testutil::random_relabeling(k, rng))).status == base);
  }
}
