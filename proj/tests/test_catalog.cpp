#include <doctest.h>

#include "combtop/bistellar.hpp"
#include "combtop/catalog.hpp"
#include "combtop/homology.hpp"
#include "combtop/isomorphism.hpp"
#include "combtop/structure.hpp"
#include "helpers.hpp"

using namespace combtop;

TEST_CASE("every entry loads and matches its record") {
  for (const auto& name : catalog::names()) {
    const auto& e = catalog::get(name);
    CHECK(e.name == name);
    CHECK(e.complex.f_vector() == e.expected.f);
    CHECK(reduced_betti(e.complex) == e.expected.betti);
    CHECK(is_weak_pseudomanifold(e.complex) == e.expected.weak_pm);
    CHECK(is_pseudomanifold(e.complex) == e.expected.pm);
  }
}

TEST_CASE("names are unique and unknown names list the valid ones") {
  const auto& n = catalog::names();
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j) CHECK(n[i] != n[j]);
  CHECK_THROWS_WITH_AS(catalog::get("nope"), doctest::Contains("Sigma1"), Error);
}

TEST_CASE("projective plane record") {
  const auto& rp = catalog::complex("RP2_6");
  CHECK(rp.num_facets() == 10);
  CHECK(rp.num_vertices() == 6);
  CHECK(reduced_betti(rp).reduced_betti == std::vector<int>{0, 1, 1});
}

TEST_CASE("seven-vertex weak pseudomanifolds are pairwise distinct") {
  const std::vector<std::string> ns = {"Sigma2", "Sigma3", "Sigma4", "Sigma5", "Upsilon1", "Upsilon2", "S1_5*S0_2"};
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = i + 1; j < ns.size(); ++j)
      CHECK_MESSAGE(!are_isomorphic(catalog::complex(ns[i]), catalog::complex(ns[j])), ns[i], " vs ", ns[j]);
  CHECK_FALSE(are_isomorphic(catalog::complex("Sigma1"), catalog::complex("octahedron")));
}

TEST_CASE("the first wedge is two tetrahedron boundaries sharing a vertex") {
  const auto expected = SimplicialComplex::generated_by(
      [] {
        auto a = standard_sphere(2, Face{1, 2, 3, 7}).facets();
        const auto b = standard_sphere(2, Face{4, 5, 6, 7}).facets();
        a.insert(a.end(), b.begin(), b.end());
        return a;
      }());
  CHECK(are_isomorphic(catalog::complex("Upsilon1"), expected));
  CHECK(catalog::ridge_components(catalog::complex("Upsilon1")).size() == 2);
  CHECK(catalog::ridge_components(catalog::complex("Sigma2")).size() == 1);
}

TEST_CASE("R is one move away from the projective plane") {
  CHECK(apply_generalized_move(catalog::complex("RP2_6"), Face{1, 2, 5, 6}) == catalog::complex("R"));
  CHECK(catalog::complex("R").f_vector().counts == std::vector<std::int64_t>{6, 14, 10});
}

TEST_CASE("dunce hat record") {
  const auto& dh = catalog::complex("DunceHat8");
  CHECK(dh.num_vertices() == 8);
  CHECK(dh.euler_characteristic() == 1);
  CHECK(is_z2_acyclic(dh));
  CHECK(is_connected(dh));
}

TEST_CASE("small spheres") {
  const auto s = catalog::small_spheres();
  REQUIRE(s.size() == 2);
  CHECK(s[0].num_vertices() == 4);
  CHECK(s[1].num_vertices() == 5);
}
