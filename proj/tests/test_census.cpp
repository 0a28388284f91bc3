#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "combtop/catalog.hpp"
#include "combtop/census.hpp"
#include "combtop/collapse.hpp"
#include "combtop/homology.hpp"
#include "combtop/isomorphism.hpp"
#include "combtop/structure.hpp"
#include "helpers.hpp"

using namespace combtop;

namespace {

// Canonical form by trying all 720 permutations of six labels.
std::vector<std::uint64_t> brute_canonical(const std::vector<Face>& tris) {
  std::array<int, 6> p{0, 1, 2, 3, 4, 5};
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> img;
    for (Face t : tris) {
      std::uint64_t b = 0;
      t.for_each_vertex([&](int v) { b |= std::uint64_t{1} << p[static_cast<std::size_t>(v)]; });
      img.push_back(b);
    }
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = img;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

bool satisfies(const SimplicialComplex& k, RidgeConstraint c) {
  if (k.dim() != 2 || !k.is_pure()) return false;
  for (const auto& [e, n] : ridge_degrees(k)) {
    if (c == RidgeConstraint::exactly_two && n != 2) return false;
    if (c == RidgeConstraint::even && n % 2 != 0) return false;
    if (c == RidgeConstraint::one_or_two && n != 1 && n != 2) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pruned census matches an unpruned sweep on six vertices") {
  const auto tris = subsets_of_size(Face::prefix(6), 3);
  REQUIRE(tris.size() == 20);
  const auto edges = subsets_of_size(Face::prefix(6), 2);
  std::set<std::vector<std::uint64_t>> classes;
  std::uint64_t labeled = 0;
  for (std::uint32_t mask = 1; mask < (1U << 20); ++mask) {
    std::vector<Face> chosen;
    for (int i = 0; i < 20; ++i)
      if (mask >> i & 1U) chosen.push_back(tris[static_cast<std::size_t>(i)]);
    bool ok = true;
    for (Face e : edges) {
      int n = 0;
      for (Face t : chosen) n += e.is_subset_of(t);
      if (n != 0 && n != 2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    ++labeled;
    classes.insert(brute_canonical(chosen));
  }
  CHECK(classes.size() == 5);

  const auto r = enumerate_census(CensusSpec::prop_2_2());
  CHECK(r.representatives.size() == classes.size());

  auto off = CensusSpec::prop_2_2();
  off.symmetry_breaking = false;
  const auto all = enumerate_census(off);
  CHECK(all.labeled_count == labeled);
  CHECK(all.labeled_count > r.labeled_count);
  CHECK(all.representatives == r.representatives);
}

TEST_CASE("six-vertex census is the expected list") {
  const auto r = enumerate_census(CensusSpec::prop_2_2());
  const auto m = match_catalog(r.representatives, {"S2_4", "S1_3*S0_2", "octahedron", "RP2_6", "Sigma1"});
  CHECK(m.perfect());
  for (const auto& k : r.representatives) CHECK(satisfies(k, RidgeConstraint::exactly_two));
}

TEST_CASE("seven-vertex census is the expected list and thread-independent") {
  auto spec = CensusSpec::prop_2_3();
  const auto one = enumerate_census(spec);
  spec.threads = 4;
  const auto four = enumerate_census(spec);
  CHECK(one.representatives == four.representatives);
  CHECK(one.labeled_count == four.labeled_count);
  CHECK(one.classes_per_f_vector == four.classes_per_f_vector);
  const auto m = match_catalog(one.representatives,
                               {"S1_5*S0_2", "Sigma2", "Sigma3", "Sigma4", "Sigma5", "Upsilon1", "Upsilon2"});
  CHECK(m.perfect());
  for (const auto& k : one.representatives) {
    CHECK(satisfies(k, RidgeConstraint::exactly_two));
    CHECK(k.num_vertices() == 7);
    CHECK(k.num_facets() <= 10);
  }
}

TEST_CASE("a tighter facet cap gives a subset of the classes") {
  auto spec = CensusSpec::prop_2_3();
  spec.max_facets = 8;
  const auto r = enumerate_census(spec);
  const auto m = match_catalog(r.representatives,
                               {"S1_5*S0_2", "Sigma2", "Sigma3", "Sigma4", "Sigma5", "Upsilon1", "Upsilon2"});
  CHECK(m.unexpected.empty());
  CHECK(m.matched.count("Upsilon1") == 1);
  CHECK(m.missing.size() == 6);
}

TEST_CASE("even-degree census is the named list plus sphere pairs") {
  const auto r = enumerate_census(CensusSpec::lemma_3_3());
  const auto m = match_complexes(r.representatives, lemma_3_3_expected());
  CHECK(m.perfect());
  for (const auto& k : r.representatives) CHECK(satisfies(k, RidgeConstraint::even));
  // Every even-degree complex here is Z2-closed: its top cycle is the sum of all triangles.
  for (const auto& k : r.representatives) CHECK(reduced_betti(k).reduced_betti.back() >= 1);
}

TEST_CASE("sphere pair unions share no triangle") {
  const auto u = sphere_pair_unions(7, 10);
  CHECK_FALSE(u.empty());
  for (const auto& k : u) {
    CHECK((k.num_facets() == 8 || k.num_facets() == 10));
    CHECK(satisfies(k, RidgeConstraint::even));
  }
}

TEST_CASE("one-or-two constraint") {
  CensusSpec spec;
  spec.max_vertices = 5;
  spec.max_facets = 6;
  spec.constraint = RidgeConstraint::one_or_two;
  const auto r = enumerate_census(spec);
  CHECK_FALSE(r.representatives.empty());
  for (const auto& k : r.representatives) CHECK(satisfies(k, RidgeConstraint::one_or_two));
  // A single triangle is one of them.
  const auto tri = standard_ball(2);
  CHECK(std::any_of(r.representatives.begin(), r.representatives.end(),
                    [&](const SimplicialComplex& k) { return are_isomorphic(k, tri).has_value(); }));
}

TEST_CASE("invalid specs are rejected") {
  CensusSpec spec;
  spec.max_vertices = 8;
  CHECK_THROWS_AS(enumerate_census(spec), Error);
  spec = CensusSpec{};
  spec.dimension = 3;
  CHECK_THROWS_AS(enumerate_census(spec), Error);
}

TEST_CASE("random acyclic samples collapse") {
  const auto r = theorem1_sample_test(3000, 77, 2);
  CHECK(r.tested == 3000);
  CHECK(r.acyclic_found > 500);
  CHECK(r.counterexamples.empty());
  CHECK(r.unresolved.empty());
  CHECK(r.collapsible_count == r.acyclic_found);
  CHECK(r.euler_violations == 0);
  const auto again = theorem1_sample_test(3000, 77, 1);
  CHECK(again.acyclic_found == r.acyclic_found);
  CHECK(random_small_complex(77, 5) == random_small_complex(77, 5));
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto k = random_small_complex(3, i);
    CHECK(k.num_vertices() <= 7);
    CHECK((k.dim() == 2 || k.dim() == 3));
  }
}
