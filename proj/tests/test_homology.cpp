#include <doctest.h>

#include <random>

#include "combtop/catalog.hpp"
#include "combtop/homology.hpp"
#include "helpers.hpp"

using namespace combtop;
using testutil::facets;

namespace {

// Independent oracle: dense 0/1 matrices, faces listed by brute force over
// vertex subsets, rank by plain Gaussian elimination.
int dense_rank(std::vector<std::vector<int>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && m[r][c])
        for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[static_cast<std::size_t>(rank)][j];
    ++rank;
  }
  return rank;
}

std::vector<int> naive_reduced_betti(const SimplicialComplex& k) {
  const int d = k.dim();
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(d + 1));
  const std::uint64_t vmask = k.vertex_set().bits();
  for (std::uint64_t s = vmask; s != 0; s = (s - 1) & vmask) {
    const Face f = Face::from_bits(s);
    for (Face g : k.facets())
      if (f.is_subset_of(g)) {
        by_dim[static_cast<std::size_t>(f.dim())].push_back(f);
        break;
      }
  }
  // rank of ∂_q for q = 0..d, with ∂_0 the augmentation.
  std::vector<int> rk(static_cast<std::size_t>(d + 2), 0);
  rk[0] = by_dim[0].empty() ? 0 : 1;
  for (int q = 1; q <= d; ++q) {
    const auto& rows = by_dim[static_cast<std::size_t>(q - 1)];
    const auto& cols = by_dim[static_cast<std::size_t>(q)];
    std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r].is_subset_of(cols[c])) m[r][c] = 1;
    rk[static_cast<std::size_t>(q)] = dense_rank(m);
  }
  std::vector<int> b;
  for (int q = 0; q <= d; ++q)
    b.push_back(static_cast<int>(by_dim[static_cast<std::size_t>(q)].size()) - rk[static_cast<std::size_t>(q)] -
                rk[static_cast<std::size_t>(q + 1)]);
  return b;
}

SimplicialComplex torus7() {
  std::vector<Face> fs;
  for (int i = 0; i < 7; ++i) {
    fs.push_back(Face{i, (i + 1) % 7, (i + 3) % 7});
    fs.push_back(Face{i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_facets(fs);
}

}  // namespace

TEST_CASE("reduced Betti numbers of known spaces") {
  for (int d = 0; d <= 4; ++d) {
    std::vector<int> e(static_cast<std::size_t>(d + 1), 0);
    e.back() = 1;
    CHECK(reduced_betti(standard_sphere(d)).reduced_betti == e);
    CHECK(is_z2_homology_sphere(standard_sphere(d), d));
    CHECK(is_z2_acyclic(standard_ball(d)));
  }
  CHECK(reduced_betti(catalog::complex("RP2_6")).reduced_betti == std::vector<int>{0, 1, 1});
  CHECK(reduced_betti(torus7()).reduced_betti == std::vector<int>{0, 2, 1});
  CHECK(reduced_betti(facets({{1}, {2}, {3}})).reduced_betti == std::vector<int>{2});
  CHECK(is_z2_acyclic(catalog::complex("DunceHat8")));
  CHECK_FALSE(is_z2_acyclic(SimplicialComplex()));
  CHECK_FALSE(is_z2_homology_sphere(catalog::complex("RP2_6"), 2));
}

TEST_CASE("bit-packed elimination agrees with a dense oracle") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const int n = 4 + t % 5;
    const auto k = testutil::random_pure(n, 1 + t % 3, 0.2 + 0.05 * (t % 7), rng);
    REQUIRE_MESSAGE(reduced_betti(k).reduced_betti == naive_reduced_betti(k), k.canonical_encoding());
  }
  for (const auto& name : catalog::names()) {
    const auto& k = catalog::complex(name);
    CHECK_MESSAGE(reduced_betti(k).reduced_betti == naive_reduced_betti(k), name);
  }
}

TEST_CASE("boundary of a boundary vanishes") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto k = testutil::random_pure(7, 3, 0.3, rng);
    for (int q = 2; q <= k.dim(); ++q) CHECK((boundary_matrix(k, q - 1) * boundary_matrix(k, q)).is_zero());
  }
  CHECK_THROWS_AS(boundary_matrix(standard_sphere(2), 3), Error);
}

TEST_CASE("Euler characteristic equals the alternating Betti sum") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const auto k = testutil::random_pure(7, 1 + t % 3, 0.35, rng);
    const auto b = reduced_betti(k).reduced_betti;
    std::int64_t alt = 1;
    for (std::size_t q = 0; q < b.size(); ++q) alt += (q % 2 ? -1 : 1) * b[q];
    REQUIRE(alt == k.euler_characteristic());
  }
}

TEST_CASE("Gf2Matrix rank") {
  Gf2Matrix m(3, 130);
  m.set(0, 0, true);
  m.set(1, 129, true);
  m.set(2, 0, true);
  m.set(2, 129, true);
  CHECK(m.rank() == 2);
  CHECK(m.get(1, 129));
  m.set(1, 129, false);
  CHECK(m.rank() == 2);
}
