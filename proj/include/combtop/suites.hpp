#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combtop/collapse.hpp"
#include "combtop/complex.hpp"

namespace combtop::suites {

struct SuiteResult {
  std::string name;
  std::uint64_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return checked > 0 && failures.empty(); }
};

/// A combinatorial d-sphere from a seeded random bistellar walk on S^d_{d+2}
/// with at most max_vertices vertices.
SimplicialComplex random_sphere(int d, int max_vertices, std::uint64_t seed, int steps = 60);

/// decompose() on `count` random (Y, Y1) pairs: Y a random sphere or a
/// catalog pseudomanifold, Y1 a proper, pure, full-dimensional induced
/// subcomplex.
SuiteResult decomposition_suite(int count, std::uint64_t seed);

/// For random spheres and induced balls X1 (facets and greedy balls), both
/// C(X1, X) and N(C(X1, X), X) are Z₂-acyclic.
SuiteResult ball_complement_suite(int count, std::uint64_t seed);

/// κ_A(κ_A(X)) = X for every admissible A on every pure catalog entry of
/// dimension >= 1.
SuiteResult involution_suite();

/// ∂_{q-1} ∘ ∂_q = 0 and the Euler-Betti identity on the catalog.
SuiteResult boundary_suite();

/// Reduced Betti numbers are unchanged by every step of the certificate.
SuiteResult collapse_homology_suite(const SimplicialComplex& k, const CollapseCertificate& cert);

/// The six worked bistellar-move examples, items (a)-(f), on the catalog labelings.
SuiteResult move_example_suite();

}  // namespace combtop::suites
