#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combtop/complex.hpp"

namespace combtop {

/// Largest vertex count accepted by the exhaustive isomorphism search.
inline constexpr int kIsomorphismVertexCap = 12;

/// Returns π with π(K) = L, or nullopt. Exhaustive backtracking over vertex
/// bijections, pruned by per-vertex link f-vectors and 1-skeleton adjacency.
/// Throws "isomorphism search cap" above kIsomorphismVertexCap vertices.
std::optional<Relabeling> are_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l);

/// A relabeling-invariant fingerprint: f-vector plus the sorted multiset of
/// vertex link f-vectors. Isomorphic complexes have equal fingerprints.
std::string isomorphism_invariant(const SimplicialComplex& k);

}  // namespace combtop
