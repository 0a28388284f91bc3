#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "combtop/complex.hpp"

namespace combtop {

/// Removing `free_face` together with its unique proper coface.
struct CollapseStep {
  Face free_face;
  Face coface;

  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

/// Replaying `steps` from the start complex is legal at every step and ends
/// exactly at `terminal`.
struct CollapseCertificate {
  std::vector<CollapseStep> steps;
  SimplicialComplex terminal;
};

enum class CollapseStatus { collapsible, not_collapsible_exhausted, inconclusive_budget };

struct CollapseVerdict {
  CollapseStatus status = CollapseStatus::not_collapsible_exhausted;
  std::uint64_t nodes_explored = 0;
  /// Present exactly when status == collapsible.
  std::optional<CollapseCertificate> certificate;
};

inline constexpr std::uint64_t kDefaultCollapseBudget = 50'000'000;

/// Every free pair (τ, σ) of K, sorted lexicographically by τ.
std::vector<CollapseStep> free_faces(const SimplicialComplex& k);

/// K ∖ {τ, σ}. Throws "not a free pair" unless `step` is a free pair of K.
SimplicialComplex elementary_collapse(const SimplicialComplex& k, const CollapseStep& step);

/// Exhaustive depth-first search for a collapse to a single vertex. Free
/// pairs of larger dimension are tried first; failed intermediate complexes
/// are memoized. "Not collapsible" is only reported after the whole reachable
/// state space is exhausted.
CollapseVerdict is_collapsible(const SimplicialComplex& k, std::uint64_t budget = kDefaultCollapseBudget);

/// Same search, never removing a face of L; the terminal complex is L.
/// Throws unless L is a non-empty subcomplex of K.
CollapseVerdict collapses_to(const SimplicialComplex& k, const SimplicialComplex& l,
                             std::uint64_t budget = kDefaultCollapseBudget);

/// Replays the certificate on an explicit face set, checking freeness at
/// every step and equality with the terminal complex at the end. Shares no
/// code with the search.
bool verify_certificate(const SimplicialComplex& k, const CollapseCertificate& cert);

const char* to_string(CollapseStatus s);

}  // namespace combtop
