#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combtop/bistellar.hpp"
#include "combtop/collapse.hpp"
#include "combtop/complex.hpp"
#include "combtop/homology.hpp"

namespace combtop {

enum class Tristate { yes, no, inconclusive };
const char* to_string(Tristate t);

struct ManifoldVerdict {
  Tristate status = Tristate::inconclusive;
  /// One line per vertex for yes; the reason for no / inconclusive.
  std::vector<std::string> evidence;
  std::optional<Face> failure_face;
};

/// Combinatorial d-manifold check: every vertex link is a combinatorial
/// (d-1)-sphere. Exact for d <= 3; for d >= 4 the links are certified
/// recursively or reduced by flip search, otherwise inconclusive.
ManifoldVerdict is_combinatorial_manifold(const SimplicialComplex& k);

/// Same, with vertex links allowed to be combinatorial (d-1)-balls and at
/// least one of them a ball. Exact for d <= 3, inconclusive above.
ManifoldVerdict is_combinatorial_manifold_with_boundary(const SimplicialComplex& k);

/// Exact for d <= 2 (closed connected surface with χ = 2 when d = 2).
bool is_combinatorial_sphere_low_dim(const SimplicialComplex& k);

enum class BallPolicy { facet, greedy };

struct InducedBall {
  Face vertices;
  SimplicialComplex ball;
  std::string evidence;
};

/// facet: the first facet σ (lex order) with M[σ] = Δ^d.
/// greedy: starts from that facet and adds the smallest vertex keeping M[U]
/// a collapsible combinatorial manifold with boundary, until no vertex can
/// be added. Greedy needs d <= 3.
std::optional<InducedBall> find_induced_ball(const SimplicialComplex& m, BallPolicy policy = BallPolicy::facet);

enum class SphereVerdict { combinatorial_sphere, inconclusive, precondition_failed };
const char* to_string(SphereVerdict v);

struct SphereCertificate {
  SphereVerdict verdict = SphereVerdict::inconclusive;
  std::string reason;
  int dimension = -1;
  std::optional<InducedBall> ball;
  SimplicialComplex complement;
  BettiVector complement_betti;
  std::optional<CollapseCertificate> collapse;
};

struct CertifyOptions {
  bool assume_manifold = false;
  BallPolicy policy = BallPolicy::facet;
  std::uint64_t collapse_budget = kDefaultCollapseBudget;
};

/// manifold check → Z₂-homology sphere → induced ball X1 with n <= m + 7 →
/// L = C(X1, M) must be Z₂-acyclic (a failure throws InvariantViolation) →
/// exhaustive collapse of L. Never answers combinatorial_sphere otherwise.
SphereCertificate certify_sphere(const SimplicialComplex& m, const CertifyOptions& options = {});

/// Rechecks a combinatorial_sphere certificate against M from scratch.
bool verify_sphere_certificate(const SimplicialComplex& m, const SphereCertificate& cert,
                               bool assume_manifold = false);

enum class VertexBoundOutcome { sphere_by_contrapositive, no_proper_move, inconclusive };
const char* to_string(VertexBoundOutcome o);

struct VertexBoundResult {
  VertexBoundOutcome outcome = VertexBoundOutcome::inconclusive;
  std::optional<MoveDescriptor> witness;
  std::string reason;
};

/// For a (d+9)-vertex combinatorial manifold that is a Z₂-homology d-sphere:
/// any proper bistellar move makes it a combinatorial sphere. Throws
/// "bound mismatch" when |V(M)| != d + 9.
VertexBoundResult corollary4_classify(const SimplicialComplex& m);

}  // namespace combtop
