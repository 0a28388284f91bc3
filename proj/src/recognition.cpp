#include "combtop/recognition.hpp"

#include <algorithm>

#include "combtop/structure.hpp"

namespace combtop {

const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::yes: return "yes";
    case Tristate::no: return "no";
    case Tristate::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(SphereVerdict v) {
  switch (v) {
    case SphereVerdict::combinatorial_sphere: return "combinatorial-sphere";
    case SphereVerdict::inconclusive: return "inconclusive";
    case SphereVerdict::precondition_failed: return "precondition-failed";
  }
  return "?";
}

const char* to_string(VertexBoundOutcome o) {
  switch (o) {
    case VertexBoundOutcome::sphere_by_contrapositive: return "sphere-by-contrapositive";
    case VertexBoundOutcome::no_proper_move: return "no-proper-move";
    case VertexBoundOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

int vertex_degree_1d(const SimplicialComplex& k, int v) {
  int n = 0;
  for (Face f : k.facets()) n += f.contains(v);
  return n;
}

bool is_cycle(const SimplicialComplex& k) {
  if (k.dim() != 1 || !k.is_pure() || !is_connected(k)) return false;
  bool ok = true;
  k.vertex_set().for_each_vertex([&](int v) { ok = ok && vertex_degree_1d(k, v) == 2; });
  return ok;
}

bool is_path(const SimplicialComplex& k) {
  if (k.dim() != 1 || !k.is_pure() || !is_connected(k)) return false;
  int ends = 0;
  bool ok = true;
  k.vertex_set().for_each_vertex([&](int v) {
    const int deg = vertex_degree_1d(k, v);
    ok = ok && deg >= 1 && deg <= 2;
    ends += deg == 1;
  });
  return ok && ends == 2;
}

// Closed (want_boundary = false) or bounded connected surface check with the
// Euler characteristic of S² or D².
bool is_surface_sphere_or_disk(const SimplicialComplex& k, bool want_boundary) {
  if (k.dim() != 2 || !k.is_pure() || !is_connected(k)) return false;
  bool ok = true;
  bool saw_path = false;
  k.vertex_set().for_each_vertex([&](int v) {
    if (!ok) return;
    const SimplicialComplex lk = link(k, Face::single(v));
    if (is_cycle(lk)) return;
    if (want_boundary && is_path(lk)) {
      saw_path = true;
      return;
    }
    ok = false;
  });
  if (!ok || saw_path != want_boundary) return false;
  return k.euler_characteristic() == (want_boundary ? 1 : 2);
}

bool is_low_dim_ball(const SimplicialComplex& k, int d) {
  switch (d) {
    case 0: return k.num_facets() == 1 && k.dim() == 0;
    case 1: return is_path(k);
    case 2: return is_surface_sphere_or_disk(k, true);
    default: return false;
  }
}

ManifoldVerdict fail(Tristate s, std::string why, std::optional<Face> face = std::nullopt) {
  ManifoldVerdict v;
  v.status = s;
  v.evidence.push_back(std::move(why));
  v.failure_face = face;
  return v;
}

// Link certification above dimension 2 (links of a d >= 4 complex).
Tristate certify_link(const SimplicialComplex& lk, std::string& evidence) {
  const SphereCertificate c = certify_sphere(lk);
  if (c.verdict == SphereVerdict::combinatorial_sphere) {
    evidence = "sphere certificate";
    return Tristate::yes;
  }
  if (c.verdict == SphereVerdict::precondition_failed) {
    evidence = c.reason;
    return Tristate::no;
  }
  if (is_weak_pseudomanifold(lk)) {
    FlipSchedule s;
    s.restarts = 4;
    s.steps = 2000;
    if (flip_search(lk, FlipGoal::reduce_to_standard_sphere(), s, 1)) {
      evidence = "flips to the boundary of a simplex";
      return Tristate::yes;
    }
  }
  evidence = "link not recognised: " + c.reason;
  return Tristate::inconclusive;
}

}  // namespace

bool is_combinatorial_sphere_low_dim(const SimplicialComplex& k) {
  switch (k.dim()) {
    case -1: return true;
    case 0: return k.num_vertices() == 2;
    case 1: return is_cycle(k);
    case 2: return is_surface_sphere_or_disk(k, false);
    default: throw Error("is_combinatorial_sphere_low_dim: dimension above 2");
  }
}

ManifoldVerdict is_combinatorial_manifold(const SimplicialComplex& k) {
  if (k.empty()) return fail(Tristate::no, "void complex");
  if (!k.is_pure()) return fail(Tristate::no, "not pure");
  const int d = k.dim();
  ManifoldVerdict out;
  out.status = Tristate::yes;
  if (d == 0) {
    out.evidence.push_back("0-dimensional");
    return out;
  }
  bool inconclusive = false;
  for (int x : k.vertex_set().vertices()) {
    const Face v = Face::single(x);
    const SimplicialComplex lk = link(k, v);
    const std::string who = "link(" + v.to_string() + ")";
    if (d <= 3) {
      if (!is_combinatorial_sphere_low_dim(lk))
        return fail(Tristate::no, who + " is not a combinatorial " + std::to_string(d - 1) + "-sphere", v);
      out.evidence.push_back(who + " " + (d == 1 ? "two points" : d == 2 ? "cycle" : "2-sphere"));
      continue;
    }
    std::string ev;
    switch (certify_link(lk, ev)) {
      case Tristate::yes: out.evidence.push_back(who + " " + ev); break;
      case Tristate::no: return fail(Tristate::no, who + ": " + ev, v);
      case Tristate::inconclusive:
        if (!inconclusive) out.failure_face = v;
        inconclusive = true;
        out.evidence.push_back(who + " " + ev);
        break;
    }
  }
  if (inconclusive) out.status = Tristate::inconclusive;
  return out;
}

ManifoldVerdict is_combinatorial_manifold_with_boundary(const SimplicialComplex& k) {
  if (k.empty()) return fail(Tristate::no, "void complex");
  if (!k.is_pure()) return fail(Tristate::no, "not pure");
  const int d = k.dim();
  if (d == 0) return fail(Tristate::no, "0-dimensional complexes have no boundary");
  if (d > 3) return fail(Tristate::inconclusive, "dimension above 3");
  ManifoldVerdict out;
  out.status = Tristate::yes;
  bool saw_ball = false;
  for (int x : k.vertex_set().vertices()) {
    const Face v = Face::single(x);
    const SimplicialComplex lk = link(k, v);
    const std::string who = "link(" + v.to_string() + ")";
    if (is_combinatorial_sphere_low_dim(lk)) {
      out.evidence.push_back(who + " sphere");
    } else if (is_low_dim_ball(lk, d - 1)) {
      out.evidence.push_back(who + " ball");
      saw_ball = true;
    } else {
      return fail(Tristate::no, who + " is neither a sphere nor a ball", v);
    }
  }
  if (!saw_ball) return fail(Tristate::no, "no boundary vertex");
  return out;
}

std::optional<InducedBall> find_induced_ball(const SimplicialComplex& m, BallPolicy policy) {
  const int d = m.dim();
  if (d < 0 || !m.is_pure()) return std::nullopt;
  std::optional<InducedBall> out;
  for (Face f : m.facets()) {
    const SimplicialComplex sub = induced(m, f);
    if (sub.num_facets() == 1) {
      out = InducedBall{f, sub, "facet"};
      break;
    }
  }
  if (!out || policy == BallPolicy::facet || d > 3 || d == 0) return out;

  Face u = out->vertices;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x : (m.vertex_set() - u).vertices()) {
      const Face v = Face::single(x);
      const SimplicialComplex cand = induced(m, u | v);
      if (cand.dim() != d || !cand.is_pure()) continue;
      if (is_combinatorial_manifold_with_boundary(cand).status != Tristate::yes) continue;
      if (is_collapsible(cand, 1'000'000).status != CollapseStatus::collapsible) continue;
      u = u | v;
      out = InducedBall{u, cand, "collapsible combinatorial manifold with boundary"};
      grew = true;
      break;
    }
  }
  return out;
}

SphereCertificate certify_sphere(const SimplicialComplex& m, const CertifyOptions& options) {
  SphereCertificate cert;
  cert.dimension = m.dim();
  auto stop = [&cert](SphereVerdict v, std::string why) {
    cert.verdict = v;
    cert.reason = std::move(why);
    return cert;
  };
  if (m.empty()) return stop(SphereVerdict::precondition_failed, "void complex");
  const int d = m.dim();

  if (!options.assume_manifold) {
    const ManifoldVerdict mv = is_combinatorial_manifold(m);
    if (mv.status == Tristate::no)
      return stop(SphereVerdict::precondition_failed, "not a combinatorial manifold: " + mv.evidence.front());
    if (mv.status == Tristate::inconclusive) return stop(SphereVerdict::inconclusive, "manifold check inconclusive");
  }
  if (!is_z2_homology_sphere(m, d)) return stop(SphereVerdict::precondition_failed, "not a Z2-homology sphere");

  cert.ball = find_induced_ball(m, options.policy);
  if (!cert.ball) return stop(SphereVerdict::inconclusive, "no induced ball found");
  const int n = m.num_vertices();
  const int mm = cert.ball->vertices.size();
  if (n > mm + 7)
    return stop(SphereVerdict::inconclusive, "vertex bound exceeded: " + std::to_string(n) + " > " +
                                                 std::to_string(mm) + " + 7");

  cert.complement = simplicial_complement(cert.ball->ball, m);
  if (cert.complement.empty()) return stop(SphereVerdict::precondition_failed, "empty complement");
  if (d >= 1) {
    try {
      decompose(m, cert.ball->ball);
    } catch (const InvariantViolation&) {
      throw;
    } catch (const Error& e) {
      return stop(SphereVerdict::precondition_failed, e.what());
    }
  }
  cert.complement_betti = reduced_betti(cert.complement);
  if (!is_z2_acyclic(cert.complement) || !is_z2_acyclic(simplicial_neighbourhood(cert.complement, m))) {
    if (!options.assume_manifold)
      throw InvariantViolation("complement of an induced ball in a Z2-homology sphere is not Z2-acyclic");
    return stop(SphereVerdict::precondition_failed, "complement not Z2-acyclic (manifold hypothesis fails)");
  }

  CollapseVerdict cv = is_collapsible(cert.complement, options.collapse_budget);
  switch (cv.status) {
    case CollapseStatus::collapsible:
      cert.collapse = std::move(cv.certificate);
      return stop(SphereVerdict::combinatorial_sphere, "complement of an induced ball collapses to a point");
    case CollapseStatus::inconclusive_budget:
      return stop(SphereVerdict::inconclusive, "collapse search budget exhausted");
    case CollapseStatus::not_collapsible_exhausted:
      break;
  }
  return stop(SphereVerdict::inconclusive, "complement is Z2-acyclic but not collapsible");
}

bool verify_sphere_certificate(const SimplicialComplex& m, const SphereCertificate& cert, bool assume_manifold) {
  if (cert.verdict != SphereVerdict::combinatorial_sphere || !cert.ball || !cert.collapse) return false;
  const int d = m.dim();
  if (cert.dimension != d) return false;
  if (!assume_manifold && is_combinatorial_manifold(m).status != Tristate::yes) return false;
  if (!is_z2_homology_sphere(m, d)) return false;

  const InducedBall& b = *cert.ball;
  if (induced(m, b.vertices) != b.ball) return false;
  const bool simplex = b.ball.num_facets() == 1 && b.ball.dim() == d;
  if (!simplex) {
    if (is_combinatorial_manifold_with_boundary(b.ball).status != Tristate::yes) return false;
    if (is_collapsible(b.ball).status != CollapseStatus::collapsible) return false;
  }
  if (m.num_vertices() > b.vertices.size() + 7) return false;
  if (cert.complement != simplicial_complement(b.ball, m)) return false;
  if (reduced_betti(cert.complement) != cert.complement_betti || !is_z2_acyclic(cert.complement)) return false;
  const CollapseCertificate& c = *cert.collapse;
  if (c.terminal.num_facets() != 1 || c.terminal.dim() != 0) return false;
  return verify_certificate(cert.complement, c);
}

VertexBoundResult corollary4_classify(const SimplicialComplex& m) {
  const int d = m.dim();
  if (m.num_vertices() != d + 9)
    throw Error("bound mismatch: " + std::to_string(m.num_vertices()) + " vertices, expected " +
                std::to_string(d + 9));
  VertexBoundResult r;
  if (is_combinatorial_manifold(m).status != Tristate::yes) {
    r.reason = "manifold hypothesis not verified";
    return r;
  }
  if (!is_z2_homology_sphere(m, d)) {
    r.reason = "not a Z2-homology sphere";
    return r;
  }
  const auto moves = enumerate_moves(m, {MoveClass::proper_bistellar});
  if (moves.empty()) {
    r.outcome = VertexBoundOutcome::no_proper_move;
    r.reason = "no proper bistellar move";
    return r;
  }
  r.outcome = VertexBoundOutcome::sphere_by_contrapositive;
  r.witness = moves.front();
  r.reason = "admits a proper bistellar " + std::to_string(moves.front().i) + "-move";
  return r;
}

}  // namespace combtop
