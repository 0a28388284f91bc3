#include "combtop/suites.hpp"

#include <random>

#include "combtop/bistellar.hpp"
#include "combtop/catalog.hpp"
#include "combtop/homology.hpp"
#include "combtop/recognition.hpp"
#include "combtop/structure.hpp"

namespace combtop::suites {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

SimplicialComplex random_sphere(int d, int max_vertices, std::uint64_t seed, int steps) {
  RandomWalkOptions opt;
  opt.steps = steps;
  opt.max_vertices = max_vertices;
  SimplicialComplex end;
  random_bistellar_walk(standard_sphere(d), opt, seed, &end);
  return end;
}

SuiteResult decomposition_suite(int count, std::uint64_t seed) {
  SuiteResult r{"decomposition", 0, {}};
  const std::vector<std::string> fixtures = {"RP2_6", "Sigma1", "Sigma2", "Sigma5", "octahedron", "S3_5"};
  for (int i = 0; i < count; ++i) {
    auto rng = make_rng(seed, static_cast<std::uint64_t>(i));
    SimplicialComplex y;
    if (i % 3 == 2) {
      y = catalog::complex(fixtures[static_cast<std::size_t>(i / 3) % fixtures.size()]);
    } else {
      const int d = 2 + (i % 2);
      y = random_sphere(d, d + 8, rng());
    }
    const auto& facets = y.facets();
    // Grow a random vertex set from a facet until the induced complex is a
    // proper, pure, full-dimensional subcomplex.
    bool done = false;
    for (int attempt = 0; attempt < 50 && !done; ++attempt) {
      Face u = facets[std::uniform_int_distribution<std::size_t>(0, facets.size() - 1)(rng)];
      for (int v : (y.vertex_set() - u).vertices()) {
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) u = u.with(v);
      }
      const SimplicialComplex y1 = induced(y, u);
      if (!y1.is_pure() || y1.dim() != y.dim() || y1 == y) continue;
      done = true;
      ++r.checked;
      try {
        decompose(y, y1);
      } catch (const std::exception& e) {
        r.failures.push_back(y.canonical_encoding() + " / " + u.to_string() + ": " + e.what());
      }
    }
  }
  return r;
}

SuiteResult ball_complement_suite(int count, std::uint64_t seed) {
  SuiteResult r{"ball-complement-acyclic", 0, {}};
  for (int i = 0; i < count; ++i) {
    auto rng = make_rng(seed, static_cast<std::uint64_t>(i));
    const int d = 2 + (i % 2);
    const SimplicialComplex x = random_sphere(d, d + 8, rng());
    for (BallPolicy p : {BallPolicy::facet, BallPolicy::greedy}) {
      const auto ball = find_induced_ball(x, p);
      if (!ball) {
        r.failures.push_back(x.canonical_encoding() + ": no induced ball");
        continue;
      }
      ++r.checked;
      const SimplicialComplex l = simplicial_complement(ball->ball, x);
      const SimplicialComplex x2 = simplicial_neighbourhood(l, x);
      if (!is_z2_acyclic(l) || !is_z2_acyclic(x2))
        r.failures.push_back(x.canonical_encoding() + " / ball " + ball->vertices.to_string());
    }
  }
  return r;
}

SuiteResult involution_suite() {
  SuiteResult r{"kappa-involution", 0, {}};
  for (const auto& name : catalog::names()) {
    const SimplicialComplex& k = catalog::complex(name);
    if (k.dim() < 1 || !k.is_pure()) continue;
    for (const auto& m : enumerate_moves(k, MoveClassSet::all(), true)) {
      ++r.checked;
      const SimplicialComplex once = apply_generalized_move(k, m.a_set);
      if (apply_generalized_move(once, m.a_set) != k)
        r.failures.push_back(name + " A = {" + m.a_set.to_string() + "}");
    }
  }
  return r;
}

SuiteResult boundary_suite() {
  SuiteResult r{"boundary-squared-and-euler", 0, {}};
  for (const auto& name : catalog::names()) {
    const SimplicialComplex& k = catalog::complex(name);
    for (int q = 2; q <= k.dim(); ++q) {
      ++r.checked;
      if (!(boundary_matrix(k, q - 1) * boundary_matrix(k, q)).is_zero())
        r.failures.push_back(name + ": boundary squared nonzero at q = " + std::to_string(q));
    }
    ++r.checked;
    const auto b = reduced_betti(k).reduced_betti;
    std::int64_t alt = 1;  // χ = 1 + Σ (-1)^q b̃_q
    for (std::size_t q = 0; q < b.size(); ++q) alt += (q % 2 == 0 ? 1 : -1) * b[q];
    if (alt != k.euler_characteristic()) r.failures.push_back(name + ": Euler-Betti identity fails");
  }
  return r;
}

SuiteResult collapse_homology_suite(const SimplicialComplex& k, const CollapseCertificate& cert) {
  SuiteResult r{"collapse-preserves-homology", 0, {}};
  const BettiVector start = reduced_betti(k);
  SimplicialComplex cur = k;
  for (const auto& step : cert.steps) {
    cur = elementary_collapse(cur, step);
    ++r.checked;
    auto b = reduced_betti(cur).reduced_betti;
    auto a = start.reduced_betti;
    // Trailing zero entries vanish as dimensions drop.
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (!b.empty() && b.back() == 0) b.pop_back();
    if (a != b) r.failures.push_back(k.canonical_encoding() + ": Betti changed after removing " + step.free_face.to_string());
  }
  if (cert.steps.empty()) ++r.checked;
  return r;
}

SuiteResult move_example_suite() {
  SuiteResult r{"bistellar-examples", 0, {}};
  for (const auto& o : catalog::replay_move_examples()) {
    ++r.checked;
    if (!o.passed) r.failures.push_back(std::string(1, o.example.item) + ": " + o.detail);
  }
  return r;
}

}  // namespace combtop::suites
