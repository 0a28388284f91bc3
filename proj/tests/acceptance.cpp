// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "combtop/bistellar.hpp"
#include "combtop/catalog.hpp"
#include "combtop/census.hpp"
#include "combtop/collapse.hpp"
#include "combtop/homology.hpp"
#include "combtop/recognition.hpp"
#include "combtop/structure.hpp"
#include "combtop/suites.hpp"

using namespace combtop;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Certificates produced by the sphere criterion, reused by the property suites.
std::vector<std::pair<SimplicialComplex, CollapseCertificate>> g_certificates;

Outcome census_against(const CensusSpec& spec, const std::vector<std::string>& names) {
  const auto r = enumerate_census(spec);
  const auto m = match_catalog(r.representatives, names);
  std::ostringstream os;
  os << r.representatives.size() << " classes, " << m.matched.size() << "/" << names.size() << " matched, "
     << m.unexpected.size() << " unexpected, " << r.labeled_count << " labeled solutions";
  return {r.representatives.size() == names.size() && m.perfect(), os.str()};
}

Outcome c1() {
  return census_against(CensusSpec::prop_2_2(), {"S2_4", "S1_3*S0_2", "octahedron", "RP2_6", "Sigma1"});
}

Outcome c2() {
  auto spec = CensusSpec::prop_2_3();
  spec.threads = threads();
  return census_against(spec, {"S1_5*S0_2", "Sigma2", "Sigma3", "Sigma4", "Sigma5", "Upsilon1", "Upsilon2"});
}

Outcome c3() {
  auto spec = CensusSpec::lemma_3_3();
  spec.threads = threads();
  const auto r = enumerate_census(spec);
  const auto expected = lemma_3_3_expected();
  const auto m = match_complexes(r.representatives, expected);
  std::ostringstream os;
  os << r.representatives.size() << " classes vs " << expected.size() << " expected ("
     << lemma_3_3_named().size() << " named, " << sphere_pair_unions().size() << " sphere unions), "
     << m.unexpected.size() << " unexpected, " << m.missing.size() << " missing";
  return {m.perfect() && r.representatives.size() == expected.size(), os.str()};
}

Outcome c4() {
  std::ostringstream os;
  bool ok = true;
  for (const auto& o : catalog::replay_move_examples()) {
    ok = ok && o.passed;
    os << "(" << o.example.item << ") " << to_string(o.move.classification) << (o.passed ? " ok" : " FAILED: " + o.detail)
       << "; ";
  }
  return {ok && catalog::move_examples().size() == 6, os.str()};
}

Outcome c5() {
  const auto r = theorem1_sample_test(100'000, 1, threads());
  std::ostringstream os;
  os << r.tested << " samples, " << r.acyclic_found << " acyclic, " << r.collapsible_count << " collapsible, "
     << r.counterexamples.size() << " counterexamples, " << r.unresolved.size() << " unresolved, "
     << r.euler_violations << " Euler violations";
  const bool ok = r.tested == 100'000 && r.counterexamples.empty() && r.unresolved.empty() &&
                  r.collapsible_count == r.acyclic_found && r.acyclic_found > 0 && r.euler_violations == 0;
  return {ok, os.str()};
}

Outcome c6() {
  const auto& dh = catalog::complex("DunceHat8");
  const auto b = reduced_betti(dh).reduced_betti;
  const auto ff = free_faces(dh);
  const auto v = is_collapsible(dh);
  std::ostringstream os;
  os << "betti " << to_string(reduced_betti(dh)) << ", " << ff.size() << " free faces, " << to_string(v.status);
  return {b == std::vector<int>{0, 0, 0} && ff.empty() && v.status == CollapseStatus::not_collapsible_exhausted,
          os.str()};
}

Outcome c7() {
  std::ostringstream os;
  bool ok = true;
  for (int d = 2; d <= 3; ++d) {
    int good = 0, at_bound = 0;
    for (int i = 0; i < 100; ++i) {
      const auto s = suites::random_sphere(d, d + 8, 10'000u * static_cast<unsigned>(d) + static_cast<unsigned>(i));
      if (s.num_vertices() > d + 8) continue;
      at_bound += s.num_vertices() == d + 8;
      const auto c = certify_sphere(s);
      if (c.verdict == SphereVerdict::combinatorial_sphere && verify_sphere_certificate(s, c)) {
        ++good;
        g_certificates.emplace_back(c.complement, *c.collapse);
      }
    }
    ok = ok && good == 100;
    os << "d=" << d << ": " << good << "/100 certified (" << at_bound << " at n=d+8); ";
  }
  return {ok, os.str()};
}

Outcome c8() {
  const auto rp = certify_sphere(catalog::complex("RP2_6"));
  const auto up = certify_sphere(catalog::complex("Upsilon1"));
  const bool ok = rp.verdict == SphereVerdict::precondition_failed && rp.reason.find("homology") != std::string::npos &&
                  up.verdict == SphereVerdict::precondition_failed && up.reason.find("link") != std::string::npos;
  return {ok, "RP2_6: " + rp.reason + "; Upsilon1: " + up.reason};
}

Outcome c9() {
  std::vector<suites::SuiteResult> rs;
  rs.push_back(suites::boundary_suite());
  rs.push_back(suites::involution_suite());
  rs.push_back(suites::decomposition_suite(50, 2024));
  rs.push_back(suites::ball_complement_suite(40, 2024));
  rs.push_back(suites::move_example_suite());

  // Homology along every emitted certificate: the sphere complements above,
  // plus the collapses found for acyclic random samples.
  suites::SuiteResult hom{"collapse-preserves-homology", 0, {}};
  auto absorb = [&](const SimplicialComplex& k, const CollapseCertificate& c) {
    const auto r = suites::collapse_homology_suite(k, c);
    hom.checked += r.checked;
    hom.failures.insert(hom.failures.end(), r.failures.begin(), r.failures.end());
  };
  for (const auto& [k, c] : g_certificates) absorb(k, c);
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const auto k = random_small_complex(1, i);
    if (!is_z2_acyclic(k)) continue;
    const auto v = is_collapsible(k);
    if (v.certificate) absorb(k, *v.certificate);
  }
  rs.push_back(hom);

  bool ok = g_certificates.size() == 200;
  std::ostringstream os;
  for (const auto& r : rs) {
    ok = ok && r.passed();
    os << r.name << " " << r.checked - r.failures.size() << "/" << r.checked << "; ";
    for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i) os << "[" << r.failures[i] << "] ";
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "six-vertex weak pseudomanifold census", 60, c1},
      {2, "seven-vertex weak pseudomanifold census", 300, c2},
      {3, "even edge-degree census", 300, c3},
      {4, "worked bistellar move examples", 1, c4},
      {5, "acyclic random complexes collapse", 600, c5},
      {6, "dunce hat witness", 1, c6},
      {7, "random-walk spheres certify", 300, c7},
      {8, "negative controls rejected", 1, c8},
      {9, "property suites", 300, c9},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s criterion %d: %s (%.2fs%s) - %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                in_time ? "" : ", over time limit", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
