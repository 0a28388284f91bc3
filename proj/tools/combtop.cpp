// Command-line front end. Every subcommand prints a key-value report on
// stdout. Exit codes: 0 success, 2 definitive negative, 3 inconclusive,
// 1 usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "combtop/bistellar.hpp"
#include "combtop/catalog.hpp"
#include "combtop/census.hpp"
#include "combtop/collapse.hpp"
#include "combtop/homology.hpp"
#include "combtop/io.hpp"
#include "combtop/recognition.hpp"
#include "combtop/structure.hpp"
#include "combtop/suites.hpp"

using namespace combtop;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;
constexpr int kInconclusive = 3;

struct Input {
  std::string path;
  std::string catalog_name;

  void attach(CLI::App* app) {
    app->add_option("input", path, "facet-list file, or - for stdin");
    app->add_option("--catalog", catalog_name, "use a named catalog complex instead of a file");
  }

  SimplicialComplex load() const {
    if (!catalog_name.empty()) return catalog::complex(catalog_name);
    if (path.empty()) throw Error("no input: give a facet-list file, '-' or --catalog NAME");
    std::string text;
    if (path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(path);
      if (!in) throw Error("cannot open " + path);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    ParsedFacets p = parse_facets(text);
    for (const auto& w : p.warnings) std::cerr << "warning: " << w << '\n';
    return p.complex;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const ReportNode& doc) { std::cout << serialize(doc); }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int default_threads() {
  if (const char* env = std::getenv("COMBTOP_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

MoveClassSet parse_filter(const std::string& f) {
  if (f == "all") return MoveClassSet::all();
  if (f == "proper") return {MoveClass::proper_bistellar};
  if (f == "bistellar") return MoveClassSet::bistellar_only();
  if (f == "singular") return {MoveClass::singular_bs1, MoveClass::singular_bs2};
  throw CLI::ValidationError("--filter", "expected all, proper, bistellar or singular");
}


struct SuiteResultList {
  std::vector<suites::SuiteResult> items;
};

int exit_for(const SuiteResultList& results) {
  for (const auto& r : results.items) {
    if (!r.passed()) return kNegative;
  }
  return kOk;
}

void add_suite(ReportNode& parent, const suites::SuiteResult& r) {
  ReportNode& n = parent.add("suite", r.name);
  n.add("checked", std::to_string(r.checked));
  n.add("passed", yes_no(r.passed()));
  for (const auto& f : r.failures) n.add("failure", f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial topology toolkit for small simplicial complexes"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default: COMBTOP_THREADS or 1)")->check(CLI::PositiveNumber);

  Input in_info, in_hom, in_col, in_moves, in_apply, in_cert, in_verify, in_flip;

  auto* info = app.add_subcommand("info", "f-vector, Euler characteristic and structural flags");
  in_info.attach(info);

  auto* hom = app.add_subcommand("homology", "reduced GF(2) Betti numbers");
  in_hom.attach(hom);

  auto* col = app.add_subcommand("collapse", "search for a collapse to a point");
  in_col.attach(col);
  bool exhaustive = false;
  std::uint64_t budget = kDefaultCollapseBudget;
  std::string target_path;
  col->add_flag("--exhaustive", exhaustive, "no node budget");
  col->add_option("--budget", budget, "search node budget");
  col->add_option("--target", target_path, "collapse onto this subcomplex (facet-list file)");

  auto* moves = app.add_subcommand("moves", "list generalized bistellar moves");
  in_moves.attach(moves);
  std::string filter = "all";
  bool new_vertex = false;
  moves->add_option("--filter", filter, "all | proper | bistellar | singular");
  moves->add_flag("--new-vertex", new_vertex, "include insertions of a fresh vertex");

  auto* apply = app.add_subcommand("apply-move", "apply κ_A and report the result");
  in_apply.attach(apply);
  std::string a_set;
  bool facets_out = false;
  apply->add_option("--a-set", a_set, "the vertex set A, e.g. \"1 2 5 6\"")->required();
  apply->add_flag("--facets", facets_out, "print the result as a facet list instead of a report");

  auto* cert = app.add_subcommand("certify", "certify a combinatorial sphere");
  in_cert.attach(cert);
  bool assume_manifold = false;
  std::string policy = "facet";
  cert->add_flag("--assume-manifold", assume_manifold, "skip the combinatorial manifold check");
  cert->add_option("--policy", policy, "induced ball policy: facet | greedy");
  cert->add_option("--budget", budget, "collapse search node budget");

  auto* census = app.add_subcommand("census", "enumerate small 2-dimensional complexes");
  std::string preset;
  CensusSpec custom;
  std::string constraint = "exactly-two";
  bool exact = false, no_iso = false, no_sb = false;
  census->add_option("--prop", preset, "preset: 2.2 | 2.3 | 3.3");
  census->add_option("--max-vertices", custom.max_vertices, "vertex bound (3..7)");
  census->add_flag("--exact", exact, "use exactly max-vertices vertices");
  census->add_option("--max-facets", custom.max_facets, "triangle bound");
  census->add_option("--constraint", constraint, "exactly-two | even | one-or-two");
  census->add_flag("--no-iso", no_iso, "skip isomorphism reduction");
  census->add_flag("--no-symmetry-breaking", no_sb, "enumerate every labeling");

  auto* cat = app.add_subcommand("catalog", "named fixture complexes");
  std::string cat_name;
  bool cat_list = false;
  cat->add_option("--name", cat_name, "print this entry as a facet list");
  cat->add_flag("--list", cat_list, "list the names");

  auto* verify = app.add_subcommand("verify", "run the invariant suites or check a certificate");
  in_verify.attach(verify);
  std::string cert_path;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 1;
  verify->add_option("--certificate", cert_path, "report containing a sphere or collapse certificate");
  verify->add_option("--samples", sample_count, "also sample this many random complexes");
  verify->add_option("--seed", seed, "seed for randomized suites");

  auto* flip = app.add_subcommand("flip", "bistellar flip search");
  in_flip.attach(flip);
  std::string goal = "sphere";
  std::uint64_t flip_seed = 0;
  FlipSchedule schedule;
  flip->add_option("--goal", goal, "sphere | facets:N | catalog:NAME");
  flip->add_option("--seed", flip_seed, "random seed")->required();
  flip->add_option("--restarts", schedule.restarts, "independent restarts");
  flip->add_option("--steps", schedule.steps, "steps per restart");
  flip->add_flag("--insert", schedule.allow_vertex_insertion, "allow inserting fresh vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*info) {
      const SimplicialComplex k = in_info.load();
      ReportNode doc = make_document("info", &k);
      add_info(doc, k);
      ReportNode& flags = doc.add("flags");
      flags.add("pure", yes_no(k.is_pure()));
      flags.add("connected", yes_no(is_connected(k)));
      flags.add("weak-pseudomanifold", yes_no(is_weak_pseudomanifold(k)));
      flags.add("pseudomanifold", yes_no(is_pseudomanifold(k)));
      flags.add("weak-pseudomanifold-with-boundary", yes_no(is_weak_pm_with_boundary(k)));
      flags.add("combinatorial-manifold", to_string(is_combinatorial_manifold(k).status));
      emit(doc);
      return kOk;
    }
    if (*hom) {
      const SimplicialComplex k = in_hom.load();
      ReportNode doc = make_document("homology", &k);
      const BettiVector b = reduced_betti(k);
      add_betti(doc, b);
      doc.add("z2-acyclic", yes_no(is_z2_acyclic(k)));
      doc.add("z2-homology-sphere", yes_no(is_z2_homology_sphere(k, k.dim())));
      emit(doc);
      return kOk;
    }
    if (*col) {
      const SimplicialComplex k = in_col.load();
      if (exhaustive) budget = std::numeric_limits<std::uint64_t>::max();
      CollapseVerdict v;
      if (!target_path.empty()) {
        const SimplicialComplex target = parse_facets(read_file(target_path)).complex;
        v = collapses_to(k, target, budget);
      } else {
        v = is_collapsible(k, budget);
      }
      ReportNode doc = make_document("collapse", &k);
      doc.add("free-faces", std::to_string(free_faces(k).size()));
      add_collapse_verdict(doc, v);
      emit(doc);
      switch (v.status) {
        case CollapseStatus::collapsible: return kOk;
        case CollapseStatus::not_collapsible_exhausted: return kNegative;
        case CollapseStatus::inconclusive_budget: return kInconclusive;
      }
    }
    if (*moves) {
      const SimplicialComplex k = in_moves.load();
      const auto list = enumerate_moves(k, parse_filter(filter), new_vertex);
      ReportNode doc = make_document("moves", &k);
      doc.add("filter", filter);
      doc.add("count", std::to_string(list.size()));
      for (const auto& m : list) add_move(doc, m);
      emit(doc);
      return kOk;
    }
    if (*apply) {
      const SimplicialComplex k = in_apply.load();
      const Face a = parse_face(a_set);
      const MoveDescriptor m = classify_move(k, a);
      const SimplicialComplex result = apply_generalized_move(k, a);
      if (facets_out) {
        std::cout << write_facets(result);
        return kOk;
      }
      ReportNode doc = make_document("apply-move", &k);
      add_move(doc, m);
      doc.add("result", result.canonical_encoding());
      add_info(doc, result);
      doc.add("weak-pseudomanifold", yes_no(is_weak_pseudomanifold(result)));
      doc.add("pseudomanifold", yes_no(is_pseudomanifold(result)));
      emit(doc);
      return kOk;
    }
    if (*cert) {
      const SimplicialComplex k = in_cert.load();
      CertifyOptions opt;
      opt.assume_manifold = assume_manifold;
      opt.collapse_budget = budget;
      if (policy == "greedy")
        opt.policy = BallPolicy::greedy;
      else if (policy != "facet")
        throw CLI::ValidationError("--policy", "expected facet or greedy");
      const SphereCertificate c = certify_sphere(k, opt);
      ReportNode doc = make_document("certify", &k);
      add_sphere_certificate(doc, c);
      emit(doc);
      switch (c.verdict) {
        case SphereVerdict::combinatorial_sphere: return kOk;
        case SphereVerdict::precondition_failed: return kNegative;
        case SphereVerdict::inconclusive: return kInconclusive;
      }
    }
    if (*census) {
      CensusSpec spec = custom;
      std::vector<SimplicialComplex> expected;
      if (!preset.empty()) {
        if (preset == "2.2") {
          spec = CensusSpec::prop_2_2();
          for (const char* n : {"S2_4", "S1_3*S0_2", "octahedron", "RP2_6", "Sigma1"}) expected.push_back(catalog::complex(n));
        } else if (preset == "2.3") {
          spec = CensusSpec::prop_2_3();
          for (const char* n : {"S1_5*S0_2", "Sigma2", "Sigma3", "Sigma4", "Sigma5", "Upsilon1", "Upsilon2"})
            expected.push_back(catalog::complex(n));
        } else if (preset == "3.3") {
          spec = CensusSpec::lemma_3_3();
          expected = lemma_3_3_expected();
        } else {
          throw CLI::ValidationError("--prop", "expected 2.2, 2.3 or 3.3");
        }
      } else {
        spec.exact_vertices = exact;
        if (constraint == "exactly-two")
          spec.constraint = RidgeConstraint::exactly_two;
        else if (constraint == "even")
          spec.constraint = RidgeConstraint::even;
        else if (constraint == "one-or-two")
          spec.constraint = RidgeConstraint::one_or_two;
        else
          throw CLI::ValidationError("--constraint", "expected exactly-two, even or one-or-two");
      }
      spec.reduce_iso = !no_iso;
      spec.symmetry_breaking = !no_sb;
      spec.threads = threads;
      const CensusResult r = enumerate_census(spec);
      ReportNode doc = make_document("census", nullptr);
      add_census(doc, r);
      if (preset.empty() || !spec.reduce_iso) {
        emit(doc);
        return kOk;
      }
      const CatalogMatch m = match_complexes(r.representatives, expected);
      ReportNode& mn = doc.add("expected-match");
      mn.add("expected", std::to_string(expected.size()));
      mn.add("matched", std::to_string(m.matched.size()));
      for (const auto& u : m.unexpected) mn.add("unexpected", u);
      for (const auto& idx : m.missing) mn.add("missing", expected[std::stoul(idx)].canonical_encoding());
      mn.add("perfect", yes_no(m.perfect()));
      emit(doc);
      return m.perfect() ? kOk : kNegative;
    }
    if (*cat) {
      if (cat_list || cat_name.empty()) {
        for (const auto& n : catalog::names()) std::cout << n << '\n';
        return kOk;
      }
      std::cout << write_facets(catalog::complex(cat_name));
      return kOk;
    }
    if (*verify) {
      if (!cert_path.empty()) {
        const ReportNode doc = parse_report(read_file(cert_path));
        SimplicialComplex k;
        if (!in_verify.path.empty() || !in_verify.catalog_name.empty())
          k = in_verify.load();
        else
          k = parse_encoding(doc.at("input").value);
        if (doc.find("input") && doc.at("input").value != k.canonical_encoding())
          throw Error("certificate was issued for a different complex");
        bool ok = false;
        std::string what;
        if (const ReportNode* sc = doc.find("sphere-certificate")) {
          what = "sphere-certificate";
          ok = verify_sphere_certificate(k, read_sphere_certificate(*sc));
        } else if (const ReportNode* c = doc.find("collapse"); c && c->find("collapse-certificate")) {
          what = "collapse-certificate";
          ok = verify_certificate(k, read_collapse_certificate(c->at("collapse-certificate")));
        } else if (const ReportNode* ft = doc.find("flip-trace")) {
          what = "flip-trace";
          try {
            replay(k, read_flip_trace(*ft));
            ok = true;
          } catch (const Error&) {
            ok = false;
          }
        } else {
          throw Error("no certificate found in " + cert_path);
        }
        ReportNode out = make_document("verify-certificate", &k);
        out.add("certificate", what);
        out.add("valid", yes_no(ok));
        emit(out);
        return ok ? kOk : kNegative;
      }
      SuiteResultList results;
      results.items.push_back(suites::move_example_suite());
      results.items.push_back(suites::involution_suite());
      results.items.push_back(suites::boundary_suite());
      results.items.push_back(suites::decomposition_suite(50, seed));
      results.items.push_back(suites::ball_complement_suite(20, seed));
      ReportNode doc = make_document("verify", nullptr, seed);
      for (const auto& r : results.items) add_suite(doc, r);
      int code = exit_for(results);
      if (sample_count > 0) {
        const SamplingReport sampled = theorem1_sample_test(sample_count, seed, threads);
        add_sampling(doc, sampled);
        if (!sampled.counterexamples.empty()) code = kNegative;
        else if (!sampled.unresolved.empty() && code == kOk) code = kInconclusive;
      }
      emit(doc);
      return code;
    }
    if (*flip) {
      const SimplicialComplex k = in_flip.load();
      FlipGoal g;
      if (goal == "sphere") {
        g = FlipGoal::reduce_to_standard_sphere();
      } else if (goal.rfind("facets:", 0) == 0) {
        g = FlipGoal::reach_facet_count(std::stoi(goal.substr(7)));
      } else if (goal.rfind("catalog:", 0) == 0) {
        g = FlipGoal::reach(catalog::complex(goal.substr(8)));
      } else {
        throw CLI::ValidationError("--goal", "expected sphere, facets:N or catalog:NAME");
      }
      schedule.threads = threads;
      const auto trace = flip_search(k, g, schedule, flip_seed);
      ReportNode doc = make_document("flip", &k, flip_seed);
      doc.add("goal", goal);
      doc.add("found", yes_no(trace.has_value()));
      if (trace) add_flip_trace(doc, *trace);
      emit(doc);
      return trace ? kOk : kInconclusive;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
