#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "combtop/complex.hpp"

namespace combtop {

enum class RidgeConstraint { exactly_two, even, one_or_two };
const char* to_string(RidgeConstraint c);

struct CensusSpec {
  int max_vertices = 6;
  bool exact_vertices = false;  ///< use all max_vertices vertices
  int dimension = 2;
  int max_facets = 35;
  RidgeConstraint constraint = RidgeConstraint::exactly_two;
  bool reduce_iso = true;
  /// Force the triangle {0,1,2} and a prefix vertex set {0..k-1}.
  bool symmetry_breaking = true;
  int threads = 1;

  static CensusSpec prop_2_2();  ///< weak pseudomanifolds on <= 6 vertices
  static CensusSpec prop_2_3();  ///< weak pseudomanifolds on 7 vertices, <= 10 triangles
  static CensusSpec lemma_3_3(); ///< even edge degrees, <= 7 vertices, <= 10 triangles
};

struct CensusResult {
  CensusSpec spec;
  /// One per isomorphism class (least canonical encoding in the class), or
  /// every labeled solution when reduce_iso is off; sorted by encoding.
  std::vector<SimplicialComplex> representatives;
  std::map<std::string, int> classes_per_f_vector;
  std::uint64_t labeled_count = 0;
  std::uint64_t nodes = 0;
};

/// Pure 2-complexes on vertex ids 0..max_vertices-1 whose edges all satisfy
/// the ridge constraint. Backtracking branches on the smallest deficient
/// edge; the output does not depend on spec.threads. Throws on specs outside
/// dimension 2, 3..7 vertices or 1..35 facets.
CensusResult enumerate_census(const CensusSpec& spec);

/// Reduces a list of complexes to one (least-encoding) member per class.
std::vector<SimplicialComplex> reduce_isomorphism_classes(const std::vector<SimplicialComplex>& ks);

struct CatalogMatch {
  std::map<std::string, std::string> matched;  ///< name → representative encoding
  std::vector<std::string> unexpected;          ///< representative encodings
  std::vector<std::string> missing;             ///< names
  bool perfect() const { return unexpected.empty() && missing.empty(); }
};

/// Matches representatives against named catalog entries by isomorphism.
CatalogMatch match_catalog(const std::vector<SimplicialComplex>& reps, const std::vector<std::string>& names);
/// Same against explicit complexes (names are their indices).
CatalogMatch match_complexes(const std::vector<SimplicialComplex>& reps, const std::vector<SimplicialComplex>& expected);

/// Unions of two 2-spheres on 4 or 5 vertices with no common triangle, on at
/// most max_vertices vertices and max_facets triangles, one per class.
std::vector<SimplicialComplex> sphere_pair_unions(int max_vertices = 7, int max_facets = 10);

/// The expected classes for the even-degree census: the named complexes and
/// sphere_pair_unions().
std::vector<SimplicialComplex> lemma_3_3_expected();
std::vector<std::string> lemma_3_3_named();

struct SamplingReport {
  std::uint64_t seed = 0;
  std::uint64_t tested = 0;
  std::uint64_t acyclic_found = 0;
  std::uint64_t collapsible_count = 0;
  std::uint64_t euler_violations = 0;   ///< acyclic samples with χ != 1
  std::uint64_t no_free_face_3d = 0;    ///< acyclic 3-dim samples without free faces
  std::uint64_t dense_fvector_hits = 0;
  std::vector<std::string> counterexamples;  ///< acyclic, exhaustively not collapsible
  std::vector<std::string> unresolved;       ///< collapse budget exhausted
};

/// One sample per index: top dimension d in {2,3}, n in [d+2, 7], each top simplex
/// kept with probability p ~ U[0.10, 0.60] (redrawn while fewer than three
/// are kept), sometimes plus a few lower faces.
SimplicialComplex random_small_complex(std::uint64_t seed, std::uint64_t index);

SamplingReport theorem1_sample_test(std::uint64_t n_samples, std::uint64_t seed, int threads = 1);

}  // namespace combtop
