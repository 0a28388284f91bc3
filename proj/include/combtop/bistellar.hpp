#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combtop/complex.hpp"

namespace combtop {

enum class MoveClass : std::uint8_t {
  bistellar,         ///< satisfies bs1 and bs2 with i = 0 or i = d
  proper_bistellar,  ///< satisfies bs1 and bs2 with 1 <= i <= d - 1
  singular_bs1,      ///< the core β is already a face
  singular_bs2,      ///< bs1 holds but V(Lk(α)) != β
  invalid,           ///< A is not admissible
};

const char* to_string(MoveClass c);

/// A bitmask over MoveClass values.
class MoveClassSet {
 public:
  constexpr MoveClassSet() = default;
  constexpr MoveClassSet(std::initializer_list<MoveClass> classes) {
    for (MoveClass c : classes) bits_ |= bit(c);
  }
  static constexpr MoveClassSet all() {
    return {MoveClass::bistellar, MoveClass::proper_bistellar, MoveClass::singular_bs1, MoveClass::singular_bs2};
  }
  static constexpr MoveClassSet bistellar_only() { return {MoveClass::bistellar, MoveClass::proper_bistellar}; }
  constexpr bool contains(MoveClass c) const { return (bits_ & bit(c)) != 0; }

 private:
  static constexpr std::uint8_t bit(MoveClass c) { return static_cast<std::uint8_t>(1U << static_cast<unsigned>(c)); }
  std::uint8_t bits_ = 0;
};

/// A (d+2)-set A with its core β = {x ∈ A : A∖{x} ∈ K} and α = A∖β.
struct MoveDescriptor {
  Face a_set;
  Face alpha;
  Face beta;
  int i = -1;  ///< dim(α)
  MoveClass classification = MoveClass::invalid;
  bool bs1 = false;  ///< β ∉ K
  bool bs2 = false;  ///< α is a facet, or V(Lk(α)) = β

  friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
};

/// K is pure of dimension d >= 1, |A| = d + 2, and A contains between 1 and
/// d + 1 facets of K.
bool is_admissible(const SimplicialComplex& k, Face a);

/// The core β of A. Throws "inadmissible A".
Face core(const SimplicialComplex& k, Face a);

/// κ_A(K): facets of K not inside A, plus the (d+1)-subsets of A that are
/// not facets of K. Applies singular moves too. Throws "inadmissible A".
SimplicialComplex apply_generalized_move(const SimplicialComplex& k, Face a);

/// Throws "inadmissible A".
MoveDescriptor classify_move(const SimplicialComplex& k, Face a);

/// Every admissible A ⊆ V(K) whose class is in `filter`, in lexicographic
/// order of A. With `include_new_vertex`, also the vertex insertions
/// facet ∪ {fresh vertex} (fresh = smallest unused id).
std::vector<MoveDescriptor> enumerate_moves(const SimplicialComplex& k, MoveClassSet filter = MoveClassSet::all(),
                                            bool include_new_vertex = false);

struct FlipGoal {
  enum class Kind { standard_sphere, facet_count, isomorphic_to };
  Kind kind = Kind::standard_sphere;
  int facet_count = 0;
  SimplicialComplex target;

  static FlipGoal reduce_to_standard_sphere() { return {}; }
  static FlipGoal reach_facet_count(int n) { return {Kind::facet_count, n, {}}; }
  static FlipGoal reach(SimplicialComplex l) { return {Kind::isomorphic_to, 0, std::move(l)}; }
};

struct FlipSchedule {
  int restarts = 10;
  int steps = 10'000;
  double t_start = 1.5;
  double t_end = 0.05;
  bool allow_vertex_insertion = false;
  int threads = 1;
};

/// Moves applied in order from `start` lead to `end` (canonical encodings).
struct FlipTrace {
  std::vector<MoveDescriptor> moves;
  std::string start;
  std::string end;
};

/// Annealing over bistellar moves (never singular ones). Energy is the facet
/// count with the smallest vertex degree as a tiebreak. Restarts use
/// independent seeds derived from `seed`; the shortest successful trace wins,
/// ties broken lexicographically, so the result does not depend on
/// `schedule.threads`. Returns nullopt on failure, which proves nothing.
/// Throws unless K is a weak pseudomanifold of dimension >= 1.
std::optional<FlipTrace> flip_search(const SimplicialComplex& k, const FlipGoal& goal, const FlipSchedule& schedule,
                                     std::uint64_t seed);

/// Re-applies a trace, requiring every move to classify as bistellar with the
/// recorded descriptor. Throws on the first mismatch.
SimplicialComplex replay(const SimplicialComplex& k, const FlipTrace& trace);

struct RandomWalkOptions {
  int steps = 40;
  int max_vertices = 0;  ///< 0 means no cap on insertions
  bool allow_insertion = true;
  bool allow_removal = true;
};

/// Uniformly random bistellar moves (proper moves, vertex removals and, under
/// the vertex cap, insertions). Starting from a combinatorial manifold every
/// intermediate complex is combinatorially equivalent to the start.
FlipTrace random_bistellar_walk(const SimplicialComplex& k, const RandomWalkOptions& options, std::uint64_t seed,
                                SimplicialComplex* end = nullptr);

}  // namespace combtop
