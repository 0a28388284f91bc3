#pragma once

#include <string>
#include <vector>

#include "combtop/bistellar.hpp"
#include "combtop/complex.hpp"
#include "combtop/homology.hpp"

namespace combtop::catalog {

/// What a fixture must satisfy; checked every time it is built.
struct Expected {
  FVector f;
  BettiVector betti;
  bool weak_pm = false;
  bool pm = false;
};

struct Entry {
  std::string name;
  SimplicialComplex complex;
  Expected expected;
};

/// Every valid name, in a fixed order.
const std::vector<std::string>& names();

/// Throws Error listing the valid names when `name` is unknown, and
/// InvariantViolation if the built complex fails its expected record.
const Entry& get(const std::string& name);

/// Shorthand for get(name).complex.
const SimplicialComplex& complex(const std::string& name);

/// The two spheres on 4 or 5 vertices: S2_4 and S1_3*S0_2.
std::vector<SimplicialComplex> small_spheres();

/// Splits a pure complex into classes of facets connected through ridges
/// of degree exactly two.
std::vector<SimplicialComplex> ridge_components(const SimplicialComplex& k);

/// The six worked bistellar-move examples on the catalog complexes.
struct MoveExample {
  char item;
  std::string complex;
  Face a_set;
  MoveClass expected_class;
  std::string claim;
};

struct MoveExampleOutcome {
  MoveExample example;
  MoveDescriptor move;
  SimplicialComplex result;
  bool passed = false;
  std::string detail;
};

const std::vector<MoveExample>& move_examples();
std::vector<MoveExampleOutcome> replay_move_examples();

}  // namespace combtop::catalog
