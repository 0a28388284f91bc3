#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "combtop/complex.hpp"

namespace testutil {

using combtop::Face;
using combtop::SimplicialComplex;

inline SimplicialComplex facets(std::initializer_list<std::initializer_list<int>> fs) {
  std::vector<Face> out;
  for (auto f : fs) out.push_back(Face(f));
  return SimplicialComplex::from_facets(out);
}

// A random injective relabeling of V(K) into [0, 64).
inline combtop::Relabeling random_relabeling(const SimplicialComplex& k, std::mt19937_64& rng) {
  std::vector<int> pool(64);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  combtop::Relabeling pi;
  int i = 0;
  for (int v : k.vertex_set().vertices()) pi.image[static_cast<std::size_t>(v)] = pool[static_cast<std::size_t>(i++)];
  return pi;
}

// Random pure complex: each (dim+1)-subset of {0..n-1} kept with probability p.
inline SimplicialComplex random_pure(int n, int dim, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<Face> out;
  for (Face f : combtop::subsets_of_size(Face::prefix(n), dim + 1))
    if (keep(rng)) out.push_back(f);
  if (out.empty()) out.push_back(Face::prefix(dim + 1));
  return SimplicialComplex::from_facets(out);
}

}  // namespace testutil
