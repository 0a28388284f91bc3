#pragma once

#include <unordered_map>

#include "combtop/complex.hpp"

namespace combtop {

/// Number of facets through each ridge of a pure complex (the empty face is
/// the ridge of a 0-dimensional complex).
std::unordered_map<Face, int> ridge_degrees(const SimplicialComplex& k);

/// Pure, and every ridge lies in exactly two facets.
bool is_weak_pseudomanifold(const SimplicialComplex& k);
/// Weak pseudomanifold whose facets are connected through shared ridges.
bool is_pseudomanifold(const SimplicialComplex& k);
/// Pure, every ridge in one or two facets, and at least one ridge in one.
bool is_weak_pm_with_boundary(const SimplicialComplex& k);

/// The pure complex generated by the degree-one ridges. Throws "no boundary"
/// on a closed weak pseudomanifold.
SimplicialComplex boundary_complex(const SimplicialComplex& k);

/// N(L, K): generated by the facets of K that meet V(L).
SimplicialComplex simplicial_neighbourhood(const SimplicialComplex& l, const SimplicialComplex& k);
/// C(L, K) = K[V(K) ∖ V(L)].
SimplicialComplex simplicial_complement(const SimplicialComplex& l, const SimplicialComplex& k);
/// L is a subcomplex with L = K[V(L)].
bool is_induced(const SimplicialComplex& l, const SimplicialComplex& k);

/// Y = Y1 ∪ Y2 around the complement L = C(Y1, Y), with Y2 = N(L, Y).
struct Decomposition {
  SimplicialComplex y1;
  SimplicialComplex l;
  SimplicialComplex y2;
  SimplicialComplex shared_boundary;
};

/// Splits a pseudomanifold Y along a proper, pure, full-dimensional induced
/// subcomplex Y1 and checks the result:
///   (a) Y1 and Y2 are weak pseudomanifolds with boundary;
///   (b) ∂Y2 is induced in Y2;
///   (c) ∂Y2 = ∂Y1 = Y1 ∩ Y2;
/// and the facets of Y split between Y1 and Y2. Precondition failures throw
/// Error naming the hypothesis; a failed conclusion throws InvariantViolation.
Decomposition decompose(const SimplicialComplex& y, const SimplicialComplex& y1);

}  // namespace combtop
