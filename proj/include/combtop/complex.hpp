#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "combtop/face.hpp"

namespace combtop {

/// Face counts (f_0, ..., f_d).
struct FVector {
  std::vector<std::int64_t> counts;

  int dim() const { return static_cast<int>(counts.size()) - 1; }
  std::int64_t operator[](std::size_t i) const { return counts[i]; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// A finite simplicial complex held as its facet antichain; every face query
/// answers membership in the downward closure. Values are immutable.
class SimplicialComplex {
 public:
  /// The void complex (no faces at all).
  SimplicialComplex() = default;

  /// Throws "empty complex" on an empty list and "vertex cap" on ids >= 64.
  /// Dominated faces are absorbed; input order is irrelevant.
  static SimplicialComplex from_facets(std::span<const Face> faces);
  static SimplicialComplex from_facets(std::initializer_list<Face> faces) {
    return from_facets(std::span<const Face>(faces.begin(), faces.size()));
  }
  /// Like from_facets but an empty list yields the void complex.
  static SimplicialComplex generated_by(std::vector<Face> faces);

  /// Facets in lexicographic order.
  const std::vector<Face>& facets() const { return facets_; }
  Face vertex_set() const { return vertices_; }
  int num_vertices() const { return vertices_.size(); }
  int num_facets() const { return static_cast<int>(facets_.size()); }
  /// -1 for the void complex.
  int dim() const { return dim_; }
  bool empty() const { return facets_.empty(); }

  bool contains(Face f) const;
  bool is_facet(Face f) const;

  /// q-faces in lexicographic order; empty when q is out of range.
  std::vector<Face> faces(int q) const;
  /// Every face, ordered by dimension then lexicographically.
  std::vector<Face> all_faces() const;
  FVector f_vector() const;
  std::int64_t euler_characteristic() const;

  bool is_pure() const;

  /// Lexicographically sorted facet list, e.g. "1 2 3|1 2 4".
  std::string canonical_encoding() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.facets_ == b.facets_; }

 private:
  std::vector<Face> facets_;
  Face vertices_;
  int dim_ = -1;
};

/// Faces τ with τ ∩ σ = ∅ and τ ∪ σ ∈ K. Throws "not a face" if σ ∉ K.
SimplicialComplex link(const SimplicialComplex& k, Face sigma);
/// Number of vertices of link(K, σ).
int degree(const SimplicialComplex& k, Face sigma);
/// Closed star: faces containing σ together with all their subfaces.
SimplicialComplex star(const SimplicialComplex& k, Face sigma);

/// K[U]. Throws when U is not a subset of V(K).
SimplicialComplex induced(const SimplicialComplex& k, Face u);
/// K * L on disjoint vertex sets. Joining with the void complex is the identity.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
SimplicialComplex cone(const SimplicialComplex& k, int apex);
SimplicialComplex pure_part(const SimplicialComplex& k);
/// Faces common to both complexes.
SimplicialComplex intersection(const SimplicialComplex& k, const SimplicialComplex& l);
bool is_subcomplex(const SimplicialComplex& l, const SimplicialComplex& k);
bool is_connected(const SimplicialComplex& k);
/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<Face> connected_components(const SimplicialComplex& k);

/// A vertex relabeling; image[v] == -1 for unmapped vertices.
struct Relabeling {
  std::array<int, kMaxVertices> image{};

  Relabeling() { image.fill(-1); }
  static Relabeling identity();
  /// Maps sorted `from` onto `to` positionally.
  static Relabeling from_pairs(std::span<const int> from, std::span<const int> to);

  Face apply(Face f) const;
  Relabeling inverse() const;
  friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

/// π(K). Throws if π leaves a vertex of K unmapped or is not injective on V(K).
SimplicialComplex relabel(const SimplicialComplex& k, const Relabeling& pi);

/// S^d_{d+2}: every non-empty proper subset of `labels` (|labels| = d + 2).
SimplicialComplex standard_sphere(int d, Face labels);
SimplicialComplex standard_sphere(int d);
/// Δ^d_{d+1}: the full simplex on `labels` (|labels| = d + 1).
SimplicialComplex standard_ball(int d, Face labels);
SimplicialComplex standard_ball(int d);
/// S^1_n on vertices first, first+1, ..., first+n-1 in cyclic order.
SimplicialComplex cycle(int n, int first = 0);
/// S^1_n with the given cyclic vertex order.
SimplicialComplex cycle(std::span<const int> order);

std::string to_string(const FVector& f);

}  // namespace combtop
