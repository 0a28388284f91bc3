#include "combtop/structure.hpp"

#include <algorithm>
#include <numeric>

namespace combtop {

std::unordered_map<Face, int> ridge_degrees(const SimplicialComplex& k) {
  std::unordered_map<Face, int> deg;
  for (Face f : k.facets()) {
    f.for_each_vertex([&](int v) { ++deg[f.without(v)]; });
  }
  return deg;
}

namespace {

bool ridge_degrees_within(const SimplicialComplex& k, int lo, int hi, bool need_one) {
  if (k.empty() || !k.is_pure()) return false;
  bool saw_one = false;
  for (const auto& [ridge, d] : ridge_degrees(k)) {
    if (d < lo || d > hi) return false;
    saw_one = saw_one || d == 1;
  }
  return !need_one || saw_one;
}

}  // namespace

bool is_weak_pseudomanifold(const SimplicialComplex& k) { return ridge_degrees_within(k, 2, 2, false); }

bool is_pseudomanifold(const SimplicialComplex& k) {
  if (!is_weak_pseudomanifold(k)) return false;
  const auto& facets = k.facets();
  const std::size_t n = facets.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Group facets by ridge; facets through a common ridge are adjacent.
  std::unordered_map<Face, std::size_t> first_at;
  for (std::size_t i = 0; i < n; ++i) {
    facets[i].for_each_vertex([&](int v) {
      auto [it, inserted] = first_at.try_emplace(facets[i].without(v), i);
      if (!inserted) parent[find(i)] = find(it->second);
    });
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

bool is_weak_pm_with_boundary(const SimplicialComplex& k) { return ridge_degrees_within(k, 1, 2, true); }

SimplicialComplex boundary_complex(const SimplicialComplex& k) {
  if (is_weak_pseudomanifold(k)) throw Error("no boundary");
  if (!is_weak_pm_with_boundary(k)) throw Error("boundary_complex: not a weak pseudomanifold with boundary");
  std::vector<Face> gens;
  for (const auto& [ridge, d] : ridge_degrees(k)) {
    if (d == 1) gens.push_back(ridge);
  }
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex simplicial_neighbourhood(const SimplicialComplex& l, const SimplicialComplex& k) {
  if (!is_subcomplex(l, k)) throw Error("simplicial_neighbourhood: L is not a subcomplex of K");
  std::vector<Face> gens;
  for (Face f : k.facets()) {
    if (f.intersects(l.vertex_set())) gens.push_back(f);
  }
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex simplicial_complement(const SimplicialComplex& l, const SimplicialComplex& k) {
  if (!is_subcomplex(l, k)) throw Error("simplicial_complement: L is not a subcomplex of K");
  return induced(k, k.vertex_set() - l.vertex_set());
}

bool is_induced(const SimplicialComplex& l, const SimplicialComplex& k) {
  return is_subcomplex(l, k) && induced(k, l.vertex_set()) == l;
}

Decomposition decompose(const SimplicialComplex& y, const SimplicialComplex& y1) {
  if (!is_pseudomanifold(y)) throw Error("decompose: Y is not a pseudomanifold");
  if (!is_subcomplex(y1, y)) throw Error("decompose: Y1 is not a subcomplex of Y");
  if (!is_induced(y1, y)) throw Error("decompose: Y1 is not an induced subcomplex");
  if (!y1.is_pure() || y1.dim() != y.dim()) throw Error("decompose: Y1 is not pure of dimension dim(Y)");
  if (y1 == y) throw Error("decompose: Y1 is not proper");

  Decomposition out;
  out.y1 = y1;
  out.l = simplicial_complement(y1, y);
  out.y2 = simplicial_neighbourhood(out.l, y);

  auto fail = [](const char* what) { throw InvariantViolation(std::string("decompose: ") + what); };
  if (!is_weak_pm_with_boundary(out.y1) || !is_weak_pm_with_boundary(out.y2))
    fail("(a) Y1, Y2 are not both weak pseudomanifolds with boundary");
  const SimplicialComplex b1 = boundary_complex(out.y1);
  const SimplicialComplex b2 = boundary_complex(out.y2);
  if (!is_induced(b2, out.y2)) fail("(b) boundary of Y2 is not induced in Y2");
  if (b1 != b2) fail("(c) boundaries of Y1 and Y2 differ");
  if (intersection(out.y1, out.y2) != b2) fail("(c) Y1 and Y2 do not meet exactly in their boundary");

  std::size_t in1 = 0;
  std::size_t in2 = 0;
  for (Face f : y.facets()) {
    const bool a = out.y1.is_facet(f);
    const bool b = out.y2.is_facet(f);
    if (a == b) fail("facets of Y do not split between Y1 and Y2");
    in1 += a;
    in2 += b;
  }
  if (in1 != out.y1.facets().size() || in2 != out.y2.facets().size()) fail("facets of Y1, Y2 are not facets of Y");
  out.shared_boundary = b2;
  return out;
}

}  // namespace combtop
