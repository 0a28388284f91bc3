#include "combtop/complex.hpp"

#include <algorithm>
#include <numeric>

namespace combtop {

namespace {

void sort_unique(std::vector<Face>& v) {
  std::sort(v.begin(), v.end(), LexLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::span<const Face> faces) {
  if (faces.empty()) throw Error("empty complex");
  for (Face f : faces) {
    if (f.empty()) throw Error("empty face in facet list");
  }
  return generated_by(std::vector<Face>(faces.begin(), faces.end()));
}

SimplicialComplex SimplicialComplex::generated_by(std::vector<Face> faces) {
  std::erase_if(faces, [](Face f) { return f.empty(); });
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
    return a.size() != b.size() ? a.size() > b.size() : lex_less(a, b);
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  SimplicialComplex k;
  for (Face f : faces) {
    const bool dominated =
        std::any_of(k.facets_.begin(), k.facets_.end(), [f](Face g) { return f.is_subset_of(g); });
    if (!dominated) k.facets_.push_back(f);
  }
  std::sort(k.facets_.begin(), k.facets_.end(), LexLess{});
  for (Face f : k.facets_) {
    k.vertices_ = k.vertices_ | f;
    k.dim_ = std::max(k.dim_, f.dim());
  }
  return k;
}

bool SimplicialComplex::contains(Face f) const {
  if (f.empty()) return !facets_.empty();
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.is_subset_of(g); });
}

bool SimplicialComplex::is_facet(Face f) const {
  return std::binary_search(facets_.begin(), facets_.end(), f, LexLess{});
}

std::vector<Face> SimplicialComplex::faces(int q) const {
  std::vector<Face> out;
  if (q < 0 || q > dim_) return out;
  for (Face f : facets_) {
    if (f.dim() < q) continue;
    auto subs = subsets_of_size(f, q + 1);
    out.insert(out.end(), subs.begin(), subs.end());
  }
  sort_unique(out);
  return out;
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (int q = 0; q <= dim_; ++q) {
    auto fq = faces(q);
    out.insert(out.end(), fq.begin(), fq.end());
  }
  return out;
}

FVector SimplicialComplex::f_vector() const {
  FVector f;
  for (int q = 0; q <= dim_; ++q) f.counts.push_back(static_cast<std::int64_t>(faces(q).size()));
  return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  const FVector f = f_vector();
  for (std::size_t i = 0; i < f.counts.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f.counts[i];
  return chi;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [this](Face f) { return f.dim() == dim_; });
}

std::string SimplicialComplex::canonical_encoding() const {
  std::string out;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) out += '|';
    out += facets_[i].to_string();
  }
  return out;
}

SimplicialComplex link(const SimplicialComplex& k, Face sigma) {
  if (!k.contains(sigma)) throw Error("not a face: " + sigma.to_string());
  std::vector<Face> gens;
  for (Face f : k.facets()) {
    if (sigma.is_subset_of(f)) gens.push_back(f - sigma);
  }
  return SimplicialComplex::generated_by(std::move(gens));
}

int degree(const SimplicialComplex& k, Face sigma) { return link(k, sigma).num_vertices(); }

SimplicialComplex star(const SimplicialComplex& k, Face sigma) {
  if (!k.contains(sigma)) throw Error("not a face: " + sigma.to_string());
  std::vector<Face> gens;
  for (Face f : k.facets()) {
    if (sigma.is_subset_of(f)) gens.push_back(f);
  }
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex induced(const SimplicialComplex& k, Face u) {
  if (!u.is_subset_of(k.vertex_set())) throw Error("induced: vertex set not contained in V(K)");
  std::vector<Face> gens;
  gens.reserve(k.facets().size());
  for (Face f : k.facets()) gens.push_back(f & u);
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.vertex_set().intersects(l.vertex_set())) throw Error("join: overlapping vertex sets");
  if (k.empty()) return l;
  if (l.empty()) return k;
  std::vector<Face> gens;
  for (Face a : k.facets()) {
    for (Face b : l.facets()) gens.push_back(a | b);
  }
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex cone(const SimplicialComplex& k, int apex) {
  const Face a = Face::single(apex);
  if (k.vertex_set().intersects(a)) throw Error("cone: apex already a vertex");
  return join(k, SimplicialComplex::from_facets({a}));
}

SimplicialComplex pure_part(const SimplicialComplex& k) {
  std::vector<Face> gens;
  for (Face f : k.facets()) {
    if (f.dim() == k.dim()) gens.push_back(f);
  }
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex intersection(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::vector<Face> gens;
  for (Face a : k.facets()) {
    for (Face b : l.facets()) {
      const Face c = a & b;
      if (!c.empty()) gens.push_back(c);
    }
  }
  return SimplicialComplex::generated_by(std::move(gens));
}

bool is_subcomplex(const SimplicialComplex& l, const SimplicialComplex& k) {
  return std::all_of(l.facets().begin(), l.facets().end(), [&k](Face f) { return k.contains(f); });
}

std::vector<Face> connected_components(const SimplicialComplex& k) {
  std::array<int, kMaxVertices> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Face f : k.facets()) {
    const int root = find(f.min_vertex());
    f.for_each_vertex([&](int v) { parent[find(v)] = root; });
  }
  std::vector<Face> comps;
  std::array<int, kMaxVertices> slot{};
  slot.fill(-1);
  k.vertex_set().for_each_vertex([&](int v) {
    const int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]] = comps[slot[r]].with(v);
  });
  return comps;
}

bool is_connected(const SimplicialComplex& k) { return connected_components(k).size() == 1; }

Relabeling Relabeling::identity() {
  Relabeling r;
  std::iota(r.image.begin(), r.image.end(), 0);
  return r;
}

Relabeling Relabeling::from_pairs(std::span<const int> from, std::span<const int> to) {
  if (from.size() != to.size()) throw Error("relabeling: size mismatch");
  Relabeling r;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i] < 0 || from[i] >= kMaxVertices || to[i] < 0 || to[i] >= kMaxVertices) throw Error("vertex cap");
    r.image[from[i]] = to[i];
  }
  return r;
}

Face Relabeling::apply(Face f) const {
  Face out;
  f.for_each_vertex([&](int v) {
    if (image[v] < 0) throw Error("relabeling leaves vertex " + std::to_string(v) + " unmapped");
    out = out.with(image[v]);
  });
  return out;
}

Relabeling Relabeling::inverse() const {
  Relabeling r;
  for (int v = 0; v < kMaxVertices; ++v) {
    if (image[v] >= 0) r.image[image[v]] = v;
  }
  return r;
}

SimplicialComplex relabel(const SimplicialComplex& k, const Relabeling& pi) {
  const Face img = pi.apply(k.vertex_set());
  if (img.size() != k.num_vertices()) throw Error("relabeling is not injective on V(K)");
  std::vector<Face> gens;
  gens.reserve(k.facets().size());
  for (Face f : k.facets()) gens.push_back(pi.apply(f));
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex standard_sphere(int d, Face labels) {
  if (d < 0 || labels.size() != d + 2) throw Error("standard_sphere: need d + 2 labels");
  return SimplicialComplex::generated_by(subsets_of_size(labels, d + 1));
}

SimplicialComplex standard_sphere(int d) { return standard_sphere(d, Face::prefix(d + 2)); }

SimplicialComplex standard_ball(int d, Face labels) {
  if (d < 0 || labels.size() != d + 1) throw Error("standard_ball: need d + 1 labels");
  return SimplicialComplex::from_facets({labels});
}

SimplicialComplex standard_ball(int d) { return standard_ball(d, Face::prefix(d + 1)); }

SimplicialComplex cycle(int n, int first) {
  if (n < 3) throw Error("cycle: n < 3");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), first);
  return cycle(order);
}

SimplicialComplex cycle(std::span<const int> order) {
  const std::size_t n = order.size();
  if (n < 3) throw Error("cycle: n < 3");
  std::vector<Face> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(Face{order[i], order[(i + 1) % n]});
  auto k = SimplicialComplex::generated_by(std::move(edges));
  if (k.num_vertices() != static_cast<int>(n)) throw Error("cycle: repeated vertex");
  return k;
}

std::string to_string(const FVector& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.counts[i]);
  }
  return out + ")";
}

}  // namespace combtop
