#include "combtop/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_set>

namespace combtop {

namespace {

using Signature = std::vector<std::int64_t>;

Signature vertex_signature(const SimplicialComplex& k, int v) {
  Signature sig = link(k, Face::single(v)).f_vector().counts;
  // Facets through v by dimension separate e.g. a maximal edge from a
  // triangle edge even when the link f-vectors agree.
  std::array<std::int64_t, kMaxVertices> by_dim{};
  int top = 0;
  for (Face f : k.facets()) {
    if (f.contains(v)) {
      ++by_dim[f.dim()];
      top = std::max(top, f.dim());
    }
  }
  sig.push_back(-1);
  sig.insert(sig.end(), by_dim.begin(), by_dim.begin() + top + 1);
  return sig;
}

struct Side {
  const SimplicialComplex* complex = nullptr;
  std::vector<int> verts;
  std::array<int, kMaxVertices> sig_class{};
  std::array<std::uint64_t, kMaxVertices> adjacency{};
  std::array<std::vector<Face>, kMaxVertices> facets_at{};
  std::unordered_set<Face> facet_set;
};

Side build_side(const SimplicialComplex& k, std::map<Signature, int>& classes) {
  Side s;
  s.complex = &k;
  s.verts = k.vertex_set().vertices();
  s.sig_class.fill(-1);
  for (int v : s.verts) {
    auto [it, inserted] = classes.try_emplace(vertex_signature(k, v), static_cast<int>(classes.size()));
    s.sig_class[v] = it->second;
  }
  for (Face f : k.facets()) {
    s.facet_set.insert(f);
    f.for_each_vertex([&](int v) {
      s.adjacency[v] |= (f - Face::single(v)).bits();
      s.facets_at[v].push_back(f);
    });
  }
  return s;
}

class Matcher {
 public:
  Matcher(const Side& a, const Side& b) : a_(a), b_(b) {}

  std::optional<Relabeling> run() {
    order_ = search_order();
    if (extend(0)) return forward_;
    return std::nullopt;
  }

 private:
  std::vector<int> search_order() const {
    std::map<int, int> class_size;
    for (int v : a_.verts) ++class_size[a_.sig_class[v]];
    std::vector<int> order;
    std::uint64_t placed = 0;
    while (order.size() < a_.verts.size()) {
      int best = -1;
      std::pair<int, int> best_key{-1, 0};
      for (int v : a_.verts) {
        if ((placed >> v) & 1U) continue;
        const int connected = std::popcount(a_.adjacency[v] & placed);
        const std::pair<int, int> key{connected, -class_size[a_.sig_class[v]]};
        if (best < 0 || key > best_key) {
          best = v;
          best_key = key;
        }
      }
      order.push_back(best);
      placed |= std::uint64_t{1} << best;
    }
    return order;
  }

  bool consistent(int v, int u) const {
    // Adjacency to already-mapped vertices must match in both directions.
    Face mapped_nbrs = forward_.apply(Face::from_bits(a_.adjacency[v] & domain_));
    if (mapped_nbrs.bits() != (b_.adjacency[u] & image_)) return false;
    const std::uint64_t dom = domain_ | (std::uint64_t{1} << v);
    const std::uint64_t img = image_ | (std::uint64_t{1} << u);
    for (Face f : a_.facets_at[v]) {
      if (!f.is_subset_of(Face::from_bits(dom))) continue;
      Face g = f.without(v);
      g = forward_.apply(g).with(u);
      if (!b_.facet_set.contains(g)) return false;
    }
    for (Face g : b_.facets_at[u]) {
      if (!g.is_subset_of(Face::from_bits(img))) continue;
      Face f = backward_.apply(g.without(u)).with(v);
      if (!a_.facet_set.contains(f)) return false;
    }
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const int v = order_[pos];
    for (int u : b_.verts) {
      if ((image_ >> u) & 1U) continue;
      if (a_.sig_class[v] != b_.sig_class[u]) continue;
      if (!consistent(v, u)) continue;
      forward_.image[v] = u;
      backward_.image[u] = v;
      domain_ |= std::uint64_t{1} << v;
      image_ |= std::uint64_t{1} << u;
      if (extend(pos + 1)) return true;
      forward_.image[v] = -1;
      backward_.image[u] = -1;
      domain_ &= ~(std::uint64_t{1} << v);
      image_ &= ~(std::uint64_t{1} << u);
    }
    return false;
  }

  const Side& a_;
  const Side& b_;
  std::vector<int> order_;
  Relabeling forward_;
  Relabeling backward_;
  std::uint64_t domain_ = 0;
  std::uint64_t image_ = 0;
};

}  // namespace

std::optional<Relabeling> are_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.num_vertices() > kIsomorphismVertexCap || l.num_vertices() > kIsomorphismVertexCap)
    throw Error("isomorphism search cap");
  if (k.num_vertices() != l.num_vertices() || k.num_facets() != l.num_facets()) return std::nullopt;
  if (k.empty()) return Relabeling{};
  if (k.f_vector() != l.f_vector()) return std::nullopt;

  std::map<Signature, int> classes;
  const Side a = build_side(k, classes);
  const Side b = build_side(l, classes);
  std::vector<int> ca, cb;
  for (int v : a.verts) ca.push_back(a.sig_class[v]);
  for (int v : b.verts) cb.push_back(b.sig_class[v]);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return std::nullopt;

  return Matcher(a, b).run();
}

std::string isomorphism_invariant(const SimplicialComplex& k) {
  std::vector<Signature> sigs;
  k.vertex_set().for_each_vertex([&](int v) { sigs.push_back(vertex_signature(k, v)); });
  std::sort(sigs.begin(), sigs.end());
  std::string out = to_string(k.f_vector());
  for (const auto& s : sigs) {
    out += ';';
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(s[i]);
    }
  }
  return out;
}

}  // namespace combtop
