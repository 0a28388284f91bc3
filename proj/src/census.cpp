#include "combtop/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <random>
#include <thread>
#include <unordered_map>

#include "combtop/catalog.hpp"
#include "combtop/collapse.hpp"
#include "combtop/homology.hpp"
#include "combtop/isomorphism.hpp"

namespace combtop {

const char* to_string(RidgeConstraint c) {
  switch (c) {
    case RidgeConstraint::exactly_two: return "exactly-two";
    case RidgeConstraint::even: return "even";
    case RidgeConstraint::one_or_two: return "one-or-two";
  }
  return "?";
}

CensusSpec CensusSpec::prop_2_2() {
  CensusSpec s;
  s.max_vertices = 6;
  s.max_facets = 20;
  s.constraint = RidgeConstraint::exactly_two;
  return s;
}

CensusSpec CensusSpec::prop_2_3() {
  CensusSpec s;
  s.max_vertices = 7;
  s.exact_vertices = true;
  s.max_facets = 10;
  s.constraint = RidgeConstraint::exactly_two;
  return s;
}

CensusSpec CensusSpec::lemma_3_3() {
  CensusSpec s;
  s.max_vertices = 7;
  s.max_facets = 10;
  s.constraint = RidgeConstraint::even;
  return s;
}

namespace {

constexpr int kMaxCensusVertices = 7;
constexpr int kMaxEdges = 21;

struct Tables {
  int n = 0;
  std::vector<Face> tris;
  std::vector<std::array<int, 3>> tri_edges;
  std::vector<std::vector<int>> edge_tris;
  int edges = 0;
};

Tables make_tables(int n) {
  Tables t;
  t.n = n;
  std::array<std::array<int, kMaxCensusVertices>, kMaxCensusVertices> eid{};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) eid[a][b] = t.edges++;
  t.edge_tris.resize(static_cast<std::size_t>(t.edges));
  for (Face f : subsets_of_size(Face::prefix(n), 3)) {
    const auto v = f.vertices();
    const int idx = static_cast<int>(t.tris.size());
    t.tris.push_back(f);
    t.tri_edges.push_back({eid[v[0]][v[1]], eid[v[0]][v[2]], eid[v[1]][v[2]]});
    for (int e : t.tri_edges.back()) t.edge_tris[static_cast<std::size_t>(e)].push_back(idx);
  }
  return t;
}

struct State {
  std::uint64_t chosen = 0;
  std::uint64_t excluded = 0;
  std::array<std::uint8_t, kMaxEdges> deg{};
  int count = 0;
};

class Search {
 public:
  Search(const Tables& t, const CensusSpec& s) : t_(t), s_(s) {
    cap_ = s.constraint == RidgeConstraint::even ? t.n - 2 : 2;
  }

  // With split_depth > 0 the children at that depth are collected instead
  // of explored.
  void run(State st, int split_depth, std::vector<State>* tasks) {
    split_depth_ = split_depth;
    tasks_ = tasks;
    rec(st, 0);
  }

  std::vector<std::uint64_t> solutions;
  std::uint64_t nodes = 0;

 private:
  bool deficient(int d) const {
    switch (s_.constraint) {
      case RidgeConstraint::exactly_two: return d == 1;
      case RidgeConstraint::even: return (d & 1) != 0;
      case RidgeConstraint::one_or_two: return false;
    }
    return false;
  }

  bool can_add(const State& st, int tri) const {
    const std::uint64_t bit = std::uint64_t{1} << tri;
    if (((st.chosen | st.excluded) & bit) != 0) return false;
    for (int e : t_.tri_edges[static_cast<std::size_t>(tri)]) {
      if (st.deg[static_cast<std::size_t>(e)] >= cap_) return false;
    }
    return true;
  }

  static void add(State& st, const Tables& t, int tri) {
    st.chosen |= std::uint64_t{1} << tri;
    for (int e : t.tri_edges[static_cast<std::size_t>(tri)]) ++st.deg[static_cast<std::size_t>(e)];
    ++st.count;
  }

  void record(const State& st) {
    Face verts;
    for (std::uint64_t m = st.chosen; m != 0; m &= m - 1) verts = verts | t_.tris[static_cast<std::size_t>(std::countr_zero(m))];
    if (s_.exact_vertices && verts.size() != t_.n) return;
    if (s_.symmetry_breaking && verts != Face::prefix(verts.size())) return;
    solutions.push_back(st.chosen);
  }

  void child(State st, int tri, int depth) {
    add(st, t_, tri);
    if (tasks_ != nullptr && depth + 1 == split_depth_) {
      tasks_->push_back(st);
      return;
    }
    rec(st, depth + 1);
  }

  void rec(State& st, int depth) {
    ++nodes;
    int ndef = 0;
    int first = -1;
    for (int e = 0; e < t_.edges; ++e) {
      if (deficient(st.deg[static_cast<std::size_t>(e)])) {
        if (first < 0) first = e;
        ++ndef;
      }
    }
    const int room = s_.max_facets - st.count;
    if (ndef > 0) {
      if ((ndef + 2) / 3 > room) return;
      const std::uint64_t saved = st.excluded;
      for (int tri : t_.edge_tris[static_cast<std::size_t>(first)]) {
        if (!can_add(st, tri)) continue;
        child(st, tri, depth);
        st.excluded |= std::uint64_t{1} << tri;
      }
      st.excluded = saved;
      return;
    }
    if (st.count > 0) record(st);
    if (room <= 0) return;
    const std::uint64_t saved = st.excluded;
    for (int tri = 0; tri < static_cast<int>(t_.tris.size()); ++tri) {
      if (!can_add(st, tri)) continue;
      child(st, tri, depth);
      st.excluded |= std::uint64_t{1} << tri;
    }
    st.excluded = saved;
  }

  const Tables& t_;
  const CensusSpec& s_;
  int cap_ = 2;
  int split_depth_ = 0;
  std::vector<State>* tasks_ = nullptr;
};

void validate(const CensusSpec& s) {
  if (s.dimension != 2) throw Error("census: only dimension 2 is supported");
  if (s.max_vertices < 3 || s.max_vertices > kMaxCensusVertices) throw Error("census: vertex count must be in 3..7");
  if (s.max_facets < 1 || s.max_facets > 35) throw Error("census: max_facets must be in 1..35");
}

template <typename F>
void parallel_for(std::size_t n, int threads, F&& body) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<SimplicialComplex> reduce_isomorphism_classes(const std::vector<SimplicialComplex>& ks) {
  struct Class {
    SimplicialComplex rep;
    std::string encoding;
  };
  std::unordered_map<std::string, std::vector<Class>> buckets;
  for (const SimplicialComplex& k : ks) {
    auto& bucket = buckets[isomorphism_invariant(k)];
    std::string enc = k.canonical_encoding();
    bool found = false;
    for (Class& c : bucket) {
      if (!are_isomorphic(c.rep, k)) continue;
      if (enc < c.encoding) {
        c.rep = k;
        c.encoding = std::move(enc);
      }
      found = true;
      break;
    }
    if (!found) bucket.push_back({k, std::move(enc)});
  }
  std::vector<Class> all;
  for (auto& [key, b] : buckets) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end(), [](const Class& a, const Class& b) { return a.encoding < b.encoding; });
  std::vector<SimplicialComplex> out;
  for (auto& c : all) out.push_back(std::move(c.rep));
  return out;
}

CensusResult enumerate_census(const CensusSpec& spec) {
  validate(spec);
  const Tables t = make_tables(spec.max_vertices);
  CensusResult result;
  result.spec = spec;

  State root;
  if (spec.symmetry_breaking) {
    // Triangle {0,1,2} has index 0 in lexicographic order.
    root.chosen = 1;
    for (int e : t.tri_edges[0]) ++root.deg[static_cast<std::size_t>(e)];
    root.count = 1;
  }

  std::vector<std::uint64_t> sets;
  std::vector<State> tasks;
  {
    Search top(t, spec);
    top.run(root, spec.threads > 1 ? 2 : 0, spec.threads > 1 ? &tasks : nullptr);
    sets = std::move(top.solutions);
    result.nodes = top.nodes;
  }
  std::vector<std::vector<std::uint64_t>> per_task(tasks.size());
  std::vector<std::uint64_t> task_nodes(tasks.size(), 0);
  parallel_for(tasks.size(), spec.threads, [&](std::size_t i) {
    Search s(t, spec);
    s.run(tasks[i], 0, nullptr);
    per_task[i] = std::move(s.solutions);
    task_nodes[i] = s.nodes;
  });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    sets.insert(sets.end(), per_task[i].begin(), per_task[i].end());
    result.nodes += task_nodes[i];
  }
  std::sort(sets.begin(), sets.end());
  result.labeled_count = sets.size();

  std::vector<SimplicialComplex> labeled;
  labeled.reserve(sets.size());
  for (std::uint64_t m : sets) {
    std::vector<Face> facets;
    for (; m != 0; m &= m - 1) facets.push_back(t.tris[static_cast<std::size_t>(std::countr_zero(m))]);
    labeled.push_back(SimplicialComplex::from_facets(facets));
  }
  if (spec.reduce_iso) {
    result.representatives = reduce_isomorphism_classes(labeled);
  } else {
    std::sort(labeled.begin(), labeled.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
      return a.canonical_encoding() < b.canonical_encoding();
    });
    result.representatives = std::move(labeled);
  }
  for (const auto& k : result.representatives) ++result.classes_per_f_vector[to_string(k.f_vector())];
  return result;
}

CatalogMatch match_complexes(const std::vector<SimplicialComplex>& reps, const std::vector<SimplicialComplex>& expected) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < expected.size(); ++i) names.push_back(std::to_string(i));
  CatalogMatch m;
  std::vector<bool> used(expected.size(), false);
  for (const auto& r : reps) {
    bool hit = false;
    for (std::size_t i = 0; i < expected.size() && !hit; ++i) {
      if (used[i] || r.num_vertices() != expected[i].num_vertices() || r.num_facets() != expected[i].num_facets())
        continue;
      if (are_isomorphic(r, expected[i])) {
        used[i] = true;
        hit = true;
        m.matched[names[i]] = r.canonical_encoding();
      }
    }
    if (!hit) m.unexpected.push_back(r.canonical_encoding());
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!used[i]) m.missing.push_back(names[i]);
  }
  return m;
}

CatalogMatch match_catalog(const std::vector<SimplicialComplex>& reps, const std::vector<std::string>& names) {
  std::vector<SimplicialComplex> expected;
  for (const auto& n : names) expected.push_back(catalog::complex(n));
  CatalogMatch by_index = match_complexes(reps, expected);
  CatalogMatch m;
  m.unexpected = std::move(by_index.unexpected);
  for (auto& [idx, enc] : by_index.matched) m.matched[names[std::stoul(idx)]] = enc;
  for (const auto& idx : by_index.missing) m.missing.push_back(names[std::stoul(idx)]);
  return m;
}

std::vector<SimplicialComplex> sphere_pair_unions(int max_vertices, int max_facets) {
  const auto spheres = catalog::small_spheres();
  std::vector<SimplicialComplex> unions;
  for (const SimplicialComplex& a0 : spheres) {
    // First sphere on the smallest labels; the second anywhere.
    std::vector<int> av = a0.vertex_set().vertices();
    Relabeling pa;
    for (std::size_t i = 0; i < av.size(); ++i) pa.image[static_cast<std::size_t>(av[i])] = static_cast<int>(i);
    const SimplicialComplex a = relabel(a0, pa);
    for (const SimplicialComplex& b0 : spheres) {
      const std::vector<int> bv = b0.vertex_set().vertices();
      if (a.num_facets() + b0.num_facets() > max_facets) continue;
      std::vector<int> pool(static_cast<std::size_t>(max_vertices));
      for (int i = 0; i < max_vertices; ++i) pool[static_cast<std::size_t>(i)] = i;
      // Every injective placement of b's vertices into the label pool.
      std::vector<int> image;
      std::vector<bool> taken(pool.size(), false);
      std::function<void()> place = [&] {
        if (image.size() == bv.size()) {
          Relabeling pb;
          for (std::size_t i = 0; i < bv.size(); ++i) pb.image[static_cast<std::size_t>(bv[i])] = image[i];
          const SimplicialComplex b = relabel(b0, pb);
          for (Face f : b.facets()) {
            if (a.is_facet(f)) return;
          }
          if ((a.vertex_set() | b.vertex_set()).size() > max_vertices) return;
          std::vector<Face> gens = a.facets();
          gens.insert(gens.end(), b.facets().begin(), b.facets().end());
          unions.push_back(SimplicialComplex::generated_by(std::move(gens)));
          return;
        }
        for (std::size_t j = 0; j < pool.size(); ++j) {
          if (taken[j]) continue;
          taken[j] = true;
          image.push_back(pool[j]);
          place();
          image.pop_back();
          taken[j] = false;
        }
      };
      place();
    }
  }
  // Many placements coincide; dedupe by encoding before the isomorphism pass.
  std::sort(unions.begin(), unions.end(), [](const SimplicialComplex& x, const SimplicialComplex& y) {
    return x.canonical_encoding() < y.canonical_encoding();
  });
  unions.erase(std::unique(unions.begin(), unions.end()), unions.end());
  return reduce_isomorphism_classes(unions);
}

std::vector<std::string> lemma_3_3_named() {
  return {"S2_4", "S1_3*S0_2", "octahedron", "S1_5*S0_2", "RP2_6", "Sigma1",
          "Sigma2", "Sigma3", "Sigma4", "Sigma5", "R"};
}

std::vector<SimplicialComplex> lemma_3_3_expected() {
  std::vector<SimplicialComplex> all;
  for (const auto& n : lemma_3_3_named()) all.push_back(catalog::complex(n));
  const auto unions = sphere_pair_unions(7, 10);
  all.insert(all.end(), unions.begin(), unions.end());
  return reduce_isomorphism_classes(all);
}

SimplicialComplex random_small_complex(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const int d = std::uniform_int_distribution<int>(2, 3)(rng);
  const int n = std::uniform_int_distribution<int>(d + 2, 7)(rng);
  const double p = std::uniform_real_distribution<double>(0.10, 0.60)(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto tops = subsets_of_size(Face::prefix(n), d + 1);
  std::vector<Face> gens;
  // Fewer than three top simplices is almost always a simplex or a tree of
  // simplices; redraw a bounded number of times.
  for (int attempt = 0; attempt < 20 && gens.size() < 3; ++attempt) {
    gens.clear();
    for (Face f : tops) {
      if (unit(rng) < p) gens.push_back(f);
    }
  }
  if (gens.empty()) gens.push_back(Face::prefix(d + 1));
  if (unit(rng) < 1.0 / 3.0) {
    const int extra = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int j = 0; j < extra; ++j) {
      const int size = std::uniform_int_distribution<int>(2, d)(rng);
      std::vector<int> verts(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
      std::shuffle(verts.begin(), verts.end(), rng);
      Face f;
      for (int k = 0; k < size; ++k) f = f.with(verts[static_cast<std::size_t>(k)]);
      gens.push_back(f);
    }
  }
  return SimplicialComplex::generated_by(std::move(gens));
}

SamplingReport theorem1_sample_test(std::uint64_t n_samples, std::uint64_t seed, int threads) {
  if (n_samples < 1) throw Error("theorem1_sample_test: need at least one sample");
  static const std::vector<std::vector<std::int64_t>> dense_fvectors = {
      {7, 20, 30, 16}, {7, 21, 32, 17}, {7, 21, 33, 18}, {7, 21, 34, 19}, {7, 21, 35, 20}};
  struct Partial {
    std::uint64_t acyclic = 0, collapsible = 0, euler = 0, nofree = 0, l34 = 0;
    std::vector<std::pair<std::uint64_t, std::string>> counter, unresolved;
  };
  const int workers = std::max(1, threads);
  std::vector<Partial> parts(static_cast<std::size_t>(workers));
  parallel_for(static_cast<std::size_t>(workers), workers, [&](std::size_t w) {
    Partial& pt = parts[w];
    for (std::uint64_t i = w; i < n_samples; i += static_cast<std::uint64_t>(workers)) {
      const SimplicialComplex k = random_small_complex(seed, i);
      if (!is_z2_acyclic(k)) continue;
      ++pt.acyclic;
      if (k.euler_characteristic() != 1) ++pt.euler;
      if (k.dim() == 3 && free_faces(k).empty()) {
        ++pt.nofree;
        if (std::find(dense_fvectors.begin(), dense_fvectors.end(), k.f_vector().counts) != dense_fvectors.end()) ++pt.l34;
      }
      const CollapseVerdict v = is_collapsible(k, 5'000'000);
      switch (v.status) {
        case CollapseStatus::collapsible:
          if (!verify_certificate(k, *v.certificate)) throw InvariantViolation("collapse certificate rejected");
          ++pt.collapsible;
          break;
        case CollapseStatus::not_collapsible_exhausted: pt.counter.emplace_back(i, k.canonical_encoding()); break;
        case CollapseStatus::inconclusive_budget: pt.unresolved.emplace_back(i, k.canonical_encoding()); break;
      }
    }
  });
  SamplingReport r;
  r.seed = seed;
  r.tested = n_samples;
  std::vector<std::pair<std::uint64_t, std::string>> counter, unresolved;
  for (const Partial& pt : parts) {
    r.acyclic_found += pt.acyclic;
    r.collapsible_count += pt.collapsible;
    r.euler_violations += pt.euler;
    r.no_free_face_3d += pt.nofree;
    r.dense_fvector_hits += pt.l34;
    counter.insert(counter.end(), pt.counter.begin(), pt.counter.end());
    unresolved.insert(unresolved.end(), pt.unresolved.begin(), pt.unresolved.end());
  }
  std::sort(counter.begin(), counter.end());
  std::sort(unresolved.begin(), unresolved.end());
  for (auto& c : counter) r.counterexamples.push_back(std::move(c.second));
  for (auto& c : unresolved) r.unresolved.push_back(std::move(c.second));
  return r;
}

}  // namespace combtop
