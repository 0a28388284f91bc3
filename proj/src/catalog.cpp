#include "combtop/catalog.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "combtop/isomorphism.hpp"
#include "combtop/recognition.hpp"
#include "combtop/structure.hpp"

namespace combtop::catalog {

namespace {

// "123 127 ..." with one digit per vertex.
SimplicialComplex triangles(const char* text) {
  std::vector<Face> facets;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    Face f;
    for (char c : tok) f = f.with(c - '0');
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(facets);
}

Face labels(int first, int last) {
  Face f;
  for (int v = first; v <= last; ++v) f = f.with(v);
  return f;
}

SimplicialComplex two_points(int a, int b) { return SimplicialComplex::from_facets({Face::single(a), Face::single(b)}); }

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Expected simplex_boundary_record(int d) {
  Expected e;
  for (int q = 0; q <= d; ++q) e.f.counts.push_back(binom(d + 2, q + 1));
  e.betti.reduced_betti.assign(static_cast<std::size_t>(d + 1), 0);
  e.betti.reduced_betti.back() = 1;
  e.weak_pm = true;
  e.pm = true;
  return e;
}

Expected record(std::vector<std::int64_t> f, std::vector<int> b, bool weak_pm, bool pm) {
  return Expected{FVector{std::move(f)}, BettiVector{std::move(b)}, weak_pm, pm};
}

Expected sphere2(std::int64_t f0, std::int64_t f1, std::int64_t f2) { return record({f0, f1, f2}, {0, 0, 1}, true, true); }

struct Recipe {
  std::string name;
  std::function<SimplicialComplex()> build;
  Expected expected;
};

const SimplicialComplex& rp2_6();

std::vector<Recipe> all_recipes() {
  std::vector<Recipe> r;
  for (int d = 0; d <= 4; ++d) {
    r.push_back({"S" + std::to_string(d) + "_" + std::to_string(d + 2),
                 [d] { return standard_sphere(d, labels(1, d + 2)); }, simplex_boundary_record(d)});
  }
  for (int d = 0; d <= 4; ++d) {
    Expected e;
    for (int q = 0; q <= d; ++q) e.f.counts.push_back(binom(d + 1, q + 1));
    e.betti.reduced_betti.assign(static_cast<std::size_t>(d + 1), 0);
    r.push_back({"D" + std::to_string(d) + "_" + std::to_string(d + 1),
                 [d] { return standard_ball(d, labels(1, d + 1)); }, e});
  }
  for (int n = 4; n <= 9; ++n) {  // S1_3 comes from the standard spheres above
    r.push_back({"S1_" + std::to_string(n), [n] { return cycle(n, 1); }, record({n, n}, {0, 1}, true, true)});
  }
  r.push_back({"octahedron", [] { return join(join(two_points(1, 2), two_points(3, 4)), two_points(5, 6)); },
               sphere2(6, 12, 8)});
  r.push_back({"S1_3*S0_2", [] { return join(cycle(3, 1), two_points(4, 5)); }, sphere2(5, 9, 6)});
  r.push_back({"S1_5*S0_2", [] { return join(cycle(5, 1), two_points(6, 7)); }, sphere2(7, 15, 10)});
  r.push_back({"RP2_6", [] { return rp2_6(); }, record({6, 15, 10}, {0, 1, 1}, true, true)});
  r.push_back({"R", [] { return apply_generalized_move(rp2_6(), Face{1, 2, 5, 6}); },
               record({6, 14, 10}, {0, 0, 1}, false, false)});
  r.push_back({"Sigma1", [] { return triangles("125 126 156 235 236 345 346 456"); }, sphere2(6, 12, 8)});
  r.push_back({"Sigma2", [] { return triangles("126 127 167 236 237 346 347 456 457 567"); }, sphere2(7, 15, 10)});
  r.push_back({"Sigma3", [] { return triangles("126 127 167 234 237 246 347 456 457 567"); }, sphere2(7, 15, 10)});
  r.push_back({"Sigma4", [] { return triangles("124 127 145 156 167 234 237 347 457 567"); }, sphere2(7, 15, 10)});
  r.push_back({"Sigma5", [] { return triangles("123 126 135 156 234 246 345 457 467 567"); }, sphere2(7, 15, 10)});
  r.push_back({"Upsilon1", [] { return triangles("123 127 137 237 456 457 467 567"); },
               record({7, 12, 8}, {0, 0, 2}, true, false)});
  r.push_back({"Upsilon2", [] { return triangles("126 127 136 137 236 237 456 457 467 567"); },
               record({7, 15, 10}, {0, 1, 2}, true, false)});
  r.push_back({"DunceHat8",
               [] { return triangles("128 138 348 234 124 145 125 458 568 256 236 136 167 678 278 237 137"); },
               record({8, 24, 17}, {0, 0, 0}, false, false)});
  return r;
}

const SimplicialComplex& rp2_6() {
  static const SimplicialComplex k = triangles("123 124 135 146 236 245 345 346 156 256");
  return k;
}

void validate(const Entry& e) {
  auto fail = [&e](const std::string& what) { throw InvariantViolation("catalog entry " + e.name + ": " + what); };
  const SimplicialComplex& k = e.complex;
  if (k.f_vector() != e.expected.f)
    fail("f-vector " + to_string(k.f_vector()) + " != " + to_string(e.expected.f));
  if (reduced_betti(k) != e.expected.betti)
    fail("Betti " + to_string(reduced_betti(k)) + " != " + to_string(e.expected.betti));
  if (is_weak_pseudomanifold(k) != e.expected.weak_pm) fail("weak pseudomanifold flag");
  if (is_pseudomanifold(k) != e.expected.pm) fail("pseudomanifold flag");
}

struct Store {
  Store() {
    for (Recipe& r : all_recipes()) {
      names.push_back(r.name);
      recipes.emplace(r.name, std::move(r));
    }
  }
  std::vector<std::string> names;
  std::map<std::string, Recipe> recipes;
  std::map<std::string, Entry> built;
  std::mutex mu;
};

Store& store() {
  static Store s;
  return s;
}

}  // namespace

const std::vector<std::string>& names() { return store().names; }

const Entry& get(const std::string& name) {
  Store& s = store();
  std::lock_guard lock(s.mu);
  if (auto it = s.built.find(name); it != s.built.end()) return it->second;
  auto rit = s.recipes.find(name);
  if (rit == s.recipes.end()) {
    std::string list;
    for (const auto& n : s.names) list += (list.empty() ? "" : ", ") + n;
    throw Error("unknown catalog name '" + name + "'; valid names: " + list);
  }
  Entry e{name, rit->second.build(), rit->second.expected};
  validate(e);
  return s.built.emplace(name, std::move(e)).first->second;
}

const SimplicialComplex& complex(const std::string& name) { return get(name).complex; }

std::vector<SimplicialComplex> small_spheres() { return {complex("S2_4"), complex("S1_3*S0_2")}; }

std::vector<SimplicialComplex> ridge_components(const SimplicialComplex& k) {
  const auto& facets = k.facets();
  const auto deg = ridge_degrees(k);
  std::vector<int> comp(facets.size(), -1);
  int count = 0;
  for (std::size_t s = 0; s < facets.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const Face f = facets[stack.back()];
      stack.pop_back();
      for (std::size_t j = 0; j < facets.size(); ++j) {
        if (comp[j] >= 0) continue;
        const Face ridge = f & facets[j];
        if (ridge.size() == f.size() - 1 && deg.at(ridge) == 2) {
          comp[j] = count;
          stack.push_back(j);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<Face>> groups(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < facets.size(); ++i) groups[static_cast<std::size_t>(comp[i])].push_back(facets[i]);
  std::vector<SimplicialComplex> out;
  for (auto& g : groups) out.push_back(SimplicialComplex::generated_by(std::move(g)));
  return out;
}

const std::vector<MoveExample>& move_examples() {
  static const std::vector<MoveExample> v = {
      {'a', "RP2_6", Face{1, 2, 5, 6}, MoveClass::singular_bs1, "result is R, not a weak pseudomanifold"},
      {'b', "Sigma2", Face{2, 3, 6, 7}, MoveClass::singular_bs1, "result is two 2-spheres sharing the edge 6 7"},
      {'c', "Upsilon1", Face{1, 2, 3, 6}, MoveClass::singular_bs1, "result is Upsilon2"},
      {'d', "Upsilon2", Face{1, 2, 3, 6}, MoveClass::singular_bs2, "result is Upsilon1"},
      {'e', "Sigma4", Face{2, 3, 4, 6}, MoveClass::singular_bs1, "result is a 7-vertex pseudomanifold with 12 facets"},
      {'f', "Sigma2", Face{2, 3, 4, 6}, MoveClass::proper_bistellar, "result is Sigma3 via a 1-move"},
  };
  return v;
}

std::vector<MoveExampleOutcome> replay_move_examples() {
  std::vector<MoveExampleOutcome> out;
  for (const MoveExample& ex : move_examples()) {
    MoveExampleOutcome o;
    o.example = ex;
    const SimplicialComplex& k = complex(ex.complex);
    o.move = classify_move(k, ex.a_set);
    o.result = apply_generalized_move(k, ex.a_set);
    bool claim = false;
    switch (ex.item) {
      case 'a':
        claim = o.result == complex("R") && !is_weak_pseudomanifold(o.result);
        break;
      case 'b': {
        const auto parts = ridge_components(o.result);
        claim = parts.size() == 2 && is_combinatorial_sphere_low_dim(parts[0]) &&
                is_combinatorial_sphere_low_dim(parts[1]) &&
                intersection(parts[0], parts[1]) == SimplicialComplex::from_facets({Face{6, 7}});
        break;
      }
      case 'c': claim = are_isomorphic(o.result, complex("Upsilon2")).has_value(); break;
      case 'd': claim = are_isomorphic(o.result, complex("Upsilon1")).has_value(); break;
      case 'e':
        claim = is_pseudomanifold(o.result) && o.result.num_vertices() == 7 && o.result.num_facets() == 12;
        break;
      case 'f': claim = are_isomorphic(o.result, complex("Sigma3")).has_value() && o.move.i == 1; break;
      default: break;
    }
    const bool class_ok = o.move.classification == ex.expected_class;
    o.passed = claim && class_ok;
    o.detail = std::string("A = {") + ex.a_set.to_string() + "} on " + ex.complex + ": beta = {" +
               o.move.beta.to_string() + "}, class " + to_string(o.move.classification) +
               (class_ok ? "" : " (expected " + std::string(to_string(ex.expected_class)) + ")") + "; " + ex.claim +
               (claim ? "" : " [FAILED]");
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace combtop::catalog
