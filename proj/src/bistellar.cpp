#include "combtop/bistellar.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <unordered_set>

#include "combtop/isomorphism.hpp"
#include "combtop/structure.hpp"

namespace combtop {

const char* to_string(MoveClass c) {
  switch (c) {
    case MoveClass::bistellar: return "bistellar";
    case MoveClass::proper_bistellar: return "proper-bistellar";
    case MoveClass::singular_bs1: return "singular-bs1";
    case MoveClass::singular_bs2: return "singular-bs2";
    case MoveClass::invalid: return "invalid";
  }
  return "?";
}

namespace {

int facets_inside(const SimplicialComplex& k, Face a) {
  int n = 0;
  for (Face f : k.facets()) n += f.is_subset_of(a);
  return n;
}

Face core_unchecked(const SimplicialComplex& k, Face a) {
  Face beta;
  a.for_each_vertex([&](int x) {
    if (k.is_facet(a.without(x))) beta = beta.with(x);
  });
  return beta;
}

int fresh_vertex(const SimplicialComplex& k) {
  const std::uint64_t used = k.vertex_set().bits();
  if (~used == 0) throw Error("vertex cap");
  return std::countr_zero(~used);
}

}  // namespace

bool is_admissible(const SimplicialComplex& k, Face a) {
  const int d = k.dim();
  if (d < 1 || !k.is_pure() || a.size() != d + 2) return false;
  const int n = facets_inside(k, a);
  return n >= 1 && n <= d + 1;
}

Face core(const SimplicialComplex& k, Face a) {
  if (!is_admissible(k, a)) throw Error("inadmissible A");
  return core_unchecked(k, a);
}

SimplicialComplex apply_generalized_move(const SimplicialComplex& k, Face a) {
  if (!is_admissible(k, a)) throw Error("inadmissible A");
  std::vector<Face> gens;
  for (Face f : k.facets()) {
    if (!f.is_subset_of(a)) gens.push_back(f);
  }
  a.for_each_vertex([&](int x) {
    const Face side = a.without(x);
    if (!k.is_facet(side)) gens.push_back(side);
  });
  return SimplicialComplex::generated_by(std::move(gens));
}

MoveDescriptor classify_move(const SimplicialComplex& k, Face a) {
  if (!is_admissible(k, a)) throw Error("inadmissible A");
  MoveDescriptor m;
  m.a_set = a;
  m.beta = core_unchecked(k, a);
  m.alpha = a - m.beta;
  m.i = m.alpha.dim();
  const int d = k.dim();
  m.bs1 = !k.contains(m.beta);
  m.bs2 = m.alpha.dim() == d || link(k, m.alpha).vertex_set() == m.beta;
  if (!m.bs1)
    m.classification = MoveClass::singular_bs1;
  else if (!m.bs2)
    m.classification = MoveClass::singular_bs2;
  else if (m.i >= 1 && m.i <= d - 1)
    m.classification = MoveClass::proper_bistellar;
  else
    m.classification = MoveClass::bistellar;
  return m;
}

std::vector<MoveDescriptor> enumerate_moves(const SimplicialComplex& k, MoveClassSet filter, bool include_new_vertex) {
  std::vector<MoveDescriptor> out;
  if (k.dim() < 1 || !k.is_pure()) return out;
  // Every admissible A contains a facet, so A = facet ∪ {v}.
  std::vector<Face> candidates;
  std::unordered_set<Face> seen;
  const Face verts = k.vertex_set();
  for (Face f : k.facets()) {
    (verts - f).for_each_vertex([&](int v) {
      const Face a = f.with(v);
      if (seen.insert(a).second) candidates.push_back(a);
    });
  }
  if (include_new_vertex) {
    const int fresh = fresh_vertex(k);
    for (Face f : k.facets()) candidates.push_back(f.with(fresh));
  }
  std::sort(candidates.begin(), candidates.end(), LexLess{});
  for (Face a : candidates) {
    if (!is_admissible(k, a)) continue;
    MoveDescriptor m = classify_move(k, a);
    if (filter.contains(m.classification)) out.push_back(m);
  }
  return out;
}

namespace {

bool goal_reached(const SimplicialComplex& k, const FlipGoal& goal) {
  switch (goal.kind) {
    case FlipGoal::Kind::standard_sphere:
      return k.num_vertices() == k.dim() + 2 && k.num_facets() == k.dim() + 2;
    case FlipGoal::Kind::facet_count:
      return k.num_facets() == goal.facet_count;
    case FlipGoal::Kind::isomorphic_to:
      return k.num_vertices() == goal.target.num_vertices() && k.num_facets() == goal.target.num_facets() &&
             are_isomorphic(k, goal.target).has_value();
  }
  return false;
}

double energy(const SimplicialComplex& k) {
  int min_deg = kMaxVertices;
  k.vertex_set().for_each_vertex([&](int v) { min_deg = std::min(min_deg, degree(k, Face::single(v))); });
  return static_cast<double>(k.num_facets()) + 0.01 * min_deg;
}

std::vector<MoveDescriptor> walk_moves(const SimplicialComplex& k, bool insertion, bool removal) {
  std::vector<MoveDescriptor> moves = enumerate_moves(k, MoveClassSet::bistellar_only(), insertion);
  // Inside V(K) the improper bistellar moves are exactly the vertex removals
  // (i = 0); i = d moves need a fresh vertex.
  std::erase_if(moves, [&](const MoveDescriptor& m) {
    if (m.classification == MoveClass::proper_bistellar) return false;
    if (m.i == 0) return !removal;
    return !insertion;
  });
  return moves;
}

std::string trace_key(const FlipTrace& t) {
  std::string key;
  for (const auto& m : t.moves) key += m.a_set.to_string() + ";";
  return key;
}

std::optional<FlipTrace> anneal_once(const SimplicialComplex& start, const FlipGoal& goal, const FlipSchedule& s,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SimplicialComplex current = start;
  double e = energy(current);
  FlipTrace trace;
  trace.start = start.canonical_encoding();
  for (int step = 0; step < s.steps; ++step) {
    if (goal_reached(current, goal)) {
      trace.end = current.canonical_encoding();
      return trace;
    }
    const auto moves = walk_moves(current, s.allow_vertex_insertion, true);
    if (moves.empty()) return std::nullopt;
    const double frac = s.steps > 1 ? static_cast<double>(step) / (s.steps - 1) : 1.0;
    const double temp = s.t_start * std::pow(s.t_end / s.t_start, frac);
    const auto& m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    SimplicialComplex next = apply_generalized_move(current, m.a_set);
    const double e2 = energy(next);
    if (e2 <= e || unit(rng) < std::exp((e - e2) / temp)) {
      current = std::move(next);
      e = e2;
      trace.moves.push_back(m);
    }
  }
  if (goal_reached(current, goal)) {
    trace.end = current.canonical_encoding();
    return trace;
  }
  return std::nullopt;
}

}  // namespace

std::optional<FlipTrace> flip_search(const SimplicialComplex& k, const FlipGoal& goal, const FlipSchedule& schedule,
                                     std::uint64_t seed) {
  if (k.dim() < 1 || !is_weak_pseudomanifold(k)) throw Error("flip_search: input is not a weak pseudomanifold");
  std::vector<std::optional<FlipTrace>> results(static_cast<std::size_t>(std::max(schedule.restarts, 1)));
  auto run = [&](std::size_t r) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(r)};
    std::uint64_t s = 0;
    std::vector<std::uint64_t> out(1);
    seq.generate(out.begin(), out.end());
    s = out[0];
    results[r] = anneal_once(k, goal, schedule, s);
  };
  if (schedule.threads > 1) {
    std::vector<std::future<void>> jobs;
    for (std::size_t r = 0; r < results.size(); ++r) jobs.push_back(std::async(std::launch::async, run, r));
    for (auto& j : jobs) j.get();
  } else {
    for (std::size_t r = 0; r < results.size(); ++r) run(r);
  }
  std::optional<FlipTrace> best;
  for (auto& r : results) {
    if (!r) continue;
    if (!best || r->moves.size() < best->moves.size() ||
        (r->moves.size() == best->moves.size() && trace_key(*r) < trace_key(*best)))
      best = std::move(r);
  }
  return best;
}

SimplicialComplex replay(const SimplicialComplex& k, const FlipTrace& trace) {
  if (!trace.start.empty() && trace.start != k.canonical_encoding()) throw Error("replay: start complex mismatch");
  SimplicialComplex current = k;
  for (const auto& m : trace.moves) {
    const MoveDescriptor again = classify_move(current, m.a_set);
    if (again != m) throw Error("replay: move " + m.a_set.to_string() + " no longer matches its descriptor");
    if (again.classification != MoveClass::bistellar && again.classification != MoveClass::proper_bistellar)
      throw Error("replay: singular move in trace");
    current = apply_generalized_move(current, m.a_set);
  }
  if (!trace.end.empty() && trace.end != current.canonical_encoding()) throw Error("replay: end complex mismatch");
  return current;
}

FlipTrace random_bistellar_walk(const SimplicialComplex& k, const RandomWalkOptions& options, std::uint64_t seed,
                                SimplicialComplex* end) {
  std::mt19937_64 rng(seed);
  SimplicialComplex current = k;
  FlipTrace trace;
  trace.start = k.canonical_encoding();
  for (int step = 0; step < options.steps; ++step) {
    const bool can_insert =
        options.allow_insertion && (options.max_vertices == 0 || current.num_vertices() < options.max_vertices);
    const auto moves = walk_moves(current, can_insert, options.allow_removal);
    if (moves.empty()) break;
    const auto& m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    current = apply_generalized_move(current, m.a_set);
    trace.moves.push_back(m);
  }
  trace.end = current.canonical_encoding();
  if (end != nullptr) *end = current;
  return trace;
}

}  // namespace combtop
