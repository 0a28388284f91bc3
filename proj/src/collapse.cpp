#include "combtop/collapse.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace combtop {

std::vector<CollapseStep> free_faces(const SimplicialComplex& k) {
  std::vector<CollapseStep> out;
  const auto& facets = k.facets();
  for (Face sigma : facets) {
    if (sigma.size() < 2) continue;
    sigma.for_each_vertex([&](int v) {
      const Face tau = sigma.without(v);
      const bool elsewhere = std::any_of(facets.begin(), facets.end(),
                                         [&](Face g) { return g != sigma && tau.is_subset_of(g); });
      if (!elsewhere) out.push_back({tau, sigma});
    });
  }
  std::sort(out.begin(), out.end(), [](const CollapseStep& a, const CollapseStep& b) {
    return a.free_face != b.free_face ? lex_less(a.free_face, b.free_face) : lex_less(a.coface, b.coface);
  });
  return out;
}

SimplicialComplex elementary_collapse(const SimplicialComplex& k, const CollapseStep& step) {
  const Face tau = step.free_face;
  const Face sigma = step.coface;
  if (tau.empty() || !tau.is_proper_subset_of(sigma) || sigma.size() != tau.size() + 1 || !k.is_facet(sigma))
    throw Error("not a free pair");
  for (Face g : k.facets()) {
    if (g != sigma && tau.is_subset_of(g)) throw Error("not a free pair");
  }
  std::vector<Face> gens;
  for (Face g : k.facets()) {
    if (g != sigma) gens.push_back(g);
  }
  sigma.for_each_vertex([&](int v) {
    const Face side = sigma.without(v);
    if (side != tau) gens.push_back(side);
  });
  return SimplicialComplex::generated_by(std::move(gens));
}

namespace {

struct BitsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : v) {
      h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Face-level search state over the face lattice of the start complex.
class CollapseSearch {
 public:
  CollapseSearch(const SimplicialComplex& k, const SimplicialComplex* target, std::uint64_t budget)
      : budget_(budget) {
    faces_ = k.all_faces();
    const std::size_t n = faces_.size();
    std::unordered_map<Face, int> index;
    index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) index.emplace(faces_[i], static_cast<int>(i));
    cofaces_.resize(n);
    subfaces_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Face f = faces_[i];
      if (f.size() < 2) continue;
      f.for_each_vertex([&](int v) {
        const int j = index.at(f.without(v));
        subfaces_[i].push_back(j);
        cofaces_[j].push_back(static_cast<int>(i));
      });
    }
    protected_.assign(n, false);
    std::size_t target_faces = 1;
    if (target != nullptr) {
      target_faces = 0;
      for (Face f : target->all_faces()) {
        protected_[index.at(f)] = true;
        ++target_faces;
      }
    }
    target_count_ = target_faces;
    alive_.assign((n + 63) / 64, 0);
    for (std::size_t i = 0; i < n; ++i) alive_[i / 64] |= std::uint64_t{1} << (i % 64);
    alive_count_ = n;
    live_cofaces_.resize(n);
    for (std::size_t i = 0; i < n; ++i) live_cofaces_[i] = static_cast<int>(cofaces_[i].size());
    // Dimension group boundaries (faces_ is sorted by dimension, then lex).
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || faces_[i].size() != faces_[i - 1].size()) group_start_.push_back(i);
    }
    group_start_.push_back(n);
  }

  CollapseVerdict run(const SimplicialComplex& target_complex) {
    CollapseVerdict verdict;
    if (is_terminal()) {
      verdict.status = CollapseStatus::collapsible;
      verdict.certificate = CollapseCertificate{{}, target_complex};
      return verdict;
    }
    if (candidate_pairs().empty()) {
      verdict.status = CollapseStatus::not_collapsible_exhausted;
      return verdict;
    }
    const bool found = dfs();
    verdict.nodes_explored = nodes_;
    if (aborted_) {
      verdict.status = CollapseStatus::inconclusive_budget;
    } else if (found) {
      verdict.status = CollapseStatus::collapsible;
      CollapseCertificate cert;
      for (auto [t, s] : path_) cert.steps.push_back({faces_[t], faces_[s]});
      cert.terminal = target_complex;
      verdict.certificate = std::move(cert);
    } else {
      verdict.status = CollapseStatus::not_collapsible_exhausted;
    }
    return verdict;
  }

 private:
  bool alive(int i) const { return (alive_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1U; }
  void set_alive(int i, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (v)
      alive_[static_cast<std::size_t>(i) / 64] |= bit;
    else
      alive_[static_cast<std::size_t>(i) / 64] &= ~bit;
  }

  bool is_terminal() const { return alive_count_ == target_count_; }

  int live_coface(int tau) const {
    for (int s : cofaces_[tau]) {
      if (alive(s)) return s;
    }
    return -1;
  }

  // Free pairs, larger dimension first and lexicographic within a dimension.
  std::vector<std::pair<int, int>> candidate_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t g = group_start_.size() - 1; g-- > 0;) {
      for (std::size_t i = group_start_[g]; i < group_start_[g + 1]; ++i) {
        const int t = static_cast<int>(i);
        if (!alive(t) || protected_[i] || live_cofaces_[i] != 1) continue;
        out.emplace_back(t, live_coface(t));
      }
    }
    return out;
  }

  void remove(int i) {
    set_alive(i, false);
    --alive_count_;
    for (int j : subfaces_[i]) --live_cofaces_[j];
  }
  void restore(int i) {
    set_alive(i, true);
    ++alive_count_;
    for (int j : subfaces_[i]) ++live_cofaces_[j];
  }

  bool dfs() {
    if (is_terminal()) return true;
    if (failed_.contains(alive_)) return false;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    for (auto [t, s] : candidate_pairs()) {
      remove(s);
      remove(t);
      path_.emplace_back(t, s);
      const bool ok = dfs();
      if (ok) return true;
      path_.pop_back();
      restore(t);
      restore(s);
      if (aborted_) return false;
    }
    failed_.insert(alive_);
    return false;
  }

  std::vector<Face> faces_;
  std::vector<std::vector<int>> cofaces_;
  std::vector<std::vector<int>> subfaces_;
  std::vector<bool> protected_;
  std::vector<std::size_t> group_start_;
  std::vector<std::uint64_t> alive_;
  std::vector<int> live_cofaces_;
  std::size_t alive_count_ = 0;
  std::size_t target_count_ = 1;
  std::vector<std::pair<int, int>> path_;
  std::unordered_set<std::vector<std::uint64_t>, BitsHash> failed_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
  bool aborted_ = false;
};

}  // namespace

CollapseVerdict is_collapsible(const SimplicialComplex& k, std::uint64_t budget) {
  if (k.empty()) return {};
  CollapseSearch search(k, nullptr, budget);
  // The terminal point is whichever vertex survives; reported after the run.
  CollapseVerdict v = search.run(SimplicialComplex{});
  if (v.certificate) {
    // The surviving vertex is V(K) minus every vertex removed as a free face.
    Face removed;
    for (const auto& s : v.certificate->steps) {
      if (s.free_face.size() == 1) removed = removed | s.free_face;
    }
    const Face survivor = k.vertex_set() - removed;
    if (survivor.size() != 1) throw InvariantViolation("collapse search ended without a single vertex");
    v.certificate->terminal = SimplicialComplex::from_facets({survivor});
  }
  return v;
}

CollapseVerdict collapses_to(const SimplicialComplex& k, const SimplicialComplex& l, std::uint64_t budget) {
  if (l.empty()) throw Error("collapses_to: target must be non-empty");
  if (!is_subcomplex(l, k)) throw Error("collapses_to: target is not a subcomplex");
  CollapseSearch search(k, &l, budget);
  return search.run(l);
}

bool verify_certificate(const SimplicialComplex& k, const CollapseCertificate& cert) {
  std::set<Face, DimLexLess> faces;
  for (Face f : k.all_faces()) faces.insert(f);
  for (const CollapseStep& step : cert.steps) {
    const Face tau = step.free_face;
    const Face sigma = step.coface;
    if (tau.empty() || !tau.is_proper_subset_of(sigma) || sigma.size() != tau.size() + 1) return false;
    if (!faces.contains(tau) || !faces.contains(sigma)) return false;
    for (Face f : faces) {
      if (f != sigma && tau.is_proper_subset_of(f)) return false;
    }
    faces.erase(tau);
    faces.erase(sigma);
  }
  std::set<Face, DimLexLess> expected;
  for (Face f : cert.terminal.all_faces()) expected.insert(f);
  return faces == expected;
}

const char* to_string(CollapseStatus s) {
  switch (s) {
    case CollapseStatus::collapsible: return "collapsible";
    case CollapseStatus::not_collapsible_exhausted: return "not-collapsible-exhausted";
    case CollapseStatus::inconclusive_budget: return "inconclusive-budget";
  }
  return "?";
}

}  // namespace combtop
