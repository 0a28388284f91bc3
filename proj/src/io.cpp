#include "combtop/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace combtop {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_number(std::string_view t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_token(std::string_view t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

std::string line_error(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    out.push_back(l);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> parse_ints(std::string_view s) {
  std::vector<int> out;
  for (auto t : split_ws(s)) {
    int x = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (ec != std::errc{} || p != t.data() + t.size()) throw Error("report: bad integer '" + std::string(t) + "'");
    out.push_back(x);
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string step_text(const CollapseStep& s) { return s.free_face.to_string() + " | " + s.coface.to_string(); }

}  // namespace

Face parse_face(std::string_view text) {
  Face f;
  for (int v : parse_ints(text)) {
    if (v < 0 || v >= kMaxVertices) throw Error("vertex cap");
    f = f.with(v);
  }
  return f;
}

SimplicialComplex parse_encoding(std::string_view encoding) {
  std::vector<Face> facets;
  std::size_t start = 0;
  while (start < encoding.size()) {
    std::size_t end = encoding.find('|', start);
    if (end == std::string_view::npos) end = encoding.size();
    const Face f = parse_face(encoding.substr(start, end - start));
    if (f.empty()) throw Error("encoding: empty facet");
    facets.push_back(f);
    start = end + 1;
  }
  return SimplicialComplex::generated_by(std::move(facets));
}

ParsedFacets parse_facets(std::string_view text) {
  struct RawFacet {
    std::size_t line;
    std::vector<std::string_view> tokens;
  };
  std::vector<RawFacet> raw;
  std::vector<std::string> header;
  bool numeric = true;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view l = lines[i];
    if (const auto hash = l.find('#'); hash != std::string_view::npos) {
      std::string_view comment = l.substr(hash + 1);
      const auto words = split_ws(comment);
      if (!words.empty() && words[0] == "labels:" && raw.empty()) {
        for (std::size_t w = 1; w < words.size(); ++w) header.emplace_back(words[w]);
      }
      l = l.substr(0, hash);
    }
    auto toks = split_ws(l);
    if (toks.empty()) continue;
    for (auto t : toks) {
      if (!is_token(t)) throw Error(line_error(i + 1, "malformed label '" + std::string(t) + "'"));
      numeric = numeric && is_number(t);
    }
    raw.push_back({i + 1, std::move(toks)});
  }
  if (raw.empty()) throw Error("no facets");

  ParsedFacets out;
  std::map<std::string, int, std::less<>> ids;
  if (!numeric || !header.empty()) {
    for (const auto& h : header) {
      if (ids.contains(h)) throw Error("labels header repeats '" + h + "'");
      ids.emplace(h, static_cast<int>(out.labels.size()));
      out.labels.push_back(h);
    }
  }
  std::vector<Face> facets;
  std::vector<std::size_t> facet_lines;
  for (const RawFacet& r : raw) {
    Face f;
    for (auto t : r.tokens) {
      int v = 0;
      if (numeric && header.empty()) {
        if (t.size() > 2 || std::stoi(std::string(t)) >= kMaxVertices)
          throw Error(line_error(r.line, "label overflow: '" + std::string(t) + "' exceeds 63"));
        v = std::stoi(std::string(t));
      } else {
        auto it = ids.find(t);
        if (it == ids.end()) {
          if (out.labels.size() >= static_cast<std::size_t>(kMaxVertices))
            throw Error(line_error(r.line, "label overflow: more than 64 distinct labels"));
          it = ids.emplace(std::string(t), static_cast<int>(out.labels.size())).first;
          out.labels.emplace_back(t);
        }
        v = it->second;
      }
      if (f.contains(v)) throw Error(line_error(r.line, "repeated label '" + std::string(t) + "'"));
      f = f.with(v);
    }
    facets.push_back(f);
    facet_lines.push_back(r.line);
  }
  out.complex = SimplicialComplex::generated_by(facets);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (!out.complex.is_facet(facets[i]))
      out.warnings.push_back(line_error(facet_lines[i], "facet {" + facets[i].to_string() +
                                                            "} is contained in another facet and was absorbed"));
  }
  return out;
}

std::string write_facets(const SimplicialComplex& k, const std::vector<std::string>& labels) {
  std::string out;
  if (!labels.empty()) {
    out += "# labels:";
    for (const auto& l : labels) out += " " + l;
    out += "\n";
  }
  for (Face f : k.facets()) {
    bool first = true;
    f.for_each_vertex([&](int v) {
      if (!first) out += ' ';
      first = false;
      if (labels.empty()) {
        out += std::to_string(v);
      } else {
        if (static_cast<std::size_t>(v) >= labels.size()) throw Error("write_facets: missing label for vertex");
        out += labels[static_cast<std::size_t>(v)];
      }
    });
    out += '\n';
  }
  return out;
}

ReportNode& ReportNode::add(std::string k, std::string v) {
  if (k.find(':') != std::string::npos || k.find('\n') != std::string::npos) throw Error("report: bad key " + k);
  if (v.find('\n') != std::string::npos) throw Error("report: newline in value of " + k);
  children.push_back({std::move(k), std::move(v), {}});
  return children.back();
}

const ReportNode* ReportNode::find(std::string_view k) const {
  for (const auto& c : children) {
    if (c.key == k) return &c;
  }
  return nullptr;
}

const ReportNode& ReportNode::at(std::string_view k) const {
  if (const ReportNode* n = find(k)) return *n;
  throw Error("report: missing key '" + std::string(k) + "' under '" + key + "'");
}

std::vector<const ReportNode*> ReportNode::all(std::string_view k) const {
  std::vector<const ReportNode*> out;
  for (const auto& c : children) {
    if (c.key == k) out.push_back(&c);
  }
  return out;
}

namespace {

void write_node(const ReportNode& n, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(2 * depth), ' ');
  out += n.key;
  out += ':';
  if (!n.value.empty()) {
    out += ' ';
    out += n.value;
  }
  out += '\n';
  for (const auto& c : n.children) write_node(c, depth + 1, out);
}

}  // namespace

std::string serialize(const ReportNode& root) {
  std::string out;
  for (const auto& c : root.children) write_node(c, 0, out);
  return out;
}

ReportNode parse_report(std::string_view text) {
  ReportNode root;
  std::vector<ReportNode*> stack{&root};
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view l = lines[i];
    if (l.find_first_not_of(' ') == std::string_view::npos) continue;
    const std::size_t indent = l.find_first_not_of(' ');
    if (indent % 2 != 0) throw Error(line_error(i + 1, "odd indentation"));
    const std::size_t depth = indent / 2;
    if (depth + 1 > stack.size()) throw Error(line_error(i + 1, "indentation jumps a level"));
    stack.resize(depth + 1);
    l.remove_prefix(indent);
    const auto colon = l.find(':');
    if (colon == std::string_view::npos) throw Error(line_error(i + 1, "missing ':'"));
    std::string value(l.substr(colon + 1));
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    ReportNode& child = stack.back()->add(std::string(l.substr(0, colon)), std::move(value));
    stack.push_back(&child);
  }
  return root;
}

ReportNode make_document(std::string kind, const SimplicialComplex* input, std::optional<std::uint64_t> seed) {
  ReportNode root;
  root.add("tool", kToolVersion);
  root.add("kind", std::move(kind));
  if (input != nullptr) root.add("input", input->canonical_encoding());
  if (seed) root.add("seed", std::to_string(*seed));
  return root;
}

void add_info(ReportNode& parent, const SimplicialComplex& k) {
  ReportNode& n = parent.add("info");
  n.add("vertices", std::to_string(k.num_vertices()));
  n.add("facets", std::to_string(k.num_facets()));
  n.add("dimension", std::to_string(k.dim()));
  n.add("f-vector", to_string(k.f_vector()));
  n.add("euler-characteristic", std::to_string(k.euler_characteristic()));
}

void add_betti(ReportNode& parent, const BettiVector& b) { parent.add("reduced-betti", join_ints(b.reduced_betti)); }

void add_collapse_certificate(ReportNode& parent, const CollapseCertificate& c) {
  ReportNode& n = parent.add("collapse-certificate");
  n.add("terminal", c.terminal.canonical_encoding());
  n.add("steps", std::to_string(c.steps.size()));
  for (const auto& s : c.steps) n.add("step", step_text(s));
}

void add_collapse_verdict(ReportNode& parent, const CollapseVerdict& v) {
  ReportNode& n = parent.add("collapse");
  n.add("status", to_string(v.status));
  n.add("nodes-explored", std::to_string(v.nodes_explored));
  if (v.certificate) add_collapse_certificate(n, *v.certificate);
}

void add_move(ReportNode& parent, const MoveDescriptor& m) {
  ReportNode& n = parent.add("move");
  n.add("a-set", m.a_set.to_string());
  n.add("alpha", m.alpha.to_string());
  n.add("beta", m.beta.to_string());
  n.add("i", std::to_string(m.i));
  n.add("class", to_string(m.classification));
  n.add("bs1", yes_no(m.bs1));
  n.add("bs2", yes_no(m.bs2));
}

void add_flip_trace(ReportNode& parent, const FlipTrace& t) {
  ReportNode& n = parent.add("flip-trace");
  n.add("start", t.start);
  n.add("end", t.end);
  n.add("length", std::to_string(t.moves.size()));
  for (const auto& m : t.moves) add_move(n, m);
}

void add_manifold_verdict(ReportNode& parent, const ManifoldVerdict& v) {
  ReportNode& n = parent.add("manifold");
  n.add("status", to_string(v.status));
  if (v.failure_face) n.add("failure-face", v.failure_face->to_string());
  for (const auto& e : v.evidence) n.add("evidence", e);
}

void add_sphere_certificate(ReportNode& parent, const SphereCertificate& c) {
  ReportNode& n = parent.add("sphere-certificate");
  n.add("verdict", to_string(c.verdict));
  n.add("reason", c.reason);
  n.add("dimension", std::to_string(c.dimension));
  if (c.ball) {
    ReportNode& b = n.add("ball");
    b.add("vertices", c.ball->vertices.to_string());
    b.add("evidence", c.ball->evidence);
    b.add("complex", c.ball->ball.canonical_encoding());
    n.add("complement", c.complement.canonical_encoding());
    n.add("complement-betti", join_ints(c.complement_betti.reduced_betti));
  }
  if (c.collapse) add_collapse_certificate(n, *c.collapse);
}

void add_census(ReportNode& parent, const CensusResult& r) {
  ReportNode& n = parent.add("census");
  ReportNode& s = n.add("spec");
  s.add("max-vertices", std::to_string(r.spec.max_vertices));
  s.add("exact-vertices", yes_no(r.spec.exact_vertices));
  s.add("dimension", std::to_string(r.spec.dimension));
  s.add("max-facets", std::to_string(r.spec.max_facets));
  s.add("constraint", to_string(r.spec.constraint));
  s.add("reduce-iso", yes_no(r.spec.reduce_iso));
  s.add("symmetry-breaking", yes_no(r.spec.symmetry_breaking));
  n.add("labeled-solutions", std::to_string(r.labeled_count));
  n.add("search-nodes", std::to_string(r.nodes));
  n.add("classes", std::to_string(r.representatives.size()));
  ReportNode& per = n.add("classes-per-f-vector");
  for (const auto& [f, c] : r.classes_per_f_vector) per.add(f, std::to_string(c));
  for (const auto& k : r.representatives) n.add("representative", k.canonical_encoding());
}

void add_sampling(ReportNode& parent, const SamplingReport& r) {
  ReportNode& n = parent.add("acyclic-sampling");
  n.add("seed", std::to_string(r.seed));
  n.add("tested", std::to_string(r.tested));
  n.add("acyclic-found", std::to_string(r.acyclic_found));
  n.add("collapsible", std::to_string(r.collapsible_count));
  n.add("euler-violations", std::to_string(r.euler_violations));
  n.add("acyclic-3d-without-free-face", std::to_string(r.no_free_face_3d));
  n.add("dense-f-vector-hits", std::to_string(r.dense_fvector_hits));
  n.add("counterexamples", std::to_string(r.counterexamples.size()));
  for (const auto& c : r.counterexamples) n.add("counterexample", c);
  n.add("unresolved", std::to_string(r.unresolved.size()));
  for (const auto& c : r.unresolved) n.add("unresolved-sample", c);
}

CollapseCertificate read_collapse_certificate(const ReportNode& node) {
  CollapseCertificate c;
  c.terminal = parse_encoding(node.at("terminal").value);
  for (const ReportNode* s : node.all("step")) {
    const auto bar = s->value.find('|');
    if (bar == std::string::npos) throw Error("report: malformed collapse step '" + s->value + "'");
    c.steps.push_back({parse_face(std::string_view(s->value).substr(0, bar)),
                       parse_face(std::string_view(s->value).substr(bar + 1))});
  }
  return c;
}

SphereCertificate read_sphere_certificate(const ReportNode& node) {
  SphereCertificate c;
  const std::string& v = node.at("verdict").value;
  if (v == "combinatorial-sphere")
    c.verdict = SphereVerdict::combinatorial_sphere;
  else if (v == "precondition-failed")
    c.verdict = SphereVerdict::precondition_failed;
  else if (v == "inconclusive")
    c.verdict = SphereVerdict::inconclusive;
  else
    throw Error("report: unknown verdict '" + v + "'");
  c.reason = node.at("reason").value;
  c.dimension = std::stoi(node.at("dimension").value);
  if (const ReportNode* b = node.find("ball")) {
    c.ball = InducedBall{parse_face(b->at("vertices").value), parse_encoding(b->at("complex").value),
                         b->at("evidence").value};
    c.complement = parse_encoding(node.at("complement").value);
    c.complement_betti.reduced_betti = parse_ints(node.at("complement-betti").value);
  }
  if (const ReportNode* cc = node.find("collapse-certificate")) c.collapse = read_collapse_certificate(*cc);
  return c;
}

MoveDescriptor read_move(const ReportNode& node) {
  MoveDescriptor m;
  m.a_set = parse_face(node.at("a-set").value);
  m.alpha = parse_face(node.at("alpha").value);
  m.beta = parse_face(node.at("beta").value);
  m.i = std::stoi(node.at("i").value);
  const std::string& cls = node.at("class").value;
  for (MoveClass c : {MoveClass::bistellar, MoveClass::proper_bistellar, MoveClass::singular_bs1,
                      MoveClass::singular_bs2, MoveClass::invalid}) {
    if (cls == to_string(c)) m.classification = c;
  }
  m.bs1 = node.at("bs1").value == "yes";
  m.bs2 = node.at("bs2").value == "yes";
  return m;
}

FlipTrace read_flip_trace(const ReportNode& node) {
  FlipTrace t;
  t.start = node.at("start").value;
  t.end = node.at("end").value;
  for (const ReportNode* m : node.all("move")) t.moves.push_back(read_move(*m));
  return t;
}

}  // namespace combtop
