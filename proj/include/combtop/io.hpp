#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combtop/bistellar.hpp"
#include "combtop/census.hpp"
#include "combtop/collapse.hpp"
#include "combtop/complex.hpp"
#include "combtop/homology.hpp"
#include "combtop/recognition.hpp"

namespace combtop {

inline constexpr const char* kToolVersion = "combtop 0.3.1";

struct ParsedFacets {
  SimplicialComplex complex;
  /// Token for each vertex id when the input used non-numeric labels.
  std::vector<std::string> labels;
  std::vector<std::string> warnings;
};

/// One facet per line, whitespace-separated labels, '#' starts a comment.
/// Labels are integers 0..63, or alphanumeric tokens numbered in order of
/// first appearance (a "# labels: a b c" header fixes that order). Errors
/// carry the line number; dominated facets are absorbed with a warning.
ParsedFacets parse_facets(std::string_view text);

/// Facets in lexicographic order, one per line. With labels, a header line
/// records the token order so the output parses back to the same complex.
std::string write_facets(const SimplicialComplex& k, const std::vector<std::string>& labels = {});

/// "1 2 3|1 2 4" back to a complex; "" is the void complex.
SimplicialComplex parse_encoding(std::string_view encoding);
Face parse_face(std::string_view text);

/// Line-oriented key-value tree: "key: value", children indented by two
/// spaces. Keys may not contain ':' and values may not contain newlines.
struct ReportNode {
  std::string key;
  std::string value;
  std::vector<ReportNode> children;

  ReportNode& add(std::string k, std::string v = {});
  const ReportNode* find(std::string_view k) const;
  /// Throws Error when missing.
  const ReportNode& at(std::string_view k) const;
  std::vector<const ReportNode*> all(std::string_view k) const;
};

std::string serialize(const ReportNode& root);
ReportNode parse_report(std::string_view text);

/// Root node carrying the tool version, the input encoding and the seed.
ReportNode make_document(std::string kind, const SimplicialComplex* input, std::optional<std::uint64_t> seed = {});

void add_info(ReportNode& parent, const SimplicialComplex& k);
void add_betti(ReportNode& parent, const BettiVector& b);
void add_collapse_verdict(ReportNode& parent, const CollapseVerdict& v);
void add_collapse_certificate(ReportNode& parent, const CollapseCertificate& c);
void add_move(ReportNode& parent, const MoveDescriptor& m);
void add_flip_trace(ReportNode& parent, const FlipTrace& t);
void add_manifold_verdict(ReportNode& parent, const ManifoldVerdict& v);
void add_sphere_certificate(ReportNode& parent, const SphereCertificate& c);
void add_census(ReportNode& parent, const CensusResult& r);
void add_sampling(ReportNode& parent, const SamplingReport& r);

/// Inverses of the add_* functions above; `node` is the node they created.
CollapseCertificate read_collapse_certificate(const ReportNode& node);
SphereCertificate read_sphere_certificate(const ReportNode& node);
FlipTrace read_flip_trace(const ReportNode& node);
MoveDescriptor read_move(const ReportNode& node);

}  // namespace combtop
