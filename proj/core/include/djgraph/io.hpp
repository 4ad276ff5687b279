#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "djgraph/claims.hpp"
#include "djgraph/graph.hpp"
#include "djgraph/search.hpp"

namespace djgraph {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedGraph {
  GeometricGraph graph;
  std::string name;
};

// Graph interchange document: {"name"?: str, "points": [[x, y], ...],
// "edges": [[u, v], ...]} with integer-only coordinates.  Floating point
// coordinates are rejected outright rather than rounded.
NamedGraph parse_graph_json(const std::string& text);
NamedGraph read_graph_file(const std::string& path);
std::string graph_json(const GeometricGraph& g, const std::string& name);

// Full analysis document: aggregates plus the per-vertex data, with the
// graph embedded so the document can be re-audited on its own.  Exact
// rationals are strings ("5", "22/7"); counts are JSON integers; fields whose
// machinery does not apply are null.
std::string analyze_report_json(const GeometricGraph& g,
                                const std::string& name);

// Claim reports as a JSON document and as fixed-format text lines.
std::string claim_reports_json(const std::string& name,
                               const std::vector<ClaimReport>& reports);
std::string claim_report_line(const ClaimReport& report);

std::string search_report_json(const SearchReport& report);

// CSV tally export: header then one row per claim.
std::string tally_csv(const SearchReport& report);

// Recomputes an analysis document from its embedded graph and lists every
// field that disagrees, including internal inconsistencies such as a total
// that does not match the per-edge counts.
struct ReportAudit {
  bool consistent = true;
  std::vector<std::string> mismatches;
};

ReportAudit audit_analyze_report(const std::string& report_text);

// True when the document carries an embedded analysis (aggregates section)
// rather than a bare graph.
bool looks_like_analyze_report(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace djgraph
