#include "djgraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "djgraph/analysis.hpp"

namespace djgraph {

namespace {

using ordered_json = nlohmann::ordered_json;

std::int64_t integer_field(const ordered_json& j, const std::string& where) {
  if (j.is_number_float()) {
    throw IoError(where + ": floating point values are not accepted");
  }
  if (!j.is_number_integer()) {
    throw IoError(where + ": expected an integer");
  }
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw IoError(where + ": integer out of range");
  }
  return j.get<std::int64_t>();
}

NamedGraph graph_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw IoError("graph document: expected an object");
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw IoError("graph document: missing \"points\" array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw IoError("graph document: missing \"edges\" array");
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw IoError("graph document: \"name\" must be a string");
    }
    name = doc["name"].get<std::string>();
  }
  std::vector<Point> points;
  points.reserve(doc["points"].size());
  for (std::size_t i = 0; i < doc["points"].size(); ++i) {
    const auto& entry = doc["points"][i];
    if (!entry.is_array() || entry.size() != 2) {
      throw IoError("point " + std::to_string(i) +
                    ": expected a two-element array");
    }
    const std::string where = "point " + std::to_string(i);
    points.push_back(Point{integer_field(entry[0], where),
                           integer_field(entry[1], where)});
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(doc["edges"].size());
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& entry = doc["edges"][i];
    if (!entry.is_array() || entry.size() != 2) {
      throw IoError("edge " + std::to_string(i) +
                    ": expected a two-element array");
    }
    const std::string where = "edge " + std::to_string(i);
    const std::int64_t a = integer_field(entry[0], where);
    const std::int64_t b = integer_field(entry[1], where);
    const auto lo = std::numeric_limits<VertexId>::min();
    const auto hi = std::numeric_limits<VertexId>::max();
    if (a < lo || a > hi || b < lo || b > hi) {
      throw IoError(where + ": vertex index out of range");
    }
    edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  return NamedGraph{GeometricGraph(std::move(points), edges), std::move(name)};
}

ordered_json graph_body(const GeometricGraph& g) {
  ordered_json body;
  body["points"] = ordered_json::array();
  for (const Point& p : g.points()) {
    body["points"].push_back(ordered_json::array({p.x, p.y}));
  }
  body["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) {
    body["edges"].push_back(ordered_json::array({e.u, e.v}));
  }
  return body;
}

ordered_json edge_list_json(const GeometricGraph& g,
                            const std::vector<std::size_t>& edge_ids) {
  ordered_json out = ordered_json::array();
  for (std::size_t ei : edge_ids) {
    const Edge e = g.edge(ei);
    out.push_back(ordered_json::array({e.u, e.v}));
  }
  return out;
}

ordered_json aggregates_json(const GeometricGraph& g,
                             const GraphAggregates& a) {
  (void)g;
  ordered_json out;
  out["n"] = a.n;
  out["e"] = a.e;
  out["dj_total"] = a.dj_total;
  out["m_max"] = a.m_max;
  out["dj_per_edge"] = a.dj_per_edge;
  out["avg_degree"] =
      a.avg_degree ? ordered_json(exact_str(*a.avg_degree)) : ordered_json();
  out["n_l"] = a.n_l ? ordered_json(*a.n_l) : ordered_json();
  out["n_r"] = a.n_r ? ordered_json(*a.n_r) : ordered_json();
  out["t_l"] = a.t_l ? ordered_json(*a.t_l) : ordered_json();
  out["t_r"] = a.t_r ? ordered_json(*a.t_r) : ordered_json();
  out["n_ell_pairs"] =
      a.n_ell_pairs ? ordered_json(*a.n_ell_pairs) : ordered_json();
  out["potential"] =
      a.potential ? ordered_json(exact_str(*a.potential)) : ordered_json();
  return out;
}

ordered_json vertices_json(const GeometricGraph& g) {
  const bool lc = is_locally_convex(g);
  ordered_json out = ordered_json::array();
  for (VertexId v = 0; v < g.n(); ++v) {
    ordered_json entry;
    entry["vertex"] = v;
    entry["degree"] = g.degree(v);
    entry["is_convex"] = is_convex_vertex(g, v);
    if (lc && g.degree(v) >= 1) {
      const VertexLocalData d = vertex_local_data(g, v);
      entry["leftmost"] = d.leftmost;
      entry["rightmost"] = d.rightmost;
      entry["alpha_l"] = d.alpha_l;
      entry["alpha_r"] = d.alpha_r;
      entry["delta_l"] = d.delta_l;
      entry["delta_r"] = d.delta_r;
      entry["beta_l"] = d.beta_l;
      entry["beta_r"] = d.beta_r;
      entry["set_L"] = edge_list_json(g, d.set_L);
      entry["set_R"] = edge_list_json(g, d.set_R);
      entry["set_Lp"] = edge_list_json(g, d.set_Lp);
      entry["set_Rp"] = edge_list_json(g, d.set_Rp);
      entry["dj_l"] = edge_list_json(g, d.dj_l);
      entry["dj_r"] = edge_list_json(g, d.dj_r);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

ordered_json analyze_json(const GeometricGraph& g, const std::string& name) {
  ordered_json doc;
  doc["schema"] = "djgraph-analysis-1";
  doc["name"] = name;
  doc["graph"] = graph_body(g);
  doc["aggregates"] = aggregates_json(g, aggregates(g));
  doc["vertices"] = vertices_json(g);
  return doc;
}

ordered_json rat_or_null(const std::optional<BigRat>& v) {
  return v ? ordered_json(exact_str(*v)) : ordered_json();
}

ordered_json claim_report_json(const ClaimReport& r) {
  ordered_json out;
  out["claim"] = std::string(claim_name(r.claim));
  out["verdict"] = std::string(verdict_name(r.verdict));
  out["lhs"] = rat_or_null(r.lhs);
  out["rhs"] = rat_or_null(r.rhs);
  if (r.witness) {
    ordered_json w;
    if (r.witness->vertex) w["vertex"] = *r.witness->vertex;
    if (r.witness->edge) {
      w["edge"] = ordered_json::array({r.witness->edge->u, r.witness->edge->v});
    }
    w["note"] = r.witness->note;
    out["witness"] = std::move(w);
  } else {
    out["witness"] = ordered_json();
  }
  ordered_json ctx;
  ctx["locally_convex"] = r.context.locally_convex;
  ctx["min_degree"] = r.context.min_degree;
  ctx["two_e_ge_n"] = r.context.two_e_ge_n;
  ordered_json notes = ordered_json::object();
  for (const auto& [k, v] : r.context.notes) notes[k] = v;
  ctx["notes"] = std::move(notes);
  out["context"] = std::move(ctx);
  return out;
}

ordered_json gen_spec_json(const GenSpec& spec) {
  ordered_json out;
  out["kind"] = spec.kind;
  out["n"] = spec.n;
  if (spec.kind == "extremal_gnk") out["k"] = spec.k;
  if (spec.kind == "random_convex" || spec.kind == "random_general") {
    out["p"] = prob_str(spec.p);
    out["seed"] = spec.seed;
  }
  if (spec.kind == "random_general") out["box"] = spec.box;
  return out;
}

void diff_json(const ordered_json& expected, const ordered_json& actual,
               const std::string& path, std::vector<std::string>& out) {
  if (expected == actual) return;
  if (expected.is_object() && actual.is_object()) {
    for (const auto& [key, value] : expected.items()) {
      const std::string sub = path + "/" + key;
      if (!actual.contains(key)) {
        out.push_back(sub + ": missing");
      } else {
        diff_json(value, actual[key], sub, out);
      }
    }
    for (const auto& [key, value] : actual.items()) {
      (void)value;
      if (!expected.contains(key)) out.push_back(path + "/" + key + ": extra");
    }
    return;
  }
  if (expected.is_array() && actual.is_array() &&
      expected.size() == actual.size()) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      diff_json(expected[i], actual[i], path + "/" + std::to_string(i), out);
    }
    return;
  }
  out.push_back(path + ": expected " + expected.dump() + ", found " +
                actual.dump());
}

}  // namespace

NamedGraph parse_graph_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("invalid JSON: ") + ex.what());
  }
  return graph_from_json(doc);
}

NamedGraph read_graph_file(const std::string& path) {
  return parse_graph_json(read_text_file(path));
}

std::string graph_json(const GeometricGraph& g, const std::string& name) {
  ordered_json doc;
  if (!name.empty()) doc["name"] = name;
  doc.update(graph_body(g));
  return doc.dump(2) + "\n";
}

std::string analyze_report_json(const GeometricGraph& g,
                                const std::string& name) {
  return analyze_json(g, name).dump(2) + "\n";
}

std::string claim_reports_json(const std::string& name,
                               const std::vector<ClaimReport>& reports) {
  ordered_json doc;
  doc["schema"] = "djgraph-claims-1";
  doc["name"] = name;
  doc["reports"] = ordered_json::array();
  for (const ClaimReport& r : reports) {
    doc["reports"].push_back(claim_report_json(r));
  }
  return doc.dump(2) + "\n";
}

std::string claim_report_line(const ClaimReport& r) {
  std::string line = std::string(claim_name(r.claim)) + ": " +
                     std::string(verdict_name(r.verdict));
  if (r.lhs) line += " lhs=" + exact_str(*r.lhs);
  if (r.rhs) line += " rhs=" + exact_str(*r.rhs);
  if (r.verdict == Verdict::not_applicable) {
    for (const auto& [k, v] : r.context.notes) {
      if (k == "not_applicable_reason") {
        line += " reason=\"" + v + "\"";
        break;
      }
    }
  }
  if (r.witness) {
    if (r.witness->vertex) {
      line += " witness=vertex:" + std::to_string(*r.witness->vertex);
    } else if (r.witness->edge) {
      line += " witness=edge:" + std::to_string(r.witness->edge->u) + "-" +
              std::to_string(r.witness->edge->v);
    }
    if (!r.witness->note.empty()) line += " \"" + r.witness->note + "\"";
  }
  return line;
}

std::string search_report_json(const SearchReport& report) {
  ordered_json doc;
  doc["schema"] = "djgraph-search-1";
  ordered_json cfg;
  cfg["family"] = report.config.family;
  cfg["n_range"] =
      ordered_json::array({report.config.n_min, report.config.n_max});
  cfg["p_values"] = ordered_json::array();
  for (Prob p : report.config.p_values) cfg["p_values"].push_back(prob_str(p));
  if (report.config.family == "random_general") {
    cfg["box"] = report.config.box;
  }
  cfg["min_degree"] = report.config.min_degree;
  cfg["instances"] = report.config.instances;
  cfg["master_seed"] = report.config.master_seed;
  cfg["claims"] = ordered_json::array();
  for (ClaimId id : report.config.claims) {
    cfg["claims"].push_back(std::string(claim_name(id)));
  }
  cfg["stop_on_violation"] = report.config.stop_on_violation;
  doc["config"] = std::move(cfg);
  doc["instances_run"] = report.instances_run;

  doc["tallies"] = ordered_json::array();
  for (const ClaimTally& t : report.tallies) {
    ordered_json row;
    row["claim"] = std::string(claim_name(t.claim));
    row["holds"] = t.holds;
    row["violated"] = t.violated;
    row["not_applicable"] = t.not_applicable;
    doc["tallies"].push_back(std::move(row));
  }

  doc["violations"] = ordered_json::array();
  for (const ViolationRecord& v : report.violations) {
    ordered_json row;
    row["instance"] = v.instance_index;
    row["label"] = v.candidate_counterexample
                       ? "candidate counterexample - requires manual audit"
                       : "violation";
    row["spec"] = gen_spec_json(v.spec);
    row["report"] = claim_report_json(v.report);
    doc["violations"].push_back(std::move(row));
  }

  const auto& claims = report.config.claims;
  if (std::find(claims.begin(), claims.end(), ClaimId::conjecture_1) !=
      claims.end()) {
    doc["conjecture_1_ratios"] = ordered_json::array();
    for (const RatioBucket& b : report.conjecture1_ratios) {
      ordered_json row;
      row["m"] = b.m;
      row["max_e_over_n"] = exact_str(b.max_e_over_n);
      row["spec"] = gen_spec_json(b.spec);
      doc["conjecture_1_ratios"].push_back(std::move(row));
    }
  }
  if (std::find(claims.begin(), claims.end(), ClaimId::conjecture_2) !=
      claims.end()) {
    if (report.conjecture2_margin) {
      ordered_json row;
      row["min_margin"] = exact_str(report.conjecture2_margin->margin);
      row["spec"] = gen_spec_json(report.conjecture2_margin->spec);
      doc["conjecture_2_margin"] = std::move(row);
    } else {
      doc["conjecture_2_margin"] = ordered_json();
    }
  }
  return doc.dump(2) + "\n";
}

std::string tally_csv(const SearchReport& report) {
  std::string out = "claim,holds,violated,not_applicable\n";
  for (const ClaimTally& t : report.tallies) {
    out += std::string(claim_name(t.claim)) + "," + std::to_string(t.holds) +
           "," + std::to_string(t.violated) + "," +
           std::to_string(t.not_applicable) + "\n";
  }
  return out;
}

ReportAudit audit_analyze_report(const std::string& report_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(report_text);
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("invalid JSON: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("graph")) {
    throw IoError("analysis document: missing embedded graph");
  }
  ReportAudit audit;

  // Internal handshake first: the total must match the per-edge counts as
  // written, before any recomputation.
  if (doc.contains("aggregates") && doc["aggregates"].is_object()) {
    const auto& agg = doc["aggregates"];
    if (agg.contains("dj_total") && agg.contains("dj_per_edge") &&
        agg["dj_per_edge"].is_array()) {
      std::int64_t sum = 0;
      bool numeric = agg["dj_total"].is_number_integer();
      for (const auto& c : agg["dj_per_edge"]) {
        if (!c.is_number_integer()) {
          numeric = false;
          break;
        }
        sum += c.get<std::int64_t>();
      }
      if (numeric &&
          sum != 2 * agg["dj_total"].get<std::int64_t>()) {
        audit.mismatches.push_back(
            "/aggregates: dj_per_edge sums to " + std::to_string(sum) +
            ", expected twice dj_total");
      }
    }
  }

  NamedGraph named = graph_from_json([&] {
    ordered_json g = doc["graph"];
    if (doc.contains("name") && doc["name"].is_string()) {
      g["name"] = doc["name"];
    }
    return g;
  }());
  const ordered_json fresh = analyze_json(named.graph, named.name);
  diff_json(fresh, doc, "", audit.mismatches);
  audit.consistent = audit.mismatches.empty();
  return audit;
}

bool looks_like_analyze_report(const std::string& text) {
  const ordered_json doc = ordered_json::parse(text, nullptr, false);
  return doc.is_object() && doc.contains("aggregates");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace djgraph
