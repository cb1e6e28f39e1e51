#include "indpoly/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "indpoly/cover.hpp"
#include "indpoly/document.hpp"
#include "indpoly/oracle.hpp"

namespace indpoly::cli {

namespace {

using nlohmann::ordered_json;

// Reads and parses a document. Returns false after printing a diagnostic.
bool load(const std::string& path, Hypergraph& g, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    g = to_hypergraph(parse_document(buffer.str()));
  } catch (const Error& e) {
    err << path << ": " << errc_name(e.code()) << ": " << e.what() << '\n';
    return false;
  }
  return true;
}

ordered_json coefficient_array(const UniPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : coefficient_strings(p)) arr.push_back(s);
  return arr;
}

int emit_univariate(const UniPoly& poly, const ComputationReport& report, std::size_t n, const ComputeOptions& opts,
                    std::ostream& out) {
  if (opts.format == OutputFormat::Text) {
    out << to_string(poly) << '\n';
    return 0;
  }
  ordered_json doc;
  doc["n"] = n;
  doc["poly"] = coefficient_array(poly);
  doc["engine"] = std::string(engine_name(opts.cfg.engine));
  doc["nodes"] = report.nodes_visited;
  doc["cache_hits"] = report.cache_hits;
  out << doc.dump() << '\n';
  return 0;
}

}  // namespace

int cmd_compute(const std::string& path, const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
  Hypergraph g;
  if (!load(path, g, err)) return 1;
  try {
    const ComputationReport report = eval(g, opts.cfg);
    return emit_univariate(report.poly, report, g.num_vertices(), opts, out);
  } catch (const Error& e) {
    err << "evaluation failed: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
}

int cmd_cover(const std::string& path, const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
  Hypergraph g;
  if (!load(path, g, err)) return 1;
  try {
    const ComputationReport report = eval(g, opts.cfg);
    const UniPoly psi = reciprocal_transform(report.poly, g.num_vertices());
    return emit_univariate(psi, report, g.num_vertices(), opts, out);
  } catch (const Error& e) {
    err << "evaluation failed: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
}

int cmd_gscp(const std::string& path, OutputFormat format, std::ostream& out, std::ostream& err) {
  Hypergraph g;
  if (!load(path, g, err)) return 1;
  try {
    const MultiPoly4 f = gscp_eval(g);
    if (format == OutputFormat::Text) {
      out << to_string(f) << '\n';
      return 0;
    }
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : f.terms()) {
      ordered_json t;
      t["coeff"] = c.get_str();
      t["v"] = e[0];
      t["x"] = e[1];
      t["y"] = e[2];
      t["z"] = e[3];
      terms.push_back(std::move(t));
    }
    ordered_json doc;
    doc["n"] = g.num_vertices();
    doc["m"] = g.num_edges();
    doc["terms"] = std::move(terms);
    out << doc.dump() << '\n';
    return 0;
  } catch (const Error& e) {
    err << "evaluation failed: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
}

int cmd_random(const RandomSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = render_document(random_document(spec));
  } catch (const Error& e) {
    err << "invalid random spec: " << e.what() << '\n';
    return 1;
  }
  if (out_path == "-") {
    out << text;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << out_path << "'\n";
    return 1;
  }
  file << text;
  return file ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Identity checks

namespace {

class Suite {
 public:
  Suite(const EvalConfig& cfg, const std::vector<std::string>& only) : cfg_(cfg), only_(only) {}

  bool wanted(const std::string& name) const {
    return only_.empty() || std::find(only_.begin(), only_.end(), name) != only_.end();
  }

  bool small(const Hypergraph& h) const { return h.num_vertices() <= cfg_.oracle_limits.max_vertices; }

  // Reference value of I: brute force whenever affordable.
  UniPoly reference(const Hypergraph& h) const {
    return small(h) ? oracle::independence_poly_bf(h, cfg_.oracle_limits) : independence_polynomial(h, cfg_);
  }
  UniPoly engine(const Hypergraph& h) const { return independence_polynomial(h, cfg_); }
  UniPoly psi(const Hypergraph& h) const {
    return small(h) ? oracle::vertex_cover_poly_bf(h, cfg_.oracle_limits) : vertex_cover_poly(h, cfg_).psi;
  }

  // Runs `body`, which reports each case through `record`. Zero cases with
  // no explicit reason means the hypothesis never held.
  template <typename Body>
  void run(const std::string& name, Body&& body) {
    if (!wanted(name)) return;
    CheckLine line{name, CheckStatus::Pass, 0, {}};
    std::size_t failures = 0;
    auto record = [&](bool ok, const std::string& what) {
      ++line.cases;
      if (!ok) {
        if (failures++ == 0) line.detail = "first failure: " + what;
      }
    };
    try {
      body(record);
    } catch (const Error& e) {
      line.status = CheckStatus::Fail;
      line.detail = std::string(errc_name(e.code())) + ": " + e.what();
      lines_.push_back(std::move(line));
      return;
    }
    if (failures > 0) {
      line.status = CheckStatus::Fail;
    } else if (line.cases == 0) {
      line.status = CheckStatus::Skipped;
      if (line.detail.empty()) line.detail = "hypothesis not met";
    }
    lines_.push_back(std::move(line));
  }

  void skip(const std::string& name, const std::string& why) {
    if (wanted(name)) lines_.push_back({name, CheckStatus::Skipped, 0, why});
  }

  std::vector<CheckLine> take() { return std::move(lines_); }

 private:
  const EvalConfig& cfg_;
  const std::vector<std::string>& only_;
  std::vector<CheckLine> lines_;
};

std::string edge_label(const Hypergraph& g, std::size_t i) {
  std::string s = "e" + std::to_string(i) + "={";
  const Edge& e = g.edges()[i];
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k]);
  return s + "}";
}

std::vector<VertexSet> small_independent_sets(const Hypergraph& g) {
  std::vector<VertexSet> out;
  const auto& ids = g.vertices().ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i; j < ids.size(); ++j) {
      VertexSet u = i == j ? VertexSet{ids[i]} : VertexSet{ids[i], ids[j]};
      if (is_independent(g, u)) out.push_back(std::move(u));
    }
  }
  return out;
}

std::vector<VertexSet> subsets_to_expand(const Hypergraph& g) {
  std::vector<VertexSet> out;
  for (const Edge& e : g.edges()) {
    if (!e.empty()) out.push_back(e);
  }
  if (!g.vertices().empty() && g.num_vertices() <= 10) out.push_back(g.vertices());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool adjacent(const Hypergraph& g, VertexId a, VertexId b) {
  const Edge pair{a, b};
  return std::find(g.edges().begin(), g.edges().end(), pair) != g.edges().end();
}

// Cliques of size 1 to 3 in a simple graph.
std::vector<VertexSet> small_cliques(const Hypergraph& g) {
  std::vector<VertexSet> out;
  const auto& ids = g.vertices().ids();
  for (VertexId v : ids) out.push_back(VertexSet{v});
  for (const Edge& e : g.edges()) out.push_back(e);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!adjacent(g, ids[i], ids[j])) continue;
      for (std::size_t k = j + 1; k < ids.size(); ++k) {
        if (adjacent(g, ids[i], ids[k]) && adjacent(g, ids[j], ids[k])) out.push_back(VertexSet{ids[i], ids[j], ids[k]});
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "engine-agreement",   "restricted-lemma",     "vertex-recurrence",    "edge-recurrence",
      "edge-inclusion-exclusion", "edge-contraction", "vertex-subset",      "vertex-subset-ie",
      "subdivision",        "sigma",                "gscp-oracle",          "gscp-specializations",
      "psi-transform",      "psi-vertex-recurrence", "psi-edge-recurrences", "transfer-theorem",
      "simple-graph",       "exception-free",
  };
  return names;
}

std::vector<CheckLine> run_identity_checks(const Hypergraph& g, const EvalConfig& cfg,
                                           const std::vector<std::string>& only) {
  for (const auto& name : only) {
    const auto& all = identity_names();
    if (std::find(all.begin(), all.end(), name) == all.end()) {
      throw Error(Errc::InvalidArgument, "unknown identity '" + name + "'");
    }
  }
  Suite suite(cfg, only);
  const UniPoly x = UniPoly::monomial(1, 1);
  const auto fn_engine = [&](const Hypergraph& h) { return suite.engine(h); };
  const auto fn_psi = [&](const Hypergraph& h) { return suite.psi(h); };
  const bool extended = g.mode() == Mode::Extended;

  std::optional<UniPoly> cached_reference;
  auto reference = [&]() -> const UniPoly& {
    if (!cached_reference) cached_reference = suite.reference(g);
    return *cached_reference;
  };

  if (suite.small(g)) {
    suite.run("engine-agreement", [&](auto record) {
      for (EngineKind kind : all_engines) {
        for (PivotStrategy pivot : all_pivots) {
          EvalConfig c = cfg;
          c.engine = kind;
          c.pivot = pivot;
          c.memoize = true;
          record(eval(g, c).poly == reference(),
                 std::string(engine_name(kind)) + "/" + std::string(pivot_name(pivot)));
        }
      }
      // Without the memo the contraction engine is exponential in m, so the
      // unmemoized run uses the configured engine only.
      EvalConfig plain = cfg;
      plain.memoize = false;
      record(eval(g, plain).poly == reference(), std::string(engine_name(cfg.engine)) + " without memo");
    });
    suite.run("restricted-lemma", [&](auto record) {
      for (const VertexSet& u : small_independent_sets(g)) {
        const UniPoly lhs = oracle::restricted_independence_poly_bf(g, {u, {}}, cfg.oracle_limits);
        const UniPoly rhs = shift(oracle::independence_poly_bf(hide_vertices(g, u), cfg.oracle_limits), u.size());
        record(lhs == rhs, "U of size " + std::to_string(u.size()));
      }
    });
  } else {
    suite.skip("engine-agreement", "too many vertices for the oracle");
    suite.skip("restricted-lemma", "too many vertices for the oracle");
  }

  suite.run("vertex-recurrence", [&](auto record) {
    for (VertexId v : g.vertices()) {
      record(combine(step_vertex(g, v), fn_engine) == reference(), "v=" + std::to_string(v));
    }
  });

  suite.run("edge-recurrence", [&](auto record) {
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      if (!extended && g.edges()[i].size() < 2) continue;
      record(combine(step_edge(g, EdgeRef{i}), fn_engine) == reference(), edge_label(g, i));
    }
  });

  suite.run("edge-inclusion-exclusion", [&](auto record) {
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      record(combine(step_edge_ie(g, EdgeRef{i}), fn_engine) == reference(), edge_label(g, i));
    }
  });

  suite.run("edge-contraction", [&](auto record) {
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      if (g.edges()[i].empty()) continue;
      record(combine(step_edge_contract(g, EdgeRef{i}), fn_engine) == reference(), edge_label(g, i));
    }
  });

  suite.run("vertex-subset", [&](auto record) {
    for (const VertexSet& u : subsets_to_expand(g)) {
      record(combine(expand_vertex_subset(g, u), fn_engine) == reference(), "|U|=" + std::to_string(u.size()));
    }
  });

  suite.run("vertex-subset-ie", [&](auto record) {
    for (const VertexSet& u : subsets_to_expand(g)) {
      record(combine(expand_vertex_subset_ie(g, u), fn_engine) == reference(), "|U|=" + std::to_string(u.size()));
    }
  });

  suite.run("subdivision", [&](auto record) {
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      if (g.edges()[i].empty()) continue;
      record(check_subdivision_identity(g, EdgeRef{i}, cfg), edge_label(g, i));
    }
  });

  suite.run("sigma", [&](auto record) {
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      if (g.edges()[i].empty()) continue;
      record(check_sigma_identity(g, EdgeRef{i}, cfg), edge_label(g, i));
    }
  });

  const GscpLimits gscp_limits{};
  const oracle::Limits& lim = cfg.oracle_limits;
  if (g.num_vertices() <= lim.gscp_max_vertices && g.num_edges() <= lim.gscp_max_edges) {
    suite.run("gscp-oracle", [&](auto record) { record(gscp_eval(g) == oracle::gscp_bf(g, lim), "F(G)"); });
  } else {
    suite.skip("gscp-oracle", "outside the subgraph enumeration bound");
  }
  if (g.num_edges() <= gscp_limits.max_edges) {
    suite.run("gscp-specializations", [&](auto record) {
      const MultiPoly4 f = gscp_eval(g, gscp_limits);
      record(substitute(f, Integer(1), keep_x, Integer(1), Integer(0)) == reference(), "H(G,1,x,1,0)");
      record(substitute(f, keep_x, Integer(1), Integer(-1), Integer(1)) == reference(), "H(G,x,1,-1,1)");
    });
  } else {
    suite.skip("gscp-specializations", "too many edges for the subgraph recurrence");
  }

  suite.run("psi-transform", [&](auto record) {
    const std::size_t n = g.num_vertices();
    const UniPoly psi = vertex_cover_poly(g, cfg).psi;
    record(reciprocal_transform(psi, n) == reference(), "round trip");
    record(psi == suite.psi(g), "against reference");
    for (std::size_t k = 0; k <= n; ++k) {
      record(psi.coeff(k) == reference().coeff(n - k), "complement k=" + std::to_string(k));
    }
  });

  suite.run("psi-vertex-recurrence", [&](auto record) {
    for (VertexId v : g.vertices()) record(check_psi_vertex_recurrence(g, v, fn_psi), "v=" + std::to_string(v));
  });

  suite.run("psi-edge-recurrences", [&](auto record) {
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      record(check_psi_edge_recurrences(g, EdgeRef{i}, fn_psi), edge_label(g, i));
    }
  });

  suite.run("transfer-theorem", [&](auto record) {
    for (VertexId v : g.vertices()) record(check_transfer_theorem(g, step_vertex(g, v), fn_psi), "vertex step");
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      const EdgeRef e{i};
      if (extended || g.edges()[i].size() > 1) record(check_transfer_theorem(g, step_edge(g, e), fn_psi), "edge step");
      record(check_transfer_theorem(g, step_edge_ie(g, e), fn_psi), "edge ie step");
      if (!g.edges()[i].empty()) {
        record(check_transfer_theorem(g, step_edge_contract(g, e), fn_psi), "contraction step");
      }
    }
    record(check_transfer_theorem(g, {Term{UniPoly::constant(1), g}}, fn_psi), "identity");
  });

  if (g.is_simple_graph()) {
    suite.run("simple-graph", [&](auto record) {
      for (VertexId v : g.vertices()) {
        const UniPoly rhs = suite.engine(delete_vertices(g, VertexSet{v})) +
                            x * suite.engine(delete_vertices(g, closed_neighborhood(g, VertexSet{v})));
        record(rhs == reference(), "standard recurrence");
      }
      for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edges()[i];
        const UniPoly rhs = suite.engine(delete_edge(g, EdgeRef{i})) -
                            shift(suite.engine(delete_vertices(g, closed_neighborhood(g, e))), 2);
        record(rhs == reference(), "x^2 edge rule");
      }
      for (const VertexSet& u : small_cliques(g)) {
        UniPoly rhs = suite.engine(delete_vertices(g, u));
        for (VertexId v : u) rhs += x * suite.engine(delete_vertices(g, closed_neighborhood(g, VertexSet{v})));
        record(rhs == reference(), "clique corollary");
      }
    });
  } else {
    suite.skip("simple-graph", "not a simple graph");
  }

  suite.run("exception-free", [&](auto record) {
    const Hypergraph ext = with_mode(g, Mode::Extended);
    for (VertexId v : ext.vertices()) {
      const VertexSet s{v};
      const UniPoly rhs = suite.engine(delete_vertices(ext, s)) + x * suite.engine(hide_vertices(ext, s));
      record(rhs == reference(), "vertex form");
    }
    for (std::size_t i = 0; i < ext.num_edges(); ++i) {
      const Hypergraph without = delete_edge(ext, EdgeRef{i});
      const Edge& e = ext.edges()[i];
      const UniPoly rhs = suite.engine(without) - shift(suite.engine(hide_vertices(without, e)), e.size());
      record(rhs == reference(), "edge form");
    }
    for (const VertexSet& u : subsets_to_expand(ext)) {
      UniPoly rhs;
      const std::uint64_t count = std::uint64_t{1} << u.size();
      for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<VertexId> w;
        for (std::size_t k = 0; k < u.size(); ++k) {
          if ((mask >> k) & 1) w.push_back(u[k]);
        }
        const VertexSet ws = VertexSet::from_sorted(std::move(w));
        rhs += shift(suite.engine(delete_vertices(hide_vertices(ext, ws), set_difference(u, ws))), ws.size());
      }
      record(rhs == reference(), "unrestricted subset sum");
    }
  });

  return suite.take();
}

std::string format_check_line(const CheckLine& line) {
  std::ostringstream os;
  switch (line.status) {
    case CheckStatus::Pass: os << "PASS    "; break;
    case CheckStatus::Fail: os << "FAIL    "; break;
    case CheckStatus::Skipped: os << "SKIPPED "; break;
  }
  os << line.name << " (" << line.cases << " cases)";
  if (!line.detail.empty()) os << ": " << line.detail;
  return os.str();
}

int cmd_check(const std::string& path, const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  Hypergraph g;
  if (!load(path, g, err)) return 1;
  std::vector<CheckLine> lines;
  try {
    lines = run_identity_checks(g, opts.cfg, opts.only);
  } catch (const Error& e) {
    err << "check failed: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
  bool failed = false;
  for (const auto& line : lines) {
    out << format_check_line(line) << '\n';
    failed = failed || line.status == CheckStatus::Fail;
  }
  return failed ? 2 : 0;
}

}  // namespace indpoly::cli
