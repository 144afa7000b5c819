// Command-line front end. Exit codes: 0 ok, 1 violated bound under
// --strict, 2 usage error, 3 input rejected, 4 internal error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "encov/blocks.hpp"
#include "encov/bounds.hpp"
#include "encov/canonical.hpp"
#include "encov/classes.hpp"
#include "encov/covers.hpp"
#include "encov/error.hpp"
#include "encov/families.hpp"
#include "encov/graph6.hpp"
#include "encov/report.hpp"
#include "encov/scan.hpp"
#include "encov/spectra.hpp"
#include "encov/theory.hpp"

using nlohmann::ordered_json;
using namespace encov;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string graph6;
  std::string edges;
  std::string family;
};

struct Output {
  std::string format = "json";
  std::string path;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* g = cmd->add_option("--graph6", src.graph6, "graph6 string");
  auto* e = cmd->add_option("--edges", src.edges, "edge-list file: 'n m' then m pairs");
  auto* f = cmd->add_option("--family", src.family, "family spec, e.g. wheel(1,3)");
  g->excludes(e)->excludes(f);
  e->excludes(f);
}

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", out.path, "write to this file instead of stdout");
}

struct Loaded {
  Graph graph;
  std::optional<FamilySpec> family;
};

Loaded load(const Source& src) {
  const int given = !src.graph6.empty() + !src.edges.empty() + !src.family.empty();
  if (given != 1) throw UsageError("exactly one of --graph6, --edges, --family is required");
  if (!src.graph6.empty()) return {parse_graph6(src.graph6), std::nullopt};
  if (!src.edges.empty()) return {read_edge_list_file(src.edges), std::nullopt};
  FamilySpec spec = parse_family_spec(src.family);
  return {make(spec), spec};
}

ordered_json sets(const std::vector<VertexSet>& xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(x);
  return a;
}

ordered_json edges_json(const EdgeSet& es) {
  ordered_json a = ordered_json::array();
  for (const auto& e : es) a.push_back({e.u, e.v});
  return a;
}

std::string csv_cell(const ordered_json& v) {
  std::string s;
  if (v.is_null()) return "";
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_primitive(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += '|';
      s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
    }
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

// One object becomes a header and one row; an array of objects becomes
// a header and one row per element.
std::string to_csv_doc(const ordered_json& doc) {
  std::vector<ordered_json> rows;
  if (doc.is_array()) {
    for (const auto& r : doc) rows.push_back(r);
  } else {
    rows.push_back(doc);
  }
  std::string out;
  if (rows.empty()) return out;
  bool first = true;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    out += (first ? "" : ",") + it.key();
    first = false;
  }
  out += '\n';
  for (const auto& r : rows) {
    first = true;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
      out += (first ? "" : ",") + csv_cell(r.contains(it.key()) ? r.at(it.key()) : ordered_json());
      first = false;
    }
    out += '\n';
  }
  return out;
}

void emit(const ordered_json& doc, const Output& out) {
  const std::string text = out.format == "csv" ? to_csv_doc(doc) : doc.dump(2) + "\n";
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(Errc::io_error, "cannot write " + out.path);
  f << text;
}

ordered_json report_json(const BoundReport& r) {
  ordered_json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["energy"] = r.energy;
  j["tau"] = r.tau;
  j["mu"] = r.mu;
  j["c"] = r.c ? ordered_json(*r.c) : ordered_json(nullptr);
  j["omega"] = r.omega;
  j["class_tags"] = ordered_json::array();
  for (ClassTag t : r.class_tags) j["class_tags"].push_back(std::string(to_string(t)));
  j["slack_tau"] = r.slack_tau;
  j["slack_wang_ma"] = r.slack_wang_ma ? ordered_json(*r.slack_wang_ma) : ordered_json(nullptr);
  j["slack_matching"] = r.slack_matching;
  j["equality_tau"] = r.equality_tau;
  j["guaranteed_by"] = ordered_json::array();
  for (TheoremId t : r.guaranteed_by) j["guaranteed_by"].push_back(std::string(to_string(t)));
  return j;
}

bool strict_violation(const BoundReport& r) {
  if (r.tau_backed() && r.slack_tau < -kSlackTol) return true;
  if (r.slack_wang_ma && *r.slack_wang_ma < -kSlackTol) return true;
  return r.slack_matching < -kSlackTol;
}

ordered_json witness_json(const WitnessData& w) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using W = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<W, Bipartition>) {
          return {{"side0", x.side0}, {"side1", x.side1}};
        } else if constexpr (std::is_same_v<W, SplitPartition>) {
          return {{"clique", x.clique}, {"independent", x.independent}};
        } else if constexpr (std::is_same_v<W, std::vector<BlockKind>>) {
          ordered_json a = ordered_json::array();
          for (const auto& b : x) {
            a.push_back({{"vertices", b.vertices}, {"is_cycle", b.is_cycle}, {"is_clique", b.is_clique}});
          }
          return a;
        } else if constexpr (std::is_same_v<W, CreationSequence>) {
          ordered_json a = ordered_json::array();
          for (const auto& [v, dom] : x.steps) a.push_back({{"vertex", v}, {"dominating", dom}});
          return a;
        } else {
          return nullptr;
        }
      },
      w);
}

std::vector<ClassTag> parse_tags(const std::vector<std::string>& names) {
  std::vector<ClassTag> out;
  for (const auto& n : names) {
    auto t = parse_class_tag(n);
    if (!t) throw UsageError("unknown class tag \"" + n + "\"");
    out.push_back(*t);
  }
  return out;
}

std::vector<ScanCheck> parse_checks(const std::vector<std::string>& names) {
  std::vector<ScanCheck> out;
  for (const auto& n : names) {
    auto c = parse_scan_check(n);
    if (!c) throw UsageError("unknown check \"" + n + "\" (tau, wangma, matching, equality)");
    out.push_back(*c);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Energy and vertex-cover bound toolkit"};
  app.require_subcommand(1);

  Source src;
  Output out;
  long long cap = kDefaultCycleCap;

  auto* energy_cmd = app.add_subcommand("energy", "energy, spectrum and closed form if known");
  auto* inv_cmd = app.add_subcommand("invariants", "tau, mu, omega, c with certificates");
  auto* classify_cmd = app.add_subcommand("classify", "class tags with witnesses");
  auto* check_cmd = app.add_subcommand("check", "bound report");
  auto* family_cmd = app.add_subcommand("family", "generate a family member or seeded random graph");
  auto* decompose_cmd = app.add_subcommand("decompose", "structural decompositions");
  auto* scan_cmd = app.add_subcommand("scan", "verify bounds over a corpus");
  auto* report_cmd = app.add_subcommand("report", "summarize an existing report file");

  for (auto* cmd : {energy_cmd, inv_cmd, classify_cmd, check_cmd, decompose_cmd}) {
    add_source(cmd, src);
    add_output(cmd, out);
  }
  for (auto* cmd : {inv_cmd, check_cmd, family_cmd, scan_cmd}) {
    cmd->add_option("--cap", cap, "odd-cycle enumeration cap")->check(CLI::PositiveNumber);
  }

  bool strict = false;
  check_cmd->add_flag("--strict", strict, "exit 1 when a proved bound is violated");

  std::string family_spec;
  int random_split = 0, cactus_blocks = 0, max_cycle = 6;
  double clique_fraction = 0.5, edge_prob = 0.5;
  std::uint64_t seed = 1;
  bool family_check = false;
  auto* fam_opt = family_cmd->add_option("--family", family_spec, "family spec, e.g. flower(3,4,5)");
  auto* rs_opt = family_cmd->add_option("--random-split", random_split, "random split graph on N vertices")
                     ->check(CLI::PositiveNumber);
  auto* rc_opt = family_cmd->add_option("--random-cactus", cactus_blocks, "random cactus with N blocks")
                     ->check(CLI::PositiveNumber);
  fam_opt->excludes(rs_opt)->excludes(rc_opt);
  rs_opt->excludes(rc_opt);
  family_cmd->add_option("--clique-fraction", clique_fraction, "split: share of vertices in the clique")
      ->check(CLI::Range(0.0, 1.0));
  family_cmd->add_option("--edge-prob", edge_prob, "split: clique/independent edge probability")
      ->check(CLI::Range(0.0, 1.0));
  family_cmd->add_option("--max-cycle", max_cycle, "cactus: longest block")->check(CLI::Range(2, 64));
  family_cmd->add_option("--seed", seed, "random stream seed");
  family_cmd->add_flag("--check", family_check, "attach the bound report");
  add_output(family_cmd, out);

  std::string decompose_kind;
  decompose_cmd->add_option("kind", decompose_kind, "blocks | block-tree | split-cliques | vc-rep | split-assoc")
      ->required()
      ->check(CLI::IsMember({"blocks", "block-tree", "split-cliques", "vc-rep", "split-assoc"}));

  int enumerate_n = 0;
  bool connected = false;
  std::string input, sweep, objective = "tau";
  std::vector<std::string> filters, checks;
  int jobs = 1;
  std::size_t top = 0;
  bool resume = false, scan_strict = false;
  auto* en_opt = scan_cmd->add_option("--enumerate", enumerate_n, "all graphs on 1..N vertices (N <= 8)");
  scan_cmd->add_flag("--connected", connected, "connected graphs only");
  auto* in_opt = scan_cmd->add_option("--input", input, "graph6 file, one graph per line");
  auto* sw_opt = scan_cmd->add_option("--sweep", sweep, "family sweep, e.g. wheel(1..5,3..12)");
  en_opt->excludes(in_opt)->excludes(sw_opt);
  in_opt->excludes(sw_opt);
  scan_cmd->add_option("--filter", filters, "keep graphs with any of these class tags");
  scan_cmd->add_option("--check", checks, "tau | wangma | matching | equality (default all)");
  scan_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--top", top, "print the K smallest slacks instead of the summary");
  scan_cmd->add_option("--objective", objective, "slack for --top")->check(CLI::IsMember({"tau", "wangma"}));
  scan_cmd->add_flag("--resume", resume, "continue an interrupted scan from --out");
  scan_cmd->add_flag("--strict", scan_strict, "exit 1 when the summary has violations");
  add_output(scan_cmd, out);

  std::vector<std::string> report_checks;
  report_cmd->add_option("--input", input, "report file written by scan")->required();
  report_cmd->add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  report_cmd->add_option("--check", report_checks, "checks to aggregate (default all)");
  report_cmd->add_flag("--strict", scan_strict, "exit 1 when the summary has violations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    VerifyOptions vopts;
    vopts.cycle_cap = cap;

    if (*energy_cmd) {
      const auto [g, fam] = load(src);
      const Spectrum s = eigenvalues(g);
      ordered_json doc;
      doc["graph_id"] = graph_id(g);
      doc["n"] = g.order();
      doc["m"] = g.size();
      doc["energy"] = energy_of(s);
      std::optional<double> closed;
      if (fam) {
        try {
          closed = family_energy_closed_form(*fam).energy;
        } catch (const Error& e) {
          if (e.code() != Errc::unsupported_family) throw;
        }
      }
      doc["closed_form"] = closed ? ordered_json(*closed) : ordered_json(nullptr);
      doc["spectrum"] = s.values;
      emit(doc, out);
    } else if (*inv_cmd) {
      const Graph g = load(src).graph;
      const auto cover = min_vertex_cover(g);
      const auto matching = max_matching(g);
      const auto clique = max_clique(g);
      ordered_json c = nullptr;
      try {
        c = odd_cycle_count(g, cap).count;
      } catch (const Error& e) {
        if (e.code() != Errc::cap_exceeded) throw;
      }
      ordered_json doc;
      doc["graph_id"] = graph_id(g);
      doc["n"] = g.order();
      doc["m"] = g.size();
      doc["tau"] = cover.size;
      doc["mu"] = matching.size;
      doc["omega"] = static_cast<int>(clique.size());
      doc["c"] = c;
      doc["cover"] = cover.cover;
      doc["matching"] = edges_json(matching.matching);
      doc["clique"] = clique;
      emit(doc, out);
    } else if (*classify_cmd) {
      const Graph g = load(src).graph;
      ordered_json doc;
      doc["graph_id"] = graph_id(g);
      ordered_json tags = ordered_json::array();
      ordered_json witnesses = ordered_json::object();
      for (const auto& w : classify(g)) {
        tags.push_back(std::string(to_string(w.tag)));
        witnesses[std::string(to_string(w.tag))] = witness_json(w.witness);
      }
      doc["tags"] = tags;
      doc["witnesses"] = witnesses;
      emit(doc, out);
    } else if (*check_cmd) {
      const BoundReport r = verify(load(src).graph, vopts);
      emit(report_json(r), out);
      if (strict && strict_violation(r)) return 1;
    } else if (*family_cmd) {
      const int given = !family_spec.empty() + (random_split > 0) + (rc_opt->count() > 0);
      if (given != 1) throw UsageError("family needs exactly one of --family, --random-split, --random-cactus");
      Graph g;
      ordered_json doc;
      std::optional<FamilySpec> spec;
      if (!family_spec.empty()) {
        spec = parse_family_spec(family_spec);
        g = make(*spec);
        doc["family"] = to_string(*spec);
      } else if (random_split > 0) {
        g = random_split_graph(seed, random_split, clique_fraction, edge_prob);
        doc["family"] = "random_split";
        doc["seed"] = seed;
      } else {
        g = random_cactus(seed, cactus_blocks, max_cycle);
        doc["family"] = "random_cactus";
        doc["seed"] = seed;
      }
      doc["n"] = g.order();
      doc["m"] = g.size();
      doc["graph6"] = emit_graph6(g);
      doc["edges"] = edges_json(g.edges());
      if (spec) {
        try {
          doc["closed_form_energy"] = family_energy_closed_form(*spec).energy;
        } catch (const Error& e) {
          if (e.code() != Errc::unsupported_family) throw;
          doc["closed_form_energy"] = nullptr;
        }
        const auto stated = stated_equality(*spec);
        doc["stated_equality"] = stated ? ordered_json(*stated) : ordered_json(nullptr);
      }
      if (family_check) doc["report"] = report_json(verify(g, vopts));
      emit(doc, out);
    } else if (*decompose_cmd) {
      const Graph g = load(src).graph;
      ordered_json doc;
      doc["graph_id"] = graph_id(g);
      if (decompose_kind == "blocks") {
        const auto d = blocks(g);
        doc["blocks"] = sets(d.blocks);
        doc["cut_vertices"] = d.cut_vertices;
        ordered_json adj = ordered_json::array();
        for (const auto& [i, j] : d.block_adjacency) adj.push_back({i, j});
        doc["block_adjacency"] = adj;
        ordered_json kinds = ordered_json::array();
        for (const auto& b : d.blocks) {
          kinds.push_back({{"is_cycle", block_is_cycle(g, b)}, {"is_clique", block_is_clique(g, b)}});
        }
        doc["kinds"] = kinds;
      } else if (decompose_kind == "block-tree") {
        const auto t = block_tree(g);
        doc["blocks"] = sets(t.decomposition.blocks);
        doc["root"] = t.root;
        doc["level"] = t.level;
        doc["parent"] = t.parent;
      } else if (decompose_kind == "split-cliques") {
        const auto d = split_clique_decomposition(g);
        doc["parts"] = sets(d.parts);
        doc["anchors"] = d.anchors;
        doc["tau"] = min_vertex_cover(g).size;
      } else if (decompose_kind == "vc-rep") {
        const auto rep = vc_representation(g);
        doc["cover"] = rep.cover;
        doc["independent"] = rep.independent;
      } else {
        const auto rep = vc_representation(g);
        const Graph gs = associated_split_graph(g, rep);
        doc["cover"] = rep.cover;
        doc["independent"] = rep.independent;
        doc["split_graph6"] = emit_graph6(gs);
        doc["tau"] = rep.cover.size();
        doc["tau_split"] = min_vertex_cover(gs).size;
      }
      emit(doc, out);
    } else if (*scan_cmd) {
      ScanSpec spec;
      const int given = (en_opt->count() > 0) + !input.empty() + !sweep.empty();
      if (given != 1) throw UsageError("scan needs exactly one of --enumerate, --input, --sweep");
      if (en_opt->count()) {
        spec.source = EnumerateSource{enumerate_n, connected};
      } else if (!input.empty()) {
        spec.source = Graph6FileSource{input};
      } else {
        spec.source = parse_family_sweep(sweep);
      }
      spec.filter_any = parse_tags(filters);
      spec.checks = parse_checks(checks);
      spec.jobs = jobs;
      spec.verify = vopts;
      spec.format = out.format == "csv" ? ReportFormat::csv : ReportFormat::json_lines;
      if (top > 0) {
        const auto best = find_extremal(spec, objective == "tau" ? Objective::min_slack_tau : Objective::min_slack_wang_ma, top);
        ordered_json list = ordered_json::array();
        for (const auto& e : best) list.push_back({{"graph_id", e.graph_id}, {"slack", e.slack}});
        std::cout << ordered_json{{"objective", objective}, {"top", list}}.dump(2) << "\n";
        return 0;
      }
      spec.output_path = out.path;
      spec.resume = resume;
      if (resume && out.path.empty()) throw UsageError("--resume needs --out");
      const ScanResult result = run_scan(spec);
      std::cout << summary_to_json(result.summary) << "\n";
      if (scan_strict && !result.summary.ok()) return 1;
    } else if (*report_cmd) {
      std::ifstream in(input, std::ios::binary);
      if (!in) throw Error(Errc::io_error, "cannot read " + input);
      const auto reports = read_report(in, out.format == "csv" ? ReportFormat::csv : ReportFormat::json_lines);
      const auto parsed = parse_checks(report_checks);
      const ScanSummary summary = summarize(reports, parsed);
      std::cout << summary_to_json(summary) << "\n";
      if (scan_strict && !summary.ok()) return 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
