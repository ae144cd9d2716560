#include "antimagic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "antimagic/joins.hpp"
#include "antimagic/rectangles.hpp"

namespace antimagic {

namespace {

int exit_for(Errc c) { return c == Errc::budget_exhausted ? exit_code::budget : exit_code::input; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string sums_text(const std::vector<Sum>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

nlohmann::ordered_json graph_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["schema"] = "graph/1";
  j["graph"] = g.name();
  j["order"] = g.order();
  j["size"] = g.size();
  if (auto r = g.regularity())
    j["regularity"] = *r;
  else
    j["regularity"] = nullptr;
  j["connected"] = g.connected();
  j["bipartite"] = g.bipartite();
  j["chromatic_number"] = chromatic_number(g);
  j["degrees"] = g.degrees();
  auto edges = nlohmann::ordered_json::array();
  for (auto e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  j["edges"] = edges;
  return j;
}

// a labeling the construction can start from: explicit file, fixture, solver
Labels base_labeling(const Graph& g, const std::string& file, const SolveOptions& opts) {
  if (!file.empty()) return labels_on(g, parse_matrix(read_file(file)));
  if (auto f = fixture_witness(g, default_fixture_dir())) return *f;
  auto rep = solve(g, opts);
  if (rep.witness.empty()) throw Error(Errc::budget_exhausted, "no base labeling found for " + g.name());
  return rep.witness;
}

}  // namespace

std::vector<TableCell> compute_table(const std::string& dir, const SolveOptions& opts) {
  std::vector<TableCell> out;
  for (const auto& row : load_table(dir)) {
    Graph g = build(row.graph);
    SolveOptions o = opts;
    o.known_witness = fixture_witness(g, dir);
    TableCell c;
    c.row = row;
    c.report = solve(g, o);
    c.source = o.known_witness && c.report.witness == *o.known_witness ? "fixture" : "solver";
    c.match = c.report.value() == row.chi_la;
    out.push_back(std::move(c));
  }
  return out;
}

CommandResult run(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin) {
  CLI::App app{"Local antimagic labelings of regular graphs"};
  app.require_subcommand(1);
  CommandResult res;

  int threads = 1;
  std::uint64_t nodes = SearchBudget{}.nodes_per_partition;
  auto add_budget = [&](CLI::App* sc) {
    sc->add_option("--threads", threads, "solver threads")->check(CLI::Range(1, 256));
    sc->add_option("--nodes", nodes, "search nodes per color-class partition");
  };
  auto options = [&] {
    SolveOptions o;
    o.search.threads = threads;
    o.search.nodes_per_partition = nodes;
    return o;
  };

  auto* graph_cmd = app.add_subcommand("graph", "graph utilities");
  graph_cmd->require_subcommand(1);
  auto* show = graph_cmd->add_subcommand("show", "print a graph as JSON");
  std::string spec;
  show->add_option("--graph", spec, "graph descriptor")->required();

  auto* verify = app.add_subcommand("verify", "check a labeling matrix (file or standard input)");
  std::string file;
  std::string host_spec;
  verify->add_option("file", file, "matrix file, '-' or omitted for standard input");
  verify->add_option("--graph", host_spec, "require this graph");

  auto* solve_cmd = app.add_subcommand("solve", "local antimagic chromatic number");
  std::string witness_file;
  std::size_t exhaustive_max = SolveOptions{}.exhaustive_max_size;
  solve_cmd->add_option("--graph", spec, "graph descriptor")->required();
  solve_cmd->add_option("--witness", witness_file, "labeling matrix to use as an upper-bound witness");
  solve_cmd->add_option("--exhaustive-max", exhaustive_max, "largest size at which exhausted searches exclude");
  add_budget(solve_cmd);

  auto* enumerate = app.add_subcommand("enumerate", "enumerations");
  enumerate->require_subcommand(1);
  auto* c3p2 = enumerate->add_subcommand("c3p2", "local antimagic 3-colorings of the triangular prism");

  auto* rect = app.add_subcommand("rect", "magic and nearly magic rectangles as CSV");
  rect->require_subcommand(1);
  int rows = 0, cols = 0;
  Sum offset = 0;
  auto* rmagic = rect->add_subcommand("magic", "magic rectangle");
  auto* rnearly = rect->add_subcommand("nearly", "nearly magic rectangle");
  for (auto* sc : {rmagic, rnearly}) {
    sc->add_option("--rows", rows)->required();
    sc->add_option("--cols", cols)->required();
    sc->add_option("--offset", offset, "entries start at offset+1");
  }

  auto* jb = app.add_subcommand("join-build", "build an iterated join construction and print its trace");
  std::string family, other_spec, labeling_file, other_labeling;
  int k = 1;
  bool matrices = false;
  std::uint64_t seed_nodes = 200'000'000;
  jb->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"on-iter", "cycle-iter", "o-odd", "two-regular", "self-iter"}));
  jb->add_option("--base", spec, "base graph descriptor")->required();
  jb->add_option("--k", k, "steps; n of O_{2n-1} for o-odd; 2 for two-regular")->check(CLI::Range(1, 64));
  jb->add_option("--other", other_spec, "second graph for two-regular (default: the base)");
  jb->add_option("--labeling", labeling_file, "base labeling matrix (default: fixture, then solver)");
  jb->add_option("--other-labeling", other_labeling, "labeling matrix of the second graph");
  jb->add_option("--seed-nodes", seed_nodes, "node budget of the even-order cycle seed search");
  jb->add_flag("--matrices", matrices, "include labeling matrices per step");
  add_budget(jb);

  auto* table = app.add_subcommand("table", "recompute the summary table of small regular graphs as CSV");
  add_budget(table);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "fixture files");
  fixtures_cmd->require_subcommand(1);
  auto* fverify = fixtures_cmd->add_subcommand("verify", "recompute every fixture's expected values");
  std::string dir = default_fixture_dir();
  fverify->add_option("--dir", dir, "fixture directory");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    res.output = out.str();
    res.summary = err.str();
    res.exit = code == 0 ? exit_code::ok : exit_code::usage;
    return res;
  }

  try {
    if (show->parsed()) {
      Graph g = build(spec);
      res.output = dump(graph_json(g));
      res.summary = g.name() + ": order " + std::to_string(g.order()) + ", size " + std::to_string(g.size());
    } else if (verify->parsed()) {
      std::string text;
      if (file.empty() || file == "-") {
        if (!read_stdin) throw Error(Errc::io, "no standard input available");
        text = read_stdin();
      } else {
        text = read_file(file);
      }
      auto m = parse_matrix(text);
      Labels labels = m.labels;
      Graph g = m.graph;
      if (!host_spec.empty()) {
        g = build(host_spec);
        labels = labels_on(g, m);
      }
      auto ic = induced(g, labels);
      nlohmann::ordered_json j;
      j["schema"] = "verify/1";
      j["local_antimagic"] = ic.local_antimagic;
      j["colors"] = ic.count();
      j["color_values"] = ic.colors;
      j["sums"] = ic.sums;
      if (ic.conflict)
        j["conflict"] = {ic.conflict->first + 1, ic.conflict->second + 1};
      else
        j["conflict"] = nullptr;
      res.output = dump(j);
      res.exit = ic.local_antimagic ? exit_code::ok : exit_code::check_failed;
      res.summary = std::string(ic.local_antimagic ? "local antimagic" : "not local antimagic") + ", " +
                    std::to_string(ic.count()) + " colors, sums " + sums_text(ic.sums);
    } else if (solve_cmd->parsed()) {
      Graph g = build(spec);
      auto o = options();
      o.exhaustive_max_size = exhaustive_max;
      if (!witness_file.empty()) o.known_witness = labels_on(g, parse_matrix(read_file(witness_file)));
      auto rep = solve(g, o);
      res.output = dump(solve_json(g, rep));
      if (rep.status == "interval") res.exit = exit_code::budget;
      std::string val = rep.value() ? std::to_string(*rep.value())
                        : rep.status == "none" ? "undefined"
                                               : "in [" + std::to_string(rep.lower) + "," +
                                                     (rep.upper ? std::to_string(*rep.upper) : "?") + "]";
      res.summary = g.name() + ": chi_la " + val + " (" + rep.status + ")";
    } else if (c3p2->parsed()) {
      auto all = enumerate_c3p2();
      std::string csv = "a,b,c,d,e,f,g,h,i\n";
      for (const auto& t : all) {
        for (int i = 0; i < 9; ++i) csv += (i ? "," : "") + std::to_string(t[i]);
        csv += "\n";
      }
      res.output = csv;
      res.summary = std::to_string(all.size()) + " normalized solutions";
    } else if (rmagic->parsed() || rnearly->parsed()) {
      Rectangle r = rmagic->parsed() ? magic_rectangle(rows, cols, offset) : nearly_magic_rectangle(rows, cols, offset);
      auto rep = validate_rectangle(r);
      res.output = rectangle_csv(r);
      res.exit = rep.ok ? exit_code::ok : exit_code::check_failed;
      res.summary = "row sums " + sums_text(rep.row_sums) + "; column sums " + sums_text(rep.col_sums) +
                    (rep.ok ? "" : "; INVALID");
    } else if (jb->parsed()) {
      Graph g = build(spec);
      auto o = options();
      Labels f = base_labeling(g, labeling_file, o);
      ConstructionTrace tr;
      if (family == "on-iter") {
        tr = join_On_iterated(g, f, k);
      } else if (family == "cycle-iter") {
        tr = join_cycle_iterated(g, f, k, seed_nodes);
      } else if (family == "self-iter") {
        tr = join_self_iterated(g, f, k);
      } else if (family == "two-regular") {
        if (k != 2) throw Error(Errc::precondition, "two-regular joins exactly two graphs; use --k 2");
        Graph h = other_spec.empty() ? g : build(other_spec);
        Labels fh = other_spec.empty() && other_labeling.empty() ? f : base_labeling(h, other_labeling, o);
        tr = join_two_regular(g, f, h, fh);
      } else {
        tr = join_O_odd_split(g, f, k);
      }
      res.output = dump(tr.to_json(matrices));
      res.exit = tr.ok() ? exit_code::ok : exit_code::check_failed;
      const auto& last = tr.steps.back();
      res.summary = family + " from " + g.name() + ": " + std::to_string(tr.steps.size()) + " steps, last has " +
                    std::to_string(last.colors) + " colors (predicted " + std::to_string(last.predicted) + "), " +
                    (tr.ok() ? "verified" : "NOT verified");
    } else if (table->parsed()) {
      auto cells = compute_table(default_fixture_dir(), options());
      std::string csv = "r,order,graph,chi_la_expected,chi_la_computed,status,source,match\n";
      int bad = 0;
      bool interval = false;
      for (const auto& c : cells) {
        auto v = c.report.value();
        csv += std::to_string(c.row.r) + "," + std::to_string(c.row.order) + ",\"" + c.row.graph + "\"," +
               std::to_string(c.row.chi_la) + "," + (v ? std::to_string(*v) : "") + "," + c.report.status + "," +
               c.source + "," + (c.match ? "yes" : "no") + "\n";
        bad += !c.match;
        interval = interval || c.report.status == "interval";
      }
      res.output = csv;
      res.exit = bad == 0 ? exit_code::ok : interval ? exit_code::budget : exit_code::check_failed;
      res.summary = std::to_string(cells.size() - bad) + "/" + std::to_string(cells.size()) + " cells reproduced";
    } else if (fverify->parsed()) {
      auto rep = verify_fixtures(dir);
      res.output = dump(rep.to_json());
      res.exit = rep.ok() ? exit_code::ok : exit_code::check_failed;
      long failed = std::count_if(rep.checks.begin(), rep.checks.end(), [](const FixtureCheck& c) { return !c.pass; });
      res.summary = std::to_string(rep.checks.size() - failed) + "/" + std::to_string(rep.checks.size()) +
                    " fixture checks pass";
    }
  } catch (const Error& e) {
    res.output.clear();
    res.exit = exit_for(e.code());
    res.summary = std::string("error (") + errc_name(e.code()) + "): " + e.what();
    if (e.condition()) res.summary += " [condition " + std::to_string(e.condition()) + "]";
  }
  return res;
}

}  // namespace antimagic
