#include "antimagic/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "antimagic/joins.hpp"

namespace antimagic {

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"')
      quoted = !quoted;
    else if (c == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r')
      cur += c;
  }
  out.push_back(cur);
  return out;
}

long long num(const std::string& s, const std::string& where) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw Error(Errc::io, where + ": not an integer: '" + s + "'");
  }
}

void need_fields(const std::vector<std::string>& row, size_t n, const std::string& where) {
  if (row.size() != n) throw Error(Errc::io, where + ": expected " + std::to_string(n) + " fields");
}

std::string header_value(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  std::string line, tag = "# " + key + ":";
  while (std::getline(is, line))
    if (line.rfind(tag, 0) == 0) {
      auto v = line.substr(tag.size());
      v.erase(0, v.find_first_not_of(" \t"));
      v.erase(v.find_last_not_of(" \t\r") + 1);
      return v;
    }
  return {};
}

std::string join_sums(const std::vector<Sum>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string default_fixture_dir() {
  if (const char* env = std::getenv("ANTIMAGIC_FIXTURES")) return env;
#ifdef ANTIMAGIC_FIXTURE_DIR
  return ANTIMAGIC_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::istringstream is(slurp(path));
  std::string line;
  std::vector<std::vector<std::string>> rows;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (header) {
      header = false;
      continue;
    }
    rows.push_back(split_line(line));
  }
  return rows;
}

std::vector<MatrixFixture> load_matrices(const std::string& dir) {
  std::vector<fs::path> files;
  fs::path root = fs::path(dir) / "matrices";
  if (!fs::is_directory(root)) throw Error(Errc::io, "missing fixture directory " + root.string());
  for (const auto& e : fs::directory_iterator(root))
    if (e.path().extension() == ".txt") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<MatrixFixture> out;
  for (const auto& f : files) {
    MatrixFixture m;
    m.id = f.stem().string();
    m.text = slurp(f.string());
    m.graph_spec = header_value(m.text, "graph");
    auto colors = header_value(m.text, "colors");
    if (m.graph_spec.empty() || colors.empty()) throw Error(Errc::io, f.string() + ": missing header");
    m.colors = static_cast<int>(num(colors, f.string()));
    m.parsed = parse_matrix(m.text);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<C3P2Row> load_c3p2(const std::string& dir) {
  std::string path = (fs::path(dir) / "c3p2_tuples.csv").string();
  std::vector<C3P2Row> out;
  for (const auto& row : read_csv(path)) {
    need_fields(row, 11, path);
    C3P2Row r;
    r.case_no = static_cast<int>(num(row[0], path));
    r.abc = static_cast<int>(num(row[1], path));
    for (int k = 0; k < 9; ++k) r.tuple[k] = static_cast<int>(num(row[2 + k], path));
    out.push_back(r);
  }
  return out;
}

std::vector<TableRow> load_table(const std::string& dir) {
  std::string path = (fs::path(dir) / "summary_table.csv").string();
  std::vector<TableRow> out;
  for (const auto& row : read_csv(path)) {
    need_fields(row, 4, path);
    out.push_back({static_cast<int>(num(row[0], path)), static_cast<int>(num(row[1], path)), row[2],
                   static_cast<int>(num(row[3], path))});
  }
  return out;
}

std::vector<JoinConstantRow> load_join_constants(const std::string& dir) {
  std::string path = (fs::path(dir) / "join_constants.csv").string();
  std::vector<JoinConstantRow> out;
  for (const auto& row : read_csv(path)) {
    need_fields(row, 5, path);
    out.push_back({row[0], static_cast<int>(num(row[1], path)), num(row[2], path), num(row[3], path),
                   num(row[4], path)});
  }
  return out;
}

std::vector<SumTupleRow> load_sum_tuples(const std::string& dir) {
  std::string path = (fs::path(dir) / "quintic_sums.csv").string();
  std::vector<SumTupleRow> out;
  for (const auto& row : read_csv(path)) {
    if (row.size() < 2) throw Error(Errc::io, path + ": short row");
    SumTupleRow r{row[0], {}};
    for (size_t k = 1; k < row.size(); ++k) r.sums.push_back(num(row[k], path));
    out.push_back(r);
  }
  return out;
}

std::optional<Labels> fixture_witness(const Graph& g, const std::string& dir) {
  if (!fs::is_directory(fs::path(dir) / "matrices")) return std::nullopt;
  for (const auto& m : load_matrices(dir))
    if (m.parsed.graph == g) return m.parsed.labels;
  return std::nullopt;
}

bool FixtureReport::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.pass; });
}

nlohmann::ordered_json FixtureReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "fixtures/1";
  j["ok"] = ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) arr.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = arr;
  return j;
}

FixtureReport verify_fixtures(const std::string& dir) {
  FixtureReport rep;
  auto guarded = [&](const std::string& id, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      rep.checks.push_back({id, false, e.what()});
    }
  };

  std::vector<MatrixFixture> mats;
  guarded("matrices", [&] {
    mats = load_matrices(dir);
    if (mats.empty()) throw Error(Errc::io, "no matrix fixtures");
  });
  for (const auto& m : mats)
    guarded("matrix:" + m.id, [&] {
      Graph host = build(m.graph_spec);
      auto ic = induced(m.parsed.graph, m.parsed.labels);
      bool stated = std::all_of(m.parsed.stated_sums.begin(), m.parsed.stated_sums.end(),
                                [](const auto& s) { return s.has_value(); });
      bool pass = host == m.parsed.graph && ic.local_antimagic && ic.count() == m.colors && stated;
      rep.checks.push_back({"matrix:" + m.id, pass,
                            "graph " + m.graph_spec + (host == m.parsed.graph ? "" : " (edge set differs)") +
                                ", sums " + join_sums(ic.sums) + ", " + std::to_string(ic.count()) + " colors"});
    });

  guarded("c3p2", [&] {
    std::set<C3P2Tuple> seen;
    for (const auto& r : load_c3p2(dir)) {
      const auto& t = r.tuple;
      auto ic = induced(prism(3), c3p2_labels(t));
      bool pass = c3p2_equations_hold(t) && r.abc == t[0] + t[1] + t[2] &&
                  t[5] == *std::min_element(t.begin(), t.begin() + 6) && ic.local_antimagic && ic.count() == 3 &&
                  seen.insert(t).second;
      rep.checks.push_back({"c3p2:case" + std::to_string(r.case_no), pass, "sums " + join_sums(ic.colors)});
    }
  });

  guarded("table", [&] {
    for (const auto& r : load_table(dir)) {
      Graph g = build(r.graph);
      auto reg = g.regularity();
      int chi = chromatic_number(g);
      bool pass = g.connected() && reg == r.r && g.order() == r.order && r.chi_la >= chi && r.chi_la <= g.order();
      rep.checks.push_back({"table:r" + std::to_string(r.r) + ":" + r.graph, pass,
                            "order " + std::to_string(g.order()) + ", chi " + std::to_string(chi)});
    }
  });

  guarded("join_constants", [&] {
    for (const auto& r : load_join_constants(dir)) {
      std::string id = "join:" + r.graph + ":n=" + std::to_string(r.n);
      guarded(id, [&] {
        Graph g = build(r.graph);
        auto f = fixture_witness(g, dir);
        if (!f) throw Error(Errc::io, "no labeling fixture for " + r.graph);
        auto tr = join_O_odd_split(g, *f, r.n);
        const auto& x = tr.steps.front().extra;
        Sum o = x["o_sum"].get<Sum>(), lo = x["shift_low"].get<Sum>(), hi = x["shift_high"].get<Sum>();
        bool pass = tr.ok() && o == r.o_sum && lo == r.shift_low && hi == r.shift_high;
        rep.checks.push_back({id, pass,
                              "computed " + std::to_string(o) + "/" + std::to_string(lo) + "/" + std::to_string(hi) +
                                  ", expected " + std::to_string(r.o_sum) + "/" + std::to_string(r.shift_low) + "/" +
                                  std::to_string(r.shift_high)});
      });
    }
  });

  guarded("sum_tuples", [&] {
    for (const auto& r : load_sum_tuples(dir)) {
      std::string id = "sums:" + r.graph;
      guarded(id, [&] {
        Graph g = build(r.graph);
        auto f = fixture_witness(g, dir);
        if (!f) throw Error(Errc::io, "no labeling fixture for " + r.graph);
        auto colors = induced(g, *f).colors;
        auto want = r.sums;
        std::sort(want.begin(), want.end());
        rep.checks.push_back({id, colors == want, "induced " + join_sums(colors)});
      });
    }
  });
  return rep;
}

}  // namespace antimagic
