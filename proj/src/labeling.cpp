#include "antimagic/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <set>
#include <sstream>

namespace antimagic {

bool is_bijection(const Graph& g, const Labels& labels) {
  if (static_cast<int>(labels.size()) != g.size()) return false;
  std::vector<char> seen(labels.size() + 1, 0);
  for (Sum x : labels) {
    if (x < 1 || x > static_cast<Sum>(labels.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

void require_bijection(const Graph& g, const Labels& labels) {
  if (static_cast<int>(labels.size()) != g.size())
    throw Error(Errc::invalid_labeling, "labeling has " + std::to_string(labels.size()) +
                                            " labels for " + std::to_string(g.size()) + " edges");
  if (!is_bijection(g, labels)) throw Error(Errc::invalid_labeling, "labels are not a bijection onto [1,q]");
}

InducedColoring induced(const Graph& g, const Labels& labels) {
  require_bijection(g, labels);
  InducedColoring ic;
  ic.sums.assign(g.order(), 0);
  for (int i = 0; i < g.size(); ++i) {
    auto e = g.edges()[i];
    ic.sums[e.u] = checked_add(ic.sums[e.u], labels[i]);
    ic.sums[e.v] = checked_add(ic.sums[e.v], labels[i]);
  }
  std::set<Sum> distinct(ic.sums.begin(), ic.sums.end());
  ic.colors.assign(distinct.begin(), distinct.end());
  ic.local_antimagic = true;
  for (auto e : g.edges())
    if (ic.sums[e.u] == ic.sums[e.v]) {
      ic.local_antimagic = false;
      ic.conflict = std::make_pair(e.u, e.v);
      break;
    }
  return ic;
}

bool is_local_antimagic(const Graph& g, const Labels& labels) {
  return is_bijection(g, labels) && induced(g, labels).local_antimagic;
}

Labels complement_labels(const Labels& labels) {
  Labels out(labels.size());
  Sum q = static_cast<Sum>(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) out[i] = q + 1 - labels[i];
  return out;
}

std::map<Sum, std::vector<int>> color_classes(const InducedColoring& ic) {
  std::map<Sum, std::vector<int>> out;
  for (int v = 0; v < static_cast<int>(ic.sums.size()); ++v) out[ic.sums[v]].push_back(v);
  return out;
}

bool classes_independent(const Graph& g, const InducedColoring& ic) {
  for (const auto& [s, cls] : color_classes(ic))
    for (size_t i = 0; i < cls.size(); ++i)
      for (size_t j = i + 1; j < cls.size(); ++j)
        if (g.adjacent(cls[i], cls[j])) return false;
  return true;
}

std::string render_matrix(const Graph& g, const Labels& labels, bool with_sums) {
  require_bijection(g, labels);
  int width = static_cast<int>(std::to_string(std::max<Sum>(1, g.size())).size());
  auto ic = induced(g, labels);
  std::ostringstream os;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (v) os << ' ';
      int e = g.edge_index(u, v);
      if (e < 0)
        os << std::setw(width) << '*';
      else
        os << std::setw(width) << labels[e];
    }
    if (with_sums) os << " | " << ic.sums[u];
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Sum parse_int(const std::string& tok, int line) {
  Sum v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw Error(Errc::invalid_labeling, "line " + std::to_string(line) + ": bad entry '" + tok + "'");
  return v;
}

}  // namespace

ParsedMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<std::optional<Sum>>> rows;
  std::vector<std::optional<Sum>> stated;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::optional<Sum> rowsum;
    auto bar = line.find('|');
    std::string grid = line.substr(0, bar);
    if (bar != std::string::npos) {
      auto tail = split_ws(line.substr(bar + 1));
      if (tail.size() != 1)
        throw Error(Errc::invalid_labeling, "line " + std::to_string(lineno) + ": malformed row-sum column");
      rowsum = parse_int(tail[0], lineno);
    }
    std::vector<std::optional<Sum>> row;
    for (const auto& tok : split_ws(grid)) {
      if (tok == "*")
        row.push_back(std::nullopt);
      else
        row.push_back(parse_int(tok, lineno));
    }
    rows.push_back(std::move(row));
    stated.push_back(rowsum);
  }
  int p = static_cast<int>(rows.size());
  if (p == 0) throw Error(Errc::invalid_labeling, "empty labeling matrix");
  for (int i = 0; i < p; ++i) {
    if (static_cast<int>(rows[i].size()) != p)
      throw Error(Errc::invalid_labeling, "row " + std::to_string(i + 1) + " has " +
                                              std::to_string(rows[i].size()) + " entries, expected " +
                                              std::to_string(p));
    if (rows[i][i]) throw Error(Errc::invalid_labeling, "diagonal entry " + std::to_string(i + 1) + " is not '*'");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      if (rows[i][j] != rows[j][i])
        throw Error(Errc::invalid_labeling,
                    "asymmetric entries at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (rows[i][j]) edges.push_back({i, j});
    }
  ParsedMatrix m{Graph(p, edges), {}, stated};
  m.labels.resize(m.graph.size());
  for (int k = 0; k < m.graph.size(); ++k) {
    auto e = m.graph.edges()[k];
    m.labels[k] = *rows[e.u][e.v];
  }
  {
    std::vector<Sum> sorted = m.labels;
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 1; k < sorted.size(); ++k)
      if (sorted[k] == sorted[k - 1])
        throw Error(Errc::invalid_labeling, "duplicate label " + std::to_string(sorted[k]));
  }
  require_bijection(m.graph, m.labels);
  auto ic = induced(m.graph, m.labels);
  for (int i = 0; i < p; ++i)
    if (stated[i] && *stated[i] != ic.sums[i])
      throw Error(Errc::invalid_labeling, "row " + std::to_string(i + 1) + " states sum " +
                                              std::to_string(*stated[i]) + " but entries sum to " +
                                              std::to_string(ic.sums[i]));
  return m;
}

Labels labels_on(const Graph& host, const ParsedMatrix& m) {
  if (host.order() != m.graph.order() || host.edges() != m.graph.edges())
    throw Error(Errc::invalid_labeling, "matrix edge set does not match the host graph");
  return m.labels;
}

nlohmann::ordered_json labeling_json(const Graph& g, const Labels& labels) {
  auto ic = induced(g, labels);
  nlohmann::ordered_json j;
  j["order"] = g.order();
  j["size"] = g.size();
  auto edges = nlohmann::ordered_json::array();
  for (int i = 0; i < g.size(); ++i) {
    auto e = g.edges()[i];
    edges.push_back({e.u + 1, e.v + 1});
  }
  j["edges"] = edges;
  j["labels"] = labels;
  j["sums"] = ic.sums;
  j["colors"] = ic.colors;
  j["color_count"] = ic.count();
  j["local_antimagic"] = ic.local_antimagic;
  return j;
}

}  // namespace antimagic
