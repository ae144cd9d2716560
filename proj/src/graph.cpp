#include "antimagic/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace antimagic {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::invalid_spec: return "invalid_spec";
    case Errc::invalid_graph: return "invalid_graph";
    case Errc::invalid_labeling: return "invalid_labeling";
    case Errc::precondition: return "precondition";
    case Errc::budget_exhausted: return "budget_exhausted";
    case Errc::overflow: return "overflow";
    case Errc::io: return "io";
  }
  return "unknown";
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges, std::string name)
    : order_(order), name_(std::move(name)) {
  if (order < 0) throw Error(Errc::invalid_graph, "negative order");
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= order || b >= order)
      throw Error(Errc::invalid_graph, "edge endpoint out of range");
    if (a == b) throw Error(Errc::invalid_graph, "loop at vertex " + std::to_string(a + 1));
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(Errc::invalid_graph, "multi-edge");
  adj_.assign(order, {});
  inc_.assign(order, {});
  index_.assign(static_cast<size_t>(order) * order, -1);
  for (int i = 0; i < size(); ++i) {
    auto [a, b] = edges_[i];
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    inc_[a].push_back(i);
    inc_[b].push_back(i);
    index_[static_cast<size_t>(a) * order + b] = i;
    index_[static_cast<size_t>(b) * order + a] = i;
  }
  for (auto& n : adj_) std::sort(n.begin(), n.end());
}

bool Graph::adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) return -1;
  return index_[static_cast<size_t>(u) * order_ + v];
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(order_);
  for (int v = 0; v < order_; ++v) d[v] = degree(v);
  return d;
}

std::optional<int> Graph::regularity() const {
  if (order_ == 0) return 0;
  int r = degree(0);
  for (int v = 1; v < order_; ++v)
    if (degree(v) != r) return std::nullopt;
  return r;
}

bool Graph::connected() const {
  if (order_ <= 1) return true;
  std::vector<char> seen(order_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == order_;
}

bool Graph::bipartite(std::vector<int>* side) const {
  std::vector<int> s(order_, -1);
  for (int start = 0; start < order_; ++start) {
    if (s[start] >= 0) continue;
    s[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v]) {
        if (s[w] < 0) {
          s[w] = 1 - s[v];
          stack.push_back(w);
        } else if (s[w] == s[v]) {
          return false;
        }
      }
    }
  }
  if (side) *side = std::move(s);
  return true;
}

static void need(bool ok, const std::string& msg) {
  if (!ok) throw Error(Errc::invalid_spec, msg);
}

Graph path_graph(int n) {
  need(n >= 1, "path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e, "path:" + std::to_string(n));
}

Graph cycle_graph(int n) {
  need(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e, "cycle:" + std::to_string(n));
}

Graph complete_graph(int n) {
  need(n >= 1, "complete needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e, "complete:" + std::to_string(n));
}

Graph complete_bipartite(int m, int n) {
  need(m >= 1 && n >= 1, "bipartite needs m,n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.push_back({i, m + j});
  return Graph(m + n, e, "bipartite:" + std::to_string(m) + "," + std::to_string(n));
}

Graph empty_graph(int n) {
  need(n >= 1, "empty needs n >= 1");
  return Graph(n, {}, "empty:" + std::to_string(n));
}

Graph circulant(int n, const std::vector<int>& distances) {
  need(n >= 3, "circulant needs n >= 3");
  need(!distances.empty() && distances.front() == 1, "circulant distances must start with 1");
  for (size_t i = 1; i < distances.size(); ++i)
    need(distances[i] > distances[i - 1], "circulant distances must increase strictly");
  need(distances.back() <= n / 2, "circulant distance exceeds n/2");
  std::vector<std::pair<int, int>> e;
  for (int d : distances)
    for (int i = 0; i < n; ++i) {
      int j = (i + d) % n;
      if (2 * d == n && i >= j) continue;
      e.push_back({i, j});
    }
  std::string name = "circulant:" + std::to_string(n) + ":";
  for (size_t i = 0; i < distances.size(); ++i)
    name += (i ? "," : "") + std::to_string(distances[i]);
  return Graph(n, e, name);
}

// outer cycle 0..n-1, inner cycle n..2n-1, spokes i -- n+i
Graph prism(int n) {
  need(n >= 3, "prism needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    e.push_back({i, (i + 1) % n});
    e.push_back({n + i, n + (i + 1) % n});
    e.push_back({i, n + i});
  }
  return Graph(2 * n, e, "prism:" + std::to_string(n));
}

// cycle 0..2n-1 plus antipodal chords
Graph mobius(int order) {
  need(order >= 6 && order % 2 == 0, "mobius needs an even order >= 6");
  int n = order / 2;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < order; ++i) e.push_back({i, (i + 1) % order});
  for (int i = 0; i < n; ++i) e.push_back({i, i + n});
  return Graph(order, e, "mobius:" + std::to_string(order));
}

Graph join(const Graph& g, const Graph& h) {
  std::vector<std::pair<int, int>> e;
  int p = g.order();
  for (auto [a, b] : g.edges()) e.push_back({a, b});
  for (auto [a, b] : h.edges()) e.push_back({p + a, p + b});
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < h.order(); ++j) e.push_back({i, p + j});
  return Graph(p + h.order(), e, "join(" + g.name() + "," + h.name() + ")");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<std::pair<int, int>> e;
  int p = g.order();
  for (auto [a, b] : g.edges()) e.push_back({a, b});
  for (auto [a, b] : h.edges()) e.push_back({p + a, p + b});
  return Graph(p + h.order(), e);
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) e.push_back({i, j});
  return Graph(g.order(), e);
}

Graph add_edge(const Graph& g, int u, int v) {
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : g.edges()) e.push_back({a, b});
  e.push_back({u, v});
  return Graph(g.order(), e, g.name().empty() ? "" : g.name() + "+e");
}

Graph remove_edge(const Graph& g, int u, int v) {
  std::vector<std::pair<int, int>> e;
  Edge drop{std::min(u, v), std::max(u, v)};
  bool found = false;
  for (auto ed : g.edges()) {
    if (ed == drop) {
      found = true;
      continue;
    }
    e.push_back({ed.u, ed.v});
  }
  if (!found) throw Error(Errc::invalid_graph, "edge to remove is absent");
  return Graph(g.order(), e, g.name().empty() ? "" : g.name() + "-e");
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  Graph parse_all() {
    Graph g = parse();
    skip_ws();
    need(pos_ == s_.size(), "trailing characters in graph spec at offset " + std::to_string(pos_));
    return g;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) { need(eat(c), std::string("expected '") + c + "' in graph spec"); }

  std::string word() {
    skip_ws();
    size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  int number() {
    skip_ws();
    size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    need(pos_ > b, "expected a number in graph spec");
    int v = 0;
    auto [p, ec] = std::from_chars(s_.data() + b, s_.data() + pos_, v);
    need(ec == std::errc(), "number out of range in graph spec");
    (void)p;
    return v;
  }

  bool next_is_digit_after_comma() {
    size_t save = pos_;
    bool ok = false;
    if (eat(',')) {
      skip_ws();
      ok = pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    pos_ = save;
    return ok;
  }

  Graph parse() {
    std::string kind = word();
    need(!kind.empty(), "empty graph spec");
    if (kind == "join") {
      expect('(');
      Graph a = parse();
      expect(',');
      Graph b = parse();
      expect(')');
      return join(a, b);
    }
    expect(':');
    if (kind == "name") return catalog(word());
    if (kind == "cycle") return cycle_graph(number());
    if (kind == "path") return path_graph(number());
    if (kind == "complete") return complete_graph(number());
    if (kind == "empty") return empty_graph(number());
    if (kind == "prism") return prism(number());
    if (kind == "mobius") return mobius(number());
    if (kind == "bipartite") {
      int m = number();
      expect(',');
      int n = number();
      return complete_bipartite(m, n);
    }
    if (kind == "circulant") {
      int n = number();
      expect(':');
      std::vector<int> d{number()};
      while (next_is_digit_after_comma()) {
        expect(',');
        d.push_back(number());
      }
      return circulant(n, d);
    }
    throw Error(Errc::invalid_spec, "unknown graph kind '" + kind + "'");
  }
};

}  // namespace

Graph build(std::string_view spec) {
  Graph g = SpecParser(spec).parse_all();
  g.set_name(std::string(spec));
  return g;
}

std::string edges_to_string(const Graph& g) {
  std::ostringstream os;
  for (size_t i = 0; i < g.edges().size(); ++i) {
    auto e = g.edges()[i];
    os << (i ? " " : "") << e.u + 1 << "-" << e.v + 1;
  }
  return os.str();
}

}  // namespace antimagic
