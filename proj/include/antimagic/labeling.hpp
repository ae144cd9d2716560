#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antimagic/graph.hpp"
#include "json.hpp"

namespace antimagic {

// labels[i] is the label of g.edges()[i]
using Labels = std::vector<Sum>;

struct InducedColoring {
  std::vector<Sum> sums;    // per vertex
  std::vector<Sum> colors;  // distinct sums, ascending
  bool local_antimagic = false;
  std::optional<std::pair<int, int>> conflict;  // an edge with equal end sums

  int count() const { return static_cast<int>(colors.size()); }
};

// true when labels is a bijection onto [1, q]
bool is_bijection(const Graph& g, const Labels& labels);
void require_bijection(const Graph& g, const Labels& labels);

InducedColoring induced(const Graph& g, const Labels& labels);
bool is_local_antimagic(const Graph& g, const Labels& labels);

// q + 1 - f
Labels complement_labels(const Labels& labels);

// classes keyed by sum; vertices ascending
std::map<Sum, std::vector<int>> color_classes(const InducedColoring& ic);
bool classes_independent(const Graph& g, const InducedColoring& ic);

// Labeling matrix: '*' off the edge set, optional trailing "| rowsum".
std::string render_matrix(const Graph& g, const Labels& labels, bool with_sums = true);

struct ParsedMatrix {
  Graph graph;
  Labels labels;
  std::vector<std::optional<Sum>> stated_sums;  // from "| rowsum" columns
};

// Blank lines and lines starting with '#' are skipped. Stated row sums
// are checked against the grid; a mismatch is an error.
ParsedMatrix parse_matrix(std::string_view text);

// Labels on a known host from a parsed matrix whose edge set must match.
Labels labels_on(const Graph& host, const ParsedMatrix& m);

nlohmann::ordered_json labeling_json(const Graph& g, const Labels& labels);

}  // namespace antimagic
