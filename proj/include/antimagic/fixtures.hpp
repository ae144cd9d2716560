#pragma once

#include <string>
#include <vector>

#include "antimagic/labeling.hpp"
#include "antimagic/solver.hpp"
#include "json.hpp"

namespace antimagic {

// Directory layout:
//   matrices/*.txt       labeling matrices, "# graph: <spec>" and "# colors: <t>" headers
//   c3p2_tuples.csv      case,abc,a..i
//   summary_table.csv    r,order,graph,chi_la (one row per graph)
//   join_constants.csv   graph,n,o_sum,shift_low,shift_high
//   quintic_sums.csv     graph,s1..s4
std::string default_fixture_dir();

struct MatrixFixture {
  std::string id;  // file stem
  std::string graph_spec;
  int colors = 0;
  std::string text;
  ParsedMatrix parsed;
};

struct C3P2Row {
  int case_no = 0;
  int abc = 0;
  C3P2Tuple tuple{};
};

struct TableRow {
  int r = 0;
  int order = 0;
  std::string graph;
  int chi_la = 0;
};

struct JoinConstantRow {
  std::string graph;
  int n = 0;
  Sum o_sum = 0;
  Sum shift_low = 0;
  Sum shift_high = 0;
};

struct SumTupleRow {
  std::string graph;
  std::vector<Sum> sums;
};

// Comma-separated with optional double quotes; the header row is skipped.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

std::vector<MatrixFixture> load_matrices(const std::string& dir);
std::vector<C3P2Row> load_c3p2(const std::string& dir);
std::vector<TableRow> load_table(const std::string& dir);
std::vector<JoinConstantRow> load_join_constants(const std::string& dir);
std::vector<SumTupleRow> load_sum_tuples(const std::string& dir);

// Labeling of g from a matrix fixture on the same graph, if any.
std::optional<Labels> fixture_witness(const Graph& g, const std::string& dir);

struct FixtureCheck {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct FixtureReport {
  std::vector<FixtureCheck> checks;
  bool ok() const;
  nlohmann::ordered_json to_json() const;
};

// Every expected value is recomputed from its payload.
FixtureReport verify_fixtures(const std::string& dir);

}  // namespace antimagic
