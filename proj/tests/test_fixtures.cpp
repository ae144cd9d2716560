#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include <unistd.h>

#include "antimagic/fixtures.hpp"
#include "antimagic/joins.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace antimagic;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("antimagic_fixture_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& name, const std::string& text) const {
    fs::create_directories((path / name).parent_path());
    std::ofstream(path / name) << text;
  }
};

const FixtureCheck* find_check(const FixtureReport& rep, const std::string& id) {
  for (const auto& c : rep.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("fixtures") {
  TEST_CASE("matrix fixtures load and describe their graphs") {
    auto mats = load_matrices(default_fixture_dir());
    REQUIRE(mats.size() == 3);
    for (const auto& m : mats) {
      CAPTURE(m.id);
      Graph g = build(m.graph_spec);
      CHECK(g == m.parsed.graph);
      auto ic = induced(g, m.parsed.labels);
      CHECK(ic.local_antimagic);
      CHECK(ic.count() == m.colors);
      CHECK(classes_independent(g, ic));
    }
  }

  TEST_CASE("table rows parse with quoted descriptors") {
    auto rows = load_table(default_fixture_dir());
    CHECK(rows.size() == 31);
    std::set<std::string> graphs;
    for (const auto& r : rows) {
      CAPTURE(r.graph);
      Graph g = build(r.graph);
      CHECK(g.order() == r.order);
      CHECK(g.regularity() == r.r);
      CHECK(graphs.insert(r.graph).second);
    }
    CHECK(graphs.count("circulant:8:1,2,4") == 1);
  }

  TEST_CASE("CSV reader") {
    TempDir t;
    t.write("x.csv", "h1,h2,h3\n\"a,b\",2,\n\n3,\"4\",5\r\n");
    auto rows = read_csv((t.path / "x.csv").string());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"a,b", "2", ""});
    CHECK(rows[1] == std::vector<std::string>{"3", "4", "5"});
    CHECK_THROWS_AS(read_csv((t.path / "missing.csv").string()), Error);
    t.write("summary_table.csv", "r,order,graph,chi_la\n2,x,cycle:3,3\n");
    CHECK_THROWS_AS(load_table(t.path.string()), Error);
    t.write("summary_table.csv", "r,order,graph,chi_la\n2,3,cycle:3\n");
    CHECK_THROWS_AS(load_table(t.path.string()), Error);
  }

  TEST_CASE("prism tuples are solutions") {
    auto rows = load_c3p2(default_fixture_dir());
    CHECK(rows.size() == 18);
    auto all = enumerate_c3p2();
    for (const auto& r : rows) {
      CAPTURE(r.case_no);
      CHECK(c3p2_equations_hold(r.tuple));
      CHECK(r.abc == r.tuple[0] + r.tuple[1] + r.tuple[2]);
      CHECK(std::find(all.begin(), all.end(), r.tuple) != all.end());
    }
  }

  TEST_CASE("fixture witnesses") {
    std::string dir = default_fixture_dir();
    auto f = fixture_witness(circulant(8, {1, 2, 4}), dir);
    REQUIRE(f);
    CHECK(induced(circulant(8, {1, 2, 4}), *f).count() == 4);
    CHECK_FALSE(fixture_witness(cycle_graph(5), dir));
    CHECK_FALSE(fixture_witness(cycle_graph(5), "/nonexistent/antimagic"));
  }

  TEST_CASE("quintic sum tuples match the matrices") {
    std::string dir = default_fixture_dir();
    for (const auto& r : load_sum_tuples(dir)) {
      Graph g = build(r.graph);
      auto f = fixture_witness(g, dir);
      REQUIRE(f);
      auto want = r.sums;
      std::sort(want.begin(), want.end());
      CHECK(induced(g, *f).colors == want);
    }
  }

  TEST_CASE("join constants against the handshake count") {
    // the nearly magic rectangle's entries are the join edges; the O vertices
    // share them equally and the G vertices split them into two row sums
    std::string dir = default_fixture_dir();
    for (const auto& r : load_join_constants(dir)) {
      Graph g = build(r.graph);
      std::int64_t q = g.size(), p = g.order(), cols = 2 * r.n - 1, cells = p * cols;
      std::int64_t total = cells * q + cells * (cells + 1) / 2;
      std::int64_t low = (total - p / 2) / p;
      CAPTURE(r.n);
      CHECK(r.o_sum == total / cols);
      CHECK(low * p + p / 2 == total);
      // computed constants from the construction itself
      auto f = fixture_witness(g, dir);
      REQUIRE(f);
      auto split = color_split(g, *f);
      REQUIRE(split);
      auto tr = join_O_odd(g, *f, split->first, split->second, r.n);
      const auto& x = tr.steps[0].extra;
      CHECK(x["o_sum"] == total / cols);
      CHECK(x["shift_low"] == low);
      CHECK(x["shift_high"] == low + 1);
    }
    // n = 4 on C8(1,2,4): 56 cells on [21, 76]
    CHECK((56 * 20 + 56 * 57 / 2 - 4) / 8 == 339);
  }

  TEST_CASE("verification report") {
    auto rep = verify_fixtures(default_fixture_dir());
    for (auto id : {"matrix:c8_123", "matrix:c8_124", "matrix:c8_134", "sums:circulant:8:1,3,4",
                    "join:circulant:8:1,2,4:n=3", "table:r4:name:B1"}) {
      CAPTURE(id);
      auto c = find_check(rep, id);
      REQUIRE(c);
      CHECK(c->pass);
    }
    auto j = rep.to_json();
    CHECK(j["schema"] == "fixtures/1");
    CHECK(j["checks"].size() == rep.checks.size());

    auto missing = verify_fixtures("/nonexistent/antimagic");
    CHECK_FALSE(missing.ok());
  }
}
