#include <numeric>

#include "antimagic/labeling.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace antimagic;

namespace {

Labels identity_labels(const Graph& g) {
  Labels f(g.size());
  std::iota(f.begin(), f.end(), 1);
  return f;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::io;
}

}  // namespace

TEST_SUITE("labeling") {
  TEST_CASE("bijection check") {
    Graph g = cycle_graph(4);
    CHECK(is_bijection(g, {1, 2, 3, 4}));
    CHECK(is_bijection(g, {4, 1, 3, 2}));
    CHECK_FALSE(is_bijection(g, {1, 2, 3, 3}));
    CHECK_FALSE(is_bijection(g, {1, 2, 3, 5}));
    CHECK_FALSE(is_bijection(g, {1, 2, 3}));
    CHECK(code_of([&] { require_bijection(g, {0, 1, 2, 3}); }) == Errc::invalid_labeling);
  }

  TEST_CASE("vertex sums add up to q(q+1)") {
    for (Graph g : {cycle_graph(7), complete_graph(5), prism(4), catalog("B3"), circulant(8, {1, 2, 4})}) {
      Labels f = identity_labels(g);
      std::rotate(f.begin(), f.begin() + 2, f.end());
      auto ic = induced(g, f);
      Sum total = std::accumulate(ic.sums.begin(), ic.sums.end(), Sum{0});
      Sum q = g.size();
      CHECK(total == q * (q + 1));
      auto ref = oracle::sums(g.order(), edges_of(g), std::vector<std::int64_t>(f.begin(), f.end()));
      CHECK(std::vector<std::int64_t>(ic.sums.begin(), ic.sums.end()) == ref);
    }
  }

  TEST_CASE("induced coloring of a known labeling") {
    // path 1-2-3-4 with labels 1,3,2: sums 1,4,5,2
    Graph g = path_graph(4);
    auto ic = induced(g, {1, 3, 2});
    CHECK(ic.sums == std::vector<Sum>{1, 4, 5, 2});
    CHECK(ic.colors == std::vector<Sum>{1, 2, 4, 5});
    CHECK(ic.local_antimagic);
    CHECK(ic.count() == 4);
    CHECK(classes_independent(g, ic));

    Graph c = cycle_graph(4);
    auto cyc = induced(c, {1, 2, 3, 4});
    // edges (0,1)=1 (0,3)=2 (1,2)=3 (2,3)=4: sums 3,4,7,6
    CHECK(cyc.sums == std::vector<Sum>{3, 4, 7, 6});
    CHECK(cyc.local_antimagic);
    // spider 0-1-2 with leaves 3,4 on 2: sums at 1 and 2 are both 6
    Graph spider(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    auto conflict = induced(spider, {4, 2, 1, 3});
    CHECK_FALSE(conflict.local_antimagic);
    CHECK(conflict.conflict == std::pair<int, int>{1, 2});
  }

  TEST_CASE("complement labeling keeps the antimagic property") {
    Graph g = circulant(8, {1, 2, 4});
    auto m = parse_matrix(" *  19  12   *   1   *  20  11\n"
                          "19   *   6  17   *   5   *   9\n"
                          "12   6   *   2  18   *   4   *\n"
                          " *  17   2   *  15  13   *  16\n"
                          " 1   *  18  15   *   7   8   *\n"
                          " *   5   *  13   7   *  14   3\n"
                          "20   *   4   *   8  14   *  10\n"
                          "11   9   *  16   *   3  10   *\n");
    Labels f = labels_on(g, m);
    auto ic = induced(g, f);
    REQUIRE(ic.local_antimagic);
    CHECK(ic.count() == 4);
    Labels c = complement_labels(f);
    CHECK(is_bijection(g, c));
    auto cc = induced(g, c);
    CHECK(cc.local_antimagic);
    CHECK(cc.count() == ic.count());
    // each sum becomes deg*(q+1) - sum
    for (int v = 0; v < g.order(); ++v) CHECK(cc.sums[v] == g.degree(v) * (g.size() + 1) - ic.sums[v]);
    CHECK(complement_labels(c) == f);
  }

  TEST_CASE("matrix render and parse round trip") {
    Graph g = prism(3);
    Labels f = {7, 1, 4, 9, 2, 5, 8, 3, 6};
    std::string text = render_matrix(g, f);
    auto m = parse_matrix("# comment\n\n" + text);
    CHECK(m.graph == g);
    CHECK(m.labels == f);
    auto ic = induced(g, f);
    for (int v = 0; v < g.order(); ++v) CHECK(m.stated_sums[v] == ic.sums[v]);
    auto bare = parse_matrix(render_matrix(g, f, false));
    CHECK(bare.labels == f);
    CHECK_FALSE(bare.stated_sums[0].has_value());
  }

  TEST_CASE("matrix parse errors") {
    CHECK(code_of([] { parse_matrix(""); }) == Errc::invalid_labeling);
    CHECK(code_of([] { parse_matrix("* 1\n2 *\n"); }) == Errc::invalid_labeling);
    CHECK(code_of([] { parse_matrix("1 1\n1 *\n"); }) == Errc::invalid_labeling);
    CHECK(code_of([] { parse_matrix("* 1 *\n1 *\n"); }) == Errc::invalid_labeling);
    CHECK(code_of([] { parse_matrix("* x\nx *\n"); }) == Errc::invalid_labeling);
    CHECK(code_of([] { parse_matrix("* 1 | 2\n1 * | 1\n"); }) == Errc::invalid_labeling);
    CHECK(code_of([] { parse_matrix("* 2\n2 *\n"); }) == Errc::invalid_labeling);
    CHECK(code_of([] { parse_matrix("* 1 | 1 1\n1 *\n"); }) == Errc::invalid_labeling);
    auto m = parse_matrix("* 1\n1 *\n");
    CHECK(code_of([&] { labels_on(path_graph(3), m); }) == Errc::invalid_labeling);
  }

  TEST_CASE("labeling JSON") {
    Graph g = path_graph(4);
    auto j = labeling_json(g, {1, 3, 2});
    CHECK(j["order"] == 4);
    CHECK(j["size"] == 3);
    CHECK(j["edges"][0] == nlohmann::json::array({1, 2}));
    CHECK(j["labels"] == nlohmann::json::array({1, 3, 2}));
    CHECK(j["color_count"] == 4);
    CHECK(j["local_antimagic"] == true);
  }
}
