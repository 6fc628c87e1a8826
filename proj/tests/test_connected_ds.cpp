#include <doctest.h>

#include <random>

#include "covenum/connected_ds.hpp"
#include "covenum/errors.hpp"
#include "covenum/oracle.hpp"
#include "covenum/properties.hpp"
#include "testutil.hpp"

using namespace covenum;
using namespace covenum::testutil;

namespace {

std::vector<VertexSet> cds_family(const Graph& g) {
  std::vector<VertexSet> out;
  EnumerateOptions opts;
  opts.check_integrity = true;
  enumerate_cds(g, collector(out), opts);
  sort_family(out);
  return out;
}

std::vector<VertexSet> cds_oracle(const Graph& g) {
  return oracle::brute_minimal(g.vertex_count(), [&](const VertexSet& x) {
    return check_basic_property(g, x, BasicProperty::connected_dominating_set);
  });
}

}  // namespace

TEST_CASE("frozen connected dominating set families") {
  CHECK(cds_family(complete_graph(3)) ==
        std::vector<VertexSet>{{0}, {1}, {2}});
  CHECK(cds_family(path_graph(2)) == std::vector<VertexSet>{{0}, {1}});
  CHECK(cds_family(path_graph(4)) == std::vector<VertexSet>{{1, 2}});
  CHECK(cds_family(cycle_graph(4)) ==
        std::vector<VertexSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(cds_family(cycle_graph(5)) ==
        std::vector<VertexSet>{{0, 1, 2},
                               {0, 1, 4},
                               {0, 3, 4},
                               {1, 2, 3},
                               {2, 3, 4}});
  CHECK(cds_family(star_graph(3)) == std::vector<VertexSet>{{0}});
  // a lone vertex has no dominating neighbor, so the empty set fails and
  // the vertex itself is the unique minimal solution
  CHECK(cds_family(Graph(1)) == std::vector<VertexSet>{{0}});
}

TEST_CASE("disconnected input is rejected") {
  std::vector<VertexSet> out;
  CHECK_THROWS_AS(enumerate_cds(Graph(2), collector(out)), input_error);
}

TEST_CASE("neighborhood moves between any two adjacent-by-swap solutions") {
  // P6 has minimal CDSs {1,2,3,4} and smaller ones reachable through swaps
  Graph p6 = path_graph(6);
  CHECK(cds_family(p6) == cds_oracle(p6));

  // a lollipop: triangle 0,1,2 with tail 2-3-4
  Graph lolli(5);
  lolli.add_edge(0, 1);
  lolli.add_edge(0, 2);
  lolli.add_edge(1, 2);
  lolli.add_edge(2, 3);
  lolli.add_edge(3, 4);
  CHECK(cds_family(lolli) == cds_oracle(lolli));
}

TEST_CASE("agrees with the oracle on random graphs") {
  std::mt19937 rng(40902);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);  // 3..7
    Graph g = random_connected_graph(rng, n, 0.3);
    CAPTURE(trial);
    CHECK(cds_family(g) == cds_oracle(g));
  }
}

TEST_CASE("every emitted set is dominating, connected and minimal") {
  Graph g = petersen_graph();
  auto family = cds_family(g);
  CHECK(family == cds_oracle(g));
  for (const VertexSet& x : family) {
    CHECK(check_basic_property(g, x, BasicProperty::connected_dominating_set));
    for (int v : x)
      CHECK(!check_basic_property(g, x.without(v),
                                  BasicProperty::connected_dominating_set));
  }
}
