#include <doctest.h>

#include <random>
#include <sstream>

#include "covenum/errors.hpp"
#include "covenum/min_valid_aug.hpp"
#include "covenum/oracle.hpp"
#include "testutil.hpp"

using namespace covenum;
using namespace covenum::testutil;

namespace {

ContractedBipartite random_instance(std::mt19937& rng, int max_total) {
  for (;;) {
    std::uniform_int_distribution<int> nl_d(1, max_total - 1);
    int nl = nl_d(rng);
    std::uniform_int_distribution<int> nr_d(0, max_total - nl);
    int nr = nr_d(rng);
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int l = 0; l < nl; ++l)
      for (int r = 0; r < nr; ++r)
        if (coin(rng) < 0.45) edges.emplace_back(l, r);
    auto h = ContractedBipartite::from_bipartite(nl, nr, edges);
    if (h.whole_connected()) return h;
  }
}

}  // namespace

TEST_CASE("contracted instance bookkeeping") {
  auto h = ContractedBipartite::from_bipartite(
      3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
  CHECK(h.left_count() == 3);
  CHECK(h.rights() == std::vector<int>{0, 1, 2});
  CHECK(h.right_degree(0) == 2);
  CHECK(h.origin(2) == VertexSet{2});
  CHECK(h.whole_connected());
  CHECK(!h.valid_augmentation(VertexSet{}));
  CHECK(!h.valid_augmentation(VertexSet{0}));   // blob 2 unreachable
  CHECK(h.valid_augmentation(VertexSet{0, 1}));
  // 2 alone reaches only blob 2; the other blobs stay disconnected
  CHECK(!h.valid_augmentation(VertexSet{2}));

  auto contracted = h.contract_rights(VertexSet{0});
  CHECK(contracted.left_count() == 2);  // {0,1} merged, {2} kept
  CHECK(contracted.origin(0) == VertexSet{0, 1});
  CHECK(contracted.rights() == std::vector<int>{1, 2});

  auto removed = h.remove_right(1);
  CHECK(removed.rights() == std::vector<int>{0, 2});
  CHECK(removed.left_count() == 3);
}

TEST_CASE("contracting an isolated right is a contract violation") {
  auto h = ContractedBipartite::from_bipartite(2, 2, {{0, 0}, {1, 0}});
  // right 1 is isolated: contracting through it is meaningless
  CHECK_THROWS_AS(h.contract_rights(VertexSet{1}), contract_error);
  CHECK_THROWS_AS(h.contract_rights(VertexSet{7}), contract_error);
}

TEST_CASE("min filter keeps exactly the cut vertex members") {
  // blobs 0,1,2; right 0 spans blobs 0,1; right 1 spans 1,2; right 2 all
  auto h = ContractedBipartite::from_bipartite(
      3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
  // {2} and {0,1} are minimal; in {0,2} vertex 0 is not a cut vertex
  auto filtered =
      min_filter(h, {VertexSet{2}, VertexSet{0, 1}, VertexSet{0, 2}});
  CHECK(filtered == std::vector<VertexSet>{{2}, {0, 1}});
  // non-valid member is a caller bug
  CHECK_THROWS_AS(min_filter(h, {VertexSet{0}}), contract_error);
}

TEST_CASE("frozen augmentation families") {
  auto h = ContractedBipartite::from_bipartite(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  CHECK(min_valid_aug(h) == std::vector<VertexSet>{{0}});

  // C4 as cover components: {0,2} leaves rights 1,3, both reconnect alone
  Graph c4 = cycle_graph(4);
  auto from_cover = ContractedBipartite::from_cover_components(c4, {0, 2});
  CHECK(min_valid_aug(from_cover) == std::vector<VertexSet>{{1}, {3}});

  // P3 around {1}: already connected
  Graph p3 = path_graph(3);
  auto p3i = ContractedBipartite::from_cover_components(p3, {1});
  CHECK(min_valid_aug(p3i) == std::vector<VertexSet>{VertexSet{}});

  // non-cover inputs are rejected by from_cover_components
  CHECK_THROWS_AS(ContractedBipartite::from_cover_components(c4, {0}),
                  contract_error);
}

TEST_CASE("disconnected whole instance is rejected at the public entry") {
  auto h = ContractedBipartite::from_bipartite(2, 1, {{0, 0}});  // blob 1 isolated
  CHECK_THROWS_AS(min_valid_aug(h), input_error);
}

TEST_CASE("recursion agrees with the brute oracle on random instances") {
  std::mt19937 rng(77001);
  for (int trial = 0; trial < 200; ++trial) {
    auto h = random_instance(rng, 10);
    CAPTURE(trial);
    auto got = min_valid_aug(h);
    auto want = oracle::brute_min_valid_aug(h);
    CHECK(got == want);
    // every answer is valid and every proper one-removal is not
    for (const VertexSet& w : got) {
      CHECK(h.valid_augmentation(w));
      for (int r : w) CHECK(!h.valid_augmentation(w.without(r)));
    }
  }
}

TEST_CASE("bipartite instance file format") {
  std::istringstream in("2 2 3\n0 0\n1 0\n1 1\n");
  auto h = parse_bipartite_instance(in);
  CHECK(h.left_count() == 2);
  CHECK(h.rights().size() == 2);
  CHECK(min_valid_aug(h) == std::vector<VertexSet>{{0}});

  std::istringstream bad("2 2 1\n0 5\n");
  CHECK_THROWS_AS(parse_bipartite_instance(bad), parse_error);
  std::istringstream trailing("1 1 1\n0 0\nrest\n");
  CHECK_THROWS_AS(parse_bipartite_instance(trailing), parse_error);
}
