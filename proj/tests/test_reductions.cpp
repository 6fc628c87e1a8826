#include <doctest.h>

#include <random>

#include "covenum/errors.hpp"
#include "covenum/hypergraph.hpp"
#include "covenum/reductions.hpp"
#include "testutil.hpp"

using namespace covenum;
using namespace covenum::testutil;

TEST_CASE("kind names round trip") {
  for (ReductionKind k :
       {ReductionKind::cvc, ReductionKind::cvc_2deg, ReductionKind::cds_cobip,
        ReductionKind::capvc, ReductionKind::capvc_2deg})
    CHECK(parse_reduction_kind(reduction_kind_name(k)) == k);
  CHECK_THROWS_AS(parse_reduction_kind("bogus"), input_error);
}

TEST_CASE("cvc gadget layout is pinned") {
  Hypergraph h = parse_hypergraph_text("2 1\n0 1\n");
  ReductionInstance inst = build_reduction(h, ReductionKind::cvc);
  // 0,1 originals; 2 edge node; 3 its pendant; 4 hub; 5 hub pendant
  CHECK(inst.gadget.vertex_count() == 6);
  CHECK(inst.gadget.edges() ==
        std::vector<std::pair<int, int>>{
            {0, 2}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {4, 5}});
  CHECK(inst.forced == VertexSet{2, 4});
  CHECK(inst.pendants == VertexSet{3, 5});
  CHECK(!inst.capacities.has_value());
  CHECK(inst.role[2] == GadgetRole::edge_node);
  CHECK(inst.role[4] == GadgetRole::hub);
}

TEST_CASE("path gadget layout and capacities are pinned") {
  Hypergraph h = parse_hypergraph_text("1 1\n0\n");
  ReductionInstance inst = build_reduction(h, ReductionKind::capvc_2deg);
  // 0 original; 1,2,3 path; 4,5,6 pendants; no hub for the capacitated kind
  CHECK(inst.gadget.vertex_count() == 7);
  CHECK(inst.gadget.has_edge(0, 1));  // attachment at first path vertex
  CHECK(inst.gadget.has_edge(1, 2));
  CHECK(inst.gadget.has_edge(2, 3));
  CHECK(inst.gadget.has_edge(1, 4));
  REQUIRE(inst.capacities.has_value());
  // originals keep their degree, path vertices run one short, pendants zero
  CHECK(inst.capacities->cap ==
        std::vector<int>{1, 2, 2, 1, 0, 0, 0});
  CHECK(inst.forced == VertexSet{1, 2, 3});
  CHECK(inst.pendants == VertexSet{4, 5, 6});
}

TEST_CASE("co-bipartite gadget has two cliques") {
  Hypergraph h = parse_hypergraph_text("3 2\n0 1\n1 2\n");
  ReductionInstance inst = build_reduction(h, ReductionKind::cds_cobip);
  // 0,1,2 originals; 3,4 edge nodes; 5 hub
  CHECK(inst.gadget.vertex_count() == 6);
  CHECK(inst.gadget.has_edge(0, 1));  // original clique
  CHECK(inst.gadget.has_edge(0, 5));  // hub joins the original clique
  CHECK(inst.gadget.has_edge(3, 4));  // edge-node clique
  CHECK(!inst.gadget.has_edge(3, 5));  // hub is not adjacent to edge nodes
  CHECK(inst.gadget.has_edge(0, 3));  // incidence
  CHECK(!inst.gadget.has_edge(2, 3));
  CHECK(inst.forced.empty());
  CHECK(inst.pendants.empty());
}

TEST_CASE("projection flags co-bipartite extras") {
  Hypergraph h = parse_hypergraph_text("2 1\n0 1\n");
  ReductionInstance cob = build_reduction(h, ReductionKind::cds_cobip);
  CHECK(project_solution(cob, VertexSet{0}) == VertexSet{0});
  CHECK(!project_solution(cob, VertexSet{0, 2}).has_value());

  ReductionInstance cvc = build_reduction(h, ReductionKind::cvc);
  CHECK(project_solution(cvc, VertexSet{0, 2, 4}) == VertexSet{0});
  CHECK_THROWS_AS(project_solution(cvc, VertexSet{99}), input_error);
}

TEST_CASE("degenerate hypergraph inputs are rejected") {
  Hypergraph empty;
  CHECK_THROWS_AS(build_reduction(empty, ReductionKind::cvc), input_error);

  Hypergraph no_edges;
  no_edges.n = 3;
  CHECK_THROWS_AS(build_reduction(no_edges, ReductionKind::cds_cobip),
                  input_error);
  // fine for kinds that do not need an edge-node clique
  CHECK(build_reduction(no_edges, ReductionKind::cvc).gadget.vertex_count() ==
        5);
}

TEST_CASE("verification passes on pinned hypergraphs, all kinds") {
  const char* inputs[] = {
      "1 1\n0\n",
      "2 1\n0 1\n",
      "3 2\n0 1\n1 2\n",
      "3 3\n0 1\n1 2\n0 2\n",
      "4 2\n0 1 2\n2 3\n",
      "4 3\n0 1\n1 2 3\n0 3\n",
  };
  for (const char* text : inputs) {
    Hypergraph h = parse_hypergraph_text(text);
    for (ReductionKind k :
         {ReductionKind::cvc, ReductionKind::cvc_2deg, ReductionKind::cds_cobip,
          ReductionKind::capvc, ReductionKind::capvc_2deg}) {
      CAPTURE(text);
      CAPTURE(reduction_kind_name(k));
      VerifyReport rep = verify_reduction(h, k);
      for (const std::string& line : rep.lines) CAPTURE(line);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("verification counts the co-bipartite extras") {
  // edges {0},{0,1}: {0} is the only minimal transversal and is a singleton
  // transversal, so only vertex 1 contributes an extra pair
  Hypergraph h = parse_hypergraph_text("2 2\n0\n0 1\n");
  VerifyReport rep = verify_reduction(h, ReductionKind::cds_cobip);
  CHECK(rep.pass);
  bool found = false;
  for (const std::string& line : rep.lines)
    if (line.find("extras beyond the lifted transversals: 1") !=
        std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("verification passes on random hypergraphs within oracle reach") {
  std::mt19937 rng(61415);
  for (int trial = 0; trial < 12; ++trial) {
    Hypergraph h = random_hypergraph(rng, 5, 4);
    CAPTURE(trial);
    for (ReductionKind k :
         {ReductionKind::cvc, ReductionKind::cvc_2deg, ReductionKind::cds_cobip,
          ReductionKind::capvc, ReductionKind::capvc_2deg}) {
      CAPTURE(reduction_kind_name(k));
      CHECK(verify_reduction(h, k).pass);
    }
  }
}
