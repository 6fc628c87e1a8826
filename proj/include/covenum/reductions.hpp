#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covenum/capacity.hpp"
#include "covenum/graph.hpp"
#include "covenum/hypergraph.hpp"
#include "covenum/vertex_set.hpp"

namespace covenum {

// Gadget constructions that embed minimal-transversal enumeration into the
// solution families handled here. The 2deg kinds produce 2-degenerate
// bipartite gadgets; the cobip kind produces a co-bipartite gadget.
enum class ReductionKind { cvc, cvc_2deg, cds_cobip, capvc, capvc_2deg };

enum class GadgetRole {
  original,     // copy of a hypergraph vertex
  edge_node,    // represents one hyperedge
  pendant,      // degree-one guard hanging off a forced vertex
  path_node,    // member of a hyperedge path gadget
  hub,          // vertex adjacent to all originals
  hub_pendant,  // degree-one guard of the hub
};

struct ReductionInstance {
  ReductionKind kind{};
  Graph gadget;
  std::optional<CapacityFn> capacities;
  // Vertices contained in every feasible gadget solution.
  VertexSet forced;
  // Degree-one vertices that no minimal gadget solution contains.
  VertexSet pendants;
  std::vector<GadgetRole> role;  // per gadget vertex
  int original_n = 0;            // hypergraph vertices keep ids 0..original_n-1
};

ReductionKind parse_reduction_kind(const std::string& name);
std::string reduction_kind_name(ReductionKind kind);
bool reduction_is_capacitated(ReductionKind kind);

// Vertex layout: originals first, then the per-hyperedge gadget blocks in
// input order, then the hub and its pendant where the kind has one.
ReductionInstance build_reduction(const Hypergraph& h, ReductionKind kind);

// Maps a gadget solution back to hypergraph vertices. For the co-bipartite
// kind, the two-vertex extra solutions are flagged by returning nullopt.
std::optional<VertexSet> project_solution(const ReductionInstance& inst,
                                          const VertexSet& solution);

struct VerifyReport {
  bool pass = true;
  std::vector<std::string> lines;
};

// Certifies the construction against the brute-force transversal oracle:
// forced vertices (complement-minus-one infeasible), pendant structure,
// degeneracy/bipartite or co-bipartite shape, and the exact match between
// the minimal gadget solutions and the lifted minimal transversals (plus
// the characterized two-vertex extras for the co-bipartite kind).
VerifyReport verify_reduction(const Hypergraph& h, ReductionKind kind);

}  // namespace covenum
