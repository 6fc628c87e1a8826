#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "covenum/graph.hpp"
#include "covenum/supergraph.hpp"
#include "covenum/vertex_set.hpp"

namespace covenum {

// Bipartite instance whose left side is a set of contracted blobs and whose
// right side keeps its original vertex ids through contractions. Left blobs
// are pairwise non-adjacent by construction, so the instance restricted to
// the left side alone is connected iff it has at most one blob.
class ContractedBipartite {
 public:
  ContractedBipartite() = default;

  // Uncontracted instance: blobs 0..nl-1, right ids 0..nr-1.
  static ContractedBipartite from_bipartite(
      int nl, int nr, const std::vector<std::pair<int, int>>& edges);

  // Left blobs are the components of G[xprime]; the right side is the
  // complement of xprime. Requires xprime to be a vertex cover so that no
  // right-right edge is dropped.
  static ContractedBipartite from_cover_components(const Graph& g,
                                                   const VertexSet& xprime);

  int left_count() const { return static_cast<int>(left_adj_.size()); }
  const std::vector<int>& rights() const { return rights_; }
  bool has_right(int rid) const;
  int right_degree(int rid) const;
  const std::vector<int>& left_neighbors(int li) const;
  const std::vector<int>& right_neighbors(int rid) const;
  // Left-side provenance of a blob: the top-level left vertices (or, for
  // cover components, graph vertices) merged into it.
  const VertexSet& origin(int li) const;

  ContractedBipartite remove_right(int rid) const;
  // Merges blobs connected through the given right vertices and absorbs
  // those vertices. Every vertex of xs must be a present, non-isolated
  // right.
  ContractedBipartite contract_rights(const VertexSet& xs) const;

  // True when the graph induced on all blobs plus the rights in w is
  // connected (every blob and every member of w reached).
  bool valid_augmentation(const VertexSet& w) const;
  // True when the whole instance, all rights included, is connected.
  bool whole_connected() const;

 private:
  int right_index(int rid) const;

  std::vector<std::vector<int>> left_adj_;   // blob -> sorted right ids
  std::vector<int> rights_;                  // sorted right ids
  std::vector<std::vector<int>> right_adj_;  // parallel to rights_: sorted blob indexes
  std::vector<VertexSet> origin_;
};

// Spec operation name for contract_rights.
ContractedBipartite contract(const ContractedBipartite& h, const VertexSet& x);

// Keeps exactly the members that are minimal valid augmentations: every
// member must already be valid (contract_error otherwise), and a valid W is
// minimal iff dropping any single vertex disconnects the instance again,
// i.e. every vertex of W is a cut vertex of the augmented graph.
std::vector<VertexSet> min_filter(const ContractedBipartite& h,
                                  const std::vector<VertexSet>& family);

// All minimal valid augmentations, computed by pivoting on a highest-degree
// right vertex and recursing on contracted subinstances. The input instance
// must be connected as a whole (input_error otherwise); internal recursion
// handles disconnected subinstances itself.
std::vector<VertexSet> min_valid_aug(const ContractedBipartite& h);

// Same enumeration as enumerate_cvc, with each neighborhood step computing
// minimal valid augmentations through the recursion above instead of the
// budgeted scan.
DelayStats enumerate_cvc_quasipoly(const Graph& g, const SolutionSink& sink,
                                   const EnumerateOptions& opts = {});

// Text format: first line "nL nR m", then m lines "l r".
ContractedBipartite parse_bipartite_instance(std::istream& in);

}  // namespace covenum
