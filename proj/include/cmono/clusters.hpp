#pragma once

#include <string>
#include <vector>

#include "cmono/branch.hpp"
#include "cmono/rational.hpp"

namespace cmono {

// Laminar family of clusters cut out of the finite branch points by
// discs.  Singletons are kept as leaves; their depth is +inf so that
// depth strictly increases downward everywhere.
struct ClusterNode {
  std::vector<int> members;       // sorted point indices
  ExtendedValue depth;            // +inf for singletons
  int parent = -1;                // -1 for the root
  std::vector<int> children;
  bool even_partitionable = false;
  bool ubereven = false;          // filled by classify_clusters

  bool is_singleton() const { return members.size() == 1; }
  bool is_even() const { return members.size() % 2 == 0; }
};

class ClusterTree {
 public:
  // Single linkage over descending valuation thresholds.
  static ClusterTree build(const ValMatrix& m);

  const std::vector<ClusterNode>& nodes() const { return nodes_; }
  const ClusterNode& node(int id) const { return nodes_[id]; }
  int root() const { return root_; }
  int leaf_of(int point) const { return leaf_of_point_[point]; }
  std::size_t point_count() const { return leaf_of_point_.size(); }

  // Least common ancestor = smallest cluster containing both.
  int join(int a, int b) const;

  // Smallest cluster containing both points.
  int cluster_of_pair(int point_a, int point_b) const;

  // d(s) + d(c) - 2 d(s v c); requires non-singleton arguments.
  Rational triple_term(int s, int c) const;

  // d(s) - d(parent(s)); error on the root.
  Rational relative_depth(int s) const;

  bool contains(int outer, int inner) const;  // members(inner) subset of members(outer)

  // Non-singleton node ids in a canonical order (by min member, then size).
  std::vector<int> non_singletons() const;

  std::string member_string(int id) const;

 private:
  std::vector<ClusterNode> nodes_;
  std::vector<int> leaf_of_point_;
  int root_ = -1;
};

// s is a disjoint union of >= 2 even-cardinality clusters.  Any such
// partition refines through the children, so this is decided by the
// recursion f(c) = (|c| even) or (c non-singleton and all children of c
// satisfy f), evaluated over the children of s.
bool is_even_partitionable(const ClusterTree& tree, int s);

// s is even-partitionable and every non-singleton cluster c that is not
// even-partitionable keeps the triple term d(s)+d(c)-2d(s v c) strictly
// above p*vp/(p-1).
bool is_ubereven(const ClusterTree& tree, int s, const Rational& tube_radius);

// Marks even_partitionable and ubereven on every node.
void classify_clusters(ClusterTree& tree, const Rational& tube_radius);

struct FrakSets {
  std::vector<int> frak_C;   // non-singleton clusters: ubereven or not even-partitionable
  std::vector<int> frak_C0;  // the even-cardinality ones among frak_C
  std::vector<int> pair_cluster;  // pair_cluster[i] = s_i for i = 1..h (index 0 unused)
};

// Computes frak_C / frak_C0 and checks the structural fact that the
// non-ubereven members of frak_C0 are exactly the h distinct clusters
// s_1..s_h; failure means the input is not split degenerate.
FrakSets compute_frak_sets(const ClusterTree& tree, const BranchConfig& cfg);

// s_i = smallest cluster containing alpha_i and beta_i; i must be >= 1
// (beta_0 = inf lies in no cluster).
int pair_cluster(const ClusterTree& tree, long long i, const BranchConfig& cfg);

}  // namespace cmono
