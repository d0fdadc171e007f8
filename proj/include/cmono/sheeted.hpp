#pragma once

#include <vector>

#include "cmono/inertia.hpp"
#include "cmono/skeleton.hpp"

namespace cmono {

// Independent recomputation of the monodromy Gram matrix from signed path
// intersections of fundamental domains.  Indices sharing a parent and the
// same gate into the parent tube form a gluing class; the bridges of a
// class are p metric-tree sheets joined only at that gate.  Nothing here
// uses the closed-form case analysis: only segment arithmetic.
class SheetedForest {
 public:
  SheetedForest(const SkeletonData& sk);

  struct Edge {
    int cls = -1;      // gluing class
    int sheet = 0;     // residue mod p
    int base_edge = 0; // edge id within the class's base tree
    bool up = false;   // oriented toward the gate
    friend bool operator==(const Edge& a, const Edge& b) = default;
  };

  // Fundamental path for gamma_{i,i',n}: ascend sheet n from the bridge
  // foot to the gate, descend sheet n-1 back to the foot.
  std::vector<Edge> fundamental_path(long long i, long long n) const;

  Rational path_length(const std::vector<Edge>& path) const;

  // Sum over shared (class, sheet, base edge) of +/- length, positive when
  // traversed in the same direction.
  Rational signed_intersection(const std::vector<Edge>& p, const std::vector<Edge>& q) const;

  Rational gram_entry(long long i, long long m, long long j, long long n) const;
  RationalMatrix gram_matrix(const GammaBasis& basis) const;

  int class_count() const { return static_cast<int>(classes_.size()); }
  int class_of(long long i) const { return class_of_[i]; }

 private:
  struct BaseEdge {
    int child = -1;   // node index within the class (deeper endpoint)
    int parent = -1;  // node index (closer to the gate)
    Rational length;
  };
  struct GluingClass {
    std::vector<long long> indices;        // bridge indices in the class
    std::vector<SkeletonPoint> nodes;      // feet, pairwise joins, gate
    std::vector<BaseEdge> edges;           // tree edges, child -> parent
    std::vector<int> node_parent_edge;     // per node: edge toward the gate (-1 at gate)
    int gate = -1;                         // node index of the shared top
    std::vector<int> foot_of_index;        // per class index slot: node of tilde_down_i
  };

  void build_class(const std::vector<long long>& members);

  const SkeletonData* sk_;
  long long p_ = 2;
  std::vector<GluingClass> classes_;
  std::vector<int> class_of_;       // 1..h
  std::vector<int> slot_of_index_;  // position of i within its class
};

}  // namespace cmono
