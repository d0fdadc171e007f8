#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmono/branch.hpp"
#include "cmono/clusters.hpp"
#include "cmono/rational.hpp"

namespace cmono {

// Point of the skeleton in the disc model: either the point at infinity or
// the disc {z : v(z - z_anchor) >= radius} anchored at a finite branch
// point.  (anchor, r) and (anchor', r) name the same disc iff
// v(z_anchor - z_anchor') >= r; the canonical form uses the least such
// anchor index.  Bigger discs are greater; infinity is the unique maximum.
struct SkeletonPoint {
  bool infinite = false;
  int anchor = -1;
  Rational radius;

  static SkeletonPoint infinity_point() {
    SkeletonPoint p;
    p.infinite = true;
    return p;
  }
  static SkeletonPoint disc(int anchor, Rational radius) {
    SkeletonPoint p;
    p.anchor = anchor;
    p.radius = std::move(radius);
    return p;
  }
  std::string str() const;
};

enum class PointOrder { Less, Equal, Greater, Incomparable };

struct AxisProjection {
  SkeletonPoint closest;   // closest point of the axis
  Rational distance;       // delta(x, axis)
  Rational tube_distance;  // max(0, distance - tube radius)
  bool in_tube = false;
};

// Per-index distinguished points: the top of the pair cluster, its raised
// copy at the tube boundary, and the two gates of the bridge to the parent
// tube.  tilde_down_i = vhat_i; vhat_0 is the point at infinity.
struct DistinguishedPoints {
  SkeletonPoint vbar;        // disc of the pair cluster s_i
  SkeletonPoint vhat;        // radius lowered by p*vp/(p-1)
  SkeletonPoint tilde_down;  // = vhat (closest point of tube i to tube i')
  SkeletonPoint tilde_up;    // closest point of tube i' to tube i
};

// Geometry of the Berkovich skeleton over the branch points.  All queries
// are answered from the valuation matrix; no global tree is materialized.
class Skeleton {
 public:
  Skeleton(const ValMatrix& vm, const BranchConfig& cfg);

  const Rational& tube_radius() const { return rho_; }

  SkeletonPoint canonical(SkeletonPoint p) const;
  SkeletonPoint join(const SkeletonPoint& x, const SkeletonPoint& y) const;
  Rational delta(const SkeletonPoint& x, const SkeletonPoint& y) const;
  PointOrder compare(const SkeletonPoint& x, const SkeletonPoint& y) const;
  bool equal(const SkeletonPoint& x, const SkeletonPoint& y) const {
    return compare(x, y) == PointOrder::Equal;
  }
  bool on_path(const SkeletonPoint& x, const SkeletonPoint& a, const SkeletonPoint& b) const;

  SkeletonPoint point_of_cluster(const ClusterTree& tree, int id) const;

  // Closest point of the axis joining alpha_i and beta_i (for i = 0 the
  // axis runs from alpha_0 to infinity); distances to axis and tube.
  AxisProjection axis_projection(const SkeletonPoint& x, long long i) const;

  const ValMatrix& matrix() const { return *vm_; }
  const BranchConfig& config() const { return *cfg_; }

 private:
  Rational val(int a, int b) const;  // finite pairwise valuation

  const ValMatrix* vm_;
  const BranchConfig* cfg_;
  Rational rho_;
};

// Skeleton data derived from a classified cluster tree: distinguished
// points, the index tree, and the chains of ubereven clusters sitting on
// each bridge.
class SkeletonData {
 public:
  SkeletonData(const Skeleton& geom, const ClusterTree& tree, const FrakSets& frak);

  const Skeleton& geometry() const { return *geom_; }

  // 1..h valid; entry 0 exists with vhat = infinity.
  const DistinguishedPoints& points(long long i) const { return pts_[i]; }

  // i' for i in 1..h.
  long long index_parent(long long i) const { return parent_[i]; }
  const std::vector<long long>& parents() const { return parent_; }

  // Cluster ids: s_i followed by the ubereven clusters strictly inside the
  // bridge (vhat_i, tilde_up_i), in increasing order.
  const std::vector<int>& ubereven_chain(long long i) const { return chains_[i]; }

  // delta(tilde_down_i, tube i') -- the full bridge length.
  Rational bridge_length(long long i) const;

  // Pairwise axis separations must exceed twice the tube radius and the
  // dictionary checks must hold; throws ErrorCode::SplitDegeneracy.
  void validate_split_degenerate() const;

 private:
  void compute_points();
  void compute_parents();
  void compute_chains();

  const Skeleton* geom_;
  const ClusterTree* tree_;
  const FrakSets* frak_;
  std::vector<DistinguishedPoints> pts_;   // index 0..h
  std::vector<long long> parent_;          // index 1..h
  std::vector<std::vector<int>> chains_;   // index 1..h
};

}  // namespace cmono
