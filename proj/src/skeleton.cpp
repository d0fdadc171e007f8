#include "cmono/skeleton.hpp"

#include <algorithm>

#include "cmono/errors.hpp"

namespace cmono {

std::string SkeletonPoint::str() const {
  if (infinite) return "inf";
  return "(" + std::to_string(anchor) + ", " + format_rational(radius) + ")";
}

Skeleton::Skeleton(const ValMatrix& vm, const BranchConfig& cfg)
    : vm_(&vm), cfg_(&cfg), rho_(cfg.tube_radius()) {}

Rational Skeleton::val(int a, int b) const {
  if (a == b) fail(ErrorCode::Parse, "valuation of a point with itself is infinite");
  return vm_->at(a, b).finite_value();
}

SkeletonPoint Skeleton::canonical(SkeletonPoint p) const {
  if (p.infinite) return p;
  for (int b = 0; b < p.anchor; ++b)
    if (val(p.anchor, b) >= p.radius) {
      p.anchor = b;
      break;
    }
  return p;
}

SkeletonPoint Skeleton::join(const SkeletonPoint& x, const SkeletonPoint& y) const {
  if (x.infinite || y.infinite) return SkeletonPoint::infinity_point();
  Rational r = std::min(x.radius, y.radius);
  if (x.anchor != y.anchor) r = std::min(r, val(x.anchor, y.anchor));
  return canonical(SkeletonPoint::disc(x.anchor, r));
}

Rational Skeleton::delta(const SkeletonPoint& x, const SkeletonPoint& y) const {
  if (x.infinite || y.infinite)
    fail(ErrorCode::Parse, "distance to the point at infinity is infinite");
  const SkeletonPoint j = join(x, y);
  return (x.radius - j.radius) + (y.radius - j.radius);
}

PointOrder Skeleton::compare(const SkeletonPoint& x, const SkeletonPoint& y) const {
  if (x.infinite && y.infinite) return PointOrder::Equal;
  if (x.infinite) return PointOrder::Greater;
  if (y.infinite) return PointOrder::Less;
  const Rational v = x.anchor == y.anchor ? Rational(0) : val(x.anchor, y.anchor);
  const bool same_branch = x.anchor == y.anchor || v >= std::min(x.radius, y.radius);
  if (!same_branch) return PointOrder::Incomparable;
  if (x.radius == y.radius)
    return (x.anchor == y.anchor || v >= x.radius) ? PointOrder::Equal : PointOrder::Incomparable;
  return x.radius < y.radius ? PointOrder::Greater : PointOrder::Less;
}

bool Skeleton::on_path(const SkeletonPoint& x, const SkeletonPoint& a,
                       const SkeletonPoint& b) const {
  return delta(a, x) + delta(x, b) == delta(a, b);
}

SkeletonPoint Skeleton::point_of_cluster(const ClusterTree& tree, int id) const {
  const ClusterNode& node = tree.node(id);
  if (node.is_singleton()) fail(ErrorCode::Parse, "singleton clusters have no skeleton point");
  return canonical(SkeletonPoint::disc(node.members[0], node.depth.finite_value()));
}

AxisProjection Skeleton::axis_projection(const SkeletonPoint& x, long long i) const {
  if (x.infinite) fail(ErrorCode::Parse, "cannot project the point at infinity");
  SkeletonPoint closest;
  if (i == 0) {
    // Axis 0 climbs from alpha_0 to infinity; the projection is the join
    // with the type-I point alpha_0.
    closest = SkeletonPoint::disc(x.anchor, std::min(x.radius, (x.anchor == 0) ? x.radius : val(x.anchor, 0)));
  } else {
    const int a = static_cast<int>(2 * i - 1);
    const int b = static_cast<int>(2 * i);
    // Median of {x, eta_a, eta_b} = deepest of the three pairwise joins.
    SkeletonPoint ja = SkeletonPoint::disc(x.anchor, std::min(x.radius, x.anchor == a ? x.radius : val(x.anchor, a)));
    SkeletonPoint jb = SkeletonPoint::disc(x.anchor, std::min(x.radius, x.anchor == b ? x.radius : val(x.anchor, b)));
    SkeletonPoint top = SkeletonPoint::disc(a, val(a, b));
    closest = ja;
    if (jb.radius > closest.radius) closest = jb;
    if (top.radius > closest.radius) closest = top;
  }
  closest = canonical(closest);
  AxisProjection out;
  out.closest = closest;
  out.distance = delta(x, closest);
  out.tube_distance = std::max(Rational(0), out.distance - rho_);
  out.in_tube = out.distance <= rho_;
  return out;
}

SkeletonData::SkeletonData(const Skeleton& geom, const ClusterTree& tree, const FrakSets& frak)
    : geom_(&geom), tree_(&tree), frak_(&frak) {
  compute_points();
  compute_parents();
  compute_chains();
}

void SkeletonData::compute_points() {
  const BranchConfig& cfg = geom_->config();
  pts_.resize(cfg.h + 1);
  pts_[0].vbar = SkeletonPoint::infinity_point();
  pts_[0].vhat = SkeletonPoint::infinity_point();
  pts_[0].tilde_down = SkeletonPoint::infinity_point();
  pts_[0].tilde_up = SkeletonPoint::infinity_point();
  for (long long i = 1; i <= cfg.h; ++i) {
    SkeletonPoint vbar = geom_->point_of_cluster(*tree_, frak_->pair_cluster[i]);
    pts_[i].vbar = vbar;
    pts_[i].vhat =
        geom_->canonical(SkeletonPoint::disc(vbar.anchor, vbar.radius - geom_->tube_radius()));
    pts_[i].tilde_down = pts_[i].vhat;
  }
}

void SkeletonData::compute_parents() {
  const BranchConfig& cfg = geom_->config();
  parent_.assign(cfg.h + 1, 0);
  for (long long i = 1; i <= cfg.h; ++i) {
    // i' = index whose vhat is minimal among those strictly above vhat_i.
    // Points above a disc form a chain, so the minimum is unique unless two
    // vhat points coincide, which split degeneracy forbids.
    long long best = 0;  // vhat_0 = infinity is always strictly above
    for (long long j = 1; j <= cfg.h; ++j) {
      if (j == i) continue;
      PointOrder ord = geom_->compare(pts_[j].vhat, pts_[i].vhat);
      if (ord == PointOrder::Equal)
        fail(ErrorCode::SplitDegeneracy,
             "coincident tube tops for indices " + std::to_string(i) + " and " + std::to_string(j));
      if (ord != PointOrder::Greater) continue;
      if (best == 0) {
        best = j;
        continue;
      }
      PointOrder vs = geom_->compare(pts_[j].vhat, pts_[best].vhat);
      if (vs == PointOrder::Equal)
        fail(ErrorCode::SplitDegeneracy, "coincident tube tops above index " + std::to_string(i));
      if (vs == PointOrder::Less) best = j;
    }
    parent_[i] = best;

    // tilde_up_i: walk from vhat_i to its projection on the parent axis and
    // stop at tube distance rho from the axis; at most two monotone
    // segments (up to the join, then down to the projection).
    const SkeletonPoint& vhat = pts_[i].vhat;
    AxisProjection proj = geom_->axis_projection(vhat, best);
    const Rational& rho = geom_->tube_radius();
    if (proj.distance <= rho)
      fail(ErrorCode::SplitDegeneracy, "tube " + std::to_string(i) +
                                           " meets the tube of its parent axis; bridge too short");
    SkeletonPoint up_join = geom_->join(vhat, proj.closest);
    Rational descent = proj.closest.radius - up_join.radius;  // [join -> projection]
    SkeletonPoint tilde_up;
    if (rho <= descent) {
      tilde_up = SkeletonPoint::disc(proj.closest.anchor, proj.closest.radius - rho);
    } else {
      tilde_up = SkeletonPoint::disc(vhat.anchor, up_join.radius + (rho - descent));
    }
    pts_[i].tilde_up = geom_->canonical(tilde_up);
  }
}

void SkeletonData::compute_chains() {
  const BranchConfig& cfg = geom_->config();
  chains_.assign(cfg.h + 1, {});
  std::vector<int> uber;
  for (int id : tree_->non_singletons())
    if (tree_->node(id).ubereven) uber.push_back(id);

  for (long long i = 1; i <= cfg.h; ++i) {
    std::vector<int>& chain = chains_[i];
    chain.push_back(frak_->pair_cluster[i]);
    const SkeletonPoint& lo = pts_[i].tilde_down;
    const SkeletonPoint& hi = pts_[i].tilde_up;
    std::vector<std::pair<Rational, int>> interior;  // (distance from lo, id)
    for (int id : uber) {
      SkeletonPoint w = geom_->point_of_cluster(*tree_, id);
      if (geom_->equal(w, lo) || geom_->equal(w, hi)) continue;
      if (geom_->on_path(w, lo, hi)) interior.emplace_back(geom_->delta(lo, w), id);
    }
    std::sort(interior.begin(), interior.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [d, id] : interior) chain.push_back(id);
  }
}

Rational SkeletonData::bridge_length(long long i) const {
  return geom_->delta(pts_[i].tilde_down, pts_[i].tilde_up);
}

void SkeletonData::validate_split_degenerate() const {
  const BranchConfig& cfg = geom_->config();
  const Rational bound = Rational(2) * geom_->tube_radius();
  // Axis separations: route through the top of one axis, project onto the
  // other, and project back.  In a tree this lands on the two bridge gates.
  for (long long i = 0; i <= cfg.h; ++i)
    for (long long j = i + 1; j <= cfg.h; ++j) {
      SkeletonPoint seed = pts_[j].vbar;  // a point of axis j
      AxisProjection onto_i = geom_->axis_projection(seed, i);
      AxisProjection back = geom_->axis_projection(onto_i.closest, j);
      Rational separation = geom_->delta(onto_i.closest, back.closest);
      if (!(separation > bound))
        fail(ErrorCode::SplitDegeneracy,
             "axes " + std::to_string(i) + " and " + std::to_string(j) + " are only " +
                 format_rational(separation) + " apart; need > " + format_rational(bound));
    }
}

}  // namespace cmono
