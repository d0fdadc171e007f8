#include "cmono/analysis.hpp"

#include "cmono/errors.hpp"

namespace cmono {

Analysis::Analysis(InputDocument document) : doc_(std::move(document)) {
  doc_.config.validate();
  vm_ = doc_.valuation_matrix();
  if (static_cast<long long>(vm_.size) != doc_.config.point_count())
    fail(ErrorCode::Parse,
         "expected " + std::to_string(doc_.config.point_count()) + " finite branch points");
  require_ultrametric(vm_);
  tree_ = ClusterTree::build(vm_);
  classify_clusters(tree_, doc_.config.tube_radius());
  frak_ = compute_frak_sets(tree_, doc_.config);
  geom_ = std::make_unique<Skeleton>(vm_, doc_.config);
  sk_ = std::make_unique<SkeletonData>(*geom_, tree_, frak_);
  sk_->validate_split_degenerate();
  engine_ = std::make_unique<InertiaEngine>(tree_, frak_, *sk_);
}

}  // namespace cmono
