#pragma once

#include <memory>

#include "cmono/document.hpp"
#include "cmono/inertia.hpp"

namespace cmono {

// One fully-validated instance with every derived structure built:
// valuation matrix, classified cluster tree, skeleton data (validated for
// split degeneracy) and the transvection plan.  Construction throws
// AnalysisError on any input failure.
class Analysis {
 public:
  explicit Analysis(InputDocument document);
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const InputDocument& doc() const { return doc_; }
  const BranchConfig& config() const { return doc_.config; }
  const ValMatrix& valuations() const { return vm_; }
  const ClusterTree& tree() const { return tree_; }
  const FrakSets& frak() const { return frak_; }
  const Skeleton& geometry() const { return *geom_; }
  const SkeletonData& skeleton() const { return *sk_; }
  const InertiaEngine& engine() const { return *engine_; }

 private:
  InputDocument doc_;
  ValMatrix vm_;
  ClusterTree tree_;
  FrakSets frak_;
  std::unique_ptr<Skeleton> geom_;
  std::unique_ptr<SkeletonData> sk_;
  std::unique_ptr<InertiaEngine> engine_;
};

}  // namespace cmono
