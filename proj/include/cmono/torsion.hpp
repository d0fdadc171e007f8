#pragma once

#include <vector>

#include "cmono/characters.hpp"
#include "cmono/skeleton.hpp"

namespace cmono {

// Mod-p character arithmetic for the ramification divisors: the exponent-sum
// characters sigma_i, Abel-Jacobi images, the index subtrees, and the
// weighted zeta-combination identity.
class TorsionCalculator {
 public:
  TorsionCalculator(const ClusterTree& tree, const FrakSets& frak, const SkeletonData& sk);

  const GammaBasis& basis() const { return basis_; }

  // Value at gamma_{l,l',nu}: +1 if l = i, -1 if l' = i, 0 otherwise.
  FpCharacter sigma_char(long long i) const;

  // n_i * sigma_i with m_i n_i = 1 mod p: the image of (alpha_i,0)-(beta_i,0).
  FpCharacter aj_ramification(long long i) const;

  // All indices downstream of i in the index tree (including i); checked
  // against the depth condition d(s_i) - d(s_i v s_j) <= p*vp/(p-1).
  std::vector<long long> subtree_indices(long long i) const;

  // sum_{n=1}^{p-1} n * (chi_{zeta^n v_i} mod p); checked against
  // sum_{j in subtree} sigma_j.
  FpCharacter weighted_reduction(long long i) const;

  // sum c_j * aj_ramification(j).
  FpCharacter divisor_image(const std::vector<std::pair<long long, long long>>& pairs) const;

 private:
  const ClusterTree* tree_;
  const FrakSets* frak_;
  const SkeletonData* sk_;
  GammaBasis basis_;
};

long long inverse_mod(long long a, long long p);

}  // namespace cmono
