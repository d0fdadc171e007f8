#include "cmono/torsion.hpp"

#include <algorithm>

#include "cmono/errors.hpp"

namespace cmono {

long long inverse_mod(long long a, long long p) {
  a = ((a % p) + p) % p;
  for (long long x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  fail(ErrorCode::Parse, "no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
}

TorsionCalculator::TorsionCalculator(const ClusterTree& tree, const FrakSets& frak,
                                     const SkeletonData& sk)
    : tree_(&tree), frak_(&frak), sk_(&sk) {
  const BranchConfig& cfg = sk.geometry().config();
  basis_.p = cfg.p;
  basis_.h = cfg.h;
}

FpCharacter TorsionCalculator::sigma_char(long long i) const {
  FpCharacter chi(basis_);
  for (long long l = 1; l <= basis_.h; ++l) {
    long long value = 0;
    if (l == i) value += 1;
    if (sk_->index_parent(l) == i) value -= 1;
    value = ((value % basis_.p) + basis_.p) % basis_.p;
    if (value == 0) continue;
    for (long long nu = 1; nu <= basis_.p - 1; ++nu) chi.coord(l, nu) = value;
  }
  return chi;
}

FpCharacter TorsionCalculator::aj_ramification(long long i) const {
  const BranchConfig& cfg = sk_->geometry().config();
  if (i < 0 || i > cfg.h) fail(ErrorCode::Parse, "ramification index out of range");
  const long long ni = inverse_mod(cfg.exponents[i], cfg.p);
  return sigma_char(i).scaled(ni);
}

std::vector<long long> TorsionCalculator::subtree_indices(long long i) const {
  const BranchConfig& cfg = sk_->geometry().config();
  if (i < 1 || i > cfg.h) fail(ErrorCode::Parse, "subtree index out of range");

  // Downstream closure in the index tree.
  std::vector<long long> out;
  std::vector<bool> in(cfg.h + 1, false);
  in[i] = true;
  out.push_back(i);
  bool grew = true;
  while (grew) {
    grew = false;
    for (long long j = 1; j <= cfg.h; ++j)
      if (!in[j] && in[sk_->index_parent(j)]) {
        in[j] = true;
        out.push_back(j);
        grew = true;
      }
  }
  std::sort(out.begin(), out.end());

  // Must agree with the depth condition d(s_i) - d(s_i v s_j) <= p vp/(p-1).
  const Rational rho = sk_->geometry().tube_radius();
  std::vector<long long> by_depth;
  const int si = frak_->pair_cluster[i];
  const Rational d_i = tree_->node(si).depth.finite_value();
  for (long long j = 1; j <= cfg.h; ++j) {
    const int join = tree_->join(si, frak_->pair_cluster[j]);
    if (d_i - tree_->node(join).depth.finite_value() <= rho) by_depth.push_back(j);
  }
  if (by_depth != out)
    fail(ErrorCode::Verdict, "index subtree of " + std::to_string(i) +
                                 " disagrees with the depth-condition set");
  return out;
}

FpCharacter TorsionCalculator::weighted_reduction(long long i) const {
  FpCharacter total(basis_);
  for (long long n = 1; n <= basis_.p - 1; ++n)
    total += FpCharacter::reduce(character_zeta_v(basis_, i, n)).scaled(n);

  FpCharacter expected(basis_);
  for (long long j : subtree_indices(i)) expected += sigma_char(j);
  if (!(total == expected))
    fail(ErrorCode::Verdict, "weighted zeta-combination of v_" + std::to_string(i) +
                                 " does not reduce to the subtree sigma sum");
  return total;
}

FpCharacter TorsionCalculator::divisor_image(
    const std::vector<std::pair<long long, long long>>& pairs) const {
  FpCharacter total(basis_);
  for (const auto& [j, c] : pairs) total += aj_ramification(j).scaled(c);
  return total;
}

}  // namespace cmono
