#include "cmono/inertia.hpp"

#include <algorithm>

#include "cmono/errors.hpp"

namespace cmono {

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
  RationalMatrix out = zeros(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t k = 0; k < size; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < size; ++j) {
        const Rational& b = other.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::vector<Rational> RationalMatrix::leading_principal_minors() const {
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= size; ++k) {
    RationalMatrix sub = zeros(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
    // Gaussian elimination over Q.
    Rational det = 1;
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t pivot = col;
      while (pivot < k && sub.at(pivot, col) == 0) ++pivot;
      if (pivot == k) {
        det = 0;
        break;
      }
      if (pivot != col) {
        for (std::size_t j = 0; j < k; ++j) std::swap(sub.at(pivot, j), sub.at(col, j));
        det = -det;
      }
      det *= sub.at(col, col);
      for (std::size_t row = col + 1; row < k; ++row) {
        if (sub.at(row, col) == 0) continue;
        Rational f = sub.at(row, col) / sub.at(col, col);
        for (std::size_t j = col; j < k; ++j) sub.at(row, j) -= f * sub.at(col, j);
      }
    }
    minors.push_back(det);
  }
  return minors;
}

InertiaEngine::InertiaEngine(const ClusterTree& tree, const FrakSets& frak,
                             const SkeletonData& sk)
    : tree_(&tree), frak_(&frak), sk_(&sk) {
  const BranchConfig& cfg = sk.geometry().config();
  basis_.p = cfg.p;
  basis_.h = cfg.h;
  build_plan();
}

int InertiaEngine::route_a(int cluster) const {
  const Rational rho = sk_->geometry().tube_radius();
  const bool s_uber = tree_->node(cluster).ubereven;
  const Rational gate = (s_uber ? Rational(0) : rho);
  const Rational d_s = tree_->node(cluster).depth.finite_value();

  std::optional<Rational> best;
  int best_id = -1;
  int best_count = 0;
  for (int c : frak_->frak_C) {
    if (c == cluster) continue;
    const int j = tree_->join(cluster, c);
    const Rational d_join = tree_->node(j).depth.finite_value();
    if (!(d_s - d_join > gate)) continue;
    const long long u2 = (s_uber ? 1 : 0) + (tree_->node(c).ubereven ? 1 : 0);
    const Rational value = d_s + tree_->node(c).depth.finite_value() - Rational(2) * d_join -
                           Rational(2 - u2) * rho;
    if (!best || value < *best) {
      best = value;
      best_id = c;
      best_count = 1;
    } else if (value == *best) {
      ++best_count;
    }
  }
  if (!best)
    fail(ErrorCode::Verdict, "no admissible cluster when selecting s' for " +
                                 tree_->member_string(cluster));
  if (best_count != 1)
    fail(ErrorCode::Verdict, "non-unique minimizer when selecting s' for " +
                                 tree_->member_string(cluster) + " (" +
                                 std::to_string(best_count) + " ties)");
  return best_id;
}

int InertiaEngine::route_b(int cluster) const {
  const Skeleton& geom = sk_->geometry();
  const BranchConfig& cfg = geom.config();

  // Locate the bridge carrying this cluster's vertex: for s_i it is bridge
  // i with the walk starting at vhat_i; for an ubereven cluster it is any
  // chain containing it (overlapping bridges share their upper parts).
  long long idx = -1;
  std::size_t pos = 0;
  for (long long i = 1; i <= cfg.h && idx < 0; ++i) {
    const auto& chain = sk_->ubereven_chain(i);
    for (std::size_t s = 0; s < chain.size(); ++s)
      if (chain[s] == cluster) {
        idx = i;
        pos = s;
        break;
      }
  }
  if (idx < 0)
    fail(ErrorCode::Verdict,
         "cluster " + tree_->member_string(cluster) + " lies on no bridge of the skeleton");

  const auto& chain = sk_->ubereven_chain(idx);
  if (pos + 1 < chain.size()) return chain[pos + 1];

  // Top of the chain: project onto the parent axis; the landing vertex is a
  // cluster point.
  const long long ip = sk_->index_parent(idx);
  AxisProjection proj = geom.axis_projection(sk_->points(idx).tilde_down, ip);
  // Identify the cluster whose disc is the projection point.
  const SkeletonPoint target = proj.closest;
  for (int id : tree_->non_singletons())
    if (geom.equal(geom.point_of_cluster(*tree_, id), target)) return id;
  fail(ErrorCode::Verdict, "axis projection " + target.str() + " is not a cluster point");
}

int InertiaEngine::select_s_prime(int cluster) const {
  const int a = route_a(cluster);
  const int b = route_b(cluster);
  if (a != b)
    fail(ErrorCode::Verdict, "s' selection routes disagree for " + tree_->member_string(cluster) +
                                 ": argmin gives " + tree_->member_string(a) +
                                 ", bridge walk gives " + tree_->member_string(b));
  return a;
}

Rational InertiaEngine::m_value(int cluster, int s_prime) const {
  const Rational rho = sk_->geometry().tube_radius();
  const long long u2 =
      (tree_->node(cluster).ubereven ? 1 : 0) + (tree_->node(s_prime).ubereven ? 1 : 0);
  const Rational m = tree_->triple_term(cluster, s_prime) - Rational(2 - u2) * rho;
  if (!(m > 0))
    fail(ErrorCode::SplitDegeneracy, "non-positive transvection exponent " + format_rational(m) +
                                         " for cluster " + tree_->member_string(cluster));
  return m;
}

void InertiaEngine::build_plan() {
  const BranchConfig& cfg = sk_->geometry().config();
  for (int s : frak_->frak_C0) {
    TransvectionDatum datum;
    datum.cluster = s;
    datum.s_prime = select_s_prime(s);
    datum.m = m_value(s, datum.s_prime);
    for (long long i = 1; i <= cfg.h; ++i) {
      const int si = frak_->pair_cluster[i];
      if (!tree_->contains(s, si)) continue;
      bool shadowed = false;
      for (long long l = 1; l <= cfg.h && !shadowed; ++l) {
        if (l == i) continue;
        const int sl = frak_->pair_cluster[l];
        shadowed = tree_->contains(sl, si) && sl != si && tree_->contains(s, sl);
      }
      if (!shadowed) datum.support.push_back(i);
    }
    if (datum.support.empty())
      fail(ErrorCode::Verdict, "empty transvection support for " + tree_->member_string(s));
    Character w = character_w(basis_, datum.support);
    Character orbit_sum(basis_);
    for (long long n = 0; n <= cfg.p - 1; ++n) {
      datum.chars.push_back(w.zeta_shift(n));
      orbit_sum += datum.chars.back();
    }
    if (!orbit_sum.is_zero())
      fail(ErrorCode::Verdict, "norm relation violated for " + tree_->member_string(s));
    plan_.push_back(std::move(datum));
  }
}

Rational InertiaEngine::gram_entry(long long i, long long m, long long j, long long n,
                                   GramMode mode) const {
  const BranchConfig& cfg = sk_->geometry().config();
  if (mode == GramMode::Transvections) {
    Rational total = 0;
    for (const TransvectionDatum& datum : plan_) {
      BigInt s = 0;
      for (long long k = 0; k <= cfg.p - 1; ++k)
        s += datum.chars[k].evaluate(i, m) * datum.chars[k].evaluate(j, n);
      if (s != 0) total += datum.m * Rational(s);
    }
    return total;
  }

  // Closed form: nonzero only within one gluing class, with the distance
  // of the bridge join to the parent tube setting the scale.
  const Skeleton& geom = sk_->geometry();
  if (sk_->index_parent(i) != sk_->index_parent(j)) return Rational(0);
  if (!geom.equal(sk_->points(i).tilde_up, sk_->points(j).tilde_up)) return Rational(0);
  const SkeletonPoint join = geom.join(sk_->points(i).tilde_down, sk_->points(j).tilde_down);
  AxisProjection proj = geom.axis_projection(join, sk_->index_parent(i));
  if (proj.in_tube) return Rational(0);
  const long long diff = (((n - m) % cfg.p) + cfg.p) % cfg.p;
  if (diff == 0) return Rational(2) * proj.tube_distance;
  if (diff == 1 || diff == cfg.p - 1) {
    const Rational eps = (cfg.p == 2) ? Rational(2) : Rational(1);
    return -eps * proj.tube_distance;
  }
  return Rational(0);
}

RationalMatrix InertiaEngine::gram_matrix(GramMode mode) const {
  const long long g = basis_.size();
  RationalMatrix out = RationalMatrix::zeros(g);
  for (long long a = 0; a < g; ++a)
    for (long long b = 0; b < g; ++b) {
      auto [i, m] = basis_.label(a);
      auto [j, n] = basis_.label(b);
      out.at(a, b) = gram_entry(i, m, j, n, mode);
    }
  return out;
}

BigInt InertiaEngine::weil_pairing(const TateVector& v, const TateVector& w) const {
  if (!w.toric_only())
    fail(ErrorCode::Parse, "weil_pairing requires a toric-only second argument");
  const Character chi = w.toric_character();
  BigInt out = 0;
  for (long long idx = 0; idx < basis_.size(); ++idx) {
    if (v.lattice[idx] == 0) continue;
    auto [i, n] = basis_.label(idx);
    out += v.lattice[idx] * chi.evaluate(i, n);
  }
  return out;
}

TateVector InertiaEngine::apply_transvection(const TateVector& w, const TateVector& v) const {
  const BigInt e = weil_pairing(v, w);
  TateVector out = v;
  if (e != 0)
    for (std::size_t k = 0; k < out.toric.size(); ++k) out.toric[k] += e * w.toric[k];
  return out;
}

RationalMatrix InertiaEngine::factor_matrix(const TransvectionDatum& datum, long long n) const {
  const long long g = basis_.size();
  RationalMatrix out = RationalMatrix::zeros(2 * g);
  for (long long k = 0; k < 2 * g; ++k) out.at(k, k) = 1;
  // t_w^m adds m * chi_w(gamma) * w to the toric part of a lattice lift;
  // as a block matrix this is I + m * (w_toric outer chi_w-on-basis).
  TateVector w(basis_);
  for (long long s : datum.support) w.add_toric(s, n, 1);
  const Character chi = w.toric_character();
  for (long long row = 0; row < g; ++row)
    for (long long col = 0; col < g; ++col) {
      auto [j, nn] = basis_.label(col);
      const BigInt weight = chi.evaluate(j, nn) * w.toric[row];
      if (weight != 0) out.at(row, g + col) += datum.m * Rational(weight);
    }
  return out;
}

InertiaEngine::MonodromyResult InertiaEngine::monodromy_matrix() const {
  const BranchConfig& cfg = sk_->geometry().config();
  const long long g = basis_.size();
  MonodromyResult res;
  res.block = RationalMatrix::zeros(2 * g);
  for (long long k = 0; k < 2 * g; ++k) res.block.at(k, k) = 1;
  const RationalMatrix gram = gram_matrix(GramMode::Formula);

  // With integral exponents the factored product is replayed on each
  // lattice basis vector; the induced character of the resulting toric part
  // must reproduce the Gram column.
  bool integral = true;
  for (const TransvectionDatum& datum : plan_)
    if (!is_integer(datum.m)) integral = false;

  if (integral) {
    for (long long col = 0; col < g; ++col) {
      auto [j, n] = basis_.label(col);
      TateVector v = lattice_generator(basis_, j, n);
      for (const TransvectionDatum& datum : plan_) {
        const long long reps = static_cast<long long>(rat_num(datum.m));
        for (long long zn = 0; zn <= cfg.p - 1; ++zn) {
          TateVector w(basis_);
          for (long long s : datum.support) w.add_toric(s, zn, 1);
          for (long long r = 0; r < reps; ++r) v = apply_transvection(w, v);
        }
      }
      // Lattice part must be untouched.
      for (long long k = 0; k < g; ++k)
        if (v.lattice[k] != (k == col ? 1 : 0))
          fail(ErrorCode::Verdict, "transvection product moved a lattice coordinate");
      const Character chi = v.toric_character();
      for (long long row = 0; row < g; ++row) {
        auto [i, m] = basis_.label(row);
        if (Rational(chi.evaluate(i, m)) != gram.at(row, col))
          fail(ErrorCode::Verdict,
               "factored transvection product disagrees with the Gram block at (" +
                   std::to_string(row) + "," + std::to_string(col) + ")");
      }
    }
    res.factored_route_checked = true;
  }
  // Off-diagonal block in character coordinates: the Gram matrix itself.
  for (long long col = 0; col < g; ++col)
    for (long long row = 0; row < g; ++row) res.block.at(row, g + col) = gram.at(row, col);
  return res;
}

}  // namespace cmono
