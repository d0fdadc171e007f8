#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmono/characters.hpp"
#include "cmono/clusters.hpp"
#include "cmono/skeleton.hpp"

namespace cmono {

// One transvection block of the inertia product: the cluster s in frak_C0,
// its exponent m_s, the support of w_s, and the p shifted characters.
struct TransvectionDatum {
  int cluster = -1;
  int s_prime = -1;
  Rational m;
  std::vector<long long> support;   // indices i with v_i in w_s
  std::vector<Character> chars;     // chi_{zeta^n w_s}, n = 0..p-1
};

enum class GramMode { Formula, Transvections };

// Square matrix of exact rationals.
struct RationalMatrix {
  std::size_t size = 0;
  std::vector<Rational> entries;

  static RationalMatrix zeros(std::size_t n) {
    RationalMatrix m;
    m.size = n;
    m.entries.assign(n * n, Rational(0));
    return m;
  }
  const Rational& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
  Rational& at(std::size_t i, std::size_t j) { return entries[i * size + j]; }
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.size == b.size && a.entries == b.entries;
  }
  RationalMatrix multiply(const RationalMatrix& other) const;
  bool is_symmetric() const;
  // Determinants of the leading principal minors (fraction-free elimination).
  std::vector<Rational> leading_principal_minors() const;
};

class InertiaEngine {
 public:
  InertiaEngine(const ClusterTree& tree, const FrakSets& frak, const SkeletonData& sk);

  const GammaBasis& gamma_basis() const { return basis_; }

  // Both selection routes: (A) unique argmin of the depth functional over
  // admissible clusters of frak_C, (B) the walk up the bridge to the next
  // ubereven vertex, else the cluster of the parent-axis projection.  The
  // routes must agree and the minimizer must be unique.
  int select_s_prime(int cluster) const;

  Rational m_value(int cluster, int s_prime) const;

  const std::vector<TransvectionDatum>& plan() const { return plan_; }

  Rational gram_entry(long long i, long long m, long long j, long long n, GramMode mode) const;
  RationalMatrix gram_matrix(GramMode mode) const;

  // Weil pairing e(v, w) for toric-only w: chi_w evaluated on the lattice
  // part of v.  Toric x toric pairs to zero.
  BigInt weil_pairing(const TateVector& v, const TateVector& w) const;

  // t_w(v) = v + e(v, w) w; w must be toric-only.
  TateVector apply_transvection(const TateVector& w, const TateVector& v) const;

  // 2g x 2g unipotent block matrix [[I, M], [0, I]] with M the Gram matrix
  // on (toric basis | lattice basis).  When every m_s is an integer the
  // factored product of transvections is replayed on the standard basis and
  // checked against the block form; with fractional exponents (matrix mode
  // only) the block form alone is returned.
  struct MonodromyResult {
    RationalMatrix block;           // 2g x 2g
    bool factored_route_checked = false;
  };
  MonodromyResult monodromy_matrix() const;

  // One factor t_{zeta^n w_s}^{m} as a 2g x 2g matrix (integer m not
  // required; the block form is linear in m).
  RationalMatrix factor_matrix(const TransvectionDatum& datum, long long n) const;

 private:
  void build_plan();
  int route_a(int cluster) const;
  int route_b(int cluster) const;

  const ClusterTree* tree_;
  const FrakSets* frak_;
  const SkeletonData* sk_;
  GammaBasis basis_;
  std::vector<TransvectionDatum> plan_;
};

}  // namespace cmono
