#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmono/laurent.hpp"
#include "cmono/rational.hpp"

namespace cmono {

// Branch data of y^p = (x - alpha_0)^{m_0} prod (x - alpha_i)^{m_i} (x - beta_i)^{p - m_i}
// with beta_0 = inf.  Finite branch points are indexed
//   0 -> alpha_0,  2i-1 -> alpha_i,  2i -> beta_i   (i = 1..h),
// giving 2h+1 points.
struct BranchConfig {
  long long p = 2;
  long long h = 1;
  Rational vp = 0;                  // v(p); 0 in the Laurent model
  std::vector<long long> exponents; // m_0..m_h

  long long point_count() const { return 2 * h + 1; }
  long long genus() const { return (p - 1) * h; }

  // p * v(p) / (p - 1): tube radius on the branch-point side.
  Rational tube_radius() const { return Rational(p) * vp / Rational(p - 1); }

  // Throws ErrorCode::Parse on violated invariants (p not prime, bad
  // exponent ranges, h < 1, vp < 0).
  void validate() const;
};

// Friendly names for the finite point indices.
std::string point_label(long long index);

// Matrix of pairwise valuations v(z_i - z_j) over the finite branch
// points; +inf diagonal.  `infinity_marked` records that the point at
// infinity is already accounted for (always the case for matrices feeding
// the main pipeline; moebius_to_infinity sets it).
struct ValMatrix {
  std::size_t size = 0;
  std::vector<ExtendedValue> entries;  // row-major size*size
  bool infinity_marked = true;

  const ExtendedValue& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
  ExtendedValue& at(std::size_t i, std::size_t j) { return entries[i * size + j]; }

  static ValMatrix zeros(std::size_t n);
};

struct UltrametricReport {
  bool ok = true;
  // First violating triple when !ok.
  std::size_t i = 0, j = 0, k = 0;
  std::string detail;
};

// t-adic valuation: least exponent of the support, +inf for 0.
ExtendedValue laurent_valuation(const LaurentPoly& f);

// Pairwise valuation matrix of distinct roots; rejects duplicates.
ValMatrix build_val_matrix(const std::vector<LaurentPoly>& roots);

// Every off-diagonal triple must attain its minimum at least twice.
UltrametricReport validate_ultrametric(const ValMatrix& m);
void require_ultrametric(const ValMatrix& m);

// Valuation effect of z -> 1/(z - z_b): the point b is removed (it goes to
// infinity) and the remaining pairwise valuations become
//   v'(i,j) = v(i,j) - v(i,b) - v(j,b).
// Requires a matrix that does not already account for an infinite point.
ValMatrix moebius_to_infinity(const ValMatrix& m, std::size_t b);

// Genus of the split degenerate model: (p-1) * h.
long long genus(long long p, long long h);

// Valuation of the j-invariant of the cubic with roots {a0, a1, b1} and a
// fourth branch point at infinity, via the Legendre lambda = (b1-a1)/(a0-a1)
// and j = 256 (l^2-l+1)^3 / (l^2 (l-1)^2), all in exact Laurent arithmetic.
ExtendedValue legendre_j_valuation(const LaurentPoly& a0, const LaurentPoly& a1,
                                   const LaurentPoly& b1);

}  // namespace cmono
