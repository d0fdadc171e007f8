#include "cmono/branch.hpp"

#include <algorithm>

#include "cmono/errors.hpp"

namespace cmono {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

void BranchConfig::validate() const {
  if (!is_prime(p)) fail(ErrorCode::Parse, "p must be prime, got " + std::to_string(p));
  if (h < 1) fail(ErrorCode::Parse, "h must be >= 1, got " + std::to_string(h));
  if (vp < 0) fail(ErrorCode::Parse, "vp must be >= 0, got " + format_rational(vp));
  if (static_cast<long long>(exponents.size()) != h + 1)
    fail(ErrorCode::Parse, "expected " + std::to_string(h + 1) + " exponents m_0..m_h");
  if (exponents[0] < 1 || exponents[0] > p - 1)
    fail(ErrorCode::Parse, "m_0 must satisfy 1 <= m_0 <= p-1");
  for (long long i = 1; i <= h; ++i) {
    const long long m = exponents[i];
    if (m < 1 || m > p - m)
      fail(ErrorCode::Parse,
           "m_" + std::to_string(i) + " must satisfy 1 <= m <= p-m, got " + std::to_string(m));
  }
}

std::string point_label(long long index) {
  if (index == 0) return "alpha_0";
  const long long i = (index + 1) / 2;
  return (index % 2 == 1 ? "alpha_" : "beta_") + std::to_string(i);
}

ValMatrix ValMatrix::zeros(std::size_t n) {
  ValMatrix m;
  m.size = n;
  m.entries.assign(n * n, ExtendedValue(0));
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ExtendedValue::infinity();
  return m;
}

ExtendedValue laurent_valuation(const LaurentPoly& f) { return f.valuation(); }

ValMatrix build_val_matrix(const std::vector<LaurentPoly>& roots) {
  const std::size_t n = roots.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (roots[i] == roots[j])
        fail(ErrorCode::Parse, "branch points must be distinct; roots " + std::to_string(i) +
                                   " and " + std::to_string(j) + " coincide");
  ValMatrix m = ValMatrix::zeros(n);
  m.infinity_marked = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ExtendedValue v = laurent_valuation(roots[i] - roots[j]);
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

UltrametricReport validate_ultrametric(const ValMatrix& m) {
  UltrametricReport rep;
  const std::size_t n = m.size;
  for (std::size_t i = 0; i < n && rep.ok; ++i)
    for (std::size_t j = i + 1; j < n && rep.ok; ++j)
      for (std::size_t k = j + 1; k < n && rep.ok; ++k) {
        const ExtendedValue& a = m.at(i, j);
        const ExtendedValue& b = m.at(j, k);
        const ExtendedValue& c = m.at(i, k);
        ExtendedValue lo = std::min(a, std::min(b, c));
        int hits = (a == lo) + (b == lo) + (c == lo);
        if (hits < 2) {
          rep.ok = false;
          rep.i = i;
          rep.j = j;
          rep.k = k;
          rep.detail = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(k) + ") has values {" + a.str() + ", " + b.str() + ", " +
                       c.str() + "}; minimum attained once";
        }
      }
  return rep;
}

void require_ultrametric(const ValMatrix& m) {
  for (std::size_t i = 0; i < m.size; ++i) {
    if (!m.at(i, i).is_infinite()) fail(ErrorCode::Parse, "valuation matrix diagonal must be inf");
    for (std::size_t j = 0; j < m.size; ++j) {
      if (i != j && m.at(i, j).is_infinite())
        fail(ErrorCode::Parse, "off-diagonal valuation entries must be finite");
      if (!(m.at(i, j) == m.at(j, i))) fail(ErrorCode::Parse, "valuation matrix must be symmetric");
    }
  }
  UltrametricReport rep = validate_ultrametric(m);
  if (!rep.ok) fail(ErrorCode::Ultrametric, "ultrametric violation: " + rep.detail);
}

ValMatrix moebius_to_infinity(const ValMatrix& m, std::size_t b) {
  if (m.infinity_marked)
    fail(ErrorCode::Parse, "matrix already has a point at infinity; cannot move another");
  if (b >= m.size) fail(ErrorCode::Parse, "moebius pivot out of range");
  ValMatrix out = ValMatrix::zeros(m.size - 1);
  out.infinity_marked = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.size; ++i)
    if (i != b) keep.push_back(i);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      const Rational v = m.at(keep[i], keep[j]).finite_value() -
                         m.at(keep[i], b).finite_value() - m.at(keep[j], b).finite_value();
      out.at(i, j) = ExtendedValue(v);
      out.at(j, i) = ExtendedValue(v);
    }
  return out;
}

long long genus(long long p, long long h) {
  if (!is_prime(p)) fail(ErrorCode::Parse, "p must be prime");
  if (h < 1) fail(ErrorCode::Parse, "h must be >= 1");
  // The degree of the defining polynomial in the normal form is m_0 + p*h
  // with 1 <= m_0 <= p-1, so p never divides it and the formula
  // g = (p-1)(d-1)/2 over the 2h+1 finite branch points applies as-is.
  return (p - 1) * h;
}

ExtendedValue legendre_j_valuation(const LaurentPoly& a0, const LaurentPoly& a1,
                                   const LaurentPoly& b1) {
  if (a0 == a1 || a0 == b1 || a1 == b1)
    fail(ErrorCode::Parse, "degenerate cubic: repeated roots");
  // lambda = A/B with A = b1 - a1, B = a0 - a1.  Then
  //   v(j) = 3 v(A^2 - AB + B^2) - 2 v(A) - 2 v(A - B) - 2 v(B)
  // (v(256) = 0 in residue characteristic zero).
  const LaurentPoly A = b1 - a1;
  const LaurentPoly B = a0 - a1;
  const LaurentPoly q = A * A - A * B + B * B;
  if (q.is_zero()) fail(ErrorCode::Parse, "degenerate cubic: lambda^2 - lambda + 1 vanishes");
  const Rational v = Rational(3) * q.valuation().finite_value() -
                     Rational(2) * A.valuation().finite_value() -
                     Rational(2) * (A - B).valuation().finite_value() -
                     Rational(2) * B.valuation().finite_value();
  return ExtendedValue(v);
}

}  // namespace cmono
