#pragma once

#include <map>
#include <string>

#include "cmono/rational.hpp"

namespace cmono {

// Laurent polynomial over Q in the uniformizer t.  This is the concrete
// model of the ground field: the t-adic valuation of a nonzero element is
// the least exponent in its support, v(0) = +inf, and v(p) = 0 for every
// prime p since the residue characteristic is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant) {
    if (constant != 0) coeffs_[0] = constant;
  }

  static LaurentPoly term(const Rational& c, long long exponent) {
    LaurentPoly f;
    if (c != 0) f.coeffs_[exponent] = c;
    return f;
  }

  bool is_zero() const { return coeffs_.empty(); }

  // No zero coefficients are ever stored.
  const std::map<long long, Rational>& coefficients() const { return coeffs_; }

  ExtendedValue valuation() const {
    if (coeffs_.empty()) return ExtendedValue::infinity();
    return ExtendedValue(Rational(coeffs_.begin()->first));
  }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  std::map<long long, Rational> coeffs_;
};

// Text grammar: a signed sum of terms `c`, `c*t^e`, `t^e`, with `c` an
// integer or fraction `a/b` and `e` an integer.  Bare `t` means `t^1` and
// juxtaposition (`2t^5`) is accepted on input; printing always uses the
// starred form.  parse/print round-trips are exact.
LaurentPoly parse_laurent(const std::string& text);

inline std::string format_laurent(const LaurentPoly& f) { return f.str(); }

}  // namespace cmono
