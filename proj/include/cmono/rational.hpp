#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace cmono {

// Exact arithmetic everywhere: valuations, depths and distances are
// arbitrary-precision rationals kept in lowest terms with positive
// denominator (the rational adaptor canonicalizes on construction).
// Expression templates are off so arithmetic composes with std::min/max.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

// "a" or "a/b"; the bare form is used whenever the denominator is 1.
std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& text);

std::string format_bigint(const BigInt& n);

// A rational extended by the single element +inf, used for v(0), matrix
// diagonals and singleton depths.  +inf dominates every rational and is
// absorbing under addition.
class ExtendedValue {
 public:
  ExtendedValue() : finite_(true), value_(0) {}
  ExtendedValue(Rational v) : finite_(true), value_(std::move(v)) {}
  ExtendedValue(int v) : finite_(true), value_(v) {}

  static ExtendedValue infinity() {
    ExtendedValue e;
    e.finite_ = false;
    return e;
  }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }

  const Rational& finite_value() const {
    if (!finite_) throw std::logic_error("ExtendedValue: +inf has no finite value");
    return value_;
  }

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtendedValue& a, const ExtendedValue& b) { return !(a == b); }
  friend bool operator<(const ExtendedValue& a, const ExtendedValue& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtendedValue& a, const ExtendedValue& b) { return b < a; }
  friend bool operator<=(const ExtendedValue& a, const ExtendedValue& b) { return !(b < a); }
  friend bool operator>=(const ExtendedValue& a, const ExtendedValue& b) { return !(a < b); }

  friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return ExtendedValue(a.value_ + b.value_);
  }

  std::string str() const { return finite_ ? format_rational(value_) : "inf"; }

 private:
  bool finite_;
  Rational value_;
};

// "inf" or a rational literal.
ExtendedValue parse_extended(const std::string& text);

}  // namespace cmono
