#include "cmono/laurent.hpp"

#include <cctype>
#include <sstream>

#include "cmono/errors.hpp"

namespace cmono {

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      auto& slot = out.coeffs_[ea + eb];
      slot += ca * cb;
      if (slot == 0) out.coeffs_.erase(ea + eb);
    }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
  return out;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (e == 0) {
      os << format_rational(mag);
    } else {
      if (mag != 1) os << format_rational(mag) << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

class TermScanner {
 public:
  explicit TermScanner(const std::string& s) : s_(s) {}

  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }

  // Consumes '+', '-' or, for the very first term, an optional sign.
  int read_sign(bool first) {
    skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      return s_[pos_++] == '-' ? -1 : 1;
    }
    if (!first) fail(ErrorCode::Parse, "expected '+' or '-' in polynomial at offset " + std::to_string(pos_));
    return 1;
  }

  // One term: coefficient and/or t-power.
  LaurentPoly read_term() {
    skip_ws();
    Rational coeff = 1;
    bool saw_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      BigInt num = read_integer();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        BigInt den = read_integer();
        if (den == 0) fail(ErrorCode::Parse, "zero denominator in coefficient");
        coeff = Rational(num, den);
      } else {
        coeff = Rational(num);
      }
      saw_coeff = true;
    }
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != 't') fail(ErrorCode::Parse, "expected 't' after '*'");
    }
    if (pos_ < s_.size() && s_[pos_] == 't') {
      ++pos_;
      long long exponent = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        exponent = read_signed_small();
      }
      return LaurentPoly::term(coeff, exponent);
    }
    if (!saw_coeff) fail(ErrorCode::Parse, "empty term in polynomial");
    return LaurentPoly(coeff);
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  BigInt read_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(ErrorCode::Parse, "expected integer at offset " + std::to_string(pos_));
    return BigInt(s_.substr(start, pos_ - start));
  }

  long long read_signed_small() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    BigInt mag = read_integer();
    if (mag > 1000000) fail(ErrorCode::Parse, "exponent out of range");
    auto v = static_cast<long long>(mag);
    return neg ? -v : v;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
  TermScanner scan(text);
  if (scan.done()) fail(ErrorCode::Parse, "empty polynomial text");
  LaurentPoly out;
  bool first = true;
  while (!scan.done()) {
    int sign = scan.read_sign(first);
    LaurentPoly term = scan.read_term();
    if (sign < 0) term = -term;
    out += term;
    first = false;
  }
  return out;
}

}  // namespace cmono
