#include "cmono/rational.hpp"

#include <cctype>

namespace cmono {

std::string format_bigint(const BigInt& n) { return n.str(); }

std::string format_rational(const Rational& q) {
  if (is_integer(q)) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) throw std::invalid_argument("bad rational literal: '" + text + "'");
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(BigInt(num), d);
}

ExtendedValue parse_extended(const std::string& text) {
  if (text == "inf") return ExtendedValue::infinity();
  return ExtendedValue(parse_rational(text));
}

}  // namespace cmono
