#include "chorex/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "chorex/errors.hpp"

namespace chorex {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_big(std::string_view s) {
  if (!all_digits(s)) throw SchemaError("bad integer literal '" + std::string(s) + "'");
  return BigInt(std::string(s));
}

BigInt pow10(size_t e) {
  BigInt r = 1;
  for (size_t i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw SchemaError("empty rational literal");

  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw SchemaError("bad rational literal '" + std::string(text) + "'");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_big(s.substr(0, slash));
    BigInt den = parse_big(s.substr(slash + 1));
    if (den == 0) throw SchemaError("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else {
    // Decimal form with optional exponent, converted exactly.
    std::string_view mant = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mant = s.substr(0, e);
      std::string_view es = s.substr(e + 1);
      bool eneg = false;
      if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
        eneg = es.front() == '-';
        es.remove_prefix(1);
      }
      if (!all_digits(es) || es.size() > 6)
        throw SchemaError("bad exponent in '" + std::string(text) + "'");
      exp10 = std::stol(std::string(es));
      if (eneg) exp10 = -exp10;
    }
    std::string_view ip = mant, fp;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
      ip = mant.substr(0, dot);
      fp = mant.substr(dot + 1);
    }
    if (ip.empty() && fp.empty())
      throw SchemaError("bad rational literal '" + std::string(text) + "'");
    BigInt num = ip.empty() ? BigInt(0) : parse_big(ip);
    BigInt den = 1;
    if (!fp.empty()) {
      num = num * pow10(fp.size()) + parse_big(fp);
      den = pow10(fp.size());
    }
    if (exp10 >= 0)
      num *= pow10(static_cast<size_t>(exp10));
    else
      den *= pow10(static_cast<size_t>(-exp10));
    value = Rational(num, den);
  }
  return neg ? Rational(-value) : value;
}

std::string rational_str(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

Rational floor_to_multiple(const Rational& v, const Rational& unit) {
  // floor(v/unit) via integer floor division.
  Rational ratio = v / unit;
  BigInt num = numerator(ratio), den = denominator(ratio);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q) * unit;
}

std::optional<Rational> exact_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  BigInt num = numerator(v), den = denominator(v);
  BigInt rn = boost::multiprecision::sqrt(num);
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

Rational pow2(int e) {
  BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e >= 0 ? Rational(p) : Rational(1, p);
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw OutOfRange("non-finite value");
  if (v == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [1/2, 1)
  // 53 doublings turn the mantissa into an exact integer.
  BigInt m = static_cast<int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(m);
  return r * pow2(exp);
}

double to_double(const Rational& q) {
  return q.convert_to<double>();
}

}  // namespace chorex
