#include "rrlearn/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>

#include "rrlearn/errors.hpp"

namespace rrl {

namespace {

// Parses "123", "1.5", "2e-3" style decimal literals into an exact rational.
BigRat parse_decimal_literal(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = (s[i] == '-');
    ++i;
  }
  BigInt mantissa = 0;
  long frac_digits = 0;
  bool any_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    mantissa = mantissa * 10 + (s[i] - '0');
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      mantissa = mantissa * 10 + (s[i] - '0');
      ++frac_digits;
      any_digit = true;
    }
  }
  if (!any_digit) fail(ErrorCode::Parse, "not a number: '" + s + "'");
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      exp_neg = (s[i] == '-');
      ++i;
    }
    if (i >= s.size()) fail(ErrorCode::Parse, "bad exponent in '" + s + "'");
    long e = 0;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      e = e * 10 + (s[i] - '0');
      if (e > 100000) fail(ErrorCode::Parse, "exponent out of range in '" + s + "'");
    }
    exponent = exp_neg ? -e : e;
  }
  if (i != s.size()) fail(ErrorCode::Parse, "trailing characters in number '" + s + "'");

  long shift = exponent - frac_digits;
  BigInt num = mantissa, den = 1;
  if (shift >= 0) {
    num *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift));
  } else {
    den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-shift));
  }
  if (negative) num = -num;
  return BigRat(num, den);
}

}  // namespace

BigRat parse_rational(const std::string& text) {
  std::size_t start = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (start == std::string::npos) fail(ErrorCode::Parse, "empty number");
  std::string s = text.substr(start, end - start + 1);

  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    BigRat num = parse_decimal_literal(s.substr(0, slash));
    BigRat den = parse_decimal_literal(s.substr(slash + 1));
    if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + s + "'");
    return num / den;
  }
  return parse_decimal_literal(s);
}

std::string rational_to_string(const BigRat& q) {
  if (boost::multiprecision::denominator(q) == 1)
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

std::optional<std::string> rational_to_decimal(const BigRat& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  long twos = 0, fives = 0;
  BigInt d = den;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return std::nullopt;
  long digits = std::max(twos, fives);
  BigInt scaled = num * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits)) / den;
  bool neg = scaled < 0;
  std::string body = BigInt(boost::multiprecision::abs(scaled)).str();
  if (digits == 0) return (neg ? "-" : "") + body;
  if (static_cast<long>(body.size()) <= digits)
    body.insert(0, static_cast<std::size_t>(digits) - body.size() + 1, '0');
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  // trim trailing zeros but keep at least one fractional digit
  while (body.back() == '0' && body[body.size() - 2] != '.') body.pop_back();
  return (neg ? "-" : "") + body;
}

BigRat rational_from_double(double v) {
  if (!std::isfinite(v)) fail(ErrorCode::Parse, "non-finite double");
  if (v == 0.0) return BigRat(0);
  int exp = 0;
  double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
  std::int64_t m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  BigRat r(m);
  if (exp >= 0) {
    r *= BigRat(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(exp)));
  } else {
    r /= BigRat(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(-exp)));
  }
  return r;
}

double rational_to_double(const BigRat& q) { return q.convert_to<double>(); }

namespace {

nlohmann::json bigint_field(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt bigint_field_parse(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      fail(ErrorCode::BadModel, "malformed integer string '" + j.get<std::string>() + "'");
    }
  }
  fail(ErrorCode::BadModel, "expected integer or string for rational field");
}

}  // namespace

nlohmann::json rational_to_json(const BigRat& q) {
  return nlohmann::json{{"num", bigint_field(boost::multiprecision::numerator(q))},
                        {"den", bigint_field(boost::multiprecision::denominator(q))}};
}

BigRat rational_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("num") && j.contains("den"), ErrorCode::BadModel,
          "expected a {num, den} rational object");
  BigInt num = bigint_field_parse(j.at("num"));
  BigInt den = bigint_field_parse(j.at("den"));
  require(den != 0, ErrorCode::BadModel, "zero denominator");
  return BigRat(num, den);
}

bool exact_sqrt(const BigRat& q, BigRat* out) {
  if (q < 0) return false;
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt rem;
  BigInt sn = boost::multiprecision::sqrt(num, rem);
  if (rem != 0) return false;
  BigInt sd = boost::multiprecision::sqrt(den, rem);
  if (rem != 0) return false;
  if (out) *out = BigRat(sn, sd);
  return true;
}

}  // namespace rrl
