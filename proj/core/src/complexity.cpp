#include "rrlearn/complexity.hpp"

#include <cmath>
#include <limits>

#include "rrlearn/errors.hpp"

namespace rrl {

namespace {

bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

nlohmann::json int_field(const BigInt& v) {
  if (fits_int64(v)) return v.convert_to<std::int64_t>();
  return v.str();  // arbitrary precision falls back to a decimal string
}

BigInt int_field_parse(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  fail(ErrorCode::BadModel, "expected integer or string for rational field");
}

}  // namespace

Complexity::Complexity(BigRat v) : inf_(false), value_(std::move(v)) {
  require(value_ >= 0, ErrorCode::Internal, "negative complexity");
}

Complexity::Complexity(long long num, long long den) : inf_(false), value_(0) {
  // checked before the BigRat is formed: boost would throw its own error first
  require(den != 0, ErrorCode::Internal, "zero denominator");
  value_ = BigRat(BigInt(num), BigInt(den));
  require(value_ >= 0, ErrorCode::Internal, "negative complexity");
}

const BigRat& Complexity::value() const {
  require(!inf_, ErrorCode::Internal, "value() on infinite complexity");
  return value_;
}

std::string Complexity::str() const { return inf_ ? "inf" : rational_to_string(value_); }

double Complexity::as_double() const {
  return inf_ ? HUGE_VAL : rational_to_double(value_);
}

nlohmann::json Complexity::to_json() const {
  if (inf_) return "inf";
  return nlohmann::json{{"num", int_field(boost::multiprecision::numerator(value_))},
                        {"den", int_field(boost::multiprecision::denominator(value_))}};
}

Complexity Complexity::from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    require(j.get<std::string>() == "inf", ErrorCode::BadModel,
            "bad complexity token '" + j.get<std::string>() + "'");
    return infinity();
  }
  require(j.is_object() && j.contains("num") && j.contains("den"), ErrorCode::BadModel,
          "complexity must be \"inf\" or {num, den}");
  BigInt num = int_field_parse(j.at("num"));
  BigInt den = int_field_parse(j.at("den"));
  require(den != 0, ErrorCode::BadModel, "zero denominator");
  return Complexity(BigRat(num, den));
}

bool operator==(const Complexity& a, const Complexity& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.value_ == b.value_;
}

bool operator<(const Complexity& a, const Complexity& b) {
  if (a.inf_) return false;
  if (b.inf_) return true;
  return a.value_ < b.value_;
}

Complexity operator+(const Complexity& a, const Complexity& b) {
  if (a.inf_ || b.inf_) return Complexity::infinity();
  return Complexity(a.value_ + b.value_);
}

Complexity operator-(const Complexity& a, const Complexity& b) {
  require(!b.inf_, ErrorCode::Internal, "subtracting infinity");
  if (a.inf_) return Complexity::infinity();
  return Complexity(a.value_ - b.value_);
}

Complexity min(const Complexity& a, const Complexity& b) { return a < b ? a : b; }

}  // namespace rrl
