#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "json.hpp"

namespace rrl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Accepts decimal literals ("2", "-0.5", "1.25e-3") and fraction forms ("7/2").
// Throws Error(Parse) on anything else.
BigRat parse_rational(const std::string& text);

// Canonical fraction text: "p" when the denominator is 1, else "p/q" in lowest terms.
std::string rational_to_string(const BigRat& q);

// Decimal expansion when it terminates (denominator 2^a 5^b), otherwise empty.
std::optional<std::string> rational_to_decimal(const BigRat& q);

// Exact value of a finite double (every finite double is a binary fraction).
BigRat rational_from_double(double v);

double rational_to_double(const BigRat& q);

// True iff q is the square of a rational; on success *out is the nonnegative root.
bool exact_sqrt(const BigRat& q, BigRat* out);

// {"num": .., "den": ..} with int64 fields, falling back to decimal strings
// when a component does not fit.
nlohmann::json rational_to_json(const BigRat& q);
BigRat rational_from_json(const nlohmann::json& j);

}  // namespace rrl
