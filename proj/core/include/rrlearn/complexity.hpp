#pragma once

#include <string>

#include "json.hpp"
#include "rrlearn/rational.hpp"

namespace rrl {

// Extended nonnegative rational: an exact fraction or +infinity. All
// comparisons are exact; +inf compares greater than every finite value and
// equal to itself.
class Complexity {
 public:
  Complexity() : inf_(false), value_(0) {}
  explicit Complexity(BigRat v);
  Complexity(long long num, long long den);

  static Complexity infinity() {
    Complexity c;
    c.inf_ = true;
    return c;
  }

  bool is_infinite() const { return inf_; }
  const BigRat& value() const;  // finite values only

  std::string str() const;  // "p", "p/q" or "inf"
  double as_double() const; // +inf maps to HUGE_VAL

  nlohmann::json to_json() const;  // {"num":..,"den":..} or "inf"
  static Complexity from_json(const nlohmann::json& j);

  friend bool operator==(const Complexity& a, const Complexity& b);
  friend bool operator!=(const Complexity& a, const Complexity& b) { return !(a == b); }
  friend bool operator<(const Complexity& a, const Complexity& b);
  friend bool operator<=(const Complexity& a, const Complexity& b) { return a < b || a == b; }
  friend bool operator>(const Complexity& a, const Complexity& b) { return b < a; }
  friend bool operator>=(const Complexity& a, const Complexity& b) { return b <= a; }

  // +inf absorbs; used by the interval-mass score sums.
  friend Complexity operator+(const Complexity& a, const Complexity& b);
  friend Complexity operator-(const Complexity& a, const Complexity& b);

 private:
  bool inf_;
  BigRat value_;
};

Complexity min(const Complexity& a, const Complexity& b);

}  // namespace rrl
