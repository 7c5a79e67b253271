#pragma once

#include <string>
#include <vector>

#include "rrlearn/complexity.hpp"
#include "rrlearn/rational.hpp"

namespace rrl {

enum class Metric { L2, L1, Linf };

Metric metric_from_string(const std::string& name);  // "l2" | "l1" | "linf"
std::string metric_name(Metric m);

// Comparable distance measure between two points: the squared Euclidean
// distance for L2 (keeps everything rational), the plain distance for L1/Linf.
// Comparisons are only valid within one metric.
BigRat distance_measure(const std::vector<BigRat>& a, const std::vector<BigRat>& b, Metric m);

// True when the measure lives in the squared domain (L2).
bool measure_is_squared(Metric m);

// scale / root(measure) as an exact complexity. measure == 0 yields +inf.
// For L2 the square root is taken exactly when the measure is a perfect
// rational square (always true in 1-D); otherwise the double-precision value
// is promoted back to an exact ratio, so equal measures map to equal
// complexities either way.
Complexity complexity_from_measure(const BigRat& scale, const BigRat& measure, Metric m);

}  // namespace rrl
