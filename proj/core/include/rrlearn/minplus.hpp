#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace rrl {

// Extended nonnegative integer costs; kInfCost is the +inf sentinel and
// sat_add keeps it absorbing.
using Cost = std::int64_t;
inline constexpr Cost kInfCost = std::numeric_limits<Cost>::max();

inline Cost sat_add(Cost a, Cost b) {
  if (a == kInfCost || b == kInfCost) return kInfCost;
  return a + b;
}

using CostSequence = std::vector<Cost>;

bool nonincreasing(const CostSequence& s);

// c[k] = min_{i <= k} a[i] + b[k-i]; quadratic baseline. Inputs must share one
// length n >= 1; the result has length n.
CostSequence minplus_naive(const CostSequence& a, const CostSequence& b);

// Any (min,+) convolver usable on the reduction's non-decreasing inputs.
using MinPlusConvolver = std::function<CostSequence(const CostSequence&, const CostSequence&)>;

// Convolves two non-increasing sequences by reduction to the non-decreasing
// case: reverse both, pad each with n-1 +inf entries, convolve (with
// `increasing_convolver`, default the naive baseline), keep the last n outputs
// and reverse them. Result equals minplus_naive(a, b) exactly; a subquadratic
// convolver for non-decreasing sequences can be swapped in unchanged.
CostSequence minplus_monotone_decreasing(const CostSequence& a, const CostSequence& b,
                                         const MinPlusConvolver& increasing_convolver = {});

}  // namespace rrl
