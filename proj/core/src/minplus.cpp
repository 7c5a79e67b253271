#include "rrlearn/minplus.hpp"

#include <algorithm>

#include "rrlearn/errors.hpp"

namespace rrl {

bool nonincreasing(const CostSequence& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] > s[i - 1]) return false;
  return true;
}

CostSequence minplus_naive(const CostSequence& a, const CostSequence& b) {
  require(!a.empty(), ErrorCode::LengthMismatch, "minplus: empty sequence");
  require(a.size() == b.size(), ErrorCode::LengthMismatch, "minplus: length mismatch");
  std::size_t n = a.size();
  CostSequence c(n, kInfCost);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      c[k] = std::min(c[k], sat_add(a[i], b[k - i]));
  return c;
}

CostSequence minplus_monotone_decreasing(const CostSequence& a, const CostSequence& b,
                                         const MinPlusConvolver& increasing_convolver) {
  require(!a.empty(), ErrorCode::LengthMismatch, "minplus: empty sequence");
  require(a.size() == b.size(), ErrorCode::LengthMismatch, "minplus: length mismatch");
  require(nonincreasing(a) && nonincreasing(b), ErrorCode::NotMonotone,
          "minplus_monotone_decreasing: inputs must be non-increasing");
  std::size_t n = a.size();

  CostSequence ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
  ra.resize(2 * n - 1, kInfCost);  // non-decreasing after the reverse; +inf tail keeps it so
  rb.resize(2 * n - 1, kInfCost);

  const MinPlusConvolver& conv = increasing_convolver ? increasing_convolver
                                                      : MinPlusConvolver(minplus_naive);
  CostSequence padded = conv(ra, rb);
  require(padded.size() == 2 * n - 1, ErrorCode::Internal, "convolver returned wrong length");

  // With i+j = k and both reversals undone, output index k of the original
  // problem sits at padded index 2n-2-k: the answer is the last n entries,
  // reversed.
  CostSequence out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = padded[2 * n - 2 - k];
  return out;
}

}  // namespace rrl
