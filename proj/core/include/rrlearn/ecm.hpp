#pragma once

#include <vector>

#include "rrlearn/certificate.hpp"
#include "rrlearn/dataset.hpp"

namespace rrl {

// Empirical complexity minimization surface. An oracle answers: what is the
// smallest complexity of any classifier that disagrees with at most `budget`
// labeled points of the dataset? (+inf when no classifier qualifies.)
class EcmOracle {
 public:
  virtual ~EcmOracle() = default;

  virtual Complexity min_complexity(const LabeledDataset& data, int budget) const = 0;

  // Constrained variant: the classifier must output alphabet[label] at x. The
  // default pins the label by appending budget+1 copies of (x, label); any
  // classifier within budget must then honor the label at x without spending
  // budget on it. Measures with cheaper direct handling may override.
  virtual Complexity min_complexity_pinned(const LabeledDataset& data, int budget,
                                           const std::vector<BigRat>& x, int label) const;
};

// Generic certifying wrapper: runs the pinned minimization once per label and
// assembles (argmin label, smallest, second smallest). When every label is
// infeasible the result abstains with c_low = c_high = +inf.
Certificate certify_via_ecm(const EcmOracle& oracle, const LabeledDataset& data,
                            const std::vector<BigRat>& x, int budget);

}  // namespace rrl
