#include "rrlearn/ecm.hpp"

#include "rrlearn/errors.hpp"

namespace rrl {

Complexity EcmOracle::min_complexity_pinned(const LabeledDataset& data, int budget,
                                            const std::vector<BigRat>& x, int label) const {
  std::vector<LabeledPoint> copies(static_cast<std::size_t>(budget) + 1,
                                   LabeledPoint{x, label});
  return min_complexity(data.with_appended(copies), budget);
}

Certificate certify_via_ecm(const EcmOracle& oracle, const LabeledDataset& data,
                            const std::vector<BigRat>& x, int budget) {
  require(budget >= 0, ErrorCode::Internal, "negative budget");
  std::vector<Complexity> per_label;
  per_label.reserve(data.alphabet().size());
  for (int y = 0; y < static_cast<int>(data.alphabet().size()); ++y)
    per_label.push_back(oracle.min_complexity_pinned(data, budget, x, y));
  return make_certificate(data.alphabet(), per_label);
}

}  // namespace rrl
