#pragma once

#include <vector>

#include "json.hpp"
#include "rrlearn/certificate.hpp"
#include "rrlearn/dataset.hpp"
#include "rrlearn/metric.hpp"

namespace rrl {

// Margin-at-the-test-point learner, any number of classes. For a tentative
// label y the certifying radius is the distance to the (b+1)-st closest point
// of a different label: a ball that small around the test point contains at
// most b disagreeing points, all of which the budget may disregard. Complexity
// is the reciprocal radius.
class MarginModel {
 public:
  static MarginModel train(const LabeledDataset& data, Metric metric);

  Certificate certify(const std::vector<BigRat>& x_test, int b) const;

  const LabeledDataset& data() const { return data_; }
  Metric metric() const { return metric_; }
  // Indices of points whose label differs from y.
  const std::vector<int>& complement(int y) const {
    return complements_.at(static_cast<std::size_t>(y));
  }

  nlohmann::json to_json() const;
  static MarginModel from_json(const nlohmann::json& j);

 private:
  MarginModel(LabeledDataset data, Metric metric);

  LabeledDataset data_;
  Metric metric_;
  std::vector<std::vector<int>> complements_;
};

}  // namespace rrl
