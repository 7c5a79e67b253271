#pragma once

#include <array>
#include <vector>

#include "json.hpp"
#include "rrlearn/certificate.hpp"
#include "rrlearn/dataset.hpp"

namespace rrl {

// Interval probability mass learner (1-D, binary, label-flip adversary). The
// complexity of a labeling is the sum of n/(1+count) over its maximal
// same-label runs, n being the training-set size; the test point joins or
// opens a run without changing n. Training fills four exactly-j flip tables,
// indexed [i][j][k]: minimum total score over labelings of the length-(i+1)
// prefix (or suffix, for the right pair) with exactly j flips whose final run
// has the given label and starts at index k. Queries join a left row and a
// right row across flip splits and boundary formations.
class IntervalMassModel {
 public:
  static IntervalMassModel train(const LabeledDataset& data);

  Certificate certify(const BigRat& x_test, int b) const;

  const LabeledDataset& data() const { return data_; }

  // Table accessors for tests; right-side i and k index the reversed sequence.
  // label: 0/1 = alphabet index. Entries outside the feasible wedge are +inf.
  const Complexity& left_entry(int label, int i, int j, int k) const;
  const Complexity& right_entry(int label, int i, int j, int k) const;

  nlohmann::json to_json() const;
  static IntervalMassModel from_json(const nlohmann::json& j);

 private:
  explicit IntervalMassModel(LabeledDataset data);

  // tables_[side][label][i][j][k]; side 0 scans left to right, side 1 scans
  // the reversed sequence.
  using Table = std::vector<std::vector<std::vector<Complexity>>>;
  void fill_side(int side);

  LabeledDataset data_;
  BigRat n_;  // fixed score numerator
  std::array<std::array<Table, 2>, 2> tables_;
};

}  // namespace rrl
