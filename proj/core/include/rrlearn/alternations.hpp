#pragma once

#include <array>
#include <vector>

#include "json.hpp"
#include "rrlearn/certificate.hpp"
#include "rrlearn/dataset.hpp"
#include "rrlearn/minplus.hpp"

namespace rrl {

// Sign-change complexity learner on the line. Training runs a bidirectional DP
// over the sorted points: table entry [g][j] is the fewest sign changes a
// classifier can show on the prefix (suffix) of coordinate groups 0..g
// (g..G-1) while its value at group g is the table's label and it disagrees
// with exactly j of those points. Disagreeing with a point is what spending a
// unit of the mistake budget means, so certification is a min over budget
// splits j + (b-j) across the two sides plus the junction cost around the test
// point. Duplicate coordinates share one classifier value, hence the grouping;
// with distinct coordinates there are exactly n rows.
class AlternationModel {
 public:
  // b_max caps the table columns (queries clamp their budget to it);
  // b_max < 0 or > n means the full n columns.
  static AlternationModel train(const LabeledDataset& data, int b_max = -1);

  Certificate certify(const BigRat& x_test, int b) const;

  // Element b equals certify(x_test, b); computed per label by (min,+)
  // convolution of the two sides' non-increasing cost-by-mistakes sequences.
  std::vector<Certificate> certify_all_budgets(const BigRat& x_test, int b_max) const;

  const LabeledDataset& data() const { return data_; }
  std::vector<BigRat> positions() const { return data_.coords1d(); }
  int cap() const { return cap_; }
  int group_count() const { return static_cast<int>(group_coord_.size()); }

  // side: 0 = left/prefix, 1 = right/suffix; state: alphabet index.
  const std::vector<std::vector<Cost>>& table(int side, int state) const {
    return dp_[static_cast<std::size_t>(side)][static_cast<std::size_t>(state)];
  }

  nlohmann::json to_json() const;
  static AlternationModel from_json(const nlohmann::json& j);

 private:
  explicit AlternationModel(LabeledDataset data, int b_max);
  void build_groups();
  void build_tables();
  void build_prefix_minima();

  // Per-label minimum cost of one side at mistake budget exactly <= j, +inf
  // when the side cannot be served within j; empty sides are handled by the
  // callers.
  struct SideView {
    bool empty;
    int row;
  };
  SideView left_view(int gi, bool coincident) const;
  SideView right_view(int gi, bool coincident) const;

  LabeledDataset data_;
  int cap_;
  std::vector<BigRat> group_coord_;
  std::vector<std::array<int, 2>> group_labels_;  // points per label in each group
  // [side][state][row][j]
  std::array<std::array<std::vector<std::vector<Cost>>, 2>, 2> dp_;
  std::array<std::array<std::vector<std::vector<Cost>>, 2>, 2> prefmin_;
};

}  // namespace rrl
