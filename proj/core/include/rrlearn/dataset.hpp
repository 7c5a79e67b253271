#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rrlearn/rational.hpp"

namespace rrl {

// Labels are indices into the owning dataset's alphabet.
struct LabeledPoint {
  std::vector<BigRat> x;
  int label = 0;
};

// Possibly-poisoned training set. 1-D datasets keep their points sorted by
// coordinate; ties preserve construction order (stable), which is the one
// tie-rule every 1-D learner and oracle in this library shares.
class LabeledDataset {
 public:
  LabeledDataset(int dimension, std::vector<std::string> alphabet,
                 std::vector<LabeledPoint> points);

  // Header must be "x1,...,xd,label". The alphabet is inferred in order of
  // first appearance unless `declared_alphabet` is given. A one-label file
  // over "+"/"-" is auto-completed to the {+,-} pair.
  static LabeledDataset read_csv(std::istream& in,
                                 const std::vector<std::string>& declared_alphabet = {});
  void write_csv(std::ostream& out) const;

  int dimension() const { return dim_; }
  int n() const { return static_cast<int>(points_.size()); }
  bool binary() const { return alphabet_.size() == 2; }

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& token(int label) const { return alphabet_.at(static_cast<std::size_t>(label)); }
  int label_index(const std::string& token) const;  // -1 when absent

  const std::vector<LabeledPoint>& points() const { return points_; }
  const LabeledPoint& point(int i) const { return points_.at(static_cast<std::size_t>(i)); }
  int label(int i) const { return point(i).label; }
  const BigRat& x1(int i) const;  // 1-D shortcut

  std::vector<BigRat> coords1d() const;

  // New dataset with extra points appended (re-sorted when 1-D; appended points
  // land after coincident existing ones, matching the stable tie-rule).
  LabeledDataset with_appended(const std::vector<LabeledPoint>& extra) const;

 private:
  int dim_;
  std::vector<std::string> alphabet_;
  std::vector<LabeledPoint> points_;
};

}  // namespace rrl
