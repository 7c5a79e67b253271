#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "json.hpp"
#include "rrlearn/certificate.hpp"
#include "rrlearn/complexity.hpp"
#include "rrlearn/dataset.hpp"

namespace rrl {

// Half-open interval [lo, hi); a missing bound is unbounded on that side.
struct Interval {
  std::optional<BigRat> lo, hi;
  bool contains(const BigRat& x) const;
};

// Sorted disjoint union of half-open intervals.
class Region {
 public:
  Region() = default;
  // Sorts, checks disjointness, merges touching neighbors.
  static Region normalize(std::vector<Interval> raw);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  bool contains(const BigRat& x) const;

  // Probability mass under UNIFORM[a, b]; exact.
  BigRat mass_uniform(const BigRat& a, const BigRat& b) const;

  nlohmann::json to_json() const;

 private:
  std::vector<Interval> intervals_;
};

// Certify-capable 1-D learner. gap_constant marks learners whose certificate
// depends only on where the probe falls relative to the training coordinates
// (alternations, interval mass), which is what makes gap sampling exact.
struct GapLearner {
  std::function<Certificate(const BigRat& x, int b)> certify;
  bool gap_constant = false;
};

// Points whose certificate pins complexity c: c_low <= c < c_high. Exact for
// gap-constant learners; probes each of the n+1 gaps once (midpoints inside,
// one step beyond the extremes). Interval bounds sit on training coordinates,
// each boundary coordinate attributed to the interval on its right.
Region empirical_region(const GapLearner& learner, const LabeledDataset& s_prime, int b,
                        const Complexity& c);

// UNIFORM[a, b] or an explicit sample list.
struct Distribution {
  enum class Kind { Uniform, Samples };
  Kind kind = Kind::Uniform;
  BigRat a = 0, b = 1;
  std::vector<BigRat> samples;

  static Distribution uniform(BigRat a, BigRat b);
  static Distribution from_samples(std::vector<BigRat> samples);
};

// Fraction of `trials` random probes whose certificate pins c. Deterministic
// for a fixed seed regardless of platform (mt19937_64 plus exact dyadic
// mapping into [a, b)).
double montecarlo_region_mass(const GapLearner& learner, int b, const Complexity& c,
                              const Distribution& dist, int trials, std::uint64_t seed);

// Alternating-label step function on the line; label flips at each threshold.
class PiecewiseTarget {
 public:
  PiecewiseTarget(std::vector<BigRat> thresholds, int leftmost_label);
  // c thresholds at (i+1)/(c+1), i = 0..c-1: c alternations on [0, 1].
  static PiecewiseTarget equispaced(int c);

  int label(const BigRat& x) const;  // alphabet index; right side of a threshold flips
  int alternations() const { return static_cast<int>(thresholds_.size()); }
  const std::vector<BigRat>& thresholds() const { return thresholds_; }

 private:
  std::vector<BigRat> thresholds_;
  int leftmost_;
};

struct NascOptions {
  int c = 2;
  int b = 1;
  double epsilon = 0.1;
  double delta = 0.05;
  int trials = 200;
  std::uint64_t seed = 0;
  int threads = 1;
  std::optional<int> m_override;  // debug hook; 0 skips training entirely
};

struct NascTrial {
  int index = 0;
  BigRat mass;    // exact region mass under UNIFORM[0,1]
  bool success = false;  // mass >= 1 - epsilon
};

struct NascReport {
  int m = 0;  // per-trial sample size from the displayed bound
  NascOptions options;
  std::vector<NascTrial> trials;
  int successes = 0;
  double success_fraction = 0.0;
  int binomial_critical = 0;  // smallest k with P[Bin(trials, 1-delta) <= k] > 0.05
  bool binomial_pass = false;  // successes >= binomial_critical

  nlohmann::json summary_json() const;
  nlohmann::json trial_json(const NascTrial& t) const;
};

// Sample-complexity experiment: per trial, draw m labeled points from the
// equispaced c-alternation target under UNIFORM[0,1], train the alternations
// learner, and measure the exact mass of the region certifying complexity c
// at budget b. m = ceil(2c(2(b+1) + 8 ln(2c/delta)) / epsilon).
NascReport nasc_experiment(const NascOptions& options);

}  // namespace rrl
