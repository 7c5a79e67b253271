#include "rrlearn/regions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "rrlearn/alternations.hpp"
#include "rrlearn/errors.hpp"

namespace rrl {

bool Interval::contains(const BigRat& x) const {
  if (lo && x < *lo) return false;
  if (hi && x >= *hi) return false;
  return true;
}

Region Region::normalize(std::vector<Interval> raw) {
  std::vector<Interval> kept;
  for (Interval& iv : raw) {
    if (iv.lo && iv.hi) {
      require(*iv.lo <= *iv.hi, ErrorCode::Internal, "interval bounds out of order");
      if (*iv.lo == *iv.hi) continue;  // empty
    }
    kept.push_back(std::move(iv));
  }
  std::sort(kept.begin(), kept.end(), [](const Interval& a, const Interval& b) {
    if (!a.lo || !b.lo) return !a.lo && b.lo;  // unbounded-left first
    return *a.lo < *b.lo;
  });

  Region out;
  for (Interval& iv : kept) {
    if (!out.intervals_.empty()) {
      Interval& prev = out.intervals_.back();
      require(prev.hi.has_value() && iv.lo.has_value() && *prev.hi <= *iv.lo,
              ErrorCode::Internal, "overlapping intervals in region");
      if (*prev.hi == *iv.lo) {  // touching: merge
        prev.hi = iv.hi;
        continue;
      }
    }
    out.intervals_.push_back(std::move(iv));
  }
  return out;
}

bool Region::contains(const BigRat& x) const {
  for (const Interval& iv : intervals_)
    if (iv.contains(x)) return true;
  return false;
}

BigRat Region::mass_uniform(const BigRat& a, const BigRat& b) const {
  require(a < b, ErrorCode::Parse, "uniform support must have positive length");
  BigRat covered = 0;
  for (const Interval& iv : intervals_) {
    BigRat lo = iv.lo ? std::max(*iv.lo, a) : a;
    BigRat hi = iv.hi ? std::min(*iv.hi, b) : b;
    if (hi > lo) covered += hi - lo;
  }
  return covered / (b - a);
}

nlohmann::json Region::to_json() const {
  nlohmann::json intervals = nlohmann::json::array();
  for (const Interval& iv : intervals_) {
    nlohmann::json o;
    o["lo"] = iv.lo ? nlohmann::json(rational_to_string(*iv.lo)) : nlohmann::json(nullptr);
    o["hi"] = iv.hi ? nlohmann::json(rational_to_string(*iv.hi)) : nlohmann::json(nullptr);
    intervals.push_back(std::move(o));
  }
  return {{"intervals", intervals}};
}

Region empirical_region(const GapLearner& learner, const LabeledDataset& s_prime, int b,
                        const Complexity& c) {
  require(learner.gap_constant, ErrorCode::NotGapConstant,
          "empirical_region needs a learner whose certificates are constant between "
          "training coordinates");
  require(s_prime.dimension() == 1, ErrorCode::DimensionMismatch,
          "empirical_region is 1-D only");

  std::vector<BigRat> coords = s_prime.coords1d();
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  const int g = static_cast<int>(coords.size());

  auto pins = [&](const Certificate& cert) {
    return !(c < cert.c_low) && c < cert.c_high;  // c_low <= c < c_high
  };

  if (coords.empty()) {
    // no training coordinates: a single unbounded gap
    if (!pins(learner.certify(BigRat(0), b))) return {};
    return Region::normalize({Interval{}});
  }

  std::vector<Interval> member_gaps;
  for (int i = 0; i <= g; ++i) {
    BigRat probe;
    if (i == 0)
      probe = coords.front() - 1;
    else if (i == g)
      probe = coords.back() + 1;
    else
      probe = (coords[static_cast<std::size_t>(i - 1)] + coords[static_cast<std::size_t>(i)]) / 2;
    if (!pins(learner.certify(probe, b))) continue;
    Interval iv;
    if (i > 0) iv.lo = coords[static_cast<std::size_t>(i - 1)];
    if (i < g) iv.hi = coords[static_cast<std::size_t>(i)];
    member_gaps.push_back(std::move(iv));
  }
  return Region::normalize(std::move(member_gaps));
}

Distribution Distribution::uniform(BigRat a, BigRat b) {
  require(a < b, ErrorCode::Parse, "uniform support must have positive length");
  Distribution d;
  d.kind = Kind::Uniform;
  d.a = std::move(a);
  d.b = std::move(b);
  return d;
}

Distribution Distribution::from_samples(std::vector<BigRat> samples) {
  require(!samples.empty(), ErrorCode::Parse, "sample list must be nonempty");
  Distribution d;
  d.kind = Kind::Samples;
  d.samples = std::move(samples);
  return d;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Exact dyadic fraction in [0, 1) from one engine draw.
BigRat unit_draw(std::mt19937_64& eng) {
  return BigRat(BigInt(eng()), BigInt(1) << 64);
}

// Smallest k with P[Bin(n, p) <= k] > alpha.
int binomial_critical_value(int n, double p, double alpha) {
  const long double q = 1.0L - static_cast<long double>(p);
  long double pmf = std::pow(q, static_cast<long double>(n));
  long double cdf = pmf;
  int k = 0;
  while (k < n && cdf <= alpha) {
    pmf *= static_cast<long double>(n - k) / static_cast<long double>(k + 1) *
           (static_cast<long double>(p) / q);
    cdf += pmf;
    ++k;
  }
  return k;
}

}  // namespace

double montecarlo_region_mass(const GapLearner& learner, int b, const Complexity& c,
                              const Distribution& dist, int trials, std::uint64_t seed) {
  require(trials >= 1, ErrorCode::Parse, "trials must be positive");
  std::mt19937_64 eng(splitmix64(seed));
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    BigRat x;
    if (dist.kind == Distribution::Kind::Uniform) {
      x = dist.a + (dist.b - dist.a) * unit_draw(eng);
    } else {
      x = dist.samples[static_cast<std::size_t>(eng() % dist.samples.size())];
    }
    Certificate cert = learner.certify(x, b);
    if (!(c < cert.c_low) && c < cert.c_high) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

PiecewiseTarget::PiecewiseTarget(std::vector<BigRat> thresholds, int leftmost_label)
    : thresholds_(std::move(thresholds)), leftmost_(leftmost_label) {
  require(leftmost_ == 0 || leftmost_ == 1, ErrorCode::Parse, "leftmost label must be 0 or 1");
  for (std::size_t i = 1; i < thresholds_.size(); ++i)
    require(thresholds_[i - 1] < thresholds_[i], ErrorCode::Parse,
            "thresholds must be strictly increasing");
}

PiecewiseTarget PiecewiseTarget::equispaced(int c) {
  require(c >= 1, ErrorCode::Parse, "alternation count must be positive");
  std::vector<BigRat> ts;
  for (int i = 0; i < c; ++i) ts.emplace_back(BigInt(i + 1), BigInt(c + 1));
  return PiecewiseTarget(std::move(ts), 0);
}

int PiecewiseTarget::label(const BigRat& x) const {
  const auto flips = std::upper_bound(thresholds_.begin(), thresholds_.end(), x) -
                     thresholds_.begin();
  return (leftmost_ + static_cast<int>(flips)) % 2;
}

NascReport nasc_experiment(const NascOptions& options) {
  require(options.c >= 1, ErrorCode::Parse, "c must be positive");
  require(options.b >= 0, ErrorCode::Parse, "b must be nonnegative");
  require(options.epsilon > 0.0 && options.epsilon < 1.0, ErrorCode::Parse,
          "epsilon must lie in (0, 1)");
  require(options.delta > 0.0 && options.delta < 1.0, ErrorCode::Parse,
          "delta must lie in (0, 1)");
  require(options.trials >= 1, ErrorCode::Parse, "trials must be positive");
  require(options.threads >= 1, ErrorCode::Parse, "threads must be positive");

  const PiecewiseTarget target = PiecewiseTarget::equispaced(options.c);
  const BigRat eps = rational_from_double(options.epsilon);

  // Each alternation needs at least eps/(2c) mass on both sides.
  {
    const BigRat min_side = eps / BigRat(2 * options.c);
    std::vector<BigRat> cuts;
    cuts.emplace_back(0);
    cuts.insert(cuts.end(), target.thresholds().begin(), target.thresholds().end());
    cuts.emplace_back(1);
    for (std::size_t i = 1; i < cuts.size(); ++i)
      require(cuts[i] - cuts[i - 1] >= min_side, ErrorCode::BadTarget,
              "target thresholds violate the eps/(2c) spacing precondition");
  }

  NascReport report;
  report.options = options;
  if (options.m_override) {
    require(*options.m_override >= 0, ErrorCode::Parse, "m override must be nonnegative");
    report.m = *options.m_override;
  } else {
    const double raw = 2.0 * options.c *
                       (2.0 * (options.b + 1) + 8.0 * std::log(2.0 * options.c / options.delta)) /
                       options.epsilon;
    report.m = static_cast<int>(std::ceil(raw));
  }

  const std::vector<std::string> alphabet = {"+", "-"};
  const Complexity target_complexity{BigRat(options.c)};
  const BigRat pass_mass = BigRat(1) - eps;

  report.trials.resize(static_cast<std::size_t>(options.trials));
  auto run_trial = [&](int index) {
    NascTrial trial;
    trial.index = index;
    if (report.m == 0) {
      trial.mass = 0;
    } else {
      std::mt19937_64 eng(splitmix64(
          options.seed + static_cast<std::uint64_t>(index + 1) * 0x9E3779B97F4A7C15ULL));
      std::vector<LabeledPoint> pts(static_cast<std::size_t>(report.m));
      for (LabeledPoint& p : pts) {
        BigRat x = unit_draw(eng);
        p.label = target.label(x);
        p.x.push_back(std::move(x));
      }
      LabeledDataset sample(1, alphabet, std::move(pts));
      AlternationModel model = AlternationModel::train(sample, options.b);
      GapLearner learner{[&model](const BigRat& x, int bb) { return model.certify(x, bb); },
                         true};
      Region region = empirical_region(learner, sample, options.b, target_complexity);
      trial.mass = region.mass_uniform(BigRat(0), BigRat(1));
    }
    trial.success = trial.mass >= pass_mass;
    report.trials[static_cast<std::size_t>(index)] = std::move(trial);
  };

  if (options.threads == 1) {
    for (int i = 0; i < options.trials; ++i) run_trial(i);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < options.threads; ++w)
      workers.emplace_back([&, w] {
        for (int i = w; i < options.trials; i += options.threads) run_trial(i);
      });
    for (std::thread& th : workers) th.join();
  }

  for (const NascTrial& t : report.trials)
    if (t.success) ++report.successes;
  report.success_fraction =
      static_cast<double>(report.successes) / static_cast<double>(options.trials);
  report.binomial_critical =
      binomial_critical_value(options.trials, 1.0 - options.delta, 0.05);
  report.binomial_pass = report.successes >= report.binomial_critical;
  return report;
}

nlohmann::json NascReport::summary_json() const {
  return {{"type", "summary"},
          {"m", m},
          {"c", options.c},
          {"b", options.b},
          {"epsilon", options.epsilon},
          {"delta", options.delta},
          {"trials", options.trials},
          {"successes", successes},
          {"success_fraction", success_fraction},
          {"binomial_critical", binomial_critical},
          {"binomial_pass", binomial_pass}};
}

nlohmann::json NascReport::trial_json(const NascTrial& t) const {
  return {{"type", "trial"},
          {"index", t.index},
          {"mass", rational_to_string(t.mass)},
          {"mass_double", rational_to_double(t.mass)},
          {"success", t.success}};
}

}  // namespace rrl
