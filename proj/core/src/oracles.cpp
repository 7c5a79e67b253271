#include "rrlearn/oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "rrlearn/errors.hpp"

namespace rrl {

namespace {

void check_binary_1d(const LabeledDataset& data) {
  require(data.dimension() == 1, ErrorCode::DimensionMismatch, "oracle: 1-D data required");
  require(data.binary(), ErrorCode::AlphabetUnsupported, "oracle: binary alphabet required");
}

// Distinct coordinate groups of a sorted 1-D dataset plus one probe coordinate;
// returns per-point group ids and the probe's group id.
struct GroupedLine {
  int groups = 0;
  std::vector<int> point_group;
  int probe_group = 0;
};

GroupedLine group_with_probe(const LabeledDataset& data, const BigRat& x) {
  GroupedLine g;
  g.point_group.resize(static_cast<std::size_t>(data.n()));
  bool probe_placed = false;
  for (int i = 0; i < data.n(); ++i) {
    if (!probe_placed && x < data.x1(i)) {
      g.probe_group = g.groups++;
      probe_placed = true;
    }
    if (!probe_placed && x == data.x1(i)) {
      g.probe_group = g.groups;  // probe shares the coordinate's group
      probe_placed = true;
      g.point_group[static_cast<std::size_t>(i)] = g.groups++;
      while (i + 1 < data.n() && data.x1(i + 1) == data.x1(i)) {
        ++i;
        g.point_group[static_cast<std::size_t>(i)] = g.groups - 1;
      }
      continue;
    }
    g.point_group[static_cast<std::size_t>(i)] = g.groups++;
    while (i + 1 < data.n() && data.x1(i + 1) == data.x1(i)) {
      ++i;
      g.point_group[static_cast<std::size_t>(i)] = g.groups - 1;
    }
  }
  if (!probe_placed) g.probe_group = g.groups++;
  return g;
}

long long pattern_work(int groups, int n) {
  return (1LL << groups) * (groups + n + 1);
}

// Alternation counts are at most n; kNoClassifier marks "no classifier fits".
using AltCost = int;
constexpr AltCost kNoClassifier = std::numeric_limits<AltCost>::max();

int alternations_of_mask(unsigned long mask, int groups) {
  int alt = 0;
  for (int i = 0; i + 1 < groups; ++i)
    alt += (((mask >> i) ^ (mask >> (i + 1))) & 1UL) ? 1 : 0;
  return alt;
}

}  // namespace

//====================== alternations ======================//

Certificate brute_alternations(const LabeledDataset& data, const BigRat& x_test, int b,
                               const OracleBudget& cap) {
  check_binary_1d(data);
  require(b >= 0, ErrorCode::Internal, "negative budget");
  require(data.n() <= cap.max_n, ErrorCode::InstanceTooLarge, "oracle: n above cap");

  GroupedLine g = group_with_probe(data, x_test);
  require(pattern_work(g.groups, data.n()) <= cap.max_work, ErrorCode::InstanceTooLarge,
          "oracle: pattern enumeration above work cap");

  // A classifier is, as far as this measure and dataset can see, one value per
  // distinct coordinate; enumerate them all.
  AltCost best[2] = {kNoClassifier, kNoClassifier};
  int budget = std::min(b, data.n());
  for (unsigned long mask = 0; mask < (1UL << g.groups); ++mask) {
    int mistakes = 0;
    for (int i = 0; i < data.n(); ++i)
      mistakes += (((mask >> g.point_group[static_cast<std::size_t>(i)]) & 1UL) !=
                   static_cast<unsigned long>(data.label(i)))
                      ? 1
                      : 0;
    if (mistakes > budget) continue;
    int alt = alternations_of_mask(mask, g.groups);
    int t = static_cast<int>((mask >> g.probe_group) & 1UL);
    best[t] = std::min(best[t], static_cast<AltCost>(alt));
  }

  std::vector<Complexity> per_label;
  for (int t = 0; t < 2; ++t)
    per_label.push_back(best[t] == kNoClassifier ? Complexity::infinity()
                                            : Complexity(BigRat(best[t])));
  return make_certificate(data.alphabet(), per_label);
}

Complexity BruteAlternationsEcm::min_complexity(const LabeledDataset& data, int budget) const {
  check_binary_1d(data);
  require(data.n() <= cap_.max_n + budget + 1, ErrorCode::InstanceTooLarge, "oracle: n above cap");
  if (data.n() == 0) return Complexity(BigRat(0));

  // Group distinct coordinates (no probe here).
  std::vector<int> group(static_cast<std::size_t>(data.n()));
  int groups = 0;
  for (int i = 0; i < data.n(); ++i) {
    group[static_cast<std::size_t>(i)] = groups++;
    while (i + 1 < data.n() && data.x1(i + 1) == data.x1(i)) {
      ++i;
      group[static_cast<std::size_t>(i)] = groups - 1;
    }
  }
  require(pattern_work(groups, data.n()) <= cap_.max_work, ErrorCode::InstanceTooLarge,
          "oracle: pattern enumeration above work cap");

  AltCost best = kNoClassifier;
  int b = std::min(budget, data.n());
  for (unsigned long mask = 0; mask < (1UL << groups); ++mask) {
    int mistakes = 0;
    for (int i = 0; i < data.n(); ++i)
      mistakes += (((mask >> group[static_cast<std::size_t>(i)]) & 1UL) !=
                   static_cast<unsigned long>(data.label(i)))
                      ? 1
                      : 0;
    if (mistakes > b) continue;
    best = std::min(best, static_cast<AltCost>(alternations_of_mask(mask, groups)));
  }
  return best == kNoClassifier ? Complexity::infinity() : Complexity(BigRat(best));
}

//====================== local margin ======================//

Certificate brute_local_margin(const LabeledDataset& data, const std::vector<BigRat>& x_test,
                               int b, Metric metric) {
  require(b >= 0, ErrorCode::Internal, "negative budget");
  require(static_cast<int>(x_test.size()) == data.dimension(), ErrorCode::DimensionMismatch,
          "test point dimension mismatch");
  std::vector<Complexity> per_label;
  for (int y = 0; y < static_cast<int>(data.alphabet().size()); ++y) {
    std::vector<BigRat> measures;
    for (int i = 0; i < data.n(); ++i)
      if (data.label(i) != y) measures.push_back(distance_measure(x_test, data.point(i).x, metric));
    std::sort(measures.begin(), measures.end());
    if (static_cast<std::size_t>(b) >= measures.size()) {
      per_label.push_back(Complexity(BigRat(0)));  // complement exhausted: unbounded margin
    } else {
      per_label.push_back(complexity_from_measure(BigRat(1), measures[static_cast<std::size_t>(b)], metric));
    }
  }
  return make_certificate(data.alphabet(), per_label);
}

//====================== global margin ======================//

Certificate brute_global_margin(const LabeledDataset& data, const std::vector<BigRat>& x_test,
                                int b, Metric metric, const OracleBudget& cap) {
  require(data.binary(), ErrorCode::AlphabetUnsupported, "oracle: binary alphabet required");
  require(b >= 0, ErrorCode::Internal, "negative budget");
  require(static_cast<int>(x_test.size()) == data.dimension(), ErrorCode::DimensionMismatch,
          "test point dimension mismatch");
  int n = data.n();
  require(n <= cap.max_n && n <= 24, ErrorCode::InstanceTooLarge, "oracle: n above cap");
  long long work = (1LL << n) * (n + 1) * (n + 1);
  require(work <= cap.max_work, ErrorCode::InstanceTooLarge, "oracle: removal enumeration above cap");

  int budget = std::min(b, n);
  // best_measure[t]: the largest achievable "closest opposite pair" measure
  // after deleting <= b points, with the test point labeled t. nullopt = some
  // deletion set leaves no conflicting pair at all.
  bool unconstrained[2] = {false, false};
  BigRat best_measure[2] = {BigRat(-1), BigRat(-1)};

  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (__builtin_popcountl(mask) > budget) continue;
    for (int t = 0; t < 2; ++t) {
      bool any = false;
      BigRat closest = 0;
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1UL) continue;
        // survivor vs test point
        if (data.label(i) != t) {
          BigRat m = distance_measure(data.point(i).x, x_test, metric);
          if (!any || m < closest) { closest = m; any = true; }
        }
        // survivor pairs
        for (int j = i + 1; j < n; ++j) {
          if ((mask >> j) & 1UL) continue;
          if (data.label(i) == data.label(j)) continue;
          BigRat m = distance_measure(data.point(i).x, data.point(j).x, metric);
          if (!any || m < closest) { closest = m; any = true; }
        }
      }
      if (!any) {
        unconstrained[t] = true;
      } else if (closest > best_measure[t]) {
        best_measure[t] = closest;
      }
    }
  }

  std::vector<Complexity> per_label;
  for (int t = 0; t < 2; ++t) {
    if (unconstrained[t]) per_label.push_back(Complexity(BigRat(0)));
    else per_label.push_back(complexity_from_measure(BigRat(2), best_measure[t], metric));
  }
  return make_certificate(data.alphabet(), per_label);
}

int brute_min_vertex_cover(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                           const OracleBudget& cap) {
  require(num_vertices <= 24, ErrorCode::InstanceTooLarge, "vertex cover: too many vertices");
  require((1LL << num_vertices) * static_cast<long long>(edges.size() + 1) <= cap.max_work,
          ErrorCode::InstanceTooLarge, "vertex cover: enumeration above cap");
  int best = num_vertices;
  for (unsigned long mask = 0; mask < (1UL << num_vertices); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size >= best) continue;
    bool covers = true;
    for (const auto& [u, v] : edges) {
      if (!((mask >> u) & 1UL) && !((mask >> v) & 1UL)) { covers = false; break; }
    }
    if (covers) best = size;
  }
  return best;
}

//====================== interval mass ======================//

Certificate brute_interval_mass(const LabeledDataset& data, const BigRat& x_test, int b,
                                const OracleBudget& cap) {
  check_binary_1d(data);
  require(b >= 0, ErrorCode::Internal, "negative budget");
  int n = data.n();
  require(n <= cap.max_n && n <= 20, ErrorCode::InstanceTooLarge, "oracle: n above cap");
  require((1LL << n) * (n + 2) <= cap.max_work, ErrorCode::InstanceTooLarge,
          "oracle: flip enumeration above cap");

  // Scores are multiples of 1/L with L = lcm(1..n+2) since a run can hold all
  // n points plus the test point; integer arithmetic keeps the enumeration
  // exact and fast.
  long long scale = 1;
  for (int k = 1; k <= n + 2; ++k) scale = std::lcm(scale, static_cast<long long>(k));

  int pos = 0;  // insertion index: after any coincident training points
  while (pos < n && data.x1(pos) <= x_test) ++pos;

  int budget = std::min(b, n);
  long long best[2] = {-1, -1};
  std::vector<int> labels(static_cast<std::size_t>(n) + 1);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (__builtin_popcountl(mask) > budget) continue;
    for (int t = 0; t < 2; ++t) {
      for (int i = 0; i < n; ++i) {
        int lab = data.label(i) ^ static_cast<int>((mask >> i) & 1UL);
        labels[static_cast<std::size_t>(i < pos ? i : i + 1)] = lab;
      }
      labels[static_cast<std::size_t>(pos)] = t;
      const int len = n + 1;
      long long score = 0;
      int run = 1;
      for (int i = 1; i <= len; ++i) {
        if (i < len && labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(i - 1)]) {
          ++run;
        } else {
          score += static_cast<long long>(n) * (scale / (run + 1));
          run = 1;
        }
      }
      if (best[t] < 0 || score < best[t]) best[t] = score;
    }
  }

  std::vector<Complexity> per_label;
  for (int t = 0; t < 2; ++t) per_label.push_back(Complexity(BigRat(best[t], scale)));
  return make_certificate(data.alphabet(), per_label);
}

}  // namespace rrl
