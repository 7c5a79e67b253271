#pragma once

#include <vector>

#include "rrlearn/certificate.hpp"
#include "rrlearn/dataset.hpp"
#include "rrlearn/ecm.hpp"
#include "rrlearn/metric.hpp"

namespace rrl {

// Exhaustive reference implementations, deliberately written from the measure
// definitions and nothing else. They are the ground truth the fast learners
// are tested against, so they must stay independent of those modules.

// Enumeration guards: the oracles hard-fail (INSTANCE_TOO_LARGE) rather than
// run unbounded searches.
struct OracleBudget {
  int max_n = 16;
  int max_b = 16;
  long long max_work = 10'000'000;
};

Certificate brute_alternations(const LabeledDataset& data, const BigRat& x_test, int b,
                               const OracleBudget& cap = {});

Certificate brute_local_margin(const LabeledDataset& data, const std::vector<BigRat>& x_test,
                               int b, Metric metric);

Certificate brute_global_margin(const LabeledDataset& data, const std::vector<BigRat>& x_test,
                                int b, Metric metric, const OracleBudget& cap = {});

Certificate brute_interval_mass(const LabeledDataset& data, const BigRat& x_test, int b,
                                const OracleBudget& cap = {});

// Brute-force min vertex cover size on a bipartite edge list; small graphs only
// (used to cross-check matchings against the cover duality).
int brute_min_vertex_cover(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                           const OracleBudget& cap = {});

// The alternations measure exposed through the generic ECM surface; backs the
// tests of the certifying wrapper and of the pin-by-copies trick.
class BruteAlternationsEcm : public EcmOracle {
 public:
  explicit BruteAlternationsEcm(OracleBudget cap = {}) : cap_(cap) {}
  Complexity min_complexity(const LabeledDataset& data, int budget) const override;

 private:
  OracleBudget cap_;
};

}  // namespace rrl
