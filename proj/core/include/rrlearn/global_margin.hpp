#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rrlearn/certificate.hpp"
#include "rrlearn/dataset.hpp"
#include "rrlearn/metric.hpp"

namespace rrl {

// One rung of the radius ladder: the bipartite graph joining opposite-label
// points at distance strictly below the rung value, together with a maximum
// matching of it. Values live in the metric's measure domain (squared
// distances for L2). The final rung may be the all-edges graph (value +inf).
struct LadderRung {
  bool infinite = false;
  BigRat value;                                // ignored when infinite
  std::vector<std::pair<int, int>> edges;      // (label-0 index, label-1 index)
  std::vector<std::pair<int, int>> matching;   // subset of edges
  int matching_size() const { return static_cast<int>(matching.size()); }
};

// Binary-case margin learner over the whole configuration. A tentative test
// label is feasible at radius r when deleting a minimum vertex cover of the
// r-graph (augmented so the test point's conflicting neighbors are forced into
// the cover) fits the budget; Koenig's theorem makes the cover a maximum
// matching. Certification binary-searches the candidate radii; the ladder is
// never mutated by queries.
class GraphLadder {
 public:
  static GraphLadder train(const LabeledDataset& data, int b_max, Metric metric);

  // `data` must be the dataset the ladder was trained on.
  Certificate certify(const LabeledDataset& data, const std::vector<BigRat>& x_test, int b) const;

  int b_max() const { return b_max_; }
  Metric metric() const { return metric_; }
  bool truncated() const { return truncated_; }
  const std::vector<LadderRung>& rungs() const { return rungs_; }

  nlohmann::json to_json(const LabeledDataset& data) const;
  static std::pair<GraphLadder, LabeledDataset> from_json(const nlohmann::json& j);

 private:
  int b_max_ = 0;
  Metric metric_ = Metric::L2;
  bool truncated_ = false;
  std::vector<LadderRung> rungs_;
};

// Edge-space embedding of a k-regular properly k-colored graph: vertex ->
// its 0/1 edge-incidence vector, label -> its color token. Adjacent vertices
// land at Hamming distance 2k-2, non-adjacent ones at 2k.
LabeledDataset embed_k_regular(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                               int k, const std::vector<int>& coloring);

// "u v" per line; blank lines and '#' comments are skipped. Returns edges and
// the vertex count (max index + 1).
std::pair<std::vector<std::pair<int, int>>, int> read_edge_list(std::istream& in);

// Exhaustive proper k-coloring search (desk scale); nullopt when none exists.
std::optional<std::vector<int>> find_k_coloring(int num_vertices,
                                                const std::vector<std::pair<int, int>>& edges,
                                                int k);

}  // namespace rrl
