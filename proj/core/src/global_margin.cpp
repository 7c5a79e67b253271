#include "rrlearn/global_margin.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>

#include "rrlearn/errors.hpp"
#include "rrlearn/rational.hpp"

namespace rrl {

namespace {

// Kuhn augmenting-path matcher over compact per-side vertex ids. Augmentation
// works from either side so test copies can sit on whichever side the
// tentative label dictates.
struct Matcher {
  std::vector<std::vector<int>> adj_left, adj_right;
  std::vector<int> match_left, match_right;

  Matcher(int n_left, int n_right)
      : adj_left(n_left),
        adj_right(n_right),
        match_left(n_left, -1),
        match_right(n_right, -1) {}

  void add_edge(int l, int r) {
    adj_left[l].push_back(r);
    adj_right[r].push_back(l);
  }

  bool augment_from_left(int l, std::vector<char>& seen_right) {
    for (int r : adj_left[l]) {
      if (seen_right[r]) continue;
      seen_right[r] = 1;
      if (match_right[r] < 0 || augment_from_left(match_right[r], seen_right)) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    return false;
  }

  bool augment_from_right(int r, std::vector<char>& seen_left) {
    for (int l : adj_right[r]) {
      if (seen_left[l]) continue;
      seen_left[l] = 1;
      if (match_left[l] < 0 || augment_from_right(match_left[l], seen_left)) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    return false;
  }

  // Grows the current matching until no free left vertex admits an augmenting
  // path, which by Berge's lemma makes it maximum.
  void run_to_maximum() {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<char> seen(adj_right.size(), 0);
      for (int l = 0; l < static_cast<int>(adj_left.size()); ++l) {
        if (match_left[l] >= 0) continue;
        std::fill(seen.begin(), seen.end(), 0);
        if (augment_from_left(l, seen)) grew = true;
      }
    }
  }

  int size() const {
    int s = 0;
    for (int r : match_left)
      if (r >= 0) ++s;
    return s;
  }
};

struct SideIndex {
  std::vector<int> left_ids, right_ids;  // dataset index per side slot
  std::vector<int> slot;                 // dataset index -> per-side slot

  explicit SideIndex(const LabeledDataset& data) : slot(data.n(), -1) {
    for (int i = 0; i < data.n(); ++i) {
      if (data.points()[i].label == 0) {
        slot[i] = static_cast<int>(left_ids.size());
        left_ids.push_back(i);
      } else {
        slot[i] = static_cast<int>(right_ids.size());
        right_ids.push_back(i);
      }
    }
  }
};

}  // namespace

GraphLadder GraphLadder::train(const LabeledDataset& data, int b_max, Metric metric) {
  require(data.alphabet().size() == 2, ErrorCode::AlphabetUnsupported,
          "global margin requires a binary alphabet");
  const int n = data.n();
  require(n >= 1, ErrorCode::Parse, "global margin requires a nonempty dataset");
  if (b_max < 0 || b_max > n) b_max = n;

  GraphLadder out;
  out.b_max_ = b_max;
  out.metric_ = metric;

  SideIndex sides(data);

  struct PairEdge {
    BigRat measure;
    int l, r;  // dataset indices, l on the label-0 side
  };
  std::vector<PairEdge> pairs;
  for (int l : sides.left_ids)
    for (int r : sides.right_ids)
      pairs.push_back({distance_measure(data.points()[l].x, data.points()[r].x, metric), l, r});
  std::sort(pairs.begin(), pairs.end(), [](const PairEdge& a, const PairEdge& b) {
    if (a.measure != b.measure) return a.measure < b.measure;
    return std::tie(a.l, a.r) < std::tie(b.l, b.r);
  });

  Matcher matcher(static_cast<int>(sides.left_ids.size()),
                  static_cast<int>(sides.right_ids.size()));
  std::vector<std::pair<int, int>> acc_edges;

  // Emits the rung whose graph is the current edge accumulator. Returns false
  // (and marks the ladder truncated) when its matching exceeds b_max.
  auto push_rung = [&](bool infinite, const BigRat& value) -> bool {
    matcher.run_to_maximum();
    LadderRung rung;
    rung.infinite = infinite;
    rung.value = value;
    rung.edges = acc_edges;
    for (size_t ls = 0; ls < sides.left_ids.size(); ++ls)
      if (matcher.match_left[ls] >= 0)
        rung.matching.emplace_back(sides.left_ids[ls], sides.right_ids[matcher.match_left[ls]]);
    if (rung.matching_size() > b_max) {
      out.truncated_ = true;
      return false;
    }
    out.rungs_.push_back(std::move(rung));
    return true;
  };

  bool alive = push_rung(false, BigRat(0));
  size_t i = 0;
  while (alive && i < pairs.size()) {
    const BigRat value = pairs[i].measure;
    // The rung at a given value holds edges strictly below it, so the block of
    // equal-measure pairs enters the accumulator only after the rung is cut.
    if (value > 0) alive = push_rung(false, value);
    if (alive) {
      while (i < pairs.size() && pairs[i].measure == value) {
        acc_edges.emplace_back(pairs[i].l, pairs[i].r);
        matcher.add_edge(sides.slot[pairs[i].l], sides.slot[pairs[i].r]);
        ++i;
      }
    }
  }
  // Final all-edges rung; with no opposite pairs the zero rung already covers
  // every radius.
  if (alive && !pairs.empty()) push_rung(true, BigRat(0));
  return out;
}

Certificate GraphLadder::certify(const LabeledDataset& data, const std::vector<BigRat>& x_test,
                                 int b) const {
  require(data.alphabet().size() == 2, ErrorCode::AlphabetUnsupported,
          "global margin requires a binary alphabet");
  require(static_cast<int>(x_test.size()) == data.dimension(), ErrorCode::DimensionMismatch,
          "test point has dimension " + std::to_string(x_test.size()) + ", dataset has " +
              std::to_string(data.dimension()));
  require(b >= 0, ErrorCode::Parse, "budget must be nonnegative");
  require(b <= b_max_, ErrorCode::BudgetExceedsTrain,
          "budget " + std::to_string(b) + " exceeds the trained b_max " + std::to_string(b_max_));

  const int n = data.n();
  SideIndex sides(data);

  // Sorted values of the finite rungs, parallel to their positions in rungs_.
  std::vector<BigRat> rung_values;
  for (const LadderRung& rung : rungs_)
    if (!rung.infinite) rung_values.push_back(rung.value);

  std::vector<Complexity> per_label;
  for (int t = 0; t < 2; ++t) {
    // Distances from the test point to each training point a t-labeled test
    // point would conflict with.
    std::vector<int> conflict_ids;
    std::vector<BigRat> conflict_measure;
    for (int i = 0; i < n; ++i) {
      if (data.points()[i].label == t) continue;
      conflict_ids.push_back(i);
      conflict_measure.push_back(distance_measure(x_test, data.points()[i].x, metric_));
    }

    // Picks the rung whose edge set equals {pairs closer than the candidate}.
    // Rung values are exactly the pairwise distances, so the first rung at or
    // above the candidate qualifies; past the last rung, an untruncated ladder
    // ends in the all-edges graph (or, with no opposite pairs, the zero rung).
    auto governing_rung = [&](const BigRat* value) -> const LadderRung* {
      if (value != nullptr) {
        auto it = std::lower_bound(rung_values.begin(), rung_values.end(), *value);
        if (it != rung_values.end())
          return &rungs_[static_cast<size_t>(it - rung_values.begin())];
      }
      if (!rungs_.empty() && rungs_.back().infinite) return &rungs_.back();
      if (!truncated_) return &rungs_.back();
      return nullptr;
    };

    // Feasibility of a candidate radius value (nullptr meaning +inf): can at
    // most b deletions leave every surviving opposite pair, and every
    // surviving conflict with the test point, at or beyond the candidate?
    auto feasible = [&](const BigRat* value) -> bool {
      const LadderRung* rung = governing_rung(value);
      if (rung == nullptr) return false;
      if (rung->matching_size() > b) return false;

      // Conflicting neighbors strictly inside the radius must all be deleted;
      // one degree-1 copy of the test point per neighbor forces them into the
      // cover.
      std::vector<int> forced;
      for (size_t k = 0; k < conflict_ids.size(); ++k)
        if (value == nullptr || conflict_measure[k] < *value) forced.push_back(conflict_ids[k]);
      if (static_cast<int>(forced.size()) > b) return false;

      const bool copies_left = (t == 0);
      const int nl = static_cast<int>(sides.left_ids.size()) +
                     (copies_left ? static_cast<int>(forced.size()) : 0);
      const int nr = static_cast<int>(sides.right_ids.size()) +
                     (copies_left ? 0 : static_cast<int>(forced.size()));
      Matcher scratch(nl, nr);
      for (const auto& e : rung->edges)
        scratch.add_edge(sides.slot[e.first], sides.slot[e.second]);
      for (const auto& e : rung->matching) {
        scratch.match_left[sides.slot[e.first]] = sides.slot[e.second];
        scratch.match_right[sides.slot[e.second]] = sides.slot[e.first];
      }
      int size = rung->matching_size();
      for (size_t k = 0; k < forced.size(); ++k) {
        const int nbr = sides.slot[forced[k]];
        if (copies_left) {
          const int copy = static_cast<int>(sides.left_ids.size() + k);
          scratch.add_edge(copy, nbr);
          std::vector<char> seen(nr, 0);
          if (scratch.augment_from_left(copy, seen)) ++size;
        } else {
          const int copy = static_cast<int>(sides.right_ids.size() + k);
          scratch.add_edge(nbr, copy);
          std::vector<char> seen(nl, 0);
          if (scratch.augment_from_right(copy, seen)) ++size;
        }
        if (size > b) return false;
      }
      return true;
    };

    if (feasible(nullptr)) {
      per_label.emplace_back(BigRat(0));
      continue;
    }

    // Candidate radii: the binding value is always a rung value or a
    // test-point distance. Feasibility is monotone, and 0 is always feasible.
    std::vector<BigRat> candidates;
    candidates.push_back(BigRat(0));
    candidates.insert(candidates.end(), rung_values.begin(), rung_values.end());
    candidates.insert(candidates.end(), conflict_measure.begin(), conflict_measure.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
      const size_t mid = lo + (hi - lo + 1) / 2;
      if (feasible(&candidates[mid]))
        lo = mid;
      else
        hi = mid - 1;
    }
    per_label.push_back(complexity_from_measure(BigRat(2), candidates[lo], metric_));
  }
  return make_certificate(data.alphabet(), per_label);
}

nlohmann::json GraphLadder::to_json(const LabeledDataset& data) const {
  nlohmann::json points = nlohmann::json::array();
  for (const LabeledPoint& p : data.points()) {
    nlohmann::json coords = nlohmann::json::array();
    for (const BigRat& c : p.x) coords.push_back(rational_to_string(c));
    points.push_back({{"x", coords}, {"label", data.alphabet()[p.label]}});
  }
  nlohmann::json radii = nlohmann::json::array();
  nlohmann::json graphs = nlohmann::json::array();
  for (const LadderRung& rung : rungs_) {
    radii.push_back(rung.infinite ? "inf" : rational_to_string(rung.value));
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : rung.edges) edges.push_back({e.first, e.second});
    nlohmann::json matching = nlohmann::json::array();
    for (const auto& e : rung.matching) matching.push_back({e.first, e.second});
    graphs.push_back({{"edges", edges}, {"matching", matching}});
  }
  return {{"kind", "global_margin"}, {"version", 1},
          {"metric", metric_name(metric_)}, {"b_max", b_max_},
          {"truncated", truncated_},        {"alphabet", data.alphabet()},
          {"points", points},               {"radii", radii},
          {"graphs", graphs}};
}

std::pair<GraphLadder, LabeledDataset> GraphLadder::from_json(const nlohmann::json& j) {
  require(j.is_object(), ErrorCode::BadModel, "model must be a JSON object");
  require(j.value("kind", "") == "global_margin", ErrorCode::BadModel,
          "model kind is not global_margin");
  require(j.value("version", 0) == 1, ErrorCode::BadModel, "unsupported global_margin version");
  for (const char* key : {"metric", "b_max", "truncated", "alphabet", "points", "radii", "graphs"})
    require(j.contains(key), ErrorCode::BadModel, std::string("model missing field ") + key);

  const Metric metric = metric_from_string(j.at("metric").get<std::string>());
  std::vector<std::string> alphabet = j.at("alphabet").get<std::vector<std::string>>();
  require(alphabet.size() == 2, ErrorCode::BadModel, "global_margin alphabet must be binary");

  std::vector<LabeledPoint> points;
  for (const nlohmann::json& jp : j.at("points")) {
    LabeledPoint p;
    for (const nlohmann::json& jc : jp.at("x")) p.x.push_back(parse_rational(jc.get<std::string>()));
    const std::string token = jp.at("label").get<std::string>();
    if (token == alphabet[0])
      p.label = 0;
    else if (token == alphabet[1])
      p.label = 1;
    else
      fail(ErrorCode::BadModel, "point label not in the model alphabet");
    points.push_back(std::move(p));
  }
  require(!points.empty(), ErrorCode::BadModel, "model has no training points");
  const int dim = static_cast<int>(points.front().x.size());
  LabeledDataset data(dim, alphabet, std::move(points));

  GraphLadder ladder;
  ladder.metric_ = metric;
  ladder.b_max_ = j.at("b_max").get<int>();
  require(ladder.b_max_ >= 0, ErrorCode::BadModel, "b_max must be nonnegative");
  ladder.truncated_ = j.at("truncated").get<bool>();

  const nlohmann::json& radii = j.at("radii");
  const nlohmann::json& graphs = j.at("graphs");
  require(radii.is_array() && graphs.is_array() && radii.size() == graphs.size() &&
              !radii.empty(),
          ErrorCode::BadModel, "radii and graphs must be parallel nonempty arrays");

  SideIndex sides(data);
  BigRat prev_value;
  for (size_t g = 0; g < radii.size(); ++g) {
    LadderRung rung;
    const std::string rv = radii[g].get<std::string>();
    if (rv == "inf") {
      require(g + 1 == radii.size(), ErrorCode::BadModel, "only the last radius may be inf");
      rung.infinite = true;
    } else {
      rung.value = parse_rational(rv);
      if (g == 0)
        require(rung.value == 0, ErrorCode::BadModel, "first radius must be 0");
      else
        require(rung.value > prev_value, ErrorCode::BadModel, "radii must be increasing");
      prev_value = rung.value;
    }

    std::set<std::pair<int, int>> edge_set;
    for (const nlohmann::json& je : graphs[g].at("edges")) {
      require(je.is_array() && je.size() == 2, ErrorCode::BadModel, "edge must be a pair");
      const int u = je[0].get<int>(), v = je[1].get<int>();
      require(u >= 0 && u < data.n() && v >= 0 && v < data.n(), ErrorCode::BadModel,
              "edge endpoint out of range");
      require(data.points()[u].label == 0 && data.points()[v].label == 1, ErrorCode::BadModel,
              "edge endpoints must have opposite labels");
      rung.edges.emplace_back(u, v);
      edge_set.insert({u, v});
    }
    std::set<int> used;
    for (const nlohmann::json& jm : graphs[g].at("matching")) {
      require(jm.is_array() && jm.size() == 2, ErrorCode::BadModel, "matching entry must be a pair");
      const int u = jm[0].get<int>(), v = jm[1].get<int>();
      require(edge_set.count({u, v}) == 1, ErrorCode::BadModel, "matching pair is not an edge");
      require(used.insert(u).second && used.insert(v).second, ErrorCode::BadModel,
              "matching reuses a vertex");
      rung.matching.emplace_back(u, v);
    }
    require(rung.matching_size() <= ladder.b_max_, ErrorCode::BadModel,
            "stored matching exceeds b_max");

    // A stored matching that is not maximum would corrupt every certificate
    // derived from it, so recheck by trying to grow a copy.
    Matcher check(static_cast<int>(sides.left_ids.size()),
                  static_cast<int>(sides.right_ids.size()));
    for (const auto& e : rung.edges) check.add_edge(sides.slot[e.first], sides.slot[e.second]);
    for (const auto& e : rung.matching) {
      check.match_left[sides.slot[e.first]] = sides.slot[e.second];
      check.match_right[sides.slot[e.second]] = sides.slot[e.first];
    }
    check.run_to_maximum();
    require(check.size() == rung.matching_size(), ErrorCode::BadModel,
            "stored matching is not maximum");

    ladder.rungs_.push_back(std::move(rung));
  }
  return {std::move(ladder), std::move(data)};
}

LabeledDataset embed_k_regular(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                               int k, const std::vector<int>& coloring) {
  require(k >= 3, ErrorCode::NotRegular, "embedding requires k >= 3");
  require(num_vertices >= 1, ErrorCode::NotRegular, "graph must have at least one vertex");

  std::vector<int> degree(num_vertices, 0);
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    require(u >= 0 && u < num_vertices && v >= 0 && v < num_vertices, ErrorCode::NotRegular,
            "edge endpoint out of range");
    require(u != v, ErrorCode::NotRegular, "self-loops are not allowed");
    require(seen.insert({std::min(u, v), std::max(u, v)}).second, ErrorCode::NotRegular,
            "duplicate edge");
    ++degree[u];
    ++degree[v];
  }
  for (int v = 0; v < num_vertices; ++v)
    require(degree[v] == k, ErrorCode::NotRegular,
            "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]) +
                ", expected " + std::to_string(k));

  require(static_cast<int>(coloring.size()) == num_vertices, ErrorCode::BadColoring,
          "coloring must assign every vertex a color");
  for (int c : coloring)
    require(c >= 0 && c < k, ErrorCode::BadColoring, "color index out of range");
  for (const auto& [u, v] : edges)
    require(coloring[u] != coloring[v], ErrorCode::BadColoring,
            "adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) +
                " share a color");

  std::vector<std::string> alphabet;
  for (int c = 0; c < k; ++c) alphabet.push_back("c" + std::to_string(c));

  std::vector<LabeledPoint> points(num_vertices);
  for (int v = 0; v < num_vertices; ++v) {
    points[v].x.assign(edges.size(), BigRat(0));
    points[v].label = coloring[v];
  }
  for (size_t e = 0; e < edges.size(); ++e) {
    points[edges[e].first].x[e] = 1;
    points[edges[e].second].x[e] = 1;
  }
  return LabeledDataset(static_cast<int>(edges.size()), alphabet, std::move(points));
}

std::pair<std::vector<std::pair<int, int>>, int> read_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    long long u, v;
    if (!(ss >> u)) continue;  // blank or comment-only line
    require(static_cast<bool>(ss >> v), ErrorCode::Parse,
            "edge list line " + std::to_string(lineno) + ": expected 'u v'");
    std::string rest;
    require(!(ss >> rest), ErrorCode::Parse,
            "edge list line " + std::to_string(lineno) + ": trailing tokens");
    require(u >= 0 && v >= 0 && u <= 1'000'000 && v <= 1'000'000, ErrorCode::Parse,
            "edge list line " + std::to_string(lineno) + ": vertex id out of range");
    require(u != v, ErrorCode::Parse,
            "edge list line " + std::to_string(lineno) + ": self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
  }
  require(!edges.empty(), ErrorCode::Parse, "edge list is empty");
  return {std::move(edges), max_vertex + 1};
}

namespace {

bool color_search(const std::vector<std::vector<int>>& adj, const std::vector<int>& order,
                  size_t pos, int k, std::vector<int>& color, long long& steps) {
  if (pos == order.size()) return true;
  if (++steps > 20'000'000)
    fail(ErrorCode::InstanceTooLarge, "coloring search exceeded its step budget");
  const int v = order[pos];
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u : adj[v])
      if (color[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (color_search(adj, order, pos + 1, k, color, steps)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_k_coloring(int num_vertices,
                                                const std::vector<std::pair<int, int>>& edges,
                                                int k) {
  require(k >= 1, ErrorCode::BadColoring, "k must be positive");
  std::vector<std::vector<int>> adj(num_vertices);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> order(num_vertices);
  for (int v = 0; v < num_vertices; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
    return a < b;
  });
  std::vector<int> color(num_vertices, -1);
  long long steps = 0;
  if (color_search(adj, order, 0, k, color, steps)) return color;
  return std::nullopt;
}

}  // namespace rrl
