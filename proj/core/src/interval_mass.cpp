#include "rrlearn/interval_mass.hpp"

#include <algorithm>

#include "rrlearn/errors.hpp"

namespace rrl {

IntervalMassModel IntervalMassModel::train(const LabeledDataset& data) {
  return IntervalMassModel(data);
}

IntervalMassModel::IntervalMassModel(LabeledDataset data) : data_(std::move(data)) {
  require(data_.dimension() == 1, ErrorCode::DimensionMismatch,
          "interval mass requires 1-D data");
  require(data_.binary(), ErrorCode::AlphabetUnsupported,
          "interval mass requires a binary alphabet");
  require(data_.n() >= 1, ErrorCode::Parse, "interval mass requires a nonempty dataset");
  n_ = BigRat(data_.n());
  fill_side(0);
  fill_side(1);
}

namespace {

// Score contribution of a run holding `count` points (training plus possibly
// the test point): n / (1 + count).
Complexity run_term(const BigRat& n, int count) { return Complexity(n / BigRat(count + 1)); }

}  // namespace

void IntervalMassModel::fill_side(int side) {
  const int n = data_.n();
  auto seq_label = [&](int i) { return data_.label(side == 0 ? i : n - 1 - i); };

  for (int s = 0; s < 2; ++s) {
    Table& table = tables_[static_cast<std::size_t>(side)][static_cast<std::size_t>(s)];
    table.assign(static_cast<std::size_t>(n),
                 std::vector<std::vector<Complexity>>(
                     static_cast<std::size_t>(n) + 1,
                     std::vector<Complexity>(static_cast<std::size_t>(n),
                                             Complexity::infinity())));
  }
  auto& pos_table = tables_[static_cast<std::size_t>(side)][0];
  auto& neg_table = tables_[static_cast<std::size_t>(side)][1];

  // Base row: a single point forms a run of one; exactly one flip column is
  // reachable per label.
  pos_table[0][static_cast<std::size_t>(seq_label(0) == 0 ? 0 : 1)][0] = run_term(n_, 1);
  neg_table[0][static_cast<std::size_t>(seq_label(0) == 1 ? 0 : 1)][0] = run_term(n_, 1);

  // row_min[s][j]: cheapest entry of row i-1 over all run starts k.
  std::array<std::vector<Complexity>, 2> row_min;
  for (int i = 1; i < n; ++i) {
    for (int s = 0; s < 2; ++s) {
      row_min[static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(n) + 1,
                                                  Complexity::infinity());
      const auto& prev = tables_[static_cast<std::size_t>(side)][static_cast<std::size_t>(s)]
                                [static_cast<std::size_t>(i - 1)];
      for (int j = 0; j <= i; ++j)
        for (int k = 0; k < i; ++k)
          row_min[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] =
              min(row_min[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)],
                  prev[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
    }
    for (int s = 0; s < 2; ++s) {
      auto& table = tables_[static_cast<std::size_t>(side)][static_cast<std::size_t>(s)];
      const auto& prev = table[static_cast<std::size_t>(i - 1)];
      auto& row = table[static_cast<std::size_t>(i)];
      const int cost = (seq_label(i) == s) ? 0 : 1;
      for (int j = 0; j <= i + 1; ++j) {
        const int jj = j - cost;
        if (jj < 0 || jj > i) continue;
        // Extend the run starting at k through point i: the run of i-k points
        // grows to i-k+1, swapping its score term.
        for (int k = 0; k < i; ++k) {
          const Complexity& base = prev[static_cast<std::size_t>(jj)][static_cast<std::size_t>(k)];
          if (base == Complexity::infinity()) continue;
          row[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
              min(row[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)],
                  (base - run_term(n_, i - k)) + run_term(n_, i - k + 1));
        }
        // Open a fresh run at i after an opposite-label run.
        row[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            min(row[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                row_min[static_cast<std::size_t>(1 - s)][static_cast<std::size_t>(jj)] +
                    run_term(n_, 1));
      }
    }
  }
}

const Complexity& IntervalMassModel::left_entry(int label, int i, int j, int k) const {
  return tables_.at(0).at(static_cast<std::size_t>(label)).at(static_cast<std::size_t>(i))
      .at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(k));
}

const Complexity& IntervalMassModel::right_entry(int label, int i, int j, int k) const {
  return tables_.at(1).at(static_cast<std::size_t>(label)).at(static_cast<std::size_t>(i))
      .at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(k));
}

Certificate IntervalMassModel::certify(const BigRat& x_test, int b) const {
  require(b >= 0, ErrorCode::Parse, "budget must be nonnegative");
  const int n = data_.n();
  const int bcol = std::min(b, n);

  std::vector<BigRat> coords = data_.coords1d();
  const int pos = static_cast<int>(std::upper_bound(coords.begin(), coords.end(), x_test) -
                                   coords.begin());
  const int left_len = pos;       // prefix row pos-1 when nonempty
  const int right_len = n - pos;  // reversed-side row right_len-1 when nonempty

  // Per-(side,label) query views of the boundary row: entries prefix-minimized
  // over flips, the cheapest entry per budget, and the cheapest entry when the
  // test point extends the boundary run (count c becomes c+1).
  struct RowView {
    std::vector<std::vector<Complexity>> pm;  // [j][k]
    std::vector<Complexity> any;              // min over k
    std::vector<Complexity> extended;         // min over k with the swap applied
  };
  auto make_view = [&](int side, int label, int row, int len) {
    RowView v;
    v.pm.assign(static_cast<std::size_t>(bcol) + 1,
                std::vector<Complexity>(static_cast<std::size_t>(len), Complexity::infinity()));
    v.any.assign(static_cast<std::size_t>(bcol) + 1, Complexity::infinity());
    v.extended = v.any;
    const auto& raw = tables_[static_cast<std::size_t>(side)][static_cast<std::size_t>(label)]
                             [static_cast<std::size_t>(row)];
    for (int j = 0; j <= bcol; ++j) {
      for (int k = 0; k < len; ++k) {
        Complexity e = (j <= n) ? raw[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]
                                : Complexity::infinity();
        if (j > 0)
          e = min(e, v.pm[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k)]);
        v.pm[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = e;
        if (e == Complexity::infinity()) continue;
        v.any[static_cast<std::size_t>(j)] = min(v.any[static_cast<std::size_t>(j)], e);
        const int c = len - k;  // boundary run size for start k
        v.extended[static_cast<std::size_t>(j)] =
            min(v.extended[static_cast<std::size_t>(j)],
                (e - run_term(n_, c)) + run_term(n_, c + 1));
      }
    }
    return v;
  };

  std::array<RowView, 2> left, right;
  if (left_len > 0)
    for (int s = 0; s < 2; ++s) left[static_cast<std::size_t>(s)] = make_view(0, s, left_len - 1, left_len);
  if (right_len > 0)
    for (int s = 0; s < 2; ++s) right[static_cast<std::size_t>(s)] = make_view(1, s, right_len - 1, right_len);

  Complexity per_label[2];
  for (int t = 0; t < 2; ++t) {
    Complexity best = Complexity::infinity();
    const auto st = static_cast<std::size_t>(t);
    const auto so = static_cast<std::size_t>(1 - t);
    if (left_len == 0) {
      best = min(right[st].extended[static_cast<std::size_t>(bcol)],
                 right[so].any[static_cast<std::size_t>(bcol)] + run_term(n_, 1));
    } else if (right_len == 0) {
      best = min(left[st].extended[static_cast<std::size_t>(bcol)],
                 left[so].any[static_cast<std::size_t>(bcol)] + run_term(n_, 1));
    } else {
      for (int jl = 0; jl <= bcol; ++jl) {
        const auto sjl = static_cast<std::size_t>(jl);
        const auto sjr = static_cast<std::size_t>(bcol - jl);
        // Test point bridges two same-label runs into one.
        for (int kl = 0; kl < left_len; ++kl) {
          const Complexity& a = left[st].pm[sjl][static_cast<std::size_t>(kl)];
          if (a == Complexity::infinity()) continue;
          const int cl = left_len - kl;
          const Complexity a_open = a - run_term(n_, cl);
          for (int kr = 0; kr < right_len; ++kr) {
            const Complexity& c = right[st].pm[sjr][static_cast<std::size_t>(kr)];
            if (c == Complexity::infinity()) continue;
            const int cr = right_len - kr;
            best = min(best, (a_open + (c - run_term(n_, cr))) + run_term(n_, cl + cr + 1));
          }
        }
        // Test point extends exactly one neighbor run, or stands alone.
        best = min(best, left[st].extended[sjl] + right[so].any[sjr]);
        best = min(best, left[so].any[sjl] + right[st].extended[sjr]);
        best = min(best, (left[so].any[sjl] + right[so].any[sjr]) + run_term(n_, 1));
      }
    }
    per_label[t] = best;
  }
  return make_certificate(data_.alphabet(), {per_label[0], per_label[1]});
}

nlohmann::json IntervalMassModel::to_json() const {
  nlohmann::json positions = nlohmann::json::array();
  nlohmann::json labels = nlohmann::json::array();
  for (const LabeledPoint& p : data_.points()) {
    positions.push_back(rational_to_json(p.x[0]));
    labels.push_back(data_.token(p.label));
  }
  return {{"kind", "interval_mass"},
          {"version", 1},
          {"alphabet", data_.alphabet()},
          {"positions", positions},
          {"labels", labels}};
}

IntervalMassModel IntervalMassModel::from_json(const nlohmann::json& j) {
  require(j.is_object(), ErrorCode::BadModel, "model must be a JSON object");
  require(j.value("kind", "") == "interval_mass", ErrorCode::BadModel,
          "model kind is not interval_mass");
  require(j.value("version", 0) == 1, ErrorCode::BadModel, "unsupported interval_mass version");
  for (const char* key : {"alphabet", "positions", "labels"})
    require(j.contains(key), ErrorCode::BadModel, std::string("model missing field ") + key);

  std::vector<std::string> alphabet = j.at("alphabet").get<std::vector<std::string>>();
  require(alphabet.size() == 2, ErrorCode::BadModel, "interval_mass alphabet must be binary");
  const nlohmann::json& positions = j.at("positions");
  const nlohmann::json& labels = j.at("labels");
  require(positions.is_array() && labels.is_array() && positions.size() == labels.size() &&
              !positions.empty(),
          ErrorCode::BadModel, "positions and labels must be parallel nonempty arrays");

  std::vector<LabeledPoint> points;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    LabeledPoint p;
    p.x.push_back(rational_from_json(positions[i]));
    const std::string token = labels[i].get<std::string>();
    if (token == alphabet[0])
      p.label = 0;
    else if (token == alphabet[1])
      p.label = 1;
    else
      fail(ErrorCode::BadModel, "point label not in the model alphabet");
    points.push_back(std::move(p));
  }
  // Tables are rebuilt rather than persisted; exact arithmetic makes the
  // result identical to the trained original.
  return train(LabeledDataset(1, alphabet, std::move(points)));
}

}  // namespace rrl
