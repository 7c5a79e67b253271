#include "rrlearn/alternations.hpp"

#include <algorithm>

#include "rrlearn/errors.hpp"

namespace rrl {

namespace {

Complexity cost_to_complexity(Cost c) {
  return c == kInfCost ? Complexity::infinity() : Complexity(BigRat(c));
}

}  // namespace

AlternationModel AlternationModel::train(const LabeledDataset& data, int b_max) {
  require(data.dimension() == 1, ErrorCode::DimensionMismatch, "alternations: 1-D data required");
  require(data.binary(), ErrorCode::AlphabetUnsupported, "alternations: binary alphabet required");
  require(data.n() >= 1, ErrorCode::AlphabetUnsupported, "alternations: empty dataset");
  return AlternationModel(data, b_max);
}

AlternationModel::AlternationModel(LabeledDataset data, int b_max) : data_(std::move(data)) {
  cap_ = (b_max < 0 || b_max > data_.n()) ? data_.n() : b_max;
  build_groups();
  build_tables();
  build_prefix_minima();
}

void AlternationModel::build_groups() {
  group_coord_.clear();
  group_labels_.clear();
  for (int i = 0; i < data_.n(); ++i) {
    if (group_coord_.empty() || data_.x1(i) != group_coord_.back()) {
      group_coord_.push_back(data_.x1(i));
      group_labels_.push_back({0, 0});
    }
    group_labels_.back()[static_cast<std::size_t>(data_.label(i))] += 1;
  }
}

void AlternationModel::build_tables() {
  const int G = group_count();
  const int cols = cap_ + 1;
  for (int side = 0; side < 2; ++side)
    for (int s = 0; s < 2; ++s)
      dp_[side][s].assign(static_cast<std::size_t>(G),
                          std::vector<Cost>(static_cast<std::size_t>(cols), kInfCost));

  // left to right
  for (int g = 0; g < G; ++g) {
    for (int s = 0; s < 2; ++s) {
      int opp = group_labels_[static_cast<std::size_t>(g)][static_cast<std::size_t>(1 - s)];
      auto& row = dp_[0][s][static_cast<std::size_t>(g)];
      if (g == 0) {
        if (opp < cols) row[static_cast<std::size_t>(opp)] = 0;
        continue;
      }
      const auto& same = dp_[0][s][static_cast<std::size_t>(g - 1)];
      const auto& other = dp_[0][1 - s][static_cast<std::size_t>(g - 1)];
      for (int j = opp; j < cols; ++j)
        row[static_cast<std::size_t>(j)] =
            std::min(same[static_cast<std::size_t>(j - opp)],
                     sat_add(other[static_cast<std::size_t>(j - opp)], 1));
    }
  }
  // right to left
  for (int g = G - 1; g >= 0; --g) {
    for (int s = 0; s < 2; ++s) {
      int opp = group_labels_[static_cast<std::size_t>(g)][static_cast<std::size_t>(1 - s)];
      auto& row = dp_[1][s][static_cast<std::size_t>(g)];
      if (g == G - 1) {
        if (opp < cols) row[static_cast<std::size_t>(opp)] = 0;
        continue;
      }
      const auto& same = dp_[1][s][static_cast<std::size_t>(g + 1)];
      const auto& other = dp_[1][1 - s][static_cast<std::size_t>(g + 1)];
      for (int j = opp; j < cols; ++j)
        row[static_cast<std::size_t>(j)] =
            std::min(same[static_cast<std::size_t>(j - opp)],
                     sat_add(other[static_cast<std::size_t>(j - opp)], 1));
    }
  }
}

void AlternationModel::build_prefix_minima() {
  for (int side = 0; side < 2; ++side) {
    for (int s = 0; s < 2; ++s) {
      prefmin_[side][s] = dp_[side][s];
      for (auto& row : prefmin_[side][s])
        for (std::size_t j = 1; j < row.size(); ++j)
          row[j] = std::min(row[j], row[j - 1]);
    }
  }
}

AlternationModel::SideView AlternationModel::left_view(int gi, bool) const {
  return SideView{gi == 0, gi - 1};
}

AlternationModel::SideView AlternationModel::right_view(int gi, bool coincident) const {
  int first = coincident ? gi + 1 : gi;
  return SideView{first >= group_count(), first};
}

Certificate AlternationModel::certify(const BigRat& x_test, int b) const {
  // Full tables saturate at n mistakes, so larger budgets clamp; tables
  // truncated at a smaller training cap cannot answer beyond it.
  require(cap_ >= data_.n() || b <= cap_, ErrorCode::BudgetExceedsTrain,
          "budget " + std::to_string(b) + " exceeds the trained cap " + std::to_string(cap_));
  int B = std::max(0, std::min(b, cap_));
  int gi = static_cast<int>(std::lower_bound(group_coord_.begin(), group_coord_.end(), x_test) -
                            group_coord_.begin());
  bool coincident = gi < group_count() && group_coord_[static_cast<std::size_t>(gi)] == x_test;
  SideView left = left_view(gi, coincident);
  SideView right = right_view(gi, coincident);

  Complexity per_label[2];
  for (int t = 0; t < 2; ++t) {
    int mand = coincident
                   ? group_labels_[static_cast<std::size_t>(gi)][static_cast<std::size_t>(1 - t)]
                   : 0;
    if (mand > B) {
      per_label[t] = Complexity::infinity();
      continue;
    }
    int rem = B - mand;
    Cost best = kInfCost;
    if (left.empty && right.empty) {
      best = 0;
    } else if (left.empty || right.empty) {
      const SideView& side = left.empty ? right : left;
      int side_idx = left.empty ? 1 : 0;
      for (int q = 0; q < 2; ++q) {
        const auto& row = prefmin_[side_idx][q][static_cast<std::size_t>(side.row)];
        best = std::min(best, sat_add(row[static_cast<std::size_t>(rem)], q == t ? 0 : 1));
      }
    } else {
      for (int p = 0; p < 2; ++p) {
        const auto& lrow = prefmin_[0][p][static_cast<std::size_t>(left.row)];
        for (int q = 0; q < 2; ++q) {
          const auto& rrow = prefmin_[1][q][static_cast<std::size_t>(right.row)];
          Cost junction = (p == t ? 0 : 1) + (q == t ? 0 : 1);
          for (int j = 0; j <= rem; ++j)
            best = std::min(best, sat_add(sat_add(lrow[static_cast<std::size_t>(j)],
                                                  rrow[static_cast<std::size_t>(rem - j)]),
                                          junction));
        }
      }
    }
    per_label[t] = cost_to_complexity(best);
  }
  return make_certificate(data_.alphabet(), {per_label[0], per_label[1]});
}

std::vector<Certificate> AlternationModel::certify_all_budgets(const BigRat& x_test,
                                                               int b_max) const {
  require(cap_ >= data_.n() || b_max <= cap_, ErrorCode::BudgetExceedsTrain,
          "budget " + std::to_string(b_max) + " exceeds the trained cap " + std::to_string(cap_));
  int B = std::max(0, std::min(b_max, cap_));
  int gi = static_cast<int>(std::lower_bound(group_coord_.begin(), group_coord_.end(), x_test) -
                            group_coord_.begin());
  bool coincident = gi < group_count() && group_coord_[static_cast<std::size_t>(gi)] == x_test;
  SideView left = left_view(gi, coincident);
  SideView right = right_view(gi, coincident);

  // Minimum side cost within budget j, per boundary state; constant 0 for an
  // empty side regardless of state.
  auto side_sequence = [&](int side_idx, const SideView& side, int state) {
    CostSequence seq(static_cast<std::size_t>(B) + 1, 0);
    if (side.empty) return seq;
    const auto& row = prefmin_[side_idx][state][static_cast<std::size_t>(side.row)];
    for (int j = 0; j <= B; ++j)
      seq[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(std::min(j, cap_))];
    return seq;
  };

  // combined[t][j]: cheapest alternation count with the test labeled t and at
  // most j disagreements outside the coincident group.
  std::array<CostSequence, 2> combined;
  combined[0].assign(static_cast<std::size_t>(B) + 1, kInfCost);
  combined[1] = combined[0];
  if (left.empty && right.empty) {
    combined[0].assign(static_cast<std::size_t>(B) + 1, 0);
    combined[1] = combined[0];
  } else if (left.empty || right.empty) {
    int side_idx = left.empty ? 1 : 0;
    const SideView& side = left.empty ? right : left;
    for (int q = 0; q < 2; ++q) {
      CostSequence seq = side_sequence(side_idx, side, q);
      for (int t = 0; t < 2; ++t) {
        Cost junction = (q == t) ? 0 : 1;
        for (int j = 0; j <= B; ++j)
          combined[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] =
              std::min(combined[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)],
                       sat_add(seq[static_cast<std::size_t>(j)], junction));
      }
    }
  } else {
    for (int p = 0; p < 2; ++p) {
      CostSequence lseq = side_sequence(0, left, p);
      for (int q = 0; q < 2; ++q) {
        CostSequence rseq = side_sequence(1, right, q);
        CostSequence conv = minplus_monotone_decreasing(lseq, rseq);
        for (int t = 0; t < 2; ++t) {
          Cost junction = (p == t ? 0 : 1) + (q == t ? 0 : 1);
          for (int j = 0; j <= B; ++j)
            combined[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] =
                std::min(combined[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)],
                         sat_add(conv[static_cast<std::size_t>(j)], junction));
        }
      }
    }
  }

  std::vector<Certificate> out;
  out.reserve(static_cast<std::size_t>(b_max) + 1);
  for (int b = 0; b <= b_max; ++b) {
    int be = std::min(b, B);
    Complexity per_label[2];
    for (int t = 0; t < 2; ++t) {
      int mand = coincident
                     ? group_labels_[static_cast<std::size_t>(gi)][static_cast<std::size_t>(1 - t)]
                     : 0;
      if (mand > be) {
        per_label[t] = Complexity::infinity();
        continue;
      }
      per_label[t] =
          cost_to_complexity(combined[static_cast<std::size_t>(t)][static_cast<std::size_t>(be - mand)]);
    }
    out.push_back(make_certificate(data_.alphabet(), {per_label[0], per_label[1]}));
  }
  return out;
}

//====================== persistence ======================//

namespace {

nlohmann::json table_to_json(const std::vector<std::vector<Cost>>& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t) {
    nlohmann::json r = nlohmann::json::array();
    for (Cost v : row) {
      if (v == kInfCost) r.push_back("inf");
      else r.push_back(v);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::vector<Cost>> table_from_json(const nlohmann::json& j, int rows, int cols) {
  require(j.is_array() && static_cast<int>(j.size()) == rows, ErrorCode::BadModel,
          "alternations table: wrong row count");
  std::vector<std::vector<Cost>> out;
  out.reserve(j.size());
  for (const auto& jr : j) {
    require(jr.is_array() && static_cast<int>(jr.size()) == cols, ErrorCode::BadModel,
            "alternations table: wrong column count");
    std::vector<Cost> row;
    row.reserve(jr.size());
    for (const auto& cell : jr) {
      if (cell.is_string()) {
        require(cell.get<std::string>() == "inf", ErrorCode::BadModel, "bad table sentinel");
        row.push_back(kInfCost);
      } else {
        require(cell.is_number_integer(), ErrorCode::BadModel, "bad table entry");
        row.push_back(cell.get<Cost>());
        require(row.back() >= 0, ErrorCode::BadModel, "negative table entry");
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

nlohmann::json AlternationModel::to_json() const {
  nlohmann::json positions = nlohmann::json::array();
  nlohmann::json labels = nlohmann::json::array();
  for (int i = 0; i < data_.n(); ++i) {
    positions.push_back(rational_to_string(data_.x1(i)));
    labels.push_back(data_.token(data_.label(i)));
  }
  return nlohmann::json{
      {"kind", "alternations"},
      {"version", 1},
      {"alphabet", data_.alphabet()},
      {"positions", positions},
      {"labels", labels},
      {"cap", cap_},
      {"tables",
       {{"left_pos", table_to_json(dp_[0][0])},
        {"left_neg", table_to_json(dp_[0][1])},
        {"right_pos", table_to_json(dp_[1][0])},
        {"right_neg", table_to_json(dp_[1][1])}}},
  };
}

AlternationModel AlternationModel::from_json(const nlohmann::json& j) {
  require(j.value("kind", "") == "alternations", ErrorCode::BadModel, "not an alternations model");
  require(j.value("version", 0) == 1, ErrorCode::BadModel, "unknown alternations model version");
  auto alphabet = j.at("alphabet").get<std::vector<std::string>>();
  auto positions = j.at("positions");
  auto labels = j.at("labels");
  require(positions.is_array() && labels.is_array() && positions.size() == labels.size(),
          ErrorCode::BadModel, "positions/labels mismatch");

  std::vector<LabeledPoint> pts;
  pts.reserve(positions.size());
  LabeledDataset shell(1, alphabet, {});
  for (std::size_t i = 0; i < positions.size(); ++i) {
    LabeledPoint p;
    p.x.push_back(parse_rational(positions[i].get<std::string>()));
    p.label = shell.label_index(labels[i].get<std::string>());
    require(p.label >= 0, ErrorCode::BadModel, "label outside alphabet");
    pts.push_back(std::move(p));
  }
  LabeledDataset data(1, alphabet, std::move(pts));
  require(data.n() >= 1, ErrorCode::BadModel, "alternations model without points");

  int cap = j.value("cap", -1);
  require(cap >= 0 && cap <= data.n(), ErrorCode::BadModel, "bad cap");
  AlternationModel model(data, cap);

  // stored tables replace the rebuilt ones after shape/value validation
  const auto& tables = j.at("tables");
  int G = model.group_count();
  model.dp_[0][0] = table_from_json(tables.at("left_pos"), G, cap + 1);
  model.dp_[0][1] = table_from_json(tables.at("left_neg"), G, cap + 1);
  model.dp_[1][0] = table_from_json(tables.at("right_pos"), G, cap + 1);
  model.dp_[1][1] = table_from_json(tables.at("right_neg"), G, cap + 1);
  model.build_prefix_minima();
  return model;
}

}  // namespace rrl
