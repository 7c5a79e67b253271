#include "rrlearn/local_margin.hpp"

#include <algorithm>

#include "rrlearn/errors.hpp"

namespace rrl {

MarginModel MarginModel::train(const LabeledDataset& data, Metric metric) {
  require(data.n() >= 1, ErrorCode::AlphabetUnsupported, "local margin: empty dataset");
  return MarginModel(data, metric);
}

MarginModel::MarginModel(LabeledDataset data, Metric metric)
    : data_(std::move(data)), metric_(metric) {
  complements_.assign(data_.alphabet().size(), {});
  for (int i = 0; i < data_.n(); ++i)
    for (std::size_t y = 0; y < data_.alphabet().size(); ++y)
      if (data_.label(i) != static_cast<int>(y)) complements_[y].push_back(i);
}

Certificate MarginModel::certify(const std::vector<BigRat>& x_test, int b) const {
  require(b >= 0, ErrorCode::Internal, "negative budget");
  require(static_cast<int>(x_test.size()) == data_.dimension(), ErrorCode::DimensionMismatch,
          "test point dimension mismatch");
  std::vector<Complexity> per_label;
  per_label.reserve(complements_.size());
  std::vector<BigRat> measures;
  for (const auto& comp : complements_) {
    if (static_cast<std::size_t>(b) >= comp.size()) {
      per_label.push_back(Complexity(BigRat(0)));  // no (b+1)-st disagreeing point: radius unbounded
      continue;
    }
    measures.clear();
    measures.reserve(comp.size());
    for (int i : comp) measures.push_back(distance_measure(x_test, data_.point(i).x, metric_));
    auto nth = measures.begin() + b;
    std::nth_element(measures.begin(), nth, measures.end());
    per_label.push_back(complexity_from_measure(BigRat(1), *nth, metric_));
  }
  return make_certificate(data_.alphabet(), per_label);
}

nlohmann::json MarginModel::to_json() const {
  nlohmann::json points = nlohmann::json::array();
  for (int i = 0; i < data_.n(); ++i) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : data_.point(i).x) coords.push_back(rational_to_string(c));
    points.push_back(nlohmann::json{{"x", coords}, {"label", data_.token(data_.label(i))}});
  }
  return nlohmann::json{{"kind", "local_margin"},
                        {"version", 1},
                        {"metric", metric_name(metric_)},
                        {"dimension", data_.dimension()},
                        {"alphabet", data_.alphabet()},
                        {"points", points}};
}

MarginModel MarginModel::from_json(const nlohmann::json& j) {
  require(j.value("kind", "") == "local_margin", ErrorCode::BadModel, "not a local_margin model");
  require(j.value("version", 0) == 1, ErrorCode::BadModel, "unknown local_margin model version");
  Metric metric = metric_from_string(j.at("metric").get<std::string>());
  int dim = j.at("dimension").get<int>();
  auto alphabet = j.at("alphabet").get<std::vector<std::string>>();
  LabeledDataset shell(dim, alphabet, {});
  std::vector<LabeledPoint> pts;
  for (const auto& jp : j.at("points")) {
    LabeledPoint p;
    for (const auto& c : jp.at("x")) p.x.push_back(parse_rational(c.get<std::string>()));
    p.label = shell.label_index(jp.at("label").get<std::string>());
    require(p.label >= 0, ErrorCode::BadModel, "label outside alphabet");
    pts.push_back(std::move(p));
  }
  LabeledDataset data(dim, alphabet, std::move(pts));
  require(data.n() >= 1, ErrorCode::BadModel, "local_margin model without points");
  return MarginModel(std::move(data), metric);
}

}  // namespace rrl
