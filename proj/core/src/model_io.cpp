#include "rrlearn/model_io.hpp"

#include "rrlearn/errors.hpp"

namespace rrl {

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "alternations") return ModelKind::Alternations;
  if (name == "local_margin") return ModelKind::LocalMargin;
  if (name == "global_margin") return ModelKind::GlobalMargin;
  if (name == "interval_mass") return ModelKind::IntervalMass;
  fail(ErrorCode::AlphabetUnsupported, "unsupported measure '" + name + "'");
}

std::string model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Alternations: return "alternations";
    case ModelKind::LocalMargin: return "local_margin";
    case ModelKind::GlobalMargin: return "global_margin";
    case ModelKind::IntervalMass: return "interval_mass";
  }
  fail(ErrorCode::Internal, "bad model kind");
}

AnyModel AnyModel::train(ModelKind kind, const LabeledDataset& data, int b_max, Metric metric) {
  AnyModel m;
  m.kind_ = kind;
  switch (kind) {
    case ModelKind::Alternations:
      m.alternations_ = AlternationModel::train(data, b_max);
      break;
    case ModelKind::LocalMargin:
      m.local_margin_ = MarginModel::train(data, metric);
      break;
    case ModelKind::GlobalMargin:
      m.ladder_ = GraphLadder::train(data, b_max, metric);
      m.ladder_data_ = data;
      break;
    case ModelKind::IntervalMass:
      m.interval_mass_ = IntervalMassModel::train(data);
      break;
  }
  return m;
}

AnyModel AnyModel::from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("kind") && j.at("kind").is_string(), ErrorCode::BadModel,
          "model file must be a JSON object with a 'kind' field");
  const std::string kind = j.at("kind").get<std::string>();
  AnyModel m;
  if (kind == "alternations") {
    m.kind_ = ModelKind::Alternations;
    m.alternations_ = AlternationModel::from_json(j);
  } else if (kind == "local_margin") {
    m.kind_ = ModelKind::LocalMargin;
    m.local_margin_ = MarginModel::from_json(j);
  } else if (kind == "global_margin") {
    m.kind_ = ModelKind::GlobalMargin;
    auto [ladder, data] = GraphLadder::from_json(j);
    m.ladder_ = std::move(ladder);
    m.ladder_data_ = std::move(data);
  } else if (kind == "interval_mass") {
    m.kind_ = ModelKind::IntervalMass;
    m.interval_mass_ = IntervalMassModel::from_json(j);
  } else {
    fail(ErrorCode::BadModel, "unknown model kind '" + kind + "'");
  }
  return m;
}

nlohmann::json AnyModel::to_json() const {
  switch (kind_) {
    case ModelKind::Alternations: return alternations_->to_json();
    case ModelKind::LocalMargin: return local_margin_->to_json();
    case ModelKind::GlobalMargin: return ladder_->to_json(*ladder_data_);
    case ModelKind::IntervalMass: return interval_mass_->to_json();
  }
  fail(ErrorCode::Internal, "bad model kind");
}

const LabeledDataset& AnyModel::data() const {
  switch (kind_) {
    case ModelKind::Alternations: return alternations_->data();
    case ModelKind::LocalMargin: return local_margin_->data();
    case ModelKind::GlobalMargin: return *ladder_data_;
    case ModelKind::IntervalMass: return interval_mass_->data();
  }
  fail(ErrorCode::Internal, "bad model kind");
}

Metric AnyModel::metric() const {
  switch (kind_) {
    case ModelKind::LocalMargin: return local_margin_->metric();
    case ModelKind::GlobalMargin: return ladder_->metric();
    default: return Metric::L2;
  }
}

namespace {

const BigRat& one_dimensional(const std::vector<BigRat>& x) {
  require(x.size() == 1, ErrorCode::DimensionMismatch,
          "this measure takes 1-D test points, got dimension " + std::to_string(x.size()));
  return x.front();
}

}  // namespace

Certificate AnyModel::certify(const std::vector<BigRat>& x, int b) const {
  require(b >= 0, ErrorCode::Parse, "budget must be nonnegative");
  switch (kind_) {
    case ModelKind::Alternations: return alternations_->certify(one_dimensional(x), b);
    case ModelKind::LocalMargin: return local_margin_->certify(x, b);
    case ModelKind::GlobalMargin: return ladder_->certify(*ladder_data_, x, b);
    case ModelKind::IntervalMass: return interval_mass_->certify(one_dimensional(x), b);
  }
  fail(ErrorCode::Internal, "bad model kind");
}

std::vector<Certificate> AnyModel::certify_table(const std::vector<BigRat>& x, int b_max) const {
  require(b_max >= 0, ErrorCode::Parse, "budget must be nonnegative");
  if (kind_ == ModelKind::Alternations)
    return alternations_->certify_all_budgets(one_dimensional(x), b_max);
  std::vector<Certificate> out;
  out.reserve(static_cast<std::size_t>(b_max) + 1);
  for (int b = 0; b <= b_max; ++b) out.push_back(certify(x, b));
  return out;
}

GapLearner AnyModel::gap_learner() const {
  const bool gap_constant =
      kind_ == ModelKind::Alternations || kind_ == ModelKind::IntervalMass;
  return GapLearner{[this](const BigRat& x, int b) { return certify({x}, b); }, gap_constant};
}

std::optional<std::string> AnyModel::truncation_note() const {
  if (kind_ == ModelKind::Alternations && alternations_->cap() < alternations_->data().n())
    return "tables truncated at budget cap " + std::to_string(alternations_->cap());
  if (kind_ == ModelKind::GlobalMargin && ladder_->truncated())
    return "ladder truncated at b_max " + std::to_string(ladder_->b_max());
  return std::nullopt;
}

}  // namespace rrl
