#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "rrlearn/alternations.hpp"
#include "rrlearn/global_margin.hpp"
#include "rrlearn/interval_mass.hpp"
#include "rrlearn/local_margin.hpp"
#include "rrlearn/metric.hpp"
#include "rrlearn/regions.hpp"

namespace rrl {

enum class ModelKind { Alternations, LocalMargin, GlobalMargin, IntervalMass };

ModelKind model_kind_from_string(const std::string& name);
std::string model_kind_name(ModelKind kind);

// One trained model of any measure behind uniform train / persist / certify
// entry points; this is the CLI's working currency. The global margin ladder
// travels with its training set.
class AnyModel {
 public:
  // b_max applies to alternations and global margin (< 0 means the default
  // cap); metric applies to the two margin measures.
  static AnyModel train(ModelKind kind, const LabeledDataset& data, int b_max, Metric metric);

  static AnyModel from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  ModelKind kind() const { return kind_; }
  const LabeledDataset& data() const;
  int dimension() const { return data().dimension(); }
  Metric metric() const;  // L2 for the measures that do not take one

  Certificate certify(const std::vector<BigRat>& x, int b) const;

  // Certificates for budgets 0..b_max; alternations goes through its
  // convolution path, the rest query per budget.
  std::vector<Certificate> certify_table(const std::vector<BigRat>& x, int b_max) const;

  // View for the regions module; the AnyModel must outlive it. gap_constant
  // holds for alternations and interval mass only.
  GapLearner gap_learner() const;

  // Human-readable note when training truncated the model's budget range.
  std::optional<std::string> truncation_note() const;

 private:
  AnyModel() = default;

  ModelKind kind_ = ModelKind::Alternations;
  std::optional<AlternationModel> alternations_;
  std::optional<MarginModel> local_margin_;
  std::optional<GraphLadder> ladder_;
  std::optional<LabeledDataset> ladder_data_;
  std::optional<IntervalMassModel> interval_mass_;
};

}  // namespace rrl
