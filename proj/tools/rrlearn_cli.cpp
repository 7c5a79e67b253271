// rrlearn: train certifying learners, query pointwise guarantees, compute
// certified regions, and run the sample-complexity experiment. Exit codes:
// 0 ok, 2 parse/model-file error, 4 budget beyond the trained range,
// 3 unsupported input (measure, alphabet, dimension, ...), 5 internal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rrlearn/certificate.hpp"
#include "rrlearn/dataset.hpp"
#include "rrlearn/errors.hpp"
#include "rrlearn/global_margin.hpp"
#include "rrlearn/metric.hpp"
#include "rrlearn/model_io.hpp"
#include "rrlearn/oracles.hpp"
#include "rrlearn/rational.hpp"
#include "rrlearn/regions.hpp"

namespace {

using rrl::ErrorCode;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::BadModel:
      return 2;
    case ErrorCode::AlphabetUnsupported:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotGapConstant:
    case ErrorCode::NotRegular:
    case ErrorCode::BadColoring:
    case ErrorCode::InstanceTooLarge:
    case ErrorCode::BadTarget:
      return 3;
    case ErrorCode::BudgetExceedsTrain:
      return 4;
    case ErrorCode::LengthMismatch:
    case ErrorCode::NotMonotone:
    case ErrorCode::Internal:
      return 5;
  }
  return 5;
}

std::vector<rrl::BigRat> parse_point(const std::string& text) {
  std::vector<rrl::BigRat> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) coords.push_back(rrl::parse_rational(part));
  rrl::require(!coords.empty(), ErrorCode::Parse, "--point must hold at least one coordinate");
  return coords;
}

rrl::Complexity parse_complexity(const std::string& text) {
  if (text == "inf") return rrl::Complexity::infinity();
  return rrl::Complexity(rrl::parse_rational(text));
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  rrl::require(static_cast<bool>(in), ErrorCode::Parse, "cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  rrl::require(!j.is_discarded(), ErrorCode::Parse, path + " is not valid JSON");
  return j;
}

rrl::LabeledDataset load_csv(const std::string& path, const std::vector<std::string>& alphabet) {
  std::ifstream in(path);
  rrl::require(static_cast<bool>(in), ErrorCode::Parse, "cannot open " + path);
  return rrl::LabeledDataset::read_csv(in, alphabet);
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  rrl::require(static_cast<bool>(out), ErrorCode::Parse, "cannot write " + path);
  return out;
}

struct TrainArgs {
  std::string measure;
  std::string input;
  std::string output;
  int b_max = -1;
  std::string metric = "l2";
  std::vector<std::string> labels;
};

int run_train(const TrainArgs& a) {
  const rrl::ModelKind kind = rrl::model_kind_from_string(a.measure);
  const rrl::Metric metric = rrl::metric_from_string(a.metric);
  const rrl::LabeledDataset data = load_csv(a.input, a.labels);
  if (kind == rrl::ModelKind::GlobalMargin && data.alphabet().size() > 2)
    rrl::fail(ErrorCode::AlphabetUnsupported,
              "global margin training got " + std::to_string(data.alphabet().size()) +
                  " labels; optimal certification beyond two labels is NP-hard"
                  " (see the reduce subcommand), so training is limited to binary alphabets");
  const rrl::AnyModel model = rrl::AnyModel::train(kind, data, a.b_max, metric);
  if (auto note = model.truncation_note()) std::cerr << "note: " << *note << "\n";
  open_for_write(a.output) << model.to_json().dump(2) << "\n";
  std::cout << nlohmann::json{{"kind", rrl::model_kind_name(kind)},
                              {"n", data.n()},
                              {"dimension", data.dimension()},
                              {"output", a.output}}
                   .dump()
            << "\n";
  return 0;
}

struct CertifyArgs {
  std::string model;
  std::string point;
  int budget = 0;
  bool oracle = false;
};

rrl::Certificate oracle_certify(const rrl::AnyModel& model, const std::vector<rrl::BigRat>& x,
                                int b) {
  switch (model.kind()) {
    case rrl::ModelKind::Alternations:
      return rrl::brute_alternations(model.data(), x.front(), b);
    case rrl::ModelKind::LocalMargin:
      return rrl::brute_local_margin(model.data(), x, b, model.metric());
    case rrl::ModelKind::GlobalMargin:
      return rrl::brute_global_margin(model.data(), x, b, model.metric());
    case rrl::ModelKind::IntervalMass:
      return rrl::brute_interval_mass(model.data(), x.front(), b);
  }
  rrl::fail(ErrorCode::Internal, "bad model kind");
}

int run_certify(const CertifyArgs& a) {
  const rrl::AnyModel model = rrl::AnyModel::from_json(load_json_file(a.model));
  const std::vector<rrl::BigRat> point = parse_point(a.point);
  const rrl::Certificate cert = model.certify(point, a.budget);
  if (!a.oracle) {
    std::cout << rrl::certificate_to_json(cert).dump() << "\n";
    return 0;
  }
  const rrl::Certificate ref = oracle_certify(model, point, a.budget);
  std::cout << nlohmann::json{{"certificate", rrl::certificate_to_json(cert)},
                              {"oracle", rrl::certificate_to_json(ref)},
                              {"match", cert == ref}}
                   .dump()
            << "\n";
  return 0;
}

struct TableArgs {
  std::string model;
  std::string point;
  int budget_max = 0;
};

int run_table(const TableArgs& a) {
  const rrl::AnyModel model = rrl::AnyModel::from_json(load_json_file(a.model));
  const std::vector<rrl::BigRat> point = parse_point(a.point);
  const std::vector<rrl::Certificate> certs = model.certify_table(point, a.budget_max);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t b = 0; b < certs.size(); ++b) {
    const rrl::Certificate& cert = certs[b];
    if (rrl::is_abstention(cert))
      std::cout << "b=" << b << ": Any\n";
    else
      std::cout << "b=" << b << ": " << cert.label << ", [" << cert.c_low.str() << ","
                << cert.c_high.str() << ")\n";
    nlohmann::json row = rrl::certificate_to_json(cert);
    row["b"] = b;
    row["abstain"] = rrl::is_abstention(cert);
    rows.push_back(std::move(row));
  }
  std::cout << nlohmann::json{{"point", a.point}, {"rows", rows}}.dump() << "\n";
  return 0;
}

struct RegionArgs {
  std::string model;
  int budget = 0;
  std::string complexity = "0";
};

int run_region(const RegionArgs& a) {
  const rrl::AnyModel model = rrl::AnyModel::from_json(load_json_file(a.model));
  const rrl::Complexity c = parse_complexity(a.complexity);
  const rrl::Region region = rrl::empirical_region(model.gap_learner(), model.data(), a.budget, c);
  std::cout << region.to_json().dump() << "\n";
  return 0;
}

struct NascArgs {
  int c = 2;
  int b = 1;
  double epsilon = 0.1;
  double delta = 0.05;
  int trials = 200;
  std::uint64_t seed = 0;
  int threads = 1;
  int m_override = -1;
  std::string csv;
};

int run_nasc(const NascArgs& a) {
  rrl::NascOptions opt;
  opt.c = a.c;
  opt.b = a.b;
  opt.epsilon = a.epsilon;
  opt.delta = a.delta;
  opt.trials = a.trials;
  opt.seed = a.seed;
  opt.threads = a.threads;
  if (a.m_override >= 0) opt.m_override = a.m_override;
  const rrl::NascReport report = rrl::nasc_experiment(opt);
  for (const rrl::NascTrial& t : report.trials) std::cout << report.trial_json(t).dump() << "\n";
  std::cout << report.summary_json().dump() << "\n";
  if (!a.csv.empty()) {
    std::ofstream out = open_for_write(a.csv);
    out << "trial,mass,success\n";
    for (const rrl::NascTrial& t : report.trials)
      out << t.index << "," << rrl::rational_to_double(t.mass) << "," << (t.success ? 1 : 0)
          << "\n";
  }
  return report.binomial_pass ? 0 : 1;
}

struct ReduceArgs {
  std::string graph;
  int k = 3;
  std::string output;
  std::string colors;
};

int run_reduce(const ReduceArgs& a) {
  std::ifstream in(a.graph);
  rrl::require(static_cast<bool>(in), ErrorCode::Parse, "cannot open " + a.graph);
  auto [edges, num_vertices] = rrl::read_edge_list(in);
  std::vector<int> coloring;
  if (!a.colors.empty()) {
    std::ifstream cf(a.colors);
    rrl::require(static_cast<bool>(cf), ErrorCode::Parse, "cannot open " + a.colors);
    int color = 0;
    while (cf >> color) coloring.push_back(color);
  } else {
    auto found = rrl::find_k_coloring(num_vertices, edges, a.k);
    rrl::require(found.has_value(), ErrorCode::BadColoring,
                 "found no proper " + std::to_string(a.k) + "-coloring; supply one via --colors");
    coloring = std::move(*found);
  }
  const rrl::LabeledDataset data = rrl::embed_k_regular(num_vertices, edges, a.k, coloring);
  std::ofstream out = open_for_write(a.output);
  data.write_csv(out);
  std::cout << nlohmann::json{{"vertices", num_vertices},
                              {"edges", edges.size()},
                              {"dimension", data.dimension()},
                              {"labels", data.alphabet()},
                              {"output", a.output}}
                   .dump()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified learning under data poisoning"};
  app.require_subcommand(1);

  TrainArgs train_args;
  CLI::App* train = app.add_subcommand("train", "train a model and write it as JSON");
  train->add_option("--measure", train_args.measure,
                    "alternations | local_margin | global_margin | interval_mass")
      ->required();
  train->add_option("--input", train_args.input, "training CSV (header x1,...,xd,label)")
      ->required();
  train->add_option("--output", train_args.output, "model JSON path")->required();
  train->add_option("--b-max", train_args.b_max,
                    "largest budget to prepare for (default: the full range)");
  train->add_option("--metric", train_args.metric, "l2 | l1 | linf (margin measures)");
  train->add_option("--labels", train_args.labels, "declare the alphabet explicitly, in order");

  CertifyArgs certify_args;
  CLI::App* certify = app.add_subcommand("certify", "certificate for one test point");
  certify->add_option("--model", certify_args.model, "model JSON path")->required();
  certify->add_option("--point", certify_args.point, "test point \"x1,...,xd\"")->required();
  certify->add_option("--budget", certify_args.budget, "poisoning budget b")->required();
  certify->add_flag("--oracle", certify_args.oracle,
                    "also run the brute-force oracle and report a match flag");

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "certificates for every budget 0..B");
  table->add_option("--model", table_args.model, "model JSON path")->required();
  table->add_option("--point", table_args.point, "test point \"x1,...,xd\"")->required();
  table->add_option("--budget-max", table_args.budget_max, "largest budget B")->required();

  RegionArgs region_args;
  CLI::App* region = app.add_subcommand("region", "region certifying a given complexity");
  region->add_option("--model", region_args.model, "model JSON path")->required();
  region->add_option("--budget", region_args.budget, "poisoning budget b")->required();
  region->add_option("--complexity", region_args.complexity, "target complexity (rational or inf)")
      ->required();

  NascArgs nasc_args;
  CLI::App* nasc = app.add_subcommand("nasc", "sample-complexity experiment (JSONL report)");
  nasc->add_option("--c", nasc_args.c, "target alternation count");
  nasc->add_option("--b", nasc_args.b, "poisoning budget");
  nasc->add_option("--epsilon", nasc_args.epsilon, "mass shortfall tolerance");
  nasc->add_option("--delta", nasc_args.delta, "per-trial failure probability");
  nasc->add_option("--trials", nasc_args.trials, "number of independent trials");
  nasc->add_option("--seed", nasc_args.seed, "root RNG seed");
  nasc->add_option("--threads", nasc_args.threads, "worker threads for the trials");
  nasc->add_option("--m-override", nasc_args.m_override,
                   "use this sample size instead of the bound (0 trains on nothing)");
  nasc->add_option("--csv", nasc_args.csv, "also write trial,mass,success rows here");

  ReduceArgs reduce_args;
  CLI::App* reduce =
      app.add_subcommand("reduce", "embed a k-regular k-colored graph as a labeled CSV");
  reduce->add_option("--graph", reduce_args.graph, "edge list file (\"u v\" per line)")->required();
  reduce->add_option("--k", reduce_args.k, "regularity degree / color count")->required();
  reduce->add_option("--output", reduce_args.output, "CSV path for the embedded points")
      ->required();
  reduce->add_option("--colors", reduce_args.colors,
                     "proper coloring, one color index per vertex line (default: search)");

  try {
    app.parse(argc, argv);
    if (train->parsed()) return run_train(train_args);
    if (certify->parsed()) return run_certify(certify_args);
    if (table->parsed()) return run_table(table_args);
    if (region->parsed()) return run_region(region_args);
    if (nasc->parsed()) return run_nasc(nasc_args);
    if (reduce->parsed()) return run_reduce(reduce_args);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const rrl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
