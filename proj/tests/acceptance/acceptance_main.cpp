// End-to-end acceptance gate: twelve checks, one line of output each.
// Run with no arguments for the full battery or with `--only N` for one check.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rrlearn/alternations.hpp"
#include "rrlearn/certificate.hpp"
#include "rrlearn/global_margin.hpp"
#include "rrlearn/interval_mass.hpp"
#include "rrlearn/local_margin.hpp"
#include "rrlearn/minplus.hpp"
#include "rrlearn/model_io.hpp"
#include "rrlearn/oracles.hpp"
#include "rrlearn/regions.hpp"

namespace {

using rrl::AlternationModel;
using rrl::BigRat;
using rrl::Certificate;
using rrl::Complexity;
using rrl::GraphLadder;
using rrl::IntervalMassModel;
using rrl::LabeledDataset;
using rrl::LabeledPoint;
using rrl::MarginModel;
using rrl::Metric;

struct Outcome {
  bool pass = true;
  long long checks = 0;
  std::string detail;  // first failure only; kept short

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    if (pass) detail = describe();
    pass = false;
  }
};

LabeledDataset mask_line(int n, unsigned mask) {
  std::vector<LabeledPoint> pts;
  for (int i = 0; i < n; ++i) {
    LabeledPoint p;
    p.x.push_back(BigRat(i + 1));
    p.label = (mask >> i) & 1u;
    pts.push_back(std::move(p));
  }
  return LabeledDataset(1, {"+", "-"}, std::move(pts));
}

std::string cert_str(const Certificate& c) {
  return "(" + c.label + ", " + c.c_low.str() + ", " + c.c_high.str() + ")";
}

bool close_or_equal(const Complexity& a, const Complexity& b) {
  if (a == b) return true;
  if (a.is_infinite() || b.is_infinite()) return false;
  double da = a.as_double(), db = b.as_double();
  return std::abs(da - db) <= 1e-9 * std::max({1.0, std::abs(da), std::abs(db)});
}

BigRat random_coord(std::mt19937& rng, int span = 12) {
  int num = static_cast<int>(rng() % static_cast<unsigned>(4 * span)) - 2 * span;
  int den = 1 + static_cast<int>(rng() % 2);
  return BigRat(num, den);
}

// ---------- 1. alternations vs oracle, exhaustively ----------

void run_alternations_oracle(Outcome& out) {
  for (int n = 1; n <= 10; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto data = mask_line(n, mask);
      auto model = AlternationModel::train(data);
      for (int g = 0; g <= n; ++g) {
        BigRat x(2 * g + 1, 2);
        for (int b = 0; b <= 3; ++b) {
          auto fast = model.certify(x, b);
          auto ref = rrl::brute_alternations(data, x, b);
          out.expect(fast == ref, [&] {
            return "n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                   " gap=" + std::to_string(g) + " b=" + std::to_string(b) + ": " +
                   cert_str(fast) + " vs oracle " + cert_str(ref);
          });
        }
      }
    }
  }
}

// ---------- 2. local margin vs oracle on random instances ----------

void run_local_margin_oracle(Outcome& out) {
  std::mt19937 rng(212121);
  const std::array<Metric, 3> metrics = {Metric::L2, Metric::L1, Metric::Linf};
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 50);
    int d = 1 + static_cast<int>(rng() % 3);
    std::vector<LabeledPoint> pts;
    for (int i = 0; i < n; ++i) {
      LabeledPoint p;
      for (int k = 0; k < d; ++k) p.x.push_back(random_coord(rng));
      p.label = static_cast<int>(rng() % 2);
      pts.push_back(std::move(p));
    }
    LabeledDataset data(d, {"+", "-"}, std::move(pts));
    std::vector<BigRat> x;
    for (int k = 0; k < d; ++k) x.push_back(random_coord(rng));
    Metric m = metrics[trial % metrics.size()];
    auto model = MarginModel::train(data, m);
    for (int b = 0; b <= 5; ++b) {
      auto fast = model.certify(x, b);
      auto ref = rrl::brute_local_margin(data, x, b, m);
      out.expect(fast == ref, [&] {
        return "trial " + std::to_string(trial) + " b=" + std::to_string(b) + ": " +
               cert_str(fast) + " vs oracle " + cert_str(ref);
      });
    }
  }
}

// ---------- 3 & 4. global margin instances, shared generator ----------

struct GlobalInstance {
  LabeledDataset data;
  std::vector<BigRat> x;
  Metric metric;
};

std::vector<GlobalInstance> global_margin_instances() {
  std::mt19937 rng(343434);
  std::vector<GlobalInstance> instances;
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    int d = 1 + static_cast<int>(rng() % 2);
    std::vector<LabeledPoint> pts;
    for (int i = 0; i < n; ++i) {
      LabeledPoint p;
      for (int k = 0; k < d; ++k) p.x.push_back(random_coord(rng, 6));
      p.label = static_cast<int>(rng() % 2);
      pts.push_back(std::move(p));
    }
    LabeledDataset data(d, {"+", "-"}, std::move(pts));
    std::vector<BigRat> x;
    for (int k = 0; k < d; ++k) x.push_back(random_coord(rng, 6));
    instances.push_back({std::move(data), std::move(x), trial % 2 ? Metric::L1 : Metric::L2});
  }
  return instances;
}

void run_global_margin_oracle(Outcome& out) {
  const auto instances = global_margin_instances();
  for (std::size_t t = 0; t < instances.size(); ++t) {
    const auto& inst = instances[t];
    auto ladder = GraphLadder::train(inst.data, 2, inst.metric);
    for (int b = 0; b <= std::min(2, inst.data.n()); ++b) {
      auto fast = ladder.certify(inst.data, inst.x, b);
      auto ref = rrl::brute_global_margin(inst.data, inst.x, b, inst.metric);
      bool ok = fast.label == ref.label &&
                rrl::is_abstention(fast) == rrl::is_abstention(ref) &&
                close_or_equal(fast.c_low, ref.c_low) && close_or_equal(fast.c_high, ref.c_high);
      out.expect(ok, [&] {
        return "instance " + std::to_string(t) + " b=" + std::to_string(b) + ": " +
               cert_str(fast) + " vs oracle " + cert_str(ref);
      });
    }
  }
}

void run_koenig_check(Outcome& out) {
  auto instances = global_margin_instances();
  for (std::size_t t = 0; t < instances.size(); ++t) {
    const auto& inst = instances[t];
    auto ladder = GraphLadder::train(inst.data, inst.data.n(), inst.metric);
    for (std::size_t r = 0; r < ladder.rungs().size(); ++r) {
      const auto& rung = ladder.rungs()[r];
      int cover = rrl::brute_min_vertex_cover(inst.data.n(), rung.edges);
      out.expect(rung.matching_size() == cover, [&] {
        return "instance " + std::to_string(t) + " rung " + std::to_string(r) + ": matching " +
               std::to_string(rung.matching_size()) + ", min cover " + std::to_string(cover);
      });
    }
  }
}

// ---------- 5. interval mass vs oracle, exhaustively ----------

void run_interval_mass_oracle(Outcome& out) {
  for (int n = 1; n <= 9; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto data = mask_line(n, mask);
      auto model = IntervalMassModel::train(data);
      for (int g = 0; g <= n; ++g) {
        BigRat x(2 * g + 1, 2);
        for (int b = 0; b <= 3; ++b) {
          auto fast = model.certify(x, b);
          auto ref = rrl::brute_interval_mass(data, x, b);
          out.expect(fast == ref, [&] {
            return "n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                   " gap=" + std::to_string(g) + " b=" + std::to_string(b) + ": " +
                   cert_str(fast) + " vs oracle " + cert_str(ref);
          });
        }
      }
    }
  }
}

// ---------- 6. soundness game ----------

// A certificate may never carry a wrong label while the true target's
// complexity sits below c_high. Each scenario: draw a target f*, a clean
// sample it labels, an attack within the budget, and a test point; then check.

BigRat ball_distance(const std::vector<BigRat>& a, const std::vector<BigRat>& b, Metric m) {
  return rrl::distance_measure(a, b, m);
}

void run_soundness_game(Outcome& out) {
  std::mt19937 rng(606060);
  long long exercised = 0;

  auto random_points = [&](int count, int d, auto&& label_of) {
    std::vector<LabeledPoint> pts;
    for (int i = 0; i < count; ++i) {
      LabeledPoint p;
      for (int k = 0; k < d; ++k) p.x.push_back(random_coord(rng));
      p.label = label_of(p.x);
      pts.push_back(std::move(p));
    }
    return pts;
  };
  auto junk_points = [&](int count, int d) {
    std::vector<LabeledPoint> pts;
    for (int i = 0; i < count; ++i) {
      LabeledPoint p;
      for (int k = 0; k < d; ++k) p.x.push_back(random_coord(rng));
      p.label = static_cast<int>(rng() % 2);
      pts.push_back(std::move(p));
    }
    return pts;
  };
  auto check = [&](const char* measure, int scenario, const Certificate& cert,
                   const Complexity& target_complexity, int truth) {
    if (rrl::is_abstention(cert)) return;
    if (!(target_complexity < cert.c_high)) return;
    ++exercised;
    std::vector<std::string> alphabet = {"+", "-"};
    out.expect(cert.label == alphabet[static_cast<std::size_t>(truth)], [&] {
      return std::string(measure) + " scenario " + std::to_string(scenario) + ": " +
             cert_str(cert) + " mislabels a target of complexity " + target_complexity.str();
    });
  };

  // alternations: piecewise target on [0,1], addition adversary
  for (int s = 0; s < 200; ++s) {
    int c = 1 + static_cast<int>(rng() % 4);
    std::set<BigRat> cuts;
    while (static_cast<int>(cuts.size()) < c)
      cuts.insert(BigRat(1 + static_cast<int>(rng() % 97), 100));
    rrl::PiecewiseTarget target(std::vector<BigRat>(cuts.begin(), cuts.end()),
                                static_cast<int>(rng() % 2));
    int m = 6 + static_cast<int>(rng() % 10);
    int b = static_cast<int>(rng() % 3);
    auto unit = [&] { return BigRat(static_cast<int>(rng() % 1001), 1000); };
    std::vector<LabeledPoint> pts;
    for (int i = 0; i < m; ++i) {
      LabeledPoint p;
      p.x.push_back(unit());
      p.label = target.label(p.x[0]);
      pts.push_back(std::move(p));
    }
    for (int i = 0; i < b; ++i) {  // adversary: up to b arbitrary extra points
      LabeledPoint p;
      p.x.push_back(unit());
      p.label = static_cast<int>(rng() % 2);
      pts.push_back(std::move(p));
    }
    LabeledDataset corrupted(1, {"+", "-"}, std::move(pts));
    auto model = AlternationModel::train(corrupted);
    BigRat x = unit();
    auto cert = model.certify(x, b);
    check("alternations", s, cert, Complexity(BigRat(target.alternations())), target.label(x));
  }

  // local margin: axis threshold target, addition adversary
  for (int s = 0; s < 200; ++s) {
    int d = 1 + static_cast<int>(rng() % 3);
    Metric metric = std::array{Metric::L2, Metric::L1, Metric::Linf}[static_cast<std::size_t>(
        rng() % 3)];
    BigRat t = random_coord(rng);
    auto label_of = [&](const std::vector<BigRat>& z) { return z[0] < t ? 0 : 1; };
    int m = 5 + static_cast<int>(rng() % 10);
    int b = static_cast<int>(rng() % 3);
    auto pts = random_points(m, d, label_of);
    auto junk = junk_points(b, d);
    pts.insert(pts.end(), junk.begin(), junk.end());
    LabeledDataset corrupted(d, {"+", "-"}, std::move(pts));
    std::vector<BigRat> x;
    for (int k = 0; k < d; ++k) x.push_back(random_coord(rng));
    if (x[0] == t) continue;  // target undecided margin: skip the degenerate draw
    auto model = MarginModel::train(corrupted, metric);
    auto cert = model.certify(x, b);
    // the target's local margin at x is its distance to the decision boundary
    std::vector<BigRat> foot = x;
    foot[0] = t;
    Complexity target_c =
        rrl::complexity_from_measure(BigRat(1), ball_distance(x, foot, metric), metric);
    check("local_margin", s, cert, target_c, label_of(x));
  }

  // global margin: axis threshold target, addition adversary
  for (int s = 0; s < 200; ++s) {
    int d = 1 + static_cast<int>(rng() % 2);
    Metric metric = (rng() % 2) ? Metric::L1 : Metric::L2;
    BigRat t = random_coord(rng);
    auto label_of = [&](const std::vector<BigRat>& z) { return z[0] < t ? 0 : 1; };
    int m = 4 + static_cast<int>(rng() % 6);
    int b = static_cast<int>(rng() % 3);
    auto clean = random_points(m, d, label_of);
    std::vector<BigRat> x;
    for (int k = 0; k < d; ++k) x.push_back(random_coord(rng));
    // the target's global margin: half the least opposite-pair distance over
    // the clean sample plus the labeled test point
    std::vector<LabeledPoint> config = clean;
    LabeledPoint tp;
    tp.x = x;
    tp.label = label_of(x);
    config.push_back(tp);
    bool conflict_free = true;
    BigRat min_measure;
    for (std::size_t i = 0; i < config.size(); ++i)
      for (std::size_t j = i + 1; j < config.size(); ++j) {
        if (config[i].label == config[j].label) continue;
        BigRat mdist = ball_distance(config[i].x, config[j].x, metric);
        if (conflict_free || mdist < min_measure) min_measure = mdist;
        conflict_free = false;
      }
    Complexity target_c = conflict_free
                              ? Complexity(BigRat(0))
                              : rrl::complexity_from_measure(BigRat(2), min_measure, metric);
    auto junk = junk_points(b, d);
    clean.insert(clean.end(), junk.begin(), junk.end());
    LabeledDataset corrupted(d, {"+", "-"}, std::move(clean));
    auto ladder = GraphLadder::train(corrupted, b, metric);
    auto cert = ladder.certify(corrupted, x, b);
    check("global_margin", s, cert, target_c, label_of(x));
  }

  // interval mass: threshold target, label-flip adversary
  for (int s = 0; s < 200; ++s) {
    BigRat t = random_coord(rng);
    auto label_of = [&](const std::vector<BigRat>& z) { return z[0] < t ? 0 : 1; };
    int m = 3 + static_cast<int>(rng() % 8);
    int b = static_cast<int>(rng() % 3);
    auto clean_pts = random_points(m, 1, label_of);
    LabeledDataset clean(1, {"+", "-"}, clean_pts);
    BigRat x = random_coord(rng);
    int truth = label_of({x});
    // score of the target's labeling with the test point joined
    std::vector<std::pair<BigRat, int>> seq;
    for (int i = 0; i < clean.n(); ++i) seq.push_back({clean.x1(i), clean.label(i)});
    std::size_t pos = 0;
    while (pos < seq.size() && seq[pos].first <= x) ++pos;
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(pos), {x, truth});
    BigRat score(0);
    std::size_t i = 0;
    while (i < seq.size()) {
      std::size_t j = i;
      while (j < seq.size() && seq[j].second == seq[i].second) ++j;
      score += BigRat(m) / BigRat(static_cast<int>(j - i) + 1);
      i = j;
    }
    Complexity target_c{score};
    // adversary: flip up to b labels of the clean sample
    auto flipped = clean_pts;
    for (int f = 0; f < b; ++f)
      flipped[rng() % flipped.size()].label ^= 1;
    LabeledDataset corrupted(1, {"+", "-"}, std::move(flipped));
    auto model = IntervalMassModel::train(corrupted);
    auto cert = model.certify(x, b);
    check("interval_mass", s, cert, target_c, truth);
  }

  out.expect(exercised > 100, [&] {
    return "soundness guarantee exercised only " + std::to_string(exercised) + " times";
  });
}

// ---------- 7. agreement-region equivalence ----------

void run_agreement_region(Outcome& out) {
  for (int n = 1; n <= 8; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto data = mask_line(n, mask);
      auto model = AlternationModel::train(data);
      for (int g = 0; g <= n; ++g) {
        // minAlt[t][m]: fewest alternations over point-label patterns with
        // exactly m disagreements, test slot fixed to t in gap g
        const int kInf = 1 << 20;
        int min_alt[2][11];
        for (int t = 0; t < 2; ++t)
          for (int m = 0; m <= n; ++m) min_alt[t][m] = kInf;
        for (unsigned pat = 0; pat < (1u << n); ++pat) {
          int mistakes = 0;
          for (int i = 0; i < n; ++i)
            if (((pat >> i) & 1u) != ((mask >> i) & 1u)) ++mistakes;
          for (int t = 0; t < 2; ++t) {
            int alt = 0, prev = -1;
            for (int slot = 0; slot <= n; ++slot) {
              if (slot == g) {
                if (prev >= 0 && prev != t) ++alt;
                prev = t;
              }
              if (slot < n) {
                int v = static_cast<int>((pat >> slot) & 1u);
                if (prev >= 0 && prev != v) ++alt;
                prev = v;
              }
            }
            min_alt[t][mistakes] = std::min(min_alt[t][mistakes], alt);
          }
        }
        BigRat x(2 * g + 1, 2);
        for (int b = 0; b <= 2; ++b) {
          auto cert = model.certify(x, b);
          for (int c = 0; c <= 4; ++c) {
            bool feasible[2];
            for (int t = 0; t < 2; ++t) {
              feasible[t] = false;
              for (int m = 0; m <= b && m <= n; ++m)
                if (min_alt[t][m] <= c) feasible[t] = true;
            }
            bool brute_member = feasible[0] != feasible[1];
            Complexity cc(c, 1);
            bool learner_member = cert.c_low <= cc && cc < cert.c_high;
            out.expect(brute_member == learner_member, [&] {
              return "n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                     " gap=" + std::to_string(g) + " b=" + std::to_string(b) +
                     " c=" + std::to_string(c) + ": learner " +
                     (learner_member ? "in" : "out") + ", agreement region " +
                     (brute_member ? "in" : "out");
            });
          }
        }
      }
    }
  }
}

// ---------- 8. budget monotonicity ----------

void run_budget_monotonicity(Outcome& out) {
  auto check_series = [&](const char* tag, const std::vector<Certificate>& certs) {
    for (std::size_t b = 1; b < certs.size(); ++b) {
      bool ok = certs[b].c_low <= certs[b - 1].c_low && certs[b].c_high <= certs[b - 1].c_high;
      out.expect(ok, [&] {
        return std::string(tag) + ": " + cert_str(certs[b - 1]) + " then " + cert_str(certs[b]) +
               " at b=" + std::to_string(b);
      });
    }
  };

  // alternations instances (as in the exhaustive battery)
  for (int n = 1; n <= 10; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto model = AlternationModel::train(mask_line(n, mask));
      for (int g = 0; g <= n; ++g)
        check_series("alternations", model.certify_all_budgets(BigRat(2 * g + 1, 2),
                                                               std::min(3, n)));
    }

  // local margin instances
  {
    std::mt19937 rng(212121);
    const std::array<Metric, 3> metrics = {Metric::L2, Metric::L1, Metric::Linf};
    for (int trial = 0; trial < 1000; ++trial) {
      int n = 1 + static_cast<int>(rng() % 50);
      int d = 1 + static_cast<int>(rng() % 3);
      std::vector<LabeledPoint> pts;
      for (int i = 0; i < n; ++i) {
        LabeledPoint p;
        for (int k = 0; k < d; ++k) p.x.push_back(random_coord(rng));
        p.label = static_cast<int>(rng() % 2);
        pts.push_back(std::move(p));
      }
      LabeledDataset data(d, {"+", "-"}, std::move(pts));
      std::vector<BigRat> x;
      for (int k = 0; k < d; ++k) x.push_back(random_coord(rng));
      auto model = MarginModel::train(data, metrics[trial % metrics.size()]);
      std::vector<Certificate> certs;
      for (int b = 0; b <= 5; ++b) certs.push_back(model.certify(x, b));
      check_series("local_margin", certs);
    }
  }

  // global margin instances
  for (const auto& inst : global_margin_instances()) {
    auto ladder = GraphLadder::train(inst.data, 2, inst.metric);
    std::vector<Certificate> certs;
    for (int b = 0; b <= std::min(2, inst.data.n()); ++b)
      certs.push_back(ladder.certify(inst.data, inst.x, b));
    check_series("global_margin", certs);
  }

  // interval mass instances
  for (int n = 1; n <= 9; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto model = IntervalMassModel::train(mask_line(n, mask));
      for (int g = 0; g <= n; ++g) {
        std::vector<Certificate> certs;
        for (int b = 0; b <= 3; ++b) certs.push_back(model.certify(BigRat(2 * g + 1, 2), b));
        check_series("interval_mass", certs);
      }
    }
}

// ---------- 9. min-plus reduction ----------

void run_minplus_reduction(Outcome& out) {
  std::mt19937 rng(909090);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 64);
    rrl::CostSequence a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (auto* seq : {&a, &b}) {
      rrl::Cost level = static_cast<rrl::Cost>(rng() % 5);
      for (int i = n - 1; i >= 0; --i) {
        (*seq)[static_cast<std::size_t>(i)] = level;
        level += static_cast<rrl::Cost>(rng() % 4);
      }
      if (rng() % 5 == 0) {
        int infs = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        for (int i = 0; i < infs; ++i) (*seq)[static_cast<std::size_t>(i)] = rrl::kInfCost;
      }
    }
    auto reduced = rrl::minplus_monotone_decreasing(a, b);
    auto naive = rrl::minplus_naive(a, b);
    out.expect(reduced == naive, [&] { return "sequence trial " + std::to_string(trial); });
  }

  std::mt19937 rng2(919191);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng2() % 12);
    unsigned mask = rng2() % (1u << n);
    auto model = AlternationModel::train(mask_line(n, mask));
    BigRat x(static_cast<int>(rng2() % static_cast<unsigned>(2 * n + 1)), 2);
    auto rows = model.certify_all_budgets(x, n);
    for (int b = 0; b <= n; ++b) {
      auto single = model.certify(x, b);
      out.expect(rows[static_cast<std::size_t>(b)] == single, [&] {
        return "alternations trial " + std::to_string(trial) + " b=" + std::to_string(b) + ": " +
               cert_str(rows[static_cast<std::size_t>(b)]) + " vs " + cert_str(single);
      });
    }
  }
}

// ---------- 10. sample-complexity experiment ----------

void run_sample_complexity(Outcome& out) {
  rrl::NascOptions opt;
  opt.c = 2;
  opt.b = 1;
  opt.epsilon = 0.1;
  opt.delta = 0.05;
  opt.trials = 200;
  opt.seed = 20260814;
  opt.threads = 4;
  auto report = rrl::nasc_experiment(opt);
  out.expect(report.m == 1563, [&] { return "m = " + std::to_string(report.m); });
  out.expect(report.binomial_pass, [&] {
    return std::to_string(report.successes) + "/200 trials reached mass 0.9; needed " +
           std::to_string(report.binomial_critical);
  });
}

// ---------- 11. edge-space embedding ----------

// Pinned incidence rows for the 10-vertex pentagonal prism (15 edges), kept
// as a fixture so the embedding's output stays stable across revisions.
const std::array<std::array<int, 15>, 10> kPinnedVectors = {{
    {1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0},
}};

std::set<std::pair<int, int>> edges_of_incidence(
    const std::vector<std::vector<int>>& rows, int num_edges, Outcome& out) {
  std::set<std::pair<int, int>> edges;
  for (int col = 0; col < num_edges; ++col) {
    std::vector<int> ends;
    for (std::size_t v = 0; v < rows.size(); ++v)
      if (rows[v][static_cast<std::size_t>(col)] == 1) ends.push_back(static_cast<int>(v));
    out.expect(ends.size() == 2, [&] {
      return "column " + std::to_string(col) + " touches " + std::to_string(ends.size()) +
             " vertices";
    });
    if (ends.size() == 2) edges.insert({ends[0], ends[1]});
  }
  return edges;
}

void run_embedding_check(Outcome& out) {
  // the named graph: outer 5-cycle, spokes, inner pentagram
  std::vector<std::pair<int, int>> petersen = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                               {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                               {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
  auto coloring = rrl::find_k_coloring(10, petersen, 3);
  out.expect(coloring.has_value(), [] { return std::string("no 3-coloring found"); });
  if (!coloring) return;
  auto embedded = rrl::embed_k_regular(10, petersen, 3, *coloring);
  out.expect(embedded.dimension() == 15 && embedded.n() == 10,
             [&] { return "embedding shape " + std::to_string(embedded.dimension()); });

  std::set<std::pair<int, int>> edge_set;
  for (auto [u, v] : petersen) edge_set.insert({std::min(u, v), std::max(u, v)});
  auto hamming = [&](int i, int j) {
    return rrl::distance_measure(embedded.point(i).x, embedded.point(j).x, Metric::L1);
  };
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      BigRat expect(edge_set.count({i, j}) ? 4 : 6);
      out.expect(hamming(i, j) == expect, [&] {
        return "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") at distance " +
               rrl::rational_to_string(hamming(i, j));
      });
    }
  // the two named vertex pairs (1-indexed 6,9 adjacent and 6,10 not)
  out.expect(hamming(5, 8) == BigRat(4), [&] { return std::string("v6,v9 distance"); });
  out.expect(hamming(5, 9) == BigRat(6), [&] { return std::string("v6,v10 distance"); });

  // the pinned vector list: rebuild its graph from its own columns, re-embed,
  // and require the same incidence rows up to edge ordering
  std::vector<std::vector<int>> pinned_rows;
  for (const auto& row : kPinnedVectors)
    pinned_rows.emplace_back(row.begin(), row.end());
  auto pinned_edges = edges_of_incidence(pinned_rows, 15, out);
  out.expect(pinned_edges.size() == 15,
             [&] { return std::to_string(pinned_edges.size()) + " distinct pinned edges"; });
  std::vector<std::pair<int, int>> pinned(pinned_edges.begin(), pinned_edges.end());
  auto pinned_coloring = rrl::find_k_coloring(10, pinned, 3);
  out.expect(pinned_coloring.has_value(),
             [] { return std::string("pinned graph has no 3-coloring"); });
  if (!pinned_coloring) return;
  auto re_embedded = rrl::embed_k_regular(10, pinned, 3, *pinned_coloring);
  std::vector<std::vector<int>> re_rows(10, std::vector<int>(15, 0));
  for (int v = 0; v < 10; ++v)
    for (int col = 0; col < 15; ++col)
      re_rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(col)] =
          re_embedded.point(v).x[static_cast<std::size_t>(col)] == BigRat(1) ? 1 : 0;
  auto re_edges = edges_of_incidence(re_rows, 15, out);
  out.expect(re_edges == pinned_edges, [] {
    return std::string("re-embedded incidence columns do not match the pinned vectors");
  });
}

// ---------- 12. persistence round trip ----------

void run_persistence(Outcome& out) {
  std::mt19937 rng(121212);
  for (auto kind : {rrl::ModelKind::Alternations, rrl::ModelKind::LocalMargin,
                    rrl::ModelKind::GlobalMargin, rrl::ModelKind::IntervalMass}) {
    bool one_dim = kind == rrl::ModelKind::Alternations || kind == rrl::ModelKind::IntervalMass;
    int d = one_dim ? 1 : 1 + static_cast<int>(rng() % 2);
    int n = 3 + static_cast<int>(rng() % 8);
    std::vector<LabeledPoint> pts;
    for (int i = 0; i < n; ++i) {
      LabeledPoint p;
      for (int k = 0; k < d; ++k) p.x.push_back(random_coord(rng));
      p.label = static_cast<int>(rng() % 2);
      pts.push_back(std::move(p));
    }
    LabeledDataset data(d, {"+", "-"}, std::move(pts));
    Metric metric = (rng() % 2) ? Metric::L1 : Metric::L2;
    auto model = rrl::AnyModel::train(kind, data, -1, metric);
    auto stored = model.to_json().dump();
    auto loaded = rrl::AnyModel::from_json(nlohmann::json::parse(stored));
    out.expect(loaded.to_json().dump() == stored,
               [&] { return rrl::model_kind_name(kind) + ": reserialization differs"; });
    for (int q = 0; q < 100; ++q) {
      std::vector<BigRat> x;
      for (int k = 0; k < d; ++k) x.push_back(random_coord(rng));
      int b = static_cast<int>(rng() % 3);
      auto a = rrl::certificate_to_json(model.certify(x, b)).dump();
      auto c = rrl::certificate_to_json(loaded.certify(x, b)).dump();
      out.expect(a == c, [&] {
        return rrl::model_kind_name(kind) + " query " + std::to_string(q) + ": " + a + " vs " + c;
      });
    }
  }
}

// ---------- harness ----------

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 = none
  void (*run)(Outcome&);
};

const Criterion kCriteria[] = {
    {1, "alternations certificates match the exhaustive oracle", 60.0, run_alternations_oracle},
    {2, "local margin certificates match the oracle on random instances", 30.0,
     run_local_margin_oracle},
    {3, "global margin certificates match the exhaustive-removal oracle", 120.0,
     run_global_margin_oracle},
    {4, "ladder matchings equal brute-force minimum vertex covers", 0.0, run_koenig_check},
    {5, "interval mass certificates match the exhaustive-flip oracle", 120.0,
     run_interval_mass_oracle},
    {6, "no certificate mislabels a target of complexity below c_high", 0.0, run_soundness_game},
    {7, "certified membership equals the brute-force agreement region", 0.0, run_agreement_region},
    {8, "certificate bounds are non-increasing in the budget", 0.0, run_budget_monotonicity},
    {9, "min-plus reduction and the convolution certify path are exact", 0.0,
     run_minplus_reduction},
    {10, "region mass meets the sample-complexity guarantee", 120.0, run_sample_complexity},
    {11, "edge-space embedding reproduces the pinned incidence vectors", 0.0,
     run_embedding_check},
    {12, "persisted models certify byte-identically to in-memory ones", 0.0, run_persistence},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--only N]\n";
      return 2;
    }
  }

  bool all_pass = true;
  for (const Criterion& crit : kCriteria) {
    if (only != 0 && crit.id != only) continue;
    Outcome outcome;
    auto start = std::chrono::steady_clock::now();
    try {
      crit.run(outcome);
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && crit.time_limit_s > 0 && elapsed >= crit.time_limit_s) {
      outcome.pass = false;
      outcome.detail = "exceeded the " + std::to_string(crit.time_limit_s) + "s budget";
    }
    std::ostringstream line;
    line << (outcome.pass ? "[PASS] " : "[FAIL] ") << crit.id << ". " << crit.name << " ("
         << std::fixed << std::setprecision(1) << elapsed << "s)";
    std::cout << line.str() << "\n";
    if (!outcome.pass) {
      if (!outcome.detail.empty()) std::cout << "       " << outcome.detail << "\n";
      all_pass = false;
    }
  }
  return all_pass ? 0 : 1;
}
