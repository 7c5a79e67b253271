#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrlearn/dataset.hpp"
#include "rrlearn/errors.hpp"

namespace testutil {

// "+-+" -> points at 1,2,3 with those labels over the {+,-} alphabet.
inline rrl::LabeledDataset line(const std::string& labels) {
  std::vector<rrl::LabeledPoint> pts;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    rrl::LabeledPoint p;
    p.x.push_back(rrl::BigRat(static_cast<int>(i) + 1));
    p.label = labels[i] == '+' ? 0 : 1;
    pts.push_back(std::move(p));
  }
  return rrl::LabeledDataset(1, {"+", "-"}, std::move(pts));
}

inline rrl::LabeledDataset line_at(const std::string& labels, const std::vector<rrl::BigRat>& xs) {
  std::vector<rrl::LabeledPoint> pts;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    rrl::LabeledPoint p;
    p.x.push_back(xs.at(i));
    p.label = labels[i] == '+' ? 0 : 1;
    pts.push_back(std::move(p));
  }
  return rrl::LabeledDataset(1, {"+", "-"}, std::move(pts));
}

inline rrl::LabeledDataset points2d(const std::vector<std::pair<std::pair<int, int>, char>>& raw) {
  std::vector<rrl::LabeledPoint> pts;
  for (const auto& [xy, lab] : raw) {
    rrl::LabeledPoint p;
    p.x = {rrl::BigRat(xy.first), rrl::BigRat(xy.second)};
    p.label = lab == '+' ? 0 : 1;
    pts.push_back(std::move(p));
  }
  return rrl::LabeledDataset(2, {"+", "-"}, std::move(pts));
}

// Runs f, expecting it to throw rrl::Error; returns the code.
template <typename F>
rrl::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const rrl::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an rrl::Error, none was thrown");
}

// Random label string over {+,-}.
inline std::string random_labels(std::mt19937& rng, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += (rng() & 1) ? '+' : '-';
  return s;
}

}  // namespace testutil
