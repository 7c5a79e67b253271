#include "rrlearn/metric.hpp"

#include <cmath>

#include "rrlearn/errors.hpp"

namespace rrl {

Metric metric_from_string(const std::string& name) {
  if (name == "l2") return Metric::L2;
  if (name == "l1") return Metric::L1;
  if (name == "linf") return Metric::Linf;
  fail(ErrorCode::Parse, "unknown metric '" + name + "' (want l2, l1 or linf)");
}

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::L2: return "l2";
    case Metric::L1: return "l1";
    case Metric::Linf: return "linf";
  }
  fail(ErrorCode::Internal, "bad metric enum");
}

bool measure_is_squared(Metric m) { return m == Metric::L2; }

BigRat distance_measure(const std::vector<BigRat>& a, const std::vector<BigRat>& b, Metric m) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "distance: dimension mismatch");
  BigRat acc = 0;
  switch (m) {
    case Metric::L2:
      for (std::size_t i = 0; i < a.size(); ++i) {
        BigRat d = a[i] - b[i];
        acc += d * d;
      }
      return acc;
    case Metric::L1:
      for (std::size_t i = 0; i < a.size(); ++i) {
        BigRat d = a[i] - b[i];
        acc += (d < 0) ? BigRat(-d) : d;
      }
      return acc;
    case Metric::Linf:
      for (std::size_t i = 0; i < a.size(); ++i) {
        BigRat d = a[i] - b[i];
        if (d < 0) d = -d;
        if (d > acc) acc = d;
      }
      return acc;
  }
  fail(ErrorCode::Internal, "bad metric enum");
}

Complexity complexity_from_measure(const BigRat& scale, const BigRat& measure, Metric m) {
  require(measure >= 0, ErrorCode::Internal, "negative distance measure");
  if (measure == 0) return Complexity::infinity();
  if (m != Metric::L2) return Complexity(BigRat(scale / measure));
  BigRat root;
  if (exact_sqrt(measure, &root)) return Complexity(BigRat(scale / root));
  double approx = rational_to_double(scale) / std::sqrt(rational_to_double(measure));
  return Complexity(rational_from_double(approx));
}

}  // namespace rrl
