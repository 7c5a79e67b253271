#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rrlearn/complexity.hpp"

namespace rrl {

// Pointwise guarantee: predicted label plus the complexity window (c_low, c_high).
// The prediction is trustworthy for any target of complexity < c_high; c_high <= c_low
// means the window is empty and the learner abstains.
struct Certificate {
  std::string label;
  Complexity c_low;
  Complexity c_high;
};

bool is_abstention(const Certificate& cert);

bool operator==(const Certificate& a, const Certificate& b);
inline bool operator!=(const Certificate& a, const Certificate& b) { return !(a == b); }

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

// Assembles (argmin label, smallest, second smallest) from per-label minimum
// complexities; argmin ties break toward the earlier alphabet entry.
Certificate make_certificate(const std::vector<std::string>& alphabet,
                             const std::vector<Complexity>& per_label);

}  // namespace rrl
