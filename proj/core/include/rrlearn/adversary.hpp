#pragma once

namespace rrl {

// ADDITION: the observed set S' was produced by adding at most b points to a clean
// set (equivalently, any <= b points of S' may be disregarded as planted).
// LABEL_FLIP: at most b labels of S' were altered in place (Hamming corruption);
// used by the interval-mass measure only.
enum class AdversaryKind { Addition, LabelFlip };

struct AdversaryModel {
  AdversaryKind kind = AdversaryKind::Addition;
  int budget = 0;
};

}  // namespace rrl
