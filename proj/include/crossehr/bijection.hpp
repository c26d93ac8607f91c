#pragma once

#include <vector>

#include "crossehr/colored.hpp"
#include "crossehr/words.hpp"

namespace crossehr {

// Element of [n]^j: targets[i-1] is the circle receiving label i, i.e. the
// circle the (i+1 = i-th labeled) cycle is placed before. j = 0 gives the
// unique empty assignment, also when n = 0.
struct LabelAssignment {
  std::vector<int> targets;
  friend bool operator==(const LabelAssignment&, const LabelAssignment&) = default;
};

void validate_labels(const LabelAssignment& labels, int j, int n);

/// The main bijection: sends (p, labels) with p in C_{d,k}(j) and labels in
/// [n]^j to a word in W_{d,k}(n). Blocks sharing a circle enter as one partial
/// permutation in canonical order; the cycle containing d+1 flattens to the
/// suffix with d+1 removed.
CircledWord bijection_forward(const ColoredPermutation& p, const LabelAssignment& labels, int n);

struct BijectionPair {
  ColoredPermutation perm;
  LabelAssignment labels;
};

/// Exact inverse: the suffix after the last circle, prefixed by d+1, recovers
/// the last cycle; each of the n circle-terminated blocks unwinds through the
/// marked-permutation bijection; labels record which block each cycle of the
/// composed permutation came from.
BijectionPair bijection_inverse(const CircledWord& w);

}  // namespace crossehr
