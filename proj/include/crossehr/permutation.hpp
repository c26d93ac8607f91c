#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace crossehr {

// A cycle written as a sequence of distinct positive integers.
using Cycle = std::vector<int>;

/// Rotates a nonempty cycle so its maximum element leads.
Cycle rotate_max_first(Cycle c);

// A permutation in canonical cycle form: every cycle has its largest element
// first and cycles are sorted by increasing leading element. The ground set is
// an arbitrary finite set of positive integers, so the type also covers the
// partial permutations used blockwise; the empty form is valid.
class CycleForm {
 public:
  CycleForm() = default;

  /// Canonicalizes arbitrary cycles. Throws std::invalid_argument on duplicate
  /// or nonpositive elements or an empty cycle.
  static CycleForm from_cycles(std::vector<Cycle> cycles);

  const std::vector<Cycle>& cycles() const { return cycles_; }
  bool empty() const { return cycles_.empty(); }
  std::size_t cycle_count() const { return cycles_.size(); }
  std::size_t element_count() const;
  std::vector<int> ground_set() const;  // ascending
  bool is_permutation_of(int m) const;  // ground set == {1..m}
  bool contains(int v) const;

  /// "(5 1 3)(7)"; the empty form renders as "".
  std::string str() const;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;

 private:
  std::vector<Cycle> cycles_;
};

/// Canonical form of an unordered cycle list.
inline CycleForm to_canonical(std::vector<Cycle> cycles) {
  return CycleForm::from_cycles(std::move(cycles));
}

/// Fundamental bijection: concatenate the canonical cycles and erase the
/// parentheses. The empty form maps to the empty word.
std::vector<int> fundamental(const CycleForm& p);

/// Inverse of the fundamental bijection: a new cycle starts at every
/// left-to-right maximum. Throws on repeated entries.
CycleForm inverse_fundamental(std::span<const int> word);

/// Parses "(5 1 3)(7)" into raw cycles (any order and rotation accepted).
std::vector<Cycle> parse_cycles(const std::string& text);

/// parse_cycles followed by canonicalization.
CycleForm parse_cycle_form(const std::string& text);

}  // namespace crossehr
