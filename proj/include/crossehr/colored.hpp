#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crossehr/numbers.hpp"
#include "crossehr/permutation.hpp"
#include "crossehr/words.hpp"

namespace crossehr {

enum class Color { None, Red, Blue };

struct ColoredCycle {
  Cycle elems;
  Color color = Color::None;
  friend bool operator==(const ColoredCycle&, const ColoredCycle&) = default;
};

// An element of C_{d,k}(j): a permutation of [d+1] in canonical cycle form
// where a cycle is colored (red or blue) iff all of its elements are <= k,
// and every colored cycle has odd length. The same type also represents the
// partial blocks of the main bijection: an arbitrary ground set without d+1,
// colored against the same global k.
class ColoredPermutation {
 public:
  /// Full element on {1..d+1}. Canonicalizes the cycles and checks every
  /// invariant; throws std::invalid_argument with a diagnostic.
  static ColoredPermutation validated(std::vector<ColoredCycle> raw, int d, int k);

  /// Partial block over an arbitrary ground set (k still global).
  static ColoredPermutation partial(std::vector<ColoredCycle> raw, int k);

  int d() const { return d_; }
  int k() const { return k_; }
  bool is_partial() const { return partial_; }
  /// Number of cycles minus one.
  int j() const { return static_cast<int>(cycles_.size()) - 1; }
  const std::vector<ColoredCycle>& cycles() const { return cycles_; }
  CycleForm base() const;

  /// "(4:r)(7 2 3:b)(14 11 5 12 13)"
  std::string str() const;

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  int d_ = -1;
  int k_ = 0;
  bool partial_ = false;
  std::vector<ColoredCycle> cycles_;
};

// Superset of C_{d,k} used in the sign-reversing involution: the coloring rule
// still applies but colored cycles may have any length. The sign is
// (-1)^(number of even red cycles).
class SignedColoredPermutation {
 public:
  static SignedColoredPermutation validated(std::vector<ColoredCycle> raw, int d, int k);

  int d() const { return d_; }
  int k() const { return k_; }
  int j() const { return static_cast<int>(cycles_.size()) - 1; }
  const std::vector<ColoredCycle>& cycles() const { return cycles_; }
  bool has_even_colored() const;
  /// Membership in C_{d,k}: no even colored cycle.
  bool in_C() const { return !has_even_colored(); }
  ColoredPermutation to_colored() const;
  std::string str() const;

  friend bool operator==(const SignedColoredPermutation&, const SignedColoredPermutation&) = default;

 private:
  int d_ = 0;
  int k_ = 0;
  std::vector<ColoredCycle> cycles_;
};

/// (-1)^(#even red cycles); +1 on all of C_{d,k}.
int sign(const SignedColoredPermutation& p);

/// Flips the color of the first even colored cycle in canonical order.
/// Throws std::domain_error when there is none (p is a fixed point, so
/// p is in C_{d,k}).
SignedColoredPermutation theorem_involution(const SignedColoredPermutation& p);

// Image of the odd-cycle merge bijection: an uncolored permutation where at
// most one singleton cycle (i) with i <= k is marked red. Partial blocks are
// supported the same way as for ColoredPermutation.
class MarkedPermutation {
 public:
  static MarkedPermutation validated(CycleForm base, std::optional<int> mark, int d, int k);
  static MarkedPermutation partial(CycleForm base, std::optional<int> mark, int k);

  int d() const { return d_; }
  int k() const { return k_; }
  bool is_partial() const { return partial_; }
  const CycleForm& base() const { return base_; }
  std::optional<int> mark() const { return mark_; }

  /// "(5 1)(6 3)(11:mark)(13 8 12 10)"
  std::string str() const;

  friend bool operator==(const MarkedPermutation&, const MarkedPermutation&) = default;

 private:
  int d_ = -1;
  int k_ = 0;
  bool partial_ = false;
  CycleForm base_;
  std::optional<int> mark_;
};

// The merge map: blue cycles are uncolored, red cycles are merged pairwise
// tail-to-tail in canonical order, and an odd straggler donates its last
// element as the red singleton mark.
MarkedPermutation to_marked(const ColoredPermutation& p);

// Exact inverse: even all-<=k cycles plus the optional mark are unwound from
// the right by the two-case tail rule, odd all-<=k cycles turn blue.
// Throws std::logic_error on states unreachable from valid inputs.
ColoredPermutation from_marked(const MarkedPermutation& m);

/// Block word of the n = 1 restriction: the fundamental image of the base
/// (minus the marked singleton) followed by one circle, filled with the mark
/// when present. Used blockwise, where d+1 is absent; when the cycle
/// containing d+1 exists the caller excludes it.
std::vector<Token> marked_to_word1(const MarkedPermutation& m);

/// Every element of C_{d,k}(j) exactly once, sorted lexicographically by the
/// serialized canonical form.
std::vector<ColoredPermutation> enumerate_C(int d, int k, int j);

/// C_{d,k} = union over j, same order within each j.
std::vector<ColoredPermutation> enumerate_C_all(int d, int k);

/// |C_{d,k}(j)| for j = 0..d in a single sweep.
std::vector<Int> count_C_by_j(int d, int k);

/// All marked permutations on {1..d+1} with marks <= k.
std::vector<MarkedPermutation> enumerate_marked(int d, int k);
Int count_marked(int d, int k);

// Signed enumeration of the full SignedColoredPermutation space, bucketed by
// j. signed_sum[j] equals |C_{d,k}(j)| once the involution cancels the rest.
struct SignedCensus {
  std::vector<Int> signed_sum;
  std::vector<Int> positives;
  std::vector<Int> negatives;
};

/// OpenMP-parallel census; signed_census_serial is the single-threaded
/// reference kept for testing. Both enumerate every coloring explicitly.
SignedCensus signed_census(int d, int k);
SignedCensus signed_census_serial(int d, int k);

/// Parses "(4:r)(7 2 3:b)(14 11 5 12 13)"; any cycle order/rotation.
std::vector<ColoredCycle> parse_colored_cycles(const std::string& text);

/// Parses "(5 1)(3:mark)(7)" into (cycles, mark).
std::pair<std::vector<Cycle>, std::optional<int>> parse_marked_cycles(const std::string& text);

std::string colored_cycles_str(const std::vector<ColoredCycle>& cycles);

}  // namespace crossehr
