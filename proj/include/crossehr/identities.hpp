#pragma once

#include <optional>

#include "crossehr/colored.hpp"
#include "crossehr/ehrhart.hpp"
#include "crossehr/report.hpp"

namespace crossehr {

/// c_{d,k}(0) = d! and c_{d,k}(d) = 2^k, cross-checked against the
/// enumerated one-cycle and all-singleton counts when d <= 6.
VerifyReport check_endpoints(int d, int k);

/// Injection C_{d,k}(j) -> C_{d+1,k}(j): insert d+2 immediately before d+1 in
/// its cycle.
ColoredPermutation inject_d(const ColoredPermutation& p);

/// Injection C_{d,k}(j) -> C_{d,k+1}(j), k <= d-1. Case split on the cycle
/// containing k+1: untouched when it has a larger element; blue when odd and
/// all <= k+1; when even, its tail moves to the end of the (d+1)-cycle and the
/// rest turns red.
ColoredPermutation inject_k(const ColoredPermutation& p);

/// Number of elements of C_{d,k+1}(j) in which k+1 sits in a red cycle and the
/// element before d+1 in its cycle exceeds k+1; equals
/// c_{d,k+1}(j) - c_{d,k}(j).
Int k_difference_count(int d, int k, int j);

/// Sign-reversing involution on C_{d,k} for k < d: split the common cycle of
/// d and d+1 before d, or append the whole d-cycle to the (d+1)-cycle.
/// Changes j by exactly one; has no fixed points.
ColoredPermutation alt_involution_small_k(const ColoredPermutation& p);

/// Sign-reversing involution on the marked image of C_{d,d}: split the last
/// element of the (d+1)-cycle into a red singleton, or merge the red singleton
/// back. Throws std::domain_error on fixed points (d+1 fixed, no mark).
MarkedPermutation alt_involution_k_eq_d(const MarkedPermutation& m);

/// Sign of a marked object under the k = d alternating sum: positive iff the
/// cycle containing d+1 has odd length.
int marked_sign_k_eq_d(const MarkedPermutation& m);

/// sum_j (-1)^j c_{d,k}(j) = 0 for k < d; sum_j (-1)^(d-j) c_{d,d}(j) = d!.
/// Cross-checked through the matching involution when d <= 6.
VerifyReport verify_alternating_sums(int d, int k);

/// k_difference_count(d,k,j) == coeffs(d,k+1)(j) - coeffs(d,k)(j), for one j
/// or swept over all j.
VerifyReport verify_remark45(int d, int k, std::optional<int> j);

}  // namespace crossehr
