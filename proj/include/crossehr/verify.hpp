#pragma once

#include "crossehr/report.hpp"

namespace crossehr {

/// coeffs(d,k)(j) == |C_{d,k}(j)| for every j, and the signed census of the
/// colored superset collapses to the same numbers. Guarded to at most 10^7
/// enumerated colorings.
VerifyReport verify_theorem(int d, int k);

/// count_W(d,k,n) == d! P_{d,k}(n), the counting form of the main equation.
VerifyReport verify_words_count(int d, int k, int n);

/// count_lattice_points(d,k,n) == P(d,k,n), the Ehrhart reading.
VerifyReport verify_lattice(int d, int k, int n);

}  // namespace crossehr
