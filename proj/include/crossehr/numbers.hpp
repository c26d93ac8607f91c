#pragma once

#include <gmpxx.h>

namespace crossehr {

// Exact arbitrary-precision arithmetic used everywhere; no floating point.
using Int = mpz_class;
using Rat = mpq_class;

/// m! for m >= 0.
Int factorial(int m);

/// C(m,r) for m >= 0; zero when r < 0 or r > m.
Int binomial(int m, int r);

/// C(m,r) for arbitrary-precision nonnegative m, via the falling-factorial
/// product. Needed where m grows with an evaluation point.
Int binomial_big(const Int& m, int r);

/// Signed Stirling number of the first kind s(m,i): the coefficient of x^i in
/// x(x-1)...(x-m+1). Conventions: s(0,0) = 1; zero for i < 0 or i > m.
Int stirling_first_signed(int m, int i);

/// |s(m,i)|: the number of permutations of [m] with i cycles.
Int stirling_first_unsigned(int m, int i);

/// Eulerian number A(d,i): permutations of [d] with i descents, d >= 1.
/// Zero outside 0 <= i <= d-1.
Int eulerian(int d, int i);

/// e(d,i,j) = sum_{l=0}^{d-i} |s(d-i+1, l+1)| * s(i, j-l).
/// The integer kernel turning h*-coefficients into d!-scaled Ehrhart
/// coefficients; may be negative. Requires d >= 1, 0 <= i <= d, 0 <= j <= d.
Int e_coefficient(int d, int i, int j);

}  // namespace crossehr
